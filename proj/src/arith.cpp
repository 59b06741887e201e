#include "balancing/arith.hpp"

#include <numeric>

namespace balancing {

Rat make_rat(const ArbInt& num, const ArbInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

ArbInt require_integral(const Rat& value, const std::string& what) {
  if (value.get_den() != 1) {
    throw IntegralityViolation(what + " is not integral: " + value.get_str());
  }
  return value.get_num();
}

ArbInt binom(std::int64_t m, std::int64_t k) {
  if (k < 0) throw std::domain_error("binom: negative lower argument " + std::to_string(k));
  ArbInt top(static_cast<long>(m));
  ArbInt out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

ArbInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  ArbInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

ArbInt multinomial(std::int64_t n, std::span<const std::int64_t> parts) {
  if (n < 0) throw std::domain_error("multinomial: negative total");
  std::int64_t sum = 0;
  for (auto k : parts) {
    if (k < 0) throw std::domain_error("multinomial: negative part");
    sum += k;
  }
  if (sum != n) {
    throw std::domain_error("multinomial: parts sum to " + std::to_string(sum) +
                            ", expected " + std::to_string(n));
  }
  ArbInt out = factorial(n);
  for (auto k : parts) out /= factorial(k);
  return out;
}

ArbInt int_pow(const ArbInt& base, std::uint64_t e) {
  ArbInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

std::string to_decimal(const ArbInt& value) { return value.get_str(10); }

ArbInt from_decimal(const std::string& text) {
  ArbInt out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return out;
}

ArbInt FactorialTable::get(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  std::lock_guard lock(mutex_);
  while (static_cast<std::int64_t>(values_.size()) <= n) {
    values_.push_back(values_.back() * static_cast<unsigned long>(values_.size()));
  }
  return values_[static_cast<std::size_t>(n)];
}

}  // namespace balancing
