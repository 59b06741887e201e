#pragma once

// Exact arithmetic layer: unbounded integers, canonical rationals, and the
// combinatorial primitives every closed form is built from.

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace balancing {

using ArbInt = mpz_class;
using Rat = mpq_class;

/// Thrown when a closed form that must be an integer on its domain is not.
/// Indicates a bug (or a false identity), never a user error.
class IntegralityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Builds num/den in canonical form (reduced, positive denominator).
Rat make_rat(const ArbInt& num, const ArbInt& den);

/// Returns the numerator of `value`, throwing IntegralityViolation if the
/// denominator is not 1. `what` names the computation for the diagnostic.
ArbInt require_integral(const Rat& value, const std::string& what);

/// Generalized binomial coefficient m(m-1)...(m-k+1)/k!, total in m.
/// Zero when 0 <= m < k. Throws std::domain_error for k < 0.
ArbInt binom(std::int64_t m, std::int64_t k);

/// n! / (k_1! ... k_r!). Throws std::domain_error if the parts do not sum to n
/// or any argument is negative.
ArbInt multinomial(std::int64_t n, std::span<const std::int64_t> parts);

/// base^e with 0^0 = 1.
ArbInt int_pow(const ArbInt& base, std::uint64_t e);

ArbInt factorial(std::int64_t n);

inline int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

std::string to_decimal(const ArbInt& value);
ArbInt from_decimal(const std::string& text);

/// Grow-only factorial memo; all access is serialized.
class FactorialTable {
 public:
  ArbInt get(std::int64_t n);

 private:
  std::mutex mutex_;
  std::vector<ArbInt> values_{ArbInt(1)};
};

}  // namespace balancing
