#include "balancing/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "balancing/series.hpp"

namespace balancing {
namespace {

std::string at(std::string_view what, std::int64_t n) {
  return std::string(what) + " at n=" + std::to_string(n);
}

void require_domain(bool ok, std::string_view what, std::int64_t r, std::int64_t n) {
  if (!ok) {
    throw std::domain_error(std::string(what) + ": (r=" + std::to_string(r) + ", n=" + std::to_string(n) +
                            ") is outside the identity's domain");
  }
}

void require_balancing(const Workspace& ws, std::string_view what) {
  if (!ws.is_balancing()) throw std::invalid_argument(std::string(what) + " requires balancing parameters (6,-1)");
}

void require_fibonacci(const Workspace& ws, std::string_view what) {
  if (ws.params() != SeqParams::fibonacci()) {
    throw std::invalid_argument(std::string(what) + " requires Fibonacci parameters (1,1)");
  }
}

Rat q(const ArbInt& x) { return Rat(x); }

ArbInt pow_i(std::int64_t base, std::int64_t e) { return int_pow(ArbInt(static_cast<long>(base)), static_cast<std::uint64_t>(e)); }

// sum_k binom(n,k) (shift)^{n-k} (scale)^k seq_k
Rat shifted_binomial_sum(std::int64_t n, std::int64_t shift, std::int64_t scale,
                         const std::function<ArbInt(std::int64_t)>& seq) {
  Rat sum(0);
  for (std::int64_t k = 0; k <= n; ++k) {
    sum += q(binom(n, k) * pow_i(shift, n - k) * pow_i(scale, k) * seq(k));
  }
  return sum;
}

}  // namespace

// ---- Workspace -------------------------------------------------------------

Workspace::Workspace(SeqParams params) : cache_(params) {}

ArbInt Workspace::c(std::int64_t n) {
  require_balancing(*this, "Lucas-balancing C_n");
  return require_integral(make_rat(v(n), 2), at("C_n", n));
}

std::vector<ArbInt> Workspace::base_values(Table kind, std::int64_t n) {
  switch (kind) {
    case Table::kPlain:
    case Table::kBinomU: return cache_.u_prefix(n);
    case Table::kBinomV: return cache_.v_prefix(n);
    case Table::kBinomC: {
      require_balancing(*this, "Lucas-balancing convolution");
      auto values = cache_.v_prefix(n);
      for (auto& x : values) x = require_integral(make_rat(x, 2), "C_k");
      return values;
    }
  }
  return {};
}

const std::vector<ArbInt>& Workspace::table(Table kind, std::int64_t r, std::int64_t n) {
  if (r < 1) throw std::domain_error("convolution order r must be >= 1");
  auto& entry = tables_[{kind, r}];
  if (static_cast<std::int64_t>(entry.size()) > n) return entry;

  const std::int64_t n_max = std::max<std::int64_t>({n, 2 * static_cast<std::int64_t>(entry.size()), 16});
  const auto values = base_values(kind, n_max);
  if (kind == Table::kPlain) {
    const auto power = series_pow(Series<ArbInt>(values), r);
    entry.assign(power.coeffs().begin(), power.coeffs().begin() + n_max + 1);
    return entry;
  }
  // Iterated binomial convolution: (f * g)_m = sum_k binom(m,k) f_k g_{m-k}.
  std::vector<ArbInt> acc = values;
  for (std::int64_t step = 1; step < r; ++step) {
    std::vector<ArbInt> next(acc.size());
    for (std::int64_t m = 0; m <= n_max; ++m) {
      ArbInt sum(0);
      for (std::int64_t k = 0; k <= m; ++k) {
        sum += binom(m, k) * acc[static_cast<std::size_t>(k)] * values[static_cast<std::size_t>(m - k)];
      }
      next[static_cast<std::size_t>(m)] = std::move(sum);
    }
    acc = std::move(next);
  }
  entry = std::move(acc);
  return entry;
}

ArbInt Workspace::conv_power(std::int64_t r, std::int64_t n) {
  if (n < 0) return 0;
  return table(Table::kPlain, r, n)[static_cast<std::size_t>(n)];
}

ArbInt Workspace::binom_conv_u(std::int64_t r, std::int64_t n) {
  if (n < 0) return 0;
  return table(Table::kBinomU, r, n)[static_cast<std::size_t>(n)];
}

ArbInt Workspace::binom_conv_v(std::int64_t r, std::int64_t n) {
  if (n < 0) return 0;
  return table(Table::kBinomV, r, n)[static_cast<std::size_t>(n)];
}

ArbInt Workspace::binom_conv_c(std::int64_t r, std::int64_t n) {
  if (n < 0) return 0;
  return table(Table::kBinomC, r, n)[static_cast<std::size_t>(n)];
}

// ---- oracles ---------------------------------------------------------------

ArbInt conv_power(const SeqParams& params, std::int64_t r, std::int64_t n) {
  Workspace ws(params);
  return ws.conv_power(r, n);
}

namespace {

void enumerate(std::span<const ArbInt> values, std::int64_t parts_left, std::int64_t remaining,
               std::int64_t min_part, bool weighted, FactorialTable& fact, const ArbInt& product,
               const ArbInt& denom, ArbInt& total) {
  if (parts_left == 0) {
    if (remaining == 0) total += weighted ? ArbInt(product / denom) : product;
    return;
  }
  for (std::int64_t k = min_part; k <= remaining; ++k) {
    const ArbInt& x = values[static_cast<std::size_t>(k)];
    if (x == 0) continue;
    enumerate(values, parts_left - 1, remaining - k, min_part, weighted, fact, product * x,
              weighted ? ArbInt(denom * fact.get(k)) : denom, total);
  }
}

}  // namespace

ArbInt enumerate_convolution(std::span<const ArbInt> values, std::int64_t r, std::int64_t n,
                             std::int64_t min_part, bool multinomial_weight) {
  if (r < 1) throw std::domain_error("convolution order r must be >= 1");
  if (n < 0) return 0;
  if (static_cast<std::int64_t>(values.size()) <= n) throw std::domain_error("not enough sequence values");
  FactorialTable fact;
  ArbInt total(0);
  const ArbInt start = multinomial_weight ? fact.get(n) : ArbInt(1);
  enumerate(values, r, n, min_part, multinomial_weight, fact, start, ArbInt(1), total);
  return total;
}

ArbInt telescoping_sum(Workspace& ws, std::int64_t n) {
  require_balancing(ws, "telescoping sum");
  ArbInt sum(0);
  for (std::int64_t j = 1; j <= n; ++j) sum += ws.u(j) * ws.u(n - j + 1) - ws.u(j - 1) * ws.u(n - j);
  return sum;
}

ArbInt alt_weighted_conv(Workspace& ws, std::int64_t r, std::int64_t n) {
  require_balancing(ws, "alternating weighted convolution");
  if (r < 2) throw std::domain_error("alternating convolution needs r >= 2");
  ArbInt sum(0);
  for (std::int64_t l = 0; l <= 2 * r - 3; ++l) {
    sum += sign_pow(l) * binom(2 * r - 3, l) * ws.conv_power(r, n - 2 * l);
  }
  return sum;
}

ArbInt alt_weighted_conv(std::int64_t r, std::int64_t n) {
  Workspace ws(SeqParams::balancing());
  return alt_weighted_conv(ws, r, n);
}

ArbInt binom_conv_u(const SeqParams& params, std::int64_t r, std::int64_t n) {
  Workspace ws(params);
  return ws.binom_conv_u(r, n);
}

ArbInt binom_conv_v(const SeqParams& params, std::int64_t r, std::int64_t n) {
  Workspace ws(params);
  return ws.binom_conv_v(r, n);
}

// ---- closed forms: ordinary convolutions -------------------------------------

ArbInt rhs_telescope(Workspace& ws, std::int64_t n) {
  require_balancing(ws, "telescoping identity");
  require_domain(n >= 1, "pair-telescope", 2, n);
  return n * ws.u(n);
}

ArbInt rhs_triple_alt(Workspace& ws, std::int64_t n) {
  require_balancing(ws, "triple alternating identity");
  require_domain(n >= 4, "triple-alt", 3, n);
  return binom(n - 1, 2) * ws.u(n - 2) - binom(n - 4, 2) * ws.u(n - 4);
}

ArbInt rhs_general_alt(Workspace& ws, std::int64_t r, std::int64_t n) {
  require_balancing(ws, "general alternating identity");
  require_domain(r >= 2 && n >= 3 * r - 5 && n >= 0, "general-alt", r, n);
  Rat sum(0);
  for (std::int64_t k = 1; k <= r - 1; ++k) {
    const std::int64_t index = n - 2 * k - r + 3;
    Rat term = make_rat(index, r - 1) * q(binom(n - 2 * k + 1, r - k - 1) * binom(n - k - 2 * r + 3, k - 1));
    // index < 0 only where the coefficient above already vanishes.
    if (term == 0) continue;
    term *= q(ws.u(index));
    sum += sign_pow(k - 1) * term;
  }
  return require_integral(sum, at("general-alt rhs r=" + std::to_string(r), n));
}

ArbInt rhs_general_alt(std::int64_t r, std::int64_t n) {
  Workspace ws(SeqParams::balancing());
  return rhs_general_alt(ws, r, n);
}

ArbInt rhs_printed_corollary(Workspace& ws, std::int64_t r, std::int64_t n, CorollaryForm form) {
  require_balancing(ws, "printed corollary");
  auto b = [&](std::int64_t i) { return q(ws.u(i)); };
  Rat value;
  switch (r) {
    case 4:
      require_domain(n >= 7, "cor-printed-r4", r, n);
      value = q(binom(n - 1, 3)) * b(n - 3) - make_rat((n - 3) * (n - 5) * (n - 7), 3) * b(n - 5) +
              q(binom(n - 7, 3)) * b(n - 7);
      break;
    case 5: {
      require_domain(n >= 10, "cor-printed-r5", r, n);
      const std::int64_t third = form == CorollaryForm::kAsPrinted ? n - 6 : n - 8;
      value = q(binom(n - 1, 4)) * b(n - 4) - make_rat((n - 3) * (n - 4) * (n - 6) * (n - 9), 8) * b(n - 6) +
              make_rat((n - 5) * (n - 8) * (n - 10) * (n - 11), 8) * b(third) - q(binom(n - 10, 4)) * b(n - 10);
      break;
    }
    case 6:
      require_domain(n >= 13, "cor-printed-r6", r, n);
      value = q(binom(n - 1, 5)) * b(n - 5) -
              make_rat((n - 3) * (n - 4) * (n - 5) * (n - 7) * (n - 11), 30) * b(n - 7) +
              make_rat((n - 5) * (n - 6) * (n - 9) * (n - 12) * (n - 13), 20) * b(n - 9) -
              make_rat((n - 7) * (n - 11) * (n - 13) * (n - 14) * (n - 15), 30) * b(n - 11) +
              q(binom(n - 13, 5)) * b(n - 13);
      break;
    default:
      throw std::domain_error("printed corollaries exist only for r = 4, 5, 6");
  }
  return require_integral(value, at("printed corollary r=" + std::to_string(r), n));
}

ArbInt rhs_pair_plain(Workspace& ws, std::int64_t n) {
  require_balancing(ws, "pair convolution identity");
  require_domain(n >= 2, "pair-plain", 2, n);
  ArbInt sum(0);
  for (std::int64_t m = 0; m <= (n - 1) / 2; ++m) sum += (n - 2 * m - 1) * ws.u(n - 2 * m - 1);
  return sum;
}

ArbInt rhs_general_plain(Workspace& ws, std::int64_t r, std::int64_t n) {
  require_balancing(ws, "general convolution identity");
  require_domain(r >= 2 && n >= r, "general-plain", r, n);
  Rat sum(0);
  for (std::int64_t m = 0; m <= (n - r + 1) / 2; ++m) {
    const std::int64_t index = n - 2 * m - r + 1;
    sum += q(binom(n - m - 1, r - 2) * binom(m + r - 2, r - 2)) * make_rat(index, r - 1) * q(ws.u(index));
  }
  return require_integral(sum, at("general-plain rhs r=" + std::to_string(r), n));
}

ArbInt rhs_general_plain(std::int64_t r, std::int64_t n) {
  Workspace ws(SeqParams::balancing());
  return rhs_general_plain(ws, r, n);
}

// ---- closed forms: binomial (EGF) convolutions --------------------------------

ArbInt rhs_multinom_u(Workspace& ws, std::int64_t r, std::int64_t n) {
  require_domain(r >= 1 && n >= 0, "general-u", r, n);
  const std::int64_t a = ws.params().a();
  const ArbInt d(static_cast<long>(ws.params().discriminant()));
  Rat sum(0);
  Rat prefactor;
  if (r % 2 == 1) {
    for (std::int64_t j = 0; j <= (r - 1) / 2; ++j) {
      sum += sign_pow(j) * q(binom(r, j)) * shifted_binomial_sum(n, a * j, r - 2 * j, [&](auto k) { return ws.u(k); });
    }
    prefactor = make_rat(1, int_pow(d, static_cast<std::uint64_t>((r - 1) / 2)));
  } else {
    for (std::int64_t j = 0; j <= r / 2 - 1; ++j) {
      sum += sign_pow(j) * q(binom(r, j)) * shifted_binomial_sum(n, a * j, r - 2 * j, [&](auto k) { return ws.v(k); });
    }
    sum += sign_pow(r / 2) * q(binom(r, r / 2) * pow_i(a * r / 2, n));
    prefactor = make_rat(1, int_pow(d, static_cast<std::uint64_t>(r / 2)));
  }
  return require_integral(prefactor * sum, at("general-u rhs r=" + std::to_string(r), n));
}

ArbInt rhs_multinom_v(Workspace& ws, std::int64_t r, std::int64_t n) {
  require_domain(r >= 1 && n >= 0, "general-v", r, n);
  const std::int64_t a = ws.params().a();
  Rat sum(0);
  const std::int64_t j_max = r % 2 == 1 ? (r - 1) / 2 : r / 2 - 1;
  for (std::int64_t j = 0; j <= j_max; ++j) {
    sum += q(binom(r, j)) * shifted_binomial_sum(n, a * j, r - 2 * j, [&](auto k) { return ws.v(k); });
  }
  if (r % 2 == 0) sum += q(binom(r, r / 2) * pow_i(a * r / 2, n));
  return require_integral(sum, at("general-v rhs r=" + std::to_string(r), n));
}

ArbInt rhs_multinom_u(const SeqParams& params, std::int64_t r, std::int64_t n) {
  Workspace ws(params);
  return rhs_multinom_u(ws, r, n);
}

ArbInt rhs_multinom_v(const SeqParams& params, std::int64_t r, std::int64_t n) {
  Workspace ws(params);
  return rhs_multinom_v(ws, r, n);
}

ArbInt rhs_binom_pair_B(Workspace& ws, std::int64_t n) {
  require_balancing(ws, "binomial pair identity");
  require_domain(n >= 0, "binom-pair-b", 2, n);
  const Rat value = make_rat(pow_i(2, n) * ws.c(n) - pow_i(6, n), 16);
  return require_integral(value, at("binom-pair-b rhs", n));
}

ArbInt rhs_binom_pair_C(Workspace& ws, std::int64_t n) {
  require_balancing(ws, "binomial pair identity");
  require_domain(n >= 0, "binom-pair-c", 2, n);
  const Rat value = make_rat(pow_i(2, n) * ws.c(n) + pow_i(6, n), 2);
  return require_integral(value, at("binom-pair-c rhs", n));
}

ArbInt rhs_binom_pair_B(std::int64_t n) {
  Workspace ws(SeqParams::balancing());
  return rhs_binom_pair_B(ws, n);
}

ArbInt rhs_binom_pair_C(std::int64_t n) {
  Workspace ws(SeqParams::balancing());
  return rhs_binom_pair_C(ws, n);
}

ArbInt rhs_multinom_triple_B(Workspace& ws, std::int64_t n) {
  require_balancing(ws, "triple product identity");
  require_domain(n >= 0, "multinom-triple-b", 3, n);
  const Rat inner = q(pow_i(3, n) * ws.u(n)) - 3 * shifted_binomial_sum(n, 6, 1, [&](auto k) { return ws.u(k); });
  return require_integral(make_rat(1, 32) * inner, at("multinom-triple-b rhs", n));
}

ArbInt rhs_multinom_triple_C(Workspace& ws, std::int64_t n) {
  require_balancing(ws, "triple product identity");
  require_domain(n >= 0, "multinom-triple-c", 3, n);
  const Rat inner = q(pow_i(3, n) * ws.c(n)) + 3 * shifted_binomial_sum(n, 6, 1, [&](auto k) { return ws.c(k); });
  return require_integral(make_rat(1, 4) * inner, at("multinom-triple-c rhs", n));
}

namespace {

// Even-r balancing product form with a caller-supplied middle-term base.
ArbInt balancing_even_u(Workspace& ws, std::int64_t r, std::int64_t n, std::int64_t middle_base,
                        std::string_view what) {
  Rat sum(0);
  for (std::int64_t j = 0; j <= r / 2 - 1; ++j) {
    sum += sign_pow(j) * q(binom(r, j)) * shifted_binomial_sum(n, 6 * j, r - 2 * j, [&](auto k) { return ws.c(k); });
  }
  const Rat value = make_rat(1, int_pow(32, static_cast<std::uint64_t>(r / 2))) *
                    (2 * sum + sign_pow(r / 2) * q(binom(r, r / 2) * pow_i(middle_base, n)));
  return require_integral(value, at(what, n));
}

}  // namespace

ArbInt rhs_balancing_multinom_B(Workspace& ws, std::int64_t r, std::int64_t n) {
  require_balancing(ws, "balancing multinomial identity");
  require_domain(r >= 1 && n >= 0, "balancing-multinom-b", r, n);
  if (r % 2 == 0) return balancing_even_u(ws, r, n, 3 * r, "balancing-multinom-b rhs");
  Rat sum(0);
  for (std::int64_t j = 0; j <= (r - 1) / 2; ++j) {
    sum += sign_pow(j) * q(binom(r, j)) * shifted_binomial_sum(n, 6 * j, r - 2 * j, [&](auto k) { return ws.u(k); });
  }
  const Rat value = make_rat(1, int_pow(32, static_cast<std::uint64_t>((r - 1) / 2))) * sum;
  return require_integral(value, at("balancing-multinom-b rhs", n));
}

ArbInt rhs_balancing_multinom_C(Workspace& ws, std::int64_t r, std::int64_t n) {
  require_balancing(ws, "balancing multinomial identity");
  require_domain(r >= 1 && n >= 0, "balancing-multinom-c", r, n);
  Rat sum(0);
  const std::int64_t j_max = r % 2 == 1 ? (r - 1) / 2 : r / 2 - 1;
  for (std::int64_t j = 0; j <= j_max; ++j) {
    sum += q(binom(r, j)) * shifted_binomial_sum(n, 6 * j, r - 2 * j, [&](auto k) { return ws.c(k); });
  }
  Rat value;
  if (r % 2 == 1) {
    value = make_rat(1, int_pow(2, static_cast<std::uint64_t>(r - 1))) * sum;
  } else {
    value = make_rat(1, int_pow(2, static_cast<std::uint64_t>(r))) *
            (2 * sum + q(binom(r, r / 2) * pow_i(3 * r, n)));
  }
  return require_integral(value, at("balancing-multinom-c rhs", n));
}

Rat rhs_printed_balancing_even_u(Workspace& ws, std::int64_t r, std::int64_t n) {
  require_balancing(ws, "printed balancing corollary");
  require_domain(r >= 2 && r % 2 == 0 && n >= 0, "printed balancing even-r corollary", r, n);
  // (r/2)^n as printed; r even so r/2 is exact.
  const std::int64_t half = r / 2;
  Rat sum(0);
  for (std::int64_t j = 0; j <= half - 1; ++j) {
    sum += sign_pow(j) * q(binom(r, j)) * shifted_binomial_sum(n, 6 * j, r - 2 * j, [&](auto k) { return ws.c(k); });
  }
  // Not asserted integral: the printed form is not an identity.
  return make_rat(1, int_pow(32, static_cast<std::uint64_t>(half))) *
         (2 * sum + sign_pow(half) * q(binom(r, half) * pow_i(half, n)));
}

ArbInt rhs_fib_pair_F(Workspace& ws, std::int64_t n) {
  require_fibonacci(ws, "Fibonacci pair identity");
  require_domain(n >= 0, "fib-pair-f", 2, n);
  return require_integral(make_rat(pow_i(2, n) * ws.v(n) - 2, 5), at("fib-pair-f rhs", n));
}

ArbInt rhs_fib_pair_L(Workspace& ws, std::int64_t n) {
  require_fibonacci(ws, "Lucas pair identity");
  require_domain(n >= 0, "fib-pair-l", 2, n);
  return pow_i(2, n) * ws.v(n) + 2;
}

// ---- catalog ---------------------------------------------------------------

namespace {

std::int64_t from_zero(std::int64_t) { return 0; }
std::int64_t from_one(std::int64_t) { return 1; }
std::int64_t from_two(std::int64_t) { return 2; }
std::int64_t from_four(std::int64_t) { return 4; }
std::int64_t from_seven(std::int64_t) { return 7; }
std::int64_t from_ten(std::int64_t) { return 10; }
std::int64_t from_thirteen(std::int64_t) { return 13; }
std::int64_t from_r(std::int64_t r) { return r; }
std::int64_t from_alt_bound(std::int64_t r) { return std::max<std::int64_t>(0, 3 * r - 5); }

using enum IdentityId;
using enum ParamsRule;

constexpr std::array kCatalog{
    IdentityInfo{kPairTelescope, "pair-telescope", "n B_n = sum (B_j B_{n-j+1} - B_{j-1} B_{n-j})", kBalancingOnly, 2, 2, from_one},
    IdentityInfo{kTripleAlt, "triple-alt", "alternating 3-fold convolution, n >= 4", kBalancingOnly, 3, 3, from_four},
    IdentityInfo{kGeneralAlt, "general-alt", "alternating r-fold convolution, n >= 3r-5", kBalancingOnly, std::nullopt, 2, from_alt_bound},
    IdentityInfo{kCorPrintedR4, "cor-printed-r4", "r = 4 alternating corollary as printed", kBalancingOnly, 4, 4, from_seven},
    IdentityInfo{kCorPrintedR5, "cor-printed-r5", "r = 5 alternating corollary as printed", kBalancingOnly, 5, 5, from_ten},
    IdentityInfo{kCorPrintedR6, "cor-printed-r6", "r = 6 alternating corollary as printed", kBalancingOnly, 6, 6, from_thirteen},
    IdentityInfo{kPairPlain, "pair-plain", "sum B_j B_{n-j} = sum (n-2m-1) B_{n-2m-1}", kBalancingOnly, 2, 2, from_two},
    IdentityInfo{kGeneralPlain, "general-plain", "plain r-fold convolution, n >= r", kBalancingOnly, std::nullopt, 2, from_r},
    IdentityInfo{kBinomPairB, "binom-pair-b", "sum binom(n,k) B_k B_{n-k} = (2^n C_n - 6^n)/16", kBalancingOnly, 2, 2, from_zero},
    IdentityInfo{kBinomPairC, "binom-pair-c", "sum binom(n,k) C_k C_{n-k} = (2^n C_n + 6^n)/2", kBalancingOnly, 2, 2, from_zero},
    IdentityInfo{kMultinomTripleB, "multinom-triple-b", "multinomial triple product of B", kBalancingOnly, 3, 3, from_zero},
    IdentityInfo{kMultinomTripleC, "multinom-triple-c", "multinomial triple product of C", kBalancingOnly, 3, 3, from_zero},
    IdentityInfo{kBalancingMultinomB, "balancing-multinom-b", "multinomial r-fold product of B", kBalancingOnly, std::nullopt, 1, from_zero},
    IdentityInfo{kBalancingMultinomC, "balancing-multinom-c", "multinomial r-fold product of C", kBalancingOnly, std::nullopt, 1, from_zero},
    IdentityInfo{kGeneralU, "general-u", "multinomial r-fold product of u_n", kAny, std::nullopt, 1, from_zero},
    IdentityInfo{kGeneralV, "general-v", "multinomial r-fold product of v_n", kAny, std::nullopt, 1, from_zero},
    IdentityInfo{kFibPairF, "fib-pair-f", "sum binom(n,k) F_k F_{n-k} = (2^n L_n - 2)/5", kFibonacciOnly, 2, 2, from_zero},
    IdentityInfo{kFibPairL, "fib-pair-l", "sum binom(n,k) L_k L_{n-k} = 2^n L_n + 2", kFibonacciOnly, 2, 2, from_zero},
};

}  // namespace

std::span<const IdentityInfo> all_identities() { return kCatalog; }

const IdentityInfo& identity_info(IdentityId id) {
  for (const auto& info : kCatalog) {
    if (info.id == id) return info;
  }
  throw std::logic_error("identity missing from catalog");
}

std::optional<IdentityId> parse_identity_id(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

std::string_view to_string(IdentityId id) { return identity_info(id).name; }

SeqParams default_params(IdentityId id) {
  return identity_info(id).params_rule == kFibonacciOnly ? SeqParams::fibonacci() : SeqParams::balancing();
}

std::int64_t resolve_r(IdentityId id, std::optional<std::int64_t> r) {
  const auto& info = identity_info(id);
  const std::string name(info.name);
  if (info.fixed_r) {
    if (r && *r != *info.fixed_r) {
      throw std::invalid_argument(name + " is stated for r = " + std::to_string(*info.fixed_r) + " only");
    }
    return *info.fixed_r;
  }
  if (!r) throw std::invalid_argument(name + " needs an explicit r");
  if (*r < info.min_r) throw std::invalid_argument(name + " needs r >= " + std::to_string(info.min_r));
  return *r;
}

void check_params(IdentityId id, const SeqParams& params) {
  const auto& info = identity_info(id);
  if (info.params_rule == kBalancingOnly && params != SeqParams::balancing()) {
    throw std::invalid_argument(std::string(info.name) + " is a balancing identity; parameters must be (6,-1)");
  }
  if (info.params_rule == kFibonacciOnly && params != SeqParams::fibonacci()) {
    throw std::invalid_argument(std::string(info.name) + " is a Fibonacci/Lucas identity; parameters must be (1,1)");
  }
}

Evaluation evaluate(IdentityId id, Workspace& ws, std::int64_t r, std::int64_t n) {
  check_params(id, ws.params());
  const auto& info = identity_info(id);
  require_domain(r >= info.min_r && n >= info.min_n(r), info.name, r, n);
  switch (id) {
    case kPairTelescope: return {telescoping_sum(ws, n), rhs_telescope(ws, n)};
    case kTripleAlt: return {alt_weighted_conv(ws, 3, n), rhs_triple_alt(ws, n)};
    case kGeneralAlt: return {alt_weighted_conv(ws, r, n), rhs_general_alt(ws, r, n)};
    case kCorPrintedR4:
    case kCorPrintedR5:
    case kCorPrintedR6: return {alt_weighted_conv(ws, r, n), rhs_printed_corollary(ws, r, n)};
    case kPairPlain: return {ws.conv_power(2, n), rhs_pair_plain(ws, n)};
    case kGeneralPlain: return {ws.conv_power(r, n), rhs_general_plain(ws, r, n)};
    case kBinomPairB: return {ws.binom_conv_u(2, n), rhs_binom_pair_B(ws, n)};
    case kBinomPairC: return {ws.binom_conv_c(2, n), rhs_binom_pair_C(ws, n)};
    case kMultinomTripleB: return {ws.binom_conv_u(3, n), rhs_multinom_triple_B(ws, n)};
    case kMultinomTripleC: return {ws.binom_conv_c(3, n), rhs_multinom_triple_C(ws, n)};
    case kBalancingMultinomB: return {ws.binom_conv_u(r, n), rhs_balancing_multinom_B(ws, r, n)};
    case kBalancingMultinomC: return {ws.binom_conv_c(r, n), rhs_balancing_multinom_C(ws, r, n)};
    case kGeneralU: return {ws.binom_conv_u(r, n), rhs_multinom_u(ws, r, n)};
    case kGeneralV: return {ws.binom_conv_v(r, n), rhs_multinom_v(ws, r, n)};
    case kFibPairF: return {ws.binom_conv_u(2, n), rhs_fib_pair_F(ws, n)};
    case kFibPairL: return {ws.binom_conv_v(2, n), rhs_fib_pair_L(ws, n)};
  }
  throw std::logic_error("unhandled identity");
}

VerificationReport verify_identity(IdentityId id, const SeqParams& params, std::optional<std::int64_t> r_in,
                                   NRange range) {
  check_params(id, params);
  const std::int64_t r = resolve_r(id, r_in);
  if (range.lo > range.hi) throw std::invalid_argument("empty n range");
  const std::int64_t lo = std::max(range.lo, identity_info(id).min_n(r));
  if (lo > range.hi) {
    throw std::invalid_argument(std::string(to_string(id)) + ": range [" + std::to_string(range.lo) + ", " +
                                std::to_string(range.hi) + "] misses the identity's domain n >= " +
                                std::to_string(identity_info(id).min_n(r)));
  }

  VerificationReport report{id, params, r, {lo, range.hi}, 0, {}};
  Workspace ws(params);
  ws.reserve(range.hi + 1);
  for (std::int64_t n = lo; n <= range.hi; ++n) {
    auto result = evaluate(id, ws, r, n);
    ++report.checked;
    if (!result.matches()) report.failures.push_back({n, std::move(result.lhs), std::move(result.rhs)});
  }
  return report;
}

}  // namespace balancing
