#pragma once

// Identity catalog for convolutions of balancing-type sequences.
//
// Every identity pairs a convolution side ("lhs", computed by brute force or
// by an independent series/EGF oracle) with a closed form ("rhs", computed in
// exact rationals and asserted integral). verify_identity sweeps a range of n
// and records every exact mismatch.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "balancing/arith.hpp"
#include "balancing/sequences.hpp"

namespace balancing {

/// Per-worker evaluation context for one parameter pair: sequence prefix plus
/// memoized convolution tables. Not safe for concurrent use; give each worker
/// its own.
class Workspace {
 public:
  explicit Workspace(SeqParams params);

  const SeqParams& params() const { return cache_.params(); }
  bool is_balancing() const { return params() == SeqParams::balancing(); }

  ArbInt u(std::int64_t n) { return cache_.u(n); }
  ArbInt v(std::int64_t n) { return cache_.v(n); }
  /// v_n / 2; only meaningful (and only allowed) for balancing parameters.
  ArbInt c(std::int64_t n);

  /// Coefficient n of ogf^r (sum over compositions of n into r positive
  /// parts of u-products). Zero for n < 0.
  ArbInt conv_power(std::int64_t r, std::int64_t n);

  /// r-fold binomial convolution of u (parts >= 1 since u_0 = 0).
  ArbInt binom_conv_u(std::int64_t r, std::int64_t n);
  /// r-fold binomial convolution of v (parts >= 0).
  ArbInt binom_conv_v(std::int64_t r, std::int64_t n);
  /// r-fold binomial convolution of C = v/2 (balancing only).
  ArbInt binom_conv_c(std::int64_t r, std::int64_t n);

  /// Grows every table this workspace may need up to index n.
  void reserve(std::int64_t n) { cache_.reserve(n); }

 private:
  enum class Table { kPlain, kBinomU, kBinomV, kBinomC };
  const std::vector<ArbInt>& table(Table kind, std::int64_t r, std::int64_t n);
  std::vector<ArbInt> base_values(Table kind, std::int64_t n);

  SeqCache cache_;
  std::map<std::pair<Table, std::int64_t>, std::vector<ArbInt>> tables_;
};

// ---- oracles -------------------------------------------------------------

ArbInt conv_power(const SeqParams& params, std::int64_t r, std::int64_t n);

/// Direct enumeration of compositions of n into r parts >= min_part,
/// optionally weighted by the multinomial coefficient. Used to cross-check
/// the series and EGF oracles.
ArbInt enumerate_convolution(std::span<const ArbInt> values, std::int64_t r, std::int64_t n,
                             std::int64_t min_part, bool multinomial_weight);

/// sum_{j=1}^n (B_j B_{n-j+1} - B_{j-1} B_{n-j}).
ArbInt telescoping_sum(Workspace& ws, std::int64_t n);

/// sum_l (-1)^l binom(2r-3, l) S_r(n - 2l) over balancing numbers.
ArbInt alt_weighted_conv(Workspace& ws, std::int64_t r, std::int64_t n);
ArbInt alt_weighted_conv(std::int64_t r, std::int64_t n);

ArbInt binom_conv_u(const SeqParams& params, std::int64_t r, std::int64_t n);
ArbInt binom_conv_v(const SeqParams& params, std::int64_t r, std::int64_t n);

// ---- closed forms ----------------------------------------------------------
// All closed forms reject n outside the identity's stated domain with
// std::domain_error, and balancing-only forms reject other parameters with
// std::invalid_argument.

/// n B_n, n >= 1.
ArbInt rhs_telescope(Workspace& ws, std::int64_t n);
/// binom(n-1,2) B_{n-2} - binom(n-4,2) B_{n-4}, n >= 4.
ArbInt rhs_triple_alt(Workspace& ws, std::int64_t n);

ArbInt rhs_general_alt(Workspace& ws, std::int64_t r, std::int64_t n);
ArbInt rhs_general_alt(std::int64_t r, std::int64_t n);

enum class CorollaryForm { kAsPrinted, kReindexed };

/// The r = 4, 5, 6 corollaries exactly as printed. kReindexed replaces the
/// second B_{n-6} of the r = 5 form with B_{n-8}; it is identical to
/// kAsPrinted for r = 4 and 6.
ArbInt rhs_printed_corollary(Workspace& ws, std::int64_t r, std::int64_t n,
                             CorollaryForm form = CorollaryForm::kAsPrinted);

ArbInt rhs_pair_plain(Workspace& ws, std::int64_t n);
ArbInt rhs_general_plain(Workspace& ws, std::int64_t r, std::int64_t n);
ArbInt rhs_general_plain(std::int64_t r, std::int64_t n);

ArbInt rhs_multinom_u(Workspace& ws, std::int64_t r, std::int64_t n);
ArbInt rhs_multinom_v(Workspace& ws, std::int64_t r, std::int64_t n);
ArbInt rhs_multinom_u(const SeqParams& params, std::int64_t r, std::int64_t n);
ArbInt rhs_multinom_v(const SeqParams& params, std::int64_t r, std::int64_t n);

/// (2^n C_n - 6^n) / 16 and (2^n C_n + 6^n) / 2.
ArbInt rhs_binom_pair_B(Workspace& ws, std::int64_t n);
ArbInt rhs_binom_pair_C(Workspace& ws, std::int64_t n);
ArbInt rhs_binom_pair_B(std::int64_t n);
ArbInt rhs_binom_pair_C(std::int64_t n);

ArbInt rhs_multinom_triple_B(Workspace& ws, std::int64_t n);
ArbInt rhs_multinom_triple_C(Workspace& ws, std::int64_t n);

/// The balancing-specific odd/even-r forms written in terms of B_k and C_k.
ArbInt rhs_balancing_multinom_B(Workspace& ws, std::int64_t r, std::int64_t n);
ArbInt rhs_balancing_multinom_C(Workspace& ws, std::int64_t r, std::int64_t n);

/// Even-r balancing product formula with the printed (r/2)^n middle term.
/// Quarantined: kept only to document that it disagrees with the oracle, so
/// the value is returned unreduced to an integer.
Rat rhs_printed_balancing_even_u(Workspace& ws, std::int64_t r, std::int64_t n);

/// (2^n L_n - 2) / 5 and 2^n L_n + 2.
ArbInt rhs_fib_pair_F(Workspace& ws, std::int64_t n);
ArbInt rhs_fib_pair_L(Workspace& ws, std::int64_t n);

// ---- catalog -------------------------------------------------------------

enum class IdentityId {
  kPairTelescope,
  kTripleAlt,
  kGeneralAlt,
  kCorPrintedR4,
  kCorPrintedR5,
  kCorPrintedR6,
  kPairPlain,
  kGeneralPlain,
  kBinomPairB,
  kBinomPairC,
  kMultinomTripleB,
  kMultinomTripleC,
  kBalancingMultinomB,
  kBalancingMultinomC,
  kGeneralU,
  kGeneralV,
  kFibPairF,
  kFibPairL,
};

enum class ParamsRule { kBalancingOnly, kFibonacciOnly, kAny };

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  std::string_view summary;
  ParamsRule params_rule;
  std::optional<std::int64_t> fixed_r;
  std::int64_t min_r;
  /// Smallest n on which the identity is asserted, for a given r.
  std::int64_t (*min_n)(std::int64_t r);
};

std::span<const IdentityInfo> all_identities();
const IdentityInfo& identity_info(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);
std::string_view to_string(IdentityId id);

/// Default parameters for an identity (balancing unless the rule says otherwise).
SeqParams default_params(IdentityId id);

/// Resolves the r an identity is evaluated at. Throws std::invalid_argument
/// when r is missing for a family identity, conflicts with a fixed r, or is
/// below the family minimum.
std::int64_t resolve_r(IdentityId id, std::optional<std::int64_t> r);

/// Throws std::invalid_argument if params are not allowed for the identity.
void check_params(IdentityId id, const SeqParams& params);

struct Evaluation {
  ArbInt lhs;
  ArbInt rhs;
  bool matches() const { return lhs == rhs; }
};

/// Evaluates both sides at one n. Throws std::domain_error outside the domain.
Evaluation evaluate(IdentityId id, Workspace& ws, std::int64_t r, std::int64_t n);

struct NRange {
  std::int64_t lo;
  std::int64_t hi;
  bool operator==(const NRange&) const = default;
};

struct Mismatch {
  std::int64_t n;
  ArbInt lhs;
  ArbInt rhs;
  bool operator==(const Mismatch&) const = default;
};

struct VerificationReport {
  IdentityId identity;
  SeqParams params;
  std::int64_t r;
  NRange range;
  std::int64_t checked = 0;
  std::vector<Mismatch> failures;

  bool passed() const { return failures.empty(); }
  bool operator==(const VerificationReport&) const = default;
};

/// Clips `range` to the identity's domain (empty intersection is a usage
/// error) and checks every n in it.
VerificationReport verify_identity(IdentityId id, const SeqParams& params, std::optional<std::int64_t> r,
                                   NRange range);

}  // namespace balancing
