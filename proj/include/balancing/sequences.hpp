#pragma once

// Second-order linear recurrences u_n = a u_{n-1} + b u_{n-2} and their
// companions v_n. Balancing, Lucas-balancing, Fibonacci and Lucas numbers are
// specializations of the same (a, b) pair.

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "balancing/arith.hpp"

namespace balancing {

/// Recurrence coefficients (a, b) with discriminant D = a^2 + 4b != 0.
class SeqParams {
 public:
  /// Throws std::domain_error when a^2 + 4b == 0 (repeated root).
  SeqParams(std::int64_t a, std::int64_t b);

  static SeqParams balancing() { return {6, -1}; }
  static SeqParams fibonacci() { return {1, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t discriminant() const { return d_; }

  bool operator==(const SeqParams&) const = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t d_;
};

enum class SequenceKind { kBalancing, kLucasBalancing, kFibonacci, kLucas, kU, kV };

std::optional<SequenceKind> parse_sequence_kind(const std::string& name);
std::string to_string(SequenceKind kind);

/// Memoized u/v prefix for one parameter pair. Concurrent reads of the
/// computed prefix are allowed; growth is serialized.
class SeqCache {
 public:
  explicit SeqCache(SeqParams params);

  const SeqParams& params() const { return params_; }

  ArbInt u(std::int64_t n);
  ArbInt v(std::int64_t n);

  /// Ensures indices 0..n are computed.
  void reserve(std::int64_t n);

  /// Copy of u_0..u_n / v_0..v_n.
  std::vector<ArbInt> u_prefix(std::int64_t n);
  std::vector<ArbInt> v_prefix(std::int64_t n);

 private:
  void grow_locked(std::size_t size);

  SeqParams params_;
  mutable std::shared_mutex mutex_;
  std::vector<ArbInt> u_;
  std::vector<ArbInt> v_;
};

ArbInt u(const SeqParams& params, std::int64_t n);
ArbInt v(const SeqParams& params, std::int64_t n);

/// C_n = v_n / 2 for (a, b) = (6, -1).
ArbInt lucas_balancing(std::int64_t n);

/// Value of a named sequence at n (kU / kV use `params`).
ArbInt sequence_value(SequenceKind kind, const SeqParams& params, std::int64_t n);
std::vector<ArbInt> sequence_prefix(SequenceKind kind, const SeqParams& params, std::int64_t n);

/// True iff B_{n+1} = 3B_n + C_n and C_{n+1} = 8B_n + 3C_n for 0 <= n <= n_max.
bool check_cross_recurrence(std::int64_t n_max);

}  // namespace balancing
