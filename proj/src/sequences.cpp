#include "balancing/sequences.hpp"

#include <mutex>
#include <stdexcept>

namespace balancing {
namespace {

void require_index(std::int64_t n) {
  if (n < 0) throw std::domain_error("negative sequence index " + std::to_string(n));
}

}  // namespace

SeqParams::SeqParams(std::int64_t a, std::int64_t b) : a_(a), b_(b), d_(a * a + 4 * b) {
  if (d_ == 0) {
    throw std::domain_error("recurrence (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") has a repeated characteristic root");
  }
}

std::optional<SequenceKind> parse_sequence_kind(const std::string& name) {
  if (name == "balancing") return SequenceKind::kBalancing;
  if (name == "lucas-balancing") return SequenceKind::kLucasBalancing;
  if (name == "fibonacci") return SequenceKind::kFibonacci;
  if (name == "lucas") return SequenceKind::kLucas;
  if (name == "u") return SequenceKind::kU;
  if (name == "v") return SequenceKind::kV;
  return std::nullopt;
}

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::kBalancing: return "balancing";
    case SequenceKind::kLucasBalancing: return "lucas-balancing";
    case SequenceKind::kFibonacci: return "fibonacci";
    case SequenceKind::kLucas: return "lucas";
    case SequenceKind::kU: return "u";
    case SequenceKind::kV: return "v";
  }
  return "?";
}

SeqCache::SeqCache(SeqParams params) : params_(params) {
  u_ = {ArbInt(0), ArbInt(1)};
  v_ = {ArbInt(2), ArbInt(static_cast<long>(params_.a()))};
}

void SeqCache::grow_locked(std::size_t size) {
  const ArbInt a(static_cast<long>(params_.a()));
  const ArbInt b(static_cast<long>(params_.b()));
  while (u_.size() < size) {
    const std::size_t n = u_.size();
    u_.push_back(a * u_[n - 1] + b * u_[n - 2]);
    v_.push_back(a * v_[n - 1] + b * v_[n - 2]);
  }
}

void SeqCache::reserve(std::int64_t n) {
  require_index(n);
  const auto size = static_cast<std::size_t>(n) + 1;
  {
    std::shared_lock lock(mutex_);
    if (u_.size() >= size) return;
  }
  std::unique_lock lock(mutex_);
  grow_locked(size);
}

ArbInt SeqCache::u(std::int64_t n) {
  reserve(n);
  std::shared_lock lock(mutex_);
  return u_[static_cast<std::size_t>(n)];
}

ArbInt SeqCache::v(std::int64_t n) {
  reserve(n);
  std::shared_lock lock(mutex_);
  return v_[static_cast<std::size_t>(n)];
}

std::vector<ArbInt> SeqCache::u_prefix(std::int64_t n) {
  reserve(n);
  std::shared_lock lock(mutex_);
  return {u_.begin(), u_.begin() + n + 1};
}

std::vector<ArbInt> SeqCache::v_prefix(std::int64_t n) {
  reserve(n);
  std::shared_lock lock(mutex_);
  return {v_.begin(), v_.begin() + n + 1};
}

ArbInt u(const SeqParams& params, std::int64_t n) { return SeqCache(params).u(n); }

ArbInt v(const SeqParams& params, std::int64_t n) { return SeqCache(params).v(n); }

ArbInt lucas_balancing(std::int64_t n) {
  ArbInt twice = v(SeqParams::balancing(), n);
  return require_integral(make_rat(twice, 2), "C_" + std::to_string(n));
}

namespace {

SeqParams params_for(SequenceKind kind, const SeqParams& params) {
  switch (kind) {
    case SequenceKind::kBalancing:
    case SequenceKind::kLucasBalancing: return SeqParams::balancing();
    case SequenceKind::kFibonacci:
    case SequenceKind::kLucas: return SeqParams::fibonacci();
    default: return params;
  }
}

bool uses_v(SequenceKind kind) {
  return kind == SequenceKind::kLucasBalancing || kind == SequenceKind::kLucas ||
         kind == SequenceKind::kV;
}

}  // namespace

std::vector<ArbInt> sequence_prefix(SequenceKind kind, const SeqParams& params, std::int64_t n) {
  SeqCache cache(params_for(kind, params));
  if (!uses_v(kind)) return cache.u_prefix(n);
  auto values = cache.v_prefix(n);
  if (kind == SequenceKind::kLucasBalancing) {
    for (auto& x : values) {
      if (!mpz_even_p(x.get_mpz_t())) throw IntegralityViolation("odd Lucas-balancing v-term");
      x /= 2;
    }
  }
  return values;
}

ArbInt sequence_value(SequenceKind kind, const SeqParams& params, std::int64_t n) {
  return sequence_prefix(kind, params, n).back();
}

bool check_cross_recurrence(std::int64_t n_max) {
  require_index(n_max);
  const auto b = sequence_prefix(SequenceKind::kBalancing, SeqParams::balancing(), n_max + 1);
  const auto c = sequence_prefix(SequenceKind::kLucasBalancing, SeqParams::balancing(), n_max + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (b[i + 1] != 3 * b[i] + c[i]) return false;
    if (c[i + 1] != 8 * b[i] + 3 * c[i]) return false;
  }
  return true;
}

}  // namespace balancing
