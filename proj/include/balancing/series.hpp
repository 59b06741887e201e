#pragma once

// Truncated formal power series. A Series<Scalar> holds the coefficients of
// x^0 .. x^order; everything past `order` is unknown. Results of every
// operation carry the largest exponent to which they can be trusted.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "balancing/arith.hpp"
#include "balancing/sequences.hpp"

namespace balancing {

template <class Scalar = Rat>
class Series {
 public:
  /// Zero series trusted to `order`.
  explicit Series(std::int64_t order) {
    if (order < 0) throw std::domain_error("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Scalar(0));
  }

  /// Coefficients c_0..c_order; order = coeffs.size() - 1.
  explicit Series(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::domain_error("series needs at least one coefficient");
  }

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::int64_t n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Scalar& operator[](std::int64_t n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  /// Index of the first nonzero coefficient, or order()+1 if none is known.
  std::int64_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return static_cast<std::int64_t>(i);
    }
    return order() + 1;
  }

  Series truncated(std::int64_t order) const {
    if (order > this->order()) throw std::domain_error("cannot extend a truncated series");
    return Series(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  bool operator==(const Series&) const = default;

 private:
  std::vector<Scalar> coeffs_;
};

/// Cauchy product, trusted to min(order_f + val(g), order_g + val(f)).
template <class Scalar>
Series<Scalar> series_mul(const Series<Scalar>& f, const Series<Scalar>& g) {
  const std::int64_t vf = f.valuation();
  const std::int64_t vg = g.valuation();
  const std::int64_t order = std::min(f.order() + vg, g.order() + vf);
  Series<Scalar> out(order);
  for (std::int64_t i = vf; i <= std::min(f.order(), order); ++i) {
    if (f[i] == 0) continue;
    const std::int64_t j_max = std::min(g.order(), order - i);
    for (std::int64_t j = vg; j <= j_max; ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

/// f^r; f^0 is the constant 1 at f's order.
template <class Scalar>
Series<Scalar> series_pow(const Series<Scalar>& f, std::int64_t r) {
  if (r < 0) throw std::domain_error("negative series power");
  Series<Scalar> out(f.order());
  out[0] = Scalar(1);
  for (std::int64_t i = 0; i < r; ++i) out = series_mul(out, f);
  return out;
}

/// k-th termwise derivative; order drops by k.
template <class Scalar>
Series<Scalar> series_derivative(const Series<Scalar>& f, std::int64_t k) {
  if (k < 0) throw std::domain_error("negative derivative order");
  if (k > f.order()) throw std::domain_error("derivative order exceeds truncation order");
  Series<Scalar> out(f.order() - k);
  for (std::int64_t n = 0; n <= out.order(); ++n) {
    Scalar c = f[n + k];
    for (std::int64_t i = 1; i <= k; ++i) c *= Scalar(static_cast<long>(n + i));
    out[n] = c;
  }
  return out;
}

/// x^s * f.
template <class Scalar>
Series<Scalar> series_shift(const Series<Scalar>& f, std::int64_t s) {
  if (s < 0) throw std::domain_error("negative shift");
  std::vector<Scalar> coeffs(static_cast<std::size_t>(s), Scalar(0));
  coeffs.insert(coeffs.end(), f.coeffs().begin(), f.coeffs().end());
  return Series<Scalar>(std::move(coeffs));
}

template <class Scalar>
Series<Scalar> series_scale(Series<Scalar> f, const Scalar& c) {
  for (std::int64_t n = 0; n <= f.order(); ++n) f[n] *= c;
  return f;
}

template <class Scalar>
Series<Scalar> series_add(const Series<Scalar>& f, const Series<Scalar>& g) {
  Series<Scalar> out = f.truncated(std::min(f.order(), g.order()));
  for (std::int64_t n = 0; n <= out.order(); ++n) out[n] += g[n];
  return out;
}

template <class Scalar>
Series<Scalar> series_sub(const Series<Scalar>& f, const Series<Scalar>& g) {
  Series<Scalar> out = f.truncated(std::min(f.order(), g.order()));
  for (std::int64_t n = 0; n <= out.order(); ++n) out[n] -= g[n];
  return out;
}

/// (1 - x^2)^m to `order`. For m < 0 uses sum_i binom(i - m - 1, i) x^{2i}.
template <class Scalar = Rat>
Series<Scalar> geom_even_pow(std::int64_t m, std::int64_t order) {
  Series<Scalar> out(order);
  for (std::int64_t i = 0; 2 * i <= order; ++i) {
    ArbInt c = m >= 0 ? ArbInt(sign_pow(i)) * binom(m, i) : binom(i - m - 1, i);
    out[2 * i] = Scalar(c);
  }
  return out;
}

/// Ordinary generating function x / (1 - a x - b x^2) to `order`.
template <class Scalar = Rat>
Series<Scalar> ogf(const SeqParams& params, std::int64_t order) {
  if (order < 0) throw std::domain_error("series order must be nonnegative");
  SeqCache cache(params);
  const auto values = cache.u_prefix(order);
  std::vector<Scalar> coeffs;
  coeffs.reserve(values.size());
  for (const auto& x : values) coeffs.emplace_back(x);
  return Series<Scalar>(std::move(coeffs));
}

/// First exponent at which f and g disagree within their common order.
template <class Scalar>
std::optional<std::int64_t> first_disagreement(const Series<Scalar>& f, const Series<Scalar>& g) {
  const std::int64_t common = std::min(f.order(), g.order());
  for (std::int64_t n = 0; n <= common; ++n) {
    if (f[n] != g[n]) return n;
  }
  return std::nullopt;
}

template <class Scalar>
bool agree(const Series<Scalar>& f, const Series<Scalar>& g) {
  return !first_disagreement(f, g).has_value();
}

/// Compares (1 - x^2) f^2 with x^2 f' for the balancing OGF.
bool verify_f2_relation(std::int64_t order);

/// Both sides of the f^r expansion in terms of f^{(r-1)}, ..., f', expanded
/// to a common truncation order.
struct LemmaSides {
  Series<Rat> lhs;
  Series<Rat> rhs;
};
LemmaSides lemma_expansion_sides(std::int64_t r, std::int64_t order);

/// Requires r >= 2 and order >= 2r.
bool verify_lemma_expansion(std::int64_t r, std::int64_t order);

}  // namespace balancing
