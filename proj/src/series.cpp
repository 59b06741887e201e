#include "balancing/series.hpp"

#include <string>

namespace balancing {

bool verify_f2_relation(std::int64_t order) {
  if (order < 2) throw std::domain_error("verify_f2_relation needs order >= 2");
  const auto f = ogf<Rat>(SeqParams::balancing(), order);
  const auto lhs = series_mul(geom_even_pow<Rat>(1, order), series_mul(f, f));
  const auto rhs = series_shift(series_derivative(f, 1), 2);
  return agree(lhs, rhs);
}

LemmaSides lemma_expansion_sides(std::int64_t r, std::int64_t order) {
  if (r < 2) throw std::domain_error("lemma expansion needs r >= 2, got " + std::to_string(r));
  if (order < 2 * r) {
    throw std::domain_error("lemma expansion needs order >= 2r, got " + std::to_string(order));
  }
  const auto f = ogf<Rat>(SeqParams::balancing(), order);

  // x^{2r-2} f^{(r-1)} / ((r-1)! (1-x^2)^{r-1})
  auto lead = series_shift(series_derivative(f, r - 1), 2 * r - 2);
  lead = series_mul(lead, geom_even_pow<Rat>(-(r - 1), lead.order()));
  Series<Rat> rhs = series_scale(lead, make_rat(1, factorial(r - 1)));

  for (std::int64_t k = 1; k <= r - 2; ++k) {
    const auto deriv = series_derivative(f, r - k - 1);
    // Numerator polynomial sum_j binom(k,j) binom(r-2,k-j-1) x^{2r-k+2j-2}.
    const std::int64_t low = 2 * r - k - 2;
    Series<Rat> term(deriv.order() + low);
    for (std::int64_t j = 0; j <= k - 1; ++j) {
      const Rat c(binom(k, j) * binom(r - 2, k - j - 1));
      if (c == 0) continue;
      const auto shifted = series_shift(series_scale(deriv, c), low + 2 * j);
      term = series_add(term, shifted);
    }
    term = series_mul(term, geom_even_pow<Rat>(-(r + k - 1), term.order()));
    rhs = series_add(rhs, series_scale(term, make_rat(1, k * factorial(r - k - 2))));
  }

  return {series_pow(f, r), std::move(rhs)};
}

bool verify_lemma_expansion(std::int64_t r, std::int64_t order) {
  const auto sides = lemma_expansion_sides(r, order);
  return agree(sides.lhs, sides.rhs);
}

}  // namespace balancing
