#pragma once

#include <random>

#include "qalg/qconf.hpp"

namespace qalg::testing {

/// Random power series with small integer coefficients.
inline ZSeries random_series(std::mt19937_64 &rng, int order, int lo = 0) {
  std::uniform_int_distribution<int> coef(-4, 4), count(0, 4), exp(lo, order);
  ZSeries s(order);
  for (int i = count(rng); i > 0; --i)
    s.add_term(exp(rng), Scalar(coef(rng), 1 + std::abs(coef(rng))));
  return s;
}

inline NCPoly random_poly(std::mt19937_64 &rng, std::size_t generators, int order, int max_len = 3) {
  std::uniform_int_distribution<int> count(1, 4), len(0, max_len), coef(-3, 3), zexp(0, 2);
  std::uniform_int_distribution<std::size_t> letter(0, generators - 1);
  NCPoly p(order);
  for (int t = count(rng); t > 0; --t) {
    Word w;
    for (int l = len(rng); l > 0; --l)
      w.letters.push_back(gen(letter(rng)));
    p.add_term(w, ZSeries::monomial(Scalar(coef(rng)), zexp(rng), order));
  }
  return p;
}

inline NCPoly poly(const std::string &text, const GeneratorNames &names, int order) {
  return expand_poly(*parse_expression(text, names), order);
}

inline TensorPoly tensor(const std::string &text, const GeneratorNames &names, int order) {
  return expand_tensor(*parse_expression(text, names), order);
}

} // namespace qalg::testing
