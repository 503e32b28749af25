#pragma once

#include "framing/gca.hpp"

#include <random>
#include <vector>

namespace test_support {

inline framing::Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  framing::Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Random element with up to max_terms monomials of exponent <= 2.
inline framing::gca::Element random_element(const framing::gca::AlgebraHandle& alg, std::mt19937& rng,
                                            int max_terms = 4) {
  using namespace framing::gca;
  std::uniform_int_distribution<int> terms(0, max_terms), exp(0, 2);
  Element e(alg);
  const int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    Monomial m = unit_monomial(*alg);
    for (std::size_t i = 0; i < alg->size(); ++i) {
      int x = exp(rng);
      if (alg->is_odd(i)) x = x % 2;
      m.exps[i] = static_cast<Exponent>(x);
    }
    e.add_term(m, random_rational(rng));
  }
  return e;
}

/// Random homogeneous element: one random monomial's degree, other terms filtered to it.
inline framing::gca::Element random_homogeneous(const framing::gca::AlgebraHandle& alg, std::mt19937& rng) {
  using namespace framing::gca;
  for (;;) {
    Element e = random_element(alg, rng, 6);
    if (e.is_zero()) continue;
    const int d = degree(*alg, e.terms().begin()->first);
    Element out(alg);
    for (const auto& [m, c] : e.terms())
      if (degree(*alg, m) == d) out.add_term(m, c);
    return out;
  }
}

}  // namespace test_support
