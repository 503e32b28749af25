#pragma once

// Closed-form cohomology rings: H(so(n)), H(BSO(n)) and the cohomology of
// simple Lie algebras through their exponents.

#include "framing/gca.hpp"
#include "framing/graded_dims.hpp"
#include "framing/lie.hpp"

#include <string>
#include <vector>

namespace framing::catalog {

/// A free graded-commutative ring: exterior on odd generators, polynomial
/// on even ones. provenance[i] tags generators[i] ("eta_j", "p_j",
/// "pfaffian", "pfaffian_partner", "exponent").
struct RingPresentation {
  std::string name;
  std::vector<gca::GeneratorSpec> generators;
  std::vector<std::string> provenance;

  gca::AlgebraHandle algebra() const { return gca::Algebra::make(generators); }
};

/// n = 2k+1: Lambda[eta_1..eta_k], |eta_j| = 4j-1.
/// n = 2k:   Lambda[eta_1..eta_{k-1}, eta'_k], |eta'_k| = n-1.
RingPresentation h_so(int n);

/// n = 2k+1: Q[p_1..p_k], |p_j| = 4j.  n = 2k: Q[p_1..p_{k-1}, p'_k], |p'_k| = n.
/// Generators are listed in the same order as in h_so(n), so the j-th
/// entries form a transgression pair.
RingPresentation h_bso(int n);

/// Exponents m_i of a simple Lie algebra.
std::vector<int> exponents(lie::SimpleType type);

/// Lambda on generators of degree 2 m_i + 1, named "y<degree>" (primed on
/// a repeated degree).
RingPresentation h_simple(lie::SimpleType type);

/// Dimensions of the ring in degrees [lo, hi], from its Poincare series.
/// reduced drops the unit. Generators must have positive degree.
GradedDims betti(const RingPresentation& pres, int lo, int hi, bool reduced = false);

/// Betti numbers in every degree for rings that are finite (all generators odd).
GradedDims betti(const RingPresentation& pres, bool reduced = false);

}  // namespace framing::catalog
