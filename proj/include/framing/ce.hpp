#pragma once

// Chevalley-Eilenberg complexes of graded (dg) Lie algebras with
// coefficients in a module.

#include "framing/gca.hpp"
#include "framing/lie.hpp"
#include "framing/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace framing::ce {

using lie::GradedLieAlgebra;
using lie::Module;

struct Options {
  bool reduced = false;
  /// Quotient by Sym-words longer than the cap. Mandatory when some CE
  /// generator has degree <= 0.
  std::optional<int> word_cap;
  /// Degree window [lo, hi] to build; output is trusted on [lo+1, hi-1].
  /// Defaults to the full range when the complex is finite.
  std::optional<std::pair<int, int>> window;
};

/// The free graded-commutative algebra on the CE generators xi^i dual to
/// x_i, |xi^i| = 1 - |x_i|, named "<name>*".
gca::AlgebraHandle ce_algebra(const GradedLieAlgebra& g);

/// The CE differential on Sym(g^v[-1]):
///   Q xi^k = -sum_i (-1)^{|xi^i|} d_i^k xi^i
///            - 1/2 sum_{i,j} (-1)^{|x_i||xi^j|} c_{ij}^k xi^i xi^j.
/// Throws std::invalid_argument when Q^2 != 0 on a generator.
gca::Derivation ce_differential(const GradedLieAlgebra& g, const gca::AlgebraHandle& alg);

struct CEComplex {
  gca::AlgebraHandle algebra;
  LabeledSpace coeffs;
  std::vector<std::vector<gca::TensorMonomial>> monomials;  // per degree, index k - lo
  linalg::CochainComplex complex;
  Options options;
};

CEComplex ce_complex(const GradedLieAlgebra& g, const Module& v, const Options& opts = {});
CEComplex ce_complex(const GradedLieAlgebra& g, const Options& opts = {});

/// Betti numbers over the trusted interior of the window.
linalg::CohomologyDims ce_cohomology(const GradedLieAlgebra& g, const Module& v, const Options& opts = {},
                                     bool with_representatives = false);
linalg::CohomologyDims ce_cohomology(const GradedLieAlgebra& g, const Options& opts = {},
                                     bool with_representatives = false);

/// Reduced CE cohomology of L shifted down by n: the graded dimensions of
/// local functionals on R^n.
GradedDims local_functional_dims(const GradedLieAlgebra& l, int n, Options opts = {});

/// Human-readable form of a cochain given in the basis of degree k.
std::string format_cochain(const CEComplex& c, int k, const linalg::SparseVector& v);

}  // namespace framing::ce
