#pragma once

// Brute-force model of the fiber complex: C(so(n), Sym^{>0}(so(n)^v[-2]))
// tensored with coefficients and shifted by n, built from the Weil
// algebra of so(n) without any invariant theory.

#include "framing/ce.hpp"
#include "framing/gca.hpp"
#include "framing/graded_dims.hpp"
#include "framing/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace framing::weil {

/// Largest n built without allow_large.
inline constexpr int kMaxDefaultDim = 5;

struct Options {
  /// Cohomological window (internal degree minus n); default
  /// [-n, n+1+c] with c the top coefficient degree.
  std::optional<std::pair<int, int>> window;
  /// Optional cap on the number of curvature factors w.
  std::optional<int> word_cap;
  bool allow_large = false;
};

/// Weil algebra of so(n): th_ab in degree 1, w_ab in degree 2,
///   d th^k = -1/2 sum c^k_ij th^i th^j + w^k,   d w^k = -sum c^k_ij th^i w^j.
struct WeilAlgebra {
  gca::AlgebraHandle algebra;
  gca::Derivation d;
  std::vector<std::size_t> theta, curvature;  // indexed by the so(n) basis
};

WeilAlgebra weil_algebra(int n);

struct FiberComplex {
  int n = 0;
  LabeledSpace coeffs;
  gca::AlgebraHandle algebra;
  linalg::CochainComplex complex;  // cohomological degrees
  std::optional<int> word_cap;
};

/// Basis: monomials with at least one w, tensored with the coefficient
/// basis; differential d (x) 1.
FiberComplex build_fiber(int n, const LabeledSpace& coeffs, const Options& opts = {});

/// Same construction with a genuine coefficient complex (for instance the
/// reduced CE complex of L): d(m (x) c) = dm (x) c + (-1)^{|m|} m (x) d_L c.
/// Coefficient degrees are internal degrees; only n = 3 is supported.
FiberComplex build_fiber(int n, const linalg::CochainComplex& coeffs, const Options& opts = {});

linalg::CohomologyDims oracle_cohomology(const FiberComplex& f);

struct CrossCheck {
  bool match = false;
  GradedDims oracle;  // cohomological degrees
  GradedDims e3;      // internal degrees shifted down by n
  std::vector<std::string> diffs;
};

/// Oracle cohomology against e3_direct over the same trusted window.
CrossCheck cross_check(int n, const LabeledSpace& coeffs, const Options& opts = {});

/// Number of basis vectors the fiber complex would have.
std::size_t fiber_size(int n, const GradedDims& coeffs, const Options& opts = {});

}  // namespace framing::weil
