#pragma once

// The E2 page C (x) H(so(n)) (x) H(BSO(n)) restricted to its Pontryagin
// ideal, the d3 differential eta_j -> p_j, and the resulting E3 page.

#include "framing/gca.hpp"
#include "framing/graded_dims.hpp"
#include "framing/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace framing::koszul {

enum class Sector {
  Ideal,    // C (x) eta^m p^k with k > 0
  Reduced,  // C (x) eta^m p^k with m + k > 0
};

struct E2Page {
  int n = 0;
  LabeledSpace coeffs;
  gca::AlgebraHandle algebra;  // h_so(n) and h_bso(n) generators
  std::vector<std::size_t> eta, p;  // eta[j] transgresses to p[j]
  int lo = 0, hi = 0;
  std::vector<std::vector<gca::TensorMonomial>> ideal, reduced;  // per degree, index k - lo

  const std::vector<gca::TensorMonomial>& basis(Sector s, int k) const;
  std::size_t p_length(const gca::Monomial& m) const;
};

/// Default internal-degree window [0, n + 4].
std::pair<int, int> default_window(int n);

E2Page build_e2(int n, const LabeledSpace& coeffs, std::optional<std::pair<int, int>> window = std::nullopt);

/// The derivation eta_j -> p_j, eta'_k -> p'_k, p -> 0 on the page's algebra.
gca::Derivation d3_derivation(const E2Page& page);

/// (sector, d) as a cochain complex on the page window, with
/// d(c (x) x) = (-1)^{|c|} c (x) D(x).
linalg::CochainComplex apply_d3(const E2Page& page, Sector sector = Sector::Ideal);

/// A linear combination of c (x) monomial basis vectors.
using TensorElement = std::map<gca::TensorMonomial, Rational>;
std::string format(const E2Page& page, const TensorElement& e);

struct E3Result {
  GradedDims dims;
  std::map<int, std::vector<TensorElement>> representatives;
  std::string provenance;  // "direct" or "closed-form"
};

/// Cohomology of (I, d3) over the trusted interior of the window.
E3Result e3_direct(int n, const LabeledSpace& coeffs, std::optional<std::pair<int, int>> window = std::nullopt,
                   bool with_representatives = false);

/// C (x) Lambda_red[eta] with each class moved up one degree.
E3Result e3_closed_form(int n, const GradedDims& coeffs);

/// c (x) D(eta_{i1} ... eta_{il}) for every coefficient vector c and
/// nonempty index set landing in the given degree: the alternating sums
/// linear in the Pontryagin classes. Each is checked to be d3-closed and
/// independent modulo the image; std::logic_error otherwise.
std::vector<TensorElement> representatives_linear_in_p(int n, const LabeledSpace& coeffs, int degree);

}  // namespace framing::koszul
