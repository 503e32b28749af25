#pragma once

// Finite-dimensional graded Lie algebras given by structure constants, with
// optional internal differential and invariant pairing, plus the builders
// for every algebra the anomaly computations use.

#include "framing/linalg.hpp"
#include "framing/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace framing::lie {

using linalg::SparseMatrix;
using linalg::SparseVector;

struct BasisElement {
  std::string name;
  int degree = 0;
};

/// Pairing of degree k: <x_i, x_j> = matrix(i, j), nonzero only when
/// |x_i| + |x_j| + k = 0.
struct Pairing {
  int degree = 0;
  SparseMatrix matrix;
};

class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  explicit GradedLieAlgebra(std::vector<BasisElement> basis, std::string name = {});

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(std::size_t i) const { return basis_.at(i).degree; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Sets [x_i, x_j] and fills [x_j, x_i] by graded antisymmetry. Throws if
  /// the value has the wrong degree or i == j with x_i even and value != 0.
  void set_bracket(std::size_t i, std::size_t j, SparseVector value);
  const SparseVector& bracket(std::size_t i, std::size_t j) const { return brackets_.at(i).at(j); }
  /// Bilinear extension to arbitrary (homogeneous or not) vectors.
  SparseVector bracket(const SparseVector& a, const SparseVector& b) const;
  bool is_abelian() const;
  bool is_ordinary() const;  // concentrated in degree 0, no differential

  /// Column i holds d(x_i).
  void set_differential(SparseMatrix d);
  const std::optional<SparseMatrix>& differential() const { return differential_; }

  void set_pairing(Pairing p);
  const std::optional<Pairing>& pairing() const { return pairing_; }

 private:
  std::string name_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<SparseVector>> brackets_;
  std::optional<SparseMatrix> differential_;
  std::optional<Pairing> pairing_;
};

/// Koszul sign (-1)^{ab}.
inline int koszul(int a, int b) { return ((a % 2) != 0 && (b % 2) != 0) ? -1 : 1; }

/// First basis triple violating
///   [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]],
/// or nullopt when the graded Jacobi identity holds exactly.
std::optional<std::array<std::size_t, 3>> jacobi_violation(const GradedLieAlgebra& g);
inline bool check_jacobi(const GradedLieAlgebra& g) { return !jacobi_violation(g); }

/// d raises degree by one, squares to zero and is a bracket derivation.
bool check_differential(const GradedLieAlgebra& g);
/// Graded symmetric, of the declared degree, nondegenerate, invariant
/// (<[x,y],z> = <x,[y,z]>) and compatible with d.
bool check_pairing(const GradedLieAlgebra& g);
/// Runs every structural check, throwing std::invalid_argument with the
/// first failure.
void validate(const GradedLieAlgebra& g);

/// Killing form tr(ad x ad y) of an ordinary Lie algebra.
SparseMatrix killing_form(const GradedLieAlgebra& g);

// ------------------------------------------------------------- modules

struct Module {
  std::string name;
  std::vector<BasisElement> basis;
  /// action[i] is the matrix of x_i acting on the module.
  std::vector<SparseMatrix> action;
  std::optional<SparseMatrix> differential;

  std::size_t dim() const { return basis.size(); }
};

Module trivial_module(const GradedLieAlgebra& g);
Module adjoint_module(const GradedLieAlgebra& g);
Module coadjoint_module(const GradedLieAlgebra& g);
/// Defining representation on Q^n of build_so(n).
Module vector_module_so(int n);

/// First pair (i, j) with rho([x_i,x_j]) != [rho(x_i), rho(x_j)] (graded
/// commutator), or nullopt for a genuine representation.
std::optional<std::array<std::size_t, 2>> module_violation(const GradedLieAlgebra& g, const Module& v);

/// Basis of the invariants V^g = {v : x v = 0 for all x}.
std::vector<SparseVector> invariants(const GradedLieAlgebra& g, const Module& v);

// ------------------------------------------------------------- builders

using Matrix = std::vector<std::vector<Rational>>;

/// Lie algebra spanned by the given square matrices under the commutator.
/// Throws if the span is not closed.
GradedLieAlgebra from_matrices(const std::vector<Matrix>& basis, const std::vector<std::string>& names,
                               std::string name);

/// so(n): antisymmetric matrices E_ab = e_a e_b^T - e_b e_a^T, a < b, in degree 0.
GradedLieAlgebra build_so(int n);

/// Abelian graded Lie algebra with one basis element per listed degree.
GradedLieAlgebra build_abelian(const std::vector<int>& degrees);

/// g_dR = g[1] (+) g with differential the identity from g[1] onto g and
/// bracket that of g (x) Q[e]/(e^2), |e| = -1.
GradedLieAlgebra build_dR(const GradedLieAlgebra& g);

/// BF target g (+) g*[n-3] with the coadjoint action and the canonical
/// pairing of degree n-3. Requires an ordinary g.
GradedLieAlgebra build_bf(const GradedLieAlgebra& g, int n);

/// Ordinary g with its Killing form as a degree-0 pairing (Chern-Simons target).
GradedLieAlgebra build_cs(const GradedLieAlgebra& g);

struct SimpleType {
  char series = 'A';
  int rank = 1;

  /// Accepts "A1", "a1", "A,1" and "G2".
  static SimpleType parse(std::string_view text);
  bool valid() const;
  std::size_t dimension() const;
  std::string to_string() const;
  bool operator==(const SimpleType&) const = default;
};

/// Default dimension cap for brute-force Chevalley-Eilenberg work.
inline constexpr std::size_t kDeskScaleDim = 28;

/// Split simple Lie algebra over Q. A, B, C, D use their matrix
/// realizations (sl, split so, sp); E uses the Frenkel-Kac cocycle
/// construction on the root lattice; F4 and G2 are the fixed points of the
/// diagram automorphisms of E6 and D4.
GradedLieAlgebra build_simple(SimpleType type);

/// Simply-laced algebra from its Cartan matrix (Frenkel-Kac).
GradedLieAlgebra build_simply_laced(const std::vector<std::vector<int>>& cartan, std::string name);

/// Fixed-point subalgebra of the automorphism of a simply-laced algebra
/// induced by a permutation of its simple roots.
GradedLieAlgebra fold_simply_laced(const std::vector<std::vector<int>>& cartan, const std::vector<int>& perm,
                                   std::string name);

// ------------------------------------------------------------- file format

/// Reads the JSON Lie algebra document
///   {"basis": [{"name", "degree"}],
///    "brackets": [{"i", "j", "terms": [{"k", "coeff": "p/q"}]}],
///    "differential": [[...]], "pairing": {"degree", "matrix": [[...]]}}
/// with bracket entries for i < j only (odd i == j self-brackets allowed).
/// Unknown fields are rejected and the result is validated.
GradedLieAlgebra parse_lie_json(std::string_view text);
GradedLieAlgebra load_lie_file(const std::string& path);
std::string to_lie_json(const GradedLieAlgebra& g);

}  // namespace framing::lie
