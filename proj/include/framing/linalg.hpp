#pragma once

// Exact sparse linear algebra over Q and cohomology of finite cochain
// complexes.

#include "framing/graded_dims.hpp"
#include "framing/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace framing::linalg {

/// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector make_sparse(const std::map<std::size_t, Rational>& entries);
SparseVector scaled_to_primitive(const SparseVector& v);

/// Column-major sparse rational matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  /// Accumulates v into entry (r, c).
  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational at(std::size_t r, std::size_t c) const;
  const SparseVector& column(std::size_t c) const { return columns_.at(c); }
  void set_column(std::size_t c, SparseVector v);

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& x) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Rational& s, const SparseMatrix& a);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> columns_;
};

/// Exact rank over Q. The matrix is split into the connected components of
/// its row/column incidence graph, and each block is reduced by
/// fraction-free sparse elimination (smallest-magnitude pivot, then fewest
/// nonzeros), keeping every row primitive.
std::size_t rank(const SparseMatrix& m);

/// Basis of the null space {x : m x = 0}.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Incrementally grown row-echelon basis of a subspace of Q^dim.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Returns true when v was independent of the current span (and adds it).
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  std::size_t rank() const { return pivots_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  struct Row {
    std::vector<std::size_t> idx;
    std::vector<Integer> val;
  };
  Row reduce(Row r) const;

  std::size_t dim_;
  std::map<std::size_t, Row> pivots_;
};

struct ShapeError : std::invalid_argument {
  ShapeError(int degree, const std::string& what)
      : std::invalid_argument("degree " + std::to_string(degree) + ": " + what), degree(degree) {}
  int degree;
};

struct UntrustedDegreeError : std::out_of_range {
  explicit UntrustedDegreeError(const std::string& what) : std::out_of_range(what) {}
};

/// Finite window [lo, hi] of a cochain complex. basis[k - lo] labels C^k and
/// diff[k - lo] is d_k : C^k -> C^{k+1} for lo <= k < hi.
struct CochainComplex {
  int lo = 0;
  int hi = -1;
  std::vector<std::vector<std::string>> basis;
  std::vector<SparseMatrix> diff;

  CochainComplex() = default;
  CochainComplex(int lo, int hi);

  std::size_t dim(int k) const;
  const SparseMatrix& d(int k) const;
  SparseMatrix& d(int k);
  GradedDims dims() const;
  std::size_t total_size() const;
};

/// True iff every composable d_{k+1} d_k vanishes. Throws ShapeError naming
/// the offending degree when a matrix does not match the adjacent bases.
bool verify_complex(const CochainComplex& c);

struct CohomologyDims {
  GradedDims dims;
  /// Per degree: cocycles completing a basis of ker d modulo im d.
  std::map<int, std::vector<SparseVector>> representatives;
};

/// Betti numbers of the degrees [from, to], which must lie in the interior
/// [lo + 1, hi - 1] of the window; UntrustedDegreeError otherwise.
CohomologyDims cohomology(const CochainComplex& c, int from, int to, bool with_representatives = false);

/// Cohomology over the whole interior of the window.
CohomologyDims cohomology(const CochainComplex& c, bool with_representatives = false);

}  // namespace framing::linalg
