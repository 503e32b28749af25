#include "framing/lie.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace framing::lie {

namespace {

using Acc = std::map<std::size_t, Rational>;

void accumulate(Acc& acc, const SparseVector& v, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [k, c] : v) {
    Rational& x = acc[k];
    x += scale * c;
    if (x == 0) acc.erase(k);
  }
}

SparseVector scaled(const SparseVector& v, const Rational& s) {
  Acc acc;
  accumulate(acc, v, s);
  return linalg::make_sparse(acc);
}

SparseVector unit_vector(std::size_t i) { return SparseVector{{i, Rational(1)}}; }


}  // namespace

// ------------------------------------------------------ GradedLieAlgebra

GradedLieAlgebra::GradedLieAlgebra(std::vector<BasisElement> basis, std::string name)
    : name_(std::move(name)), basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& b : basis_)
    if (!seen.insert(b.name).second) throw std::invalid_argument("duplicate basis name '" + b.name + "'");
  brackets_.assign(basis_.size(), std::vector<SparseVector>(basis_.size()));
}

std::optional<std::size_t> GradedLieAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

void GradedLieAlgebra::set_bracket(std::size_t i, std::size_t j, SparseVector value) {
  if (i >= dim() || j >= dim()) throw std::out_of_range("bracket index out of range");
  std::sort(value.begin(), value.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Acc acc;
  accumulate(acc, value, 1);
  value = linalg::make_sparse(acc);
  const int want = degree(i) + degree(j);
  for (const auto& [k, c] : value) {
    if (k >= dim()) throw std::out_of_range("bracket term index out of range");
    if (degree(k) != want)
      throw std::invalid_argument("[" + basis_[i].name + ", " + basis_[j].name + "] has a term of degree " +
                                  std::to_string(degree(k)) + ", expected " + std::to_string(want));
  }
  const int sign = -koszul(degree(i), degree(j));
  if (i == j && sign == -1 && !value.empty())
    throw std::invalid_argument("even element '" + basis_[i].name + "' must have zero self-bracket");
  brackets_[j][i] = scaled(value, sign);
  brackets_[i][j] = std::move(value);
}

SparseVector GradedLieAlgebra::bracket(const SparseVector& a, const SparseVector& b) const {
  Acc acc;
  for (const auto& [i, ai] : a)
    for (const auto& [j, bj] : b) accumulate(acc, brackets_.at(i).at(j), ai * bj);
  return linalg::make_sparse(acc);
}

bool GradedLieAlgebra::is_abelian() const {
  for (const auto& row : brackets_)
    for (const auto& v : row)
      if (!v.empty()) return false;
  return true;
}

bool GradedLieAlgebra::is_ordinary() const {
  if (differential_ && !differential_->is_zero()) return false;
  return std::all_of(basis_.begin(), basis_.end(), [](const BasisElement& b) { return b.degree == 0; });
}

void GradedLieAlgebra::set_differential(SparseMatrix d) {
  if (d.rows() != dim() || d.cols() != dim()) throw std::invalid_argument("differential must be dim x dim");
  for (std::size_t i = 0; i < dim(); ++i)
    for (const auto& [k, c] : d.column(i))
      if (degree(k) != degree(i) + 1)
        throw std::invalid_argument("differential does not raise degree by one on '" + basis_[i].name + "'");
  differential_ = std::move(d);
}

void GradedLieAlgebra::set_pairing(Pairing p) {
  if (p.matrix.rows() != dim() || p.matrix.cols() != dim()) throw std::invalid_argument("pairing must be dim x dim");
  pairing_ = std::move(p);
}

// ------------------------------------------------------------- checks

std::optional<std::array<std::size_t, 3>> jacobi_violation(const GradedLieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector& xy = g.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        SparseVector lhs = g.bracket(unit_vector(i), g.bracket(j, k));
        Acc rhs;
        accumulate(rhs, g.bracket(xy, unit_vector(k)), 1);
        accumulate(rhs, g.bracket(unit_vector(j), g.bracket(i, k)), koszul(g.degree(i), g.degree(j)));
        if (lhs != linalg::make_sparse(rhs)) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

bool check_differential(const GradedLieAlgebra& g) {
  if (!g.differential()) return true;
  const SparseMatrix& d = *g.differential();
  if (!(d * d).is_zero()) return false;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      SparseVector lhs = d.apply(g.bracket(i, j));
      Acc rhs;
      accumulate(rhs, g.bracket(d.column(i), unit_vector(j)), 1);
      accumulate(rhs, g.bracket(unit_vector(i), d.column(j)), (g.degree(i) % 2) ? -1 : 1);
      if (lhs != linalg::make_sparse(rhs)) return false;
    }
  return true;
}

bool check_pairing(const GradedLieAlgebra& g) {
  if (!g.pairing()) return true;
  const auto& [k, m] = *g.pairing();
  const std::size_t n = g.dim();
  auto pair = [&](const SparseVector& a, const SparseVector& b) {
    Rational s = 0;
    for (const auto& [i, ai] : a)
      for (const auto& [j, bj] : b) s += ai * bj * m.at(i, j);
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = m.at(i, j);
      if (v != 0 && g.degree(i) + g.degree(j) + k != 0) return false;
      if (v != koszul(g.degree(i), g.degree(j)) * m.at(j, i)) return false;
    }
  if (linalg::rank(m) != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (pair(g.bracket(i, j), unit_vector(l)) != pair(unit_vector(i), g.bracket(j, l))) return false;
  if (g.differential()) {
    const auto& d = *g.differential();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = pair(d.column(i), unit_vector(j)) + ((g.degree(i) % 2) ? -1 : 1) * pair(unit_vector(i), d.column(j));
        if (s != 0) return false;
      }
  }
  return true;
}

void validate(const GradedLieAlgebra& g) {
  if (auto bad = jacobi_violation(g)) {
    const auto& b = g.basis();
    throw std::invalid_argument("graded Jacobi identity fails on (" + b[(*bad)[0]].name + ", " + b[(*bad)[1]].name +
                                ", " + b[(*bad)[2]].name + ")");
  }
  if (!check_differential(g)) throw std::invalid_argument("differential is not a square-zero bracket derivation");
  if (!check_pairing(g)) throw std::invalid_argument("pairing is not a nondegenerate invariant pairing");
}

SparseMatrix killing_form(const GradedLieAlgebra& g) {
  if (!g.is_ordinary()) throw std::invalid_argument("Killing form requires an ordinary Lie algebra");
  const std::size_t n = g.dim();
  std::vector<SparseMatrix> ad;
  for (std::size_t i = 0; i < n; ++i) {
    SparseMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) a.set_column(j, g.bracket(i, j));
    ad.push_back(std::move(a));
  }
  SparseMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseMatrix p = ad[i] * ad[j];
      Rational tr = 0;
      for (std::size_t t = 0; t < n; ++t) tr += p.at(t, t);
      k.add(i, j, tr);
    }
  return k;
}

// ------------------------------------------------------------- modules

Module trivial_module(const GradedLieAlgebra& g) {
  Module v;
  v.name = "trivial";
  v.basis = {{"1", 0}};
  v.action.assign(g.dim(), SparseMatrix(1, 1));
  return v;
}

Module adjoint_module(const GradedLieAlgebra& g) {
  Module v;
  v.name = "adjoint";
  v.basis = g.basis();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    SparseMatrix a(g.dim(), g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) a.set_column(j, g.bracket(i, j));
    v.action.push_back(std::move(a));
  }
  if (g.differential()) v.differential = g.differential();
  return v;
}

Module coadjoint_module(const GradedLieAlgebra& g) {
  if (!g.is_ordinary()) throw std::invalid_argument("coadjoint module requires an ordinary Lie algebra");
  Module v;
  v.name = "coadjoint";
  for (const auto& b : g.basis()) v.basis.push_back({b.name + "^*", 0});
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    SparseMatrix a(n, n);
    // x_i . xi^j = -sum_k c_{ik}^j xi^k
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [j, c] : g.bracket(i, k)) a.add(k, j, -c);
    v.action.push_back(std::move(a));
  }
  return v;
}

Module vector_module_so(int n) {
  if (n < 2) throw std::invalid_argument("so(n) requires n >= 2");
  Module v;
  v.name = "vector";
  for (int a = 0; a < n; ++a) v.basis.push_back({"v" + std::to_string(a + 1), 0});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      SparseMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      m.add(static_cast<std::size_t>(a), static_cast<std::size_t>(b), 1);
      m.add(static_cast<std::size_t>(b), static_cast<std::size_t>(a), -1);
      v.action.push_back(std::move(m));
    }
  return v;
}

std::optional<std::array<std::size_t, 2>> module_violation(const GradedLieAlgebra& g, const Module& v) {
  if (v.action.size() != g.dim()) return std::array<std::size_t, 2>{0, 0};
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      SparseMatrix lhs(v.dim(), v.dim());
      for (const auto& [k, c] : g.bracket(i, j)) lhs = lhs + c * v.action[k];
      SparseMatrix rhs = v.action[i] * v.action[j] -
                         Rational(koszul(g.degree(i), g.degree(j))) * (v.action[j] * v.action[i]);
      if (!(lhs == rhs)) return std::array<std::size_t, 2>{i, j};
    }
  return std::nullopt;
}

std::vector<SparseVector> invariants(const GradedLieAlgebra& g, const Module& v) {
  const std::size_t n = v.dim();
  SparseMatrix stacked(n * std::max<std::size_t>(g.dim(), 1), n);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [r, x] : v.action[i].column(c)) stacked.add(i * n + r, c, x);
  return linalg::kernel_basis(stacked);
}

// ------------------------------------------------------------- builders

namespace {

Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<Rational>(n, Rational(0))); }

Matrix commutator(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
      if (b[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] -= b[i][k] * a[k][j];
    }
  return c;
}

// Dense Gauss-Jordan inverse; throws on a singular input.
Matrix inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular coordinate system");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational f = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational g = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= g * a[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

GradedLieAlgebra from_matrices(const std::vector<Matrix>& basis, const std::vector<std::string>& names,
                               std::string name) {
  const std::size_t dim = basis.size();
  if (names.size() != dim) throw std::invalid_argument("one name per basis matrix required");
  std::vector<BasisElement> elems;
  for (const auto& nm : names) elems.push_back({nm, 0});
  GradedLieAlgebra g(std::move(elems), std::move(name));
  if (dim == 0) return g;
  const std::size_t n = basis[0].size();

  // Choose dim matrix positions on which the basis is independent.
  linalg::EchelonBasis probe(dim);
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t r = 0; r < n && positions.size() < dim; ++r)
    for (std::size_t c = 0; c < n && positions.size() < dim; ++c) {
      SparseVector row;
      for (std::size_t b = 0; b < dim; ++b)
        if (basis[b][r][c] != 0) row.emplace_back(b, basis[b][r][c]);
      if (!row.empty() && probe.insert(row)) positions.emplace_back(r, c);
    }
  if (positions.size() != dim) throw std::invalid_argument("basis matrices are linearly dependent");
  Matrix sub = zero_matrix(dim);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t b = 0; b < dim; ++b) sub[p][b] = basis[b][positions[p].first][positions[p].second];
  Matrix inv = inverse(sub);

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      Matrix c = commutator(basis[i], basis[j]);
      std::vector<Rational> coords(dim, Rational(0));
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t p = 0; p < dim; ++p) coords[k] += inv[k][p] * c[positions[p].first][positions[p].second];
      Matrix rebuilt = zero_matrix(n);
      SparseVector value;
      for (std::size_t k = 0; k < dim; ++k) {
        if (coords[k] == 0) continue;
        value.emplace_back(k, coords[k]);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t s = 0; s < n; ++s) rebuilt[r][s] += coords[k] * basis[k][r][s];
      }
      if (rebuilt != c) throw std::invalid_argument("matrix span is not closed under the commutator");
      g.set_bracket(i, j, std::move(value));
    }
  return g;
}

GradedLieAlgebra build_so(int n) {
  if (n < 2) throw std::invalid_argument("so(n) requires n >= 2");
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  const auto N = static_cast<std::size_t>(n);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      Matrix m = zero_matrix(N);
      m[a][b] = 1;
      m[b][a] = -1;
      basis.push_back(std::move(m));
      names.push_back(n <= 9 ? "E" + std::to_string(a + 1) + std::to_string(b + 1)
                             : "E" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
    }
  return from_matrices(basis, names, "so(" + std::to_string(n) + ")");
}

GradedLieAlgebra build_abelian(const std::vector<int>& degrees) {
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < degrees.size(); ++i) basis.push_back({"a" + std::to_string(i + 1), degrees[i]});
  return GradedLieAlgebra(std::move(basis), "abelian");
}

GradedLieAlgebra build_dR(const GradedLieAlgebra& g) {
  if (g.differential() && !g.differential()->is_zero())
    throw std::invalid_argument("build_dR expects a Lie algebra without differential");
  const std::size_t m = g.dim();
  std::vector<BasisElement> basis = g.basis();
  for (const auto& b : g.basis()) basis.push_back({b.name + "[1]", b.degree - 1});
  GradedLieAlgebra out(std::move(basis), g.name().empty() ? "dR" : g.name() + "_dR");
  auto shift = [m](const SparseVector& v) {
    SparseVector s;
    for (const auto& [k, c] : v) s.emplace_back(k + m, c);
    return s;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j)
      if (!g.bracket(i, j).empty()) out.set_bracket(i, j, g.bracket(i, j));
    // [x_i, s x_j] = s [x_i, x_j]; the reverse order follows by antisymmetry.
    for (std::size_t j = 0; j < m; ++j)
      if (!g.bracket(i, j).empty()) out.set_bracket(i, j + m, shift(g.bracket(i, j)));
  }
  SparseMatrix d(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) d.add(i, i + m, (g.degree(i) % 2) ? -1 : 1);
  out.set_differential(std::move(d));
  return out;
}

GradedLieAlgebra build_bf(const GradedLieAlgebra& g, int n) {
  if (!g.is_ordinary()) throw std::invalid_argument("BF target requires an ordinary Lie algebra");
  const std::size_t m = g.dim();
  std::vector<BasisElement> basis = g.basis();
  for (const auto& b : g.basis()) basis.push_back({b.name + "^*", 3 - n});
  GradedLieAlgebra out(std::move(basis), "bf_" + std::to_string(n) + "(" + g.name() + ")");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j)
      if (!g.bracket(i, j).empty()) out.set_bracket(i, j, g.bracket(i, j));
    // [x_i, xi^j] = -sum_k c_{ik}^j xi^k
    std::vector<Acc> images(m);
    for (std::size_t k = 0; k < m; ++k)
      for (const auto& [j, c] : g.bracket(i, k)) {
        Rational& x = images[j][k + m];
        x -= c;
      }
    for (std::size_t j = 0; j < m; ++j) {
      SparseVector v = linalg::make_sparse(images[j]);
      if (!v.empty()) out.set_bracket(i, j + m, std::move(v));
    }
  }
  SparseMatrix pm(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    pm.add(i, i + m, 1);
    pm.add(i + m, i, 1);
  }
  out.set_pairing(Pairing{n - 3, std::move(pm)});
  return out;
}

GradedLieAlgebra build_cs(const GradedLieAlgebra& g) {
  GradedLieAlgebra out = g;
  out.set_pairing(Pairing{0, killing_form(g)});
  return out;
}

// ------------------------------------------------------------- SimpleType

SimpleType SimpleType::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ',' && c != ' ' && c != '_') s += c;
  if (s.size() < 2) throw std::invalid_argument("simple type must look like A1 or G2");
  SimpleType t;
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  try {
    std::size_t used = 0;
    t.rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed simple type '" + std::string(text) + "'");
  }
  if (!t.valid()) throw std::invalid_argument("invalid simple type '" + std::string(text) + "'");
  return t;
}

bool SimpleType::valid() const {
  switch (series) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 1;
    case 'C': return rank >= 1;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::size_t SimpleType::dimension() const {
  const auto r = static_cast<std::size_t>(rank);
  switch (series) {
    case 'A': return r * (r + 2);
    case 'B':
    case 'C': return r * (2 * r + 1);
    case 'D': return r * (2 * r - 1);
    case 'E': return rank == 6 ? 78 : rank == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
    default: throw std::invalid_argument("invalid simple type");
  }
}

std::string SimpleType::to_string() const { return std::string(1, series) + std::to_string(rank); }

// ------------------------------------------------------------- file format

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw std::invalid_argument(where + " must be an object");
  for (const auto& [key, val] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw std::invalid_argument("unknown field '" + key + "' in " + where);
  }
}

Rational coeff_of(const json& j, const std::string& where) {
  if (!j.is_string()) throw std::invalid_argument(where + ": coefficients are rational strings \"p/q\"");
  return parse_rational(j.get<std::string>());
}

std::size_t index_of_json(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= dim)
    throw std::invalid_argument(where + ": index out of range");
  return static_cast<std::size_t>(j.get<long long>());
}

SparseMatrix matrix_of(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim) throw std::invalid_argument(where + " must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  SparseMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!j[r].is_array() || j[r].size() != dim) throw std::invalid_argument(where + ": ragged row");
    for (std::size_t c = 0; c < dim; ++c) m.add(r, c, coeff_of(j[r][c], where));
  }
  return m;
}

json matrix_json(const SparseMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

GradedLieAlgebra parse_lie_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("Lie algebra file is not valid JSON: ") + e.what());
  }
  reject_unknown(doc, {"name", "basis", "brackets", "differential", "pairing"}, "Lie algebra document");
  if (!doc.contains("basis") || !doc["basis"].is_array()) throw std::invalid_argument("missing 'basis' array");
  std::vector<BasisElement> basis;
  for (const auto& b : doc["basis"]) {
    reject_unknown(b, {"name", "degree"}, "basis entry");
    if (!b.contains("name") || !b["name"].is_string() || !b.contains("degree") || !b["degree"].is_number_integer())
      throw std::invalid_argument("basis entries need a string 'name' and integer 'degree'");
    basis.push_back({b["name"].get<std::string>(), b["degree"].get<int>()});
  }
  GradedLieAlgebra g(std::move(basis), doc.value("name", std::string("file")));
  const std::size_t dim = g.dim();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw std::invalid_argument("'brackets' must be an array");
    for (const auto& br : doc["brackets"]) {
      reject_unknown(br, {"i", "j", "terms"}, "bracket entry");
      std::size_t i = index_of_json(br.value("i", json()), dim, "bracket i");
      std::size_t j = index_of_json(br.value("j", json()), dim, "bracket j");
      if (i > j || (i == j && g.degree(i) % 2 == 0))
        throw std::invalid_argument("bracket entries are given for i < j (or i == j on odd elements)");
      if (!seen.emplace(i, j).second) throw std::invalid_argument("bracket entry repeated");
      SparseVector value;
      if (!br.contains("terms") || !br["terms"].is_array()) throw std::invalid_argument("bracket entry needs 'terms'");
      for (const auto& t : br["terms"]) {
        reject_unknown(t, {"k", "coeff"}, "bracket term");
        value.emplace_back(index_of_json(t.value("k", json()), dim, "bracket term k"),
                           coeff_of(t.value("coeff", json()), "bracket term"));
      }
      g.set_bracket(i, j, std::move(value));
    }
  }
  if (doc.contains("differential")) g.set_differential(matrix_of(doc["differential"], dim, "differential"));
  if (doc.contains("pairing")) {
    const auto& p = doc["pairing"];
    reject_unknown(p, {"degree", "matrix"}, "pairing");
    if (!p.contains("degree") || !p["degree"].is_number_integer() || !p.contains("matrix"))
      throw std::invalid_argument("pairing needs integer 'degree' and 'matrix'");
    g.set_pairing(Pairing{p["degree"].get<int>(), matrix_of(p["matrix"], dim, "pairing matrix")});
  }
  validate(g);
  return g;
}

GradedLieAlgebra load_lie_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open Lie algebra file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lie_json(ss.str());
}

std::string to_lie_json(const GradedLieAlgebra& g) {
  json doc;
  doc["name"] = g.name();
  doc["basis"] = json::array();
  for (const auto& b : g.basis()) doc["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
  doc["brackets"] = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      const auto& v = g.bracket(i, j);
      if (v.empty()) continue;
      json terms = json::array();
      for (const auto& [k, c] : v) terms.push_back({{"k", k}, {"coeff", c.get_str()}});
      doc["brackets"].push_back({{"i", i}, {"j", j}, {"terms", terms}});
    }
  if (g.differential()) doc["differential"] = matrix_json(*g.differential());
  if (g.pairing()) doc["pairing"] = {{"degree", g.pairing()->degree}, {"matrix", matrix_json(g.pairing()->matrix)}};
  return doc.dump(2);
}

}  // namespace framing::lie
