#include "framing/lie.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace framing::lie {

namespace {

Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<Rational>(n, Rational(0))); }

std::string pair_name(const std::string& prefix, std::size_t a, std::size_t b) {
  return prefix + std::to_string(a + 1) + "_" + std::to_string(b + 1);
}

GradedLieAlgebra build_sl(int n) {
  const auto N = static_cast<std::size_t>(n);
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i + 1 < N; ++i) {
    Matrix h = zero_matrix(N);
    h[i][i] = 1;
    h[i + 1][i + 1] = -1;
    basis.push_back(std::move(h));
    names.push_back("H" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      Matrix e = zero_matrix(N);
      e[i][j] = 1;
      basis.push_back(std::move(e));
      names.push_back(pair_name("E", i, j));
    }
  return from_matrices(basis, names, "sl(" + std::to_string(n) + ")");
}

// so(N) preserving the antidiagonal form: X_{a,b} + X_{b',a'} = 0 with a' = N-1-a.
GradedLieAlgebra build_split_so(int n) {
  const auto N = static_cast<std::size_t>(n);
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      const std::size_t ra = N - 1 - b, rb = N - 1 - a;
      if (std::make_pair(a, b) >= std::make_pair(ra, rb)) continue;
      Matrix m = zero_matrix(N);
      m[a][b] = 1;
      m[ra][rb] = -1;
      basis.push_back(std::move(m));
      names.push_back(pair_name("X", a, b));
    }
  return from_matrices(basis, names, "so(" + std::to_string(n) + ")");
}

// sp(2r) for the form [[0, I], [-I, 0]]: blocks [[A, B], [C, -A^T]] with B, C symmetric.
GradedLieAlgebra build_sp(int r) {
  const auto R = static_cast<std::size_t>(r);
  const std::size_t N = 2 * R;
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < R; ++j) {
      Matrix m = zero_matrix(N);
      m[i][j] += 1;
      m[R + j][R + i] -= 1;
      basis.push_back(std::move(m));
      names.push_back(pair_name("A", i, j));
    }
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = i; j < R; ++j) {
      Matrix b = zero_matrix(N), c = zero_matrix(N);
      b[i][R + j] = 1;
      b[j][R + i] = 1;
      c[R + i][j] = 1;
      c[R + j][i] = 1;
      basis.push_back(std::move(b));
      names.push_back(pair_name("B", i, j));
      basis.push_back(std::move(c));
      names.push_back(pair_name("C", i, j));
    }
  return from_matrices(basis, names, "sp(" + std::to_string(2 * r) + ")");
}

std::vector<std::vector<int>> cartan_from_edges(int rank, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  for (auto [i, j] : edges) a[i][j] = a[j][i] = -1;
  return a;
}

std::vector<std::vector<int>> cartan_e(int rank) {
  std::vector<std::pair<int, int>> edges{{0, 2}, {2, 3}, {3, 4}, {1, 3}};
  for (int i = 4; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
  return cartan_from_edges(rank, edges);
}

using Root = std::vector<int>;

Root negate(Root r) {
  for (int& x : r) x = -x;
  return r;
}

// Root system, basis layout and cocycle of the Frenkel-Kac construction.
struct RootData {
  std::vector<std::vector<int>> cartan;
  std::vector<Root> positive;  // in order of generation, simple roots first
  std::map<Root, std::size_t> index;  // signed root -> basis index

  std::size_t rank() const { return cartan.size(); }

  explicit RootData(std::vector<std::vector<int>> a) : cartan(std::move(a)) {
    const std::size_t r = rank();
    std::map<Root, bool> known;
    for (std::size_t i = 0; i < r; ++i) {
      Root s(r, 0);
      s[i] = 1;
      positive.push_back(s);
      known[s] = true;
    }
    for (std::size_t t = 0; t < positive.size(); ++t)
      for (std::size_t i = 0; i < r; ++i) {
        Root beta = positive[t];
        int p = 0;
        for (Root down = beta;;) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < r; ++j) pairing += beta[j] * cartan[j][i];
        if (p - pairing > 0) {
          beta[i] += 1;
          if (!known.count(beta)) {
            known[beta] = true;
            positive.push_back(beta);
          }
        }
      }
    for (std::size_t k = 0; k < positive.size(); ++k) {
      index[positive[k]] = r + k;
      index[negate(positive[k])] = r + positive.size() + k;
    }
  }

  std::size_t dim() const { return rank() + 2 * positive.size(); }

  int epsilon(const Root& a, const Root& b) const {
    int e = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (i == j || (i < j && cartan[i][j] != 0)) e += a[i] * b[j];
    return (e % 2 == 0) ? 1 : -1;
  }

  int inner(std::size_t i, const Root& b) const {
    int s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += cartan[i][j] * b[j];
    return s;
  }

  Root root_of(std::size_t basis_index) const {
    const std::size_t r = rank(), n = positive.size();
    if (basis_index < r + n) return positive[basis_index - r];
    return negate(positive[basis_index - r - n]);
  }
};

GradedLieAlgebra frenkel_kac(const RootData& rd, std::string name) {
  const std::size_t r = rd.rank(), n = rd.positive.size();
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < r; ++i) basis.push_back({"h" + std::to_string(i + 1), 0});
  for (std::size_t k = 0; k < n; ++k) basis.push_back({"e" + std::to_string(k + 1), 0});
  for (std::size_t k = 0; k < n; ++k) basis.push_back({"f" + std::to_string(k + 1), 0});
  GradedLieAlgebra g(std::move(basis), std::move(name));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = r; a < r + 2 * n; ++a) {
      int c = rd.inner(i, rd.root_of(a));
      if (c != 0) g.set_bracket(i, a, SparseVector{{a, Rational(c)}});
    }
  for (std::size_t a = r; a < r + 2 * n; ++a)
    for (std::size_t b = a + 1; b < r + 2 * n; ++b) {
      const Root alpha = rd.root_of(a), beta = rd.root_of(b);
      Root sum(r);
      bool zero = true;
      for (std::size_t i = 0; i < r; ++i) {
        sum[i] = alpha[i] + beta[i];
        zero = zero && sum[i] == 0;
      }
      if (zero) {
        SparseVector h;
        for (std::size_t i = 0; i < r; ++i)
          if (alpha[i] != 0) h.emplace_back(i, Rational(-alpha[i]));
        g.set_bracket(a, b, std::move(h));
      } else if (auto it = rd.index.find(sum); it != rd.index.end()) {
        g.set_bracket(a, b, SparseVector{{it->second, Rational(rd.epsilon(alpha, beta))}});
      }
    }
  return g;
}

}  // namespace

GradedLieAlgebra build_simply_laced(const std::vector<std::vector<int>>& cartan, std::string name) {
  return frenkel_kac(RootData(cartan), std::move(name));
}

GradedLieAlgebra fold_simply_laced(const std::vector<std::vector<int>>& cartan, const std::vector<int>& perm,
                                   std::string name) {
  const RootData rd(cartan);
  const GradedLieAlgebra g = frenkel_kac(rd, "unfolded");
  const std::size_t r = rd.rank(), n = rd.positive.size(), dim = rd.dim();
  if (perm.size() != r) throw std::invalid_argument("permutation must act on the simple roots");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (cartan[perm[i]][perm[j]] != cartan[i][j])
        throw std::invalid_argument("permutation is not a diagram automorphism");

  // Images of the basis under the automorphism, generated from the simple root vectors.
  std::vector<SparseVector> image(dim);
  for (std::size_t i = 0; i < r; ++i) {
    const auto s = static_cast<std::size_t>(perm[i]);
    image[i] = {{s, Rational(1)}};
    image[r + i] = {{r + s, Rational(1)}};
    image[r + n + i] = {{r + n + s, Rational(1)}};
  }
  for (std::size_t k = r; k < n; ++k) {
    const Root& beta = rd.positive[k];
    for (std::size_t i = 0; i < r; ++i) {
      Root rest = beta;
      rest[i] -= 1;
      auto it = rd.index.find(rest);
      if (it == rd.index.end() || it->second >= r + n) continue;
      Root simple(r, 0);
      simple[i] = 1;
      const std::size_t pos = it->second, neg = rd.index.at(negate(rest));
      const Rational ep(rd.epsilon(simple, rest)), en(rd.epsilon(negate(simple), negate(rest)));
      SparseVector up = g.bracket(image[r + i], image[pos]);
      SparseVector down = g.bracket(image[r + n + i], image[neg]);
      for (auto& [idx, c] : up) c /= ep;
      for (auto& [idx, c] : down) c /= en;
      image[r + k] = std::move(up);
      image[r + n + k] = std::move(down);
      break;
    }
  }
  SparseMatrix fixed(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (const auto& [idx, c] : image[a]) fixed.add(idx, a, c);
    fixed.add(a, a, -1);
  }
  std::vector<SparseVector> kernel = linalg::kernel_basis(fixed);

  // Coordinates are read where exactly one kernel vector is supported.
  std::map<std::size_t, int> support;
  for (const auto& v : kernel)
    for (const auto& [idx, c] : v) ++support[idx];
  std::vector<std::size_t> free;
  for (const auto& v : kernel) {
    auto it = std::find_if(v.begin(), v.end(), [&](const auto& e) { return e.second == 1 && support[e.first] == 1; });
    if (it == v.end()) throw std::logic_error("kernel basis without a free coordinate");
    free.push_back(it->first);
  }
  std::vector<BasisElement> basis;
  for (std::size_t t = 0; t < kernel.size(); ++t) basis.push_back({g.basis()[free[t]].name, 0});
  GradedLieAlgebra out(std::move(basis), std::move(name));
  for (std::size_t a = 0; a < kernel.size(); ++a)
    for (std::size_t b = a + 1; b < kernel.size(); ++b) {
      SparseVector w = g.bracket(kernel[a], kernel[b]);
      SparseVector coords;
      std::map<std::size_t, Rational> rebuilt;
      for (std::size_t t = 0; t < kernel.size(); ++t) {
        Rational c = 0;
        for (const auto& [idx, x] : w)
          if (idx == free[t]) c = x;
        if (c == 0) continue;
        coords.emplace_back(t, c);
        for (const auto& [idx, x] : kernel[t]) {
          rebuilt[idx] += c * x;
          if (rebuilt[idx] == 0) rebuilt.erase(idx);
        }
      }
      if (linalg::make_sparse(rebuilt) != w) throw std::logic_error("fixed points are not closed under the bracket");
      out.set_bracket(a, b, std::move(coords));
    }
  return out;
}

GradedLieAlgebra build_simple(SimpleType type) {
  if (!type.valid()) throw std::invalid_argument("invalid simple type " + type.to_string());
  GradedLieAlgebra g;
  switch (type.series) {
    case 'A': g = build_sl(type.rank + 1); break;
    case 'B': g = build_split_so(2 * type.rank + 1); break;
    case 'C': g = build_sp(type.rank); break;
    case 'D': g = build_split_so(2 * type.rank); break;
    case 'E': g = build_simply_laced(cartan_e(type.rank), type.to_string()); break;
    case 'F': g = fold_simply_laced(cartan_e(6), {5, 1, 4, 3, 2, 0}, "F4"); break;
    case 'G': g = fold_simply_laced(cartan_from_edges(4, {{0, 1}, {1, 2}, {1, 3}}), {2, 1, 3, 0}, "G2"); break;
    default: throw std::invalid_argument("invalid simple type");
  }
  g.set_name(type.to_string());
  return g;
}

}  // namespace framing::lie
