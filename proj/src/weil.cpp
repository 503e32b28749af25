#include "framing/weil.hpp"

#include "framing/koszul.hpp"
#include "framing/lie.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace framing::weil {

namespace {

int sign_of(int e) { return (e % 2 == 0) ? 1 : -1; }

void check_size(int n, const Options& opts) {
  if (n < 2) throw std::invalid_argument("so(n) requires n >= 2");
  if (n > kMaxDefaultDim && !opts.allow_large)
    throw std::invalid_argument("fiber complexes beyond n = " + std::to_string(kMaxDefaultDim) +
                                " need the allow-large override");
}

int top_degree(const LabeledSpace& coeffs) {
  int top = 0;
  for (const auto& b : coeffs.basis) top = std::max(top, b.degree);
  return top;
}

std::pair<int, int> window_of(int n, const Options& opts, int coeff_top) {
  auto w = opts.window ? *opts.window : std::make_pair(-n, n + 1 + coeff_top);
  if (w.second - w.first < 2) throw std::invalid_argument("window too narrow: need one padding degree on each side");
  return w;
}

std::size_t curvature_length(const WeilAlgebra& w, const gca::Monomial& m) {
  std::size_t len = 0;
  for (std::size_t i : w.curvature) len += m.exps[i];
  return len;
}

// Fiber basis in one internal degree for a coefficient vector of degree cdeg.
std::vector<gca::Monomial> fiber_monomials(const WeilAlgebra& w, int degree, const Options& opts) {
  std::vector<gca::Monomial> out;
  for (auto& m : gca::basis_in_degree(*w.algebra, degree)) {
    const std::size_t len = curvature_length(w, m);
    if (len == 0) continue;
    if (opts.word_cap && len > static_cast<std::size_t>(*opts.word_cap)) continue;
    out.push_back(std::move(m));
  }
  return out;
}

struct Cell {
  std::size_t coeff;
  gca::Monomial mono;
  auto operator<=>(const Cell&) const = default;
};

}  // namespace

WeilAlgebra weil_algebra(int n) {
  const lie::GradedLieAlgebra g = lie::build_so(n);
  std::vector<gca::GeneratorSpec> gens;
  for (const auto& b : g.basis()) {
    const std::string suffix = b.name.substr(1);
    gens.push_back({"th" + suffix, 1});
    gens.push_back({"w" + suffix, 2});
  }
  auto alg = gca::Algebra::make(gens);
  WeilAlgebra out{alg, gca::Derivation(alg, 1), {}, {}};
  for (const auto& b : g.basis()) {
    const std::string suffix = b.name.substr(1);
    out.theta.push_back(alg->require("th" + suffix));
    out.curvature.push_back(alg->require("w" + suffix));
  }
  const std::size_t dim = g.dim();
  std::vector<gca::Element> dth(dim, gca::Element(alg)), dw(dim, gca::Element(alg));
  for (std::size_t k = 0; k < dim; ++k) dth[k] += gca::Element::generator(alg, out.curvature[k]);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& [k, c] : g.bracket(i, j)) {
        dth[k] += gca::Element::from_word(alg, {out.theta[i], out.theta[j]}, -c / 2);
        dw[k] += gca::Element::from_word(alg, {out.theta[i], out.curvature[j]}, -c);
      }
  for (std::size_t k = 0; k < dim; ++k) {
    out.d.set_image(out.theta[k], std::move(dth[k]));
    out.d.set_image(out.curvature[k], std::move(dw[k]));
  }
  for (std::size_t k = 0; k < alg->size(); ++k)
    if (!gca::apply_derivation(out.d, out.d.image(k)).is_zero())
      throw std::logic_error("Weil differential does not square to zero");
  return out;
}

FiberComplex build_fiber(int n, const LabeledSpace& coeffs, const Options& opts) {
  check_size(n, opts);
  const auto [lo, hi] = window_of(n, opts, top_degree(coeffs));
  const WeilAlgebra w = weil_algebra(n);
  FiberComplex f;
  f.n = n;
  f.coeffs = coeffs;
  f.algebra = w.algebra;
  f.word_cap = opts.word_cap;
  f.complex = linalg::CochainComplex(lo, hi);

  std::vector<std::vector<Cell>> cells;
  for (int t = lo; t <= hi; ++t) {
    std::vector<Cell> basis;
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      for (auto& m : fiber_monomials(w, t + n - coeffs.basis[c].degree, opts)) basis.push_back({c, std::move(m)});
    for (const auto& cell : basis)
      f.complex.basis[static_cast<std::size_t>(t - lo)].push_back(
          gca::format(*w.algebra, coeffs, gca::TensorMonomial{cell.coeff, cell.mono}));
    cells.push_back(std::move(basis));
  }
  for (int t = lo; t < hi; ++t) {
    const auto& src = cells[static_cast<std::size_t>(t - lo)];
    const auto& dst = cells[static_cast<std::size_t>(t + 1 - lo)];
    std::map<Cell, std::size_t> index;
    for (std::size_t r = 0; r < dst.size(); ++r) index.emplace(dst[r], r);
    linalg::SparseMatrix m(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const gca::Element img = gca::apply_derivation(w.d, src[col].mono);
      for (const auto& [mono, x] : img.terms()) {
        auto it = index.find(Cell{src[col].coeff, mono});
        if (it == index.end()) {
          if (opts.word_cap && curvature_length(w, mono) > static_cast<std::size_t>(*opts.word_cap)) continue;
          throw std::logic_error("fiber differential leaves the enumerated basis");
        }
        m.add(it->second, col, x);
      }
    }
    f.complex.d(t) = std::move(m);
  }
  return f;
}

FiberComplex build_fiber(int n, const linalg::CochainComplex& coeffs, const Options& opts) {
  if (n != 3) throw std::invalid_argument("the coefficient-complex variant is provided for n = 3 only");
  check_size(n, opts);
  const auto [lo, hi] = window_of(n, opts, std::max(coeffs.hi, 0));
  const WeilAlgebra w = weil_algebra(n);
  FiberComplex f;
  f.n = n;
  f.algebra = w.algebra;
  f.word_cap = opts.word_cap;
  // Flatten the coefficient complex into one labelled basis.
  std::vector<std::pair<int, std::size_t>> where;  // flat index -> (degree, local index)
  std::map<std::pair<int, std::size_t>, std::size_t> flat;
  for (int k = coeffs.lo; k <= coeffs.hi; ++k)
    for (std::size_t i = 0; i < coeffs.dim(k); ++i) {
      flat.emplace(std::make_pair(k, i), where.size());
      where.emplace_back(k, i);
      f.coeffs.basis.push_back({coeffs.basis[static_cast<std::size_t>(k - coeffs.lo)][i], k});
    }
  f.complex = linalg::CochainComplex(lo, hi);
  std::vector<std::vector<Cell>> cells;
  for (int t = lo; t <= hi; ++t) {
    std::vector<Cell> basis;
    for (std::size_t c = 0; c < f.coeffs.size(); ++c)
      for (auto& m : fiber_monomials(w, t + n - f.coeffs.basis[c].degree, opts)) basis.push_back({c, std::move(m)});
    for (const auto& cell : basis)
      f.complex.basis[static_cast<std::size_t>(t - lo)].push_back(
          gca::format(*w.algebra, f.coeffs, gca::TensorMonomial{cell.coeff, cell.mono}));
    cells.push_back(std::move(basis));
  }
  for (int t = lo; t < hi; ++t) {
    const auto& src = cells[static_cast<std::size_t>(t - lo)];
    const auto& dst = cells[static_cast<std::size_t>(t + 1 - lo)];
    std::map<Cell, std::size_t> index;
    for (std::size_t r = 0; r < dst.size(); ++r) index.emplace(dst[r], r);
    linalg::SparseMatrix m(dst.size(), src.size());
    auto put = [&](const Cell& cell, std::size_t col, const Rational& x) {
      auto it = index.find(cell);
      if (it == index.end()) {
        if (opts.word_cap && curvature_length(w, cell.mono) > static_cast<std::size_t>(*opts.word_cap)) return;
        throw std::logic_error("fiber differential leaves the enumerated basis");
      }
      m.add(it->second, col, x);
    };
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& [c, mono] = src[col];
      const gca::Element img = gca::apply_derivation(w.d, mono);
      for (const auto& [m2, x] : img.terms()) put(Cell{c, m2}, col, x);
      const auto [cdeg, ci] = where[c];
      if (cdeg >= coeffs.hi) continue;
      const int s = sign_of(gca::degree(*w.algebra, mono));
      for (const auto& [r, x] : coeffs.d(cdeg).column(ci)) put(Cell{flat.at({cdeg + 1, r}), mono}, col, s * x);
    }
    f.complex.d(t) = std::move(m);
  }
  return f;
}

linalg::CohomologyDims oracle_cohomology(const FiberComplex& f) { return linalg::cohomology(f.complex); }

CrossCheck cross_check(int n, const LabeledSpace& coeffs, const Options& opts) {
  const FiberComplex f = build_fiber(n, coeffs, opts);
  CrossCheck out;
  out.oracle = oracle_cohomology(f).dims;
  const auto window = std::make_pair(f.complex.lo + n, f.complex.hi + n);
  out.e3 = shifted(koszul::e3_direct(n, coeffs, window).dims, -n);
  for (int t = f.complex.lo + 1; t <= f.complex.hi - 1; ++t) {
    const auto a = out.oracle.count(t) ? out.oracle.at(t) : 0;
    const auto b = out.e3.count(t) ? out.e3.at(t) : 0;
    if (a != b)
      out.diffs.push_back("degree " + std::to_string(t) + ": oracle " + std::to_string(a) + ", E3 " + std::to_string(b));
  }
  out.match = out.diffs.empty();
  return out;
}

std::size_t fiber_size(int n, const GradedDims& coeffs, const Options& opts) {
  check_size(n, opts);
  const auto [lo, hi] = window_of(n, opts, coeffs.empty() ? 0 : std::max(coeffs.rbegin()->first, 0));
  const WeilAlgebra w = weil_algebra(n);
  std::size_t total = 0;
  for (int t = lo; t <= hi; ++t)
    for (const auto& [cdeg, cdim] : coeffs) total += cdim * fiber_monomials(w, t + n - cdeg, opts).size();
  return total;
}

}  // namespace framing::weil
