#include "framing/koszul.hpp"

#include "framing/catalog.hpp"

#include <stdexcept>

namespace framing::koszul {

namespace {

int sign_of(int e) { return (e % 2 == 0) ? 1 : -1; }

gca::AlgebraHandle page_algebra(int n) {
  auto gens = catalog::h_so(n).generators;
  for (auto& g : catalog::h_bso(n).generators) gens.push_back(g);
  return gca::Algebra::make(std::move(gens));
}

int coeff_degree(const E2Page& page, const gca::TensorMonomial& t) { return page.coeffs.basis.at(t.coeff).degree; }

// d on a single basis vector, with the coefficient sign.
TensorElement d3_of(const E2Page& page, const gca::Derivation& d, const gca::TensorMonomial& t) {
  TensorElement out;
  const gca::Element img = gca::apply_derivation(d, t.mono);
  const int s = sign_of(coeff_degree(page, t));
  for (const auto& [m, x] : img.terms()) out[gca::TensorMonomial{t.coeff, m}] += s * x;
  return out;
}

}  // namespace

const std::vector<gca::TensorMonomial>& E2Page::basis(Sector s, int k) const {
  const auto& v = (s == Sector::Ideal) ? ideal : reduced;
  return v.at(static_cast<std::size_t>(k - lo));
}

std::size_t E2Page::p_length(const gca::Monomial& m) const {
  std::size_t len = 0;
  for (std::size_t i : p) len += m.exps[i];
  return len;
}

std::pair<int, int> default_window(int n) { return {0, n + 4}; }

E2Page build_e2(int n, const LabeledSpace& coeffs, std::optional<std::pair<int, int>> window) {
  E2Page page;
  page.n = n;
  page.coeffs = coeffs;
  page.algebra = page_algebra(n);
  for (const auto& g : catalog::h_so(n).generators) page.eta.push_back(page.algebra->require(g.name));
  for (const auto& g : catalog::h_bso(n).generators) page.p.push_back(page.algebra->require(g.name));
  std::tie(page.lo, page.hi) = window ? *window : default_window(n);
  if (page.hi - page.lo < 2) throw std::invalid_argument("window too narrow: need one padding degree on each side");
  for (int k = page.lo; k <= page.hi; ++k) {
    std::vector<gca::TensorMonomial> ideal, reduced;
    for (auto& t : gca::basis_in_degree(*page.algebra, k, coeffs)) {
      if (t.mono.is_unit()) continue;
      if (page.p_length(t.mono) > 0) ideal.push_back(t);
      reduced.push_back(std::move(t));
    }
    page.ideal.push_back(std::move(ideal));
    page.reduced.push_back(std::move(reduced));
  }
  return page;
}

gca::Derivation d3_derivation(const E2Page& page) {
  gca::Derivation d(page.algebra, 1);
  for (std::size_t j = 0; j < page.eta.size(); ++j)
    d.set_image(page.eta[j], gca::Element::generator(page.algebra, page.p[j]));
  return d;
}

linalg::CochainComplex apply_d3(const E2Page& page, Sector sector) {
  const gca::Derivation d = d3_derivation(page);
  linalg::CochainComplex c(page.lo, page.hi);
  for (int k = page.lo; k <= page.hi; ++k)
    for (const auto& t : page.basis(sector, k))
      c.basis[static_cast<std::size_t>(k - page.lo)].push_back(gca::format(*page.algebra, page.coeffs, t));
  for (int k = page.lo; k < page.hi; ++k) {
    const auto& src = page.basis(sector, k);
    const auto& dst = page.basis(sector, k + 1);
    std::map<gca::TensorMonomial, std::size_t> index;
    for (std::size_t r = 0; r < dst.size(); ++r) index.emplace(dst[r], r);
    linalg::SparseMatrix m(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col)
      for (const auto& [t, x] : d3_of(page, d, src[col])) {
        if (x == 0) continue;
        auto it = index.find(t);
        if (it == index.end()) throw std::logic_error("d3 leaves the sector");
        m.add(it->second, col, x);
      }
    c.d(k) = std::move(m);
  }
  return c;
}

std::string format(const E2Page& page, const TensorElement& e) {
  std::string out;
  for (const auto& [t, x] : e) {
    if (x == 0) continue;
    const bool neg = x < 0;
    const Rational a = neg ? Rational(-x) : x;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (a != 1) out += a.get_str() + " ";
    out += gca::format(*page.algebra, page.coeffs, t);
  }
  return out.empty() ? "0" : out;
}

E3Result e3_direct(int n, const LabeledSpace& coeffs, std::optional<std::pair<int, int>> window,
                   bool with_representatives) {
  const E2Page page = build_e2(n, coeffs, window);
  const linalg::CochainComplex c = apply_d3(page, Sector::Ideal);
  linalg::CohomologyDims h = linalg::cohomology(c, with_representatives);
  E3Result out;
  out.dims = h.dims;
  out.provenance = "direct";
  for (const auto& [k, reps] : h.representatives) {
    const auto& basis = page.basis(Sector::Ideal, k);
    for (const auto& v : reps) {
      TensorElement e;
      for (const auto& [i, x] : v) e[basis[i]] = x;
      out.representatives[k].push_back(std::move(e));
    }
  }
  return out;
}

E3Result e3_closed_form(int n, const GradedDims& coeffs) {
  E3Result out;
  out.dims = normalized(shifted(convolve(coeffs, catalog::betti(catalog::h_so(n), true)), 1));
  out.provenance = "closed-form";
  return out;
}

std::vector<TensorElement> representatives_linear_in_p(int n, const LabeledSpace& coeffs, int degree) {
  const E2Page page = build_e2(n, coeffs, std::make_pair(degree - 1, degree + 1));
  const gca::Derivation d = d3_derivation(page);
  const std::size_t k = page.eta.size();
  const auto& basis = page.basis(Sector::Ideal, degree);
  std::map<gca::TensorMonomial, std::size_t> index;
  for (std::size_t r = 0; r < basis.size(); ++r) index.emplace(basis[r], r);
  auto to_vector = [&](const TensorElement& e) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [t, x] : e)
      if (x != 0) acc[index.at(t)] += x;
    return linalg::make_sparse(acc);
  };

  const linalg::CochainComplex c = apply_d3(page, Sector::Ideal);
  linalg::EchelonBasis span(basis.size());
  const auto& incoming = c.d(degree - 1);
  for (std::size_t col = 0; col < incoming.cols(); ++col) span.insert(incoming.column(col));

  std::vector<TensorElement> out;
  for (std::size_t ci = 0; ci < coeffs.size(); ++ci)
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      gca::Monomial m = gca::unit_monomial(*page.algebra);
      int deg = coeffs.basis[ci].degree;
      for (std::size_t j = 0; j < k; ++j)
        if (mask & (std::size_t{1} << j)) {
          m.exps[page.eta[j]] = 1;
          deg += page.algebra->generator(page.eta[j]).degree;
        }
      if (deg + 1 != degree) continue;
      TensorElement e = d3_of(page, d, gca::TensorMonomial{ci, m});
      std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
      const linalg::SparseVector v = to_vector(e);
      if (!c.d(degree).apply(v).empty()) throw std::logic_error("representative is not d3-closed");
      if (!span.insert(v)) throw std::logic_error("representative is exact or dependent");
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace framing::koszul
