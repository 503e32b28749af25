#include "framing/ce.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace framing::ce {

namespace {

std::string generator_name(const lie::BasisElement& b) { return b.name + "*"; }

std::vector<std::size_t> generator_indices(const GradedLieAlgebra& g, const gca::Algebra& alg) {
  std::vector<std::size_t> out;
  for (const auto& b : g.basis()) out.push_back(alg.require(generator_name(b)));
  return out;
}

int sign_of(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

std::pair<int, int> default_window(const gca::Algebra& alg, const LabeledSpace& coeffs, const Options& opts) {
  int vmin = std::numeric_limits<int>::max(), vmax = std::numeric_limits<int>::min();
  for (const auto& b : coeffs.basis) {
    vmin = std::min(vmin, b.degree);
    vmax = std::max(vmax, b.degree);
  }
  if (coeffs.empty()) vmin = vmax = 0;
  int lo = 0, hi = 0;
  bool has_even = false;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const int d = alg.generator(i).degree;
    if (!alg.is_odd(i)) has_even = true;
    if (opts.word_cap) {
      lo += std::min(0, d) * (alg.is_odd(i) ? 1 : *opts.word_cap);
      hi += std::max(0, d) * (alg.is_odd(i) ? 1 : *opts.word_cap);
    } else {
      hi += d;
    }
  }
  if (has_even && !opts.word_cap)
    throw std::invalid_argument("the CE complex is infinite: give an explicit degree window");
  if (opts.word_cap) {
    // Words are also bounded by the cap in total length.
    int maxd = 0, mind = 0;
    for (std::size_t i = 0; i < alg.size(); ++i) {
      maxd = std::max(maxd, alg.generator(i).degree);
      mind = std::min(mind, alg.generator(i).degree);
    }
    hi = std::min(hi, maxd * *opts.word_cap);
    lo = std::max(lo, mind * *opts.word_cap);
  }
  return {lo + vmin - 1, hi + vmax + 1};
}

}  // namespace

gca::AlgebraHandle ce_algebra(const GradedLieAlgebra& g) {
  std::vector<gca::GeneratorSpec> gens;
  for (const auto& b : g.basis()) gens.push_back({generator_name(b), 1 - b.degree});
  return gca::Algebra::make(std::move(gens));
}

gca::Derivation ce_differential(const GradedLieAlgebra& g, const gca::AlgebraHandle& alg) {
  const std::vector<std::size_t> gen = generator_indices(g, *alg);
  const std::size_t n = g.dim();
  std::vector<gca::Element> images(n, gca::Element(alg));
  auto xi_degree = [&](std::size_t i) { return 1 - g.degree(i); };
  if (g.differential())
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, c] : g.differential()->column(i))
        images[k] -= Rational(sign_of(xi_degree(i)) * c) * gca::Element::generator(alg, gen[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : g.bracket(i, j)) {
        Rational coeff = Rational(-sign_of(g.degree(i) * xi_degree(j))) * c / 2;
        images[k] += gca::Element::from_word(alg, {gen[i], gen[j]}, coeff);
      }
  gca::Derivation q(alg, 1);
  for (std::size_t k = 0; k < n; ++k) q.set_image(gen[k], std::move(images[k]));
  for (std::size_t k = 0; k < alg->size(); ++k)
    if (!gca::apply_derivation(q, q.image(k)).is_zero())
      throw std::invalid_argument("CE differential does not square to zero on '" + alg->generator(k).name +
                                  "' (Jacobi identity or derivation property fails)");
  return q;
}

CEComplex ce_complex(const GradedLieAlgebra& g, const Module& v, const Options& opts) {
  if (auto bad = lie::module_violation(g, v))
    throw std::invalid_argument("module action is not a Lie algebra homomorphism");
  CEComplex out;
  out.algebra = ce_algebra(g);
  out.options = opts;
  for (const auto& b : v.basis) out.coeffs.basis.push_back({b.name, b.degree});
  const gca::Algebra& alg = *out.algebra;
  if (!alg.all_degrees_positive() && !opts.word_cap)
    throw std::invalid_argument("a CE generator has degree <= 0: a word-length cap is required");
  if (opts.word_cap && *opts.word_cap < 1) throw std::invalid_argument("word-length cap must be at least 1");
  auto [lo, hi] = opts.window ? *opts.window : default_window(alg, out.coeffs, opts);
  if (hi - lo < 2) throw std::invalid_argument("window too narrow: need one padding degree on each side");

  const gca::Derivation q = ce_differential(g, out.algebra);
  const std::vector<std::size_t> gen = generator_indices(g, alg);
  std::vector<gca::Monomial> gen_mono(g.dim(), gca::unit_monomial(alg));
  for (std::size_t i = 0; i < g.dim(); ++i) gen_mono[i].exps[gen[i]] = 1;

  out.complex = linalg::CochainComplex(lo, hi);
  std::vector<std::map<gca::TensorMonomial, std::size_t>> index(static_cast<std::size_t>(hi - lo + 1));
  for (int k = lo; k <= hi; ++k) {
    auto basis = gca::basis_in_degree(alg, k, out.coeffs, opts.word_cap);
    if (opts.reduced)
      std::erase_if(basis, [](const gca::TensorMonomial& t) { return t.mono.is_unit(); });
    auto& idx = index[static_cast<std::size_t>(k - lo)];
    auto& labels = out.complex.basis[static_cast<std::size_t>(k - lo)];
    for (std::size_t r = 0; r < basis.size(); ++r) {
      idx.emplace(basis[r], r);
      labels.push_back(gca::format(alg, out.coeffs, basis[r]));
    }
    out.monomials.push_back(std::move(basis));
  }

  for (int k = lo; k < hi; ++k) {
    const auto& src = out.monomials[static_cast<std::size_t>(k - lo)];
    const auto& dst = index[static_cast<std::size_t>(k + 1 - lo)];
    linalg::SparseMatrix d(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& [c, m] = src[col];
      const int mdeg = gca::degree(alg, m);
      std::map<gca::TensorMonomial, Rational> image;
      auto add = [&](std::size_t coeff, const gca::Monomial& mono, const Rational& x) {
        if (opts.word_cap && gca::word_length(mono) > *opts.word_cap) return;
        Rational& y = image[gca::TensorMonomial{coeff, mono}];
        y += x;
      };
      const gca::Element qm = gca::apply_derivation(q, m);
      for (const auto& [mono, x] : qm.terms()) add(c, mono, x);
      if (v.differential)
        for (const auto& [r, x] : v.differential->column(c)) add(r, m, Rational(sign_of(mdeg)) * x);
      for (std::size_t i = 0; i < g.dim(); ++i) {
        const auto& col_i = v.action[i].column(c);
        if (col_i.empty()) continue;
        gca::Monomial prod;
        const int s = gca::multiply_monomials(alg, gen_mono[i], m, prod);
        if (s == 0) continue;
        for (const auto& [r, x] : col_i) add(r, prod, Rational(s * sign_of(g.degree(i) * mdeg)) * x);
      }
      for (const auto& [t, x] : image) {
        if (x == 0) continue;
        auto it = dst.find(t);
        if (it == dst.end()) throw std::logic_error("CE differential leaves the enumerated basis");
        d.add(it->second, col, x);
      }
    }
    out.complex.d(k) = std::move(d);
  }
  return out;
}

CEComplex ce_complex(const GradedLieAlgebra& g, const Options& opts) {
  return ce_complex(g, lie::trivial_module(g), opts);
}

linalg::CohomologyDims ce_cohomology(const GradedLieAlgebra& g, const Module& v, const Options& opts,
                                     bool with_representatives) {
  return linalg::cohomology(ce_complex(g, v, opts).complex, with_representatives);
}

linalg::CohomologyDims ce_cohomology(const GradedLieAlgebra& g, const Options& opts, bool with_representatives) {
  return ce_cohomology(g, lie::trivial_module(g), opts, with_representatives);
}

GradedDims local_functional_dims(const GradedLieAlgebra& l, int n, Options opts) {
  opts.reduced = true;
  return shifted(ce_cohomology(l, opts).dims, -n);
}

std::string format_cochain(const CEComplex& c, int k, const linalg::SparseVector& v) {
  const auto& labels = c.complex.basis.at(static_cast<std::size_t>(k - c.complex.lo));
  std::string out;
  for (const auto& [i, x] : v) {
    const bool neg = x < 0;
    const Rational a = neg ? Rational(-x) : x;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (a != 1) out += a.get_str() + " ";
    out += labels.at(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace framing::ce
