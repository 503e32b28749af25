#include "framing/gca.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace framing::gca {

Algebra::Algebra(std::vector<GeneratorSpec> gens) : gens_(std::move(gens)) {
  std::stable_sort(gens_.begin(), gens_.end(), [](const GeneratorSpec& a, const GeneratorSpec& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.name < b.name;
  });
  odd_.reserve(gens_.size());
  for (const auto& g : gens_) odd_.push_back(is_odd_degree(g.degree));
}

AlgebraHandle Algebra::make(std::vector<GeneratorSpec> gens) {
  std::set<std::string> seen;
  for (const auto& g : gens) {
    if (g.name.empty()) throw std::invalid_argument("generator with empty name");
    if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator name '" + g.name + "'");
  }
  return AlgebraHandle(new Algebra(std::move(gens)));
}

std::optional<std::size_t> Algebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Algebra::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return *i;
}

bool Algebra::all_degrees_positive() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const GeneratorSpec& g) { return g.degree > 0; });
}

bool Monomial::is_unit() const {
  return std::all_of(exps.begin(), exps.end(), [](Exponent e) { return e == 0; });
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exps) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

Monomial unit_monomial(const Algebra& alg) { return Monomial{std::vector<Exponent>(alg.size(), 0)}; }

int degree(const Algebra& alg, const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i) d += m.exps[i] * alg.generator(i).degree;
  return d;
}

int word_length(const Monomial& m) {
  int w = 0;
  for (Exponent e : m.exps) w += e;
  return w;
}

std::string format(const Algebra& alg, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += alg.generator(i).name;
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

int multiply_monomials(const Algebra& alg, const Monomial& a, const Monomial& b, Monomial& out) {
  const std::size_t n = alg.size();
  out.exps.resize(n);
  // Moving b's odd generators left past a's odd generators of larger index.
  int odd_a_above = 0;
  int swaps = 0;
  for (std::size_t k = n; k-- > 0;) {
    if (alg.is_odd(k)) {
      if (a.exps[k] && b.exps[k]) return 0;
      if (b.exps[k]) swaps += odd_a_above;
      if (a.exps[k]) ++odd_a_above;
    }
    out.exps[k] = static_cast<Exponent>(a.exps[k] + b.exps[k]);
  }
  return (swaps % 2) ? -1 : 1;
}

// ---------------------------------------------------------------- Element

Element::Element(AlgebraHandle alg) : alg_(std::move(alg)) {
  if (!alg_) throw std::invalid_argument("element without algebra");
}

Element Element::unit(AlgebraHandle alg) { return scalar(std::move(alg), 1); }

Element Element::scalar(AlgebraHandle alg, const Rational& c) {
  Element e(alg);
  e.add_term(unit_monomial(*alg), c);
  return e;
}

Element Element::generator(AlgebraHandle alg, std::string_view name) {
  auto i = alg->require(name);
  return generator(std::move(alg), i);
}

Element Element::generator(AlgebraHandle alg, std::size_t index) {
  Monomial m = unit_monomial(*alg);
  m.exps.at(index) = 1;
  return monomial(std::move(alg), std::move(m));
}

Element Element::monomial(AlgebraHandle alg, Monomial m, const Rational& c) {
  if (m.exps.size() != alg->size()) throw std::invalid_argument("monomial does not match algebra");
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    if (alg->is_odd(i) && m.exps[i] > 1) {
      Element zero(alg);
      return zero;
    }
  Element e(std::move(alg));
  e.add_term(m, c);
  return e;
}

Element Element::from_word(AlgebraHandle alg, const std::vector<std::size_t>& word, const Rational& c) {
  Monomial acc = unit_monomial(*alg);
  int sign = 1;
  Monomial next;
  for (std::size_t g : word) {
    if (g >= alg->size()) throw std::out_of_range("generator index out of range");
    Monomial single = unit_monomial(*alg);
    single.exps[g] = 1;
    int s = multiply_monomials(*alg, acc, single, next);
    if (s == 0) return Element(alg);
    sign *= s;
    acc.exps.swap(next.exps);
  }
  Element e(std::move(alg));
  e.add_term(acc, sign * c);
  return e;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Element::degree() const {
  auto ds = degrees();
  if (ds.size() != 1) return std::nullopt;
  return ds.begin()->first;
}

std::map<int, std::size_t> Element::degrees() const {
  std::map<int, std::size_t> out;
  for (const auto& [m, c] : terms_) ++out[gca::degree(*alg_, m)];
  return out;
}

namespace {
void require_same(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra()) throw std::invalid_argument("operands belong to different algebras");
}
}  // namespace

Element& Element::operator+=(const Element& other) {
  require_same(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Element Element::operator-() const {
  Element e = *this;
  e *= Rational(-1);
  return e;
}

Element Element::renormalized() const {
  Element out(alg_);
  for (const auto& [m, c] : terms_) {
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      for (Exponent k = 0; k < m.exps[i]; ++k) word.push_back(i);
    out += from_word(alg_, word, c);
  }
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    bool unit = m.is_unit();
    if (mag != 1 || unit) {
      os << mag.get_str();
      if (!unit) os << ' ';
    }
    if (!unit) os << format(*alg_, m);
    first = false;
  }
  return os.str();
}

bool operator==(const Element& a, const Element& b) { return a.alg_ == b.alg_ && a.terms_ == b.terms_; }

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(const Rational& c, Element a) { return a *= c; }

Element multiply(const Element& a, const Element& b) {
  require_same(a, b);
  const Algebra& alg = *a.algebra();
  Element out(a.algebra());
  Monomial prod;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = multiply_monomials(alg, ma, mb, prod);
      if (s != 0) out.add_term(prod, s > 0 ? Rational(ca * cb) : Rational(-ca * cb));
    }
  return out;
}

// ------------------------------------------------------------- Derivation

Derivation::Derivation(AlgebraHandle alg, int degree) : alg_(std::move(alg)), degree_(degree) {
  images_.assign(alg_->size(), Element(alg_));
}

void Derivation::set_image(std::size_t gen, Element image) {
  if (image.algebra() != alg_) throw std::invalid_argument("derivation image in a different algebra");
  if (!image.is_zero()) {
    auto d = image.degree();
    int want = alg_->generator(gen).degree + degree_;
    if (!d || *d != want)
      throw std::invalid_argument("image of '" + alg_->generator(gen).name + "' must be homogeneous of degree " +
                                  std::to_string(want));
  }
  images_.at(gen) = std::move(image);
}

void Derivation::set_image(std::string_view gen, Element image) { set_image(alg_->require(gen), std::move(image)); }

Element apply_derivation(const Derivation& d, const Monomial& m) {
  const Algebra& alg = *d.algebra();
  Element out(d.algebra());
  // m = L * g_i^{e_i} * R; D(g_i^{e}) = e g_i^{e-1} D(g_i) for even g_i.
  int prefix_degree = 0;
  Monomial left = unit_monomial(alg);
  Monomial right = m;
  Monomial tmp, res;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    right.exps[i] = static_cast<Exponent>(m.exps[i] - 1);
    const Element& img = d.image(i);
    if (!img.is_zero()) {
      int outer_sign = (is_odd_degree(d.degree()) && is_odd_degree(prefix_degree)) ? -1 : 1;
      Rational mult = Rational(outer_sign * static_cast<int>(m.exps[i]));
      for (const auto& [t, c] : img.terms()) {
        int s1 = multiply_monomials(alg, left, t, tmp);
        if (s1 == 0) continue;
        int s2 = multiply_monomials(alg, tmp, right, res);
        if (s2 == 0) continue;
        out.add_term(res, (s1 * s2) * mult * c);
      }
    }
    // g_i^{e_i} moves into the prefix before the next generator.
    right.exps[i] = 0;
    left.exps[i] = m.exps[i];
    prefix_degree += m.exps[i] * alg.generator(i).degree;
  }
  return out;
}

Element apply_derivation(const Derivation& d, const Element& e) {
  if (e.algebra() != d.algebra()) throw std::invalid_argument("derivation and element belong to different algebras");
  Element out(d.algebra());
  for (const auto& [m, c] : e.terms()) {
    Element part = apply_derivation(d, m);
    part *= c;
    out += part;
  }
  return out;
}

// -------------------------------------------------------------- enumeration

std::vector<Monomial> basis_in_degree(const Algebra& alg, int target, std::optional<int> word_cap) {
  const bool positive = alg.all_degrees_positive();
  if (!positive && !word_cap)
    throw std::invalid_argument("unbounded enumeration: a generator has degree <= 0 and no word-length cap was given");
  if (word_cap && *word_cap < 0) throw std::invalid_argument("negative word-length cap");

  std::vector<Monomial> out;
  Monomial cur = unit_monomial(alg);
  const std::size_t n = alg.size();
  const int cap = word_cap.value_or(-1);

  std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int remaining, int words) {
    if (i == n) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    const int deg = alg.generator(i).degree;
    const bool exterior = alg.is_odd(i);
    for (int e = 0;; ++e) {
      if (exterior && e > 1) break;
      if (cap >= 0 && words + e > cap) break;
      int rem = remaining - e * deg;
      if (positive && rem < 0) break;
      cur.exps[i] = static_cast<Exponent>(e);
      rec(i + 1, rem, words + e);
    }
    cur.exps[i] = 0;
  };
  rec(0, target, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TensorMonomial> basis_in_degree(const Algebra& alg, int target, const LabeledSpace& coeffs,
                                            std::optional<int> word_cap) {
  std::vector<TensorMonomial> out;
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    for (auto& m : basis_in_degree(alg, target - coeffs.basis[c].degree, word_cap))
      out.push_back(TensorMonomial{c, std::move(m)});
  }
  return out;
}

std::string format(const Algebra& alg, const LabeledSpace& coeffs, const TensorMonomial& t) {
  const std::string& label = coeffs.basis.at(t.coeff).label;
  std::string mono = format(alg, t.mono);
  if (label == "1") return mono;
  if (t.mono.is_unit()) return label;
  return label + " ⊗ " + mono;
}

}  // namespace framing::gca
