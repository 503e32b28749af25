#pragma once

// Free graded-commutative algebras over Q: odd generators are exterior,
// even generators polynomial. Monomials are stored in a canonical normal
// form (generators sorted by degree, then name) and every Koszul sign is
// computed relative to that order.

#include "framing/graded_dims.hpp"
#include "framing/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace framing::gca {

struct GeneratorSpec {
  std::string name;
  int degree = 0;
};

inline bool is_odd_degree(int degree) { return (degree % 2) != 0; }

class Algebra;
using AlgebraHandle = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  /// Throws std::invalid_argument on duplicate or empty names.
  static AlgebraHandle make(std::vector<GeneratorSpec> gens);

  std::size_t size() const { return gens_.size(); }
  const std::vector<GeneratorSpec>& generators() const { return gens_; }
  const GeneratorSpec& generator(std::size_t i) const { return gens_.at(i); }
  bool is_odd(std::size_t i) const { return odd_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws when the name is unknown.
  std::size_t require(std::string_view name) const;
  bool all_degrees_positive() const;

 private:
  explicit Algebra(std::vector<GeneratorSpec> gens);
  std::vector<GeneratorSpec> gens_;
  std::vector<bool> odd_;
};

using Exponent = std::uint16_t;

struct Monomial {
  std::vector<Exponent> exps;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
  bool is_unit() const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Monomial unit_monomial(const Algebra& alg);
int degree(const Algebra& alg, const Monomial& m);
int word_length(const Monomial& m);
std::string format(const Algebra& alg, const Monomial& m);

/// Writes the normal form of a*b to out and returns its sign, or 0 when
/// the product vanishes because an odd generator repeats.
int multiply_monomials(const Algebra& alg, const Monomial& a, const Monomial& b, Monomial& out);

class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Element(AlgebraHandle alg);

  static Element unit(AlgebraHandle alg);
  static Element scalar(AlgebraHandle alg, const Rational& c);
  static Element generator(AlgebraHandle alg, std::string_view name);
  static Element generator(AlgebraHandle alg, std::size_t index);
  static Element monomial(AlgebraHandle alg, Monomial m, const Rational& c = 1);
  /// Product g_{w[0]} g_{w[1]} ... taken in the given (possibly
  /// non-canonical) order and brought to normal form.
  static Element from_word(AlgebraHandle alg, const std::vector<std::size_t>& word, const Rational& c = 1);

  const AlgebraHandle& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  /// Degree of a homogeneous element; nullopt for zero or mixed elements.
  std::optional<int> degree() const;
  /// Degree -> number of terms in that degree.
  std::map<int, std::size_t> degrees() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);
  Element operator-() const;

  /// Brings every monomial back through from_word; the identity on a
  /// well-formed element.
  Element renormalized() const;

  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  AlgebraHandle alg_;
  Terms terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Rational& c, Element a);

/// Graded-commutative product. Throws std::invalid_argument when the
/// operands live in different algebras.
Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

/// A derivation of the given degree, determined by its values on the
/// generators and extended by the graded Leibniz rule
///   D(ab) = D(a) b + (-1)^{|D||a|} a D(b).
class Derivation {
 public:
  Derivation(AlgebraHandle alg, int degree);

  const AlgebraHandle& algebra() const { return alg_; }
  int degree() const { return degree_; }
  const Element& image(std::size_t gen) const { return images_.at(gen); }

  /// Throws when the image is not homogeneous of degree |gen| + |D|.
  void set_image(std::size_t gen, Element image);
  void set_image(std::string_view gen, Element image);

 private:
  AlgebraHandle alg_;
  int degree_;
  std::vector<Element> images_;
};

Element apply_derivation(const Derivation& d, const Element& e);
Element apply_derivation(const Derivation& d, const Monomial& m);

/// All monomials of the given total degree, sorted. When any generator has
/// degree <= 0 a word-length cap is mandatory (std::invalid_argument
/// otherwise); with a cap only monomials of word length <= cap are listed.
std::vector<Monomial> basis_in_degree(const Algebra& alg, int degree,
                                      std::optional<int> word_cap = std::nullopt);

/// Basis element c (x) m of a free module over the algebra, where c indexes
/// a coefficient vector.
struct TensorMonomial {
  std::size_t coeff = 0;
  Monomial mono;

  auto operator<=>(const TensorMonomial&) const = default;
  bool operator==(const TensorMonomial&) const = default;
};

std::vector<TensorMonomial> basis_in_degree(const Algebra& alg, int degree, const LabeledSpace& coeffs,
                                            std::optional<int> word_cap = std::nullopt);

std::string format(const Algebra& alg, const LabeledSpace& coeffs, const TensorMonomial& t);

}  // namespace framing::gca
