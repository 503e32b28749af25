#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "framing/gca.hpp"
#include "random_support.hpp"

#include <algorithm>
#include <random>

using namespace framing;
using namespace framing::gca;

namespace {

// Independent enumeration: every exponent vector in a box, filtered by degree.
std::size_t brute_count(const Algebra& alg, int target, int max_exp) {
  std::size_t count = 0;
  std::vector<int> e(alg.size(), 0);
  for (;;) {
    int deg = 0;
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      deg += e[i] * alg.generator(i).degree;
      ok = ok && (!alg.is_odd(i) || e[i] <= 1);
    }
    if (ok && deg == target) ++count;
    std::size_t i = 0;
    while (i < e.size() && e[i] == max_exp) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return count;
}

std::vector<std::string> labels(const Algebra& alg, const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(format(alg, m));
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraHandle mixed_algebra() {
  return Algebra::make({{"eta_1", 3}, {"eta_2", 7}, {"p_1", 4}, {"p_2", 8}, {"x", 1}, {"y", 2}});
}

}  // namespace

TEST_CASE("empty algebra has only the unit") {
  auto alg = Algebra::make({});
  CHECK(basis_in_degree(*alg, 0).size() == 1);
  CHECK(basis_in_degree(*alg, 1).empty());
  CHECK(basis_in_degree(*alg, -1).empty());
}

TEST_CASE("duplicate generator names are rejected") {
  CHECK_THROWS_AS(Algebra::make({{"a", 1}, {"a", 2}}), std::invalid_argument);
}

TEST_CASE("single odd generator") {
  auto alg = Algebra::make({{"eta", 3}});
  CHECK(labels(*alg, basis_in_degree(*alg, 0)) == std::vector<std::string>{"1"});
  CHECK(labels(*alg, basis_in_degree(*alg, 3)) == std::vector<std::string>{"eta"});
  CHECK(basis_in_degree(*alg, 6).empty());
}

TEST_CASE("basis of Lambda[eta] (x) Q[p]") {
  auto alg = Algebra::make({{"eta", 3}, {"p", 4}});
  CHECK(labels(*alg, basis_in_degree(*alg, 4)) == std::vector<std::string>{"p"});
  CHECK(labels(*alg, basis_in_degree(*alg, 7)) == std::vector<std::string>{"eta p"});
  CHECK(labels(*alg, basis_in_degree(*alg, 8)) == std::vector<std::string>{"p^2"});
}

TEST_CASE("degree-7 basis with two transgression pairs") {
  auto alg = Algebra::make({{"eta", 3}, {"eta'", 3}, {"p", 4}, {"p'", 4}});
  CHECK(labels(*alg, basis_in_degree(*alg, 7)) ==
        std::vector<std::string>{"eta p", "eta p'", "eta' p", "eta' p'"});
}

TEST_CASE("tensor basis includes coefficient vectors") {
  auto alg = Algebra::make({{"eta", 3}, {"p", 4}});
  LabeledSpace c = LabeledSpace::from_dims({{3, 1}});
  auto b = basis_in_degree(*alg, 7, c);
  std::vector<std::string> got;
  for (const auto& t : b) got.push_back(format(*alg, c, t));
  CHECK(std::find(got.begin(), got.end(), "x3 ⊗ p") != got.end());
}

TEST_CASE("enumeration agrees with a box search") {
  auto alg = mixed_algebra();
  for (int d = 0; d <= 16; ++d) CHECK(basis_in_degree(*alg, d).size() == brute_count(*alg, d, 16));
}

TEST_CASE("nonpositive generators need a word cap") {
  auto alg = Algebra::make({{"s", 0}, {"t", 1}});
  CHECK_THROWS_AS(basis_in_degree(*alg, 1), std::invalid_argument);
  // words of length <= 3 in degree 1: t, s t, s^2 t
  CHECK(basis_in_degree(*alg, 1, 3).size() == 3);
}

TEST_CASE("Koszul signs of generators") {
  auto alg = Algebra::make({{"eta_1", 3}, {"eta_2", 3}, {"p", 4}});
  auto e1 = Element::generator(alg, "eta_1"), e2 = Element::generator(alg, "eta_2"), p = Element::generator(alg, "p");
  CHECK((e1 * e1).is_zero());
  CHECK(p * e1 == e1 * p);
  CHECK(e1 * e2 == -(e2 * e1));
  CHECK((p * p).to_string() == "p^2");
}

TEST_CASE("mixed-algebra operands are rejected") {
  auto a = Algebra::make({{"x", 1}}), b = Algebra::make({{"x", 1}});
  CHECK_THROWS_AS(multiply(Element::generator(a, "x"), Element::generator(b, "x")), std::invalid_argument);
}

TEST_CASE("graded commutativity, associativity and normal form on random elements") {
  std::mt19937 rng(20261016);
  auto alg = mixed_algebra();
  for (int trial = 0; trial < 1000; ++trial) {
    Element a = test_support::random_homogeneous(alg, rng), b = test_support::random_homogeneous(alg, rng);
    Element c = test_support::random_element(alg, rng);
    const int s = (*a.degree() % 2 != 0 && *b.degree() % 2 != 0) ? -1 : 1;
    REQUIRE(a * b == Rational(s) * (b * a));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a.renormalized() == a);
  }
}

TEST_CASE("from_word applies the sign of the sorting permutation") {
  std::mt19937 rng(7);
  auto alg = Algebra::make({{"a", 1}, {"b", 1}, {"c", 3}, {"d", 2}, {"e", 5}});
  std::vector<std::size_t> word{0, 1, 2, 3, 4};
  for (int trial = 0; trial < 200; ++trial) {
    std::shuffle(word.begin(), word.end(), rng);
    int inversions = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
      for (std::size_t j = i + 1; j < word.size(); ++j)
        if (word[i] > word[j] && alg->is_odd(word[i]) && alg->is_odd(word[j])) ++inversions;
    Element e = Element::from_word(alg, word);
    REQUIRE(e.size() == 1);
    CHECK(e.terms().begin()->second == (inversions % 2 ? -1 : 1));
  }
}

TEST_CASE("derivation examples") {
  auto alg = Algebra::make({{"eta", 3}, {"p", 4}});
  Derivation d(alg, 1);
  d.set_image("eta", Element::generator(alg, "p"));
  auto eta = Element::generator(alg, "eta"), p = Element::generator(alg, "p");
  CHECK(apply_derivation(d, eta * p) == p * p);
  CHECK(apply_derivation(d, Element::unit(alg)).is_zero());

  auto alg2 = Algebra::make({{"eta_1", 3}, {"eta_2", 7}, {"p_1", 4}, {"p_2", 8}});
  Derivation d2(alg2, 1);
  d2.set_image("eta_1", Element::generator(alg2, "p_1"));
  d2.set_image("eta_2", Element::generator(alg2, "p_2"));
  auto e1 = Element::generator(alg2, "eta_1"), e2 = Element::generator(alg2, "eta_2");
  auto p1 = Element::generator(alg2, "p_1"), p2 = Element::generator(alg2, "p_2");
  CHECK(apply_derivation(d2, e1 * e2) == p1 * e2 - e1 * p2);
}

TEST_CASE("derivation images must have the right degree") {
  auto alg = Algebra::make({{"eta", 3}, {"p", 4}});
  Derivation d(alg, 1);
  CHECK_THROWS_AS(d.set_image("eta", Element::generator(alg, "eta")), std::invalid_argument);
}

TEST_CASE("Leibniz rule and d^2 = 0 on random elements") {
  std::mt19937 rng(99);
  auto alg = mixed_algebra();
  Derivation d(alg, 1);
  d.set_image("eta_1", Element::generator(alg, "p_1"));
  d.set_image("eta_2", Element::generator(alg, "p_2"));
  d.set_image("x", Element::generator(alg, "y"));
  Derivation odd(alg, 3);
  odd.set_image("x", Element::generator(alg, "p_1"));
  odd.set_image("y", Element::generator(alg, "x") * Element::generator(alg, "p_1"));
  for (int trial = 0; trial < 1000; ++trial) {
    Element a = test_support::random_homogeneous(alg, rng), b = test_support::random_element(alg, rng);
    for (const Derivation* D : {&d, &odd}) {
      const int s = (D->degree() % 2 != 0 && *a.degree() % 2 != 0) ? -1 : 1;
      REQUIRE(apply_derivation(*D, a * b) == apply_derivation(*D, a) * b + Rational(s) * (a * apply_derivation(*D, b)));
    }
    REQUIRE(apply_derivation(d, apply_derivation(d, b)).is_zero());
  }
}
