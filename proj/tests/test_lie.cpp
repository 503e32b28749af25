#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "framing/lie.hpp"

#include <cstdio>
#include <fstream>
#include <random>

using namespace framing;
using namespace framing::lie;

namespace {

SparseVector e(std::size_t i, int c = 1) { return SparseVector{{i, Rational(c)}}; }

// Jacobi on random basis triples, for algebras too large for the full check.
bool sampled_jacobi(const GradedLieAlgebra& g, int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.dim() - 1);
  for (int s = 0; s < samples; ++s) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    SparseVector lhs = g.bracket(e(i), g.bracket(j, k));
    SparseVector a = g.bracket(g.bracket(i, j), e(k)), b = g.bracket(e(j), g.bracket(i, k));
    std::map<std::size_t, Rational> rhs;
    for (const auto& [x, c] : a) rhs[x] += c;
    for (const auto& [x, c] : b) rhs[x] += c;
    if (lhs != linalg::make_sparse(rhs)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("so(n) basics") {
  CHECK(build_so(2).dim() == 1);
  CHECK(build_so(2).is_abelian());
  for (int n = 2; n <= 6; ++n) {
    auto g = build_so(n);
    CHECK(g.dim() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(check_jacobi(g));
    CHECK(g.is_ordinary());
  }
  CHECK_THROWS_AS(build_so(1), std::invalid_argument);
}

TEST_CASE("so(3) brackets match the matrix commutators") {
  auto g = build_so(3);
  const auto e12 = *g.index_of("E12"), e13 = *g.index_of("E13"), e23 = *g.index_of("E23");
  // [E_ab, E_bc] = E_ac
  CHECK(g.bracket(e12, e23) == e(e13));
  CHECK(g.bracket(e23, e12) == e(e13, -1));
  CHECK(g.bracket(e12, e13) == e(e23, -1));
}

TEST_CASE("perturbed structure constants") {
  // Reversing one bracket of so(3) gives so(2,1), still a Lie algebra.
  auto g3 = build_so(3);
  g3.set_bracket(0, 1, linalg::SparseVector{{2, Rational(1)}});
  CHECK(check_jacobi(g3));
  auto g4 = build_so(4);
  auto v = g4.bracket(0, 1);
  v[0].second = -v[0].second;
  g4.set_bracket(0, 1, v);
  CHECK_FALSE(check_jacobi(g4));
  CHECK(jacobi_violation(g4).has_value());
}

TEST_CASE("abelian algebras") {
  CHECK(check_jacobi(build_abelian({0, 0, 1})));
  CHECK(check_jacobi(build_abelian({})));
}

TEST_CASE("bracket validation") {
  GradedLieAlgebra g({{"a", 0}, {"b", 1}});
  CHECK_THROWS_AS(g.set_bracket(0, 1, e(0)), std::invalid_argument);  // wrong degree
  CHECK_THROWS_AS(g.set_bracket(0, 0, e(0)), std::invalid_argument);  // even self-bracket
  CHECK_THROWS_AS(GradedLieAlgebra({{"a", 0}, {"a", 1}}), std::invalid_argument);
}

TEST_CASE("simple types") {
  CHECK(SimpleType::parse("A1") == SimpleType{'A', 1});
  CHECK(SimpleType::parse("a,2") == SimpleType{'A', 2});
  CHECK(SimpleType::parse("G2") == SimpleType{'G', 2});
  CHECK_THROWS_AS(SimpleType::parse("D2"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType::parse("F5"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType::parse("X"), std::invalid_argument);
}

TEST_CASE("simple algebras: dimension, Jacobi and nondegenerate Killing form") {
  const std::vector<std::string> small{"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2", "F4"};
  for (const auto& name : small) {
    CAPTURE(name);
    const auto type = SimpleType::parse(name);
    auto g = build_simple(type);
    CHECK(g.dim() == type.dimension());
    CHECK(check_jacobi(g));
    CHECK(linalg::rank(killing_form(g)) == g.dim());
  }
}

TEST_CASE("exceptional E series") {
  auto e6 = build_simple({'E', 6});
  CHECK(e6.dim() == 78);
  CHECK(check_jacobi(e6));
  for (int r : {7, 8}) {
    auto g = build_simple({'E', r});
    CHECK(g.dim() == SimpleType{'E', r}.dimension());
    CHECK(sampled_jacobi(g, 4000, static_cast<unsigned>(r)));
  }
}

TEST_CASE("folding needs a diagram automorphism") {
  std::vector<std::vector<int>> a2{{2, -1}, {-1, 2}}, a3{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  CHECK_THROWS_AS(fold_simply_laced(a3, {1, 0, 2}, "bad"), std::invalid_argument);
  // The flip of A3 fixes a copy of C2 (dimension 10).
  auto c2 = fold_simply_laced(a3, {2, 1, 0}, "C2");
  CHECK(c2.dim() == 10);
  CHECK(check_jacobi(c2));
  CHECK(linalg::rank(killing_form(c2)) == 10);
  CHECK(build_simply_laced(a2, "A2").dim() == 8);
}

TEST_CASE("g_dR") {
  auto dr1 = build_dR(build_abelian({0}));
  CHECK(dr1.dim() == 2);
  REQUIRE(dr1.differential());
  CHECK(dr1.differential()->nnz() == 1);
  auto dr = build_dR(build_so(3));
  CHECK(dr.dim() == 6);
  CHECK(check_jacobi(dr));
  CHECK(check_differential(dr));
  CHECK(((*dr.differential()) * (*dr.differential())).is_zero());
  CHECK(dr.degree(*dr.index_of("E12[1]")) == -1);
  CHECK_NOTHROW(validate(build_dR(build_simple({'A', 2}))));
}

TEST_CASE("BF and Chern-Simons targets carry invariant pairings") {
  for (int n : {3, 4, 5, 6}) {
    auto bf = build_bf(build_so(3), n);
    CHECK(bf.dim() == 6);
    REQUIRE(bf.pairing());
    CHECK(bf.pairing()->degree == n - 3);
    CHECK(bf.degree(3) == 3 - n);
    CHECK_NOTHROW(validate(bf));
  }
  auto cs = build_cs(build_simple({'A', 2}));
  CHECK_NOTHROW(validate(cs));
  CHECK(check_pairing(cs));
  GradedLieAlgebra broken = build_so(3);
  broken.set_pairing(Pairing{0, SparseMatrix::identity(3)});
  CHECK(check_pairing(broken));  // the trace form of so(3) is a multiple of the identity
  SparseMatrix unequal(3, 3);
  unequal.add(0, 0, 1);
  unequal.add(1, 1, 2);
  unequal.add(2, 2, 1);
  broken.set_pairing(Pairing{0, unequal});
  CHECK_FALSE(check_pairing(broken));
}

TEST_CASE("modules") {
  auto g = build_so(3);
  CHECK_FALSE(module_violation(g, adjoint_module(g)));
  CHECK_FALSE(module_violation(g, coadjoint_module(g)));
  CHECK_FALSE(module_violation(g, trivial_module(g)));
  CHECK_FALSE(module_violation(build_so(4), vector_module_so(4)));
  CHECK(invariants(g, trivial_module(g)).size() == 1);
  CHECK(invariants(g, adjoint_module(g)).empty());
  CHECK(invariants(build_so(4), vector_module_so(4)).empty());
  Module bad = adjoint_module(g);
  bad.action[0] = Rational(2) * bad.action[0];
  CHECK(module_violation(g, bad).has_value());
  auto sl3 = build_simple({'A', 2});
  CHECK_FALSE(module_violation(sl3, adjoint_module(sl3)));
  CHECK_FALSE(module_violation(sl3, coadjoint_module(sl3)));
}

TEST_CASE("Lie algebra files round-trip") {
  for (const auto& g : {build_so(3), build_dR(build_so(3)), build_bf(build_so(3), 4), build_simple({'G', 2})}) {
    auto back = parse_lie_json(to_lie_json(g));
    REQUIRE(back.dim() == g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
      CHECK(back.basis()[i].name == g.basis()[i].name);
      CHECK(back.degree(i) == g.degree(i));
      for (std::size_t j = 0; j < g.dim(); ++j) CHECK(back.bracket(i, j) == g.bracket(i, j));
    }
    CHECK(back.differential().has_value() == g.differential().has_value());
    CHECK(back.pairing().has_value() == g.pairing().has_value());
  }
}

TEST_CASE("Lie algebra file validation") {
  const std::string ok = R"({"basis":[{"name":"x","degree":0},{"name":"y","degree":0},{"name":"h","degree":0}],
    "brackets":[{"i":0,"j":1,"terms":[{"k":2,"coeff":"1"}]},{"i":0,"j":2,"terms":[{"k":0,"coeff":"-2"}]},
                {"i":1,"j":2,"terms":[{"k":1,"coeff":"2"}]}]})";
  CHECK(parse_lie_json(ok).dim() == 3);
  CHECK_THROWS_AS(parse_lie_json(R"({"basis":[],"extra":1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_json(R"({"basis":[{"name":"x","degree":0,"color":1}]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_json(R"({"basis":[{"name":"x","degree":0},{"name":"y","degree":0}],
    "brackets":[{"i":1,"j":0,"terms":[]}]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_json(R"({"basis":[{"name":"x","degree":0},{"name":"y","degree":0}],
    "brackets":[{"i":0,"j":1,"terms":[{"k":0,"coeff":1}]}]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_json(R"({"basis":[{"name":"x","degree":0},{"name":"y","degree":0},{"name":"z","degree":0}],
    "brackets":[{"i":0,"j":1,"terms":[{"k":0,"coeff":"1"}]},{"i":0,"j":2,"terms":[{"k":1,"coeff":"1"}]},
                {"i":1,"j":2,"terms":[{"k":1,"coeff":"1"}]}]})"),
                  std::invalid_argument);  // [x,[y,z]] = x but [[x,y],z] + [y,[x,z]] = y
  CHECK_THROWS_AS(parse_lie_json("not json"), std::invalid_argument);

  const std::string path = "test_lie_file.json";
  {
    std::ofstream out(path);
    out << ok;
  }
  CHECK(load_lie_file(path).dim() == 3);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_lie_file("/nonexistent/file.json"), std::invalid_argument);
}
