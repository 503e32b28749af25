#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "framing/catalog.hpp"
#include "framing/ce.hpp"

using namespace framing;
using namespace framing::catalog;

namespace {

std::vector<std::pair<std::string, int>> gens(const RingPresentation& r) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& g : r.generators) out.emplace_back(g.name, g.degree);
  return out;
}

using Gens = std::vector<std::pair<std::string, int>>;

}  // namespace

TEST_CASE("H(so(n)) presentations") {
  CHECK(gens(h_so(2)) == Gens{{"eta'_1", 1}});
  CHECK(gens(h_so(3)) == Gens{{"eta_1", 3}});
  CHECK(gens(h_so(4)) == Gens{{"eta_1", 3}, {"eta'_2", 3}});
  CHECK(gens(h_so(5)) == Gens{{"eta_1", 3}, {"eta_2", 7}});
  CHECK(gens(h_so(6)) == Gens{{"eta_1", 3}, {"eta_2", 7}, {"eta'_3", 5}});
  CHECK(h_so(6).provenance.back() == "pfaffian_partner");
  CHECK_THROWS_AS(h_so(1), std::invalid_argument);
}

TEST_CASE("H(BSO(n)) presentations") {
  CHECK(gens(h_bso(3)) == Gens{{"p_1", 4}});
  CHECK(gens(h_bso(4)) == Gens{{"p_1", 4}, {"p'_2", 4}});
  CHECK(gens(h_bso(5)) == Gens{{"p_1", 4}, {"p_2", 8}});
  CHECK(h_bso(4).provenance.back() == "pfaffian");
  CHECK_THROWS_AS(h_bso(0), std::invalid_argument);
}

TEST_CASE("transgression pairs differ by one degree") {
  for (int n = 2; n <= 12; ++n) {
    const auto a = h_so(n), b = h_bso(n);
    REQUIRE(a.generators.size() == b.generators.size());
    for (std::size_t j = 0; j < a.generators.size(); ++j) CHECK(a.generators[j].degree + 1 == b.generators[j].degree);
  }
}

TEST_CASE("Betti numbers of the presentations") {
  CHECK(betti(h_so(4), 0, 6) == GradedDims{{0, 1}, {3, 2}, {6, 1}});
  CHECK(betti(h_so(5), 0, 10) == GradedDims{{0, 1}, {3, 1}, {7, 1}, {10, 1}});
  CHECK(betti(h_bso(3), 0, 12) == GradedDims{{0, 1}, {4, 1}, {8, 1}, {12, 1}});
  CHECK(betti(h_bso(4), 0, 8) == GradedDims{{0, 1}, {4, 2}, {8, 3}});
  CHECK(betti(h_so(3), true) == GradedDims{{3, 1}});
  CHECK_THROWS_AS(betti(h_bso(3)), std::invalid_argument);
}

TEST_CASE("Betti numbers agree with monomial enumeration") {
  for (int n = 2; n <= 9; ++n) {
    const auto ring = h_bso(n);
    const auto alg = ring.algebra();
    const auto d = betti(ring, 0, 30);
    for (int k = 0; k <= 30; ++k) CHECK((d.count(k) ? d.at(k) : 0) == gca::basis_in_degree(*alg, k).size());
  }
}

TEST_CASE("exponent tables") {
  using lie::SimpleType;
  CHECK(gens(h_simple({'A', 1})) == Gens{{"y3", 3}});
  CHECK(gens(h_simple({'B', 2})) == Gens{{"y3", 3}, {"y7", 7}});
  CHECK(gens(h_simple({'A', 2})) == Gens{{"y3", 3}, {"y5", 5}});
  CHECK(gens(h_simple({'D', 4})) == Gens{{"y3", 3}, {"y7", 7}, {"y7'", 7}, {"y11", 11}});
  CHECK_THROWS_AS(h_simple({'D', 2}), std::invalid_argument);
  // sum (2 m_i + 1) = dim g and the number of exponents is the rank.
  std::vector<SimpleType> all{{'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
  for (int r = 1; r <= 8; ++r) {
    all.push_back({'A', r});
    all.push_back({'B', r});
    all.push_back({'C', r});
    if (r >= 3) all.push_back({'D', r});
  }
  for (const auto& t : all) {
    CAPTURE(t.to_string());
    const auto m = exponents(t);
    CHECK(m.size() == static_cast<std::size_t>(t.rank));
    std::size_t total = 0;
    for (int e : m) total += static_cast<std::size_t>(2 * e + 1);
    CHECK(total == t.dimension());
  }
}

TEST_CASE("closed forms agree with brute-force CE cohomology of so(n)") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(ce::ce_cohomology(lie::build_so(n)).dims == betti(h_so(n)));
  }
}

TEST_CASE("exponent tables agree with brute-force CE cohomology") {
  for (const char* t : {"A1", "A2", "B2", "C2", "G2", "A3"}) {
    CAPTURE(t);
    const auto type = lie::SimpleType::parse(t);
    CHECK(ce::ce_cohomology(lie::build_simple(type)).dims == betti(h_simple(type)));
  }
}
