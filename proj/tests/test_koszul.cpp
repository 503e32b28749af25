#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "framing/koszul.hpp"

#include <random>

using namespace framing;
using namespace framing::koszul;

namespace {

LabeledSpace unit_coeffs() { return LabeledSpace::from_dims({{0, 1}}); }

std::map<int, std::vector<std::string>> ideal_labels(const E2Page& page) {
  std::map<int, std::vector<std::string>> out;
  for (int k = page.lo; k <= page.hi; ++k)
    for (const auto& t : page.basis(Sector::Ideal, k)) out[k].push_back(gca::format(*page.algebra, page.coeffs, t));
  return out;
}

GradedDims random_coeffs(std::mt19937& rng) {
  std::uniform_int_distribution<int> slots(1, 3), deg(0, 8), dim(1, 2);
  GradedDims c;
  const int s = slots(rng);
  for (int i = 0; i < s; ++i) c[deg(rng)] = static_cast<std::size_t>(dim(rng));
  return c;
}

TensorElement from_element(const gca::Element& e, std::size_t coeff = 0) {
  TensorElement out;
  for (const auto& [m, c] : e.terms()) out[gca::TensorMonomial{coeff, m}] = c;
  return out;
}

bool proportional(const TensorElement& a, const TensorElement& b) {
  if (a.size() != b.size() || a.empty()) return false;
  const Rational ratio = a.begin()->second / b.begin()->second;
  for (const auto& [t, x] : a) {
    auto it = b.find(t);
    if (it == b.end() || x != ratio * it->second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("E2 ideal for n = 3") {
  auto page = build_e2(3, unit_coeffs(), std::make_pair(0, 12));
  auto l = ideal_labels(page);
  CHECK(l[4] == std::vector<std::string>{"p_1"});
  CHECK(l[7] == std::vector<std::string>{"eta_1 p_1"});
  CHECK(l[8] == std::vector<std::string>{"p_1^2"});
  CHECK(l[11] == std::vector<std::string>{"eta_1 p_1^2"});
  CHECK(l[12] == std::vector<std::string>{"p_1^3"});
  std::size_t total = 0;
  for (const auto& [k, v] : l) total += v.size();
  CHECK(total == 5);
  auto empty = build_e2(3, LabeledSpace{}, std::make_pair(0, 12));
  CHECK(ideal_labels(empty).empty());
}

TEST_CASE("E2 ideal for n = 4 in degree 4") {
  auto page = build_e2(4, unit_coeffs());
  CHECK(ideal_labels(page)[4] == std::vector<std::string>{"p_1", "p'_2"});
  CHECK(default_window(4) == std::make_pair(0, 8));
}

TEST_CASE("d3 examples") {
  auto page = build_e2(3, unit_coeffs(), std::make_pair(0, 12));
  auto d = d3_derivation(page);
  auto eta = gca::Element::generator(page.algebra, "eta_1"), p = gca::Element::generator(page.algebra, "p_1");
  CHECK(gca::apply_derivation(d, eta * p) == p * p);
  CHECK(gca::apply_derivation(d, p).is_zero());
  auto c = apply_d3(page);
  CHECK(linalg::verify_complex(c));
  CHECK(c.d(7).at(0, 0) == 1);  // eta_1 p_1 -> p_1^2

  auto page4 = build_e2(4, unit_coeffs(), std::make_pair(0, 12));
  auto d4 = d3_derivation(page4);
  auto e1 = gca::Element::generator(page4.algebra, "eta_1"), e2 = gca::Element::generator(page4.algebra, "eta'_2");
  auto p1 = gca::Element::generator(page4.algebra, "p_1"), p2 = gca::Element::generator(page4.algebra, "p'_2");
  // D(eta_1 eta'_2 p_1) = p_1 eta'_2 p_1 - eta_1 p'_2 p_1
  CHECK(gca::apply_derivation(d4, e1 * e2 * p1) == e2 * p1 * p1 - e1 * p1 * p2);
}

TEST_CASE("coefficient signs keep d^2 = 0") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      auto page = build_e2(n, LabeledSpace::from_dims(random_coeffs(rng)), std::make_pair(0, 16));
      CHECK(linalg::verify_complex(apply_d3(page, Sector::Ideal)));
      CHECK(linalg::verify_complex(apply_d3(page, Sector::Reduced)));
    }
}

TEST_CASE("E3 for the worked examples") {
  CHECK(e3_direct(3, unit_coeffs()).dims == GradedDims{{4, 1}});
  CHECK(e3_direct(4, unit_coeffs()).dims == GradedDims{{4, 2}, {7, 1}});
  CHECK(e3_direct(3, LabeledSpace::from_dims({{3, 1}}), std::make_pair(0, 12)).dims ==
        shifted(e3_direct(3, unit_coeffs(), std::make_pair(-3, 9)).dims, 3));
  CHECK(e3_closed_form(3, {{0, 1}}).dims == GradedDims{{4, 1}});
  CHECK(e3_closed_form(4, {{0, 1}}).dims == GradedDims{{4, 2}, {7, 1}});
  CHECK(e3_closed_form(5, {}).dims.empty());
  CHECK(e3_direct(5, LabeledSpace{}).dims.empty());
}

TEST_CASE("direct E3 equals the closed form and is C-linear") {
  std::mt19937 rng(2026);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      const GradedDims c = random_coeffs(rng);
      CAPTURE(n);
      CAPTURE(format_betti(c));
      const auto window = std::make_pair(0, 18);
      const auto direct = e3_direct(n, LabeledSpace::from_dims(c), window).dims;
      CHECK(direct == restricted(e3_closed_form(n, c).dims, 1, 17));
      const auto unit = e3_direct(n, unit_coeffs(), std::make_pair(-10, 18)).dims;
      CHECK(direct == restricted(convolve(c, unit), 1, 17));
    }
}

TEST_CASE("the reduced sector is acyclic") {
  std::mt19937 rng(6);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      auto page = build_e2(n, LabeledSpace::from_dims(random_coeffs(rng)), std::make_pair(0, n + 12));
      REQUIRE(linalg::cohomology(apply_d3(page, Sector::Reduced)).dims.empty());
    }
}

TEST_CASE("representatives linear in the Pontryagin classes") {
  auto page4 = build_e2(4, unit_coeffs());
  auto reps = representatives_linear_in_p(4, unit_coeffs(), 7);
  REQUIRE(reps.size() == 1);
  auto e1 = gca::Element::generator(page4.algebra, "eta_1"), e2 = gca::Element::generator(page4.algebra, "eta'_2");
  auto p1 = gca::Element::generator(page4.algebra, "p_1"), p2 = gca::Element::generator(page4.algebra, "p'_2");
  CHECK(proportional(reps[0], from_element(p1 * e2 - p2 * e1)));

  auto reps3 = representatives_linear_in_p(3, unit_coeffs(), 4);
  REQUIRE(reps3.size() == 1);
  CHECK(format(build_e2(3, unit_coeffs()), reps3[0]) == "p_1");
  CHECK(representatives_linear_in_p(3, unit_coeffs(), 5).empty());

  auto page6 = build_e2(6, unit_coeffs(), std::make_pair(0, 12));
  for (auto [deg, name] : {std::pair{4, "p_1"}, std::pair{6, "p'_3"}, std::pair{8, "p_2"}}) {
    auto r = representatives_linear_in_p(6, unit_coeffs(), deg);
    REQUIRE(r.size() == 1);
    CHECK(format(page6, r[0]) == name);
  }
  std::mt19937 rng(8);
  for (int n = 3; n <= 6; ++n) {
    const GradedDims c = random_coeffs(rng);
    const auto dims = e3_direct(n, LabeledSpace::from_dims(c), std::make_pair(0, 20)).dims;
    for (const auto& [k, d] : dims) CHECK(representatives_linear_in_p(n, LabeledSpace::from_dims(c), k).size() == d);
  }
}

TEST_CASE("direct representatives are d3-closed") {
  auto r = e3_direct(4, unit_coeffs(), std::nullopt, true);
  CHECK(r.representatives[4].size() == 2);
  CHECK(r.representatives[7].size() == 1);
  CHECK(r.provenance == "direct");
}
