#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "framing/ce.hpp"

using namespace framing;
using namespace framing::lie;

namespace {

std::size_t at(const GradedDims& d, int k) { return d.count(k) ? d.at(k) : 0; }

std::vector<GradedLieAlgebra> semisimple_builtins() {
  std::vector<GradedLieAlgebra> out;
  for (int n : {3, 4, 5, 6, 7, 8}) out.push_back(build_so(n));
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2"})
    out.push_back(build_simple(SimpleType::parse(t)));
  return out;
}

}  // namespace

TEST_CASE("so(3) CE complex is the exterior algebra on three generators") {
  auto c = ce::ce_complex(build_so(3));
  CHECK(c.complex.total_size() == 8);
  CHECK(c.complex.dims() == GradedDims{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
  CHECK(linalg::verify_complex(c.complex));
}

TEST_CASE("a degree -1 abelian algebra has one even CE generator") {
  auto g = build_abelian({-1});
  auto alg = ce::ce_algebra(g);
  REQUIRE(alg->size() == 1);
  CHECK(alg->generator(0).degree == 2);
  ce::Options o;
  CHECK_THROWS_AS(ce::ce_complex(g, o), std::invalid_argument);  // infinite without a window
  o.window = std::make_pair(-1, 9);
  auto h = ce::ce_cohomology(g, o);
  CHECK(h.dims == GradedDims{{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}});
}

TEST_CASE("CE cohomology tables") {
  CHECK(ce::ce_cohomology(build_so(3)).dims == GradedDims{{0, 1}, {3, 1}});
  CHECK(ce::ce_cohomology(build_so(4)).dims == GradedDims{{0, 1}, {3, 2}, {6, 1}});
  CHECK(ce::ce_cohomology(build_so(5)).dims == GradedDims{{0, 1}, {3, 1}, {7, 1}, {10, 1}});
  CHECK(ce::ce_cohomology(build_simple({'A', 1})).dims == GradedDims{{0, 1}, {3, 1}});
  CHECK(ce::ce_cohomology(build_simple({'A', 2})).dims == GradedDims{{0, 1}, {3, 1}, {5, 1}, {8, 1}});
  CHECK(ce::ce_cohomology(build_simple({'C', 1})).dims == ce::ce_cohomology(build_simple({'A', 1})).dims);
  CHECK(ce::ce_cohomology(build_abelian({})).dims == GradedDims{{0, 1}});
  CHECK(ce::ce_cohomology(build_abelian({0, 0})).dims == GradedDims{{0, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("adjoint and coadjoint coefficients") {
  auto so3 = build_so(3);
  CHECK(ce::ce_cohomology(so3, adjoint_module(so3)).dims.empty());
  CHECK(ce::ce_cohomology(so3, coadjoint_module(so3)).dims.empty());
  auto sl2 = build_simple({'A', 1});
  auto h = ce::ce_cohomology(sl2, adjoint_module(sl2));
  CHECK(at(h.dims, 1) == 0);
  CHECK(at(h.dims, 2) == 0);
  auto c = ce::ce_complex(sl2, adjoint_module(sl2));
  CHECK(linalg::verify_complex(c.complex));
}

TEST_CASE("Poincare duality and zero Euler characteristic") {
  for (const auto& g : {build_so(3), build_so(4), build_simple({'A', 1}), build_simple({'A', 2})}) {
    CAPTURE(g.name());
    const auto h = ce::ce_cohomology(g).dims;
    const int top = static_cast<int>(g.dim());
    long euler = 0;
    for (int k = 0; k <= top; ++k) {
      CHECK(at(h, k) == at(h, top - k));
      euler += (k % 2 ? -1 : 1) * static_cast<long>(at(h, k));
    }
    CHECK(euler == 0);
  }
}

TEST_CASE("Whitehead lemmas for the semisimple builders up to dimension 28") {
  for (const auto& g : semisimple_builtins()) {
    CAPTURE(g.name());
    REQUIRE(g.dim() <= kDeskScaleDim);
    ce::Options o;
    o.window = std::make_pair(0, 3);
    auto c = ce::ce_complex(g, o);
    CHECK(linalg::verify_complex(c.complex));
    auto h = linalg::cohomology(c.complex);
    CHECK(at(h.dims, 1) == 0);
    CHECK(at(h.dims, 2) == 0);
  }
}

TEST_CASE("invariant coefficients: H(g, V) = H(g) (x) V^g") {
  struct Case {
    GradedLieAlgebra g;
    Module v;
  };
  auto so3 = build_so(3), so4 = build_so(4);
  for (const auto& [g, v] : {Case{so3, trivial_module(so3)}, Case{so3, adjoint_module(so3)},
                            Case{so4, vector_module_so(4)}, Case{so3, coadjoint_module(so3)}}) {
    CAPTURE(v.name);
    const auto hv = ce::ce_cohomology(g, v).dims;
    const auto h = ce::ce_cohomology(g).dims;
    const std::size_t inv = invariants(g, v).size();
    for (int k = -1; k <= static_cast<int>(g.dim()) + 1; ++k) CHECK(at(hv, k) == at(h, k) * inv);
  }
}

TEST_CASE("g_dR is acyclic and cap-stable") {
  for (const auto& g : {build_so(3), build_simple({'A', 1}), build_abelian({0})}) {
    CAPTURE(g.name());
    const auto dr = build_dR(g);
    ce::Options o;
    o.reduced = true;
    CHECK_THROWS_AS(ce::ce_complex(dr, o), std::invalid_argument);  // cap required
    for (int cap : {1, 2, 3}) {
      o.word_cap = cap;
      auto c = ce::ce_complex(dr, o);
      CHECK(linalg::verify_complex(c.complex));
      CHECK(linalg::cohomology(c.complex).dims.empty());
    }
    o.reduced = false;
    o.word_cap = 3;
    CHECK(ce::ce_cohomology(dr, o).dims == GradedDims{{0, 1}});
  }
  auto dr = build_dR(build_so(3));
  ce::Options o;
  o.word_cap = 2;
  auto c = ce::ce_complex(dr, adjoint_module(dr), o);
  CHECK(linalg::verify_complex(c.complex));
}

TEST_CASE("window checks") {
  ce::Options o;
  o.window = std::make_pair(0, 1);
  CHECK_THROWS_AS(ce::ce_complex(build_so(3), o), std::invalid_argument);
  o.window = std::make_pair(0, 2);
  auto h = ce::ce_cohomology(build_so(3), o);
  CHECK(h.dims.empty());
}

TEST_CASE("CE differential detects a failing Jacobi identity") {
  auto g = build_so(4);
  auto v = g.bracket(0, 1);
  v[0].second = -v[0].second;
  g.set_bracket(0, 1, v);
  CHECK_THROWS_AS(ce::ce_differential(g, ce::ce_algebra(g)), std::invalid_argument);
}

TEST_CASE("local functionals") {
  CHECK(ce::local_functional_dims(build_simple({'A', 1}), 3) == GradedDims{{0, 1}});
  CHECK(ce::local_functional_dims(build_abelian({0}), 3) == GradedDims{{-2, 1}});
  CHECK(ce::local_functional_dims(build_abelian({}), 3).empty());
}

TEST_CASE("representatives are cocycles") {
  auto c = ce::ce_complex(build_so(3));
  auto h = linalg::cohomology(c.complex, true);
  REQUIRE(h.representatives[3].size() == 1);
  CHECK(ce::format_cochain(c, 3, h.representatives[3][0]) == "E12* E13* E23*");
  CHECK(h.representatives[0].size() == 1);
}
