#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negacantor/evaluator.hpp"
#include "negacantor/selfaffine.hpp"
#include "negacantor/selftest.hpp"
#include "support.hpp"

using namespace negacantor;

TEST_CASE("component maps") {
  const Params salem = reference_salem();

  SUBCASE("corner fixed points") {
    const GraphPoint origin = apply(component_map(salem, 0, 1), GraphPoint{Rat(0), Rat(0)});
    CHECK(origin.x == 0);
    CHECK(origin.y == 0);
    // beta_1 + p_1 = 1 pins (1,1)
    const GraphPoint corner = apply(component_map(salem, 1, 1), GraphPoint{Rat(1), Rat(1)});
    CHECK(corner.x == 1);
    CHECK(corner.y == 1);
  }
  SUBCASE("even positions reflect both offsets") {
    const Params uniform = reference_uniform2();
    // omega_{1,2} = d-1-1 = 0 and beta~_{1,2} = beta_{0,2} = 0: the map fixes the origin
    const AffineMap m12 = component_map(uniform, 1, 2);
    CHECK(m12.x_offset == 0);
    CHECK(m12.y_offset == 0);
    const GraphPoint p = apply(m12, GraphPoint{Rat(0), Rat(0)});
    CHECK(p.x == 0);
    CHECK(p.y == 0);
    // its sibling carries the whole reflected offset
    const AffineMap m02 = component_map(uniform, 0, 2);
    CHECK(m02.x_offset == Rat(1, 2));
    CHECK(m02.y_offset == Rat(1, 2));
  }
  SUBCASE("digit range enforced") {
    CHECK_THROWS_AS(component_map(salem, 2, 1), std::out_of_range);
  }
}

TEST_CASE("graph point clouds") {
  SUBCASE("salem at depth one") {
    const auto pts = graph_points(reference_salem(), 1);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].x == 0);
    CHECK(pts[0].y == 0);
    CHECK(pts[1].x == Rat(1, 2));
    CHECK(pts[1].y == Rat(7, 10));
  }
  SUBCASE("uniform cloud lies on the diagonal") {
    const auto pts = graph_points(reference_uniform2(), 9);
    CHECK(pts.size() == 512);
    for (const auto& p : pts) CHECK(p.x == p.y);
  }
  SUBCASE("points are the cylinder left endpoints with exact values") {
    const Params sets[] = {reference_salem(), reference_mixed3(), reference_alt23()};
    const int depths[] = {8, 5, 4};
    for (int s = 0; s < 3; ++s) {
      const Params& ps = sets[s];
      const auto pts = graph_points(ps, depths[s]);
      const Int D = ps.radix_product(depths[s]);
      REQUIRE(Int(pts.size()) == D);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].x == Rat(Int(i), D));  // sorted, distinct, complete
        const EvalResult direct = eval_digits(ps, encode(ps, pts[i].x, depths[s] + 2));
        CHECK(direct.exact());
        CHECK(direct.value == pts[i].y);
      }
    }
  }
  SUBCASE("size guard") {
    CHECK_THROWS_AS(graph_points(reference_mixed3(), 13), std::domain_error);
    CHECK_THROWS_AS(graph_points(reference_mixed3(), 0), std::invalid_argument);
  }
}

TEST_CASE("exports") {
  const auto pts = graph_points(reference_salem(), 3);
  const std::string csv = graph_csv(pts);
  CHECK(csv.find("x,y\n") == 0);
  CHECK(csv == graph_csv(pts));
  CHECK(csv.find("0.70000000000000000") != std::string::npos);  // F~(1/2)
  const std::string js = graph_json(pts);
  CHECK(js.find("\"7/10\"") != std::string::npos);
}
