#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "attract/catalog.hpp"
#include "attract/extension.hpp"
#include "attract/rng.hpp"
#include "attract/sampling.hpp"

using namespace attract;

namespace {

AttractiveApprox negative_axis_approx() {
  // z <= 0, the exact attractive set of Tx = x^2 on [0, 1].
  return AttractiveApprox::from_halfspaces({Halfspace(Point{1.0}, 0.0)},
                                           "negative-axis");
}

}  // namespace

TEST_SUITE("extension") {

TEST_CASE("the fixed-but-not-attractive corner is redirected exactly") {
  // Tx = x^2 fixes x = 1, but 1 is not attractive; the extension must send
  // it to the approximation instead of leaving it fixed.
  const auto ext = extend(make_square(), negative_axis_approx());
  CHECK(ext(Point{1.0}) == Point{0.0});
  // x = 0 is fixed and attractive: kept on the base branch.
  CHECK(ext(Point{0.0}) == Point{0.0});
  CHECK(ext.in_base_branch(Point{0.0}));
  CHECK(!ext.in_base_branch(Point{1.0}));
}

TEST_CASE("base branch evaluates the original mapping") {
  const auto ext = extend(make_square(), negative_axis_approx());
  CHECK(ext.in_base_branch(Point{0.5}));
  CHECK(ext(Point{0.5}) == Point{0.25});
}

TEST_CASE("points outside the domain are projected") {
  const auto ext = extend(make_square(), negative_axis_approx());
  // Already a member: projection leaves it alone.
  CHECK(distance(ext(Point{-1.5}), Point{-1.5}) <= 1e-12);
  // Outside the domain and the approximation: pulled to the boundary.
  CHECK(distance(ext(Point{2.0}), Point{0.0}) <= 1e-12);
}

TEST_CASE("classification separates the branches") {
  const auto ext = extend(make_square(), negative_axis_approx());
  CHECK(ext.classify(Point{0.5}) == ExtendedMapping::Branch::Base);
  CHECK(ext.classify(Point{0.0}) == ExtendedMapping::Branch::Base);
  CHECK(ext.classify(Point{1.0}) == ExtendedMapping::Branch::Projection);
  CHECK(ext.classify(Point{-0.5}) == ExtendedMapping::Branch::Projection);
  // Displacement in (tol, 10 tol]: too close to fixed to trust either way.
  CHECK(ext.classify(Point{2e-9}) == ExtendedMapping::Branch::Ambiguous);
}

TEST_CASE("near-boundary fixed points classify as ambiguous") {
  // Shift the boundary to -5e-9: the fixed point 0 now sits a few tolerances
  // outside the approximation, inside the ambiguity band.
  const auto shifted = AttractiveApprox::from_halfspaces(
      {Halfspace(Point{1.0}, -5e-9)}, "shifted");
  const auto ext = extend(make_square(), shifted);
  CHECK(ext.classify(Point{0.0}) == ExtendedMapping::Branch::Ambiguous);
}

TEST_CASE("fixed-set verification passes on a grid spanning both branches") {
  const Mapping square = make_square();
  const auto grid = box_grid(Box({-0.25}, {1.25}), 151);

  SUBCASE("analytic approximation") {
    const auto ext = extend(square, negative_axis_approx());
    const auto report = verify_extension_fixed_set(ext, grid);
    CHECK(report.passed);
    CHECK(report.samples_checked > 100);
  }
  SUBCASE("sampled approximation") {
    const auto samples = sample_schedule(square.domain, 64, 64, 1);
    const auto ext = extend(square, build_attractive_approx(square, samples));
    const auto report = verify_extension_fixed_set(ext, grid);
    CHECK(report.passed);
    CHECK(report.samples_checked > 100);
  }
}

TEST_CASE("fixed-set verification skips the ambiguity band") {
  const auto shifted = AttractiveApprox::from_halfspaces(
      {Halfspace(Point{1.0}, -5e-9)}, "shifted");
  const auto ext = extend(make_square(), shifted);
  const std::vector<Point> grid = {Point{0.0}, Point{0.5}, Point{-1.0}};
  const auto report = verify_extension_fixed_set(ext, grid);
  CHECK(report.passed);
  CHECK(report.samples_skipped == 1);
  CHECK(report.samples_checked == 2);
}

TEST_CASE("fixed-set verification flags an overshooting approximation") {
  // z <= 0.5 is strictly larger than the attractive set of Tx = x^2, so the
  // member 0.3 stays on the base branch, moves to 0.09, and breaks the
  // "fixed iff member" identity.
  const auto wide = AttractiveApprox::from_halfspaces(
      {Halfspace(Point{1.0}, 0.5)}, "wide");
  const auto ext = extend(make_square(), wide);
  const std::vector<Point> grid = {Point{0.3}, Point{-1.0}};
  const auto report = verify_extension_fixed_set(ext, grid);
  CHECK(!report.passed);
  REQUIRE(!report.witness.empty());
  CHECK(report.witness.front() == Point{0.3});
  CHECK(report.max_violation == doctest::Approx(0.21).epsilon(1e-9));
}

TEST_CASE("extension is quasinonexpansive toward members") {
  const Mapping square = make_square();
  const auto samples = sample_schedule(square.domain, 64, 64, 1);
  const auto ext = extend(square, build_attractive_approx(square, samples));

  const std::vector<Point> members = {Point{0.0}, Point{-0.3}, Point{-1.0}};
  std::vector<Point> probes;
  Rng rng(905);
  for (int i = 0; i < 200; ++i) probes.push_back(Point{rng.uniform(-2.0, 2.0)});

  const auto report = verify_extension_quasinonexpansive(ext, members, probes);
  CHECK(report.passed);
  CHECK(report.max_violation <= 1e-9);
  CHECK(report.samples_checked == 600);
}

TEST_CASE("quasinonexpansive verification rejects non-member anchors") {
  const auto ext = extend(make_square(), negative_axis_approx());
  const std::vector<Point> bad_members = {Point{0.5}};
  const std::vector<Point> probes = {Point{0.25}};
  CHECK_THROWS_AS((void)verify_extension_quasinonexpansive(ext, bad_members, probes),
                  std::invalid_argument);
  const std::vector<Point> none;
  CHECK_THROWS_AS((void)verify_extension_quasinonexpansive(ext, none, probes),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)verify_extension_quasinonexpansive(ext, bad_members, none),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)verify_extension_fixed_set(ext, none),
                  std::invalid_argument);
}

TEST_CASE("construction rejects unusable approximations") {
  // Whole-space approximation: extending is meaningless.
  Mapping id{.label = "identity",
             .domain = Domain::interval(0.0, 1.0),
             .fn = [](const Point& x) { return x; }};
  const std::vector<Point> fixed_samples = {Point{0.2}, Point{0.8}};
  const auto whole = build_attractive_approx(id, fixed_samples);
  CHECK_THROWS_AS((void)extend(id, whole), std::invalid_argument);

  // Infeasible approximation: nothing to project onto.
  const auto infeasible = AttractiveApprox::from_halfspaces(
      {Halfspace(Point{1.0}, -1.0), Halfspace(Point{-1.0}, -1.0)}, "empty");
  CHECK_THROWS_AS((void)extend(make_square(), infeasible), std::invalid_argument);

  // Dimension mismatch between domain and approximation.
  const auto planar = AttractiveApprox::from_halfspaces(
      {Halfspace(Point{1.0, 0.0}, 1.0)}, "planar");
  CHECK_THROWS_AS((void)extend(make_square(), planar), std::invalid_argument);

  CHECK_THROWS_AS((void)extend(make_square(), negative_axis_approx(), 0.0),
                  std::invalid_argument);
}

TEST_CASE("evaluation rejects dimension mismatches") {
  const auto ext = extend(make_square(), negative_axis_approx());
  CHECK_THROWS_AS((void)ext(Point{1.0, 2.0}), std::invalid_argument);
}

}  // TEST_SUITE
