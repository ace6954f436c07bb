#include <doctest.h>

#include <cmath>

#include "honeycomb/numeric.hpp"
#include "honeycomb/scan.hpp"

using namespace honeycomb;

TEST_SUITE("scan") {
  TEST_CASE("axis points include both ends and snap zero") {
    const auto pts = axis_points(-0.1, 0.1, 0.01);
    CHECK(pts.size() == 21);
    CHECK(pts.front() == -0.1);
    CHECK(pts.back() == 0.1);
    CHECK(pts[10] == 0.0);
    CHECK(axis_points(1.0, 1.0, 0.1).size() == 1);
    CHECK_THROWS_AS(axis_points(1.0, 0.0, 0.1), PreconditionError);
  }

  TEST_CASE("grid minimum and witness") {
    ScanConfig cfg;
    cfg.step = 0.01;
    std::vector<Range> box{{"x", -1, 1}, {"y", 0, 1}};
    auto r = scan_positive([](std::span<const double> p) { return (p[0] - 0.3) * (p[0] - 0.3) + p[1]; }, box, cfg);
    CHECK(r.min_margin == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.witness[0] == doctest::Approx(0.3));
    CHECK(r.evaluations == 201 * 101);
  }

  TEST_CASE("concave certificate agrees with its corners") {
    ScanConfig cfg;
    cfg.step = 0.05;
    auto c = certify_box("concave", {{"x", 0, 1}}, [](std::span<const double> p) { return 1 + p[0] - p[0] * p[0]; },
                         cfg, true);
    CHECK(c.passed);
    CHECK(c.value("concavity_gap") == doctest::Approx(0.0));
    // A convex function dips below its corners, and the claim is caught.
    auto d = certify_box("convex", {{"x", -1, 1}}, [](std::span<const double> p) { return 1 + p[0] * p[0]; }, cfg,
                         true);
    CHECK_FALSE(d.passed);
  }

  TEST_CASE("config validation") {
    ScanConfig cfg;
    cfg.step = 0;
    CHECK_THROWS_AS(cfg.validate(), PreconditionError);
    cfg.step = 1e-3;
    cfg.n_max = 7;
    CHECK_THROWS_AS(cfg.validate(), PreconditionError);
  }

  TEST_CASE("root finder") {
    auto r = find_root([](double x) { return x * x - 2; }, 0.0, 2.0, 0.0);
    CHECK(r.x == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.iterations < 200);
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1; }, 0.0, 1.0, 0.0), InfeasibleError);
  }

  TEST_CASE("exact sum and formatting") {
    std::vector<double> v{1e20, 1.0, -1e20, 0.1, -0.1, -1.0};
    CHECK(exact_sum(v) == 0.0);
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(format_real(-2.0) == "-2");
    CHECK(format_real(INFINITY) == "inf");
  }
}
