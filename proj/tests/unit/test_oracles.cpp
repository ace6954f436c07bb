#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "honeycomb/arc_geometry.hpp"
#include "honeycomb/bounds.hpp"
#include "honeycomb/errors.hpp"
#include "honeycomb/numeric.hpp"
#include "honeycomb/oracles.hpp"

using namespace honeycomb;

TEST_SUITE("oracles") {
  TEST_CASE("two-chord system") {
    const TwoChordSystem s = TwoChordSystem::from_radius(1.0, 0.5, 1.0);
    CHECK(s.length() == doctest::Approx(arc_length(1.0, 0.25 * shape_p(s.theta_u)) +
                                        arc_length(0.5, 0.0625 * shape_p(s.theta_v))));
    CHECK_THROWS_AS(TwoChordSystem::from_radius(3.0, 0.5, 1.0), InfeasibleError);
  }

  TEST_CASE("xi derivative on random systems") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
      const OracleReport r = xi_random_check(seed, 100);
      CAPTURE(r.witness);
      CHECK(r.passed);
      CHECK(r.worst_violation >= -1e-6);
    }
  }

  TEST_CASE("equal curvature beats every other split") {
    const OracleReport r = equal_curvature_oracle(1.0, 0.4, 0.3, 2000);
    CHECK(r.passed);
    CHECK_THROWS_AS(equal_curvature_oracle(1.0, 0.4, 0.3, 50), PreconditionError);
    CHECK(equal_curvature_random_check(5, 20).passed);
  }

  TEST_CASE("transfer and direct minima agree") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> chord(0.1, 1.0), area(0.0, 0.1);
    for (int k = 0; k < 50; ++k) {
      std::vector<double> chords(3 + k % 5);
      for (double& c : chords) c = chord(rng);
      const double x = area(rng);
      const double direct = min_arc_length(chords, x);
      const double transfer = min_arc_length_transfer(chords, x);
      CHECK(transfer == doctest::Approx(direct).epsilon(1e-9));
      double straight = 0;
      for (double c : chords) straight += c;
      CHECK(direct >= straight);
    }
  }

  TEST_CASE("P_X family") {
    const OracleReport r = px_family_check();
    CHECK(r.passed);
    CHECK(std::abs(r.value("at_zero")) <= 1e-9);
    CHECK(r.value("min_off_zero") > 0);
    CHECK(r.value("slope_error") <= 1e-4);
    const PxRegion p = px_region(0.0);
    CHECK(p.length == doctest::Approx(2 * fourth_root_12()).epsilon(1e-14));
    CHECK_THROWS_AS(px_region(1.0), DomainError);
  }

  TEST_CASE("truncation counterexample") {
    const CounterexampleWitness w = untruncated_counterexample();
    CHECK(w.untruncated < -0.1);
    CHECK(w.truncated >= 0);
    CHECK(std::abs(w.x_total) > 1.5);
    UntruncatedSearch tiny;
    tiny.chord_hi = 1.5;
    tiny.samples = 101;
    CHECK_THROWS_AS(untruncated_counterexample(tiny), SearchError);
  }

  TEST_CASE("chord-arc bound on random clusters") {
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
      const OracleReport r = prop61_random_check(seed, 300);
      CAPTURE(r.witness);
      CHECK(r.passed);
    }
    CHECK_THROWS_AS(prop61_random_check(0, 0), PreconditionError);
  }

  TEST_CASE("run order") {
    const auto all = run_oracles(3, 50);
    REQUIRE(all.size() == 5);
    CHECK(all[0].name == "xi_derivative");
    CHECK(all[4].name == "prop61");
    for (const auto& r : all) CHECK(r.passed);
  }
}
