#include <doctest.h>

#include <cmath>

#include "wafomlab/errors.hpp"
#include "wafomlab/lowdisc.hpp"

using namespace wafomlab;

namespace {

void check_point(const PointSet& ps, std::size_t i, std::vector<double> expected) {
  const auto p = ps.point(i);
  REQUIRE(p.size() == expected.size());
  for (std::size_t t = 0; t < p.size(); ++t) CHECK(p[t] == doctest::Approx(expected[t]).epsilon(1e-15));
}

}  // namespace

TEST_SUITE("lowdisc") {
  TEST_CASE("radical inverse") {
    CHECK(radical_inverse(0, 2) == 0.0);
    CHECK(radical_inverse(1, 2) == 0.5);
    CHECK(radical_inverse(6, 2) == 0.375);
    CHECK(radical_inverse(5, 3) == doctest::Approx(7.0 / 9.0).epsilon(1e-15));
  }

  TEST_CASE("primes") {
    CHECK(first_primes(6) == std::vector<unsigned>{2, 3, 5, 7, 11, 13});
    CHECK(next_prime(0) == 2);
    CHECK(next_prime(4) == 5);
    CHECK(next_prime(7) == 7);
  }

  TEST_CASE("Halton starts at k = 1") {
    const PointSet h = halton_points(3, 2);
    REQUIRE(h.size() == 3);
    check_point(h, 0, {0.5, 1.0 / 3.0});
    check_point(h, 1, {0.25, 2.0 / 3.0});
    check_point(h, 2, {0.75, 1.0 / 9.0});
  }

  TEST_CASE("Faure in base 2 and base 3") {
    const PointSet f2 = faure_points(3, 2);
    check_point(f2, 0, {0.5, 0.5});
    check_point(f2, 1, {0.25, 0.75});
    check_point(f2, 2, {0.75, 0.25});

    const PointSet f3 = faure_points(3, 3);
    check_point(f3, 0, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    check_point(f3, 2, {1.0 / 9.0, 4.0 / 9.0, 7.0 / 9.0});
  }

  TEST_CASE("points stay in the unit cube") {
    for (const PointSet& ps : {halton_points(5000, 6), faure_points(5000, 6)}) {
      for (std::size_t i = 0; i < ps.size(); ++i) {
        for (double x : ps.point(i)) {
          CHECK(x >= 0.0);
          CHECK(x < 1.0);
        }
      }
    }
  }

  TEST_CASE("argument validation") {
    CHECK_THROWS_AS(halton_points(0, 2), DomainError);
    CHECK_THROWS_AS(faure_points(4, 0), DimensionError);
  }
}
