#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wafomlab/errors.hpp"
#include "wafomlab/netgen.hpp"
#include "wafomlab/polynomial.hpp"
#include "wafomlab/search.hpp"

using namespace wafomlab;

TEST_SUITE("netgen") {
  TEST_CASE("coefficients and taps") {
    // t^3 + t + 1: a_1 = 0, a_2 = 1, a_3 = 1.
    const PrimitivePoly p(0b1011);
    CHECK(p.degree() == 3);
    CHECK(p.coefficient(1) == 0);
    CHECK(p.coefficient(2) == 1);
    CHECK(p.coefficient(3) == 1);
    CHECK(p.taps() == 0b110);
    CHECK(PrimitivePoly::from_coefficients({0, 1, 1}) == p);
    CHECK_THROWS_AS(PrimitivePoly(0b1111), DomainError);  // (t + 1)^3
    CHECK_THROWS_AS(PrimitivePoly(0b11111), DomainError);  // irreducible, order 5
  }

  TEST_CASE("msequence examples") {
    const PrimitivePoly p(0b1011);
    const std::vector<std::uint8_t> expected{1, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1};
    CHECK(msequence(p, {1, 0, 0}, 14) == expected);
    CHECK(msequence(PrimitivePoly(0b111), {1, 0}, 6) == std::vector<std::uint8_t>{1, 0, 1, 1, 0, 1});
    CHECK_THROWS_AS(msequence(p, {0, 0, 0}, 5), DomainError);
    CHECK_THROWS_AS(msequence(p, {1, 0}, 5), DomainError);
  }

  TEST_CASE("m-sequence windows visit every nonzero state once") {
    std::mt19937_64 rng(211);
    for (int d : {2, 5, 8, 12}) {
      const PrimitivePoly p = random_primitive_poly(d, rng);
      const std::size_t period = (std::size_t{1} << d) - 1;
      const auto x = msequence(p, std::vector<std::uint8_t>(d, 1), period + d);
      std::set<std::uint32_t> windows;
      for (std::size_t i = 0; i < period; ++i) {
        std::uint32_t w = 0;
        for (int k = 0; k < d; ++k) w = (w << 1) | x[i + k];
        windows.insert(w);
      }
      CHECK(windows.size() == period);
      CHECK(windows.count(0) == 0);
      for (int k = 0; k < d; ++k) CHECK(x[period + k] == x[k]);

      // The shifter matches the recurrence.
      const WindowShifter shift(p);
      std::uint32_t w = 0;
      for (int k = 0; k < d; ++k) w = (w << 1) | x[k];
      for (std::size_t i = 1; i <= period; ++i) {
        w = shift(w);
        std::uint32_t ref = 0;
        for (int k = 0; k < d; ++k) ref = (ref << 1) | x[i + k];
        CHECK(w == ref);
      }
    }
  }

  TEST_CASE("jumper matches repeated single steps") {
    std::mt19937_64 rng(212);
    for (int d : {1, 3, 7, 8, 9, 16, 23, 31}) {
      const PrimitivePoly p = random_primitive_poly(d, rng);
      const WindowShifter shift(p);
      const WindowJumper jump(p);
      const std::uint32_t mask = (std::uint32_t{1} << d) - 1;
      std::uint32_t fast = static_cast<std::uint32_t>(rng()) & mask;
      if (fast == 0) fast = 1;
      std::uint32_t slow = fast;
      std::array<std::uint32_t, WindowJumper::kSteps> ahead{};
      for (int round = 0; round < 50; ++round) {
        jump.advance(fast, ahead);
        for (std::uint32_t w : ahead) {
          slow = shift(slow);
          CHECK(w == slow);
        }
        CHECK(fast == slow);
      }
    }
  }

  TEST_CASE("is_primitive agrees with the order of t, degrees 1 to 10") {
    for (int d = 1; d <= 10; ++d) {
      int count = 0;
      for (std::uint64_t p = std::uint64_t{1} << d; p < (std::uint64_t{2} << d); ++p) {
        const bool expected = (p & 1U) && oracle::order_of_t(p) == (std::uint64_t{1} << d) - 1;
        CHECK(is_primitive(p) == expected);
        count += expected ? 1 : 0;
      }
      // Euler phi(2^d - 1) / d primitive polynomials per degree.
      const int phi_over_d[] = {0, 1, 1, 2, 2, 6, 6, 18, 16, 48, 60};
      CHECK(count == phi_over_d[d]);
    }
  }

  TEST_CASE("Mersenne factor table matches trial division") {
    for (int d = 1; d <= gf2poly::kMaxPrimitiveDegree; ++d) {
      std::uint64_t m = (std::uint64_t{1} << d) - 1;
      std::vector<std::uint64_t> primes;
      for (std::uint64_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
          primes.push_back(q);
          while (m % q == 0) m /= q;
        }
      }
      if (m > 1) primes.push_back(m);
      const auto table = gf2poly::mersenne_prime_factors(d);
      CHECK(std::vector<std::uint64_t>(table.begin(), table.end()) == primes);
    }
  }

  TEST_CASE("large-degree primitivity spot checks") {
    CHECK(is_primitive((std::uint64_t{1} << 31) | (1U << 3) | 1U));  // t^31 + t^3 + 1
    CHECK(is_primitive((std::uint64_t{1} << 32) | (1U << 22) | (1U << 2) | (1U << 1) | 1U));
    CHECK_FALSE(is_primitive((std::uint64_t{1} << 32) | 1U));
    CHECK_THROWS_AS(is_primitive(std::uint64_t{1} << 33), DomainError);
  }

  TEST_CASE("random_primitive_poly carries the 3/4 coefficient bias") {
    // Exact expectation of the interior ones count for d = 6, conditioned on
    // primitivity, against the empirical mean.
    const int d = 6;
    double weight_sum = 0.0;
    double ones_sum = 0.0;
    for (std::uint64_t p = (1U << d) | 1U; p < (2U << d); p += 2) {
      if (!is_primitive(p)) continue;
      const int ones = std::popcount(p) - 2;
      const double w = std::pow(0.75, ones) * std::pow(0.25, d - 1 - ones);
      weight_sum += w;
      ones_sum += w * ones;
    }
    const double expected = ones_sum / weight_sum;
    double fair_weight = 0.0;
    double fair_ones = 0.0;
    for (std::uint64_t p = (1U << d) | 1U; p < (2U << d); p += 2) {
      if (!is_primitive(p)) continue;
      fair_weight += 1.0;
      fair_ones += std::popcount(p) - 2;
    }
    const double fair = fair_ones / fair_weight;
    std::mt19937_64 rng(223);
    const int draws = 20000;
    double total = 0.0;
    double total_sq = 0.0;
    for (int i = 0; i < draws; ++i) {
      const int ones = std::popcount(random_primitive_poly(d, rng).polynomial()) - 2;
      total += ones;
      total_sq += ones * ones;
    }
    const double mean = total / draws;
    const double sd = std::sqrt((total_sq / draws - mean * mean) / draws);
    CHECK(std::fabs(mean - expected) <= 5.0 * sd);
    // Fair coefficients would give a clearly different mean.
    CHECK(std::fabs(mean - fair) > 10.0 * sd);
  }

  TEST_CASE("first_primitive_poly") {
    CHECK(first_primitive_poly(1).polynomial() == 0b11);
    CHECK(first_primitive_poly(3).polynomial() == 0b1011);
    CHECK(first_primitive_poly(4).polynomial() == 0b10011);
  }

  TEST_CASE("hand-traced stream for t^2 + t + 1, S = 2, U = I") {
    const SequentialGenerator gen(PrimitivePoly(0b111), BitMatrix::identity(2), 2);
    const GeneratedNet g = generate_net(gen);
    const std::vector<NetPoint> expected{
        NetPoint(2, 2), NetPoint::from_rows(2, {0b10, 0b01}), NetPoint::from_rows(2, {0b01, 0b11}),
        NetPoint::from_rows(2, {0b11, 0b10})};
    CHECK(g.points == expected);
    CHECK(g.net.dim() == 2);
  }

  TEST_CASE("generated nets are subspaces of full dimension") {
    std::mt19937_64 rng(227);
    for (int trial = 0; trial < 12; ++trial) {
      const int d = 1 + static_cast<int>(rng() % 10);
      const int n = d + static_cast<int>(rng() % 8);
      const int dims = 1 + static_cast<int>(rng() % 5);
      const SequentialGenerator gen(random_primitive_poly(d, rng), random_full_rank_matrix(d, n, rng), dims);
      const GeneratedNet g = generate_net(gen);
      REQUIRE(g.points.size() == (std::size_t{1} << d));
      CHECK(g.points.front().is_zero());
      const std::set<NetPoint> unique(g.points.begin(), g.points.end());
      CHECK(unique.size() == g.points.size());
      for (int k = 0; k < 100; ++k) {
        CHECK(unique.count(g.points[rng() % g.points.size()] ^ g.points[rng() % g.points.size()]) == 1);
      }
      const auto spanned = enumerate_points(generator_net(gen));
      CHECK(std::set<NetPoint>(spanned.begin(), spanned.end()) == unique);
    }
  }

  TEST_CASE("stream points equal C_k U computed from the sequence") {
    std::mt19937_64 rng(229);
    const int d = 7;
    const int n = 12;
    const int dims = 3;
    const SequentialGenerator gen(random_primitive_poly(d, rng), random_full_rank_matrix(d, n, rng), dims);
    const auto x = msequence(gen.poly(), [&] {
      std::vector<std::uint8_t> init(d, 0);
      init[0] = 1;
      return init;
    }(), (std::size_t{1} << d) + d + dims);
    SequentialStream stream(gen);
    NetPoint p(n, dims);
    REQUIRE(stream.next(p));
    CHECK(p.is_zero());
    for (std::size_t k = 0; k + 1 < (std::size_t{1} << d); ++k) {
      REQUIRE(stream.next(p));
      for (int t = 0; t < dims; ++t) {
        Row row = 0;
        for (int i = 0; i < d; ++i) {
          if (x[k + t + i]) row ^= gen.transform().row(i);
        }
        CHECK(p.row(t) == row);
      }
    }
    CHECK_FALSE(stream.next(p));
  }

  TEST_CASE("generator validation") {
    const PrimitivePoly p(0b1011);
    CHECK_THROWS_AS(SequentialGenerator(p, BitMatrix::identity(2), 2), DimensionError);
    CHECK_THROWS_AS(SequentialGenerator(p, BitMatrix::from_rows(3, {0b110, 0b011, 0b101}), 2), RankError);
    CHECK_THROWS_AS(SequentialGenerator(p, BitMatrix::identity(3), 2, 0), DomainError);
    CHECK_THROWS_AS(SequentialGenerator(p, BitMatrix::identity(3), 0), DimensionError);
  }
}
