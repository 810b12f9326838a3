#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "wafomlab/errors.hpp"
#include "wafomlab/sobol.hpp"
#include "wafomlab/wafom.hpp"

using namespace wafomlab;

TEST_SUITE("sobol") {
  TEST_CASE("first 16 four-dimensional points match the reference table") {
    // Unscrambled Joe-Kuo Sobol points scaled by 2^30, sorted.
    const std::vector<std::array<std::uint64_t, 4>> expected{
        {0, 0, 0, 0},
        {67108864, 1006632960, 603979776, 335544320},
        {134217728, 671088640, 402653184, 134217728},
        {201326592, 335544320, 1006632960, 469762048},
        {268435456, 805306368, 805306368, 805306368},
        {335544320, 201326592, 335544320, 603979776},
        {402653184, 402653184, 671088640, 939524096},
        {469762048, 603979776, 201326592, 738197504},
        {536870912, 536870912, 536870912, 536870912},
        {603979776, 469762048, 67108864, 872415232},
        {671088640, 134217728, 939524096, 671088640},
        {738197504, 872415232, 469762048, 1006632960},
        {805306368, 268435456, 268435456, 268435456},
        {872415232, 738197504, 872415232, 67108864},
        {939524096, 939524096, 134217728, 402653184},
        {1006632960, 67108864, 738197504, 201326592},
    };
    std::vector<std::array<std::uint64_t, 4>> got;
    for (const auto& p : enumerate_points(sobol_net(4, 4, 30))) {
      got.push_back({p.row(0), p.row(1), p.row(2), p.row(3)});
    }
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }

  TEST_CASE("dimension 1 is van der Corput") {
    const auto pts = enumerate_points(sobol_net(5, 1, 5));
    std::set<Row> rows;
    for (const auto& p : pts) rows.insert(p.row(0));
    CHECK(rows.size() == 32);
    const auto v = sobol_direction_vectors(1);
    for (int k = 0; k < kSobolMaxBits; ++k) CHECK(v[static_cast<std::size_t>(k)] == (1U << (31 - k)));
  }

  TEST_CASE("direction table") {
    CHECK(sobol_max_dimension() >= 64);
    const auto table = parse_direction_numbers(embedded_direction_table());
    REQUIRE(!table.empty());
    CHECK(table.front().dimension == 2);
    CHECK(table.front().degree == 1);
    CHECK(parse_direction_numbers("d s a m_i\n2 1 0 1\n3 2 1 1 3\n").size() == 2);
    CHECK_THROWS_AS(parse_direction_numbers("2 1 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_direction_numbers("3 2 1 1 5\n"), ParseError);
    CHECK_THROWS_AS(sobol_direction_vectors(sobol_max_dimension() + 1), DimensionError);
  }

  TEST_CASE("Sobol nets are full-rank subspaces") {
    for (int d : {1, 6, 12}) {
      const LinearNet net = sobol_net(d, 5, 20);
      CHECK(net.dim() == d);
      const auto pts = enumerate_points(net);
      const std::set<NetPoint> unique(pts.begin(), pts.end());
      CHECK(unique.size() == pts.size());
    }
    const int order[] = {3, 1};
    const LinearNet swapped = sobol_net(4, 2, 8, order);
    const LinearNet plain = sobol_net(4, 3, 8);
    for (int k = 0; k < 4; ++k) {
      CHECK(swapped.basis()[k].row(0) == plain.basis()[k].row(2));
      CHECK(swapped.basis()[k].row(1) == plain.basis()[k].row(0));
    }
    CHECK_THROWS_AS(sobol_net(10, 2, 8), DimensionError);
  }

  TEST_CASE("Sobol WAFOM agrees across methods") {
    const LinearNet small = sobol_net(5, 2, 5);
    const double scan = oracle::wafom_by_scan(small);
    CHECK(std::fabs(wafom_dual(small).value - scan) <= 1e-12);
    CHECK(std::fabs(wafom_inversion(small).value - scan) <= 1e-12);
    // Adding points to a Sobol sequence never increases its WAFOM.
    double previous = HUGE_VAL;
    for (int d = 4; d <= 14; ++d) {
      const double w = wafom_inversion(sobol_net(d, 4, 30)).value;
      CHECK(w <= previous);
      previous = w;
    }
  }
}
