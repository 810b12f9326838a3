#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wafomlab/errors.hpp"
#include "wafomlab/net_io.hpp"

using namespace wafomlab;

TEST_SUITE("net_io") {
  TEST_CASE("format matches the wafom-net v1 layout") {
    const LinearNet net(3, 2, {NetPoint::from_rows(3, {0b100, 0b011}), NetPoint::from_rows(3, {0b001, 0b000})});
    CHECK(format_net(net) == "wafom-net v1\nn=3 S=2 d=2\n100 011\n001 000\n");
  }

  TEST_CASE("parse inverts format on random nets") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
      const Shape s{1 + static_cast<int>(rng() % 40), 1 + static_cast<int>(rng() % 5)};
      const int dim = static_cast<int>(rng() % std::min(s.flat_size() + 1, 12));
      const LinearNet net = oracle::random_subspace(s, dim, rng);
      const LinearNet back = parse_net(format_net(net));
      CHECK(back.shape() == net.shape());
      CHECK(back.basis() == net.basis());
    }
  }

  TEST_CASE("empty basis and trailing newline handling") {
    const LinearNet zero = parse_net("wafom-net v1\nn=2 S=1 d=0\n");
    CHECK(zero.dim() == 0);
    CHECK(parse_net("wafom-net v1\nn=2 S=1 d=1\n11").dim() == 1);
  }

  TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_net(""), ParseError);
    CHECK_THROWS_AS(parse_net("wafom-net v2\nn=2 S=1 d=1\n11\n"), ParseError);
    CHECK_THROWS_AS(parse_net("wafom-net v1\nn=2 S=1\n11\n"), ParseError);
    CHECK_THROWS_AS(parse_net("wafom-net v1\nn=2 S=1 d=2\n11\n"), ParseError);
    CHECK_THROWS_AS(parse_net("wafom-net v1\nn=2 S=1 d=1\n11\n10\n"), ParseError);
    CHECK_THROWS_AS(parse_net("wafom-net v1\nn=2 S=1 d=1\n12\n"), ParseError);
    CHECK_THROWS_AS(parse_net("wafom-net v1\nn=2 S=1 d=1\n111\n"), ParseError);
    CHECK_THROWS_AS(parse_net("wafom-net v1\nn=2 S=2 d=1\n11\n"), ParseError);
    CHECK_THROWS_AS(parse_net("wafom-net v1\r\nn=2 S=1 d=1\r\n11\r\n"), ParseError);
    CHECK_THROWS_AS(parse_net("wafom-net v1\nn=2 S=1 d=3\n11\n10\n01\n"), ParseError);
  }

  TEST_CASE("parser rejects rank-deficient bases") {
    CHECK_THROWS_AS(parse_net("wafom-net v1\nn=2 S=1 d=2\n11\n11\n"), RankError);
    CHECK_THROWS_AS(parse_net("wafom-net v1\nn=2 S=1 d=1\n00\n"), RankError);
  }
}
