#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wafomlab/errors.hpp"
#include "wafomlab/search.hpp"
#include "wafomlab/wafom.hpp"

using namespace wafomlab;

namespace {

LinearNet single(int n, Row row) { return {n, 1, {NetPoint::from_rows(n, {row})}}; }

SequentialGenerator random_generator(int d, int n, int dims, std::mt19937_64& rng) {
  return {random_primitive_poly(d, rng), random_full_rank_matrix(d, n, rng), dims};
}

}  // namespace

TEST_SUITE("wafom") {
  TEST_CASE("mu") {
    CHECK(mu(NetPoint(3, 2)) == 0);
    CHECK(mu(NetPoint::from_rows(3, {0b010})) == 2);
    CHECK(mu(NetPoint::from_rows(2, {0b11, 0b11})) == 6);
  }

  TEST_CASE("wafom_dual hand values") {
    CHECK(wafom_dual(LinearNet::full(2, 1)).value == 0.0);
    CHECK(wafom_dual(LinearNet::zero(2, 1)).value == doctest::Approx(0.875).epsilon(1e-15));
    CHECK(wafom_dual(single(2, 0b11)).value == doctest::Approx(0.125).epsilon(1e-15));
    const auto r = wafom_dual(single(2, 0b10));
    CHECK(r.value == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(r.method == WafomMethod::dual);
    CHECK(r.log2_value == doctest::Approx(-2.0));
    CHECK(std::isinf(wafom_dual(LinearNet::full(2, 1)).log2_value));
  }

  TEST_CASE("wafom_dual refuses oversized duals") {
    CHECK_THROWS_AS(wafom_dual(LinearNet::zero(30, 1)), CapacityError);
    CHECK_THROWS_AS(wafom_dual(LinearNet::zero(16, 1), 15), CapacityError);
    CHECK(wafom_dual(LinearNet::zero(16, 1), 16).value == doctest::Approx(wafom_of_zero_net({16, 1})));
  }

  TEST_CASE("c_hat closed forms") {
    CHECK(c_hat(NetPoint::from_rows(1, {1})) == 0.25);
    CHECK(c_hat(NetPoint::from_rows(2, {0b00})) == 0.46875);
    CHECK(c_hat(NetPoint::from_rows(2, {0b11})) == 0.09375);
  }

  TEST_CASE("c_hat equals the Fourier transform of 2^-mu") {
    for (const Shape s : {Shape{2, 1}, Shape{3, 2}, Shape{2, 4}, Shape{4, 2}, Shape{8, 1}}) {
      std::vector<double> c(std::size_t{1} << s.flat_size());
      for (std::uint64_t a = 0; a < c.size(); ++a) c[a] = std::ldexp(1.0, -oracle::weight(a, s));
      const auto chat = fourier_transform(c, s);
      for (std::uint64_t b = 0; b < c.size(); ++b) {
        CHECK(std::fabs(c_hat(NetPoint::from_index(s, b)) - chat[b]) <= 1e-12);
      }
    }
  }

  TEST_CASE("wafom_inversion hand values") {
    CHECK(wafom_inversion(single(2, 0b11)).value == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(wafom_inversion(single(2, 0b10)).value == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(std::fabs(wafom_inversion(LinearNet::full(2, 1)).value) <= 1e-15);
    CHECK(wafom_inversion(LinearNet::zero(2, 1)).value == doctest::Approx(0.875).epsilon(1e-15));
  }

  TEST_CASE("zero net matches the closed form") {
    for (const Shape s : {Shape{2, 1}, Shape{5, 2}, Shape{30, 4}}) {
      CHECK(std::fabs(wafom_inversion(LinearNet::zero(s.digits, s.dimensions)).value - wafom_of_zero_net(s)) <=
            1e-12);
    }
    CHECK(std::fabs(wafom_dual(LinearNet::zero(4, 2)).value - wafom_of_zero_net({4, 2})) <= 1e-12);
  }

  TEST_CASE("dual and inversion agree with the scan oracle on random subspaces") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
      const Shape s{1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 2)};
      const int dim = static_cast<int>(rng() % (s.flat_size() + 1));
      const LinearNet net = oracle::random_subspace(s, dim, rng);
      const double scan = oracle::wafom_by_scan(net);
      CHECK(std::fabs(wafom_dual(net).value - scan) <= 1e-12);
      CHECK(std::fabs(wafom_inversion(net).value - scan) <= 1e-12);
    }
  }

  TEST_CASE("exact rational WAFOM matches both methods") {
    using boost::multiprecision::cpp_rational;
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 20; ++trial) {
      const Shape s{2 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3)};
      const int dim = static_cast<int>(rng() % (s.flat_size() + 1));
      const LinearNet net = oracle::random_subspace(s, dim, rng);
      cpp_rational exact = 0;
      for (std::uint64_t a = 1; a < (std::uint64_t{1} << s.flat_size()); ++a) {
        if (oracle::orthogonal(a, net)) exact += cpp_rational(1, cpp_rational::value_type(1) << oracle::weight(a, s));
      }
      const double e = static_cast<double>(exact);
      CHECK(wafom_dual(net).value == doctest::Approx(e).epsilon(1e-14));
      CHECK(std::fabs(wafom_inversion(net).value - e) <= 1e-14);
    }
  }

  TEST_CASE("wafom_inversion is basis invariant") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 30; ++trial) {
      const Shape s{1 + static_cast<int>(rng() % 12), 1 + static_cast<int>(rng() % 4)};
      const int dim = static_cast<int>(rng() % std::min(s.flat_size() + 1, 14));
      const LinearNet net = oracle::random_subspace(s, dim, rng);
      // Random invertible recombination of the same basis.
      std::vector<NetPoint> other;
      Echelon e(s);
      while (static_cast<int>(other.size()) < dim) {
        const NetPoint p = combine(net, rng() & ((std::uint64_t{1} << dim) - 1));
        if (e.insert(p)) other.push_back(p);
      }
      const LinearNet same(s.digits, s.dimensions, other);
      CHECK(std::fabs(wafom_inversion(net).value - wafom_inversion(same).value) <= 1e-12);
    }
  }

  TEST_CASE("wafom_inversion is bit-identical across thread counts") {
    std::mt19937_64 rng(107);
    const LinearNet net = oracle::random_subspace({30, 4}, 18, rng);
    const double one = wafom_inversion(net, {.threads = 1}).value;
    CHECK(wafom_inversion(net, {.threads = 3}).value == one);
    CHECK(wafom_inversion(net, {.threads = 8}).value == one);
  }

  TEST_CASE("error bound linkage on random tables") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 30; ++trial) {
      const Shape s{1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3)};
      const int dim = static_cast<int>(rng() % (s.flat_size() + 1));
      const LinearNet net = oracle::random_subspace(s, dim, rng);
      const auto f = oracle::random_table(s, rng);
      const auto fhat = fourier_transform(f, s);
      double mean = 0.0;
      for (const auto& b : enumerate_points(net)) mean += f[b.index()];
      mean /= std::ldexp(1.0, dim);
      const double error = std::fabs(mean - fhat[0]);

      double tail = 0.0;
      for (const auto& a : enumerate_points(dual_space(net))) {
        if (!a.is_zero()) tail += std::fabs(fhat[a.index()]);
      }
      double norm = 0.0;
      for (std::uint64_t a = 0; a < fhat.size(); ++a) {
        norm = std::max(norm, std::fabs(fhat[a]) * std::ldexp(1.0, oracle::weight(a, s)));
      }
      CHECK(error <= tail + 1e-12);
      CHECK(tail <= norm * wafom_dual(net).value + 1e-12);
    }
  }

  TEST_CASE("sequential hand-traced generators") {
    // t^2 + t + 1 from (1, 0): windows (1,0), (0,1), (1,1).
    const PrimitivePoly poly(0b111);
    // S = 1, n = 3, U rows 110 / 011: P = {000, 110, 011, 101}, dual {000, 111}.
    const SequentialGenerator g1(poly, BitMatrix::from_rows(3, {0b110, 0b011}), 1);
    CHECK(wafom_sequential(g1).value == doctest::Approx(0.015625).epsilon(1e-15));
    CHECK(wafom_dual(generator_net(g1)).value == doctest::Approx(0.015625).epsilon(1e-15));
    // S = 2, n = 2, U = I: dual nonzero weights 3, 4, 5.
    const SequentialGenerator g2(poly, BitMatrix::identity(2), 2);
    CHECK(wafom_sequential(g2).value == doctest::Approx(0.21875).epsilon(1e-15));
    CHECK(wafom_dual(generator_net(g2)).value == doctest::Approx(0.21875).epsilon(1e-15));
    CHECK(oracle::wafom_by_scan(generator_net(g2)) == 0.21875);
  }

  TEST_CASE("sequential agrees with inversion and ignores renormalization") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 5; ++trial) {
      const SequentialGenerator gen = random_generator(10, 30, 4, rng);
      const double inv = wafom_inversion(generator_net(gen)).value;
      const double seq = wafom_sequential(gen).value;
      const double raw = wafom_sequential(gen, {.renormalize_every = 0}).value;
      CHECK(std::fabs(seq - inv) <= 1e-9 * inv);
      CHECK(std::fabs(raw - seq) <= 1e-9 * seq);
    }
  }

  TEST_CASE("report CSV row") {
    const auto r = wafom_inversion(single(2, 0b11));
    CHECK(to_csv_row(r) == "inversion,2,1,1,0.125,-3");
  }
}
