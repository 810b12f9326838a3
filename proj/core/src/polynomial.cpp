#include "wafomlab/polynomial.hpp"

#include <array>
#include <bit>
#include <initializer_list>
#include <vector>

#include "wafomlab/errors.hpp"

namespace wafomlab::gf2poly {

int degree(std::uint64_t p) { return static_cast<int>(std::bit_width(p)) - 1; }

std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) {
    a ^= m << (da - dm);
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // Shift-and-add keeps every intermediate below t^{deg m}, so deg m <= 63 is safe.
  const int dm = degree(m);
  const std::uint64_t top = std::uint64_t{1} << dm;
  std::uint64_t result = 0;
  a = mod(a, m);
  while (b != 0) {
    if (b & 1U) result ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= m;
  }
  return result;
}

std::uint64_t pow_t(std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = mod(1, m);
  std::uint64_t base = mod(2, m);
  while (e != 0) {
    if (e & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(std::uint64_t p) {
  const int d = degree(p);
  if (d < 1) return false;
  if (d == 1) return true;
  std::uint64_t power = 2;  // t^{2^i} mod p
  for (int i = 1; i <= d / 2; ++i) {
    power = mulmod(power, power, p);
    if (gcd(p, power ^ 2U) != 1) return false;
  }
  return true;
}

namespace {

using FactorList = std::vector<std::uint64_t>;

const std::array<FactorList, kMaxPrimitiveDegree + 1>& factor_table() {
  static const std::array<FactorList, kMaxPrimitiveDegree + 1> table = {{
      {},
      {},
      {3},
      {7},
      {3, 5},
      {31},
      {3, 7},
      {127},
      {3, 5, 17},
      {7, 73},
      {3, 11, 31},
      {23, 89},
      {3, 5, 7, 13},
      {8191},
      {3, 43, 127},
      {7, 31, 151},
      {3, 5, 17, 257},
      {131071},
      {3, 7, 19, 73},
      {524287},
      {3, 5, 11, 31, 41},
      {7, 127, 337},
      {3, 23, 89, 683},
      {47, 178481},
      {3, 5, 7, 13, 17, 241},
      {31, 601, 1801},
      {3, 2731, 8191},
      {7, 73, 262657},
      {3, 5, 29, 43, 113, 127},
      {233, 1103, 2089},
      {3, 7, 11, 31, 151, 331},
      {2147483647},
      {3, 5, 17, 257, 65537},
  }};
  return table;
}

}  // namespace

std::span<const std::uint64_t> mersenne_prime_factors(int d) {
  if (d < 1 || d > kMaxPrimitiveDegree) {
    throw DomainError("degree must be in [1, 32]");
  }
  return factor_table()[static_cast<std::size_t>(d)];
}

}  // namespace wafomlab::gf2poly
