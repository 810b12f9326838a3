#include "wafomlab/lowdisc.hpp"

#include <string>

#include "wafomlab/errors.hpp"

namespace wafomlab {

namespace {

bool is_prime(unsigned v) {
  if (v < 2) return false;
  for (unsigned p = 2; p * p <= v; ++p) {
    if (v % p == 0) return false;
  }
  return true;
}

void check_args(std::uint64_t count, int dimensions) {
  if (count < 1) throw DomainError("point count must be at least 1");
  if (dimensions < 1) throw DimensionError("dimension S must be positive");
}

}  // namespace

double radical_inverse(std::uint64_t k, unsigned base) {
  const double inv = 1.0 / base;
  double scale = inv;
  double x = 0.0;
  while (k != 0) {
    x += static_cast<double>(k % base) * scale;
    k /= base;
    scale *= inv;
  }
  return x;
}

std::vector<unsigned> first_primes(int count) {
  std::vector<unsigned> primes;
  for (unsigned v = 2; static_cast<int>(primes.size()) < count; ++v) {
    if (is_prime(v)) primes.push_back(v);
  }
  return primes;
}

unsigned next_prime(unsigned value) {
  unsigned v = value < 2 ? 2 : value;
  while (!is_prime(v)) ++v;
  return v;
}

PointSet halton_points(std::uint64_t count, int dimensions) {
  check_args(count, dimensions);
  const auto bases = first_primes(dimensions);
  PointSet out(dimensions);
  out.reserve(count);
  std::vector<double> x(static_cast<std::size_t>(dimensions));
  for (std::uint64_t k = 1; k <= count; ++k) {
    for (int t = 0; t < dimensions; ++t) {
      x[static_cast<std::size_t>(t)] = radical_inverse(k, bases[static_cast<std::size_t>(t)]);
    }
    out.push_back(x);
  }
  return out;
}

PointSet faure_points(std::uint64_t count, int dimensions) {
  check_args(count, dimensions);
  const unsigned b = next_prime(static_cast<unsigned>(dimensions));

  int max_digits = 1;
  for (std::uint64_t v = count; v >= b; v /= b) ++max_digits;

  // binom[r][j] mod b
  std::vector<std::vector<unsigned>> binom(static_cast<std::size_t>(max_digits));
  for (int r = 0; r < max_digits; ++r) {
    auto& row = binom[static_cast<std::size_t>(r)];
    row.assign(static_cast<std::size_t>(r) + 1, 1);
    for (int j = 1; j < r; ++j) {
      row[static_cast<std::size_t>(j)] =
          (binom[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(j) - 1] +
           binom[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(j)]) % b;
    }
  }

  PointSet out(dimensions);
  out.reserve(count);
  std::vector<unsigned> digits(static_cast<std::size_t>(max_digits));
  std::vector<double> x(static_cast<std::size_t>(dimensions));
  for (std::uint64_t k = 1; k <= count; ++k) {
    int len = 0;
    for (std::uint64_t v = k; v != 0; v /= b) digits[static_cast<std::size_t>(len++)] = static_cast<unsigned>(v % b);
    for (int i = 0; i < dimensions; ++i) {
      // y_j = sum_{r >= j} C(r, j) i^{r-j} a_r  (mod b)
      double value = 0.0;
      double scale = 1.0 / b;
      for (int j = 0; j < len; ++j) {
        unsigned y = 0;
        unsigned power = 1;  // i^{r-j} mod b
        for (int r = j; r < len; ++r) {
          y = (y + binom[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * power % b *
                       digits[static_cast<std::size_t>(r)]) % b;
          power = power * static_cast<unsigned>(i) % b;
        }
        value += y * scale;
        scale /= b;
      }
      x[static_cast<std::size_t>(i)] = value;
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace wafomlab
