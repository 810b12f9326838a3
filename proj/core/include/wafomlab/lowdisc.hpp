#pragma once

#include <cstdint>
#include <vector>

#include "wafomlab/point_set.hpp"

namespace wafomlab {

/// Digits of k in base b reflected about the radix point.
double radical_inverse(std::uint64_t k, unsigned base);

/// The first `count` primes.
std::vector<unsigned> first_primes(int count);

/// Smallest prime >= value (2 for value <= 2).
unsigned next_prime(unsigned value);

/// Halton points k = 1..N with the first S primes as bases.
PointSet halton_points(std::uint64_t count, int dimensions);

/// Faure points k = 1..N in base b = smallest prime >= S. Coordinate i applies
/// the (i-1)-th power of the Pascal matrix mod b to the base-b digits of k.
PointSet faure_points(std::uint64_t count, int dimensions);

}  // namespace wafomlab
