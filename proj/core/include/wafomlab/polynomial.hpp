#pragma once

#include <cstdint>
#include <span>

namespace wafomlab::gf2poly {

// Polynomials over F_2 packed into a word: bit k is the coefficient of t^k.

inline constexpr int kMaxPrimitiveDegree = 32;

int degree(std::uint64_t p);

/// a * b mod m, for deg a, deg b < deg m <= 32.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// t^e mod m.
std::uint64_t pow_t(std::uint64_t e, std::uint64_t m);

std::uint64_t mod(std::uint64_t a, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Ben-Or test: gcd(t^{2^i} - t, p) = 1 for i <= deg/2.
bool is_irreducible(std::uint64_t p);

/// Distinct prime factors of 2^d - 1 for 1 <= d <= 32 (empty for d = 1).
std::span<const std::uint64_t> mersenne_prime_factors(int d);

}  // namespace wafomlab::gf2poly
