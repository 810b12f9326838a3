#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "wafomlab/f2core.hpp"

namespace wafomlab {

/// t^d + a_1 t^{d-1} + ... + a_d, primitive over F_2, 1 <= d <= 32.
class PrimitivePoly {
 public:
  /// `polynomial` packs the coefficient of t^k at bit k. Throws DomainError
  /// unless the polynomial is primitive.
  explicit PrimitivePoly(std::uint64_t polynomial);

  /// From (a_1, ..., a_d).
  static PrimitivePoly from_coefficients(const std::vector<int>& a);

  int degree() const { return degree_; }
  std::uint64_t polynomial() const { return polynomial_; }
  /// a_i for 1 <= i <= d.
  int coefficient(int i) const;
  /// Bit i-1 holds a_i: the feedback taps of the recurrence.
  std::uint32_t taps() const { return taps_; }

  friend bool operator==(const PrimitivePoly&, const PrimitivePoly&) = default;

 private:
  int degree_;
  std::uint64_t polynomial_;
  std::uint32_t taps_;
};

/// True iff t has multiplicative order 2^d - 1 modulo `polynomial` and the
/// polynomial is irreducible. Throws DomainError unless 1 <= degree <= 32.
bool is_primitive(std::uint64_t polynomial);

/// Coefficients a_1..a_{d-1} are ones with probability 3/4, a_d = 1; redrawn
/// until primitive.
PrimitivePoly random_primitive_poly(int degree, std::mt19937_64& rng);

/// The first primitive polynomial of the given degree in increasing numeric order.
PrimitivePoly first_primitive_poly(int degree);

/// x_{j+d} = a_1 x_{j+d-1} + ... + a_d x_j from init = (x_0, ..., x_{d-1}).
std::vector<std::uint8_t> msequence(const PrimitivePoly& poly, const std::vector<std::uint8_t>& init,
                                    std::size_t length);

/// Point set generator: point k is C_k U where row T of C_k is the M-sequence
/// window (x_{k+T-1}, ..., x_{k+T+d-2}) and U is a d x n output transform.
///
/// Windows are packed with x_i at bit d-1, so the default initial state
/// (1, 0, ..., 0) is the word 1 << (d-1).
class SequentialGenerator {
 public:
  SequentialGenerator(PrimitivePoly poly, BitMatrix transform, int dimensions);
  SequentialGenerator(PrimitivePoly poly, BitMatrix transform, int dimensions,
                      std::uint32_t initial_window);

  const PrimitivePoly& poly() const { return poly_; }
  const BitMatrix& transform() const { return transform_; }
  int dim() const { return poly_.degree(); }
  int digits() const { return transform_.cols(); }
  int dimensions() const { return dimensions_; }
  Shape shape() const { return {digits(), dimensions_}; }
  std::uint32_t initial_window() const { return initial_window_; }

 private:
  PrimitivePoly poly_;
  BitMatrix transform_;
  int dimensions_;
  std::uint32_t initial_window_;
};

/// Advances a packed window (x_i, ..., x_{i+d-1}) to (x_{i+1}, ..., x_{i+d}).
class WindowShifter {
 public:
  explicit WindowShifter(const PrimitivePoly& poly);
  std::uint32_t operator()(std::uint32_t window) const {
    // Bit l-1 of the window is x_{i+d-l}, which pairs with a_l.
#if defined(__GNUC__) || defined(__clang__)
    const auto feedback = static_cast<std::uint32_t>(__builtin_parity(window & taps_));
#else
    const auto feedback = static_cast<std::uint32_t>(std::popcount(window & taps_) & 1);
#endif
    return ((window << 1) | feedback) & mask_;
  }

 private:
  std::uint32_t taps_;
  std::uint32_t mask_;
};

/// Eight shifter steps at once: the next eight sequence bits are linear in the
/// window, so they come from one table lookup per window byte.
class WindowJumper {
 public:
  static constexpr std::size_t kSteps = 8;

  explicit WindowJumper(const PrimitivePoly& poly);

  /// out[j] is the window after j + 1 steps; window ends at out[kSteps - 1].
  void advance(std::uint32_t& window, std::array<std::uint32_t, kSteps>& out) const {
    unsigned bits = 0;  // first new bit in bit 7
    for (std::size_t c = 0; c < tables_.size(); ++c) {
      bits ^= tables_[c][(window >> (8 * c)) & 0xFFU];
    }
    const std::uint64_t wide = (std::uint64_t{window} << kSteps) | bits;
    for (std::size_t j = 0; j < kSteps; ++j) {
      out[j] = static_cast<std::uint32_t>(wide >> (kSteps - 1 - j)) & mask_;
    }
    window = out[kSteps - 1];
  }

 private:
  std::uint32_t mask_;
  std::vector<std::array<std::uint8_t, 256>> tables_;
};

/// Table-driven product window * U, eight window bits per lookup.
class WindowTransform {
 public:
  explicit WindowTransform(const BitMatrix& transform);
  Row operator()(std::uint32_t window) const {
    Row acc = 0;
    for (std::size_t c = 0; c < tables_.size(); ++c) {
      acc ^= tables_[c][(window >> (8 * c)) & 0xFFU];
    }
    return acc;
  }

 private:
  std::vector<std::array<Row, 256>> tables_;
};

/// Streams 0, C_0 U, C_1 U, ..., C_{2^d-2} U. Each step after the first point
/// computes only the newly attached row.
class SequentialStream {
 public:
  explicit SequentialStream(const SequentialGenerator& gen);

  std::uint64_t size() const { return std::uint64_t{1} << gen_->dim(); }
  bool next(NetPoint& out);

 private:
  const SequentialGenerator* gen_;
  WindowShifter shift_;
  WindowTransform apply_;
  std::uint64_t position_ = 0;
  std::uint32_t last_window_ = 0;  // window of the bottom row
  std::vector<Row> rows_;          // ring, top row at head_
  std::size_t head_ = 0;
};

struct GeneratedNet {
  LinearNet net;
  std::vector<NetPoint> points;  // stream order: 0 first, then C_k U
};

/// All 2^d points plus a basis of WU: the images of the d unit initial states.
GeneratedNet generate_net(const SequentialGenerator& gen, int cap = kDefaultEnumerationCap);

/// Basis of WU without materializing the points.
LinearNet generator_net(const SequentialGenerator& gen);

}  // namespace wafomlab
