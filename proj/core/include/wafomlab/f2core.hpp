#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wafomlab {

/// One n-digit binary fraction. Digit j (1-based, weight 2^-j) lives at bit n - j,
/// so the integer value of the word divided by 2^n is the fraction.
using Row = std::uint64_t;

inline constexpr int kMaxDigits = 64;

/// Enumeration cap in log2 points. Callers may raise it explicitly.
inline constexpr int kDefaultEnumerationCap = 26;

/// Largest n*S accepted by the dense Walsh/Fourier oracle.
inline constexpr int kMaxFourierBits = 22;

struct Shape {
  int digits = 0;      // n
  int dimensions = 0;  // S

  int flat_size() const { return digits * dimensions; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

/// An S x n bit matrix: a point of V = (F_2^n)^S.
///
/// Rows are addressed 0-based (`row` in [0, S)), digits 1-based (`digit` in [1, n]).
/// The flattened F_2^{nS} index of (row, digit) is row * n + digit - 1.
class NetPoint {
 public:
  NetPoint() = default;
  NetPoint(int digits, int dimensions);

  static NetPoint from_rows(int digits, std::vector<Row> rows);
  /// Inverse of `index()`; requires n * S <= 64.
  static NetPoint from_index(Shape shape, std::uint64_t index);
  /// The matrix with a single one at (row, digit).
  static NetPoint unit(Shape shape, int row, int digit);

  Shape shape() const { return {digits_, static_cast<int>(rows_.size())}; }
  int digits() const { return digits_; }
  int dimensions() const { return static_cast<int>(rows_.size()); }

  Row row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
  std::span<const Row> rows() const { return rows_; }
  void set_row(int r, Row value);

  bool bit(int r, int digit) const;
  void set_bit(int r, int digit, bool value);

  bool flat_bit(int k) const;
  void flip_flat(int k);
  /// Smallest flattened index holding a one, or -1 for the zero matrix.
  int leading_flat() const;

  bool is_zero() const;

  /// Row-major concatenation of the rows, row 0 most significant. Requires n * S <= 64.
  std::uint64_t index() const;

  NetPoint& operator^=(const NetPoint& other);
  friend NetPoint operator^(NetPoint a, const NetPoint& b) { return a ^= b; }
  friend bool operator==(const NetPoint&, const NetPoint&) = default;
  friend bool operator<(const NetPoint& a, const NetPoint& b) {
    return a.rows_ < b.rows_;
  }

 private:
  int digits_ = 0;
  std::vector<Row> rows_;
};

/// All-ones mask for the low n bits of a row word.
constexpr Row digit_mask(int digits) {
  return digits >= 64 ? ~Row{0} : ((Row{1} << digits) - 1);
}

/// Mod-2 inner product sum b_{T,j} a_{T,j}.
int inner_product(const NetPoint& b, const NetPoint& a);

/// (-1)^{inner_product(b, a)}.
int character(const NetPoint& b, const NetPoint& a);

/// F_2-rank of the span of `points`.
int rank(std::span<const NetPoint> points);

/// Row-echelon accumulator over F_2^{nS}, used for rank and membership tests.
class Echelon {
 public:
  explicit Echelon(Shape shape) : shape_(shape) {}

  /// Reduces `v` against the stored vectors; returns the remainder.
  NetPoint reduce(NetPoint v) const;
  /// Adds `v` if independent. Returns true when the rank grew.
  bool insert(const NetPoint& v);
  bool contains(const NetPoint& v) const { return reduce(v).is_zero(); }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  Shape shape_;
  std::vector<NetPoint> rows_;  // ascending pivots
  std::vector<int> pivots_;
};

/// An F_2-linear subspace P of V given by a rank-d basis; |P| = 2^d.
class LinearNet {
 public:
  LinearNet(int digits, int dimensions, std::vector<NetPoint> basis);

  static LinearNet zero(int digits, int dimensions);
  static LinearNet full(int digits, int dimensions);

  Shape shape() const { return {digits_, dimensions_}; }
  int digits() const { return digits_; }
  int dimensions() const { return dimensions_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<NetPoint>& basis() const { return basis_; }

  bool contains(const NetPoint& p) const;

 private:
  int digits_;
  int dimensions_;
  std::vector<NetPoint> basis_;
};

/// Throws CapacityError when 2^dim exceeds 2^cap.
void check_enumeration_cap(int dim, int cap);

/// Gray-code index: consecutive values differ in one bit.
constexpr std::uint64_t gray_code(std::uint64_t i) { return i ^ (i >> 1); }

/// The point of `net` whose coefficient vector is `coefficients` (bit k selects basis k).
NetPoint combine(const LinearNet& net, std::uint64_t coefficients);

/// Streams the 2^d points of a net in Gray-code order of coefficient vectors,
/// starting at 0. Consecutive points differ by exactly one basis vector.
class PointStream {
 public:
  explicit PointStream(const LinearNet& net, int cap = kDefaultEnumerationCap);

  std::uint64_t size() const { return count_; }
  /// Writes the next point to `out`; returns false once all points were produced.
  bool next(NetPoint& out);
  /// Basis index XORed in to produce the most recent point (-1 for the first).
  int last_flip() const { return last_flip_; }

 private:
  const LinearNet* net_;
  NetPoint current_;
  std::uint64_t position_ = 0;
  std::uint64_t count_;
  int last_flip_ = -1;
};

std::vector<NetPoint> enumerate_points(const LinearNet& net, int cap = kDefaultEnumerationCap);

/// Basis of P^perp = { A : (B|A) = 0 for all B in P }; dimension nS - d.
LinearNet dual_space(const LinearNet& net);

/// Sum over B in P of <B|A>. Exactly |P| when A is in P^perp, 0 otherwise.
double character_sum(const LinearNet& net, const NetPoint& a, int cap = kDefaultEnumerationCap);

/// Dense discrete Fourier (Walsh) transform of a table indexed by NetPoint::index():
/// fhat(A) = 2^{-nS} sum_B f(B) <B|A>. Plain O(4^{nS}) double loop.
std::vector<double> fourier_transform(std::span<const double> table, Shape shape);

/// Fourier expansion f(B) = sum_A fhat(A) <B|A>; inverse of fourier_transform.
std::vector<double> fourier_expand(std::span<const double> coefficients, Shape shape);

/// Dense bit matrix with at most 64 columns. Column j (1-based) of a row is stored
/// at bit cols - j, the same convention as the digits of a Row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);
  static BitMatrix from_rows(int cols, std::vector<Row> rows);
  static BitMatrix identity(int size);

  int rows() const { return static_cast<int>(data_.size()); }
  int cols() const { return cols_; }
  Row row(int r) const { return data_[static_cast<std::size_t>(r)]; }
  std::span<const Row> row_words() const { return data_; }
  void set_row(int r, Row value);
  bool get(int r, int col) const;
  void set(int r, int col, bool value);

  /// [this | right]: appends the columns of `right`.
  BitMatrix concat_columns(const BitMatrix& right) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int cols_ = 0;
  std::vector<Row> data_;
};

/// Rank over F_2 of the rows of a matrix.
int matrix_rank(const BitMatrix& m);

/// Coordinates of B in [0,1)^S, optionally shifted by 2^{-n-1} to the cube midpoint.
std::vector<double> to_unit_cube(const NetPoint& b, bool midpoint);
void to_unit_cube(const NetPoint& b, bool midpoint, std::span<double> out);

}  // namespace wafomlab
