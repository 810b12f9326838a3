#include "wafomlab/f2core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "wafomlab/errors.hpp"

namespace wafomlab {

namespace {

void check_shape_args(int digits, int dimensions) {
  if (digits < 1 || digits > kMaxDigits) {
    throw DimensionError("digits n must be in [1, 64], got " + std::to_string(digits));
  }
  if (dimensions < 1) {
    throw DimensionError("dimension S must be positive, got " + std::to_string(dimensions));
  }
}

void require_same_shape(const NetPoint& a, const NetPoint& b) {
  if (a.shape() != b.shape()) {
    throw DimensionError("shape mismatch between net points");
  }
}

void require_index_shape(Shape shape) {
  if (shape.flat_size() > 64) {
    throw CapacityError("n*S exceeds 64; points have no integer index");
  }
}

int bit_position(int digits, int digit) { return digits - digit; }

}  // namespace

NetPoint::NetPoint(int digits, int dimensions) : digits_(digits) {
  check_shape_args(digits, dimensions);
  rows_.assign(static_cast<std::size_t>(dimensions), Row{0});
}

NetPoint NetPoint::from_rows(int digits, std::vector<Row> rows) {
  check_shape_args(digits, static_cast<int>(rows.size()));
  for (Row r : rows) {
    if ((r & ~digit_mask(digits)) != 0) {
      throw DimensionError("row has bits beyond digit n");
    }
  }
  NetPoint p;
  p.digits_ = digits;
  p.rows_ = std::move(rows);
  return p;
}

NetPoint NetPoint::from_index(Shape shape, std::uint64_t index) {
  require_index_shape(shape);
  NetPoint p(shape.digits, shape.dimensions);
  const Row mask = digit_mask(shape.digits);
  for (int t = shape.dimensions - 1; t >= 0; --t) {
    p.rows_[static_cast<std::size_t>(t)] = index & mask;
    index = shape.digits >= 64 ? 0 : index >> shape.digits;
  }
  return p;
}

NetPoint NetPoint::unit(Shape shape, int row, int digit) {
  NetPoint p(shape.digits, shape.dimensions);
  p.set_bit(row, digit, true);
  return p;
}

void NetPoint::set_row(int r, Row value) {
  if ((value & ~digit_mask(digits_)) != 0) {
    throw DimensionError("row has bits beyond digit n");
  }
  rows_.at(static_cast<std::size_t>(r)) = value;
}

bool NetPoint::bit(int r, int digit) const {
  return (rows_.at(static_cast<std::size_t>(r)) >> bit_position(digits_, digit)) & 1U;
}

void NetPoint::set_bit(int r, int digit, bool value) {
  if (digit < 1 || digit > digits_) {
    throw DimensionError("digit index out of range");
  }
  Row& w = rows_.at(static_cast<std::size_t>(r));
  const Row m = Row{1} << bit_position(digits_, digit);
  w = value ? (w | m) : (w & ~m);
}

bool NetPoint::flat_bit(int k) const { return bit(k / digits_, k % digits_ + 1); }

void NetPoint::flip_flat(int k) {
  rows_[static_cast<std::size_t>(k / digits_)] ^= Row{1} << bit_position(digits_, k % digits_ + 1);
}

int NetPoint::leading_flat() const {
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    if (rows_[t] != 0) {
      const int p = std::bit_width(rows_[t]) - 1;
      return static_cast<int>(t) * digits_ + (digits_ - 1 - p);
    }
  }
  return -1;
}

bool NetPoint::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](Row r) { return r == 0; });
}

std::uint64_t NetPoint::index() const {
  require_index_shape(shape());
  std::uint64_t idx = 0;
  for (Row r : rows_) {
    idx = (digits_ >= 64 ? 0 : idx << digits_) | r;
  }
  return idx;
}

NetPoint& NetPoint::operator^=(const NetPoint& other) {
  require_same_shape(*this, other);
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    rows_[t] ^= other.rows_[t];
  }
  return *this;
}

int inner_product(const NetPoint& b, const NetPoint& a) {
  require_same_shape(b, a);
  int ones = 0;
  for (int t = 0; t < b.dimensions(); ++t) {
    ones += std::popcount(b.row(t) & a.row(t));
  }
  return ones & 1;
}

int character(const NetPoint& b, const NetPoint& a) { return inner_product(b, a) ? -1 : 1; }

NetPoint Echelon::reduce(NetPoint v) const {
  if (v.shape() != shape_) {
    throw DimensionError("shape mismatch in echelon reduction");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.flat_bit(pivots_[i])) {
      v ^= rows_[i];
    }
  }
  return v;
}

bool Echelon::insert(const NetPoint& v) {
  NetPoint r = reduce(v);
  const int pivot = r.leading_flat();
  if (pivot < 0) {
    return false;
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

int rank(std::span<const NetPoint> points) {
  if (points.empty()) {
    throw DimensionError("rank of an empty list is undefined");
  }
  Echelon e(points.front().shape());
  for (const NetPoint& p : points) {
    e.insert(p);
  }
  return e.rank();
}

LinearNet::LinearNet(int digits, int dimensions, std::vector<NetPoint> basis)
    : digits_(digits), dimensions_(dimensions), basis_(std::move(basis)) {
  check_shape_args(digits, dimensions);
  const Shape s{digits, dimensions};
  if (static_cast<int>(basis_.size()) > s.flat_size()) {
    throw RankError("basis has more than n*S vectors");
  }
  Echelon e(s);
  for (const NetPoint& b : basis_) {
    if (b.shape() != s) {
      throw DimensionError("basis vector shape does not match the net");
    }
    if (!e.insert(b)) {
      throw RankError("basis vectors are linearly dependent");
    }
  }
}

LinearNet LinearNet::zero(int digits, int dimensions) { return {digits, dimensions, {}}; }

LinearNet LinearNet::full(int digits, int dimensions) {
  const Shape s{digits, dimensions};
  std::vector<NetPoint> basis;
  for (int t = 0; t < dimensions; ++t) {
    for (int j = 1; j <= digits; ++j) {
      basis.push_back(NetPoint::unit(s, t, j));
    }
  }
  return {digits, dimensions, std::move(basis)};
}

bool LinearNet::contains(const NetPoint& p) const {
  Echelon e(shape());
  for (const NetPoint& b : basis_) {
    e.insert(b);
  }
  return e.contains(p);
}

void check_enumeration_cap(int dim, int cap) {
  if (dim > cap || dim >= 64) {
    throw CapacityError("enumeration of 2^" + std::to_string(dim) + " points exceeds cap 2^" +
                        std::to_string(cap));
  }
}

NetPoint combine(const LinearNet& net, std::uint64_t coefficients) {
  NetPoint p(net.digits(), net.dimensions());
  for (int k = 0; coefficients != 0; ++k, coefficients >>= 1) {
    if (coefficients & 1U) {
      p ^= net.basis()[static_cast<std::size_t>(k)];
    }
  }
  return p;
}

PointStream::PointStream(const LinearNet& net, int cap)
    : net_(&net), current_(net.digits(), net.dimensions()) {
  check_enumeration_cap(net.dim(), cap);
  count_ = std::uint64_t{1} << net.dim();
}

bool PointStream::next(NetPoint& out) {
  if (position_ >= count_) {
    return false;
  }
  if (position_ == 0) {
    last_flip_ = -1;
  } else {
    last_flip_ = std::countr_zero(position_);
    current_ ^= net_->basis()[static_cast<std::size_t>(last_flip_)];
  }
  ++position_;
  out = current_;
  return true;
}

std::vector<NetPoint> enumerate_points(const LinearNet& net, int cap) {
  PointStream stream(net, cap);
  std::vector<NetPoint> out;
  out.reserve(stream.size());
  NetPoint p;
  while (stream.next(p)) {
    out.push_back(p);
  }
  return out;
}

LinearNet dual_space(const LinearNet& net) {
  const Shape s = net.shape();
  const int width = s.flat_size();

  // Reduced row echelon form of the basis, one pivot column per row.
  std::vector<NetPoint> rows = net.basis();
  std::vector<int> pivot_cols;
  int next_row = 0;
  for (int col = 0; col < width && next_row < static_cast<int>(rows.size()); ++col) {
    int found = -1;
    for (int r = next_row; r < static_cast<int>(rows.size()); ++r) {
      if (rows[static_cast<std::size_t>(r)].flat_bit(col)) {
        found = r;
        break;
      }
    }
    if (found < 0) {
      continue;
    }
    std::swap(rows[static_cast<std::size_t>(found)], rows[static_cast<std::size_t>(next_row)]);
    const NetPoint pivot = rows[static_cast<std::size_t>(next_row)];
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r != next_row && rows[static_cast<std::size_t>(r)].flat_bit(col)) {
        rows[static_cast<std::size_t>(r)] ^= pivot;
      }
    }
    pivot_cols.push_back(col);
    ++next_row;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(width), false);
  for (int c : pivot_cols) {
    is_pivot[static_cast<std::size_t>(c)] = true;
  }

  std::vector<NetPoint> dual;
  dual.reserve(static_cast<std::size_t>(width - net.dim()));
  for (int free_col = 0; free_col < width; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) {
      continue;
    }
    NetPoint v(s.digits, s.dimensions);
    v.flip_flat(free_col);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      if (rows[r].flat_bit(free_col)) {
        v.flip_flat(pivot_cols[r]);
      }
    }
    dual.push_back(std::move(v));
  }
  return {s.digits, s.dimensions, std::move(dual)};
}

double character_sum(const LinearNet& net, const NetPoint& a, int cap) {
  if (a.shape() != net.shape()) {
    throw DimensionError("character_sum: shape mismatch");
  }
  std::int64_t total = 0;
  PointStream stream(net, cap);
  NetPoint b;
  while (stream.next(b)) {
    total += character(b, a);
  }
  return static_cast<double>(total);
}

namespace {

std::size_t table_size(Shape shape) {
  if (shape.flat_size() > kMaxFourierBits) {
    throw CapacityError("Fourier table needs n*S <= " + std::to_string(kMaxFourierBits));
  }
  return std::size_t{1} << shape.flat_size();
}

std::vector<double> signed_sum(std::span<const double> in, Shape shape, double scale) {
  const std::size_t size = table_size(shape);
  if (in.size() != size) {
    throw DimensionError("table size does not match 2^{nS}");
  }
  std::vector<double> out(size);
  for (std::size_t a = 0; a < size; ++a) {
    double acc = 0.0;
    for (std::size_t b = 0; b < size; ++b) {
      acc += (std::popcount(a & b) & 1) ? -in[b] : in[b];
    }
    out[a] = acc * scale;
  }
  return out;
}

}  // namespace

std::vector<double> fourier_transform(std::span<const double> table, Shape shape) {
  return signed_sum(table, shape, std::ldexp(1.0, -shape.flat_size()));
}

std::vector<double> fourier_expand(std::span<const double> coefficients, Shape shape) {
  return signed_sum(coefficients, shape, 1.0);
}

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols) {
  if (rows < 0 || cols < 0 || cols > 64) {
    throw DimensionError("bit matrix needs rows >= 0 and 0 <= cols <= 64");
  }
  data_.assign(static_cast<std::size_t>(rows), Row{0});
}

BitMatrix BitMatrix::from_rows(int cols, std::vector<Row> rows) {
  BitMatrix m(0, cols);
  for (Row r : rows) {
    if ((r & ~digit_mask(cols)) != 0 && cols < 64) {
      throw DimensionError("matrix row has bits beyond its column count");
    }
  }
  m.data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::identity(int size) {
  BitMatrix m(size, size);
  for (int r = 0; r < size; ++r) m.set(r, r + 1, true);
  return m;
}

void BitMatrix::set_row(int r, Row value) {
  if (cols_ < 64 && (value & ~digit_mask(cols_)) != 0) {
    throw DimensionError("matrix row has bits beyond its column count");
  }
  data_.at(static_cast<std::size_t>(r)) = value;
}

bool BitMatrix::get(int r, int col) const {
  return (data_.at(static_cast<std::size_t>(r)) >> (cols_ - col)) & 1U;
}

void BitMatrix::set(int r, int col, bool value) {
  if (col < 1 || col > cols_) throw DimensionError("column index out of range");
  Row& w = data_.at(static_cast<std::size_t>(r));
  const Row m = Row{1} << (cols_ - col);
  w = value ? (w | m) : (w & ~m);
}

BitMatrix BitMatrix::concat_columns(const BitMatrix& right) const {
  if (right.rows() != rows()) throw DimensionError("row count mismatch in concatenation");
  BitMatrix out(rows(), cols_ + right.cols_);
  for (int r = 0; r < rows(); ++r) {
    const Row left = right.cols_ >= 64 ? 0 : row(r) << right.cols_;
    out.data_[static_cast<std::size_t>(r)] = left | right.row(r);
  }
  return out;
}

int matrix_rank(const BitMatrix& m) {
  // XOR basis keyed by leading bit.
  std::vector<Row> basis(64, Row{0});
  int r = 0;
  for (Row v : m.row_words()) {
    while (v != 0) {
      const int lead = std::bit_width(v) - 1;
      Row& slot = basis[static_cast<std::size_t>(lead)];
      if (slot == 0) {
        slot = v;
        ++r;
        break;
      }
      v ^= slot;
    }
  }
  return r;
}

void to_unit_cube(const NetPoint& b, bool midpoint, std::span<double> out) {
  if (out.size() != static_cast<std::size_t>(b.dimensions())) {
    throw DimensionError("output span does not have S entries");
  }
  const int n = b.digits();
  const double shift = midpoint ? std::ldexp(1.0, -n - 1) : 0.0;
  for (int t = 0; t < b.dimensions(); ++t) {
    const double x = std::ldexp(static_cast<double>(b.row(t)), -n) + shift;
    // n > 52 can round up to 1.0
    out[static_cast<std::size_t>(t)] = x < 1.0 ? x : std::nextafter(1.0, 0.0);
  }
}

std::vector<double> to_unit_cube(const NetPoint& b, bool midpoint) {
  std::vector<double> out(static_cast<std::size_t>(b.dimensions()));
  to_unit_cube(b, midpoint, out);
  return out;
}

}  // namespace wafomlab
