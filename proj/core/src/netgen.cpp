#include "wafomlab/netgen.hpp"

#include <bit>
#include <string>

#include "wafomlab/errors.hpp"
#include "wafomlab/polynomial.hpp"

namespace wafomlab {

bool is_primitive(std::uint64_t polynomial) {
  const int d = gf2poly::degree(polynomial);
  if (d < 1 || d > gf2poly::kMaxPrimitiveDegree) {
    throw DomainError("primitive polynomial degree must be in [1, 32]");
  }
  if ((polynomial & 1U) == 0) {
    return false;
  }
  const std::uint64_t order = (std::uint64_t{1} << d) - 1;
  if (gf2poly::pow_t(order, polynomial) != 1) {
    return false;
  }
  for (std::uint64_t p : gf2poly::mersenne_prime_factors(d)) {
    if (gf2poly::pow_t(order / p, polynomial) == 1) {
      return false;
    }
  }
  return gf2poly::is_irreducible(polynomial);
}

PrimitivePoly::PrimitivePoly(std::uint64_t polynomial)
    : degree_(gf2poly::degree(polynomial)), polynomial_(polynomial), taps_(0) {
  if (!is_primitive(polynomial)) {
    throw DomainError("polynomial is not primitive over F_2");
  }
  for (int i = 1; i <= degree_; ++i) {
    if ((polynomial_ >> (degree_ - i)) & 1U) {
      taps_ |= std::uint32_t{1} << (i - 1);
    }
  }
}

PrimitivePoly PrimitivePoly::from_coefficients(const std::vector<int>& a) {
  const int d = static_cast<int>(a.size());
  if (d < 1 || d > gf2poly::kMaxPrimitiveDegree) {
    throw DomainError("primitive polynomial degree must be in [1, 32]");
  }
  std::uint64_t p = std::uint64_t{1} << d;
  for (int i = 1; i <= d; ++i) {
    if (a[static_cast<std::size_t>(i - 1)] & 1) {
      p |= std::uint64_t{1} << (d - i);
    }
  }
  return PrimitivePoly(p);
}

int PrimitivePoly::coefficient(int i) const {
  if (i < 1 || i > degree_) {
    throw DomainError("coefficient index out of range");
  }
  return static_cast<int>((taps_ >> (i - 1)) & 1U);
}

PrimitivePoly random_primitive_poly(int degree, std::mt19937_64& rng) {
  if (degree < 1 || degree > gf2poly::kMaxPrimitiveDegree) {
    throw DomainError("primitive polynomial degree must be in [1, 32]");
  }
  for (;;) {
    std::uint64_t p = (std::uint64_t{1} << degree) | 1U;
    std::uint64_t bits = 0;
    int available = 0;
    for (int i = 1; i < degree; ++i) {
      if (available < 2) {
        bits = rng();
        available = 64;
      }
      // Two fair bits; a one unless both are zero.
      if ((bits & 3U) != 0) {
        p |= std::uint64_t{1} << (degree - i);
      }
      bits >>= 2;
      available -= 2;
    }
    if (is_primitive(p)) {
      return PrimitivePoly(p);
    }
  }
}

PrimitivePoly first_primitive_poly(int degree) {
  if (degree < 1 || degree > gf2poly::kMaxPrimitiveDegree) {
    throw DomainError("primitive polynomial degree must be in [1, 32]");
  }
  for (std::uint64_t p = (std::uint64_t{1} << degree) | 1U;; p += 2) {
    if (is_primitive(p)) return PrimitivePoly(p);
  }
}

std::vector<std::uint8_t> msequence(const PrimitivePoly& poly, const std::vector<std::uint8_t>& init,
                                    std::size_t length) {
  const int d = poly.degree();
  if (static_cast<int>(init.size()) != d) {
    throw DomainError("initial state must have d = " + std::to_string(d) + " entries");
  }
  bool nonzero = false;
  for (auto b : init) {
    if (b > 1) throw DomainError("initial state entries must be bits");
    nonzero = nonzero || b != 0;
  }
  if (!nonzero) {
    throw DomainError("initial state must be nonzero");
  }
  std::vector<std::uint8_t> x(init.begin(), init.end());
  x.reserve(std::max(length, init.size()));
  while (x.size() < length) {
    const std::size_t j = x.size() - static_cast<std::size_t>(d);
    std::uint8_t next = 0;
    for (int i = 1; i <= d; ++i) {
      next ^= static_cast<std::uint8_t>(poly.coefficient(i) & x[j + static_cast<std::size_t>(d - i)]);
    }
    x.push_back(next);
  }
  x.resize(length);
  return x;
}

WindowShifter::WindowShifter(const PrimitivePoly& poly)
    : taps_(poly.taps()),
      mask_(poly.degree() >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << poly.degree()) - 1) {}

WindowJumper::WindowJumper(const PrimitivePoly& poly) {
  const WindowShifter shift(poly);
  const int d = poly.degree();
  mask_ = d >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << d) - 1;
  // Sequence bits produced from each single-bit window.
  std::vector<std::uint8_t> unit(static_cast<std::size_t>(d));
  for (int b = 0; b < d; ++b) {
    std::uint32_t w = std::uint32_t{1} << b;
    unsigned bits = 0;
    for (std::size_t j = 0; j < kSteps; ++j) {
      w = shift(w);
      bits = (bits << 1) | (w & 1U);
    }
    unit[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(bits);
  }
  const int chunks = (d + 7) / 8;
  tables_.assign(static_cast<std::size_t>(chunks), {});
  for (int c = 0; c < chunks; ++c) {
    auto& table = tables_[static_cast<std::size_t>(c)];
    for (unsigned byte = 0; byte < 256; ++byte) {
      unsigned acc = 0;
      for (int b = 0; b < 8 && 8 * c + b < d; ++b) {
        if ((byte >> b) & 1U) acc ^= unit[static_cast<std::size_t>(8 * c + b)];
      }
      table[byte] = static_cast<std::uint8_t>(acc);
    }
  }
}

WindowTransform::WindowTransform(const BitMatrix& transform) {
  const int d = transform.rows();
  const int chunks = (d + 7) / 8;
  tables_.assign(static_cast<std::size_t>(chunks), {});
  for (int c = 0; c < chunks; ++c) {
    auto& table = tables_[static_cast<std::size_t>(c)];
    for (unsigned byte = 0; byte < 256; ++byte) {
      Row acc = 0;
      for (int b = 0; b < 8; ++b) {
        const int bit = 8 * c + b;
        const int m = d - 1 - bit;  // window bit -> U row
        if (((byte >> b) & 1U) && m >= 0) {
          acc ^= transform.row(m);
        }
      }
      table[byte] = acc;
    }
  }
}

SequentialGenerator::SequentialGenerator(PrimitivePoly poly, BitMatrix transform, int dimensions)
    : SequentialGenerator(poly, std::move(transform), dimensions,
                          std::uint32_t{1} << (poly.degree() - 1)) {}

SequentialGenerator::SequentialGenerator(PrimitivePoly poly, BitMatrix transform, int dimensions,
                                         std::uint32_t initial_window)
    : poly_(poly),
      transform_(std::move(transform)),
      dimensions_(dimensions),
      initial_window_(initial_window) {
  const int d = poly_.degree();
  if (dimensions_ < 1) {
    throw DimensionError("dimension S must be positive");
  }
  if (transform_.rows() != d) {
    throw DimensionError("output transform must have d = " + std::to_string(d) + " rows");
  }
  if (transform_.cols() < 1 || transform_.cols() > kMaxDigits) {
    throw DimensionError("output transform must have 1..64 columns");
  }
  if (matrix_rank(transform_) != d) {
    throw RankError("output transform must have rank d");
  }
  const std::uint64_t limit = std::uint64_t{1} << d;
  if (initial_window_ == 0 || initial_window_ >= limit) {
    throw DomainError("initial state must be a nonzero d-bit vector");
  }
}

SequentialStream::SequentialStream(const SequentialGenerator& gen)
    : gen_(&gen),
      shift_(gen.poly()),
      apply_(gen.transform()),
      rows_(static_cast<std::size_t>(gen.dimensions()), Row{0}) {}

bool SequentialStream::next(NetPoint& out) {
  if (position_ >= size()) {
    return false;
  }
  const int dims = gen_->dimensions();
  if (position_ == 0) {
    out = NetPoint(gen_->digits(), dims);
    ++position_;
    return true;
  }
  if (position_ == 1) {
    std::uint32_t w = gen_->initial_window();
    for (int t = 0; t < dims; ++t) {
      if (t > 0) w = shift_(w);
      rows_[static_cast<std::size_t>(t)] = apply_(w);
    }
    last_window_ = w;
    head_ = 0;
  } else {
    last_window_ = shift_(last_window_);
    rows_[head_] = apply_(last_window_);
    head_ = (head_ + 1) % rows_.size();
  }
  std::vector<Row> ordered(rows_.size());
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    ordered[t] = rows_[(head_ + t) % rows_.size()];
  }
  out = NetPoint::from_rows(gen_->digits(), std::move(ordered));
  ++position_;
  return true;
}

LinearNet generator_net(const SequentialGenerator& gen) {
  const int d = gen.dim();
  const int dims = gen.dimensions();
  WindowShifter shift(gen.poly());
  WindowTransform apply(gen.transform());
  std::vector<NetPoint> basis;
  basis.reserve(static_cast<std::size_t>(d));
  for (int m = 0; m < d; ++m) {
    // Initial state with x_m = 1 only.
    std::uint32_t w = std::uint32_t{1} << (d - 1 - m);
    std::vector<Row> rows(static_cast<std::size_t>(dims));
    for (int t = 0; t < dims; ++t) {
      if (t > 0) w = shift(w);
      rows[static_cast<std::size_t>(t)] = apply(w);
    }
    basis.push_back(NetPoint::from_rows(gen.digits(), std::move(rows)));
  }
  return {gen.digits(), dims, std::move(basis)};
}

GeneratedNet generate_net(const SequentialGenerator& gen, int cap) {
  check_enumeration_cap(gen.dim(), cap);
  GeneratedNet out{generator_net(gen), {}};
  SequentialStream stream(gen);
  out.points.reserve(stream.size());
  NetPoint p;
  while (stream.next(p)) {
    out.points.push_back(p);
  }
  return out;
}

}  // namespace wafomlab
