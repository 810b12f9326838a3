#include "wafomlab/wafom.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>

#include "wafomlab/compensated.hpp"
#include "wafomlab/errors.hpp"
#include "wafomlab/parallel.hpp"

namespace wafomlab {

namespace {

// Points per reduction block of wafom_inversion. Fixed so that the summation
// tree does not depend on the worker count.
constexpr int kBlockLog2 = 16;

WafomReport make_report(double value, Shape shape, int dim, WafomMethod method,
                        std::uint64_t points) {
  WafomReport r;
  r.value = value;
  r.log2_value = value > 0.0 ? std::log2(value) : -std::numeric_limits<double>::infinity();
  r.digits = shape.digits;
  r.dimensions = shape.dimensions;
  r.dim = dim;
  r.method = method;
  r.points_used = points;
  return r;
}

}  // namespace

std::string_view to_string(WafomMethod method) {
  switch (method) {
    case WafomMethod::dual:
      return "dual";
    case WafomMethod::inversion:
      return "inversion";
    case WafomMethod::sequential:
      return "sequential";
  }
  return "unknown";
}

std::string to_csv_row(const WafomReport& report) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%.17g,%.17g", std::string(to_string(report.method)).c_str(),
                report.digits, report.dimensions, report.dim, report.value, report.log2_value);
  return buf;
}

int mu(const NetPoint& a) {
  const int n = a.digits();
  int total = 0;
  for (Row r : a.rows()) {
    while (r != 0) {
      const int p = std::countr_zero(r);
      total += n - p;
      r &= r - 1;
    }
  }
  return total;
}

WafomReport wafom_dual(const LinearNet& net, int cap) {
  const LinearNet dual = dual_space(net);
  check_enumeration_cap(dual.dim(), cap);
  CompensatedSum sum;
  PointStream stream(dual, cap);
  NetPoint a;
  stream.next(a);  // zero matrix
  while (stream.next(a)) {
    sum += std::ldexp(1.0, -mu(a));
  }
  return make_report(sum.value(), net.shape(), net.dim(), WafomMethod::dual, stream.size());
}

double c_hat(const NetPoint& b) {
  double product = 1.0;
  for (int t = 0; t < b.dimensions(); ++t) {
    for (int j = 1; j <= b.digits(); ++j) {
      const double w = std::ldexp(1.0, -j);
      product *= b.bit(t, j) ? 1.0 - w : 1.0 + w;
    }
  }
  return std::ldexp(product, -b.shape().flat_size());
}

RowFactor::RowFactor(int digits) : digits_(digits), chunks_((digits + 7) / 8) {
  if (digits < 1 || digits > kMaxDigits) {
    throw DimensionError("digits n must be in [1, 64]");
  }
  tables_.assign(static_cast<std::size_t>(chunks_), {});
  for (int c = 0; c < chunks_; ++c) {
    const int first = 8 * c + 1;
    const int len = std::min(8, digits - 8 * c);
    shifts_[static_cast<std::size_t>(c)] = digits - 8 * c - len;
    masks_[static_cast<std::size_t>(c)] = (Row{1} << len) - 1;
    auto& table = tables_[static_cast<std::size_t>(c)];
    table.fill(1.0);
    std::array<double, 8> plus{};
    std::array<double, 8> minus{};
    for (int i = 0; i < len; ++i) {
      const double w = std::ldexp(1.0, -(first + i));
      plus[static_cast<std::size_t>(i)] = 1.0 + w;
      minus[static_cast<std::size_t>(i)] = 1.0 - w;
    }
    for (unsigned v = 0; v < (1U << len); ++v) {
      double product = 1.0;
      for (int i = 0; i < len; ++i) {
        const auto k = static_cast<std::size_t>(i);
        product *= ((v >> (len - 1 - i)) & 1U) ? minus[k] : plus[k];
      }
      table[v] = product;
    }
  }
}

double RowFactor::operator()(Row row) const {
  double product = 1.0;
  for (std::size_t c = 0; c < static_cast<std::size_t>(chunks_); ++c) {
    product *= tables_[c][static_cast<unsigned>((row >> shifts_[c]) & masks_[c])];
  }
  return product;
}

double wafom_of_zero_net(Shape shape) {
  double product = 1.0;
  for (int t = 0; t < shape.dimensions; ++t) {
    for (int j = 1; j <= shape.digits; ++j) {
      product *= 1.0 + std::ldexp(1.0, -j);
    }
  }
  return product - 1.0;
}

WafomReport wafom_inversion(const LinearNet& net, const InversionOptions& options) {
  const Shape shape = net.shape();
  const int d = net.dim();
  const std::uint64_t count = std::uint64_t{1} << std::min(d, 63);
  if (d == shape.flat_size()) {
    return make_report(0.0, shape, d, WafomMethod::inversion, count);
  }
  check_enumeration_cap(d, options.cap);

  const auto dims = static_cast<std::size_t>(shape.dimensions);
  std::vector<Row> basis_rows;
  basis_rows.reserve(static_cast<std::size_t>(d) * dims);
  for (const NetPoint& b : net.basis()) {
    basis_rows.insert(basis_rows.end(), b.rows().begin(), b.rows().end());
  }
  const RowFactor factor(shape.digits);

  const int block_log2 = std::min(d, kBlockLog2);
  const std::uint64_t block_size = std::uint64_t{1} << block_log2;
  const std::uint64_t blocks = count >> block_log2;
  std::vector<CompensatedSum> partial(blocks);

  parallel_for(blocks, options.threads, [&](std::size_t block) {
    const std::uint64_t start = static_cast<std::uint64_t>(block) << block_log2;
    const NetPoint first = combine(net, gray_code(start));
    std::vector<Row> rows(first.rows().begin(), first.rows().end());
    std::vector<double> h(dims);
    for (std::size_t t = 0; t < dims; ++t) h[t] = factor(rows[t]);

    CompensatedSum sum;
    auto accumulate = [&] {
      double product = h[0];
      for (std::size_t t = 1; t < dims; ++t) product *= h[t];
      sum += product - 1.0;
    };
    accumulate();
    for (std::uint64_t i = start + 1; i < start + block_size; ++i) {
      const Row* flip = &basis_rows[static_cast<std::size_t>(std::countr_zero(i)) * dims];
      for (std::size_t t = 0; t < dims; ++t) {
        if (flip[t] != 0) {
          rows[t] ^= flip[t];
          h[t] = factor(rows[t]);
        }
      }
      accumulate();
    }
    partial[block] = sum;
  });

  CompensatedSum total;
  for (const auto& p : partial) total.merge(p);
  const double value = std::ldexp(total.value(), -d);
  return make_report(value, shape, d, WafomMethod::inversion, count);
}

WafomReport wafom_sequential(const SequentialGenerator& gen, const SequentialOptions& options) {
  const Shape shape = gen.shape();
  const int d = gen.dim();
  const std::uint64_t count = std::uint64_t{1} << d;
  if (d == shape.flat_size()) {
    return make_report(0.0, shape, d, WafomMethod::sequential, count);
  }

  const RowFactor factor(shape.digits);
  const WindowShifter shift(gen.poly());
  const WindowTransform apply(gen.transform());
  const auto dims = static_cast<std::size_t>(shape.dimensions);
  const std::uint64_t renormalize =
      options.renormalize_every > 0 ? static_cast<std::uint64_t>(options.renormalize_every) : 0;

  CompensatedSum sum;
  {
    const double h0 = factor(0);
    double product = h0;
    for (std::size_t t = 1; t < dims; ++t) product *= h0;
    sum += product - 1.0;
  }

  // Ring of row factors; head is the top row of the current point.
  std::vector<double> h(dims);
  std::size_t head = 0;
  std::uint32_t window = gen.initial_window();
  for (std::size_t t = 0; t < dims; ++t) {
    if (t > 0) window = shift(window);
    h[t] = factor(apply(window));
  }
  auto rebuild = [&] {
    double product = h[head];
    std::size_t t = head;
    for (std::size_t k = 1; k < dims; ++k) {
      if (++t == dims) t = 0;
      product *= h[t];
    }
    return product;
  };
  double product = rebuild();
  sum += product - 1.0;

  const WindowJumper jump(gen.poly());
  std::array<std::uint32_t, WindowJumper::kSteps> ahead{};
  std::size_t next = ahead.size();
  std::uint64_t until_rebuild = renormalize;
  for (std::uint64_t k = 1; k + 1 < count; ++k) {
    if (next == ahead.size()) {
      jump.advance(window, ahead);
      next = 0;
    }
    const double attached = factor(apply(ahead[next++]));
    const double ratio = attached / h[head];
    h[head] = attached;
    if (++head == dims) head = 0;
    if (--until_rebuild == 0) {
      product = rebuild();
      until_rebuild = renormalize;
    } else {
      product *= ratio;
    }
    sum += product - 1.0;
  }

  const double value = std::ldexp(sum.value(), -d);
  return make_report(value, shape, d, WafomMethod::sequential, count);
}

}  // namespace wafomlab
