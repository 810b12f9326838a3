#include "wafomlab/search.hpp"

#include <cstdio>
#include <sstream>

#include "wafomlab/errors.hpp"
#include "wafomlab/net_io.hpp"
#include "wafomlab/parallel.hpp"
#include "wafomlab/polynomial.hpp"
#include "wafomlab/wafom.hpp"

namespace wafomlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Row random_row(std::mt19937_64& rng, int cols) { return cols == 0 ? 0 : rng() & digit_mask(cols); }

// Lowest value wins; equal values keep the earlier trial.
std::size_t argmin(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[best]) best = i;
  }
  return best;
}

}  // namespace

void SearchConfig::validate() const {
  if (dim < 1 || dim > gf2poly::kMaxPrimitiveDegree) throw DomainError("d must be in [1, 32]");
  if (digits < dim || digits > kMaxDigits) throw DomainError("n must satisfy d <= n <= 64");
  if (dimensions < 1) throw DomainError("S must be positive");
  if (stage1_trials < 1 || stage2_trials < 1) throw DomainError("trial counts must be at least 1");
  if (poly && poly->degree() != dim) throw DomainError("polynomial degree must equal d");
}

std::uint64_t trial_seed(std::uint64_t master_seed, int stage, std::uint64_t trial) {
  const std::uint64_t key = (static_cast<std::uint64_t>(stage) << 56) ^ trial;
  return splitmix64(splitmix64(master_seed) ^ splitmix64(key));
}

BitMatrix random_full_rank_matrix(int rows, int cols, std::mt19937_64& rng, int* attempts) {
  if (rows < 0 || cols > kMaxDigits || rows > cols) {
    throw DomainError("random_full_rank_matrix needs 0 <= rows <= cols <= 64");
  }
  BitMatrix m(rows, cols);
  int tries = 0;
  do {
    ++tries;
    for (int r = 0; r < rows; ++r) m.set_row(r, random_row(rng, cols));
  } while (matrix_rank(m) != rows);
  if (attempts) *attempts = tries;
  return m;
}

PrimitivePoly resolve_poly(const SearchConfig& config) {
  if (config.poly) return *config.poly;
  std::mt19937_64 rng(trial_seed(config.master_seed, 0, 0));
  return random_primitive_poly(config.dim, rng);
}

Stage1Result stage1(const SearchConfig& config) {
  config.validate();
  const PrimitivePoly poly = resolve_poly(config);
  const auto trials = static_cast<std::size_t>(config.stage1_trials);
  std::vector<BitMatrix> transforms(trials);
  std::vector<double> values(trials);
  const SequentialOptions options{config.renormalize_every};

  parallel_for(trials, config.threads, [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(config.master_seed, 1, t));
    transforms[t] = random_full_rank_matrix(config.dim, config.dim, rng);
    const SequentialGenerator gen(poly, transforms[t], config.dimensions);
    values[t] = wafom_sequential(gen, options).value;
  });

  Stage1Result out;
  const std::size_t best = argmin(values);
  out.best_transform = transforms[best];
  out.best_wafom = values[best];
  out.best_trial = static_cast<int>(best);
  out.trace.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) out.trace.push_back({1, static_cast<int>(t), values[t]});
  return out;
}

SearchResult stage2(const SearchConfig& config, const Stage1Result& first) {
  config.validate();
  const PrimitivePoly poly = resolve_poly(config);
  const BitMatrix& left = first.best_transform;
  if (left.rows() != config.dim || left.cols() != config.dim || matrix_rank(left) != config.dim) {
    throw RankError("stage 2 needs a d x d transform of rank d");
  }
  const int extra = config.digits - config.dim;
  const auto trials = extra == 0 ? std::size_t{1} : static_cast<std::size_t>(config.stage2_trials);
  std::vector<BitMatrix> transforms(trials);
  std::vector<double> values(trials);
  const SequentialOptions options{config.renormalize_every};

  parallel_for(trials, config.threads, [&](std::size_t t) {
    BitMatrix right(config.dim, extra);
    if (t > 0) {
      std::mt19937_64 rng(trial_seed(config.master_seed, 2, t));
      for (int r = 0; r < config.dim; ++r) right.set_row(r, random_row(rng, extra));
    }
    transforms[t] = left.concat_columns(right);
    const SequentialGenerator gen(poly, transforms[t], config.dimensions);
    values[t] = wafom_sequential(gen, options).value;
  });

  const std::size_t best = argmin(values);
  SearchResult out{.best_transform = transforms[best],
                   .best_wafom = values[best],
                   .stage1_best_wafom = first.best_wafom,
                   .best_trial = static_cast<int>(best),
                   .poly = poly,
                   .dimensions = config.dimensions,
                   .trace = first.trace};
  out.trace.reserve(out.trace.size() + trials);
  for (std::size_t t = 0; t < trials; ++t) out.trace.push_back({2, static_cast<int>(t), values[t]});
  return out;
}

SearchResult search(const SearchConfig& config) { return stage2(config, stage1(config)); }

std::string format_trace_csv(const SearchResult& result) {
  std::ostringstream out;
  out << "stage,trial,wafom\n";
  char buf[64];
  for (const TraceRecord& r : result.trace) {
    std::snprintf(buf, sizeof buf, "%.17g", r.wafom);
    out << r.stage << ',' << r.trial << ',' << buf << '\n';
  }
  return out.str();
}

std::string format_generator(const SequentialGenerator& gen) {
  std::ostringstream out;
  out << "wafom-gen v1\n";
  out << "n=" << gen.digits() << " S=" << gen.dimensions() << " d=" << gen.dim() << '\n';
  out << "poly=";
  for (int i = 1; i <= gen.dim(); ++i) out << gen.poly().coefficient(i);
  out << '\n';
  for (int r = 0; r < gen.dim(); ++r) out << format_row(gen.transform().row(r), gen.digits()) << '\n';
  return out.str();
}

SequentialGenerator parse_generator(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "wafom-gen v1") throw ParseError("missing 'wafom-gen v1' header");
  int n = 0;
  int dims = 0;
  int d = 0;
  if (!std::getline(in, line) || std::sscanf(line.c_str(), "n=%d S=%d d=%d", &n, &dims, &d) != 3) {
    throw ParseError("second line must be 'n=<n> S=<S> d=<d>'");
  }
  if (n < 1 || n > kMaxDigits || dims < 1 || d < 1 || d > gf2poly::kMaxPrimitiveDegree) {
    throw ParseError("generator shape out of range");
  }
  if (!std::getline(in, line) || line.rfind("poly=", 0) != 0) throw ParseError("missing 'poly=' line");
  const std::string bits = line.substr(5);
  if (static_cast<int>(bits.size()) != d) throw ParseError("poly must list d coefficients");
  std::vector<int> a;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("poly coefficients must be binary");
    a.push_back(c - '0');
  }
  std::vector<Row> rows;
  for (int r = 0; r < d; ++r) {
    if (!std::getline(in, line)) throw ParseError("expected d transform rows");
    rows.push_back(parse_row(line, n));
  }
  if (std::getline(in, line) && !line.empty()) throw ParseError("trailing data after transform rows");
  return {PrimitivePoly::from_coefficients(a), BitMatrix::from_rows(n, std::move(rows)), dims};
}

}  // namespace wafomlab
