#include "wafomlab/qmc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "wafomlab/compensated.hpp"
#include "wafomlab/errors.hpp"
#include "wafomlab/normal.hpp"
#include "wafomlab/sobol.hpp"
#include "wafomlab/wafom.hpp"

namespace wafomlab {

namespace {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double param_or(const std::map<std::string, double>& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

double qmc_integrate(const PointSet& points, const Integrand& f) {
  if (points.empty()) {
    throw DomainError("cannot integrate over an empty point set");
  }
  if (points.dimensions() != f.arity) {
    throw DimensionError("integrand arity " + std::to_string(f.arity) + " does not match point dimension " +
                         std::to_string(points.dimensions()));
  }
  CompensatedSum sum;
  for (std::size_t i = 0; i < points.size(); ++i) {
    sum += f(points.point(i));
  }
  return sum.value() / static_cast<double>(points.size());
}

PointSet net_points(const LinearNet& net, bool midpoint, int cap) {
  PointStream stream(net, cap);
  PointSet out(net.dimensions());
  out.reserve(stream.size());
  std::vector<double> x(static_cast<std::size_t>(net.dimensions()));
  NetPoint b;
  while (stream.next(b)) {
    to_unit_cube(b, midpoint, x);
    out.push_back(x);
  }
  return out;
}

double integrate_net(const LinearNet& net, const Integrand& f, bool midpoint, int cap) {
  if (net.dimensions() != f.arity) {
    throw DimensionError("integrand arity " + std::to_string(f.arity) + " does not match net dimension " +
                         std::to_string(net.dimensions()));
  }
  PointStream stream(net, cap);
  std::vector<double> x(static_cast<std::size_t>(net.dimensions()));
  CompensatedSum sum;
  NetPoint b;
  while (stream.next(b)) {
    to_unit_cube(b, midpoint, x);
    sum += f(x);
  }
  return sum.value() / static_cast<double>(stream.size());
}

double AffineIntegrand::operator()(std::span<const double> x) const {
  double v = constant;
  for (std::size_t i = 0; i < gradient.size(); ++i) v += gradient[i] * x[i];
  return v;
}

double AffineIntegrand::lipschitz() const {
  double s = 0.0;
  for (double g : gradient) s += g * g;
  return std::sqrt(s);
}

Integrand AffineIntegrand::as_integrand() const {
  Integrand f;
  f.name = "affine";
  f.arity = static_cast<int>(gradient.size());
  f.params["constant"] = constant;
  f.exact_integral = constant + 0.5 * std::accumulate(gradient.begin(), gradient.end(), 0.0);
  f.evaluate = [g = *this](std::span<const double> x) { return g(x); };
  return f;
}

double discretization_gap(const AffineIntegrand& f, const PointSet& points, int digits) {
  if (points.empty()) throw DomainError("empty point set");
  if (points.dimensions() != static_cast<int>(f.gradient.size())) {
    throw DimensionError("affine integrand arity does not match points");
  }
  if (digits < 1 || digits > 52) throw DimensionError("digits must be in [1, 52]");
  const double cells = std::ldexp(1.0, digits);
  std::vector<double> center(static_cast<std::size_t>(points.dimensions()));
  CompensatedSum direct;
  CompensatedSum discretized;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto x = points.point(i);
    for (std::size_t t = 0; t < x.size(); ++t) {
      const double cell = std::min(std::floor(x[t] * cells), cells - 1.0);
      center[t] = (cell + 0.5) / cells;
    }
    direct += f(x);
    discretized += f(center);
  }
  const double n = static_cast<double>(points.size());
  return std::fabs(direct.value() / n - discretized.value() / n);
}

double discretization_bound(const AffineIntegrand& f, int digits) {
  return f.lipschitz() * std::sqrt(static_cast<double>(f.gradient.size())) * std::ldexp(1.0, -digits);
}

void AsianParams::validate() const {
  if (!(initial_price > 0.0)) throw DomainError("P0 must be positive");
  if (!(volatility >= 0.0)) throw DomainError("sigma must be nonnegative");
  if (!(maturity > 0.0)) throw DomainError("T must be positive");
  if (steps < 1) throw DomainError("S must be at least 1");
  if (!std::isfinite(rate) || !std::isfinite(strike)) throw DomainError("r and K must be finite");
}

std::map<std::string, double> AsianParams::as_map() const {
  return {{"P0", initial_price}, {"sigma", volatility}, {"r", rate},
          {"K", strike},         {"T", maturity},       {"S", static_cast<double>(steps)}};
}

AsianParams AsianParams::from_map(const std::map<std::string, double>& values) {
  AsianParams p;
  for (const auto& [key, v] : values) {
    if (key == "P0") p.initial_price = v;
    else if (key == "sigma") p.volatility = v;
    else if (key == "r") p.rate = v;
    else if (key == "K") p.strike = v;
    else if (key == "T") p.maturity = v;
    else if (key == "S") p.steps = static_cast<int>(v);
    else throw ParseError("unknown Asian option parameter '" + key + "'");
  }
  p.validate();
  return p;
}

double asian_payoff(const AsianParams& p, std::span<const double> x) {
  const double dt = p.maturity / p.steps;
  const double drift = (p.rate - 0.5 * p.volatility * p.volatility) * dt;
  const double diffusion = p.volatility * std::sqrt(dt);
  double log_price = 0.0;
  double total = 0.0;
  for (int i = 0; i < p.steps; ++i) {
    log_price += drift;
    if (diffusion != 0.0) {
      log_price += diffusion * inverse_normal_cdf(x[static_cast<std::size_t>(i)]);
    }
    total += p.initial_price * std::exp(log_price);
  }
  return std::max(total / p.steps - p.strike, 0.0);
}

Integrand asian_integrand(const AsianParams& params) {
  params.validate();
  Integrand f;
  f.name = "asian";
  f.arity = params.steps;
  f.params = params.as_map();
  if (params.volatility == 0.0) f.exact_integral = asian_zero_volatility_price(params);
  const double discount = std::exp(-params.rate * params.maturity);
  f.evaluate = [params, discount](std::span<const double> x) { return discount * asian_payoff(params, x); };
  return f;
}

double asian_zero_volatility_price(const AsianParams& p) {
  p.validate();
  double total = 0.0;
  for (int i = 1; i <= p.steps; ++i) {
    total += p.initial_price * std::exp(p.rate * p.maturity * i / p.steps);
  }
  return std::exp(-p.rate * p.maturity) * std::max(total / p.steps - p.strike, 0.0);
}

double reference_price(const AsianParams& params, const ReferenceOptions& options) {
  const LinearNet net =
      sobol_net(options.log2_points, params.steps, options.digits, options.dimension_order);
  return integrate_net(net, asian_integrand(params), true, std::max(options.log2_points, kDefaultEnumerationCap));
}

std::vector<ErrorRow> error_curve(std::span<const LinearNet> nets, const Integrand& f, double reference,
                                  bool with_wafom) {
  std::vector<ErrorRow> rows;
  rows.reserve(nets.size());
  for (const LinearNet& net : nets) {
    ErrorRow r;
    r.dim = net.dim();
    r.points = std::uint64_t{1} << net.dim();
    if (with_wafom) r.wafom = wafom_inversion(net).value;
    r.abs_error = std::fabs(integrate_net(net, f) - reference);
    rows.push_back(r);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ErrorRow& a, const ErrorRow& b) { return a.dim < b.dim; });
  return rows;
}

std::vector<ErrorRow> error_curve(std::span<const std::pair<int, PointSet>> sets, const Integrand& f,
                                  double reference) {
  std::vector<ErrorRow> rows;
  rows.reserve(sets.size());
  for (const auto& [d, points] : sets) {
    ErrorRow r;
    r.dim = d;
    r.points = points.size();
    r.abs_error = std::fabs(qmc_integrate(points, f) - reference);
    rows.push_back(r);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ErrorRow& a, const ErrorRow& b) { return a.dim < b.dim; });
  return rows;
}

std::string format_error_csv(std::span<const ErrorRow> rows, const std::string& integrand, std::uint64_t seed) {
  std::ostringstream out;
  out << kErrorCsvHeader << '\n';
  for (const ErrorRow& r : rows) {
    out << r.dim << ',' << r.points << ',' << (r.wafom ? format_g17(*r.wafom) : std::string()) << ','
        << format_g17(r.abs_error) << ',' << integrand << ',' << seed << '\n';
  }
  return out.str();
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("slope needs at least two paired samples");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw DomainError("slope undefined for constant x");
  return sxy / sxx;
}

Integrand make_integrand(const std::string& name, int dimensions, const std::map<std::string, double>& params) {
  if (dimensions < 1) throw DimensionError("dimension S must be positive");
  Integrand f;
  f.name = name;
  f.arity = dimensions;
  f.params = params;
  if (name == "constant") {
    const double c = param_or(params, "value", 1.0);
    f.exact_integral = c;
    f.evaluate = [c](std::span<const double>) { return c; };
  } else if (name == "linear") {
    f.exact_integral = 0.5 * dimensions;
    f.evaluate = [](std::span<const double> x) { return std::accumulate(x.begin(), x.end(), 0.0); };
  } else if (name == "product") {
    f.exact_integral = 1.0;
    f.evaluate = [](std::span<const double> x) {
      double v = 1.0;
      for (double xi : x) v *= 2.0 * xi;
      return v;
    };
  } else if (name == "walsh") {
    const int n = static_cast<int>(param_or(params, "n", 0));
    if (n < 1 || n * dimensions > 64) throw DomainError("walsh integrand needs 1 <= n and n*S <= 64");
    const auto a = NetPoint::from_index({n, dimensions}, static_cast<std::uint64_t>(param_or(params, "A", 0)));
    f.exact_integral = a.is_zero() ? 1.0 : 0.0;
    f.evaluate = [a, n](std::span<const double> x) {
      const double cells = std::ldexp(1.0, n);
      int parity = 0;
      for (std::size_t t = 0; t < x.size(); ++t) {
        const auto cell = static_cast<Row>(std::min(std::floor(x[t] * cells), cells - 1.0));
        parity ^= std::popcount(cell & a.row(static_cast<int>(t))) & 1;
      }
      return parity ? -1.0 : 1.0;
    };
  } else if (name == "asian") {
    auto values = params;
    if (const auto it = values.find("S"); it != values.end() && static_cast<int>(it->second) != dimensions) {
      throw DimensionError("asian parameter S disagrees with the requested dimension");
    }
    values["S"] = dimensions;
    return asian_integrand(AsianParams::from_map(values));
  } else {
    throw ParseError("unknown integrand '" + name + "'");
  }
  return f;
}

}  // namespace wafomlab
