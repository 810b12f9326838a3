#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wafomlab/f2core.hpp"
#include "wafomlab/point_set.hpp"

namespace wafomlab {

/// A real function on [0,1)^S with metadata.
struct Integrand {
  std::string name;
  int arity = 0;
  std::map<std::string, double> params;
  std::optional<double> exact_integral;
  std::function<double(std::span<const double>)> evaluate;

  double operator()(std::span<const double> x) const { return evaluate(x); }
};

/// Mean of f over the points, accumulated with compensated summation in point order.
/// Throws DimensionError on arity mismatch and DomainError on an empty set.
double qmc_integrate(const PointSet& points, const Integrand& f);

/// All points of a net in [0,1)^S (Gray-code order), midpoint-shifted by default.
PointSet net_points(const LinearNet& net, bool midpoint = true, int cap = kDefaultEnumerationCap);

/// qmc_integrate(net_points(net, midpoint), f) without materializing the points.
double integrate_net(const LinearNet& net, const Integrand& f, bool midpoint = true,
                     int cap = kDefaultEnumerationCap);

/// f(x) = constant + gradient . x
struct AffineIntegrand {
  double constant = 0.0;
  std::vector<double> gradient;

  double operator()(std::span<const double> x) const;
  /// Euclidean norm of the gradient: the Lipschitz constant K.
  double lipschitz() const;
  Integrand as_integrand() const;
};

/// |I_P(f) - I_{P,n}(f)|: the mean of f over the points minus the mean of f at
/// the centers of the n-digit cubes containing them. For affine f the cube
/// average equals the center value, so I_{P,n} is exact.
double discretization_gap(const AffineIntegrand& f, const PointSet& points, int digits);

/// K sqrt(S) 2^{-n}.
double discretization_bound(const AffineIntegrand& f, int digits);

/// Arithmetic Asian call on geometric Brownian motion sampled at T i / S.
struct AsianParams {
  double initial_price = 100.0;  // P0
  double volatility = 0.2;       // sigma
  double rate = 0.05;            // r
  double strike = 100.0;         // K
  double maturity = 1.0;         // T, years
  int steps = 4;                 // S

  void validate() const;
  std::map<std::string, double> as_map() const;
  /// Overrides fields from key=value pairs (P0, sigma, r, K, T, S).
  static AsianParams from_map(const std::map<std::string, double>& values);
};

/// x -> e^{-rT} ( (1/S) sum_i P_i(x) - K )_+ with
/// P_i = P0 exp((r - sigma^2/2) T i / S + sigma sqrt(T/S) sum_{j<=i} Phi^{-1}(x_j)).
Integrand asian_integrand(const AsianParams& params);

/// Undiscounted arithmetic-average payoff of one path; never negative.
double asian_payoff(const AsianParams& params, std::span<const double> x);

/// Price of the deterministic path (sigma = 0): e^{-rT} ((1/S) sum_i P0 e^{rTi/S} - K)_+.
double asian_zero_volatility_price(const AsianParams& params);

struct ReferenceOptions {
  int log2_points = 20;
  int digits = 30;
  std::vector<int> dimension_order;  // Sobol dimensions for coordinates; empty: 1..S
};

/// QMC estimate over 2^{log2_points} midpoint-shifted Sobol points.
double reference_price(const AsianParams& params, const ReferenceOptions& options = {});

struct ErrorRow {
  int dim = 0;  // d
  std::uint64_t points = 0;  // N
  std::optional<double> wafom;  // only for digital nets
  double abs_error = 0.0;
};

inline constexpr std::string_view kErrorCsvHeader = "d,N,wafom,abs_error,integrand,seed";

/// |qmc_integrate - reference| per net (midpoint-shifted), sorted by d.
std::vector<ErrorRow> error_curve(std::span<const LinearNet> nets, const Integrand& f, double reference,
                                  bool with_wafom = true);

/// Same for non-digital point sets labelled by d (N = set size).
std::vector<ErrorRow> error_curve(std::span<const std::pair<int, PointSet>> sets, const Integrand& f,
                                  double reference);

/// CSV body with header kErrorCsvHeader; numbers printed with 17 significant digits.
std::string format_error_csv(std::span<const ErrorRow> rows, const std::string& integrand,
                             std::uint64_t seed);

/// Least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

/// Integrand by name: "constant" (value), "linear" (sum of coordinates),
/// "product" (prod of 2 x_i), "walsh" (character of flattened index `A` at
/// digits `n`), "asian" (AsianParams keys).
Integrand make_integrand(const std::string& name, int dimensions,
                         const std::map<std::string, double>& params = {});

}  // namespace wafomlab
