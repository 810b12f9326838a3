#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wafomlab/f2core.hpp"
#include "wafomlab/netgen.hpp"

namespace wafomlab {

enum class WafomMethod { dual, inversion, sequential };

std::string_view to_string(WafomMethod method);

struct WafomReport {
  double value = 0.0;
  double log2_value = 0.0;  // -inf when value == 0
  int digits = 0;           // n
  int dimensions = 0;       // S
  int dim = 0;              // d
  WafomMethod method = WafomMethod::inversion;
  std::uint64_t points_used = 0;
};

inline constexpr std::string_view kWafomCsvHeader = "method,n,S,d,wafom,log2_wafom";

/// `method,n,S,d,wafom,log2_wafom` with 17 significant digits.
std::string to_csv_row(const WafomReport& report);

/// Weight sum_{T,j} j * a_{T,j}.
int mu(const NetPoint& a);

/// WF(P) summed over the dual space: sum_{A in P^perp, A != 0} 2^{-mu(A)}.
/// Enumerates 2^{nS-d} points; throws CapacityError above 2^cap.
WafomReport wafom_dual(const LinearNet& net, int cap = kDefaultEnumerationCap);

/// Fourier coefficient of A -> 2^{-mu(A)} at B:
/// 2^{-nS} prod_{T,j} (1 + (-1)^{b_{T,j}} 2^{-j}).
double c_hat(const NetPoint& b);

/// h(row) = prod_j (1 + (-1)^{b_j} 2^{-j}) for n-digit rows, eight digits per lookup.
class RowFactor {
 public:
  explicit RowFactor(int digits);
  double operator()(Row row) const;
  int digits() const { return digits_; }

 private:
  int digits_;
  int chunks_;
  std::array<int, 8> shifts_{};
  std::array<Row, 8> masks_{};
  std::vector<std::array<double, 256>> tables_;
};

struct InversionOptions {
  int cap = kDefaultEnumerationCap;
  int threads = 1;  // <= 0: default_thread_count()
};

/// WF(P) = 2^{-d} sum_{B in P} [prod_{T,j} (1 + (-1)^{b_{T,j}} 2^{-j}) - 1] in O(nSN).
/// The sum is split into fixed blocks reduced in block order, so the result is
/// bit-identical for every thread count.
WafomReport wafom_inversion(const LinearNet& net, const InversionOptions& options = {});

struct SequentialOptions {
  /// Rebuild the running product from the stored row factors every this many
  /// points; 0 disables rebuilding.
  int renormalize_every = 256;
};

/// Same quantity as wafom_inversion on the generated net, in O(nN): each step
/// multiplies the running product by h(attached row) / h(removed row).
WafomReport wafom_sequential(const SequentialGenerator& gen, const SequentialOptions& options = {});

/// Closed form for P = {0}: prod_{T,j} (1 + 2^{-j}) - 1.
double wafom_of_zero_net(Shape shape);

}  // namespace wafomlab
