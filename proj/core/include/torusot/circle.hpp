#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace torusot {

/// A one-dimensional sample on the circle R/Z: values wrapped into [0,1)
/// and sorted ascending; original positions are kept for provenance.
class CircularSample {
 public:
  /// Wraps raw values into [0,1) and sorts them (stable).
  explicit CircularSample(std::span<const double> raw);

  std::size_t size() const { return values_.size(); }
  /// Sorted canonical values.
  std::span<const double> values() const { return values_; }
  /// order()[k] is the original index of values()[k].
  std::span<const std::uint32_t> order() const { return order_; }

 private:
  std::vector<double> values_;
  std::vector<std::uint32_t> order_;
};

/// Result of the circular transport reduction.
struct CutResult {
  double cost = 0.0;   // squared 2-Wasserstein distance on the circle
  double cut = 0.0;    // cut location in [0,1); unrolling both samples here
                       // makes the line cost equal to `cost`
  double shift = 0.0;  // optimal vertical CDF shift alpha achieving `cost`
};

/// Exact squared 2-Wasserstein distance between empirical measures on R,
/// via the piecewise-constant quantile functions. Inputs must be sorted.
double w2_line(std::span<const double> x_sorted, std::span<const double> y_sorted);

/// Squared 2-Wasserstein distance on the circle: minimizes the line cost
/// over vertical CDF shifts (the objective is convex in the shift), then
/// reports a realizable cut. For n == m an exact integer-shift search over
/// cyclic matchings is used. The reported cut is the pooled sample value
/// that unrolls to 0; any cut in the same inter-point gap is equivalent,
/// and ties between gaps resolve to the smallest cut in [0,1).
CutResult w2_circle(const CircularSample& x, const CircularSample& y);

/// Maps values v -> (v - cut) mod 1 and re-sorts. Preserves cyclic order.
/// cut must lie in [0,1).
std::vector<double> unroll_at_cut(const CircularSample& s, double cut);

namespace detail {
/// Line cost between the quantile function of x and the vertically shifted
/// quantile function of y (shift alpha, periodic lift). Exposed for tests.
double circle_shift_cost(std::span<const double> x_sorted,
                         std::span<const double> y_sorted, double alpha);
}  // namespace detail

}  // namespace torusot
