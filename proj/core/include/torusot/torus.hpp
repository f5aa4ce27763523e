#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace torusot {

/// Wraps a single coordinate into the canonical range [0, 1).
double wrap_unit(double x);

/// A point on the flat torus R^d/Z^d, stored by its canonical
/// representative in [0,1)^d.
class TorusPoint {
 public:
  /// Coordinates are wrapped into [0,1). Throws InvalidInputError on
  /// non-finite input or empty coordinate list.
  explicit TorusPoint(std::vector<double> coords);

  std::size_t dim() const { return coords_.size(); }
  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t k) const { return coords_[k]; }

 private:
  std::vector<double> coords_;
};

/// Canonical projection of an arbitrary representative onto [0,1)^d.
TorusPoint canonicalize(std::span<const double> x);

/// Geodesic distance on the flat torus. Evaluates the infimum over the
/// integer lattice coordinate-wise: each axis contributes
/// min(|dx|, 1-|dx|)^2. Throws InvalidInputError on dimension mismatch.
double torus_distance(std::span<const double> x, std::span<const double> y);
double torus_distance(const TorusPoint& x, const TorusPoint& y);

/// Squared geodesic distance; the transport cost used throughout.
double torus_distance_squared(std::span<const double> x, std::span<const double> y);

/// An i.i.d. sample on the torus; the empirical measure places mass 1/n on
/// each point. Coordinates are stored flat (row-major) and canonical.
class TorusSample {
 public:
  /// flat has size n*dim; each coordinate is wrapped into [0,1).
  TorusSample(std::size_t dim, std::vector<double> flat, std::string label = {});

  static TorusSample from_points(const std::vector<TorusPoint>& points,
                                 std::string label = {});

  std::size_t size() const { return data_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }

  std::span<const double> point(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  double coord(std::size_t i, std::size_t k) const { return data_[i * dim_ + k]; }
  std::span<const double> flat() const { return data_; }

  /// Coordinates of one axis, in sample order (the marginal on R/Z).
  std::vector<double> axis(std::size_t k) const;

 private:
  std::size_t dim_;
  std::vector<double> data_;
  std::string label_;
};

enum class AngleUnit { radians, degrees, unit_square };

/// Range convention for raw angles: symmetric is [-pi,pi) or [-180,180),
/// positive is [0,2pi) or [0,360), unit is [0,1).
enum class AngleRange { symmetric, positive, unit };

struct AngleConvention {
  AngleUnit unit = AngleUnit::degrees;
  AngleRange range = AngleRange::symmetric;

  /// Declared lower/upper bounds of the raw angle range.
  double lo() const;
  double hi() const;

  /// Throws InvalidInputError on unsupported (unit, range) combinations.
  void validate() const;

  /// Raw angle -> [0,1), affine then wrapped. Values outside the declared
  /// range by more than tol (in raw units) raise DataError.
  double to_unit(double angle, double tol = 1e-9) const;
  /// Unit-square coordinate -> raw angle in the declared range.
  double from_unit(double u) const;
};

AngleConvention parse_angle_convention(const std::string& unit, const std::string& range);

/// Converts (phi, psi) pairs into a d=2 torus sample, preserving order.
TorusSample angles_to_unit_square(std::span<const std::pair<double, double>> sample,
                                  const AngleConvention& conv,
                                  std::string label = {});

}  // namespace torusot
