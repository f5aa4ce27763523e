#include "torusot/torus.hpp"

#include <cmath>
#include <sstream>

#include "torusot/errors.hpp"

namespace torusot {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double wrap_unit(double x) {
  double w = x - std::floor(x);
  if (w >= 1.0) w = 0.0;  // e.g. x = -1e-18 rounds up to 1.0
  return w + 0.0;         // normalize -0.0
}

TorusPoint::TorusPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidInputError("torus point needs at least one coordinate");
  for (double& c : coords_) {
    if (!std::isfinite(c)) throw InvalidInputError("torus point coordinate is not finite");
    c = wrap_unit(c);
  }
}

TorusPoint canonicalize(std::span<const double> x) {
  return TorusPoint(std::vector<double>(x.begin(), x.end()));
}

double torus_distance_squared(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw InvalidInputError("torus distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    double d = std::fabs(x[k] - y[k]);
    if (d > 0.5) d = 1.0 - d;
    s += d * d;
  }
  return s;
}

double torus_distance(std::span<const double> x, std::span<const double> y) {
  return std::sqrt(torus_distance_squared(x, y));
}

double torus_distance(const TorusPoint& x, const TorusPoint& y) {
  return torus_distance(x.coords(), y.coords());
}

TorusSample::TorusSample(std::size_t dim, std::vector<double> flat, std::string label)
    : dim_(dim), data_(std::move(flat)), label_(std::move(label)) {
  if (dim_ == 0) throw InvalidInputError("torus sample: dimension must be positive");
  if (data_.empty() || data_.size() % dim_ != 0)
    throw InvalidInputError("torus sample: flat data size must be a positive multiple of dim");
  for (double& c : data_) {
    if (!std::isfinite(c)) throw InvalidInputError("torus sample: coordinate is not finite");
    c = wrap_unit(c);
  }
}

TorusSample TorusSample::from_points(const std::vector<TorusPoint>& points,
                                     std::string label) {
  if (points.empty()) throw InvalidInputError("torus sample: empty point list");
  const std::size_t d = points.front().dim();
  std::vector<double> flat;
  flat.reserve(points.size() * d);
  for (const auto& p : points) {
    if (p.dim() != d)
      throw InvalidInputError("torus sample: points have mixed dimensions");
    flat.insert(flat.end(), p.coords().begin(), p.coords().end());
  }
  return TorusSample(d, std::move(flat), std::move(label));
}

std::vector<double> TorusSample::axis(std::size_t k) const {
  if (k >= dim_) throw InvalidInputError("torus sample: axis index out of range");
  std::vector<double> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coord(i, k);
  return out;
}

double AngleConvention::lo() const {
  switch (unit) {
    case AngleUnit::radians:
      return range == AngleRange::symmetric ? -kPi : 0.0;
    case AngleUnit::degrees:
      return range == AngleRange::symmetric ? -180.0 : 0.0;
    case AngleUnit::unit_square:
      return 0.0;
  }
  return 0.0;
}

double AngleConvention::hi() const {
  switch (unit) {
    case AngleUnit::radians:
      return range == AngleRange::symmetric ? kPi : 2.0 * kPi;
    case AngleUnit::degrees:
      return range == AngleRange::symmetric ? 180.0 : 360.0;
    case AngleUnit::unit_square:
      return 1.0;
  }
  return 1.0;
}

void AngleConvention::validate() const {
  if (unit == AngleUnit::unit_square && range != AngleRange::unit)
    throw InvalidInputError("angle convention: unit-square data uses the [0,1) range");
  if (unit != AngleUnit::unit_square && range == AngleRange::unit)
    throw InvalidInputError("angle convention: the [0,1) range applies to unit-square data only");
}

double AngleConvention::to_unit(double angle, double tol) const {
  if (!std::isfinite(angle)) throw DataError("angle is not finite");
  const double a = lo(), b = hi();
  if (angle < a - tol || angle > b + tol) {
    std::ostringstream msg;
    msg << "angle " << angle << " outside declared range [" << a << ", " << b << ")";
    throw DataError(msg.str());
  }
  return wrap_unit((angle - a) / (b - a));
}

double AngleConvention::from_unit(double u) const {
  const double a = lo(), b = hi();
  return a + wrap_unit(u) * (b - a);
}

AngleConvention parse_angle_convention(const std::string& unit, const std::string& range) {
  AngleConvention conv;
  if (unit == "radians")
    conv.unit = AngleUnit::radians;
  else if (unit == "degrees")
    conv.unit = AngleUnit::degrees;
  else if (unit == "unit-square")
    conv.unit = AngleUnit::unit_square;
  else
    throw InvalidInputError("unknown angle unit: " + unit);

  if (range == "symmetric")
    conv.range = AngleRange::symmetric;
  else if (range == "positive")
    conv.range = AngleRange::positive;
  else if (range == "unit")
    conv.range = AngleRange::unit;
  else
    throw InvalidInputError("unknown angle range: " + range);

  conv.validate();
  return conv;
}

TorusSample angles_to_unit_square(std::span<const std::pair<double, double>> sample,
                                  const AngleConvention& conv, std::string label) {
  conv.validate();
  if (sample.empty()) throw InvalidInputError("angles_to_unit_square: empty sample");
  std::vector<double> flat;
  flat.reserve(sample.size() * 2);
  for (const auto& [phi, psi] : sample) {
    flat.push_back(conv.to_unit(phi));
    flat.push_back(conv.to_unit(psi));
  }
  return TorusSample(2, std::move(flat), std::move(label));
}

}  // namespace torusot
