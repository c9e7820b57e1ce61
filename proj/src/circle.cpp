#include "orbideg/circle.hpp"

#include <cmath>
#include <numbers>

#include "orbideg/errors.hpp"

namespace orbideg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double angle_diff(double a, double b) {
  double d = std::remainder(a - b, kTwoPi);
  if (d <= -std::numbers::pi) d += kTwoPi;
  return d;
}

CircleQuotient CircleQuotient::rotation(std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidInput, "rotation group order must be positive");
  return {Kind::Rotation, k};
}

CircleQuotient CircleQuotient::reflection() { return {Kind::Reflection, 1}; }

double CircleQuotient::fold(double theta) const {
  const double t = wrap_angle(theta);
  if (kind_ == Kind::Reflection) return t <= std::numbers::pi ? t : kTwoPi - t;
  const double period = kTwoPi / static_cast<double>(k_);
  double r = std::fmod(t, period);
  // Values a hair below a period boundary belong to the start of the domain.
  if (period - r < 1e-13) r = 0.0;
  return r;
}

std::vector<double> CircleQuotient::orbit(double theta) const {
  const double t = wrap_angle(theta);
  if (kind_ == Kind::Reflection) {
    const double mirror = wrap_angle(-t);
    if (std::abs(angle_diff(mirror, t)) < 1e-12) return {t};
    return {t, mirror};
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k_));
  for (std::int64_t j = 0; j < k_; ++j) {
    out.push_back(wrap_angle(t + kTwoPi * static_cast<double>(j) / static_cast<double>(k_)));
  }
  return out;
}

std::int64_t CircleQuotient::isotropy_order(double theta, double tol) const {
  if (kind_ == Kind::Rotation) return 1;
  return std::abs(std::sin(theta)) < tol ? 2 : 1;
}

}  // namespace orbideg
