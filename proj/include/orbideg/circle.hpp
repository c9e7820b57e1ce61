#pragma once

#include <cstdint>
#include <vector>

namespace orbideg {

/// S^1 modulo a finite group: rotations by multiples of 2*pi/k, or the
/// reflection (x, y) -> (x, -y). Points are angles in [0, 2*pi).
class CircleQuotient {
 public:
  enum class Kind { Rotation, Reflection };

  static CircleQuotient rotation(std::int64_t k);
  static CircleQuotient reflection();
  /// Plain S^1 (the trivial rotation group).
  static CircleQuotient circle() { return rotation(1); }

  Kind kind() const noexcept { return kind_; }
  std::int64_t rotation_order() const noexcept { return k_; }
  std::int64_t group_order() const noexcept { return kind_ == Kind::Rotation ? k_ : 2; }
  bool orientable() const noexcept { return kind_ == Kind::Rotation; }
  bool free() const noexcept { return kind_ == Kind::Rotation; }

  /// Representative in the fundamental domain: [0, 2*pi/k) for rotations,
  /// [0, pi] for the reflection.
  double fold(double theta) const;
  /// All points of S^1 in the orbit of theta (deduplicated at fixed points).
  std::vector<double> orbit(double theta) const;
  /// Order of the stabilizer of theta; fixed points are detected within tol.
  std::int64_t isotropy_order(double theta, double tol = 1e-9) const;

  friend bool operator==(const CircleQuotient&, const CircleQuotient&) = default;

 private:
  CircleQuotient(Kind kind, std::int64_t k) : kind_(kind), k_(k) {}
  Kind kind_;
  std::int64_t k_;
};

/// Wraps an angle into [0, 2*pi).
double wrap_angle(double theta);
/// Signed angular difference a - b wrapped into (-pi, pi].
double angle_diff(double a, double b);

}  // namespace orbideg
