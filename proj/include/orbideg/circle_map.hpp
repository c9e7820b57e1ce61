#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbideg/circle.hpp"

namespace orbideg {

/// Equivariant self-maps of S^1 (angles) that descend to quotient maps.
///
///   HalfFold:   (x, y) -> (x, y^2) / sqrt(x^2 + y^4); S^1//Z_2 -> S^1.
///   EssentialF: (x, y) -> (x, e^{-1/y^2}), renormalized; S^1//Z_2 -> S^1//Z_2,
///               trivial isotropy homomorphism.
///   EssentialG: (x, y) -> (x, sign(y) e^{-1/y^2}), renormalized; identity
///               isotropy homomorphism.
///   Power:      theta -> m theta between rotation quotients.
///   CoveringProjection: identity S^1 -> S^1//Z_k.
/// At y = 0 the essential maps are the identity (x, 0) -> (x, 0).
class CircleMap {
 public:
  enum class Kind { HalfFold, EssentialF, EssentialG, Power, CoveringProjection };

  static CircleMap half_fold();
  static CircleMap essential_f();
  static CircleMap essential_g();
  /// Throws NoHomomorphism unless rotation by 2*pi*m/k lies in the
  /// codomain group, i.e. k divides m * b.
  static CircleMap power(std::int64_t m, const CircleQuotient& domain = CircleQuotient::circle(),
                         const CircleQuotient& codomain = CircleQuotient::circle());
  static CircleMap covering_projection(std::int64_t k);

  Kind kind() const noexcept { return kind_; }
  std::int64_t exponent() const noexcept { return m_; }
  const CircleQuotient& domain() const noexcept { return domain_; }
  const CircleQuotient& codomain() const noexcept { return codomain_; }
  /// Image of the domain group generator, as an index into the codomain
  /// group (0 is the trivial homomorphism).
  std::int64_t theta_generator_image() const noexcept { return theta_; }
  std::string name() const;

 private:
  CircleMap(Kind kind, std::int64_t m, CircleQuotient dom, CircleQuotient cod, std::int64_t theta)
      : kind_(kind), m_(m), domain_(dom), codomain_(cod), theta_(theta) {}

  Kind kind_;
  std::int64_t m_;
  CircleQuotient domain_;
  CircleQuotient codomain_;
  std::int64_t theta_;
};

/// Angle of the lifted map at theta, in [0, 2*pi).
double circle_eval(const CircleMap& m, double theta);
/// d/dtheta of the lifted map (analytic; the y = 0 limits are zero for the
/// folding and essential maps).
double circle_derivative(const CircleMap& m, double theta);

struct CirclePreimage {
  double angle = 0;  // folded into the domain's fundamental domain
  double derivative = 0;
  int sign = 1;
  std::int64_t isotropy = 1;
};

struct CircleDegree {
  int mod2 = 0;
  std::int64_t weighted_count = 0;
  std::int64_t oriented = 0;  // meaningful when both ends are orientable
  std::int64_t target_isotropy = 1;
  std::vector<CirclePreimage> preimages;  // sorted by angle
};

struct CircleRootOptions {
  int seeds = 4096;
  double derivative_threshold = 1e-8;
  double tolerance = 1e-12;
};

/// Weighted preimage count of the quotient map at the value y (an angle on
/// the codomain circle). Throws CriticalValue when some preimage has
/// derivative below the threshold.
CircleDegree circle_degree2(const CircleMap& m, double y, const CircleRootOptions& opts = {});

/// Degree of the map S^1//Z_k -> S^1//Z_b induced by theta -> m theta,
/// computed by counting preimages on the quotient circles.
std::int64_t covering_degree(std::int64_t k, std::int64_t m, std::int64_t b);

}  // namespace orbideg
