#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orbideg/root_of_unity.hpp"

namespace orbideg {

using Weights = std::vector<std::int64_t>;

/// Weighted projective space CP^n(q): (C^{n+1} minus 0) modulo
/// gamma . z = (gamma^{q_0} z_0, ..., gamma^{q_n} z_n). Weights must be
/// jointly coprime so that the action is effective.
class WpsOrbifold {
 public:
  explicit WpsOrbifold(Weights q);

  const Weights& weights() const noexcept { return q_; }
  std::size_t size() const noexcept { return q_.size(); }
  std::size_t complex_dim() const noexcept { return q_.size() - 1; }
  std::size_t real_dim() const noexcept { return 2 * complex_dim(); }

  /// CP^n(1,...,1).
  static WpsOrbifold projective(std::size_t n);

  friend bool operator==(const WpsOrbifold&, const WpsOrbifold&) = default;

 private:
  Weights q_;
};

/// Same contract as the WpsOrbifold constructor; kept as a free factory for
/// call sites that read better as a function.
WpsOrbifold wps_new(Weights q);

struct IsotropyGroup {
  std::int64_t order = 1;
  /// Weights (mod order) of the isotropy action on the standard chart,
  /// one entry per coordinate other than the slicing coordinate.
  std::vector<std::int64_t> chart_weights;

  bool smooth() const noexcept { return order == 1; }
};

/// A point [z_0 : ... : z_n]_q whose coordinates are zero or exact roots of
/// unity. Equality is equality of weighted-action orbits.
class WpsPoint {
 public:
  WpsPoint(Weights q, std::vector<ExactCoordinate> coords);

  /// [1 : 1 : ... : 1]_q.
  static WpsPoint ones(const Weights& q);
  /// The coordinate point with a single nonzero entry at `index`.
  static WpsPoint vertex(const Weights& q, std::size_t index);

  const Weights& weights() const noexcept { return q_; }
  const std::vector<ExactCoordinate>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }

  /// Indices of the nonzero coordinates, ascending.
  std::vector<std::size_t> support() const;
  bool full_support() const;

  /// gamma . z with gamma acting through the weights.
  WpsPoint act(const RootOfUnity& gamma) const;

  /// Orbit representative: the first nonzero coordinate is made 1 and the
  /// remaining ambiguity (a q_{i0}-th root of unity) is resolved by taking
  /// the lexicographically smallest coordinate tuple.
  WpsPoint canonical() const;

  friend bool operator==(const WpsPoint& a, const WpsPoint& b);
  /// Total order on canonical forms; consistent with ==.
  friend bool operator<(const WpsPoint& a, const WpsPoint& b);

  std::string str() const;  // "[0:1/3]_(1,3)"

 private:
  Weights q_;
  std::vector<ExactCoordinate> coords_;
};

IsotropyGroup isotropy(const WpsPoint& x);

/// Real dimension of the subspace fixed by the isotropy action at x.
std::size_t singular_dimension(const WpsPoint& x);

std::int64_t gcd_over(std::span<const std::int64_t> values, std::span<const std::size_t> indices);
std::int64_t lcm_of(std::span<const std::int64_t> values);

}  // namespace orbideg
