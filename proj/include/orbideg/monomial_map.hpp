#pragma once

#include <cstdint>
#include <vector>

#include "orbideg/wps.hpp"

namespace orbideg {

/// Coordinate-power map CP^n(q) -> CP^n(r), z_i -> z_i^{e_i}.
///
/// The lift to C^{n+1} is equivariant along gamma -> gamma^d exactly when
/// q_i * e_i = d * r_i for every i; d is derived from (q, r, e) and never
/// supplied by the caller.
class MonomialMap {
 public:
  MonomialMap(Weights q, Weights r, std::vector<std::int64_t> e);

  static MonomialMap identity(const Weights& q);
  /// CP^n -> CP^n(q), z_i -> z_i^{q_i}.
  static MonomialMap f_type(const Weights& q);
  /// CP^n(q) -> CP^n, z_i -> z_i^{lcm(q)/q_i}.
  static MonomialMap g_type(const Weights& q);

  const Weights& source() const noexcept { return q_; }
  const Weights& target() const noexcept { return r_; }
  const std::vector<std::int64_t>& exponents() const noexcept { return e_; }
  std::int64_t equivariance_degree() const noexcept { return d_; }
  std::size_t size() const noexcept { return q_.size(); }

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

 private:
  Weights q_;
  Weights r_;
  std::vector<std::int64_t> e_;
  std::int64_t d_ = 1;
};

MonomialMap monomial_new(Weights q, Weights r, std::vector<std::int64_t> e);

/// Applies `first`, then `second`. Exponents and equivariance degrees
/// multiply.
MonomialMap compose(const MonomialMap& first, const MonomialMap& second);

/// The isotropy homomorphism Z_{m_x} -> Z_{m_y}, gamma -> gamma^d, written
/// additively: the generator 1 of Z_{m_x} goes to `generator_image`.
struct ThetaHom {
  std::int64_t source_order = 1;
  std::int64_t target_order = 1;
  std::int64_t exponent = 1;  // d
  std::int64_t generator_image = 0;

  std::int64_t image_order() const;
  std::int64_t kernel_order() const { return source_order / image_order(); }
  bool injective() const { return kernel_order() == 1; }
  /// Image of the k-th power of the generator, as an element of Z_{m_y}.
  std::int64_t apply(std::int64_t k) const;
};

ThetaHom theta_at(const MonomialMap& f, const WpsPoint& x);

WpsPoint underlying_image(const MonomialMap& f, const WpsPoint& x);

}  // namespace orbideg
