#include "orbideg/monomial_map.hpp"

#include <numeric>

#include "orbideg/errors.hpp"

namespace orbideg {

MonomialMap::MonomialMap(Weights q, Weights r, std::vector<std::int64_t> e)
    : q_(std::move(q)), r_(std::move(r)), e_(std::move(e)) {
  if (q_.size() != r_.size() || q_.size() != e_.size()) {
    throw Error(ErrorKind::InvalidInput, "q, r and e must have equal length");
  }
  for (auto v : e_) {
    if (v < 1) throw Error(ErrorKind::InvalidInput, "exponents must be positive");
  }
  // Validates positivity and effectiveness of both ends.
  (void)WpsOrbifold(q_);
  (void)WpsOrbifold(r_);

  for (std::size_t i = 0; i < q_.size(); ++i) {
    const std::int64_t num = detail::checked_mul(q_[i], e_[i]);
    if (num % r_[i] != 0) {
      throw Error(ErrorKind::NotEquivariant,
                  "q_" + std::to_string(i) + "*e_" + std::to_string(i) + " = " +
                      std::to_string(num) + " is not a multiple of r_" + std::to_string(i));
    }
    const std::int64_t di = num / r_[i];
    if (i == 0) {
      d_ = di;
    } else if (di != d_) {
      throw Error(ErrorKind::NotEquivariant, "ratio q_i*e_i/r_i is not constant");
    }
  }
}

MonomialMap MonomialMap::identity(const Weights& q) {
  return {q, q, std::vector<std::int64_t>(q.size(), 1)};
}

MonomialMap MonomialMap::f_type(const Weights& q) { return {Weights(q.size(), 1), q, q}; }

MonomialMap MonomialMap::g_type(const Weights& q) {
  const std::int64_t l = lcm_of(q);
  std::vector<std::int64_t> e(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) e[i] = l / q[i];
  return {q, Weights(q.size(), 1), e};
}

MonomialMap monomial_new(Weights q, Weights r, std::vector<std::int64_t> e) {
  return {std::move(q), std::move(r), std::move(e)};
}

MonomialMap compose(const MonomialMap& first, const MonomialMap& second) {
  if (first.target() != second.source()) {
    throw Error(ErrorKind::WeightMismatch, "target weights of the first map differ from the "
                                           "source weights of the second");
  }
  std::vector<std::int64_t> e(first.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = detail::checked_mul(first.exponents()[i], second.exponents()[i]);
  }
  return {first.source(), second.target(), std::move(e)};
}

std::int64_t ThetaHom::image_order() const {
  return target_order / std::gcd(generator_image, target_order);
}

std::int64_t ThetaHom::apply(std::int64_t k) const {
  return static_cast<std::int64_t>(
      detail::floor_mod(static_cast<std::int64_t>((static_cast<__int128>(k) * generator_image) %
                                                  target_order),
                        target_order));
}

ThetaHom theta_at(const MonomialMap& f, const WpsPoint& x) {
  if (x.weights() != f.source()) {
    throw Error(ErrorKind::WeightMismatch, "point does not lie in the source of the map");
  }
  const auto y = underlying_image(f, x);
  ThetaHom th;
  th.source_order = isotropy(x).order;
  th.target_order = isotropy(y).order;
  th.exponent = f.equivariance_degree();
  // exp(2 pi i d / m_x) must lie in mu_{m_y}: its additive index there is
  // d * m_y / m_x.
  const __int128 scaled = static_cast<__int128>(th.exponent) * th.target_order;
  if (scaled % th.source_order != 0) {
    throw Error(ErrorKind::NotEquivariant, "isotropy homomorphism is not well defined");
  }
  th.generator_image =
      static_cast<std::int64_t>((scaled / th.source_order) % th.target_order);
  return th;
}

WpsPoint underlying_image(const MonomialMap& f, const WpsPoint& x) {
  if (x.weights() != f.source()) {
    throw Error(ErrorKind::WeightMismatch, "point does not lie in the source of the map");
  }
  std::vector<ExactCoordinate> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x.coords()[i].pow(f.exponents()[i]);
  return WpsPoint(f.target(), std::move(out));
}

}  // namespace orbideg
