#include "orbideg/wps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbideg/errors.hpp"

namespace orbideg {

std::int64_t gcd_over(std::span<const std::int64_t> values, std::span<const std::size_t> indices) {
  std::int64_t g = 0;
  for (std::size_t i : indices) g = std::gcd(g, values[i]);
  return g;
}

std::int64_t lcm_of(std::span<const std::int64_t> values) {
  std::int64_t l = 1;
  for (std::int64_t v : values) l = detail::checked_mul(l / std::gcd(l, v), v);
  return l;
}

WpsOrbifold::WpsOrbifold(Weights q) : q_(std::move(q)) {
  if (q_.empty()) throw Error(ErrorKind::InvalidInput, "weight list is empty");
  std::int64_t g = 0;
  for (std::int64_t w : q_) {
    if (w < 1) throw Error(ErrorKind::InvalidInput, "weights must be positive");
    g = std::gcd(g, w);
  }
  if (g != 1) {
    throw Error(ErrorKind::NotEffective, "weights have common divisor " + std::to_string(g));
  }
}

WpsOrbifold WpsOrbifold::projective(std::size_t n) { return WpsOrbifold(Weights(n + 1, 1)); }

WpsOrbifold wps_new(Weights q) { return WpsOrbifold(std::move(q)); }

WpsPoint::WpsPoint(Weights q, std::vector<ExactCoordinate> coords)
    : q_(std::move(q)), coords_(std::move(coords)) {
  if (q_.size() != coords_.size()) {
    throw Error(ErrorKind::InvalidInput, "point has " + std::to_string(coords_.size()) +
                                             " coordinates for " + std::to_string(q_.size()) +
                                             " weights");
  }
  if (std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.is_zero(); })) {
    throw Error(ErrorKind::InvalidInput, "all coordinates are zero");
  }
}

WpsPoint WpsPoint::ones(const Weights& q) {
  return WpsPoint(q, std::vector<ExactCoordinate>(q.size(), ExactCoordinate::one()));
}

WpsPoint WpsPoint::vertex(const Weights& q, std::size_t index) {
  std::vector<ExactCoordinate> c(q.size());
  c.at(index) = ExactCoordinate::one();
  return WpsPoint(q, std::move(c));
}

std::vector<std::size_t> WpsPoint::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) s.push_back(i);
  }
  return s;
}

bool WpsPoint::full_support() const {
  return std::none_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.is_zero(); });
}

WpsPoint WpsPoint::act(const RootOfUnity& gamma) const {
  std::vector<ExactCoordinate> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i] * gamma.pow(q_[i]);
  return WpsPoint(q_, std::move(out));
}

WpsPoint WpsPoint::canonical() const {
  std::size_t lead = 0;
  while (coords_[lead].is_zero()) ++lead;
  const std::int64_t ql = q_[lead];
  // gamma_0^{q_lead} cancels the leading phase; the other solutions differ
  // by q_lead-th roots of unity.
  const RootOfUnity base = coords_[lead].unit().inverse().principal_root(ql);
  std::vector<ExactCoordinate> best;
  for (std::int64_t k = 0; k < ql; ++k) {
    const RootOfUnity gamma = base * RootOfUnity(k, ql);
    std::vector<ExactCoordinate> cand(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) cand[i] = coords_[i] * gamma.pow(q_[i]);
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return WpsPoint(q_, std::move(best));
}

bool operator==(const WpsPoint& a, const WpsPoint& b) {
  if (a.q_ != b.q_) return false;
  if (a.support() != b.support()) return false;
  return a.canonical().coords_ == b.canonical().coords_;
}

bool operator<(const WpsPoint& a, const WpsPoint& b) {
  if (a.q_ != b.q_) return a.q_ < b.q_;
  return a.canonical().coords_ < b.canonical().coords_;
}

std::string WpsPoint::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ':';
    os << coords_[i].str();
  }
  os << "]_(";
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (i) os << ',';
    os << q_[i];
  }
  os << ')';
  return os.str();
}

IsotropyGroup isotropy(const WpsPoint& x) {
  const auto s = x.support();
  IsotropyGroup out;
  out.order = gcd_over(x.weights(), s);
  const std::size_t slicing = s.front();
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j == slicing) continue;
    out.chart_weights.push_back(x.weights()[j] % out.order);
  }
  return out;
}

std::size_t singular_dimension(const WpsPoint& x) {
  const auto iso = isotropy(x);
  return 2 * static_cast<std::size_t>(
                 std::count(iso.chart_weights.begin(), iso.chart_weights.end(), 0));
}

}  // namespace orbideg
