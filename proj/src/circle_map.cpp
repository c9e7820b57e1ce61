#include "orbideg/circle_map.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orbideg/errors.hpp"
#include "orbideg/root_of_unity.hpp"

namespace orbideg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e^{-1/y^2}, with the y = 0 branch pinned to 0.
double flat_bump(double y) { return y == 0.0 ? 0.0 : std::exp(-1.0 / (y * y)); }

double sign_of(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

}  // namespace

CircleMap CircleMap::half_fold() {
  return {Kind::HalfFold, 2, CircleQuotient::reflection(), CircleQuotient::circle(), 0};
}

CircleMap CircleMap::essential_f() {
  return {Kind::EssentialF, 1, CircleQuotient::reflection(), CircleQuotient::reflection(), 0};
}

CircleMap CircleMap::essential_g() {
  return {Kind::EssentialG, 1, CircleQuotient::reflection(), CircleQuotient::reflection(), 1};
}

CircleMap CircleMap::power(std::int64_t m, const CircleQuotient& domain,
                           const CircleQuotient& codomain) {
  if (domain.kind() != CircleQuotient::Kind::Rotation ||
      codomain.kind() != CircleQuotient::Kind::Rotation) {
    throw Error(ErrorKind::InvalidInput, "power maps act between rotation quotients");
  }
  const std::int64_t k = domain.rotation_order();
  const std::int64_t b = codomain.rotation_order();
  const std::int64_t mb = detail::checked_mul(m, b);
  if (mb % k != 0) {
    throw Error(ErrorKind::NoHomomorphism, "rotation by 2pi*" + std::to_string(m) + "/" +
                                               std::to_string(k) + " is not in Z_" +
                                               std::to_string(b));
  }
  return {Kind::Power, m, domain, codomain, detail::floor_mod(mb / k, b)};
}

CircleMap CircleMap::covering_projection(std::int64_t k) {
  return {Kind::CoveringProjection, 1, CircleQuotient::circle(), CircleQuotient::rotation(k), 0};
}

std::string CircleMap::name() const {
  switch (kind_) {
    case Kind::HalfFold: return "half-fold";
    case Kind::EssentialF: return "essential-f";
    case Kind::EssentialG: return "essential-g";
    case Kind::Power:
      return "power(" + std::to_string(m_) + "):Z_" + std::to_string(domain_.rotation_order()) +
             "->Z_" + std::to_string(codomain_.rotation_order());
    case Kind::CoveringProjection:
      return "covering(Z_" + std::to_string(codomain_.rotation_order()) + ")";
  }
  return "unknown";
}

double circle_eval(const CircleMap& m, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  switch (m.kind()) {
    case CircleMap::Kind::HalfFold: return wrap_angle(std::atan2(s * s, c));
    case CircleMap::Kind::EssentialF: return wrap_angle(std::atan2(flat_bump(s), c));
    case CircleMap::Kind::EssentialG: return wrap_angle(std::atan2(sign_of(s) * flat_bump(s), c));
    case CircleMap::Kind::Power: return wrap_angle(static_cast<double>(m.exponent()) * theta);
    case CircleMap::Kind::CoveringProjection: return wrap_angle(theta);
  }
  return 0;
}

double circle_derivative(const CircleMap& m, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  switch (m.kind()) {
    case CircleMap::Kind::HalfFold: return s * (1.0 + c * c) / (c * c + s * s * s * s);
    case CircleMap::Kind::EssentialF:
    case CircleMap::Kind::EssentialG: {
      const double e = flat_bump(s);
      if (e == 0.0) return 0.0;
      // atan2(E, c)' = (c E' + E s) / (c^2 + E^2), E' = E * 2c / s^3.
      double d = e * (2.0 * c * c / (s * s * s) + s) / (c * c + e * e);
      if (m.kind() == CircleMap::Kind::EssentialG) d *= sign_of(s);
      return d;
    }
    case CircleMap::Kind::Power: return static_cast<double>(m.exponent());
    case CircleMap::Kind::CoveringProjection: return 1.0;
  }
  return 0;
}

namespace {

struct RawRoot {
  double theta;
  double derivative;
};

void find_roots(const CircleMap& m, double target, const CircleRootOptions& opts,
                std::vector<RawRoot>& out) {
  int n = opts.seeds;
  if (m.kind() == CircleMap::Kind::Power) {
    n = std::max<int>(n, static_cast<int>(64 * std::abs(m.exponent())));
  }
  auto g = [&](double t) { return angle_diff(circle_eval(m, t), target); };
  std::vector<double> th(n + 1), gv(n + 1);
  for (int j = 0; j <= n; ++j) {
    th[j] = kTwoPi * j / n;
    gv[j] = j == n ? gv[0] : g(th[j]);
  }

  std::vector<bool> bracketed(n + 1, false);
  auto push = [&](double t) {
    t = wrap_angle(t);
    if (std::abs(g(t)) > opts.tolerance) {
      throw Error(ErrorKind::NoConvergence, "root refinement stalled at " + std::to_string(t));
    }
    out.push_back({t, circle_derivative(m, t)});
  };

  for (int j = 0; j < n; ++j) {
    const double a = gv[j];
    const double b = gv[j + 1];
    if (a == 0.0) {
      bracketed[j] = true;
      push(th[j]);
      continue;
    }
    if (b == 0.0 || a * b > 0 || std::abs(a - b) >= std::numbers::pi) continue;
    bracketed[j] = bracketed[j + 1] = true;
    double lo = th[j], hi = th[j + 1], glo = a;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double gm = g(mid);
      if (gm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((gm < 0) == (glo < 0)) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
      }
    }
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 5; ++it) {
      const double d = circle_derivative(m, t);
      if (std::abs(d) < 1e-300) break;
      const double nt = t - g(t) / d;
      if (nt < th[j] || nt > th[j + 1]) break;
      t = nt;
    }
    push(t);
  }

  // Touching roots: |g| dips to zero without a sign change.
  for (int j = 1; j < n; ++j) {
    if (bracketed[j - 1] || bracketed[j] || bracketed[j + 1 > n ? n : j + 1]) continue;
    const double a = std::abs(gv[j]);
    if (a > 1e-2 || a > std::abs(gv[j - 1]) || a > std::abs(gv[j + 1])) continue;
    double lo = th[j - 1], hi = th[j + 1];
    for (int it = 0; it < 200; ++it) {
      const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      if (std::abs(g(m1)) < std::abs(g(m2))) hi = m2; else lo = m1;
    }
    const double t = 0.5 * (lo + hi);
    if (std::abs(g(t)) < 1e-10) out.push_back({wrap_angle(t), circle_derivative(m, t)});
  }
}

double circular_gap(double a, double b, double period) {
  double d = std::fmod(std::abs(a - b), period);
  return std::min(d, period - d);
}

}  // namespace

CircleDegree circle_degree2(const CircleMap& m, double y, const CircleRootOptions& opts) {
  using Rational = boost::rational<std::int64_t>;
  const CircleQuotient& dom = m.domain();
  const CircleQuotient& cod = m.codomain();

  std::vector<RawRoot> roots;
  for (double lift : cod.orbit(y)) find_roots(m, lift, opts, roots);

  CircleDegree out;
  out.target_isotropy = cod.isotropy_order(y);
  const double period =
      dom.kind() == CircleQuotient::Kind::Rotation ? kTwoPi / dom.rotation_order() : kTwoPi;
  Rational weighted(0), oriented(0);
  for (const auto& r : roots) {
    if (std::abs(r.derivative) < opts.derivative_threshold) {
      throw Error(ErrorKind::CriticalValue, "preimage at theta=" + std::to_string(r.theta) +
                                                " has derivative " + std::to_string(r.derivative));
    }
    const double folded = dom.fold(r.theta);
    const bool seen = std::any_of(out.preimages.begin(), out.preimages.end(), [&](const auto& p) {
      return circular_gap(p.angle, folded, period) < 1e-8;
    });
    if (seen) continue;
    CirclePreimage p;
    p.angle = folded;
    p.derivative = r.derivative;
    p.sign = r.derivative > 0 ? 1 : -1;
    p.isotropy = dom.isotropy_order(r.theta);
    const Rational w(out.target_isotropy, p.isotropy);
    weighted += w;
    oriented += p.sign * w;
    out.preimages.push_back(p);
  }
  if (weighted.denominator() != 1 || oriented.denominator() != 1) {
    throw Error(ErrorKind::NonIntegralWeight, "weighted circle count is not an integer");
  }
  std::sort(out.preimages.begin(), out.preimages.end(),
            [](const auto& a, const auto& b) { return a.angle < b.angle; });
  out.weighted_count = weighted.numerator();
  out.oriented = oriented.numerator();
  out.mod2 = static_cast<int>(out.weighted_count % 2);
  return out;
}

std::int64_t covering_degree(std::int64_t k, std::int64_t m, std::int64_t b) {
  const CircleMap map =
      CircleMap::power(m, CircleQuotient::rotation(k), CircleQuotient::rotation(b));
  // Power maps have constant derivative, so a generic angle is a regular value.
  return circle_degree2(map, 0.7).oriented;
}

}  // namespace orbideg
