#include "orbideg/slice_lift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orbideg/errors.hpp"

namespace orbideg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> ipow(std::complex<double> z, std::int64_t e) {
  std::complex<double> acc(1.0, 0.0);
  while (e > 0) {
    if (e & 1) acc *= z;
    z *= z;
    e >>= 1;
  }
  return acc;
}

Eigen::VectorXd realify(const CVector& z) {
  Eigen::VectorXd out(2 * z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    out(2 * j) = z(j).real();
    out(2 * j + 1) = z(j).imag();
  }
  return out;
}

// Continued-fraction approximation of x in [0,1) with bounded denominator.
std::pair<std::int64_t, std::int64_t> rational_approx(double x, std::int64_t max_den) {
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = x;
  for (int it = 0; it < 64; ++it) {
    const double a_d = std::floor(frac);
    const auto a = static_cast<std::int64_t>(a_d);
    const std::int64_t p2 = a * p1 + p0;
    const std::int64_t q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    const double rem = frac - a_d;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  return {p1, q1};
}

}  // namespace

CVector circle_act(const Weights& q, const CVector& z, double phase) {
  CVector out(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    out(j) = std::polar(1.0, static_cast<double>(q[static_cast<std::size_t>(j)]) * phase) * z(j);
  }
  return out;
}

CVector monomial_lift(const MonomialMap& f, const CVector& z) {
  CVector w(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    w(j) = ipow(z(j), f.exponents()[static_cast<std::size_t>(j)]);
  }
  const double n = w.norm();
  if (n == 0) throw Error(ErrorKind::PreconditionViolated, "lift vanishes");
  return w / n;
}

CVector to_sphere(const WpsPoint& x) {
  CVector z(static_cast<Eigen::Index>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto& c = x.coords()[j];
    z(static_cast<Eigen::Index>(j)) =
        c.is_zero() ? std::complex<double>(0, 0) : std::polar(1.0, c.unit().angle());
  }
  return z / z.norm();
}

double orbit_distance(const Weights& r, const CVector& p, const CVector& target) {
  CVector c(p.size());
  for (Eigen::Index j = 0; j < p.size(); ++j) c(j) = p(j) * std::conj(target(j));
  const std::int64_t rmax = *std::max_element(r.begin(), r.end());
  const int grid = static_cast<int>(64 * rmax);
  auto h = [&](double phi, double* d1, double* d2) {
    double v = 0, a = 0, b = 0;
    for (Eigen::Index j = 0; j < c.size(); ++j) {
      const double rj = static_cast<double>(r[static_cast<std::size_t>(j)]);
      const std::complex<double> t = std::polar(1.0, rj * phi) * c(j);
      v += t.real();
      a += -rj * t.imag();
      b += -rj * rj * t.real();
    }
    if (d1) *d1 = a;
    if (d2) *d2 = b;
    return v;
  };
  double best_phi = 0, best = -1e300;
  for (int k = 0; k < grid; ++k) {
    const double phi = kTwoPi * k / grid;
    const double v = h(phi, nullptr, nullptr);
    if (v > best) best = v, best_phi = phi;
  }
  for (int it = 0; it < 50; ++it) {
    double d1 = 0, d2 = 0;
    h(best_phi, &d1, &d2);
    if (d2 >= 0) break;
    const double step = d1 / d2;
    best_phi -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return (circle_act(r, p, best_phi) - target).norm();
}

CVector sphere_preimage(const MonomialMap& f, const WpsPoint& x,
                        const std::vector<double>& moduli) {
  if (moduli.size() != f.size() || x.size() != f.size()) {
    throw Error(ErrorKind::InvalidInput, "moduli length mismatch");
  }
  const auto& e = f.exponents();
  // |z_j| = (N m_j)^{1/e_j}, with N fixed by |z| = 1; the sum is increasing in N.
  auto radius = [&](double log_n, std::size_t j) {
    return moduli[j] > 0 ? std::exp((log_n + std::log(moduli[j])) / static_cast<double>(e[j]))
                         : 0.0;
  };
  auto norm2 = [&](double log_n) {
    double acc = 0;
    for (std::size_t j = 0; j < e.size(); ++j) acc += radius(log_n, j) * radius(log_n, j);
    return acc;
  };
  double lo = -700, hi = 700;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (norm2(mid) < 1.0 ? lo : hi) = mid;
  }
  CVector z = CVector::Zero(static_cast<Eigen::Index>(f.size()));
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto& c = x.coords()[j];
    if (c.is_zero() || moduli[j] <= 0) continue;
    z(static_cast<Eigen::Index>(j)) = std::polar(radius(0.5 * (lo + hi), j), c.unit().angle());
  }
  return z / z.norm();
}

SliceChart::SliceChart(Weights q, const CVector& base) : q_(std::move(q)) {
  if (static_cast<std::size_t>(base.size()) != q_.size() || q_.size() < 2) {
    throw Error(ErrorKind::InvalidInput, "slice chart needs a base point with matching weights");
  }
  const double n = base.norm();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "slice base point is zero");
  base_ = base / n;
  qx_ = CVector(base_.size());
  for (Eigen::Index j = 0; j < base_.size(); ++j) {
    qx_(j) = static_cast<double>(q_[static_cast<std::size_t>(j)]) * base_(j);
  }
  qx_norm2_ = qx_.squaredNorm();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(qx_ / std::sqrt(qx_norm2_));
  const Eigen::MatrixXcd full =
      qr.householderQ() * Eigen::MatrixXcd::Identity(base_.size(), base_.size());
  frame_ = full.rightCols(base_.size() - 1);
}

CVector SliceChart::point(const RVector& s) const {
  if (s.size() != dim()) throw Error(ErrorKind::InvalidInput, "slice coordinate length mismatch");
  CVector p = base_;
  for (Eigen::Index k = 0; k < frame_.cols(); ++k) {
    p += std::complex<double>(s(2 * k), s(2 * k + 1)) * frame_.col(k);
  }
  return p / p.norm();
}

RVector SliceChart::coordinates(const CVector& p) const {
  const std::complex<double> lambda = qx_.dot(p) / qx_.dot(base_);
  const CVector v = p / lambda - base_;
  const CVector c = frame_.adjoint() * v;
  RVector s(dim());
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    s(2 * k) = c(k).real();
    s(2 * k + 1) = c(k).imag();
  }
  return s;
}

double SliceChart::slice_residual(const CVector& p) const { return qx_.dot(p).imag(); }

CVector SliceChart::orbit_tangent() const { return std::complex<double>(0, 1) * qx_; }

Eigen::MatrixXd SliceChart::real_frame() const {
  Eigen::MatrixXd out(2 * base_.size(), dim());
  const std::complex<double> i(0, 1);
  for (Eigen::Index k = 0; k < frame_.cols(); ++k) {
    out.col(2 * k) = realify(frame_.col(k));
    out.col(2 * k + 1) = realify(i * frame_.col(k));
  }
  return out;
}

double SliceChart::orbit_overlap() const {
  const Eigen::VectorXd t = realify(orbit_tangent());
  return (real_frame().transpose() * t).cwiseAbs().maxCoeff();
}

double SliceChart::orthonormality_error() const {
  const Eigen::MatrixXd b = real_frame();
  return (b.transpose() * b - Eigen::MatrixXd::Identity(b.cols(), b.cols())).cwiseAbs().maxCoeff();
}

LiftEvaluation slice_lift(const MonomialMap& f, const SliceChart& source, const SliceChart& target,
                          const RVector& s, const NumericTolerances& tol) {
  const Weights& r = f.target();
  const CVector y = source.point(s);
  const CVector w = monomial_lift(f, y);
  const CVector& X = target.base();

  // R(phi) = Im <e^{i r phi} w, r.X>, R'(phi) = Re sum r_j^2 e^{i r_j phi} w_j conj(X_j).
  auto eval = [&](double phi, double& dres) {
    std::complex<double> s0 = 0, s1 = 0;
    for (Eigen::Index j = 0; j < w.size(); ++j) {
      const double rj = static_cast<double>(r[static_cast<std::size_t>(j)]);
      const std::complex<double> t = std::polar(1.0, rj * phi) * w(j) * std::conj(X(j));
      s0 += rj * t;
      s1 += rj * rj * t;
    }
    dres = s1.real();
    return s0.imag();
  };

  LiftEvaluation out;
  out.input = s;
  double phi = 0;
  double dres = 0;
  double res = eval(phi, dres);
  int it = 0;
  for (; it < tol.max_newton; ++it) {
    if (std::abs(res) < 1e-15) break;
    if (dres <= 0) {
      throw Error(ErrorKind::NewtonDiverged, "phase correction left the chart");
    }
    const double step = res / dres;
    phi -= step;
    res = eval(phi, dres);
    if (std::abs(step) < 1e-16) break;
  }
  const std::int64_t rmax = *std::max_element(r.begin(), r.end());
  if (!(std::abs(res) < tol.residual) || std::abs(phi) > std::numbers::pi / (2.0 * rmax)) {
    throw Error(ErrorKind::NewtonDiverged,
                "no phase correction near the identity (residual " + std::to_string(res) + ")");
  }
  out.phase = phi;
  out.residual = res;
  out.iterations = it;
  out.output = circle_act(r, w, phi);
  out.output_coords = target.coordinates(out.output);
  return out;
}

LiftEvaluation slice_lift(const MonomialMap& f, const CVector& x, const CVector& y,
                          const NumericTolerances& tol) {
  const SliceChart source(f.source(), x);
  const SliceChart target(f.target(), monomial_lift(f, source.base()));
  const CVector yn = y / y.norm();
  if ((yn - source.base()).norm() >= tol.chart_radius) {
    throw Error(ErrorKind::PreconditionViolated, "y lies outside the chart radius");
  }
  if (std::abs(source.slice_residual(yn)) > 1e-9) {
    throw Error(ErrorKind::PreconditionViolated, "y does not lie on the slice through x");
  }
  return slice_lift(f, source, target, source.coordinates(yn), tol);
}

JacobianCertificate jacobian_certificate(const MonomialMap& f, const CVector& x,
                                         const NumericTolerances& tol) {
  const SliceChart source(f.source(), x);
  const SliceChart target(f.target(), monomial_lift(f, source.base()));
  const Eigen::Index m = source.dim();
  JacobianCertificate cert;
  cert.jacobian = Eigen::MatrixXd(m, m);
  const double h = tol.fd_step;
  for (Eigen::Index k = 0; k < m; ++k) {
    RVector sp = RVector::Zero(m), sm = RVector::Zero(m);
    sp(k) = h;
    sm(k) = -h;
    const RVector fp = slice_lift(f, source, target, sp, tol).output_coords;
    const RVector fm = slice_lift(f, source, target, sm, tol).output_coords;
    cert.jacobian.col(k) = (fp - fm) / (2 * h);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cert.jacobian);
  cert.smallest_singular_value = svd.singularValues().minCoeff();
  cert.sign = cert.jacobian.determinant() >= 0 ? 1 : -1;
  cert.regular = cert.smallest_singular_value > tol.singular_threshold;
  return cert;
}

JacobianCertificate numeric_jacobian(const MonomialMap& f, const CVector& x,
                                     const NumericTolerances& tol) {
  auto cert = jacobian_certificate(f, x, tol);
  if (!cert.regular) {
    throw Error(ErrorKind::IrregularPoint,
                "smallest singular value " + std::to_string(cert.smallest_singular_value));
  }
  return cert;
}

CVector NumericValue::coordinates() const {
  CVector z = CVector::Zero(static_cast<Eigen::Index>(moduli.size()));
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    const auto& c = phase.coords()[j];
    if (!c.is_zero()) z(static_cast<Eigen::Index>(j)) = std::polar(moduli[j], c.unit().angle());
  }
  return z;
}

NumericValue numeric_value(const Weights& r, const std::vector<std::complex<double>>& y,
                           std::int64_t max_den) {
  if (y.size() != r.size()) throw Error(ErrorKind::InvalidInput, "value length mismatch");
  std::vector<ExactCoordinate> coords(y.size());
  std::vector<double> moduli(y.size(), 0.0);
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double m = std::abs(y[j]);
    if (m < 1e-300) continue;
    double turn = std::arg(y[j]) / kTwoPi;
    if (turn < 0) turn += 1.0;
    auto [a, den] = rational_approx(turn, max_den);
    if (std::abs(static_cast<double>(a) / static_cast<double>(den) - turn) > 1e-12) {
      throw Error(ErrorKind::InvalidInput, "coordinate phase is not a rational turn");
    }
    coords[j] = ExactCoordinate(RootOfUnity(a, den));
    moduli[j] = m;
  }
  return {WpsPoint(r, std::move(coords)), std::move(moduli)};
}

std::vector<ArcSample> value_arc(const MonomialMap& f, const std::vector<std::complex<double>>& from,
                                 const std::vector<std::complex<double>>& to, int samples,
                                 const NumericTolerances& tol, const EnumerationConfig& cfg) {
  if (samples < 2) throw Error(ErrorKind::InvalidInput, "an arc needs at least two samples");
  if (from.size() != f.size() || to.size() != f.size()) {
    throw Error(ErrorKind::InvalidInput, "arc endpoints do not match the map");
  }
  std::vector<ArcSample> out;
  for (int k = 0; k < samples; ++k) {
    ArcSample a;
    a.t = static_cast<double>(k) / (samples - 1);
    for (std::size_t j = 0; j < from.size(); ++j) {
      a.value.push_back((1.0 - a.t) * from[j] + a.t * to[j]);
    }
    const NumericValue nv = numeric_value(f.target(), a.value);
    const auto records = preimages(f, nv.phase, cfg);
    a.raw_count = records.size();
    a.min_singular_value = 1e300;
    const CVector Y = nv.coordinates();
    const CVector Yhat = Y / Y.norm();
    for (const auto& rec : records) {
      a.weighted_count += rec.sign * rec.weight;
      const CVector z = sphere_preimage(f, rec.point, nv.moduli);
      a.max_lift_residual =
          std::max(a.max_lift_residual, orbit_distance(f.target(), monomial_lift(f, z), Yhat));
      const auto cert = jacobian_certificate(f, z, tol);
      a.signs_positive = a.signs_positive && cert.sign == 1;
      a.min_singular_value = std::min(a.min_singular_value, cert.smallest_singular_value);
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace orbideg
