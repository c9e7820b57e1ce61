#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

#include "orbideg/degree.hpp"
#include "orbideg/monomial_map.hpp"
#include "orbideg/wps.hpp"

namespace orbideg {

using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

struct NumericTolerances {
  double residual = 1e-9;
  double derivative_threshold = 1e-8;
  double fd_step = 1e-5;
  double singular_threshold = 1e-6;
  double chart_radius = 0.1;
  int max_newton = 50;
};

/// Slice through a point x of the unit sphere S^{2n+1} for the weighted
/// circle action: points normalize(x + v) with v Hermitian-orthogonal to
/// q.x. The slice is invariant under the stabilizer of x and transverse to
/// the orbit. Real coordinates come in (Re, Im) pairs against a unitary
/// frame, so they carry the complex orientation.
class SliceChart {
 public:
  SliceChart(Weights q, const CVector& base);

  const Weights& weights() const noexcept { return q_; }
  const CVector& base() const noexcept { return base_; }
  const Eigen::MatrixXcd& frame() const noexcept { return frame_; }
  Eigen::Index dim() const noexcept { return 2 * frame_.cols(); }

  CVector point(const RVector& s) const;
  /// Inverse of point() for points on the slice near the base.
  RVector coordinates(const CVector& p) const;
  /// Im <p, q.x>, zero exactly on the slice (within its chart).
  double slice_residual(const CVector& p) const;

  /// i * (q_0 x_0, ..., q_n x_n).
  CVector orbit_tangent() const;
  /// Real frame vectors as columns in R^{2n+2}.
  Eigen::MatrixXd real_frame() const;
  double orbit_overlap() const;       // max |<b, orbit tangent>_R|
  double orthonormality_error() const;

 private:
  Weights q_;
  CVector base_;
  CVector qx_;
  double qx_norm2_ = 0;
  Eigen::MatrixXcd frame_;
};

struct LiftEvaluation {
  RVector input;        // slice coordinates of y at x
  CVector output;       // k(y) . fhat(y) on the target sphere
  RVector output_coords;
  double phase = 0;     // k(y) = exp(i phase)
  double residual = 0;
  int iterations = 0;
};

/// Weighted circle action on the unit sphere: gamma . z = (gamma^{q_i} z_i).
CVector circle_act(const Weights& q, const CVector& z, double phase);

/// The equivariant lift z -> z^e / |z^e| on the unit sphere.
CVector monomial_lift(const MonomialMap& f, const CVector& z);

CVector to_sphere(const WpsPoint& x);

/// Distance from p to the nearest point of the weighted circle orbit of target.
double orbit_distance(const Weights& r, const CVector& p, const CVector& target);

/// The point of the unit sphere over the exact preimage x whose lift has the
/// given target moduli (up to a positive scale) and the phases of f(x).
/// Zero moduli force zero coordinates.
CVector sphere_preimage(const MonomialMap& f, const WpsPoint& x, const std::vector<double>& moduli);

/// Corrects fhat(y) by the unique circle element k(y) near the identity that
/// moves it into the slice through fhat(x).
LiftEvaluation slice_lift(const MonomialMap& f, const SliceChart& source, const SliceChart& target,
                          const RVector& s, const NumericTolerances& tol = {});
/// Same, with charts built at x and fhat(x); y must lie in the slice at x.
LiftEvaluation slice_lift(const MonomialMap& f, const CVector& x, const CVector& y,
                          const NumericTolerances& tol = {});

struct JacobianCertificate {
  int sign = 1;
  double smallest_singular_value = 0;
  Eigen::MatrixXd jacobian;
  bool regular = false;
};

/// Central-difference Jacobian of the slice lift at x, with the sign of its
/// determinant and its smallest singular value. Does not throw on
/// irregular points.
JacobianCertificate jacobian_certificate(const MonomialMap& f, const CVector& x,
                                         const NumericTolerances& tol = {});
/// As jacobian_certificate, but throws IrregularPoint below the threshold.
JacobianCertificate numeric_jacobian(const MonomialMap& f, const CVector& x,
                                     const NumericTolerances& tol = {});

/// A value given by exact phases and nonnegative moduli (zero exactly where
/// the phase coordinate is zero).
struct NumericValue {
  WpsPoint phase;
  std::vector<double> moduli;

  CVector coordinates() const;
};

/// Splits complex coordinates into exact phases and moduli; phases must be
/// rational multiples of 2*pi with denominator at most max_den.
NumericValue numeric_value(const Weights& r, const std::vector<std::complex<double>>& y,
                           std::int64_t max_den = 10000);

struct ArcSample {
  double t = 0;
  std::vector<std::complex<double>> value;
  std::uint64_t raw_count = 0;
  std::int64_t weighted_count = 0;
  bool signs_positive = true;
  double min_singular_value = 0;
  double max_lift_residual = 0;
};

/// Samples y(t) = (1-t) from + t to for t = k/(samples-1). Raw and weighted
/// counts come from the exact engine at the phase of y(t); every preimage is
/// rebuilt numerically with the moduli of y(t), checked to hit y(t), and
/// certified by the numeric Jacobian.
std::vector<ArcSample> value_arc(const MonomialMap& f, const std::vector<std::complex<double>>& from,
                                 const std::vector<std::complex<double>>& to, int samples,
                                 const NumericTolerances& tol = {},
                                 const EnumerationConfig& cfg = {});

}  // namespace orbideg
