#pragma once

// The standard flat: torus T = M x A, exp onto A, the reflection map of the
// Euclidean flat and of the group model, and Loos axiom checks.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kmflat/error.hpp"
#include "kmflat/mat2.hpp"
#include "kmflat/rational.hpp"

namespace kmflat {

enum class PhaseMode { Real, Complex };

/// Element of T in split coordinates: phase in M (exact turns, reduced to
/// [0, 1); real mode allows only 0 and 1/2) times radial part in A.
struct TorusElement {
  PhaseMode mode = PhaseMode::Real;
  std::vector<Rational> phase_turns;
  std::vector<double> radial;

  std::size_t dim() const { return radial.size(); }
  Complex coordinate(std::size_t i) const;

  static TorusElement identity(std::size_t dim, PhaseMode mode = PhaseMode::Real);
  /// signs are +1 / -1
  static TorusElement real(const std::vector<int>& signs, std::vector<double> radial);
  static TorusElement complex(std::vector<Rational> turns, std::vector<double> radial);
};

TorusElement operator*(const TorusElement& x, const TorusElement& y);
TorusElement inverse(const TorusElement& t);
bool phase_trivial(const TorusElement& t);

/// conj(t)^{-1}: phases unchanged, radial inverted.
TorusElement theta(const TorusElement& t);
/// t * conj(t) = |t|^2: phase trivial, radial squared.
TorusElement twist(const TorusElement& t);
/// Componentwise exponential onto A. Throws NonFinite.
TorusElement exp_flat(const std::vector<double>& x);
/// Inverse of exp_flat on A.
std::vector<double> log_flat(const TorusElement& a);
/// Reflection on A = T/M: radial |x|^2 / |y|.
TorusElement mu_torus(const TorusElement& x, const TorusElement& y);

struct FlatSpacePoint {
  std::vector<double> coords;
  std::string base = "e";
};

/// 2x - y. Throws BaseMismatch / DimensionMismatch.
FlatSpacePoint mu_flat(const FlatSpacePoint& x, const FlatSpacePoint& y);
double distance(const FlatSpacePoint& x, const FlatSpacePoint& y);

/// x y^{-1} x on positive-definite Hermitian 2x2 matrices. Throws NotPositiveDefinite.
Mat2 mu_group_model(const Mat2& x, const Mat2& y);

struct LoosViolation {
  std::string axiom;  // "S1", "S2", "S3", "S4"
  std::vector<std::size_t> points;
  double residual = 0;
};

struct LoosReport {
  bool passed = true;
  std::size_t points = 0;
  std::size_t triples_checked = 0;
  std::size_t pairs_checked = 0;
  double max_residual = 0;
  std::vector<LoosViolation> violations;  // first kMaxViolations only
  std::size_t violation_count = 0;

  static constexpr std::size_t kMaxViolations = 32;
};

/// S1 x.x = x, S2 x.(x.y) = y, S3 x.(y.z) = (x.y).(x.z) on all pairs/triples
/// within `tol`, and S4 (x.y = y implies x = y) on all distinct pairs.
template <class Point, class Mu, class Dist>
LoosReport check_loos_axioms(std::span<const Point> pts, Mu&& mu, Dist&& dist, double tol) {
  if (pts.size() < 3) throw KmError(ErrorCode::InvalidArgument, "axiom check needs at least 3 points");
  LoosReport report;
  report.points = pts.size();
  auto record = [&](const char* axiom, std::vector<std::size_t> idx, double residual, bool ok) {
    if (!ok) {
      report.passed = false;
      ++report.violation_count;
      if (report.violations.size() < LoosReport::kMaxViolations)
        report.violations.push_back({axiom, std::move(idx), residual});
    }
  };
  auto track = [&](double r) {
    if (r > report.max_residual) report.max_residual = r;
  };
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& x = pts[i];
    const double s1 = dist(mu(x, x), x);
    track(s1);
    record("S1", {i}, s1, s1 <= tol);
    for (std::size_t j = 0; j < n; ++j) {
      const Point& y = pts[j];
      const Point xy = mu(x, y);
      const double s2 = dist(mu(x, xy), y);
      track(s2);
      record("S2", {i, j}, s2, s2 <= tol);
      if (i != j && dist(x, y) > tol) {
        ++report.pairs_checked;
        const double gap = dist(xy, y);
        record("S4", {i, j}, gap, gap > tol);
      }
      for (std::size_t k = 0; k < n; ++k) {
        const Point& z = pts[k];
        const double s3 = dist(mu(x, mu(y, z)), mu(xy, mu(x, z)));
        track(s3);
        record("S3", {i, j, k}, s3, s3 <= tol);
        ++report.triples_checked;
      }
    }
  }
  return report;
}

LoosReport check_loos_axioms(std::span<const FlatSpacePoint> pts, double tol = 1e-10);
LoosReport check_loos_axioms(std::span<const Mat2> pts, double tol = 1e-10);

/// Seeded flat points with coordinates in [-2, 2).
std::vector<FlatSpacePoint> sample_flat_points(std::size_t dim, std::size_t count, std::uint64_t seed);
/// Seeded group-model points k diag(e^t, e^-t) k^*, k in SU(2), |t| <= 1/2.
std::vector<Mat2> sample_group_model_points(std::size_t count, std::uint64_t seed);

}  // namespace kmflat
