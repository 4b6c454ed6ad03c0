#include "kmflat/flat.hpp"

#include <cmath>
#include <numbers>

#include "kmflat/random.hpp"

namespace kmflat {
namespace {

Rational reduce_turns(Rational t) {
  // floor of a rational
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  t -= Rational(q);
  return t;
}

void check_same_shape(const TorusElement& x, const TorusElement& y) {
  if (x.dim() != y.dim() || x.phase_turns.size() != y.phase_turns.size())
    throw KmError(ErrorCode::DimensionMismatch, "torus elements of different dimension");
}

}  // namespace

Complex TorusElement::coordinate(std::size_t i) const {
  const double angle = 2 * std::numbers::pi * phase_turns.at(i).get_d();
  return std::polar(radial.at(i), angle);
}

TorusElement TorusElement::identity(std::size_t dim, PhaseMode mode) {
  return {mode, std::vector<Rational>(dim, Rational(0)), std::vector<double>(dim, 1.0)};
}

TorusElement TorusElement::real(const std::vector<int>& signs, std::vector<double> radial) {
  if (signs.size() != radial.size()) throw KmError(ErrorCode::DimensionMismatch, "sign and radial sizes differ");
  TorusElement t{PhaseMode::Real, {}, std::move(radial)};
  for (int s : signs) {
    if (s != 1 && s != -1) throw KmError(ErrorCode::InvalidArgument, "real phase must be +1 or -1");
    t.phase_turns.push_back(s == 1 ? Rational(0) : Rational(1, 2));
  }
  return t;
}

TorusElement TorusElement::complex(std::vector<Rational> turns, std::vector<double> radial) {
  if (turns.size() != radial.size()) throw KmError(ErrorCode::DimensionMismatch, "phase and radial sizes differ");
  for (auto& t : turns) t = reduce_turns(t);
  return {PhaseMode::Complex, std::move(turns), std::move(radial)};
}

TorusElement operator*(const TorusElement& x, const TorusElement& y) {
  check_same_shape(x, y);
  TorusElement out = x;
  if (y.mode == PhaseMode::Complex) out.mode = PhaseMode::Complex;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    out.phase_turns[i] = reduce_turns(x.phase_turns[i] + y.phase_turns[i]);
    out.radial[i] = x.radial[i] * y.radial[i];
  }
  return out;
}

TorusElement inverse(const TorusElement& t) {
  TorusElement out = t;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    out.phase_turns[i] = reduce_turns(-t.phase_turns[i]);
    out.radial[i] = 1.0 / t.radial[i];
  }
  return out;
}

bool phase_trivial(const TorusElement& t) {
  for (const auto& p : t.phase_turns)
    if (sgn(p) != 0) return false;
  return true;
}

TorusElement theta(const TorusElement& t) {
  // conjugation negates the phase, inversion negates it back
  TorusElement out = t;
  for (auto& r : out.radial) r = 1.0 / r;
  return out;
}

TorusElement twist(const TorusElement& t) {
  TorusElement out = TorusElement::identity(t.dim(), t.mode);
  for (std::size_t i = 0; i < t.dim(); ++i) out.radial[i] = t.radial[i] * t.radial[i];
  return out;
}

TorusElement exp_flat(const std::vector<double>& x) {
  TorusElement out = TorusElement::identity(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) throw KmError(ErrorCode::NonFinite, "non-finite coordinate", {i + 1});
    out.radial[i] = std::exp(x[i]);
    if (!std::isfinite(out.radial[i]) || out.radial[i] == 0)
      throw KmError(ErrorCode::NonFinite, "exponential out of range", {i + 1});
  }
  return out;
}

std::vector<double> log_flat(const TorusElement& a) {
  std::vector<double> x(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) x[i] = std::log(a.radial[i]);
  return x;
}

TorusElement mu_torus(const TorusElement& x, const TorusElement& y) {
  check_same_shape(x, y);
  TorusElement out = TorusElement::identity(x.dim(), x.mode);
  for (std::size_t i = 0; i < x.dim(); ++i) out.radial[i] = x.radial[i] * x.radial[i] / y.radial[i];
  return out;
}

FlatSpacePoint mu_flat(const FlatSpacePoint& x, const FlatSpacePoint& y) {
  if (x.base != y.base) throw KmError(ErrorCode::BaseMismatch, "points lie in flats '" + x.base + "' and '" + y.base + "'");
  if (x.coords.size() != y.coords.size()) throw KmError(ErrorCode::DimensionMismatch, "flat points of different dimension");
  FlatSpacePoint out{std::vector<double>(x.coords.size()), x.base};
  for (std::size_t i = 0; i < x.coords.size(); ++i) out.coords[i] = 2 * x.coords[i] - y.coords[i];
  return out;
}

double distance(const FlatSpacePoint& x, const FlatSpacePoint& y) {
  if (x.coords.size() != y.coords.size()) throw KmError(ErrorCode::DimensionMismatch, "flat points of different dimension");
  double s = 0;
  for (std::size_t i = 0; i < x.coords.size(); ++i) s += (x.coords[i] - y.coords[i]) * (x.coords[i] - y.coords[i]);
  return std::sqrt(s);
}

Mat2 mu_group_model(const Mat2& x, const Mat2& y) {
  constexpr double kTol = 1e-10;
  if (!is_positive_definite(x, kTol)) throw KmError(ErrorCode::NotPositiveDefinite, "first argument not positive definite");
  if (!is_positive_definite(y, kTol)) throw KmError(ErrorCode::NotPositiveDefinite, "second argument not positive definite");
  return x * y.inverse() * x;
}

LoosReport check_loos_axioms(std::span<const FlatSpacePoint> pts, double tol) {
  return check_loos_axioms(
      pts, [](const FlatSpacePoint& x, const FlatSpacePoint& y) { return mu_flat(x, y); },
      [](const FlatSpacePoint& x, const FlatSpacePoint& y) { return distance(x, y); }, tol);
}

LoosReport check_loos_axioms(std::span<const Mat2> pts, double tol) {
  return check_loos_axioms(
      pts, [](const Mat2& x, const Mat2& y) { return mu_group_model(x, y); },
      [](const Mat2& x, const Mat2& y) { return distance(x, y); }, tol);
}

std::vector<FlatSpacePoint> sample_flat_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<FlatSpacePoint> pts(count);
  for (auto& p : pts) {
    p.coords.resize(dim);
    for (auto& c : p.coords) c = rng.uniform(-2.0, 2.0);
  }
  return pts;
}

std::vector<Mat2> sample_group_model_points(std::size_t count, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Mat2> pts;
  pts.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    Complex alpha(rng.uniform(-1, 1), rng.uniform(-1, 1));
    Complex beta(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    alpha /= norm;
    beta /= norm;
    const Mat2 k{alpha, -std::conj(beta), beta, std::conj(alpha)};
    const double t = rng.uniform(-0.5, 0.5);
    pts.push_back(k * Mat2::diag(std::exp(t), std::exp(-t)) * k.adjoint());
  }
  return pts;
}

}  // namespace kmflat
