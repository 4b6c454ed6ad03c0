#include "kmflat/sl2.hpp"

#include <algorithm>
#include <cmath>

#include "kmflat/error.hpp"

namespace kmflat {
namespace {

// <x, y> = x_1 conj(y_1) + x_2 conj(y_2)
Complex inner(Complex x1, Complex x2, Complex y1, Complex y2) { return x1 * std::conj(y1) + x2 * std::conj(y2); }

double norm2(Complex x1, Complex x2) { return std::sqrt(std::norm(x1) + std::norm(x2)); }

// x + y with a stable form when y < 0 (returns h^2 / (R - s_c) for s_c < 0).
double forward_offset(double s_c, double h) {
  const double r = std::hypot(s_c, h);
  return s_c >= 0 ? s_c + r : h * h / (r - s_c);
}

}  // namespace

Sl2Element::Sl2Element(const Mat2& m, FieldMode mode) : m_(m), mode_(mode) {
  if (std::abs(m.det() - Complex(1)) >= kDetTolerance)
    throw KmError(ErrorCode::NotUnimodular, "determinant differs from 1");
  if (mode == FieldMode::Real && !is_real(m, 0.0))
    throw KmError(ErrorCode::FieldMismatch, "real-mode element with complex entries");
}

Sl2Element Sl2Element::operator*(const Sl2Element& o) const {
  const FieldMode mode = (mode_ == FieldMode::Complex || o.mode_ == FieldMode::Complex) ? FieldMode::Complex
                                                                                        : FieldMode::Real;
  return {m_ * o.m_, mode, Unchecked{}};
}

Sl2Element Sl2Element::inverse() const { return {m_.inverse(), mode_, Unchecked{}}; }

Sl2Element chevalley_theta(const Sl2Element& g) {
  return Sl2Element(g.matrix().adjoint().inverse(), g.mode());
}

Sl2Element twist_sl2(const Sl2Element& g) { return Sl2Element(g.matrix() * g.matrix().adjoint(), g.mode()); }

bool in_compact_subgroup(const Sl2Element& g, double tol) {
  return distance(g.matrix() * g.matrix().adjoint(), Mat2::identity()) <= tol;
}

std::string_view to_string(IwasawaOrder order) { return order == IwasawaOrder::UAK ? "UAK" : "KAU"; }

Mat2 IwasawaTriple::compose() const { return order == IwasawaOrder::UAK ? u * a * k : k * a * u; }

double condition_number(const Mat2& g) {
  const double f2 = std::norm(g.a) + std::norm(g.b) + std::norm(g.c) + std::norm(g.d);
  const double det = std::abs(g.det());
  if (det == 0) return INFINITY;
  const double s1sq = 0.5 * (f2 + std::sqrt(std::max(0.0, f2 * f2 - 4 * det * det)));
  return s1sq / det;
}

IwasawaTriple iwasawa_decompose(const Sl2Element& g, IwasawaOrder order) {
  const Mat2& m = g.matrix();
  if (!(condition_number(m) <= 1e12)) throw KmError(ErrorCode::NumericallySingular, "condition number exceeds 1e12");
  IwasawaTriple t;
  t.order = order;
  if (order == IwasawaOrder::UAK) {
    // Orthonormalize the rows from the bottom: g = T k with T upper triangular.
    const double n2 = norm2(m.c, m.d);
    const Complex k21 = m.c / n2, k22 = m.d / n2;
    const Complex proj = inner(m.a, m.b, k21, k22);
    const Complex r1 = m.a - proj * k21, r2 = m.b - proj * k22;
    const double n1 = norm2(r1, r2);
    t.k = Mat2{r1 / n1, r2 / n1, k21, k22};
    t.a = Mat2::diag(n1, n2);
    t.u = Mat2{1, proj / n2, 0, 1};
  } else {
    // Orthonormalize the columns from the left: g = k R.
    const double n1 = norm2(m.a, m.c);
    const Complex q11 = m.a / n1, q21 = m.c / n1;
    const Complex proj = inner(m.b, m.d, q11, q21);
    const Complex c1 = m.b - proj * q11, c2 = m.d - proj * q21;
    const double n2 = norm2(c1, c2);
    t.k = Mat2{q11, c1 / n2, q21, c2 / n2};
    t.a = Mat2::diag(n1, n2);
    t.u = Mat2{1, proj / n1, 0, 1};
  }
  return t;
}

SymmetricElementResult is_symmetric_element(const Sl2Element& g, double tol) {
  SymmetricElementResult out;
  const Mat2 theta = chevalley_theta(g).matrix();
  if (distance(theta, g.inverse().matrix()) >= tol) return out;
  out.symmetric = true;
  const Mat2& m = g.matrix();
  const double a = m.a.real(), d = m.d.real();
  const Complex b = m.b;
  const double disc = std::sqrt((a - d) * (a - d) + 4 * std::norm(b));
  const double l1 = 0.5 * (a + d + disc), l2 = 0.5 * (a + d - disc);
  out.spectrum = {l1, l2};
  Complex v1, v2;
  if (std::abs(b) > 1e-14 * std::max(1.0, std::abs(a) + std::abs(d))) {
    v1 = b;
    v2 = l1 - a;
  } else if (a >= d) {
    v1 = 1;
    v2 = 0;
  } else {
    v1 = 0;
    v2 = 1;
  }
  const double n = norm2(v1, v2);
  v1 /= n;
  v2 /= n;
  out.eigenvectors = Mat2{v1, -std::conj(v2), v2, std::conj(v1)};
  return out;
}

HyperbolicPoint moebius_act(const Sl2Element& g, const HyperbolicPoint& p) {
  if (!(p.height > 0)) throw KmError(ErrorCode::PointOnBoundary, "point has non-positive height");
  const Mat2& m = g.matrix();
  const Complex cz_d = m.c * p.z + m.d;
  const double h2 = p.height * p.height;
  const double denom = std::norm(cz_d) + std::norm(m.c) * h2;
  const Complex num = (m.a * p.z + m.b) * std::conj(cz_d) + m.a * std::conj(m.c) * h2;
  return {num / denom, p.height / denom};
}

BoundaryPoint moebius_act(const Sl2Element& g, const BoundaryPoint& e) {
  const Mat2& m = g.matrix();
  if (e.infinite) return m.c == Complex(0) ? BoundaryPoint::infinity() : BoundaryPoint::at(m.a / m.c);
  const Complex den = m.c * e.value + m.d;
  if (den == Complex(0)) return BoundaryPoint::infinity();
  return BoundaryPoint::at((m.a * e.value + m.b) / den);
}

double chordal_distance(const BoundaryPoint& x, const BoundaryPoint& y) {
  if (x.infinite && y.infinite) return 0;
  if (x.infinite) return 2 / std::sqrt(1 + std::norm(y.value));
  if (y.infinite) return 2 / std::sqrt(1 + std::norm(x.value));
  return 2 * std::abs(x.value - y.value) / std::sqrt((1 + std::norm(x.value)) * (1 + std::norm(y.value)));
}

HyperbolicRay HyperbolicRay::from_direction(const HyperbolicPoint& start, Complex horizontal, double vertical) {
  if (!(start.height > 0)) throw KmError(ErrorCode::PointOnBoundary, "ray start has non-positive height");
  const double euclid = std::sqrt(std::norm(horizontal) + vertical * vertical);
  if (!(euclid > 0)) throw KmError(ErrorCode::ZeroVector, "ray direction is zero");
  const double scale = start.height / euclid;
  HyperbolicRay r{start, horizontal * scale, vertical * scale, {}};
  const double hz = std::abs(r.direction_horizontal);
  if (hz <= 1e-15 * start.height) {
    r.endpoint = r.direction_vertical > 0 ? BoundaryPoint::infinity() : BoundaryPoint::at(start.z);
    return r;
  }
  const Complex unit = r.direction_horizontal / hz;
  const double s_c = start.height * r.direction_vertical / hz;
  r.endpoint = BoundaryPoint::at(start.z + unit * forward_offset(s_c, start.height));
  return r;
}

HyperbolicRay HyperbolicRay::toward(const HyperbolicPoint& start, const BoundaryPoint& endpoint) {
  if (!(start.height > 0)) throw KmError(ErrorCode::PointOnBoundary, "ray start has non-positive height");
  const double h = start.height;
  if (endpoint.infinite) return {start, 0, h, endpoint};
  const Complex offset = endpoint.value - start.z;
  const double s_e = std::abs(offset);
  if (s_e <= 1e-15 * h) return {start, 0, -h, endpoint};
  const double s_c = (s_e * s_e - h * h) / (2 * s_e);
  const double scale = h / std::hypot(h, s_c);
  return {start, offset / s_e * h * scale, s_c * scale, endpoint};
}

HyperbolicRay moebius_act(const Sl2Element& g, const HyperbolicRay& r) {
  return HyperbolicRay::toward(moebius_act(g, r.start), moebius_act(g, r.endpoint));
}

bool are_asymptotic(const HyperbolicRay& r1, const HyperbolicRay& r2, double tol) {
  return chordal_distance(r1.endpoint, r2.endpoint) < tol;
}

Mat2 random_sl2c(SeededRng& rng) {
  while (true) {
    Mat2 m{Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
           Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), Complex(rng.uniform(-1, 1), rng.uniform(-1, 1))};
    const Complex det = m.det();
    if (std::abs(det) < 0.1) continue;
    return m * (Complex(1) / std::sqrt(det));
  }
}

Mat2 random_su2(SeededRng& rng) {
  Complex alpha(rng.uniform(-1, 1), rng.uniform(-1, 1));
  Complex beta(rng.uniform(-1, 1), rng.uniform(-1, 1));
  const double n = norm2(alpha, beta);
  alpha /= n;
  beta /= n;
  return {alpha, -std::conj(beta), beta, std::conj(alpha)};
}

}  // namespace kmflat
