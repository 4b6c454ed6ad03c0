#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace kmflat {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
  Complex a{1}, b{0}, c{0}, d{1};

  static constexpr Mat2 identity() { return {}; }
  static Mat2 diag(Complex x, Complex y) { return {x, 0, 0, y}; }
  static Mat2 rotation(double angle) {
    return {std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle)};
  }

  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 conj() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }
  Mat2 adjoint() const { return conj().transpose(); }
  Mat2 inverse() const {
    const Complex k = det();
    return {d / k, -b / k, -c / k, a / k};
  }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator*(Complex s) const { return {a * s, b * s, c * s, d * s}; }
};

inline double frobenius(const Mat2& m) {
  return std::sqrt(std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d));
}

inline double distance(const Mat2& x, const Mat2& y) { return frobenius(x - y); }

inline bool is_hermitian(const Mat2& m, double tol) { return distance(m, m.adjoint()) <= tol; }

/// Hermitian with both eigenvalues positive (trace and determinant test).
inline bool is_positive_definite(const Mat2& m, double tol) {
  return is_hermitian(m, tol) && m.a.real() > 0 && m.det().real() > 0;
}

inline bool is_real(const Mat2& m, double tol) {
  return std::abs(m.a.imag()) <= tol && std::abs(m.b.imag()) <= tol && std::abs(m.c.imag()) <= tol &&
         std::abs(m.d.imag()) <= tol;
}

}  // namespace kmflat
