#pragma once

// Rank-one laboratory: SL(2, R) and SL(2, C) with the Chevalley involution,
// twist map, Iwasawa decompositions, symmetric elements and the hyperbolic
// spaces H^2 and H^3.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "kmflat/mat2.hpp"
#include "kmflat/random.hpp"

namespace kmflat {

enum class FieldMode { Real, Complex };

class Sl2Element {
 public:
  static constexpr double kDetTolerance = 1e-10;

  /// Throws NotUnimodular when |det - 1| >= 1e-10, FieldMismatch when a real
  /// element has imaginary entries.
  Sl2Element(const Mat2& m, FieldMode mode);
  static Sl2Element real(double a, double b, double c, double d) { return {Mat2{a, b, c, d}, FieldMode::Real}; }
  static Sl2Element identity(FieldMode mode = FieldMode::Real) { return {Mat2::identity(), mode}; }

  const Mat2& matrix() const noexcept { return m_; }
  FieldMode mode() const noexcept { return mode_; }

  Sl2Element operator*(const Sl2Element& o) const;
  Sl2Element inverse() const;

 private:
  struct Unchecked {};
  Sl2Element(const Mat2& m, FieldMode mode, Unchecked) : m_(m), mode_(mode) {}

  Mat2 m_;
  FieldMode mode_;
};

/// conj(g)^{-T}
Sl2Element chevalley_theta(const Sl2Element& g);
/// g conj(g)^T = g Theta(g^{-1})
Sl2Element twist_sl2(const Sl2Element& g);
bool in_compact_subgroup(const Sl2Element& g, double tol = 1e-10);

enum class IwasawaOrder { UAK, KAU };
std::string_view to_string(IwasawaOrder order);

struct IwasawaTriple {
  IwasawaOrder order = IwasawaOrder::UAK;
  Mat2 u;  // upper unitriangular
  Mat2 a;  // positive diagonal, det 1
  Mat2 k;  // unitary, det 1

  /// u a k or k a u depending on order
  Mat2 compose() const;
};

/// 2-norm condition number of g.
double condition_number(const Mat2& g);

/// Throws NumericallySingular when the condition number exceeds 1e12.
IwasawaTriple iwasawa_decompose(const Sl2Element& g, IwasawaOrder order);

struct SymmetricElementResult {
  bool symmetric = false;
  std::array<double, 2> spectrum{};  // descending
  Mat2 eigenvectors;                 // unitary, g = V diag(spectrum) V^*
};

SymmetricElementResult is_symmetric_element(const Sl2Element& g, double tol = 1e-10);

/// Point of H^2 (height measured by Im z) or of H^3 (z + h j); H^2 points
/// are H^3 points with real z.
struct HyperbolicPoint {
  Complex z;
  double height = 1;

  static HyperbolicPoint upper_half_plane(Complex w) { return {Complex(w.real(), 0), w.imag()}; }
  Complex as_complex() const { return {z.real(), height}; }
};

/// Point of the boundary: R u {inf} or C u {inf}.
struct BoundaryPoint {
  bool infinite = false;
  Complex value;

  static BoundaryPoint infinity() { return {true, {}}; }
  static BoundaryPoint at(Complex w) { return {false, w}; }
};

/// Fractional-linear action on H^3 (quaternionic form); on H^2 for real g.
/// Throws PointOnBoundary when height <= 0.
HyperbolicPoint moebius_act(const Sl2Element& g, const HyperbolicPoint& p);
BoundaryPoint moebius_act(const Sl2Element& g, const BoundaryPoint& e);

/// Chordal distance on the Riemann sphere.
double chordal_distance(const BoundaryPoint& x, const BoundaryPoint& y);

/// Geodesic ray with unit tangent. Tangent components: horizontal (complex)
/// and vertical (real), hyperbolic norm sqrt(|dz|^2 + dh^2) / h = 1.
struct HyperbolicRay {
  HyperbolicPoint start;
  Complex direction_horizontal;
  double direction_vertical = 0;
  BoundaryPoint endpoint;

  static HyperbolicRay from_direction(const HyperbolicPoint& start, Complex horizontal, double vertical);
  static HyperbolicRay toward(const HyperbolicPoint& start, const BoundaryPoint& endpoint);
};

HyperbolicRay moebius_act(const Sl2Element& g, const HyperbolicRay& r);

/// Endpoints equal within 1e-9 in the chordal metric.
bool are_asymptotic(const HyperbolicRay& r1, const HyperbolicRay& r2, double tol = 1e-9);

/// SL(2, C) matrix from entries in the unit box, rescaled by sqrt(det);
/// draws with |det| < 0.1 are rejected.
Mat2 random_sl2c(SeededRng& rng);
/// Random element of SU(2).
Mat2 random_su2(SeededRng& rng);

}  // namespace kmflat
