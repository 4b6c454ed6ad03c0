#include <doctest.h>

#include <cmath>

#include "kmflat/error.hpp"
#include "kmflat/sl2.hpp"

using namespace kmflat;

namespace {

constexpr double kPi = 3.14159265358979323846;

Sl2Element complex_element(const Mat2& m) { return Sl2Element(m, FieldMode::Complex); }

double point_distance(const HyperbolicPoint& p, const HyperbolicPoint& q) {
  return std::abs(p.z - q.z) + std::abs(p.height - q.height);
}

}  // namespace

TEST_CASE("element invariants") {
  CHECK_THROWS_AS(Sl2Element::real(2, 0, 0, 1), KmError);
  CHECK_THROWS_AS(Sl2Element(Mat2{Complex(0, 1), 0, 0, Complex(0, -1)}, FieldMode::Real), KmError);
  CHECK_NOTHROW(Sl2Element(Mat2{Complex(0, 1), 0, 0, Complex(0, -1)}, FieldMode::Complex));
}

TEST_CASE("chevalley involution and twist") {
  CHECK(distance(chevalley_theta(Sl2Element::identity()).matrix(), Mat2::identity()) < 1e-15);
  CHECK(distance(chevalley_theta(Sl2Element::real(2, 0, 0, 0.5)).matrix(), Mat2::diag(0.5, 2)) < 1e-15);
  const Mat2 r = Mat2::rotation(0.7);
  const Sl2Element rot(r, FieldMode::Real);
  CHECK(distance(chevalley_theta(rot).matrix(), r) < 1e-15);
  CHECK(distance(twist_sl2(rot).matrix(), Mat2::identity()) < 1e-15);
  CHECK(in_compact_subgroup(rot));
  CHECK(distance(twist_sl2(Sl2Element::real(2, 0, 0, 0.5)).matrix(), Mat2::diag(4, 0.25)) < 1e-15);

  SeededRng rng(17);
  for (int k = 0; k < 100; ++k) {
    const auto g = complex_element(random_sl2c(rng));
    const auto t = twist_sl2(g);
    CHECK(distance(chevalley_theta(t).matrix(), t.inverse().matrix()) < 1e-10);
    CHECK(distance(chevalley_theta(chevalley_theta(g)).matrix(), g.matrix()) < 1e-12);
    CHECK(is_positive_definite(t.matrix(), 1e-10));
    // Theta is an automorphism
    const auto h = complex_element(random_sl2c(rng));
    CHECK(distance(chevalley_theta(g * h).matrix(), (chevalley_theta(g) * chevalley_theta(h)).matrix()) < 1e-10);
    const auto u = complex_element(random_su2(rng));
    CHECK(in_compact_subgroup(u));
    CHECK(distance(twist_sl2(u).matrix(), Mat2::identity()) < 1e-12);
  }
}

TEST_CASE("iwasawa examples") {
  for (auto order : {IwasawaOrder::UAK, IwasawaOrder::KAU}) {
    const auto t = iwasawa_decompose(Sl2Element::identity(), order);
    CHECK(distance(t.u, Mat2::identity()) < 1e-15);
    CHECK(distance(t.a, Mat2::identity()) < 1e-15);
    CHECK(distance(t.k, Mat2::identity()) < 1e-15);
  }
  const auto upper = iwasawa_decompose(Sl2Element::real(1, 3, 0, 1), IwasawaOrder::UAK);
  CHECK(distance(upper.u, Mat2{1, 3, 0, 1}) < 1e-14);
  CHECK(distance(upper.a, Mat2::identity()) < 1e-14);
  CHECK(distance(upper.k, Mat2::identity()) < 1e-14);
  const auto s = iwasawa_decompose(Sl2Element::real(0, 1, -1, 0), IwasawaOrder::UAK);
  CHECK(distance(s.u, Mat2::identity()) < 1e-15);
  CHECK(distance(s.a, Mat2::identity()) < 1e-15);
  CHECK(distance(s.k, Mat2{0, 1, -1, 0}) < 1e-15);
  CHECK_THROWS_AS(iwasawa_decompose(Sl2Element::real(1e7, 0, 0, 1e-7), IwasawaOrder::UAK), KmError);
}

TEST_CASE("iwasawa round trip and uniqueness") {
  SeededRng rng(99);
  for (int k = 0; k < 300; ++k) {
    const auto order = k % 2 ? IwasawaOrder::KAU : IwasawaOrder::UAK;
    const auto g = complex_element(random_sl2c(rng));
    const auto t = iwasawa_decompose(g, order);
    CHECK(distance(t.compose(), g.matrix()) < 1e-10);
    CHECK(t.u.a == Complex(1));
    CHECK(t.u.d == Complex(1));
    CHECK(t.u.c == Complex(0));
    CHECK(t.a.a.real() > 0);
    CHECK(t.a.b == Complex(0));
    CHECK(std::abs(t.a.a.imag()) == 0);
    CHECK(distance(t.k * t.k.adjoint(), Mat2::identity()) < 1e-12);
    CHECK(std::abs(t.k.det() - 1.0) < 1e-12);
    const auto again = iwasawa_decompose(complex_element(t.compose()), order);
    CHECK(distance(again.u, t.u) < 1e-9);
    CHECK(distance(again.a, t.a) < 1e-9);
    CHECK(distance(again.k, t.k) < 1e-9);
  }
}

TEST_CASE("symmetric elements") {
  const auto d = is_symmetric_element(Sl2Element::real(2, 0, 0, 0.5));
  CHECK(d.symmetric);
  CHECK(std::abs(d.spectrum[0] - 2) < 1e-12);
  CHECK(std::abs(d.spectrum[1] - 0.5) < 1e-12);
  const auto p = is_symmetric_element(Sl2Element::real(2, 1, 1, 1));
  CHECK(p.symmetric);
  // eigenvalue oracle: (3 +- sqrt 5) / 2
  CHECK(std::abs(p.spectrum[0] - (3 + std::sqrt(5.0)) / 2) < 1e-12);
  CHECK(std::abs(p.spectrum[0] * p.spectrum[1] - 1) < 1e-12);
  const Mat2 v = p.eigenvectors;
  CHECK(distance(v * Mat2::diag(p.spectrum[0], p.spectrum[1]) * v.adjoint(), Mat2{2, 1, 1, 1}) < 1e-12);
  CHECK_FALSE(is_symmetric_element(Sl2Element::real(1, 1, 0, 1)).symmetric);
}

TEST_CASE("moebius action on the upper half plane") {
  const auto i = HyperbolicPoint::upper_half_plane(Complex(0, 1));
  CHECK(point_distance(moebius_act(Sl2Element::real(1, 1, 0, 1), i), HyperbolicPoint::upper_half_plane({1, 1})) < 1e-15);
  CHECK(point_distance(moebius_act(Sl2Element::real(0, 1, -1, 0), i), i) < 1e-15);
  CHECK(point_distance(moebius_act(Sl2Element::real(2, 0, 0, 0.5), i), HyperbolicPoint::upper_half_plane({0, 4})) <
        1e-15);
  CHECK_THROWS_AS(moebius_act(Sl2Element::identity(), HyperbolicPoint{Complex(0), 0}), KmError);
  // upper half plane formula agrees with (az+b)/(cz+d)
  SeededRng rng(5);
  for (int k = 0; k < 50; ++k) {
    const double angle = rng.uniform(0, 2 * kPi), t = rng.uniform(-1, 1), x = rng.uniform(-2, 2);
    const Mat2 m = Mat2::rotation(angle) * Mat2::diag(std::exp(t), std::exp(-t)) * Mat2{1, x, 0, 1};
    const Complex z(rng.uniform(-2, 2), rng.uniform(0.1, 2));
    const Complex expected = (m.a * z + m.b) / (m.c * z + m.d);
    const auto got = moebius_act(Sl2Element(m, FieldMode::Real), HyperbolicPoint::upper_half_plane(z));
    CHECK(std::abs(got.as_complex() - expected) < 1e-12);
  }
}

TEST_CASE("H3 action is a group action") {
  SeededRng rng(6);
  for (int k = 0; k < 50; ++k) {
    const auto g = complex_element(random_sl2c(rng));
    const auto h = complex_element(random_sl2c(rng));
    const HyperbolicPoint p{Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), rng.uniform(0.2, 2)};
    const auto a = moebius_act(g, moebius_act(h, p));
    const auto b = moebius_act(g * h, p);
    CHECK(point_distance(a, b) < 1e-9);
    CHECK(a.height > 0);
    // SU(2) fixes j
    const auto u = complex_element(random_su2(rng));
    CHECK(point_distance(moebius_act(u, HyperbolicPoint{Complex(0), 1}), HyperbolicPoint{Complex(0), 1}) < 1e-12);
  }
}

TEST_CASE("asymptotic rays") {
  const auto i = HyperbolicPoint::upper_half_plane({0, 1});
  const auto two_i = HyperbolicPoint::upper_half_plane({0, 2});
  const auto up1 = HyperbolicRay::from_direction(i, 0, 1);
  const auto up2 = HyperbolicRay::from_direction(two_i, 0, 1);
  CHECK(up1.endpoint.infinite);
  CHECK(are_asymptotic(up1, up2));
  const auto to0 = HyperbolicRay::toward(i, BoundaryPoint::at(0));
  const auto to1 = HyperbolicRay::toward(i, BoundaryPoint::at(1));
  CHECK_FALSE(are_asymptotic(to0, to1));
  const auto parabolic = Sl2Element::real(1, 1, 0, 1);
  CHECK(are_asymptotic(up1, moebius_act(parabolic, up1)));
  // a ray aimed at x has endpoint x; moving it by g moves the endpoint by g
  SeededRng rng(7);
  for (int k = 0; k < 30; ++k) {
    const BoundaryPoint target = BoundaryPoint::at(Complex(rng.uniform(-3, 3), rng.uniform(-3, 3)));
    const HyperbolicPoint start{Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), rng.uniform(0.3, 3)};
    const auto ray = HyperbolicRay::toward(start, target);
    const auto again = HyperbolicRay::from_direction(start, ray.direction_horizontal, ray.direction_vertical);
    CHECK(chordal_distance(again.endpoint, target) < 1e-9);
    const auto g = complex_element(random_sl2c(rng));
    CHECK(chordal_distance(moebius_act(g, ray).endpoint, moebius_act(g, target)) < 1e-9);
  }
}
