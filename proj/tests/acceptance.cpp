// One pass/fail line per acceptance criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "helpers.hpp"
#include "kmflat/cone.hpp"
#include "kmflat/flat.hpp"
#include "kmflat/horizon.hpp"
#include "kmflat/local_action.hpp"
#include "kmflat/sl2.hpp"

using namespace kmflat;
using testing::gcm;

namespace {

using Rows = std::vector<std::vector<long>>;

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

WeylGroup group_of(const Rows& rows) { return WeylGroup(build_realization(gcm(rows))); }

Verdict gcm_trichotomy() {
  Verdict v;
  std::size_t valid = 0, total = 0;
  for (long x = 0; x <= 8; ++x) {
    for (long y = 0; y <= 8; ++y) {
      ++total;
      if ((x == 0) != (y == 0)) continue;  // zero pattern violated, rejected by validation
      ++valid;
      const Rows rows{{2, -x}, {-y, 2}};
      const auto m = gcm(rows);
      const auto c = classify(m);
      const std::string expected = oracle::rank2_kind(-x, -y);
      const std::string label = "(" + std::to_string(-x) + "," + std::to_string(-y) + ")";
      if (expected == "Decomposable") {
        v.require(c.components.size() == 2 && c.all_finite(), "decomposable " + label);
        continue;
      }
      v.require(c.indecomposable() && std::string(to_string(c.components[0].kind)) == expected, "kind " + label);
      if (c.components[0].kind == GcmKind::Affine) {
        const auto& u = c.components[0].witness;
        bool positive = true;
        for (const auto& q : u) positive = positive && sgn(q) > 0;
        v.require(positive && is_zero(m.to_rational() * u), "affine certificate " + label);
        v.require(c.rank == 1, "affine rank " + label);
      }
    }
  }
  v.require(total == 81, "pair count");
  if (v.pass) v.detail = std::to_string(total) + " matrices, " + std::to_string(valid) + " valid, all agree";
  return v;
}

Verdict realization_dimension() {
  Verdict v;
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    const auto rows = testing::random_symmetrizable_gcm(rng, 1 + k % 5);
    const auto m = gcm(rows);
    const auto rd = build_realization(m);
    const std::size_t n = rows.size(), l = oracle::rank(oracle::to_q(rows));
    v.require(rd.dim == 2 * n - l, "dimension");
    oracle::QMatrix roots, coroots;
    for (std::size_t i = 0; i < n; ++i) {
      roots.emplace_back(rd.roots[i].begin(), rd.roots[i].end());
      coroots.emplace_back(rd.coroots[i].begin(), rd.coroots[i].end());
    }
    v.require(oracle::rank(roots) == n && oracle::rank(coroots) == n, "independence");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.require(dot(rd.roots[j], rd.coroots[i]) == Rational(rows[i][j]), "pairing");
  }
  if (v.pass) v.detail = "20 seeded matrices, n <= 5";
  return v;
}

Verdict bilinear_form() {
  Verdict v;
  std::size_t checked = 0;
  for (const Rows& rows : {Rows{{2, -1}, {-1, 2}}, Rows{{2, -1}, {-2, 2}}, Rows{{2, -2}, {-2, 2}}}) {
    const auto m = gcm(rows);
    const auto group = group_of(rows);
    const auto form = build_bilinear_form(group.datum(), symmetrize(m));
    v.require(form.gram.is_symmetric(), "symmetry");
    oracle::QMatrix q(group.dim(), std::vector<oracle::Q>(group.dim()));
    for (std::size_t i = 0; i < group.dim(); ++i)
      for (std::size_t j = 0; j < group.dim(); ++j) q[i][j] = form.gram(i, j);
    v.require(oracle::cofactor_det(q) != 0, "non-degenerate");
    for (const auto& w : group.ball(6)) {
      v.require(w.matrix.transpose() * form.gram * w.matrix == form.gram, "invariance");
      ++checked;
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " elements on A2, B2, affine A1";
  return v;
}

Verdict faithfulness() {
  Verdict v;
  const auto group = group_of({{2, -2}, {-2, 2}});
  const auto ball = group.ball(8);
  v.require(ball.size() == 17, "ball size");
  std::set<std::vector<std::string>> distinct;
  for (const auto& w : ball) {
    std::vector<std::string> key;
    for (std::size_t i = 0; i < w.matrix.rows(); ++i)
      for (std::size_t j = 0; j < w.matrix.cols(); ++j) key.push_back(to_string(w.matrix(i, j)));
    distinct.insert(key);
  }
  v.require(distinct.size() == 17, "distinct matrices");
  if (v.pass) v.detail = "17 distinct matrices";
  return v;
}

Verdict root_hyperplanes() {
  Verdict v;
  std::size_t roots = 0;
  for (const Rows& rows : {Rows{{2, -1}, {-1, 2}}, Rows{{2, -1}, {-2, 2}}, Rows{{2, -1}, {-3, 2}},
                           Rows{{2, -2}, {-2, 2}}, Rows{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}},
                           Rows{{2, -3}, {-3, 2}}}) {
    const auto group = group_of(rows);
    for (const auto& root : group.positive_real_roots(6)) {
      const auto r = root_reflection_matrix(group, root);
      const auto fixed = kernel_basis(r - RationalMatrix::identity(group.dim()));
      const auto ker = kernel_basis(RationalMatrix::from_rows({root.covector}));
      v.require(same_span(fixed, ker, group.dim()), "Fix != ker");
      ++roots;
    }
  }
  if (v.pass) v.detail = std::to_string(roots) + " positive roots of height <= 6 on 6 matrices";
  return v;
}

Verdict affine_tits_cone() {
  Verdict v;
  const TitsCone cone(group_of({{2, -2}, {-2, 2}}));
  SeededRng rng(6);
  std::size_t inside = 0;
  for (int k = 0; k < 1000; ++k) {
    RationalVector p;
    for (int i = 0; i < 3; ++i) p.emplace_back(Rational(rng.integer(-12, 12), rng.integer(1, 4)));
    for (auto& x : p) x.canonicalize();
    const bool closed = sgn(dot(*cone.null_root(), p)) > 0 || is_zero(cone.group().datum().pairings(p));
    const auto q = cone.membership(p, 5000, MembershipMethod::DescentOnly);
    const bool member = q.status == ConeStatus::InteriorC0 || q.status == ConeStatus::BoundaryC0 ||
                        q.status == ConeStatus::InTitsCone;
    v.require(member == closed, "descent disagrees with closed form");
    v.require(member || q.status == ConeStatus::Undetermined, "descent claimed non-membership");
    inside += member;
  }
  for (const Rows& rows : {Rows{{2}}, Rows{{2, -1}, {-1, 2}}, Rows{{2, -1}, {-2, 2}}}) {
    const TitsCone finite(group_of(rows));
    for (int k = 0; k < 200; ++k) {
      RationalVector p;
      for (std::size_t i = 0; i < finite.group().dim(); ++i) p.emplace_back(rng.integer(-20, 20));
      const auto q = finite.membership(p, 1000);
      v.require(q.status != ConeStatus::NotInTitsCone && q.status != ConeStatus::Undetermined, "finite member");
    }
  }
  if (v.pass) v.detail = "1000 points (" + std::to_string(inside) + " inside), finite types all members";
  return v;
}

Verdict loos_axioms() {
  Verdict v;
  double worst = 0;
  for (std::size_t dim : {1, 2, 3}) {
    const auto pts = sample_flat_points(dim, 50, 7 + dim);
    const auto r = check_loos_axioms(std::span<const FlatSpacePoint>(pts), 1e-10);
    v.require(r.passed, "flat dim " + std::to_string(dim));
    worst = std::max(worst, r.max_residual);
  }
  const auto group = sample_group_model_points(10, 7);
  const auto r = check_loos_axioms(std::span<const Mat2>(group), 1e-10);
  v.require(r.passed, "group model");
  worst = std::max(worst, r.max_residual);
  if (v.pass) {
    std::ostringstream os;
    os << "max residual " << worst;
    v.detail = os.str();
  }
  return v;
}

Verdict iwasawa_round_trip() {
  Verdict v;
  SeededRng rng(8);
  double worst_round = 0, worst_repeat = 0;
  for (auto order : {IwasawaOrder::UAK, IwasawaOrder::KAU}) {
    for (int k = 0; k < 1000; ++k) {
      const Sl2Element g(random_sl2c(rng), FieldMode::Complex);
      const auto t = iwasawa_decompose(g, order);
      const double round = distance(t.compose(), g.matrix());
      const auto again = iwasawa_decompose(Sl2Element(t.compose(), FieldMode::Complex), order);
      const double repeat = std::max({distance(again.u, t.u), distance(again.a, t.a), distance(again.k, t.k)});
      worst_round = std::max(worst_round, round);
      worst_repeat = std::max(worst_repeat, repeat);
    }
  }
  v.require(worst_round < 1e-10, "round trip");
  v.require(worst_repeat < 1e-9, "triple reproduction");
  std::ostringstream os;
  os << "2x1000 samples, round trip " << worst_round << ", triple " << worst_repeat;
  v.detail = v.pass ? os.str() : v.detail + "; " + os.str();
  return v;
}

Verdict symmetric_elements() {
  Verdict v;
  SeededRng rng(9);
  for (int k = 0; k < 200; ++k) {
    const Sl2Element h(random_sl2c(rng), FieldMode::Complex);
    const double t = rng.uniform(-1.5, 1.5);
    const Sl2Element d(Mat2::diag(std::exp(t), std::exp(-t)), FieldMode::Complex);
    const Sl2Element g = h * d * chevalley_theta(h).inverse();
    const auto r = is_symmetric_element(g);
    v.require(r.symmetric, "symmetric element missed");
    v.require(std::abs(r.spectrum[0] * r.spectrum[1] - 1) < 1e-9 && r.spectrum[1] > 0, "spectrum");
  }
  for (int k = 0; k < 200; ++k) {
    const Sl2Element g(random_sl2c(rng), FieldMode::Complex);
    v.require(!is_symmetric_element(g).symmetric, "non-symmetric element accepted");
  }
  if (v.pass) v.detail = "200 symmetric detected, 200 random rejected";
  return v;
}

// Unitary polar factor by the Newton iteration U <- (U + U^{-*}) / 2.
Mat2 unitary_factor(Mat2 m) {
  for (int k = 0; k < 60; ++k) m = (m + m.inverse().adjoint()) * Complex(0.5);
  return m;
}

Verdict compact_meets_twist() {
  Verdict v;
  SeededRng rng(10);
  std::size_t near_k = 0;
  for (int k = 0; k < 10000; ++k) {
    Mat2 g;
    switch (k % 3) {
      case 0: g = random_sl2c(rng); break;
      case 1: g = random_su2(rng); break;
      default: {
        const double s = rng.uniform(-1e-9, 1e-9);
        g = random_su2(rng) * Mat2::diag(std::exp(s), std::exp(-s));
      }
    }
    const Mat2 p = twist_sl2(Sl2Element(g, FieldMode::Complex)).matrix();
    const Mat2 u = unitary_factor(p);
    // the closest unitary matrix to p is its polar factor
    if (distance(p, u) < 1e-8) {
      ++near_k;
      v.require(distance(u, Mat2::identity()) < 1e-8, "twist near a non-identity unitary");
    }
    v.require(distance(u, Mat2::identity()) < 1e-8, "polar factor of a twist is not the identity");
  }
  if (v.pass) v.detail = "10000 samples, " + std::to_string(near_k) + " near K, all at the identity";
  return v;
}

Verdict horizon_complex() {
  Verdict v;
  std::size_t cells_total = 0;
  for (const auto& [rows, radius] : std::vector<std::pair<Rows, std::size_t>>{{{{2, -2}, {-2, 2}}, 6},
                                                                              {{{2, -1}, {-1, 2}}, 3}}) {
    const auto m = gcm(rows);
    const WeylGroup group = group_of(rows);
    const std::size_t n = rows.size();
    const auto complex = build_horizon_complex(group, radius, true);
    const auto& cells = complex.cells;
    cells_total += cells.size();

    for (const auto& c : cells) {
      if (!c.color.empty()) continue;
      std::vector<IndexSet> colors;
      for (const auto& f : cells)
        if (f.dimension() + 1 == c.dimension() && closure_contains(c, f)) colors.push_back(f.color);
      std::sort(colors.begin(), colors.end());
      std::vector<IndexSet> expected;
      // a chamber that is a single ray has only the excluded apex as facet
      if (c.dimension() > 1)
        for (std::size_t s = 0; s < n; ++s) expected.push_back({s});
      v.require(colors == expected, "S-coloring");
    }

    for (const auto& a : cells)
      for (const auto& b : cells)
        if (a.half == b.half)
          v.require(closure_contains(a, b) == coset_contained(group, a.residue, b.residue), "poset anti-isomorphism");

    for (const auto& u : group.ball(radius)) {
      for (const auto& c : cells) {
        const auto image = act(group, u, c.residue);
        if (image.rep.length() > radius) continue;
        const auto moved = realize_cell(group, image, c.half);
        std::vector<IntegerVector> expected;
        for (const auto& ray : c.rays) expected.push_back(canonical_ray(group.datum(), u.matrix * to_rational(ray)));
        std::sort(expected.begin(), expected.end());
        v.require(moved.rays == expected, "W-equivariance");
      }
    }

    const auto spherical = spherical_subsets(m);
    for (const auto& c : cells) {
      for (const auto& s : spherical) {
        if (s.J.size() != c.color.size() + 1 ||
            !std::includes(s.J.begin(), s.J.end(), c.color.begin(), c.color.end()))
          continue;
        const Residue face{minimal_representative(group, c.residue.rep, s.J), s};
        try {
          const auto fc = realize_cell(group, face, c.half);
          v.require(complex.find({c.half, fc.rays}).has_value(), "codimension-1 face missing");
        } catch (const KmError& e) {
          v.require(e.code() == ErrorCode::EmptyFace, "unexpected error");
        }
      }
    }

    std::vector<BoundaryMap> maps;
    for (std::size_t i = 0; i < n; ++i) maps.push_back(BoundaryMap::weyl(group, group.simple_reflection(i)));
    maps.push_back(BoundaryMap::minus_identity(group));
    for (const auto& sigma : diagram_automorphisms(m).aut_gamma)
      maps.push_back(BoundaryMap::diagram(group, sigma, symmetrize(m)));
    for (const auto& map : maps) {
      const auto perm = boundary_automorphism_action(group, complex, map);
      v.require(perm.injective && perm.color_compatible, "boundary action");
      for (std::size_t k = 0; k < cells.size(); ++k) {
        // cells away from the ball's edge have images inside the ball
        if (cells[k].residue.rep.length() + 1 <= radius || n == 2 && radius == 3)
          v.require(perm.image[k].has_value(), "image missing");
        if (perm.image[k])
          v.require((cells[*perm.image[k]].half != cells[k].half) == map.swaps_halves, "half swap");
      }
    }
  }
  if (v.pass) v.detail = std::to_string(cells_total) + " cells on affine A1 (radius 6) and A2 (full group)";
  return v;
}

Verdict local_action() {
  Verdict v;
  const std::vector<std::pair<std::string, Rows>> corpus = {
      {"A1", {{2}}},
      {"A2", {{2, -1}, {-1, 2}}},
      {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
      {"B2", {{2, -1}, {-2, 2}}},
      {"G2", {{2, -1}, {-3, 2}}},
      {"B3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}},
      {"C3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}},
      {"D4", {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}},
      {"F4", {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}},
      {"A1xA1", {{2, 0}, {0, 2}}},
      {"affine A1", {{2, -2}, {-2, 2}}},
      {"affine A2", {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}},
      {"affine C2", {{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}}},
      {"twisted affine A2", {{2, -4}, {-1, 2}}},
      {"hyperbolic (3,3)", {{2, -3}, {-3, 2}}},
  };
  std::size_t homotheties = 0;
  for (const auto& [name, rows] : corpus) {
    const auto m = gcm(rows);
    const auto auts = diagram_automorphisms(m);
    for (const auto& p : auts.aut_gamma)
      v.require(std::find(auts.aut_ws.begin(), auts.aut_ws.end(), p) != auts.aut_ws.end(), name + ": inclusion");
    if (name == "B2") v.require(auts.aut_gamma.size() < auts.aut_ws.size(), "B2 strict");
    if (name == "affine A1" || name == "affine A2") v.require(auts.equal(), name + " equality");

    const auto group = group_of(rows);
    const auto form = build_bilinear_form(group.datum(), symmetrize(m));
    auto unit_scale = [&](const RationalMatrix& f) {
      const auto h = factor_homothety({f, 0}, form);
      ++homotheties;
      return h.exact_scale && *h.exact_scale == 1;
    };
    for (const auto& w : group.ball(3)) v.require(unit_scale(w.matrix), name + ": r != 1");
    v.require(unit_scale(RationalMatrix::identity(group.dim()) * Rational(-1)), name + ": -id");
  }
  if (v.pass) v.detail = "15 matrices, " + std::to_string(homotheties) + " exact unit homotheties";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"GCM trichotomy", gcm_trichotomy},
      {"Realization dimension law", realization_dimension},
      {"Bilinear form invariance", bilinear_form},
      {"Faithfulness on the affine A1 ball", faithfulness},
      {"Root/hyperplane correspondence", root_hyperplanes},
      {"Affine Tits cone", affine_tits_cone},
      {"Loos axioms", loos_axioms},
      {"Iwasawa round trip", iwasawa_round_trip},
      {"Symmetric-element criterion", symmetric_elements},
      {"K meets twist image only at e", compact_meets_twist},
      {"Horizon complex", horizon_complex},
      {"Local action", local_action},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " -- " << v.detail
              << " (" << time.str() << " s)" << std::endl;
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}
