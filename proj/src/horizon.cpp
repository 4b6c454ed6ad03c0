#include "kmflat/horizon.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "kmflat/error.hpp"

namespace kmflat {
namespace {

std::vector<IndexSet> all_subsets(std::size_t n) {
  std::vector<IndexSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool contains(const IndexSet& s, std::size_t i) { return std::binary_search(s.begin(), s.end(), i); }

// Echelon basis of the common kernel of the roots, with pivot columns.
RowEchelon lineality_echelon(const RootDatum& rd) {
  const auto basis = kernel_basis(rd.root_matrix());
  if (basis.empty()) return {RationalMatrix(0, rd.dim), {}};
  return row_reduce(RationalMatrix::from_rows(basis));
}

RationalVector reduce_mod_lineality(const RowEchelon& k, RationalVector v) {
  for (std::size_t r = 0; r < k.pivots.size(); ++r) {
    const Rational coeff = v[k.pivots[r]];
    if (sgn(coeff) == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= coeff * k.reduced(r, j);
  }
  return v;
}

std::string word_label(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i : w) s += "s" + std::to_string(i + 1);
  return s;
}

std::string set_label(const IndexSet& J) {
  std::string s = "{";
  for (std::size_t k = 0; k < J.size(); ++k) s += (k ? "," : "") + std::to_string(J[k] + 1);
  return s + "}";
}

}  // namespace

std::optional<std::size_t> parabolic_order(const GcmMatrix& m, const IndexSet& J, std::size_t guard) {
  // W_J acts faithfully on the root lattice; an element is recorded by the
  // images of the simple roots, flattened.
  const std::size_t n = m.size();
  using Image = std::vector<long long>;
  Image start(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) start[i * n + i] = 1;
  std::set<Image> seen{start};
  std::deque<Image> queue{start};
  while (!queue.empty()) {
    const Image cur = queue.front();
    queue.pop_front();
    for (std::size_t s : J) {
      Image next = cur;
      for (std::size_t col = 0; col < n; ++col) {
        long long pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += m(s, j).get_si() * cur[j * n + col];
        next[s * n + col] -= pairing;
      }
      if (seen.insert(next).second) {
        if (seen.size() > guard) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::vector<SphericalSubset> spherical_subsets(const GcmMatrix& m) {
  if (m.size() > 10) throw KmError(ErrorCode::RankTooLarge, "spherical subsets are enumerated only for n <= 10");
  std::vector<SphericalSubset> out;
  for (auto& J : all_subsets(m.size())) {
    if (J.empty()) {
      out.push_back({J, 1});
      continue;
    }
    const GcmMatrix sub = m.principal_submatrix(J);
    if (!classify(sub).all_finite()) continue;
    std::size_t order = 1;
    for (const auto& comp : sub.components()) {
      IndexSet global;
      for (std::size_t k : comp) global.push_back(J[k]);
      const auto o = parabolic_order(m, global, kParabolicOrderGuard);
      if (!o) throw KmError(ErrorCode::OrderOverflow, "parabolic subgroup exceeds the enumeration guard",
                            [&] { std::vector<std::size_t> ix; for (auto g : global) ix.push_back(g + 1); return ix; }());
      order *= *o;
    }
    out.push_back({J, order});
  }
  return out;
}

WeylElement minimal_representative(const WeylGroup& group, const WeylElement& w, const IndexSet& J) {
  WeylElement cur = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s : J) {
      if (group.has_right_descent(cur, s)) {
        cur = group.multiply(cur, group.simple_reflection(s));
        changed = true;
        break;
      }
    }
  }
  return cur;
}

bool coset_contained(const WeylGroup& group, const Residue& r1, const Residue& r2) {
  if (!std::includes(r2.J.J.begin(), r2.J.J.end(), r1.J.J.begin(), r1.J.J.end())) return false;
  const WeylElement u = group.multiply(group.inverse(r2.rep), r1.rep);
  return std::all_of(u.word.begin(), u.word.end(), [&](std::size_t s) { return contains(r2.J.J, s); });
}

Residue act(const WeylGroup& group, const WeylElement& u, const Residue& r) {
  return {minimal_representative(group, group.multiply(u, r.rep), r.J.J), r.J};
}

std::vector<Residue> residues_in_ball(const WeylGroup& group, std::size_t radius) {
  if (radius > 12) throw KmError(ErrorCode::InvalidArgument, "radius must be at most 12");
  const auto ball = group.ball(radius);
  std::vector<Residue> out;
  for (const auto& J : spherical_subsets(group.datum().gcm)) {
    for (const auto& w : ball) {
      const bool minimal =
          std::none_of(J.J.begin(), J.J.end(), [&](std::size_t s) { return group.has_right_descent(w, s); });
      if (minimal) out.push_back({w, J});
    }
  }
  return out;
}

std::string to_string(Half h) { return h == Half::Positive ? "+" : "-"; }

std::vector<RationalVector> fundamental_coweights(const RootDatum& rd) {
  const RationalMatrix c = rd.root_matrix();
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < rd.n(); ++i) {
    auto x = solve(c, unit_vector(rd.n(), i));
    if (!x) throw KmError(ErrorCode::Internal, "roots are not linearly independent");
    out.push_back(std::move(*x));
  }
  return out;
}

IntegerVector canonical_ray(const RootDatum& rd, const RationalVector& v) {
  const RationalVector r = reduce_mod_lineality(lineality_echelon(rd), v);
  if (is_zero(r)) throw KmError(ErrorCode::ZeroVector, "ray lies in the lineality space");
  return primitive_integer_direction(r);
}

IdealCell realize_cell(const WeylGroup& group, const Residue& r, Half half) {
  const RootDatum& rd = group.datum();
  const RowEchelon k = lineality_echelon(rd);
  const auto omega = fundamental_coweights(rd);
  IdealCell cell{r, half, {}, {}, r.J.J};
  for (std::size_t i = 0; i < rd.n(); ++i) {
    if (contains(r.J.J, i)) continue;
    RationalVector v = reduce_mod_lineality(k, r.rep.matrix * omega[i]);
    if (half == Half::Negative) v = -v;
    cell.rays.push_back(primitive_integer_direction(v));
  }
  std::sort(cell.rays.begin(), cell.rays.end());
  for (std::size_t row = 0; row < k.pivots.size(); ++row) cell.lineality.push_back(k.reduced.row(row));
  if (cell.dimension() == 0) throw KmError(ErrorCode::EmptyFace, "face " + set_label(r.J.J) + " is {0}");
  return cell;
}

std::optional<std::size_t> HorizonComplex::find(const CellKey& key) const {
  const auto it = index.find(key);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t max_cells_from_env() {
  if (const char* env = std::getenv("KMFLAT_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxCells;
}

HorizonComplex build_horizon_complex(const WeylGroup& group, std::size_t radius, bool twin, std::size_t max_cells) {
  HorizonComplex out;
  out.radius = radius;
  out.twin = twin;
  const auto residues = residues_in_ball(group, radius);
  const std::size_t halves = twin ? 2 : 1;
  if (residues.size() * halves > max_cells)
    throw KmError(ErrorCode::CellLimitExceeded,
                  std::to_string(residues.size() * halves) + " cells exceed the limit of " + std::to_string(max_cells));
  for (Half half : {Half::Positive, Half::Negative}) {
    if (half == Half::Negative && !twin) break;
    for (const auto& r : residues) {
      try {
        IdealCell cell = realize_cell(group, r, half);
        CellKey key{half, cell.rays};
        if (!out.index.emplace(key, out.cells.size()).second)
          throw KmError(ErrorCode::Internal, "two residues realize the same cell");
        out.cells.push_back(std::move(cell));
      } catch (const KmError& e) {
        if (e.code() != ErrorCode::EmptyFace) throw;
        if (half == Half::Positive) out.excluded.push_back(r);
      }
    }
  }
  return out;
}

bool closure_contains(const IdealCell& cell, const IdealCell& face) {
  return cell.half == face.half && std::includes(cell.rays.begin(), cell.rays.end(), face.rays.begin(), face.rays.end());
}

bool point_in_cell(const WeylGroup& group, const IdealCell& cell, const RealFormPoint& p) {
  const RootDatum& rd = group.datum();
  if (p.size() != rd.dim) throw KmError(ErrorCode::DimensionMismatch, "point has the wrong dimension");
  const RealFormPoint q = cell.half == Half::Negative ? -p : p;
  const RationalVector y = rd.pairings(cell.residue.rep.inverse * q);
  for (std::size_t i = 0; i < rd.n(); ++i) {
    const int s = sgn(y[i]);
    if (contains(cell.color, i) ? s != 0 : s <= 0) return false;
  }
  return true;
}

bool parallel_class(const WeylGroup& group, const CellPoint& a, const CellPoint& b) {
  const IdealCell ca = realize_cell(group, a.residue, a.half);
  const IdealCell cb = realize_cell(group, b.residue, b.half);
  if (!point_in_cell(group, ca, a.point)) throw KmError(ErrorCode::PointNotInFace, "first point is not in its face");
  if (!point_in_cell(group, cb, b.point)) throw KmError(ErrorCode::PointNotInFace, "second point is not in its face");
  if (ca.half != cb.half || ca.rays != cb.rays) return false;
  return primitive_integer_direction(a.point) == primitive_integer_direction(b.point);
}

BoundaryMap BoundaryMap::weyl(const WeylGroup& group, const WeylElement& w) {
  Permutation id(group.rank());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return {w.matrix, false, id};
}

BoundaryMap BoundaryMap::diagram(const WeylGroup& group, const Permutation& sigma, const Symmetrizer& sym) {
  return {induced_map(group.datum(), sigma, sym), false, sigma};
}

BoundaryMap BoundaryMap::minus_identity(const WeylGroup& group) {
  Permutation id(group.rank());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return {RationalMatrix::identity(group.dim()) * Rational(-1), true, id};
}

CellPermutation boundary_automorphism_action(const WeylGroup& group, const HorizonComplex& complex,
                                             const BoundaryMap& map, std::size_t max_height) {
  if (!is_local_transformation(group, {map.matrix, max_height}, max_height).preserved)
    throw KmError(ErrorCode::NotArrangementPreserving, "map does not preserve the root hyperplane arrangement");
  const RootDatum& rd = group.datum();
  const RowEchelon k = lineality_echelon(rd);
  CellPermutation out;
  std::set<std::size_t> hit;
  for (const auto& cell : complex.cells) {
    CellKey key{cell.half, {}};
    if (map.swaps_halves) key.half = cell.half == Half::Positive ? Half::Negative : Half::Positive;
    for (const auto& ray : cell.rays) {
      key.rays.push_back(primitive_integer_direction(reduce_mod_lineality(k, map.matrix * to_rational(ray))));
    }
    std::sort(key.rays.begin(), key.rays.end());
    const auto target = complex.find(key);
    out.image.push_back(target);
    if (!target) continue;
    if (!hit.insert(*target).second) out.injective = false;
    IndexSet expected;
    for (std::size_t j : cell.color) expected.push_back(map.color_map[j]);
    std::sort(expected.begin(), expected.end());
    if (complex.cells[*target].color != expected) out.color_compatible = false;
  }
  return out;
}

std::string to_dot(const HorizonComplex& complex) {
  std::ostringstream os;
  os << "digraph residues {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < complex.cells.size(); ++i) {
    const auto& c = complex.cells[i];
    os << "  c" << i << " [label=\"" << to_string(c.half) << " " << word_label(c.residue.rep.word) << " "
       << set_label(c.color) << "\"];\n";
  }
  for (std::size_t i = 0; i < complex.cells.size(); ++i) {
    for (std::size_t j = 0; j < complex.cells.size(); ++j) {
      const auto& a = complex.cells[i];
      const auto& b = complex.cells[j];
      if (b.rays.size() + 1 == a.rays.size() && closure_contains(a, b))
        os << "  c" << i << " -> c" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace kmflat
