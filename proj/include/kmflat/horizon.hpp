#pragma once

// Thin model of the boundary: spherical residues of the Coxeter complex and
// their realization as colored cones in the real form, one copy per half.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kmflat/local_action.hpp"

namespace kmflat {

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based

struct SphericalSubset {
  IndexSet J;
  std::size_t parabolic_order = 1;
};

/// Largest parabolic subgroup (per component) the enumeration accepts.
inline constexpr std::size_t kParabolicOrderGuard = 10080;

/// All J with finite W_J, ordered by (|J|, J). Throws RankTooLarge for
/// n > 10 and OrderOverflow when a component exceeds the guard.
std::vector<SphericalSubset> spherical_subsets(const GcmMatrix& m);

/// Order of W_J by enumeration of the parabolic subgroup; nullopt above the guard.
std::optional<std::size_t> parabolic_order(const GcmMatrix& m, const IndexSet& J, std::size_t guard);

struct Residue {
  WeylElement rep;  // minimal length in rep W_J
  SphericalSubset J;
};

/// Minimal-length representative of w W_J.
WeylElement minimal_representative(const WeylGroup& group, const WeylElement& w, const IndexSet& J);

/// True when w1 W_J1 is contained in w2 W_J2.
bool coset_contained(const WeylGroup& group, const Residue& r1, const Residue& r2);

/// u . (w W_J) = (uw) W_J
Residue act(const WeylGroup& group, const WeylElement& u, const Residue& r);

/// Spherical residues whose minimal representative has length <= radius,
/// ordered by (|J|, J, length, word). Throws InvalidArgument for radius > 12.
std::vector<Residue> residues_in_ball(const WeylGroup& group, std::size_t radius);

enum class Half { Positive, Negative };
std::string to_string(Half h);

struct IdealCell {
  Residue residue;
  Half half = Half::Positive;
  /// Extreme rays of w.F_J modulo the lineality space, primitive integer
  /// vectors reduced against its echelon basis, sorted.
  std::vector<IntegerVector> rays;
  std::vector<RationalVector> lineality;
  IndexSet color;

  std::size_t dimension() const { return rays.size() + lineality.size(); }
};

/// Fundamental coweights: <c_j, omega_i> = delta_ij, with zero extension
/// part beyond what the equations force.
std::vector<RationalVector> fundamental_coweights(const RootDatum& rd);

/// Reduce modulo the common kernel of the roots and scale to a primitive integer vector.
IntegerVector canonical_ray(const RootDatum& rd, const RationalVector& v);

/// Throws EmptyFace when w.F_J = {0}.
IdealCell realize_cell(const WeylGroup& group, const Residue& r, Half half = Half::Positive);

struct CellKey {
  Half half;
  std::vector<IntegerVector> rays;
  auto operator<=>(const CellKey&) const = default;
};

struct HorizonComplex {
  std::size_t radius = 0;
  bool twin = false;
  std::vector<IdealCell> cells;
  std::vector<Residue> excluded;  // residues with an empty face
  std::map<CellKey, std::size_t> index;

  std::optional<std::size_t> find(const CellKey& key) const;
};

/// Default cell budget; the KMFLAT_MAX_CELLS environment variable overrides it.
inline constexpr std::size_t kDefaultMaxCells = 200000;
std::size_t max_cells_from_env();

/// Throws CellLimitExceeded when the complex would exceed max_cells.
HorizonComplex build_horizon_complex(const WeylGroup& group, std::size_t radius, bool twin,
                                     std::size_t max_cells = max_cells_from_env());

/// Cell closure containment: the rays of `face` are a subset of the rays of `cell`.
bool closure_contains(const IdealCell& cell, const IdealCell& face);

/// Coordinates y with p = sum y_i (w omega_i) + kernel part, and whether p
/// lies in the open cell.
bool point_in_cell(const WeylGroup& group, const IdealCell& cell, const RealFormPoint& p);

struct CellPoint {
  Residue residue;
  Half half = Half::Positive;
  RealFormPoint point;
};

/// Same cell and positively proportional points. Throws PointNotInFace.
bool parallel_class(const WeylGroup& group, const CellPoint& a, const CellPoint& b);

struct BoundaryMap {
  RationalMatrix matrix;
  bool swaps_halves = false;
  Permutation color_map;  // image of each simple index

  static BoundaryMap weyl(const WeylGroup& group, const WeylElement& w);
  static BoundaryMap diagram(const WeylGroup& group, const Permutation& sigma, const Symmetrizer& sym);
  static BoundaryMap minus_identity(const WeylGroup& group);
};

struct CellPermutation {
  /// image[k] is the index of the image of cell k, when it lies in the complex.
  std::vector<std::optional<std::size_t>> image;
  bool injective = true;
  bool color_compatible = true;
};

/// Throws NotArrangementPreserving when the map fails the local test up to `max_height`.
CellPermutation boundary_automorphism_action(const WeylGroup& group, const HorizonComplex& complex,
                                             const BoundaryMap& map, std::size_t max_height = 6);

/// Hasse diagram of the residue poset in DOT syntax; edges go from a cell to its codimension-1 faces.
std::string to_dot(const HorizonComplex& complex);

}  // namespace kmflat
