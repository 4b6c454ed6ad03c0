#pragma once

// Local transformations of a pointed flat: linear maps of the real form
// preserving the singular arrangement, homothety factorization, diagram
// automorphisms and the rank-one geometric Weyl group.

#include <cstddef>
#include <optional>
#include <vector>

#include "kmflat/cone.hpp"
#include "kmflat/mat2.hpp"

namespace kmflat {

struct LocalMap {
  RationalMatrix matrix;
  std::size_t certified_height = 0;
};

struct LocalTransformationResult {
  bool preserved = false;
  /// Window of positive roots (height <= certified_height) that was checked.
  std::size_t certified_height = 0;
  std::optional<RealRoot> witness;
};

/// f maps every hyperplane ker(alpha) (alpha positive, height <= max_height)
/// onto a root hyperplane, and so does f^{-1}. Images are tested for being
/// real roots exactly, whatever their height. Throws SingularMatrix.
LocalTransformationResult is_local_transformation(const WeylGroup& group, const LocalMap& f, std::size_t max_height);

struct HomothetyFactor {
  Rational lambda;                    // f^T G f = lambda G
  double scale = 0;                   // sqrt(lambda)
  std::optional<Rational> exact_scale;  // when lambda is a rational square
  std::optional<RationalMatrix> exact_orthogonal;
  std::vector<double> orthogonal;     // f / scale, row-major
};

/// Throws NotConformal when f^T G f is not a positive multiple of G.
HomothetyFactor factor_homothety(const LocalMap& f, const BilinearForm& form);

using Permutation = std::vector<std::size_t>;

struct DiagramAutomorphisms {
  std::vector<Permutation> aut_gamma;  // a_{s(i)s(j)} = a_ij
  std::vector<Permutation> aut_ws;     // m_{s(i)s(j)} = m_ij
  bool equal() const { return aut_gamma == aut_ws; }
};

/// Brute force over all permutations, lexicographic order. Throws RankTooLarge for n > 8.
DiagramAutomorphisms diagram_automorphisms(const GcmMatrix& m);

/// Linear map of the real form induced by sigma in Aut(Gamma): e_i -> e_{sigma(i)}
/// on coroots, extension columns solved from <c_{sigma(j)}, F h> = <c_j, h> and
/// corrected along the common kernel of the roots so that the extension block
/// stays B-isotropic.
RationalMatrix induced_map(const RootDatum& rd, const Permutation& sigma, const Symmetrizer& sym);

struct RankOneGeometricWeylGroup {
  std::vector<Mat2> normalizer;  // N_K(T) in SO(2)
  std::vector<Mat2> fixator;     // M = {+-I}
  std::size_t order = 0;
  /// action of each normalizer element on a = R (log of the torus coordinate)
  std::vector<int> action_on_flat;
};

RankOneGeometricWeylGroup geometric_weyl_group_rank1();
std::size_t geometric_weyl_group_order_rank1();

}  // namespace kmflat
