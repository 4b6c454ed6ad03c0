#pragma once

// Root datum on the extended Cartan space of dimension 2n - l and the
// invariant bilinear form on its real form.

#include <cstddef>
#include <string>
#include <vector>

#include "kmflat/gcm.hpp"
#include "kmflat/rational.hpp"

namespace kmflat {

/// Coordinates of a point of the real form in the basis e_1..e_dim, where
/// e_1..e_n are the simple coroots.
using RealFormPoint = RationalVector;

struct RootDatum {
  GcmMatrix gcm;
  std::size_t rank = 0;  // l
  std::size_t dim = 0;   // 2n - l
  std::vector<RationalVector> coroots;  // h_i = e_i
  std::vector<RationalVector> roots;    // c_j as covectors, <c_j, e_i> = a_ij
  /// j_1 < ... < j_{n-l}: the roots that receive an extension coordinate.
  std::vector<std::size_t> dependent_indices;
  std::vector<std::string> basis_labels;

  std::size_t n() const { return gcm.size(); }
  /// n x dim matrix whose rows are the root covectors.
  RationalMatrix root_matrix() const;
  /// <c_i, p>; throws IndexOutOfRange / DimensionMismatch.
  Rational pair(std::size_t root_index, const RealFormPoint& p) const;
  /// (<c_1, p>, ..., <c_n, p>)
  RationalVector pairings(const RealFormPoint& p) const;
};

RootDatum build_realization(const GcmMatrix& m);

struct BilinearForm {
  RationalMatrix gram;
  Rational determinant;

  Rational operator()(const RealFormPoint& x, const RealFormPoint& y) const;
};

/// Throws DegenerateForm when the Gram matrix is singular.
BilinearForm build_bilinear_form(const RootDatum& rd, const Symmetrizer& s);

}  // namespace kmflat
