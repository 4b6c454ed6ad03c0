#pragma once

// The Weyl group as an exact matrix group on the real form: simple
// reflections h -> h - <c_i, h> h_i, ShortLex normal forms, lengths and
// real-root enumeration.

#include <cstddef>
#include <vector>

#include "kmflat/realization.hpp"

namespace kmflat {

/// 0-based generator indices.
using Word = std::vector<std::size_t>;

struct WeylElement {
  Word word;  // ShortLex-minimal reduced word
  RationalMatrix matrix;
  RationalMatrix inverse;

  std::size_t length() const { return word.size(); }
  bool operator==(const WeylElement& other) const { return matrix == other.matrix; }
};

struct RealRoot {
  IntegerVector coeffs;     // simple-root coordinates
  RationalVector covector;  // sum coeffs_i c_i
  RationalVector coroot;    // w(h_i) for root = w(alpha_i); negated for negative roots
  Word orbit_word;          // w with root = +-w(alpha_i)
  std::size_t simple_index = 0;
  bool positive = true;
  Integer height;
};

/// Coxeter matrix entry used for m_ij = infinity.
inline constexpr std::size_t kInfiniteOrder = 0;
using CoxeterMatrix = std::vector<std::vector<std::size_t>>;

/// a_ij a_ji in {0,1,2,3,>=4} -> m_ij in {2,3,4,6,inf}; diagonal 1.
CoxeterMatrix coxeter_matrix(const GcmMatrix& m);

class WeylGroup {
 public:
  explicit WeylGroup(RootDatum datum);

  const RootDatum& datum() const noexcept { return datum_; }
  std::size_t rank() const noexcept { return datum_.n(); }
  std::size_t dim() const noexcept { return datum_.dim; }
  /// rho^vee with <c_i, rho^vee> = 1 for all i; pairs every root to its height.
  const RealFormPoint& dominant_coweight() const noexcept { return rho_; }

  WeylElement identity() const;
  /// Throws IndexOutOfRange.
  WeylElement simple_reflection(std::size_t i) const;
  const RationalMatrix& reflection_matrix(std::size_t i) const { return reflections_.at(i); }
  WeylElement from_word(const Word& word) const;
  /// Recovers the ShortLex normal form of a group element from its matrix by
  /// stripping the smallest left descent repeatedly.
  WeylElement from_matrix(const RationalMatrix& matrix) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;
  std::size_t length(const WeylElement& w) const { return w.length(); }

  bool has_left_descent(const RationalMatrix& matrix, std::size_t i) const;
  bool has_right_descent(const WeylElement& w, std::size_t i) const;

  /// Simple-root coordinates of s_i(beta).
  IntegerVector reflect_coefficients(std::size_t i, const IntegerVector& beta) const;
  /// Simple-root coordinates of w(beta), applying the word right to left.
  IntegerVector apply_to_coefficients(const Word& word, const IntegerVector& beta) const;
  /// Exact test whether an integer vector is a real root (any height).
  bool is_real_root(const IntegerVector& coeffs) const;
  /// Full RealRoot data for a real root given by coefficients; throws when not a real root.
  RealRoot make_real_root(const IntegerVector& coeffs) const;
  RationalVector covector_of(const IntegerVector& coeffs) const;

  /// Real roots with |height| <= max_height, sorted by (height, coeffs),
  /// closed under negation.
  std::vector<RealRoot> enumerate_real_roots(std::size_t max_height) const;
  std::vector<RealRoot> positive_real_roots(std::size_t max_height) const;

  /// All elements of length <= radius, sorted by (length, word).
  std::vector<WeylElement> ball(std::size_t radius) const;

 private:
  RootDatum datum_;
  std::vector<RationalMatrix> reflections_;
  RealFormPoint rho_;
};

/// Word with 1-based letters, for messages and serialization.
std::vector<std::size_t> one_based(const Word& word);

}  // namespace kmflat
