#pragma once

// Reflection hyperplanes, the singular locus, the fundamental chamber and
// the Tits cone.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "kmflat/weyl.hpp"

namespace kmflat {

struct Hyperplane {
  RealRoot root;  // positive representative
  RationalVector normal_covector;
};

Hyperplane hyperplane_of(const RealRoot& root);

/// rho(w) s_k rho(w)^{-1} for root = +-w(alpha_k), built by conjugation.
RationalMatrix root_reflection_matrix(const WeylGroup& group, const RealRoot& root);

/// Exact check Fix(rho(r_alpha)) == ker(alpha).
bool fixed_space_equals_kernel(const WeylGroup& group, const RealRoot& root);

struct SingularResult {
  bool singular = false;
  std::optional<RealRoot> root;  // first annihilating positive root
  std::size_t max_height = 0;    // window of the regularity certificate
};

SingularResult singular_membership(const WeylGroup& group, const RealFormPoint& p, std::size_t max_height);

enum class ConeStatus { InteriorC0, BoundaryC0, InTitsCone, NotInTitsCone, Undetermined };
std::string_view to_string(ConeStatus status);

struct ConeQuery {
  RealFormPoint point;
  ConeStatus status = ConeStatus::Undetermined;
  /// Applying the reflections in order maps `point` into the closed chamber.
  Word descent_word;
};

enum class CausalDirection { Causal, AntiCausal, Neither, Undetermined };
std::string_view to_string(CausalDirection d);

enum class MembershipMethod {
  Auto,         // affine closed form when available, then descent
  DescentOnly,  // greedy descent only
};

class TitsCone {
 public:
  explicit TitsCone(WeylGroup group);

  const WeylGroup& group() const noexcept { return group_; }
  /// delta = sum u_i c_i for an indecomposable affine matrix.
  const std::optional<RationalVector>& null_root() const noexcept { return null_root_; }
  bool finite_type() const noexcept { return finite_; }

  bool in_closed_chamber(const RealFormPoint& p) const;
  ConeQuery membership(const RealFormPoint& p, std::size_t max_steps,
                       MembershipMethod method = MembershipMethod::Auto) const;
  /// Closure of the Tits cone as causal cone, its negative as anti-causal.
  /// Throws ZeroVector.
  CausalDirection causal_direction(const RealFormPoint& v, std::size_t max_steps = 10000) const;

 private:
  enum class Closure { In, NotIn, Unknown };
  Closure closure_membership(const RealFormPoint& v, std::size_t max_steps) const;

  WeylGroup group_;
  std::optional<RationalVector> null_root_;
  bool finite_ = false;
};

}  // namespace kmflat
