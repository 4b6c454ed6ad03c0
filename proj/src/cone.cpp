#include "kmflat/cone.hpp"

#include "kmflat/error.hpp"

namespace kmflat {

Hyperplane hyperplane_of(const RealRoot& root) {
  if (root.positive) return {root, root.covector};
  RealRoot pos = root;
  for (auto& z : pos.coeffs) z = -z;
  pos.covector = -root.covector;
  pos.coroot = -root.coroot;
  pos.positive = true;
  pos.height = -root.height;
  return {pos, pos.covector};
}

RationalMatrix root_reflection_matrix(const WeylGroup& group, const RealRoot& root) {
  const WeylElement w = group.from_word(root.orbit_word);
  return w.matrix * group.reflection_matrix(root.simple_index) * w.inverse;
}

bool fixed_space_equals_kernel(const WeylGroup& group, const RealRoot& root) {
  const std::size_t dim = group.dim();
  const RationalMatrix r = root_reflection_matrix(group, root);
  const auto fixed = kernel_basis(r - RationalMatrix::identity(dim));
  const auto ker = kernel_basis(RationalMatrix::from_rows({root.covector}));
  return fixed.size() + 1 == dim && same_span(fixed, ker, dim);
}

SingularResult singular_membership(const WeylGroup& group, const RealFormPoint& p, std::size_t max_height) {
  if (p.size() != group.dim()) throw KmError(ErrorCode::DimensionMismatch, "point dimension differs from realization");
  SingularResult out;
  out.max_height = max_height;
  for (auto& root : group.positive_real_roots(max_height)) {
    if (sgn(dot(root.covector, p)) == 0) {
      out.singular = true;
      out.root = std::move(root);
      return out;
    }
  }
  return out;
}

std::string_view to_string(ConeStatus status) {
  switch (status) {
    case ConeStatus::InteriorC0: return "InteriorC0";
    case ConeStatus::BoundaryC0: return "BoundaryC0";
    case ConeStatus::InTitsCone: return "InTitsCone";
    case ConeStatus::NotInTitsCone: return "NotInTitsCone";
    case ConeStatus::Undetermined: return "Undetermined";
  }
  return "Unknown";
}

std::string_view to_string(CausalDirection d) {
  switch (d) {
    case CausalDirection::Causal: return "Causal";
    case CausalDirection::AntiCausal: return "AntiCausal";
    case CausalDirection::Neither: return "Neither";
    case CausalDirection::Undetermined: return "Undetermined";
  }
  return "Unknown";
}

TitsCone::TitsCone(WeylGroup group) : group_(std::move(group)) {
  const Classification cls = classify(group_.datum().gcm);
  finite_ = cls.all_finite();
  if (cls.indecomposable() && cls.components.front().kind == GcmKind::Affine) {
    RationalVector delta(group_.dim(), Rational(0));
    const auto& u = cls.components.front().witness;
    for (std::size_t i = 0; i < u.size(); ++i) delta = delta + scaled(group_.datum().roots[i], u[i]);
    null_root_ = std::move(delta);
  }
}

bool TitsCone::in_closed_chamber(const RealFormPoint& p) const {
  for (std::size_t i = 0; i < group_.rank(); ++i)
    if (sgn(group_.datum().pair(i, p)) < 0) return false;
  return true;
}

ConeQuery TitsCone::membership(const RealFormPoint& p, std::size_t max_steps, MembershipMethod method) const {
  const RootDatum& rd = group_.datum();
  if (p.size() != rd.dim) throw KmError(ErrorCode::DimensionMismatch, "point dimension differs from realization");
  ConeQuery q{p, ConeStatus::Undetermined, {}};

  const RationalVector start = rd.pairings(p);
  bool nonneg = true, positive = true;
  for (const auto& x : start) {
    nonneg = nonneg && sgn(x) >= 0;
    positive = positive && sgn(x) > 0;
  }
  if (nonneg) {
    q.status = positive ? ConeStatus::InteriorC0 : ConeStatus::BoundaryC0;
    return q;
  }

  if (method == MembershipMethod::Auto && null_root_) {
    // Affine: C = {<delta, p> > 0} union the W-fixed points; W-fixed points
    // have all pairings zero and were handled above.
    if (sgn(dot(*null_root_, p)) <= 0) {
      q.status = ConeStatus::NotInTitsCone;
      return q;
    }
  }

  RealFormPoint cur = p;
  for (std::size_t step = 0; step < max_steps; ++step) {
    std::size_t descent = rd.n();
    for (std::size_t i = 0; i < rd.n(); ++i) {
      if (sgn(dot(rd.roots[i], cur)) < 0) {
        descent = i;
        break;
      }
    }
    if (descent == rd.n()) {
      q.status = ConeStatus::InTitsCone;
      return q;
    }
    q.descent_word.push_back(descent);
    cur = group_.reflection_matrix(descent) * cur;
  }
  if (in_closed_chamber(cur)) {
    q.status = ConeStatus::InTitsCone;
    return q;
  }
  q.descent_word.clear();
  return q;
}

TitsCone::Closure TitsCone::closure_membership(const RealFormPoint& v, std::size_t max_steps) const {
  if (finite_) return Closure::In;
  if (null_root_) return sgn(dot(*null_root_, v)) >= 0 ? Closure::In : Closure::NotIn;
  const ConeQuery q = membership(v, max_steps);
  switch (q.status) {
    case ConeStatus::InteriorC0:
    case ConeStatus::BoundaryC0:
    case ConeStatus::InTitsCone: return Closure::In;
    case ConeStatus::NotInTitsCone: return Closure::NotIn;
    case ConeStatus::Undetermined: return Closure::Unknown;
  }
  return Closure::Unknown;
}

CausalDirection TitsCone::causal_direction(const RealFormPoint& v, std::size_t max_steps) const {
  if (v.size() != group_.dim()) throw KmError(ErrorCode::DimensionMismatch, "vector dimension differs from realization");
  if (is_zero(v)) throw KmError(ErrorCode::ZeroVector, "causal direction of the zero vector");
  const RealFormPoint neg = -v;
  // Chamber membership first: in finite type both v and -v lie in C.
  if (in_closed_chamber(v)) return CausalDirection::Causal;
  if (in_closed_chamber(neg)) return CausalDirection::AntiCausal;
  const Closure fwd = closure_membership(v, max_steps);
  if (fwd == Closure::In) return CausalDirection::Causal;
  const Closure bwd = closure_membership(neg, max_steps);
  if (bwd == Closure::In) return CausalDirection::AntiCausal;
  if (fwd == Closure::NotIn && bwd == Closure::NotIn) return CausalDirection::Neither;
  return CausalDirection::Undetermined;
}

}  // namespace kmflat
