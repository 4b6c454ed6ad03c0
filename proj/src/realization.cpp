#include "kmflat/realization.hpp"

#include "kmflat/error.hpp"

namespace kmflat {

RationalMatrix RootDatum::root_matrix() const { return RationalMatrix::from_rows(roots); }

Rational RootDatum::pair(std::size_t root_index, const RealFormPoint& p) const {
  if (root_index >= roots.size())
    throw KmError(ErrorCode::IndexOutOfRange, "root index " + std::to_string(root_index + 1) + " out of range",
                  {root_index + 1});
  if (p.size() != dim) throw KmError(ErrorCode::DimensionMismatch, "point dimension differs from realization");
  return dot(roots[root_index], p);
}

RationalVector RootDatum::pairings(const RealFormPoint& p) const {
  RationalVector out(n());
  for (std::size_t i = 0; i < n(); ++i) out[i] = pair(i, p);
  return out;
}

RootDatum build_realization(const GcmMatrix& m) {
  const std::size_t n = m.size();
  const RationalMatrix a = m.to_rational();

  // Greedy lexicographically-first maximal independent set of columns of A.
  // For a symmetrizable matrix this coincides with the row version.
  std::vector<std::size_t> independent;
  std::vector<std::size_t> dependent;
  std::vector<RationalVector> kept;
  for (std::size_t j = 0; j < n; ++j) {
    kept.push_back(a.column(j));
    if (rank(RationalMatrix::from_rows(kept)) == kept.size()) {
      independent.push_back(j);
    } else {
      kept.pop_back();
      dependent.push_back(j);
    }
  }

  RootDatum rd{m, independent.size(), 2 * n - independent.size(), {}, {}, dependent, {}};
  for (std::size_t i = 0; i < n; ++i) rd.coroots.push_back(unit_vector(rd.dim, i));
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector c(rd.dim, Rational(0));
    for (std::size_t i = 0; i < n; ++i) c[i] = a(i, j);
    for (std::size_t k = 0; k < dependent.size(); ++k)
      if (dependent[k] == j) c[n + k] = 1;
    rd.roots.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < rd.dim; ++k) rd.basis_labels.push_back("v" + std::to_string(k + 1));
  return rd;
}

Rational BilinearForm::operator()(const RealFormPoint& x, const RealFormPoint& y) const {
  return dot(x, gram * y);
}

BilinearForm build_bilinear_form(const RootDatum& rd, const Symmetrizer& s) {
  const std::size_t n = rd.n();
  BilinearForm form{RationalMatrix(rd.dim, rd.dim), 0};
  // B(e_i, h) = d_i <c_i, h> for i <= n; extension block zero.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < rd.dim; ++k) {
      const Rational v = s.d[i] * rd.roots[i][k];
      form.gram(i, k) = v;
      if (k >= n) form.gram(k, i) = v;
    }
  }
  if (!form.gram.is_symmetric())
    throw KmError(ErrorCode::Internal, "Gram matrix not symmetric; symmetrizer does not match the matrix");
  form.determinant = determinant(form.gram);
  if (sgn(form.determinant) == 0) throw KmError(ErrorCode::DegenerateForm, "invariant form is degenerate");
  return form;
}

}  // namespace kmflat
