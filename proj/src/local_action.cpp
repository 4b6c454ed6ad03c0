#include "kmflat/local_action.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kmflat/error.hpp"

namespace kmflat {
namespace {

// Simple-root coordinates of a covector, when it lies in the span of the roots.
std::optional<RationalVector> root_coordinates(const RootDatum& rd, const RationalVector& covector) {
  return solve(rd.root_matrix().transpose(), covector);
}

bool is_root_direction(const WeylGroup& group, const RationalVector& covector) {
  const auto coords = root_coordinates(group.datum(), covector);
  if (!coords || is_zero(*coords)) return false;
  return group.is_real_root(primitive_integer_direction(*coords));
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

LocalTransformationResult is_local_transformation(const WeylGroup& group, const LocalMap& f, std::size_t max_height) {
  if (f.matrix.rows() != group.dim() || f.matrix.cols() != group.dim())
    throw KmError(ErrorCode::DimensionMismatch, "map does not act on the real form");
  const auto inv = inverse(f.matrix);
  if (!inv) throw KmError(ErrorCode::SingularMatrix, "map is not invertible");
  LocalTransformationResult out;
  out.certified_height = max_height;
  for (auto& root : group.positive_real_roots(max_height)) {
    // f(ker alpha) = ker(alpha o f^{-1}); f^{-1}(ker alpha) = ker(alpha o f).
    const bool forward = is_root_direction(group, root.covector * *inv);
    const bool backward = forward && is_root_direction(group, root.covector * f.matrix);
    if (!forward || !backward) {
      out.witness = std::move(root);
      return out;
    }
  }
  out.preserved = true;
  return out;
}

HomothetyFactor factor_homothety(const LocalMap& f, const BilinearForm& form) {
  const RationalMatrix& g = form.gram;
  if (f.matrix.rows() != g.rows() || f.matrix.cols() != g.cols())
    throw KmError(ErrorCode::DimensionMismatch, "map and form dimensions differ");
  const RationalMatrix pulled = f.matrix.transpose() * g * f.matrix;
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < g.rows() && !lambda; ++i)
    for (std::size_t j = 0; j < g.cols() && !lambda; ++j)
      if (sgn(g(i, j)) != 0) lambda = pulled(i, j) / g(i, j);
  if (!lambda || sgn(*lambda) <= 0 || !(pulled == g * *lambda))
    throw KmError(ErrorCode::NotConformal, "f^T G f is not a positive multiple of G");
  HomothetyFactor out;
  out.lambda = *lambda;
  out.exact_scale = rational_sqrt(*lambda);
  out.scale = out.exact_scale ? out.exact_scale->get_d() : std::sqrt(lambda->get_d());
  if (out.exact_scale) out.exact_orthogonal = f.matrix * (1 / *out.exact_scale);
  out.orthogonal.reserve(g.rows() * g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      out.orthogonal.push_back(out.exact_orthogonal ? (*out.exact_orthogonal)(i, j).get_d()
                                                    : f.matrix(i, j).get_d() / out.scale);
  return out;
}

DiagramAutomorphisms diagram_automorphisms(const GcmMatrix& m) {
  const std::size_t n = m.size();
  if (n > 8) throw KmError(ErrorCode::RankTooLarge, "diagram automorphisms are enumerated only for n <= 8");
  const CoxeterMatrix cox = coxeter_matrix(m);
  DiagramAutomorphisms out;
  Permutation sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    bool gamma = true, ws = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        gamma = gamma && m(sigma[i], sigma[j]) == m(i, j);
        ws = ws && cox[sigma[i]][sigma[j]] == cox[i][j];
      }
    }
    if (gamma) out.aut_gamma.push_back(sigma);
    if (ws) out.aut_ws.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

RationalMatrix induced_map(const RootDatum& rd, const Permutation& sigma, const Symmetrizer& sym) {
  const std::size_t n = rd.n(), dim = rd.dim;
  if (sigma.size() != n) throw KmError(ErrorCode::DimensionMismatch, "permutation size differs from the matrix size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rd.gcm(sigma[i], sigma[j]) != rd.gcm(i, j))
        throw KmError(ErrorCode::NotArrangementPreserving, "permutation is not a diagram automorphism");

  std::vector<RationalVector> columns;
  for (std::size_t i = 0; i < n; ++i) columns.push_back(unit_vector(dim, sigma[i]));

  std::vector<RationalVector> permuted_roots;
  for (std::size_t j = 0; j < n; ++j) permuted_roots.push_back(rd.roots[sigma[j]]);
  const RationalMatrix c_sigma = RationalMatrix::from_rows(permuted_roots);

  std::vector<RationalVector> ext;
  for (std::size_t k = n; k < dim; ++k) {
    RationalVector target(n);
    for (std::size_t j = 0; j < n; ++j) target[j] = rd.roots[j][k];
    auto x = solve(c_sigma, target);
    if (!x) throw KmError(ErrorCode::Internal, "induced map: extension column not solvable");
    ext.push_back(std::move(*x));
  }

  if (!ext.empty()) {
    const BilinearForm form = build_bilinear_form(rd, sym);
    const auto kernel = kernel_basis(rd.root_matrix());  // common kernel of the roots
    const std::size_t m = ext.size();
    // Solve B(x_k, z_k') = -B(x_k, x_k') / 2 for z_k' in the kernel.
    RationalMatrix pairing(m, kernel.size());
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t b = 0; b < kernel.size(); ++b) pairing(k, b) = form(ext[k], kernel[b]);
    std::vector<RationalVector> corrections;
    for (std::size_t kp = 0; kp < m; ++kp) {
      RationalVector rhs(m);
      for (std::size_t k = 0; k < m; ++k) rhs[k] = -form(ext[k], ext[kp]) / 2;
      auto coeff = solve(pairing, rhs);
      if (!coeff) throw KmError(ErrorCode::Internal, "induced map: isotropy correction not solvable");
      RationalVector z(dim, Rational(0));
      for (std::size_t b = 0; b < kernel.size(); ++b) z = z + scaled(kernel[b], (*coeff)[b]);
      corrections.push_back(std::move(z));
    }
    for (std::size_t k = 0; k < m; ++k) ext[k] = ext[k] + corrections[k];
  }
  columns.insert(columns.end(), ext.begin(), ext.end());
  return RationalMatrix::from_columns(columns);
}

RankOneGeometricWeylGroup geometric_weyl_group_rank1() {
  // R(c, s) t R^{-1} for t = diag(a, 1/a) has off-diagonal entry
  // (1/a - a) c s and (1,1) entry c^2 a + s^2 / a. Normalizing every torus
  // element forces c s = 0; fixing it forces s = 0. On c^2 + s^2 = 1 the
  // solutions are the four points below.
  RankOneGeometricWeylGroup out;
  const double a = 2.0;
  const Mat2 t = Mat2::diag(a, 1 / a);
  const std::pair<int, int> candidates[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (auto [c, s] : candidates) {
    const Mat2 r{double(c), double(-s), double(s), double(c)};
    const Mat2 conj = r * t * r.transpose();
    if (std::abs(conj.b) > 1e-12 || std::abs(conj.c) > 1e-12)
      throw KmError(ErrorCode::Internal, "normalizer candidate does not normalize the torus");
    out.normalizer.push_back(r);
    const int action = std::abs(conj.a - Complex(a)) < 1e-12 ? 1 : -1;
    out.action_on_flat.push_back(action);
    if (distance(conj, t) < 1e-12) out.fixator.push_back(r);
  }
  out.order = out.normalizer.size() / out.fixator.size();
  return out;
}

std::size_t geometric_weyl_group_order_rank1() { return geometric_weyl_group_rank1().order; }

}  // namespace kmflat
