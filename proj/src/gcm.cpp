#include "kmflat/gcm.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "kmflat/error.hpp"

namespace kmflat {
namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::vector<std::size_t> path_to_root(const std::vector<std::size_t>& parent, std::size_t v) {
  std::vector<std::size_t> path{v};
  while (parent[v] != v) {
    v = parent[v];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Cycle closed by the non-tree edge (i, j): tree path lca..i followed by the
// reversed tree path j..(child of lca).
std::vector<std::size_t> tree_cycle(const std::vector<std::size_t>& parent, std::size_t i, std::size_t j) {
  const auto pi = path_to_root(parent, i);
  const auto pj = path_to_root(parent, j);
  std::size_t common = 0;
  while (common < pi.size() && common < pj.size() && pi[common] == pj[common]) ++common;
  std::vector<std::size_t> cycle(pi.begin() + static_cast<std::ptrdiff_t>(common - 1), pi.end());
  for (std::size_t k = pj.size(); k-- > common;) cycle.push_back(pj[k]);
  return cycle;
}

bool all_positive(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) > 0; });
}

bool all_negative(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) < 0; });
}

struct MinorSigns {
  bool proper_all_positive = true;
  Rational full;
};

MinorSigns principal_minor_signs(const RationalMatrix& a) {
  const std::size_t k = a.rows();
  MinorSigns out;
  out.full = determinant(a);
  const std::size_t full_mask = (std::size_t{1} << k) - 1;
  for (std::size_t mask = 1; mask < full_mask; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (std::size_t{1} << b)) idx.push_back(b);
    if (sgn(determinant(a.submatrix(idx, idx))) <= 0) {
      out.proper_all_positive = false;
      return out;
    }
  }
  return out;
}

std::optional<RationalVector> small_negative_witness(const RationalMatrix& a) {
  const std::size_t k = a.rows();
  constexpr std::size_t kBudget = 50000;
  std::size_t checked = 0;
  for (std::size_t bound = 1; bound <= 8; ++bound) {
    std::vector<std::size_t> v(k, 1);
    while (true) {
      if (std::find(v.begin(), v.end(), bound) != v.end()) {
        RationalVector q(k);
        for (std::size_t i = 0; i < k; ++i) q[i] = static_cast<unsigned long>(v[i]);
        if (all_negative(a * q)) return q;
        if (++checked > kBudget) return std::nullopt;
      }
      std::size_t pos = k;
      while (pos > 0 && v[pos - 1] == bound) v[--pos] = 1;
      if (pos == 0) break;
      ++v[pos - 1];
    }
  }
  return std::nullopt;
}

// Perron eigenvector of 2I - A (non-negative, irreducible). For indefinite
// type the eigenvalue exceeds 2, so A v = (2 - lambda) v < 0; a rational
// rounding of v keeps the strict inequality.
std::optional<RationalVector> perron_negative_witness(const RationalMatrix& a) {
  const std::size_t k = a.rows();
  std::vector<double> x(k, 1.0), y(k);
  for (int iter = 0; iter < 20000; ++iter) {
    double norm = 0;
    for (std::size_t i = 0; i < k; ++i) {
      y[i] = x[i];
      for (std::size_t j = 0; j < k; ++j) {
        const double nij = (i == j ? 2.0 : 0.0) - a(i, j).get_d();
        y[i] += nij * x[j];
      }
      norm = std::max(norm, y[i]);
    }
    for (std::size_t i = 0; i < k; ++i) y[i] /= norm;
    x.swap(y);
  }
  const double xmin = *std::min_element(x.begin(), x.end());
  if (!(xmin > 0)) return std::nullopt;
  for (int digits = 0; digits <= 14; ++digits) {
    const double scale = std::pow(10.0, digits);
    RationalVector q(k);
    for (std::size_t i = 0; i < k; ++i) {
      const double r = std::max(1.0, std::round(x[i] / xmin * scale));
      q[i] = Rational(r);
    }
    if (all_negative(a * q)) return q;
  }
  return std::nullopt;
}

TypeCertificate classify_component(const GcmMatrix& m, const std::vector<std::size_t>& indices) {
  const RationalMatrix a = m.principal_submatrix(indices).to_rational();
  TypeCertificate cert;
  cert.indices = indices;
  cert.rank = rank(a);
  const MinorSigns minors = principal_minor_signs(a);
  if (minors.proper_all_positive && sgn(minors.full) > 0) {
    cert.kind = GcmKind::Finite;
    return cert;
  }
  if (minors.proper_all_positive && sgn(minors.full) == 0) {
    cert.kind = GcmKind::Affine;
    const auto kernel = kernel_basis(a);
    if (kernel.size() != 1) throw KmError(ErrorCode::Internal, "affine component without corank 1");
    IntegerVector u = primitive_integer_direction(kernel.front());
    if (sgn(u.front()) < 0)
      for (auto& z : u) z = -z;
    cert.witness = to_rational(u);
    if (!all_positive(cert.witness)) throw KmError(ErrorCode::Internal, "affine kernel vector not positive");
    return cert;
  }
  cert.kind = GcmKind::Indefinite;
  auto witness = small_negative_witness(a);
  if (!witness) witness = perron_negative_witness(a);
  if (!witness) throw KmError(ErrorCode::Internal, "no indefinite witness found");
  cert.witness = *witness;
  return cert;
}

}  // namespace

GcmMatrix GcmMatrix::validate(const std::vector<IntegerVector>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw KmError(ErrorCode::NotSquare, "empty matrix");
  for (const auto& row : raw)
    if (row.size() != n) throw KmError(ErrorCode::NotSquare, "matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& a = raw[i][j];
      if (i == j) {
        if (a != 2)
          throw KmError(ErrorCode::DiagonalNotTwo, "diagonal entry " + entry_name(i, j) + " is not 2", {i + 1, j + 1});
        continue;
      }
      if (sgn(a) > 0)
        throw KmError(ErrorCode::PositiveOffDiagonal, "off-diagonal entry " + entry_name(i, j) + " is positive",
                      {i + 1, j + 1});
      if (sgn(a) == 0 && sgn(raw[j][i]) != 0)
        throw KmError(ErrorCode::ZeroPatternAsymmetric,
                      "entry " + entry_name(i, j) + " is zero but " + entry_name(j, i) + " is not", {i + 1, j + 1});
    }
  }
  std::vector<Integer> entries;
  entries.reserve(n * n);
  for (const auto& row : raw) entries.insert(entries.end(), row.begin(), row.end());
  return GcmMatrix(n, std::move(entries));
}

RationalMatrix GcmMatrix::to_rational() const {
  RationalMatrix r(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(i, j) = Rational((*this)(i, j));
  return r;
}

std::vector<IntegerVector> GcmMatrix::rows() const {
  std::vector<IntegerVector> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  return out;
}

GcmMatrix GcmMatrix::principal_submatrix(const std::vector<std::size_t>& indices) const {
  std::vector<Integer> sub;
  sub.reserve(indices.size() * indices.size());
  for (auto i : indices)
    for (auto j : indices) sub.push_back((*this)(i, j));
  return GcmMatrix(indices.size(), std::move(sub));
}

std::vector<std::vector<std::size_t>> GcmMatrix::components() const {
  std::vector<int> seen(n_, 0);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t start = 0; start < n_; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (std::size_t w = 0; w < n_; ++w) {
        if (w != v && !seen[w] && sgn((*this)(v, w)) != 0) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<Symmetrizer> try_symmetrize(const GcmMatrix& m) {
  try {
    return symmetrize(m);
  } catch (const KmError& e) {
    if (e.code() == ErrorCode::NotSymmetrizable) return std::nullopt;
    throw;
  }
}

Symmetrizer symmetrize(const GcmMatrix& m) {
  const std::size_t n = m.size();
  RationalVector d(n);
  std::vector<std::size_t> parent(n);
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(n, false));
  for (const auto& comp : m.components()) {
    const std::size_t root = comp.front();
    d[root] = 1;
    parent[root] = root;
    std::vector<bool> seen(n, false);
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || seen[j] || sgn(m(i, j)) == 0) continue;
        // a_ij d_j = a_ji d_i
        d[j] = d[i] * Rational(m(j, i)) / Rational(m(i, j));
        parent[j] = i;
        tree[i][j] = tree[j][i] = true;
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(m(i, j)) == 0 || tree[i][j]) continue;
      if (Rational(m(i, j)) * d[j] != Rational(m(j, i)) * d[i]) {
        auto cycle = tree_cycle(parent, i, j);
        std::string text;
        for (auto& c : cycle) {
          text += (text.empty() ? "" : ",") + std::to_string(c + 1);
          c += 1;
        }
        throw KmError(ErrorCode::NotSymmetrizable, "cycle products differ along (" + text + ")", std::move(cycle));
      }
    }
  }
  Symmetrizer s;
  s.d = d;
  s.b = RationalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.b(i, j) = Rational(m(i, j)) / d[i];
  return s;
}

std::string_view to_string(GcmKind kind) {
  switch (kind) {
    case GcmKind::Finite: return "Finite";
    case GcmKind::Affine: return "Affine";
    case GcmKind::Indefinite: return "Indefinite";
  }
  return "Unknown";
}

bool Classification::all_finite() const {
  return std::all_of(components.begin(), components.end(),
                     [](const TypeCertificate& c) { return c.kind == GcmKind::Finite; });
}

Classification classify(const GcmMatrix& m) {
  Classification out;
  for (const auto& comp : m.components()) {
    out.components.push_back(classify_component(m, comp));
    out.rank += out.components.back().rank;
  }
  return out;
}

bool verify_certificate(const GcmMatrix& m, const TypeCertificate& cert) {
  const RationalMatrix a = m.principal_submatrix(cert.indices).to_rational();
  const std::size_t k = cert.indices.size();
  if (rank(a) != cert.rank) return false;
  switch (cert.kind) {
    case GcmKind::Finite:
      return cert.rank == k && cert.witness.empty();
    case GcmKind::Affine:
      return cert.rank + 1 == k && cert.witness.size() == k && all_positive(cert.witness) &&
             is_zero(a * cert.witness);
    case GcmKind::Indefinite:
      return cert.witness.size() == k && all_positive(cert.witness) && all_negative(a * cert.witness);
  }
  return false;
}

}  // namespace kmflat
