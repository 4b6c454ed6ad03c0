#include "kmflat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "kmflat/error.hpp"

namespace kmflat {
namespace {

bool nonnegative_nonzero(const IntegerVector& v) {
  bool nonzero = false;
  for (const auto& z : v) {
    if (sgn(z) < 0) return false;
    if (sgn(z) > 0) nonzero = true;
  }
  return nonzero;
}

Integer sum(const IntegerVector& v) {
  Integer s = 0;
  for (const auto& z : v) s += z;
  return s;
}

IntegerVector negated(IntegerVector v) {
  for (auto& z : v) z = -z;
  return v;
}

}  // namespace

CoxeterMatrix coxeter_matrix(const GcmMatrix& m) {
  const std::size_t n = m.size();
  CoxeterMatrix out(n, std::vector<std::size_t>(n, 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Integer p = m(i, j) * m(j, i);
      if (p == 0) out[i][j] = 2;
      else if (p == 1) out[i][j] = 3;
      else if (p == 2) out[i][j] = 4;
      else if (p == 3) out[i][j] = 6;
      else out[i][j] = kInfiniteOrder;
    }
  }
  return out;
}

std::vector<std::size_t> one_based(const Word& word) {
  std::vector<std::size_t> out(word);
  for (auto& x : out) ++x;
  return out;
}

WeylGroup::WeylGroup(RootDatum datum) : datum_(std::move(datum)) {
  const std::size_t dim = datum_.dim;
  for (std::size_t i = 0; i < datum_.n(); ++i) {
    RationalMatrix s = RationalMatrix::identity(dim);
    for (std::size_t c = 0; c < dim; ++c) s(i, c) -= datum_.roots[i][c];
    reflections_.push_back(std::move(s));
  }
  auto rho = solve(datum_.root_matrix(), RationalVector(datum_.n(), Rational(1)));
  if (!rho) throw KmError(ErrorCode::Internal, "simple roots are not linearly independent");
  rho_ = *rho;
}

WeylElement WeylGroup::identity() const {
  return {{}, RationalMatrix::identity(dim()), RationalMatrix::identity(dim())};
}

WeylElement WeylGroup::simple_reflection(std::size_t i) const {
  if (i >= rank())
    throw KmError(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i + 1) + " out of range", {i + 1});
  return {{i}, reflections_[i], reflections_[i]};
}

WeylElement WeylGroup::from_word(const Word& word) const {
  RationalMatrix m = RationalMatrix::identity(dim());
  for (auto i : word) {
    if (i >= rank())
      throw KmError(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i + 1) + " out of range", {i + 1});
    m = m * reflections_[i];
  }
  return from_matrix(m);
}

bool WeylGroup::has_left_descent(const RationalMatrix& matrix, std::size_t i) const {
  return sgn(datum_.pair(i, matrix * rho_)) < 0;
}

bool WeylGroup::has_right_descent(const WeylElement& w, std::size_t i) const {
  return sgn(datum_.pair(i, w.inverse * rho_)) < 0;
}

WeylElement WeylGroup::from_matrix(const RationalMatrix& matrix) const {
  if (matrix.rows() != dim() || matrix.cols() != dim())
    throw KmError(ErrorCode::DimensionMismatch, "matrix does not act on the real form");
  // Only the image of rho^vee matters: W acts simply transitively on chambers.
  RealFormPoint p = matrix * rho_;
  Word word;
  while (true) {
    std::size_t descent = rank();
    for (std::size_t i = 0; i < rank(); ++i) {
      if (sgn(dot(datum_.roots[i], p)) < 0) {
        descent = i;
        break;
      }
    }
    if (descent == rank()) break;
    word.push_back(descent);
    p = reflections_[descent] * p;
  }
  if (p != rho_) throw KmError(ErrorCode::Internal, "matrix is not in the Weyl group image");
  RationalMatrix inv = RationalMatrix::identity(dim());
  for (auto i : word) inv = reflections_[i] * inv;
  return {std::move(word), matrix, std::move(inv)};
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  WeylElement out = from_matrix(a.matrix * b.matrix);
  return out;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const { return from_matrix(w.inverse); }

IntegerVector WeylGroup::reflect_coefficients(std::size_t i, const IntegerVector& beta) const {
  const GcmMatrix& a = datum_.gcm;
  Integer pairing = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pairing += a(i, j) * beta[j];
  IntegerVector out(beta);
  out[i] -= pairing;
  return out;
}

IntegerVector WeylGroup::apply_to_coefficients(const Word& word, const IntegerVector& beta) const {
  IntegerVector v(beta);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect_coefficients(*it, v);
  return v;
}

RationalVector WeylGroup::covector_of(const IntegerVector& coeffs) const {
  RationalVector cov(dim(), Rational(0));
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (sgn(coeffs[j]) != 0) cov = cov + scaled(datum_.roots[j], Rational(coeffs[j]));
  return cov;
}

namespace {

struct RootReduction {
  bool real = false;
  Word word;  // beta = s_{word[0]} ... s_{word[m-1]} alpha_k
  std::size_t simple_index = 0;
};

RootReduction reduce_root(const WeylGroup& w, IntegerVector beta) {
  RootReduction r;
  if (beta.size() != w.rank() || !nonnegative_nonzero(beta)) return r;
  const GcmMatrix& a = w.datum().gcm;
  while (sum(beta) > 1) {
    std::size_t pick = w.rank();
    for (std::size_t i = 0; i < w.rank() && pick == w.rank(); ++i) {
      Integer pairing = 0;
      for (std::size_t j = 0; j < beta.size(); ++j) pairing += a(i, j) * beta[j];
      if (sgn(pairing) > 0) pick = i;
    }
    if (pick == w.rank()) return r;
    beta = w.reflect_coefficients(pick, beta);
    if (!nonnegative_nonzero(beta)) return r;
    r.word.push_back(pick);
  }
  r.real = true;
  r.simple_index = static_cast<std::size_t>(std::find(beta.begin(), beta.end(), Integer(1)) - beta.begin());
  return r;
}

}  // namespace

bool WeylGroup::is_real_root(const IntegerVector& coeffs) const {
  if (coeffs.size() != rank()) return false;
  const bool negative = std::any_of(coeffs.begin(), coeffs.end(), [](const Integer& z) { return sgn(z) < 0; });
  return reduce_root(*this, negative ? negated(coeffs) : coeffs).real;
}

RealRoot WeylGroup::make_real_root(const IntegerVector& coeffs) const {
  const bool negative = std::any_of(coeffs.begin(), coeffs.end(), [](const Integer& z) { return sgn(z) < 0; });
  const RootReduction red = reduce_root(*this, negative ? negated(coeffs) : coeffs);
  if (!red.real) throw KmError(ErrorCode::Internal, "coefficient vector is not a real root");
  RealRoot root;
  root.coeffs = coeffs;
  root.covector = covector_of(coeffs);
  root.orbit_word = red.word;
  root.simple_index = red.simple_index;
  RationalVector coroot = datum_.coroots[red.simple_index];
  for (auto it = red.word.rbegin(); it != red.word.rend(); ++it) coroot = reflections_[*it] * coroot;
  root.coroot = negative ? -coroot : coroot;
  root.positive = !negative;
  root.height = sum(coeffs);
  return root;
}

std::vector<RealRoot> WeylGroup::positive_real_roots(std::size_t max_height) const {
  std::vector<RealRoot> found;
  std::map<IntegerVector, std::size_t> index;
  std::deque<std::size_t> queue;
  const Integer bound(static_cast<unsigned long>(max_height));
  for (std::size_t k = 0; k < rank(); ++k) {
    RealRoot r;
    r.coeffs.assign(rank(), Integer(0));
    r.coeffs[k] = 1;
    r.covector = datum_.roots[k];
    r.coroot = datum_.coroots[k];
    r.simple_index = k;
    r.height = 1;
    if (r.height > bound) continue;
    index.emplace(r.coeffs, found.size());
    queue.push_back(found.size());
    found.push_back(std::move(r));
  }
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rank(); ++i) {
      IntegerVector next = reflect_coefficients(i, found[cur].coeffs);
      if (!nonnegative_nonzero(next)) continue;
      const Integer h = sum(next);
      if (h > bound || index.count(next)) continue;
      RealRoot r;
      r.coeffs = next;
      r.covector = covector_of(next);
      r.coroot = reflections_[i] * found[cur].coroot;
      r.orbit_word = found[cur].orbit_word;
      r.orbit_word.insert(r.orbit_word.begin(), i);
      r.simple_index = found[cur].simple_index;
      r.height = h;
      index.emplace(std::move(next), found.size());
      queue.push_back(found.size());
      found.push_back(std::move(r));
    }
  }
  std::sort(found.begin(), found.end(), [](const RealRoot& a, const RealRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs < b.coeffs;
  });
  return found;
}

std::vector<RealRoot> WeylGroup::enumerate_real_roots(std::size_t max_height) const {
  const std::vector<RealRoot> positives = positive_real_roots(max_height);
  std::vector<RealRoot> all;
  all.reserve(2 * positives.size());
  for (const auto& r : positives) {
    RealRoot neg = r;
    neg.coeffs = negated(r.coeffs);
    neg.covector = -r.covector;
    neg.coroot = -r.coroot;
    neg.positive = false;
    neg.height = -r.height;
    all.push_back(std::move(neg));
  }
  all.insert(all.end(), positives.begin(), positives.end());
  std::sort(all.begin(), all.end(), [](const RealRoot& a, const RealRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs < b.coeffs;
  });
  return all;
}

std::vector<WeylElement> WeylGroup::ball(std::size_t radius) const {
  std::vector<WeylElement> out{identity()};
  std::vector<WeylElement> frontier{identity()};
  for (std::size_t len = 1; len <= radius && !frontier.empty(); ++len) {
    std::map<Word, WeylElement> next;
    for (const auto& w : frontier) {
      for (std::size_t i = 0; i < rank(); ++i) {
        if (has_right_descent(w, i)) continue;
        WeylElement ws = from_matrix(w.matrix * reflections_[i]);
        next.emplace(ws.word, std::move(ws));
      }
    }
    frontier.clear();
    for (auto& [word, w] : next) {
      out.push_back(w);
      frontier.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace kmflat
