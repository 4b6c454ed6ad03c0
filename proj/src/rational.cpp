#include "kmflat/rational.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmflat/error.hpp"

namespace kmflat {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string{} : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw KmError(ErrorCode::MalformedJson, "empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  try {
    if (const auto dot_pos = s.find('.'); dot_pos != std::string::npos) {
      std::string digits = s.substr(0, dot_pos) + s.substr(dot_pos + 1);
      if (digits == "-" || digits.empty()) throw std::invalid_argument(s);
      const std::size_t decimals = s.size() - dot_pos - 1;
      Integer numerator(digits, 10);
      Integer denominator;
      mpz_ui_pow_ui(denominator.get_mpz_t(), 10, decimals);
      Rational q(numerator, denominator);
      q.canonicalize();
      return q;
    }
    Rational q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw KmError(ErrorCode::MalformedJson, "not a rational literal: '" + std::string(text) + "'");
  }
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw KmError(ErrorCode::DimensionMismatch, "dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalVector scaled(const RationalVector& v, const Rational& s) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw KmError(ErrorCode::DimensionMismatch, "vector sum: size mismatch");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw KmError(ErrorCode::DimensionMismatch, "vector difference: size mismatch");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector operator-(const RationalVector& a) { return scaled(a, Rational(-1)); }

RationalVector unit_vector(std::size_t dim, std::size_t i) {
  RationalVector e(dim, Rational(0));
  e.at(i) = 1;
  return e;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

IntegerVector primitive_integer_direction(const RationalVector& v) {
  Integer lcm_den = 1;
  for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  IntegerVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational scaled_q = v[i] * Rational(lcm_den);
    out[i] = scaled_q.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g != 0 && g != 1) {
    for (auto& z : out) z /= g;
  }
  return out;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw KmError(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols) {
  return from_rows(cols).transpose();
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols) const {
  RationalMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw KmError(ErrorCode::DimensionMismatch, "matrix product: shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw KmError(ErrorCode::DimensionMismatch, "matrix-vector product: shape mismatch");
  RationalVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalVector operator*(const RationalVector& v, const RationalMatrix& m) {
  if (m.rows() != v.size()) throw KmError(ErrorCode::DimensionMismatch, "vector-matrix product: shape mismatch");
  RationalVector out(m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw KmError(ErrorCode::DimensionMismatch, "matrix sum: shape mismatch");
  RationalMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw KmError(ErrorCode::DimensionMismatch, "matrix difference: shape mismatch");
  RationalMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
  return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
  RationalMatrix out(*this);
  for (auto& x : out.data_) x *= s;
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RowEchelon row_reduce(RationalMatrix m) {
  RowEchelon result;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pivot_row, j));
    const Rational inv = 1 / m(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || sgn(m(i, col)) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
    }
    result.pivots.push_back(col);
    ++pivot_row;
  }
  result.reduced = std::move(m);
  return result;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  if (!m.is_square()) throw KmError(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && sgn(m(sel, col)) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      const Rational factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon ech = row_reduce(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw KmError(ErrorCode::DimensionMismatch, "solve: right-hand side size mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RowEchelon ech = row_reduce(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
  return x;
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b, std::size_t dim) {
  auto stack = [dim](const std::vector<RationalVector>& vs) {
    RationalMatrix m(vs.size(), dim);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = vs[i].at(j);
    return m;
  };
  std::vector<RationalVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = a.empty() ? 0 : rank(stack(a));
  const std::size_t rb = b.empty() ? 0 : rank(stack(b));
  const std::size_t rab = both.empty() ? 0 : rank(stack(both));
  return ra == rb && rb == rab;
}

}  // namespace kmflat
