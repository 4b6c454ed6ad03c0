#pragma once

// Exact rational scalars, vectors and dense matrices over GMP.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kmflat {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Serializes as "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
/// Accepts "p", "p/q", or a finite decimal such as "-1.25".
Rational parse_rational(std::string_view text);

Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);
RationalVector scaled(const RationalVector& v, const Rational& s);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);
RationalVector unit_vector(std::size_t dim, std::size_t i);
RationalVector to_rational(const IntegerVector& v);
/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction (positive multiple).
IntegerVector primitive_integer_direction(const RationalVector& v);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalVector column(std::size_t j) const;
  RationalMatrix transpose() const;
  RationalMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix operator*(const Rational& s) const;
  bool operator==(const RationalMatrix& rhs) const;

  bool is_symmetric() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// row vector times matrix
RationalVector operator*(const RationalVector& v, const RationalMatrix& m);

struct RowEchelon {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in RREF normal form.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
Rational determinant(RationalMatrix m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
/// Some x with m x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);
/// True when the two families span the same subspace.
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b, std::size_t dim);

}  // namespace kmflat
