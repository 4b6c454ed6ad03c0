#pragma once

// Generalized Cartan matrices: validation, symmetrizers, and the
// finite / affine / indefinite classification with exact certificates.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "kmflat/rational.hpp"

namespace kmflat {

/// Validated generalized Cartan matrix. Indices are 0-based in the API; error
/// messages and serialized output use 1-based indices.
class GcmMatrix {
 public:
  /// Throws KmError (NotSquare, DiagonalNotTwo, PositiveOffDiagonal,
  /// ZeroPatternAsymmetric) naming the first offending entry in row-major order.
  static GcmMatrix validate(const std::vector<IntegerVector>& raw);

  std::size_t size() const noexcept { return n_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  RationalMatrix to_rational() const;
  std::vector<IntegerVector> rows() const;
  GcmMatrix principal_submatrix(const std::vector<std::size_t>& indices) const;
  /// Connected components of the Dynkin graph, each sorted, ordered by least index.
  std::vector<std::vector<std::size_t>> components() const;
  bool is_indecomposable() const { return components().size() == 1; }

  bool operator==(const GcmMatrix&) const = default;

 private:
  GcmMatrix(std::size_t n, std::vector<Integer> entries) : n_(n), entries_(std::move(entries)) {}

  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

inline GcmMatrix validate_gcm(const std::vector<IntegerVector>& raw) { return GcmMatrix::validate(raw); }

/// gcm = diag(d) * b with b symmetric and d > 0.
struct Symmetrizer {
  RationalVector d;
  RationalMatrix b;
};

/// d is normalized to 1 on the least index of each component.
/// Throws NotSymmetrizable with the violating cycle (1-based) as indices.
Symmetrizer symmetrize(const GcmMatrix& m);
std::optional<Symmetrizer> try_symmetrize(const GcmMatrix& m);

enum class GcmKind { Finite, Affine, Indefinite };
std::string_view to_string(GcmKind kind);

/// Certificate for one indecomposable component. `witness` is indexed like
/// `indices`: empty for Finite, u > 0 with A u = 0 for Affine (primitive
/// integer), v > 0 with A v < 0 for Indefinite.
struct TypeCertificate {
  std::vector<std::size_t> indices;
  GcmKind kind = GcmKind::Finite;
  std::size_t rank = 0;
  RationalVector witness;
};

struct Classification {
  std::vector<TypeCertificate> components;
  std::size_t rank = 0;

  bool indecomposable() const { return components.size() == 1; }
  bool all_finite() const;
};

Classification classify(const GcmMatrix& m);

/// Checks a certificate exactly against the matrix.
bool verify_certificate(const GcmMatrix& m, const TypeCertificate& cert);

}  // namespace kmflat
