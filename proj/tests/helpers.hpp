#pragma once

#include <random>
#include <vector>

#include "kmflat/gcm.hpp"
#include "oracles.hpp"

namespace testing {

inline kmflat::GcmMatrix gcm(const std::vector<std::vector<long>>& rows) {
  std::vector<kmflat::IntegerVector> raw;
  for (const auto& r : rows) {
    kmflat::IntegerVector v;
    for (long x : r) v.emplace_back(x);
    raw.push_back(v);
  }
  return kmflat::GcmMatrix::validate(raw);
}

inline kmflat::RationalVector qv(const std::vector<long>& xs) {
  kmflat::RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline kmflat::IntegerVector iv(const std::vector<long>& xs) {
  kmflat::IntegerVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline oracle::IMatrix to_imatrix(const kmflat::GcmMatrix& m) {
  oracle::IMatrix out(m.size(), std::vector<long>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

/// Random valid GCM: symmetric zero pattern, off-diagonal entries in [-max_entry, -1].
inline std::vector<std::vector<long>> random_gcm(std::mt19937_64& rng, std::size_t n, long max_entry) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  std::uniform_int_distribution<long> entry(1, max_entry);
  std::bernoulli_distribution edge(0.6);
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!edge(rng)) continue;
      a[i][j] = -entry(rng);
      a[j][i] = -entry(rng);
    }
  }
  return a;
}

/// Random symmetrizable GCM: a_ij = d_i b_ij with integer d and symmetric b.
inline std::vector<std::vector<long>> random_symmetrizable_gcm(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> dd(1, 2), bb(1, 2);
  std::bernoulli_distribution edge(0.6);
  std::vector<long> d(n);
  for (auto& x : d) x = dd(rng);
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!edge(rng)) continue;
      // b_ij = -k / gcd-free: choose b_ij = -k so both a_ij = -d_i k and a_ji = -d_j k
      const long k = bb(rng);
      a[i][j] = -d[i] * k;
      a[j][i] = -d[j] * k;
    }
  }
  return a;
}

}  // namespace testing
