#pragma once

// Test-only reference computations. None of these call into the Gram or
// elimination code they are used to check.

#include "plaw/scalar.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace plaw::oracle {

using Rows = std::vector<std::vector<Rational>>;

/// Leibniz expansion over all permutations.
inline Rational leibniz_det(const Rows& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    Rational term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// |v_1 ^ ... ^ v_m|^2 by Cauchy-Binet: sum of squared m x m coordinate minors.
inline Rational wedge_norm_sq(const Rows& vs) {
  const std::size_t m = vs.size();
  const std::size_t n = vs.front().size();
  if (m > n) return Rational(0);
  Rational total(0);
  for (std::uint32_t cols = 0; cols < (1U << n); ++cols) {
    if (static_cast<std::size_t>(std::popcount(cols)) != m) continue;
    Rows minor(m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if ((cols >> c) & 1U) minor[r].push_back(vs[r][c]);
      }
    }
    const Rational d = leibniz_det(minor);
    total += d * d;
  }
  return total;
}

/// Sum over every k-subset (bitmask order) of its squared wedge norm.
inline Rational subset_sum(const Rows& g, int k) {
  const int N = static_cast<int>(g.size());
  Rational total(0);
  for (std::uint32_t s = 0; s < (1U << N); ++s) {
    if (std::popcount(s) != k) continue;
    Rows family;
    for (int i = 0; i < N; ++i) {
      if ((s >> i) & 1U) family.push_back(g[static_cast<std::size_t>(i)]);
    }
    total += wedge_norm_sq(family);
  }
  return total;
}

/// Sum of squared diagonal measures, enumerating ordered sign patterns on T
/// and halving (each unordered split is hit twice).
inline Rational diagonal_sum(const Rows& g, int k) {
  const int N = static_cast<int>(g.size());
  const std::size_t n = g.front().size();
  Rational total(0);
  for (std::uint32_t t = 0; t < (1U << N); ++t) {
    if (std::popcount(t) != N - k + 1) continue;
    for (std::uint32_t minus = 0; minus < (1U << N); ++minus) {
      if ((minus & ~t) != 0) continue;
      std::vector<Rational> v(n, Rational(0));
      Rows family;
      for (int i = 0; i < N; ++i) {
        const auto& a = g[static_cast<std::size_t>(i)];
        if ((t >> i) & 1U) {
          for (std::size_t c = 0; c < n; ++c) v[c] += ((minus >> i) & 1U) ? Rational(-a[c]) : a[c];
        } else {
          family.push_back(a);
        }
      }
      family.insert(family.begin(), v);
      total += wedge_norm_sq(family);
    }
  }
  return total / 2;
}

/// Random rows with entries p/q, p in [-range, range], q in [1, max_den].
/// Redraws until the rows are independent.
inline Rows random_rational_rows(std::mt19937_64& rng, int N, int n, int range = 6, int max_den = 4) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  for (;;) {
    Rows rows(static_cast<std::size_t>(N));
    for (auto& row : rows) {
      for (int c = 0; c < n; ++c) row.push_back(Rational(num(rng), den(rng)));
    }
    if (wedge_norm_sq(rows) != 0) return rows;
  }
}

}  // namespace plaw::oracle
