#pragma once

// Face and diagonal measures of a parallelotope and verification of the
// generalized parallelogram law
//
//   mean(diagonal measure^2) / mean(face measure^2) = N - k + 1
//
// for every 1 <= k <= N-1. Measures are handled as squares throughout.
// Everything here is instantiated for Rational and double only.

#include "plaw/combinatorics.hpp"
#include "plaw/error.hpp"
#include "plaw/exterior_measure.hpp"
#include "plaw/scalar.hpp"

#include <cstdint>
#include <vector>

namespace plaw {

/// N linearly independent vectors in R^n, 1 <= N <= n. Independence is
/// checked once, here; every other operation presumes it.
template <Scalar T>
class Generators {
 public:
  /// Throws EmptyFamily, DimensionMismatch (ragged rows) or
  /// DegenerateGenerators (N > n or a dependent family).
  explicit Generators(std::vector<Vector<T>> vectors);

  int count() const { return static_cast<int>(vectors_.size()); }
  int ambient_dimension() const { return static_cast<int>(vectors_.front().size()); }
  const Vector<T>& operator[](int i) const { return vectors_[static_cast<std::size_t>(i)]; }
  const std::vector<Vector<T>>& vectors() const { return vectors_; }

  friend bool operator==(const Generators&, const Generators&) = default;

 private:
  std::vector<Vector<T>> vectors_;
};

struct VerifyOptions {
  /// Float mode passes when |ratio_sq - expected| <= tolerance * expected.
  double relative_tolerance = 1e-9;
};

template <Scalar T>
struct VerificationReport {
  int N = 0;
  int n = 0;
  int k = 0;
  std::uint64_t face_count = 0;
  std::uint64_t diagonal_count = 0;
  T face_sq_sum{};
  T diag_sq_sum{};
  T face_mean_sq{};
  T diag_mean_sq{};
  T ratio_sq{};
  int expected = 0;
  T residual{};
  Mode mode = mode_of<T>;
  double tolerance = 0.0;
  /// Exact mode: residual == 0. Float mode: residual <= tolerance * expected.
  bool passed = false;
};

/// V(T1, T2) = sum over part1 minus sum over part2.
template <Scalar T>
Vector<T> diagonal_vector(const Generators<T>& g, const DiagonalLabel& d);

/// Squared measure of the generators in f.subset; the translation bits do
/// not enter.
template <Scalar T>
T face_measure_sq(const Generators<T>& g, const FaceLabel& f);

/// Squared k-measure of {V(T1,T2)} together with the generators outside T.
template <Scalar T>
T diagonal_measure_sq(const Generators<T>& g, const DiagonalLabel& d);

/// Sum of squared measures over all 2^(N-k) C(N,k) labelled faces.
template <Scalar T>
T face_sq_sum(const Generators<T>& g, int k);

/// Sum of squared measures over all 2^(N-k) C(N,N-k+1) diagonals.
template <Scalar T>
T diag_sq_sum(const Generators<T>& g, int k);

/// Sum over k-subsets S of |wedge S|^2, each subset once.
template <Scalar T>
T subset_sq_sum(const Generators<T>& g, int k);

template <Scalar T>
T face_mean_sq(const Generators<T>& g, int k);

/// face_mean_sq computed from subset_sq_sum without enumerating
/// translations. Must agree with face_mean_sq.
template <Scalar T>
T face_mean_sq_shortcut(const Generators<T>& g, int k);

template <Scalar T>
T diag_mean_sq(const Generators<T>& g, int k);

/// diag_sq_sum - 2^(N-k) * k * subset_sq_sum: zero exactly when every
/// k-subset term arises 2^(N-k) k times in the expanded diagonal sum.
template <Scalar T>
T expansion_identity_gap(const Generators<T>& g, int k);

template <Scalar T>
VerificationReport<T> verify(const Generators<T>& g, int k, const VerifyOptions& options = {});

/// One report per k = 1..N-1, ascending. Requires N >= 2.
template <Scalar T>
std::vector<VerificationReport<T>> verify_all(const Generators<T>& g, const VerifyOptions& options = {});

template <Scalar T>
struct IdentitySides {
  T lhs{};
  T rhs{};
};

/// The k = N-1 identity written out pair by pair:
///   sum_{i<j} |(a_i + a_j) ^ rest|^2 + |(a_i - a_j) ^ rest|^2
///     = 2 (N-1) sum_m |a_1 ^ .. (a_m omitted) .. ^ a_N|^2
/// Requires N >= 2.
template <Scalar T>
IdentitySides<T> codimension_one_identity(const Generators<T>& g);

/// Every generator multiplied by factor.
template <Scalar T>
Generators<T> scaled(const Generators<T>& g, const T& factor);

}  // namespace plaw
