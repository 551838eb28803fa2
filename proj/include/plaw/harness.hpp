#pragma once

// Seeded random instances and sweeps of the verifier over (N, k).

#include "plaw/parallelotope.hpp"
#include "plaw/scalar.hpp"

#include <cstdint>
#include <vector>

namespace plaw {

struct InstanceSpec {
  int N = 2;
  int n = 2;
  /// Inclusive coordinate range.
  std::int64_t entry_low = -9;
  std::int64_t entry_high = 9;
  std::uint64_t seed = 0;
  Mode mode = Mode::exact;

  /// Throws InvalidRange unless 1 <= N <= n and entry_low <= entry_high.
  void validate() const;
};

inline constexpr int kMaxRetries = 1000;

using IntegerRows = std::vector<std::vector<std::int64_t>>;

/// N integer rows of length n drawn uniformly from the entry range by a
/// seeded mt19937_64, redrawn until linearly independent (checked exactly).
/// The draw avoids std::uniform_int_distribution so output is identical on
/// every standard library. Throws ExhaustedRetries after kMaxRetries draws.
IntegerRows random_integer_rows(const InstanceSpec& spec);

template <Scalar T>
std::vector<Vector<T>> to_vectors(const IntegerRows& rows);

/// Generators built from random_integer_rows(spec).
template <Scalar T>
Generators<T> random_generators(const InstanceSpec& spec);

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of trial `trial` at dimension N:
///   mix64(mix64(mix64(base_seed) ^ N) ^ trial)
std::uint64_t trial_seed(std::uint64_t base_seed, int N, int trial);

/// Sweep instance for an already-derived seed: ambient dimension
/// n = N + (seed mod 3), entries in [-9, 9].
InstanceSpec seeded_instance(int N, std::uint64_t seed, Mode mode);

/// seeded_instance(N, trial_seed(base_seed, N, trial), mode)
InstanceSpec trial_instance(std::uint64_t base_seed, int N, int trial, Mode mode);

inline constexpr int kDefaultMaxSweepDimension = 8;

struct SweepOptions {
  int n_min = 2;
  int n_max = kDefaultMaxSweepDimension;
  int trials = 1;
  std::uint64_t base_seed = 0;
  VerifyOptions verify;
  int max_dimension = kDefaultMaxSweepDimension;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Throws InvalidRange unless 2 <= n_min <= n_max <= max_dimension and trials >= 1.
  void validate() const;
};

template <Scalar T>
struct SweepCell {
  int N = 0;
  int k = 0;
  int trials = 0;
  T max_abs_residual{};
  /// max residual / expected, as a double.
  double max_relative_residual = 0.0;
};

template <Scalar T>
struct SweepFailure {
  std::uint64_t seed = 0;
  int N = 0;
  int k = 0;
  T residual{};
};

template <Scalar T>
struct SweepSummary {
  Mode mode = mode_of<T>;
  int trials_per_cell = 0;
  std::vector<SweepCell<T>> cells;
  std::vector<SweepFailure<T>> failures;

  bool passed() const { return failures.empty(); }
};

/// Verifies every k in 1..N-1 for every trial instance of every N in range.
/// Trials run concurrently; the summary is assembled in (N, k, trial) order
/// so equal options give identical summaries.
template <Scalar T>
SweepSummary<T> sweep(const SweepOptions& options);

}  // namespace plaw
