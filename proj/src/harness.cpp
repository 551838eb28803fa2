#include "plaw/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>

namespace plaw {

namespace {

// Uniform draw from [low, high] by rejection on raw 64-bit output.
std::int64_t draw(std::mt19937_64& engine, std::int64_t low, std::int64_t high) {
  const std::uint64_t span = static_cast<std::uint64_t>(high) - static_cast<std::uint64_t>(low) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine();
  while (x >= limit) x = engine();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(low) + x % span);
}

}  // namespace

void InstanceSpec::validate() const {
  if (N < 1 || n < N) {
    throw InvalidRange("instance needs 1 <= N <= n, got N = " + std::to_string(N) + ", n = " + std::to_string(n));
  }
  if (entry_low > entry_high) throw InvalidRange("entry range is empty");
}

IntegerRows random_integer_rows(const InstanceSpec& spec) {
  spec.validate();
  std::mt19937_64 engine(spec.seed);
  IntegerRows rows(static_cast<std::size_t>(spec.N), std::vector<std::int64_t>(static_cast<std::size_t>(spec.n)));
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    for (auto& row : rows) {
      for (auto& x : row) x = draw(engine, spec.entry_low, spec.entry_high);
    }
    if (!is_dependent<Rational>(to_vectors<Rational>(rows))) return rows;
  }
  throw ExhaustedRetries("no independent family after " + std::to_string(kMaxRetries) + " draws (seed " +
                         std::to_string(spec.seed) + ")");
}

template <Scalar T>
std::vector<Vector<T>> to_vectors(const IntegerRows& rows) {
  std::vector<Vector<T>> vs;
  vs.reserve(rows.size());
  for (const auto& row : rows) {
    Vector<T> v;
    v.reserve(row.size());
    for (std::int64_t x : row) v.push_back(ScalarTraits<T>::from_integer(x));
    vs.push_back(std::move(v));
  }
  return vs;
}

template <Scalar T>
Generators<T> random_generators(const InstanceSpec& spec) {
  return Generators<T>(to_vectors<T>(random_integer_rows(spec)));
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t base_seed, int N, int trial) {
  return mix64(mix64(mix64(base_seed) ^ static_cast<std::uint64_t>(N)) ^ static_cast<std::uint64_t>(trial));
}

InstanceSpec seeded_instance(int N, std::uint64_t seed, Mode mode) {
  InstanceSpec spec;
  spec.N = N;
  spec.seed = seed;
  spec.n = N + static_cast<int>(seed % 3);
  spec.mode = mode;
  return spec;
}

InstanceSpec trial_instance(std::uint64_t base_seed, int N, int trial, Mode mode) {
  return seeded_instance(N, trial_seed(base_seed, N, trial), mode);
}

void SweepOptions::validate() const {
  if (n_min < 2 || n_min > n_max || n_max > max_dimension) {
    throw InvalidRange("sweep range " + std::to_string(n_min) + ".." + std::to_string(n_max) + " not within 2.." +
                       std::to_string(max_dimension));
  }
  if (trials < 1) throw InvalidRange("sweep needs at least one trial");
}

template <Scalar T>
SweepSummary<T> sweep(const SweepOptions& options) {
  options.validate();

  struct Task {
    int N;
    int trial;
    std::vector<VerificationReport<T>> reports;
    std::uint64_t seed = 0;
  };
  std::vector<Task> tasks;
  for (int N = options.n_min; N <= options.n_max; ++N) {
    for (int t = 0; t < options.trials; ++t) tasks.push_back(Task{N, t, {}, 0});
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      Task& task = tasks[i];
      const InstanceSpec spec = trial_instance(options.base_seed, task.N, task.trial, mode_of<T>);
      task.seed = spec.seed;
      try {
        task.reports = verify_all(random_generators<T>(spec), options.verify);
      } catch (const Error& e) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::make_exception_ptr(Error("sweep N = " + std::to_string(task.N) + ", seed " +
                                                std::to_string(spec.seed) + ": " + e.what()));
        }
        next = tasks.size();
      }
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);

  SweepSummary<T> summary;
  summary.trials_per_cell = options.trials;
  std::size_t task_index = 0;
  for (int N = options.n_min; N <= options.n_max; ++N) {
    const std::size_t first = task_index;
    task_index += static_cast<std::size_t>(options.trials);
    for (int k = 1; k <= N - 1; ++k) {
      SweepCell<T> cell{N, k, options.trials, T(0), 0.0};
      for (std::size_t i = first; i < task_index; ++i) {
        const VerificationReport<T>& r = tasks[i].reports[static_cast<std::size_t>(k - 1)];
        if (cell.max_abs_residual < r.residual) cell.max_abs_residual = r.residual;
        cell.max_relative_residual =
            std::max(cell.max_relative_residual, ScalarTraits<T>::to_double(r.residual) / r.expected);
        if (!r.passed) summary.failures.push_back(SweepFailure<T>{tasks[i].seed, N, k, r.residual});
      }
      summary.cells.push_back(std::move(cell));
    }
  }
  return summary;
}

template std::vector<Vector<Rational>> to_vectors<Rational>(const IntegerRows&);
template std::vector<Vector<double>> to_vectors<double>(const IntegerRows&);
template Generators<Rational> random_generators<Rational>(const InstanceSpec&);
template Generators<double> random_generators<double>(const InstanceSpec&);
template SweepSummary<Rational> sweep<Rational>(const SweepOptions&);
template SweepSummary<double> sweep<double>(const SweepOptions&);

}  // namespace plaw
