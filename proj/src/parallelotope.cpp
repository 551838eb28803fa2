#include "plaw/parallelotope.hpp"

#include <optional>
#include <string>

namespace plaw {

namespace {

template <Scalar T>
void require_label_fits(const Generators<T>& g, const IndexSubset& s) {
  if (!s.empty() && s.max() >= g.count()) {
    throw LabelOutOfRange("label index " + std::to_string(s.max()) + " exceeds generator count " +
                          std::to_string(g.count()));
  }
}

template <Scalar T>
std::vector<Vector<T>> select(const Generators<T>& g, const IndexSubset& s) {
  std::vector<Vector<T>> family;
  family.reserve(s.size());
  for (int i : s) family.push_back(g[i]);
  return family;
}

template <Scalar T>
T from_count(std::uint64_t c) {
  return ScalarTraits<T>::from_integer(static_cast<std::int64_t>(c));
}

}  // namespace

template <Scalar T>
Generators<T>::Generators(std::vector<Vector<T>> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw EmptyFamily("generator family is empty");
  const std::size_t n = vectors_.front().size();
  if (n == 0) throw DimensionMismatch("generators must have at least one coordinate");
  for (const auto& v : vectors_) {
    if (v.size() != n) {
      throw DimensionMismatch("generator rows have different lengths (" + std::to_string(n) + " and " +
                              std::to_string(v.size()) + ")");
    }
  }
  if (vectors_.size() > n) {
    throw DegenerateGenerators("dependent generators: " + std::to_string(vectors_.size()) +
                               " vectors in dimension " + std::to_string(n));
  }
  if (is_dependent<T>(vectors_)) {
    throw DegenerateGenerators("dependent generators: Gram determinant of the family vanishes");
  }
}

template <Scalar T>
Vector<T> diagonal_vector(const Generators<T>& g, const DiagonalLabel& d) {
  require_label_fits(g, d.t());
  Vector<T> v(static_cast<std::size_t>(g.ambient_dimension()), T(0));
  for (int i : d.part1()) {
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += g[i][c];
  }
  for (int i : d.part2()) {
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= g[i][c];
  }
  return v;
}

template <Scalar T>
T face_measure_sq(const Generators<T>& g, const FaceLabel& f) {
  require_label_fits(g, f.subset);
  if (f.dimension() != g.count()) {
    throw LabelOutOfRange("face label describes N = " + std::to_string(f.dimension()) + ", generators have N = " +
                          std::to_string(g.count()));
  }
  return k_measure_sq<T>(select(g, f.subset));
}

template <Scalar T>
T diagonal_measure_sq(const Generators<T>& g, const DiagonalLabel& d) {
  std::vector<Vector<T>> family{diagonal_vector(g, d)};
  for (int w : d.t().complement(g.count())) family.push_back(g[w]);
  return k_measure_sq<T>(family);
}

template <Scalar T>
T face_sq_sum(const Generators<T>& g, int k) {
  T sum(0);
  // Labels arrive subset-major, so translated copies reuse the last measure.
  std::optional<IndexSubset> last_subset;
  T last_measure(0);
  for (const FaceLabel& f : face_labels(g.count(), k)) {
    if (!last_subset || f.subset != *last_subset) {
      last_measure = face_measure_sq(g, f);
      last_subset = f.subset;
    }
    sum += last_measure;
  }
  return sum;
}

template <Scalar T>
T diag_sq_sum(const Generators<T>& g, int k) {
  T sum(0);
  for (const DiagonalLabel& d : diagonal_labels(g.count(), k)) sum += diagonal_measure_sq(g, d);
  return sum;
}

template <Scalar T>
T subset_sq_sum(const Generators<T>& g, int k) {
  require_face_range(g.count(), k);
  T sum(0);
  for (const IndexSubset& s : k_subsets(g.count(), k)) sum += k_measure_sq<T>(select(g, s));
  return sum;
}

template <Scalar T>
T face_mean_sq(const Generators<T>& g, int k) {
  const T sum = face_sq_sum(g, k);
  return sum / from_count<T>(count_faces(g.count(), k));
}

template <Scalar T>
T face_mean_sq_shortcut(const Generators<T>& g, int k) {
  const T sum = subset_sq_sum(g, k);
  return sum / from_count<T>(binomial(g.count(), k));
}

template <Scalar T>
T diag_mean_sq(const Generators<T>& g, int k) {
  const T sum = diag_sq_sum(g, k);
  return sum / from_count<T>(count_diagonals(g.count(), k));
}

template <Scalar T>
T expansion_identity_gap(const Generators<T>& g, int k) {
  const T diagonals = diag_sq_sum(g, k);
  const T multiplicity = from_count<T>((std::uint64_t{1} << (g.count() - k)) * static_cast<std::uint64_t>(k));
  return diagonals - multiplicity * subset_sq_sum(g, k);
}

template <Scalar T>
VerificationReport<T> verify(const Generators<T>& g, int k, const VerifyOptions& options) {
  require_face_range(g.count(), k);
  VerificationReport<T> r;
  r.N = g.count();
  r.n = g.ambient_dimension();
  r.k = k;
  r.face_count = count_faces(r.N, k);
  r.diagonal_count = count_diagonals(r.N, k);
  r.face_sq_sum = face_sq_sum(g, k);
  r.diag_sq_sum = diag_sq_sum(g, k);
  r.face_mean_sq = r.face_sq_sum / from_count<T>(r.face_count);
  r.diag_mean_sq = r.diag_sq_sum / from_count<T>(r.diagonal_count);
  r.ratio_sq = r.diag_mean_sq / r.face_mean_sq;
  r.expected = r.N - k + 1;
  r.residual = ScalarTraits<T>::abs(r.ratio_sq - ScalarTraits<T>::from_integer(r.expected));
  if constexpr (mode_of<T> == Mode::exact) {
    r.tolerance = 0.0;
    r.passed = r.residual == 0;
  } else {
    r.tolerance = options.relative_tolerance;
    r.passed = r.residual <= options.relative_tolerance * r.expected;
  }
  return r;
}

template <Scalar T>
std::vector<VerificationReport<T>> verify_all(const Generators<T>& g, const VerifyOptions& options) {
  if (g.count() < 2) throw InvalidRange("verification needs N >= 2");
  std::vector<VerificationReport<T>> reports;
  for (int k = 1; k <= g.count() - 1; ++k) reports.push_back(verify(g, k, options));
  return reports;
}

template <Scalar T>
IdentitySides<T> codimension_one_identity(const Generators<T>& g) {
  const int N = g.count();
  if (N < 2) throw InvalidRange("identity needs N >= 2");
  IdentitySides<T> sides{T(0), T(0)};
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      Vector<T> plus = g[i];
      Vector<T> minus = g[i];
      for (std::size_t c = 0; c < plus.size(); ++c) {
        plus[c] += g[j][c];
        minus[c] -= g[j][c];
      }
      std::vector<Vector<T>> with_plus{plus};
      std::vector<Vector<T>> with_minus{minus};
      for (int m = 0; m < N; ++m) {
        if (m != i && m != j) {
          with_plus.push_back(g[m]);
          with_minus.push_back(g[m]);
        }
      }
      sides.lhs += k_measure_sq<T>(with_plus) + k_measure_sq<T>(with_minus);
    }
  }
  T omitted_sum(0);
  for (int m = 0; m < N; ++m) {
    std::vector<Vector<T>> rest;
    for (int i = 0; i < N; ++i) {
      if (i != m) rest.push_back(g[i]);
    }
    omitted_sum += k_measure_sq<T>(rest);
  }
  sides.rhs = ScalarTraits<T>::from_integer(2 * (N - 1)) * omitted_sum;
  return sides;
}

template <Scalar T>
Generators<T> scaled(const Generators<T>& g, const T& factor) {
  std::vector<Vector<T>> vs = g.vectors();
  for (auto& v : vs) {
    for (auto& x : v) x *= factor;
  }
  return Generators<T>(std::move(vs));
}

#define PLAW_INSTANTIATE(T)                                                                         \
  template class Generators<T>;                                                                     \
  template Vector<T> diagonal_vector(const Generators<T>&, const DiagonalLabel&);                   \
  template T face_measure_sq(const Generators<T>&, const FaceLabel&);                               \
  template T diagonal_measure_sq(const Generators<T>&, const DiagonalLabel&);                       \
  template T face_sq_sum(const Generators<T>&, int);                                                \
  template T diag_sq_sum(const Generators<T>&, int);                                                \
  template T subset_sq_sum(const Generators<T>&, int);                                              \
  template T face_mean_sq(const Generators<T>&, int);                                               \
  template T face_mean_sq_shortcut(const Generators<T>&, int);                                      \
  template T diag_mean_sq(const Generators<T>&, int);                                               \
  template T expansion_identity_gap(const Generators<T>&, int);                                     \
  template VerificationReport<T> verify(const Generators<T>&, int, const VerifyOptions&);           \
  template std::vector<VerificationReport<T>> verify_all(const Generators<T>&, const VerifyOptions&); \
  template IdentitySides<T> codimension_one_identity(const Generators<T>&);                         \
  template Generators<T> scaled(const Generators<T>&, const T&);

PLAW_INSTANTIATE(Rational)
PLAW_INSTANTIATE(double)

#undef PLAW_INSTANTIATE

}  // namespace plaw
