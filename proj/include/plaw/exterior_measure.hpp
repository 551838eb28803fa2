#pragma once

// Squared k-dimensional measures of vector families, computed as Gram
// determinants: |v_1 ^ ... ^ v_m|^2 = det(<v_p, v_q>).

#include "plaw/error.hpp"
#include "plaw/scalar.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace plaw {

template <Scalar T>
using Vector = std::vector<T>;

/// Square matrix of pairwise inner products, stored row-major.
template <Scalar T>
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(std::size_t order) : order_(order), entries_(order * order, T(0)) {}

  std::size_t order() const { return order_; }
  const T& operator()(std::size_t p, std::size_t q) const { return entries_[p * order_ + q]; }
  T& operator()(std::size_t p, std::size_t q) { return entries_[p * order_ + q]; }

  bool is_symmetric() const {
    for (std::size_t p = 0; p < order_; ++p) {
      for (std::size_t q = p + 1; q < order_; ++q) {
        if (!((*this)(p, q) == (*this)(q, p))) return false;
      }
    }
    return true;
  }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<T> entries_;
};

template <Scalar T>
T dot(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("dot: lengths " + std::to_string(u.size()) + " and " +
                            std::to_string(v.size()) + " differ");
  }
  T sum(0);
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

template <Scalar T>
T dot(const Vector<T>& u, const Vector<T>& v) {
  return dot<T>(std::span<const T>(u), std::span<const T>(v));
}

template <Scalar T>
GramMatrix<T> gram(std::span<const Vector<T>> vs) {
  GramMatrix<T> g(vs.size());
  for (std::size_t p = 0; p < vs.size(); ++p) {
    for (std::size_t q = p; q < vs.size(); ++q) {
      g(p, q) = dot<T>(vs[p], vs[q]);
      if (q != p) g(q, p) = g(p, q);
    }
  }
  return g;
}

namespace detail {

// Bareiss fraction-free elimination. Every division is exact, and over
// integer-valued input all intermediates stay integers.
inline Rational bareiss_determinant(GramMatrix<Rational> m) {
  const std::size_t n = m.order();
  if (n == 0) return Rational(1);
  Rational previous_pivot(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return Rational(0);
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous_pivot;
      }
    }
    previous_pivot = m(k, k);
  }
  Rational det = m(n - 1, n - 1);
  return negate ? Rational(-det) : det;
}

inline double pivoted_determinant(GramMatrix<double> m) {
  const std::size_t n = m.order();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (ScalarTraits<double>::abs(m(i, k)) > ScalarTraits<double>::abs(m(pivot, k))) pivot = i;
    }
    if (m(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

}  // namespace detail

/// det(M), with det of the 0x0 matrix equal to 1. Exact in rational mode.
template <Scalar T>
T determinant(const GramMatrix<T>& m) {
  if constexpr (mode_of<T> == Mode::exact) {
    return detail::bareiss_determinant(m);
  } else {
    return detail::pivoted_determinant(m);
  }
}

/// Squared m-dimensional measure of the parallelotope spanned by vs.
template <Scalar T>
T k_measure_sq(std::span<const Vector<T>> vs) {
  if (vs.empty()) throw EmptyFamily("k_measure_sq: empty vector family");
  return determinant(gram(vs));
}

template <Scalar T>
T k_measure_sq(const std::vector<Vector<T>>& vs) {
  return k_measure_sq<T>(std::span<const Vector<T>>(vs));
}

/// Relative threshold on det(G) / prod G[i][i] below which a float family
/// counts as linearly dependent.
inline constexpr double kFloatDependenceThreshold = 1e-12;

/// Exact mode: det(gram) == 0. Float mode: the scale-free ratio
/// det(G) / prod G[i][i] is at most kFloatDependenceThreshold (0 when a
/// diagonal entry vanishes).
template <Scalar T>
bool is_dependent(std::span<const Vector<T>> vs) {
  const GramMatrix<T> g = gram(vs);
  const T det = determinant(g);
  if constexpr (mode_of<T> == Mode::exact) {
    return det == 0;
  } else {
    double diag = 1.0;
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (g(i, i) == 0.0) return true;
      diag *= g(i, i);
    }
    return det / diag <= kFloatDependenceThreshold;
  }
}

template <Scalar T>
bool is_dependent(const std::vector<Vector<T>>& vs) {
  return is_dependent<T>(std::span<const Vector<T>>(vs));
}

}  // namespace plaw
