#pragma once

// Enumeration of generator index subsets, face labels and diagonal labels of
// an N-dimensional parallelotope, plus their closed-form counts.
//
// All streams are single-pass and lazy; emission order is deterministic.

#include "plaw/error.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace plaw {

/// Strictly increasing sequence of generator indices.
class IndexSubset {
 public:
  IndexSubset() = default;
  /// Throws LabelOutOfRange unless indices are strictly increasing.
  explicit IndexSubset(std::vector<int> indices);
  IndexSubset(std::initializer_list<int> indices) : IndexSubset(std::vector<int>(indices)) {}

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  int operator[](std::size_t i) const { return indices_[i]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  int min() const { return indices_.front(); }
  int max() const { return indices_.back(); }
  bool contains(int index) const;
  const std::vector<int>& indices() const { return indices_; }

  /// Indices of [0, universe) not in this subset, ascending.
  IndexSubset complement(int universe) const;

  /// "{0,2,3}"
  std::string to_string() const;

  friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;

 private:
  std::vector<int> indices_;
};

/// A k-face F^I(S): subset S of k generators, and one translation bit per
/// generator outside S (ordered by generator index).
struct FaceLabel {
  IndexSubset subset;
  std::vector<bool> translation;

  int dimension() const { return static_cast<int>(subset.size() + translation.size()); }
  /// "0110", most significant bit first.
  std::string translation_string() const;

  friend auto operator<=>(const FaceLabel&, const FaceLabel&) = default;
};

/// A k-diagonal D(T1, T2) with T = T1 u T2, |T| = N - k + 1. Stored in the
/// canonical orientation where min(T) lies in part1, so D(T1,T2) and
/// D(T2,T1) share one label. part2 may be empty.
class DiagonalLabel {
 public:
  DiagonalLabel() = default;
  /// Builds the canonical label for the unordered split {first, second}.
  /// Throws LabelOutOfRange if the parts overlap or are both empty.
  static DiagonalLabel from_parts(const IndexSubset& first, const IndexSubset& second);

  const IndexSubset& t() const { return t_; }
  const IndexSubset& part1() const { return part1_; }
  const IndexSubset& part2() const { return part2_; }

  friend auto operator<=>(const DiagonalLabel&, const DiagonalLabel&) = default;

 private:
  IndexSubset t_;
  IndexSubset part1_;
  IndexSubset part2_;
};

std::uint64_t binomial(int n, int r);
/// 2^(N-k) * C(N, k). Throws InvalidRange unless 1 <= k <= N-1.
std::uint64_t count_faces(int N, int k);
/// 2^(N-k) * C(N, N-k+1). Throws InvalidRange unless 1 <= k <= N-1.
std::uint64_t count_diagonals(int N, int k);

/// Throws InvalidRange unless 1 <= k <= N-1.
void require_face_range(int N, int k);

/// Adapts a cursor (valid(), advance(), current()) into an input range.
template <class Cursor>
class CursorRange {
 public:
  using value_type = typename Cursor::value_type;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = typename Cursor::value_type;
    using difference_type = std::ptrdiff_t;
    using reference = const value_type&;
    using pointer = const value_type*;

    iterator() = default;
    explicit iterator(Cursor* cursor) : cursor_(cursor) {}

    reference operator*() const { return cursor_->current(); }
    pointer operator->() const { return &cursor_->current(); }
    iterator& operator++() {
      if (!cursor_->advance()) cursor_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.cursor_ == nullptr; }

   private:
    Cursor* cursor_ = nullptr;
  };

  explicit CursorRange(Cursor cursor) : cursor_(std::move(cursor)) {}

  iterator begin() { return iterator(cursor_.valid() ? &cursor_ : nullptr); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Cursor cursor_;
};

/// Lexicographic k-combinations of {0, ..., N-1}.
class SubsetCursor {
 public:
  using value_type = IndexSubset;
  SubsetCursor(int N, int k);
  bool valid() const { return valid_; }
  bool advance();
  const IndexSubset& current() const { return current_; }

 private:
  int n_;
  std::vector<int> indices_;
  IndexSubset current_;
  bool valid_ = true;
};

/// Subset-major; for each subset the translation bits count up in binary.
class FaceCursor {
 public:
  using value_type = FaceLabel;
  FaceCursor(int N, int k);
  bool valid() const { return subsets_.valid(); }
  bool advance();
  const FaceLabel& current() const { return current_; }

 private:
  void refresh();

  SubsetCursor subsets_;
  int free_count_;
  std::uint64_t translation_ = 0;
  FaceLabel current_;
};

/// Subset-major over T (|T| = N-k+1); for each T, the members of
/// T \ {min T} assigned to part2 count up in binary from the empty set.
class DiagonalCursor {
 public:
  using value_type = DiagonalLabel;
  DiagonalCursor(int N, int k);
  bool valid() const { return subsets_.valid(); }
  bool advance();
  const DiagonalLabel& current() const { return current_; }

 private:
  void refresh();

  SubsetCursor subsets_;
  int movable_count_;
  std::uint64_t mask_ = 0;
  DiagonalLabel current_;
};

using SubsetStream = CursorRange<SubsetCursor>;
using FaceStream = CursorRange<FaceCursor>;
using DiagonalStream = CursorRange<DiagonalCursor>;

/// Throws InvalidRange unless 0 <= k <= N.
SubsetStream k_subsets(int N, int k);
/// Throws InvalidRange unless 1 <= k <= N-1.
FaceStream face_labels(int N, int k);
/// Throws InvalidRange unless 1 <= k <= N-1.
DiagonalStream diagonal_labels(int N, int k);

}  // namespace plaw
