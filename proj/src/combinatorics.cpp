#include "plaw/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace plaw {

namespace {

// Bit counters for translations and splits are 64-bit.
constexpr int kMaxDimension = 62;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw InvalidRange("count overflows 64 bits");
  }
  return a * b;
}

std::size_t subset_size(int N, int k) {
  if (N < 0 || k < 0 || k > N) {
    throw InvalidRange("k = " + std::to_string(k) + " outside 0..N for N = " + std::to_string(N));
  }
  return static_cast<std::size_t>(k);
}

}  // namespace

IndexSubset::IndexSubset(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0) throw LabelOutOfRange("negative generator index");
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw LabelOutOfRange("subset indices must be strictly increasing");
    }
  }
}

bool IndexSubset::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

IndexSubset IndexSubset::complement(int universe) const {
  std::vector<int> rest;
  rest.reserve(universe > static_cast<int>(size()) ? universe - size() : 0);
  for (int i = 0; i < universe; ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return IndexSubset(std::move(rest));
}

std::string IndexSubset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(indices_[i]);
  }
  out += '}';
  return out;
}

std::string FaceLabel::translation_string() const {
  std::string out;
  out.reserve(translation.size());
  for (bool b : translation) out += b ? '1' : '0';
  return out;
}

DiagonalLabel DiagonalLabel::from_parts(const IndexSubset& first, const IndexSubset& second) {
  std::vector<int> all;
  std::merge(first.begin(), first.end(), second.begin(), second.end(), std::back_inserter(all));
  if (all.empty()) throw LabelOutOfRange("diagonal split of an empty set");
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw LabelOutOfRange("diagonal split parts overlap");
  }
  DiagonalLabel label;
  label.t_ = IndexSubset(std::move(all));
  const bool keep = !first.empty() && first.min() == label.t_.min();
  label.part1_ = keep ? first : second;
  label.part2_ = keep ? second : first;
  return label;
}

std::uint64_t binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    // result * (n - r + i) / i stays integral at every step.
    const std::uint64_t numer = static_cast<std::uint64_t>(n - r + i);
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    result = checked_mul(result / g, numer / (static_cast<std::uint64_t>(i) / g));
  }
  return result;
}

void require_face_range(int N, int k) {
  if (N > kMaxDimension) {
    throw InvalidRange("N = " + std::to_string(N) + " exceeds the supported maximum " +
                       std::to_string(kMaxDimension));
  }
  if (k < 1 || k > N - 1) {
    throw InvalidRange("k = " + std::to_string(k) + " outside 1..N-1 for N = " + std::to_string(N));
  }
}

std::uint64_t count_faces(int N, int k) {
  require_face_range(N, k);
  return checked_mul(std::uint64_t{1} << (N - k), binomial(N, k));
}

std::uint64_t count_diagonals(int N, int k) {
  require_face_range(N, k);
  return checked_mul(std::uint64_t{1} << (N - k), binomial(N, N - k + 1));
}

SubsetCursor::SubsetCursor(int N, int k) : n_(N), indices_(subset_size(N, k)) {
  for (int i = 0; i < k; ++i) indices_[static_cast<std::size_t>(i)] = i;
  current_ = IndexSubset(indices_);
}

bool SubsetCursor::advance() {
  if (!valid_) return false;
  const int k = static_cast<int>(indices_.size());
  int i = k - 1;
  while (i >= 0 && indices_[static_cast<std::size_t>(i)] == n_ - k + i) --i;
  if (i < 0) {
    valid_ = false;
    return false;
  }
  ++indices_[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) {
    indices_[static_cast<std::size_t>(j)] = indices_[static_cast<std::size_t>(j - 1)] + 1;
  }
  current_ = IndexSubset(indices_);
  return true;
}

FaceCursor::FaceCursor(int N, int k)
    : subsets_((require_face_range(N, k), SubsetCursor(N, k))), free_count_(N - k) {
  refresh();
}

void FaceCursor::refresh() {
  current_.subset = subsets_.current();
  current_.translation.assign(static_cast<std::size_t>(free_count_), false);
  for (int j = 0; j < free_count_; ++j) {
    current_.translation[static_cast<std::size_t>(j)] = ((translation_ >> (free_count_ - 1 - j)) & 1U) != 0;
  }
}

bool FaceCursor::advance() {
  if (!valid()) return false;
  if (++translation_ == (std::uint64_t{1} << free_count_)) {
    translation_ = 0;
    if (!subsets_.advance()) return false;
  }
  refresh();
  return true;
}

DiagonalCursor::DiagonalCursor(int N, int k)
    : subsets_((require_face_range(N, k), SubsetCursor(N, N - k + 1))), movable_count_(N - k) {
  refresh();
}

void DiagonalCursor::refresh() {
  const IndexSubset& t = subsets_.current();
  std::vector<int> first{t.min()};
  std::vector<int> second;
  for (int j = 0; j < movable_count_; ++j) {
    const int index = t[static_cast<std::size_t>(j + 1)];
    if (((mask_ >> (movable_count_ - 1 - j)) & 1U) != 0) {
      second.push_back(index);
    } else {
      first.push_back(index);
    }
  }
  current_ = DiagonalLabel::from_parts(IndexSubset(std::move(first)), IndexSubset(std::move(second)));
}

bool DiagonalCursor::advance() {
  if (!valid()) return false;
  if (++mask_ == (std::uint64_t{1} << movable_count_)) {
    mask_ = 0;
    if (!subsets_.advance()) return false;
  }
  refresh();
  return true;
}

SubsetStream k_subsets(int N, int k) {
  return SubsetStream(SubsetCursor(N, k));
}

FaceStream face_labels(int N, int k) {
  return FaceStream(FaceCursor(N, k));
}

DiagonalStream diagonal_labels(int N, int k) {
  return DiagonalStream(DiagonalCursor(N, k));
}

}  // namespace plaw
