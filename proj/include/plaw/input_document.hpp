#pragma once

// The generator file format:
//
//   { "vectors": [[1, 0, "1/2"], [0, 1, 2.5]] }
//
// Entries are JSON integers, JSON decimals, or strings holding an integer,
// a "p/q" fraction or a decimal.

#include "plaw/exterior_measure.hpp"
#include "plaw/harness.hpp"
#include "plaw/scalar.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace plaw {

struct InputDocument {
  /// Entry text, row-major; every row has the same length.
  std::vector<std::vector<std::string>> rows;
  /// True when any entry was written as a decimal rather than an integer or
  /// fraction.
  bool has_decimals = false;

  /// Exact unless the document contains decimals.
  Mode default_mode() const { return has_decimals ? Mode::floating : Mode::exact; }
};

/// Throws ParseError on malformed JSON, a missing "vectors" key, ragged
/// rows, fewer than two rows, or unparseable entries.
InputDocument parse_input_document(std::string_view json_text);
InputDocument read_input_document(const std::filesystem::path& path);

/// Entries converted to the scalar type; exact conversion never rounds.
template <Scalar T>
std::vector<Vector<T>> document_vectors(const InputDocument& doc);

/// Integers as JSON numbers, other rationals as "p/q" strings.
std::string write_input_document(const std::vector<Vector<Rational>>& vectors);
std::string write_input_document(const IntegerRows& rows);

}  // namespace plaw
