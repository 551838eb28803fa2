#include "plaw/input_document.hpp"

#include "plaw/error.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace plaw {

namespace {

using nlohmann::json;

bool is_decimal_text(std::string_view s) {
  return s.find('/') == std::string_view::npos && s.find_first_of(".eE") != std::string_view::npos;
}

std::string entry_text(const json& entry, bool& decimal) {
  switch (entry.type()) {
    case json::value_t::number_integer:
      return std::to_string(entry.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return std::to_string(entry.get<std::uint64_t>());
    case json::value_t::number_float: {
      // Shortest round-trip text, so 0.1 reads back as 1/10 in exact mode.
      char buf[64];
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, entry.get<double>());
      decimal = true;
      return std::string(buf, ptr);
    }
    case json::value_t::string: {
      std::string text = entry.get<std::string>();
      decimal = is_decimal_text(text);
      return text;
    }
    default:
      throw ParseError("vector entries must be numbers or numeric strings, got " + std::string(entry.type_name()));
  }
}

}  // namespace

InputDocument parse_input_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vectors")) throw ParseError("input must be an object with key \"vectors\"");
  const json& vectors = doc["vectors"];
  if (!vectors.is_array()) throw ParseError("\"vectors\" must be an array of rows");
  if (vectors.size() < 2) throw ParseError("input needs at least two vectors");

  InputDocument out;
  for (const json& row : vectors) {
    if (!row.is_array() || row.empty()) throw ParseError("each vector must be a non-empty array");
    if (!out.rows.empty() && row.size() != out.rows.front().size()) {
      throw ParseError("ragged rows: lengths " + std::to_string(out.rows.front().size()) + " and " +
                       std::to_string(row.size()));
    }
    std::vector<std::string> entries;
    for (const json& entry : row) {
      bool decimal = false;
      entries.push_back(entry_text(entry, decimal));
      // Validate once in exact mode, which accepts every supported spelling.
      (void)ScalarTraits<Rational>::parse(entries.back());
      out.has_decimals = out.has_decimals || decimal;
    }
    out.rows.push_back(std::move(entries));
  }
  return out;
}

InputDocument read_input_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_input_document(buffer.str());
}

template <Scalar T>
std::vector<Vector<T>> document_vectors(const InputDocument& doc) {
  std::vector<Vector<T>> vs;
  for (const auto& row : doc.rows) {
    Vector<T> v;
    for (const auto& text : row) v.push_back(ScalarTraits<T>::parse(text));
    vs.push_back(std::move(v));
  }
  return vs;
}

template std::vector<Vector<Rational>> document_vectors<Rational>(const InputDocument&);
template std::vector<Vector<double>> document_vectors<double>(const InputDocument&);

std::string write_input_document(const std::vector<Vector<Rational>>& vectors) {
  json rows = json::array();
  for (const auto& v : vectors) {
    json row = json::array();
    for (const Rational& x : v) {
      if (denominator(x) == 1 && abs(numerator(x)) < Integer(std::numeric_limits<std::int64_t>::max())) {
        row.push_back(numerator(x).convert_to<std::int64_t>());
      } else {
        row.push_back(format_scalar(x));
      }
    }
    rows.push_back(std::move(row));
  }
  return json{{"vectors", rows}}.dump() + "\n";
}

std::string write_input_document(const IntegerRows& rows) {
  return write_input_document(to_vectors<Rational>(rows));
}

}  // namespace plaw
