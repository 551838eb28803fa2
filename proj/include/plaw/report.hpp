#pragma once

// json / csv / aligned-table renderings of verification reports and sweep
// summaries. Scalars are printed by format_scalar in every format, so json
// and csv carry identical numeric text.

#include "plaw/harness.hpp"
#include "plaw/parallelotope.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace plaw {

enum class Format { json, csv, table };

/// Accepts "json", "csv" or "table".
Format parse_format(std::string_view text);

template <Scalar T>
std::string render_reports(const std::vector<VerificationReport<T>>& reports, Format format);

template <Scalar T>
std::string render_sweep(const SweepSummary<T>& summary, Format format);

}  // namespace plaw
