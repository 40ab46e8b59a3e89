#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lpo/orbitope.hpp"
#include "lpo/seq.hpp"

namespace lpo {

struct LoadedLine {
  SignSeq u;
  std::optional<SignSeq> v;  // present for pair lines
  long long line_number = 0;
};

/// Reads sign-string lines ("-++-+--" or "u v"), JSON-lines records, blank
/// lines and '#' comments. Parse failures throw std::runtime_error with
/// "path:line:column" diagnostics.
std::vector<LoadedLine> load_sequences(const std::string& path);

/// Same grammar, from an in-memory buffer (source names the diagnostics).
std::vector<LoadedLine> parse_sequences(const std::string& text, const std::string& source);

nlohmann::json record_json(const LegendrePairRecord& rec);
LegendrePairRecord record_from_json(const nlohmann::json& j);

nlohmann::json dim_report_json(const DimReport& r);
nlohmann::json main0_json(const Main0Report& r);
nlohmann::json feasible_json(const FeasibleDimReport& r);
nlohmann::json compression_profile_json(const CompressionProfile& r);

}  // namespace lpo
