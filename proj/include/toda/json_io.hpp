#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toda/state.hpp"

namespace toda {

using Json = nlohmann::json;

/// Serializes with sorted keys and every float printed through "%.17g", so
/// equal inputs give byte-identical files (nlohmann's own dump() prints the
/// shortest round-trip form instead).
std::string dump_deterministic(const Json& j, int indent = 2);

void write_json_file(const Json& j, const std::string& path);

Json state_to_json(const TodaPhasePoint& s);
TodaPhasePoint state_from_json(const Json& j);

Json vector_to_json(const Vector& v);

/// Minimal CSV emitter with a header row and %.17g numbers.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  /// "# ..." line ahead of the header; carries the run configuration.
  void comment(const std::string& text);
  void header(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);

 private:
  std::FILE* f_ = nullptr;
};

}  // namespace toda
