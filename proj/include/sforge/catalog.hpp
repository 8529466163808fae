#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sforge {

/// Persisted catalog entry, one JSON object per line.
struct CodeRecord {
  int M = 0;
  int n = 0;
  std::vector<int> b;
  std::vector<double> y;
  double d = 0.0;
  double d_check = 0.0;
  double ratio = 0.0;
  long long Q = 0;
  std::uint64_t seed = 0;
  std::string method;  // heuristic | exhaustive | manual
  std::string created_at;
};

std::string to_json_line(const CodeRecord& rec);
CodeRecord record_from_json(const std::string& line);

struct IngestReport {
  std::vector<CodeRecord> accepted;
  std::vector<std::string> rejected;  // one reason per bad line
};

/// Parses and re-verifies every line: the stored generator is re-solved and
/// must reproduce d within 1e-6.  Failing records are rejected with a reason,
/// never corrected.
IngestReport load_catalog(const std::string& path);

/// Collapses to at most one record per (M, n): larger d wins, ties keep the
/// earlier record.
std::vector<CodeRecord> best_per_code(const std::vector<CodeRecord>& records);

/// Appends one record as a single line (atomic enough for per-line appends).
void append_record(const std::string& path, const CodeRecord& rec);

std::string utc_timestamp_now();

}  // namespace sforge
