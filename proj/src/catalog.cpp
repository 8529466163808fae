#include "sforge/catalog.hpp"

#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "sforge/ivp.hpp"

namespace sforge {

namespace {

constexpr double kVerifyTol = 1e-6;

using json = nlohmann::ordered_json;

}  // namespace

std::string to_json_line(const CodeRecord& rec) {
  json j;
  j["M"] = rec.M;
  j["n"] = rec.n;
  j["b"] = rec.b;
  j["y"] = rec.y;
  j["d"] = rec.d;
  j["d_check"] = rec.d_check;
  j["ratio"] = rec.ratio;
  j["Q"] = rec.Q;
  j["seed"] = rec.seed;
  j["method"] = rec.method;
  j["created_at"] = rec.created_at;
  return j.dump();
}

CodeRecord record_from_json(const std::string& line) {
  const json j = json::parse(line);
  CodeRecord rec;
  rec.M = j.at("M").get<int>();
  rec.n = j.at("n").get<int>();
  rec.b = j.at("b").get<std::vector<int>>();
  rec.y = j.at("y").get<std::vector<double>>();
  rec.d = j.at("d").get<double>();
  rec.d_check = j.at("d_check").get<double>();
  rec.ratio = j.at("ratio").get<double>();
  rec.Q = j.at("Q").get<long long>();
  rec.seed = j.at("seed").get<std::uint64_t>();
  rec.method = j.at("method").get<std::string>();
  rec.created_at = j.at("created_at").get<std::string>();
  return rec;
}

IngestReport load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog: " + path);
  IngestReport report;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    CodeRecord rec;
    try {
      rec = record_from_json(line);
    } catch (const std::exception& e) {
      report.rejected.push_back(where + ": malformed record: " + e.what());
      continue;
    }
    if (!std::isfinite(rec.d)) {
      report.rejected.push_back(where + ": non-finite distance");
      continue;
    }
    try {
      const IVPSolution sol =
          solve_ivp(CyclicGenerator::create(rec.M, rec.n, rec.b));
      if (std::fabs(sol.d - rec.d) > kVerifyTol) {
        report.rejected.push_back(
            where + ": stored d = " + std::to_string(rec.d) +
            " does not reproduce (solved d = " + std::to_string(sol.d) + ")");
        continue;
      }
    } catch (const std::exception& e) {
      report.rejected.push_back(where + ": verification failed: " + e.what());
      continue;
    }
    report.accepted.push_back(std::move(rec));
  }
  return report;
}

std::vector<CodeRecord> best_per_code(const std::vector<CodeRecord>& records) {
  std::map<std::pair<int, int>, std::size_t> best;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto key = std::make_pair(records[i].M, records[i].n);
    const auto it = best.find(key);
    if (it == best.end() || records[i].d > records[it->second].d)
      best[key] = i;  // ties keep the earlier record
  }
  std::vector<CodeRecord> out;
  out.reserve(best.size());
  for (const auto& [key, idx] : best) out.push_back(records[idx]);
  return out;
}

void append_record(const std::string& path, const CodeRecord& rec) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open catalog for append: " + path);
  out << to_json_line(rec) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string utc_timestamp_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace sforge
