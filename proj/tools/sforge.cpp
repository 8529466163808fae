// Command-line front end: design / exhaustive / evaluate / bound / chart /
// lattice subcommands over the sforge library.  Exit codes: 0 success,
// 1 runtime or search failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sforge/bounds.hpp"
#include "sforge/catalog.hpp"
#include "sforge/generator.hpp"
#include "sforge/ivp.hpp"
#include "sforge/lattice.hpp"
#include "sforge/metrics.hpp"
#include "sforge/search.hpp"

namespace {

using namespace sforge;

std::string fmt(double v, int digits = 7) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string fmt_vec(const std::vector<double>& v, int digits = 7) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << std::fixed << std::setprecision(digits) << v[i];
  }
  os << ')';
  return os.str();
}

CenterDensityTable load_table(const std::string& flag_path) {
  if (!flag_path.empty()) return CenterDensityTable::with_overrides(flag_path);
  if (const char* env = std::getenv("SFORGE_DENSITY_TABLE"); env && *env)
    return CenterDensityTable::with_overrides(env);
  return CenterDensityTable::defaults();
}

std::vector<int> parse_b(const std::string& spec) {
  std::vector<int> b;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      b.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--b", "expected comma-separated integers");
    }
  }
  if (b.empty()) throw CLI::ValidationError("--b", "empty exponent list");
  return b;
}

void print_search_result(const std::string& method, const SearchConfig& cfg,
                         const SearchResult& res) {
  std::cout << method << ": M=" << cfg.M << " n=" << cfg.n;
  if (method == "heuristic")
    std::cout << " Q=" << cfg.Q << " seed=" << cfg.seed;
  std::cout << '\n';
  std::cout << "b = " << format_b(res.best_b) << '\n';
  std::cout << "d = " << fmt(res.best_d) << '\n';
  std::cout << "d_check = " << fmt(res.d_check)
            << ", ratio d/d_check = " << fmt(res.ratio) << '\n';
  std::cout << "y = " << fmt_vec(res.best_y) << '\n';
  std::cout << "x = " << fmt_vec(res.best_x) << '\n';
  std::cout << "evaluated = " << res.evaluated
            << ", duplicates skipped = " << res.duplicates_skipped << '\n';
}

void save_record(const std::string& path, const CodeRecord& rec) {
  append_record(path, rec);
  std::cout << "appended record to " << path << '\n';
}

int run_design(int M, int n, long long Q, std::uint64_t seed, int workers,
               const std::string& table_path, const std::string& out) {
  const CenterDensityTable table = load_table(table_path);
  SearchConfig cfg;
  cfg.M = M;
  cfg.n = n;
  cfg.Q = Q;
  cfg.seed = seed;
  cfg.parallel_workers = workers;
  const SearchResult res = heuristic_search(cfg, table);
  print_search_result("heuristic", cfg, res);
  if (!out.empty()) {
    CodeRecord rec{M,       n,    res.best_b, res.best_y,  res.best_d,
                   res.d_check, res.ratio, Q,      seed,
                   "heuristic", utc_timestamp_now()};
    save_record(out, rec);
  }
  return 0;
}

int run_exhaustive(int M, int n, int workers, const std::string& table_path,
                   const std::string& out) {
  const CenterDensityTable table = load_table(table_path);
  const SearchResult res = exhaustive_search(M, n, workers, table);
  SearchConfig cfg;
  cfg.M = M;
  cfg.n = n;
  print_search_result("exhaustive", cfg, res);
  if (!out.empty()) {
    CodeRecord rec{M,       n, res.best_b, res.best_y, res.best_d,
                   res.d_check, res.ratio, 0,      0,
                   "exhaustive", utc_timestamp_now()};
    save_record(out, rec);
  }
  return 0;
}

int run_evaluate(int M, int n, const std::string& b_spec,
                 const std::string& table_path, const std::string& out) {
  const std::vector<int> b = parse_b(b_spec);
  for (int v : b)
    if (v < 1)
      throw std::invalid_argument("rotation exponents must be positive");
  const CyclicGenerator g = CyclicGenerator::create(M, n, b);
  const IVPSolution sol = solve_ivp(g);
  std::cout << "evaluate: M=" << M << " n=" << n << " b=" << format_b(g.b)
            << '\n';
  std::cout << "d = " << fmt(sol.d) << '\n';
  std::cout << "y = " << fmt_vec(sol.y) << '\n';
  std::cout << "x = " << fmt_vec(sol.x) << '\n';
  double d_check = 0.0, ratio = 0.0;
  if (n % 2 == 0 && M >= 2) {
    const CenterDensityTable table = load_table(table_path);
    const BoundInfo info = bound_info(M, n / 2, table);
    d_check = info.d_check;
    ratio = sol.d / info.d_check;
    std::cout << "d_check = " << fmt(d_check) << ", ratio d/d_check = "
              << fmt(ratio) << '\n';
  }
  if (!out.empty()) {
    CodeRecord rec{M,       n, g.b, sol.y, sol.d, d_check, ratio, 0, 0,
                   "manual", utc_timestamp_now()};
    save_record(out, rec);
  }
  return 0;
}

int run_bound(int M, int n, const std::string& table_path) {
  const CenterDensityTable table = load_table(table_path);
  const int k = n / 2;
  const BoundInfo info = bound_info(M, k, table);
  std::cout << "M = " << M << ", n = " << n << " (k = " << k << ")\n";
  std::cout << "lambda_" << k << " = " << fmt(info.lambda_k) << " ("
            << table.source(k) << ")\n";
  std::cout << "target distance d_check = " << fmt(info.d_check, 3) << " ("
            << fmt(info.d_check) << ")"
            << (info.vacuous ? "  [vacuous: clamped to the sphere diameter]"
                             : "")
            << '\n';
  std::cout << "candidate norm W = " << fmt(info.W, 3) << " (" << fmt(info.W)
            << ")\n";
  if (!info.vacuous)
    std::cout << "max points at d_check: "
              << fmt(max_points_bound(info.d_check, k, table), 1) << '\n';
  return 0;
}

int run_chart(const std::string& catalog_path, const std::string& out,
              const std::string& ratio_out) {
  const IngestReport report = load_catalog(catalog_path);
  for (const std::string& reason : report.rejected)
    std::cerr << "rejected: " << reason << '\n';
  if (report.accepted.empty())
    throw std::runtime_error("catalog holds no verifiable records");
  {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    write_chart_csv(os, report.accepted);
  }
  std::cout << "wrote chart data for " << report.accepted.size()
            << " records to " << out << '\n';
  if (!ratio_out.empty()) {
    const std::vector<CodeRecord> best = best_per_code(report.accepted);
    std::ofstream os(ratio_out);
    if (!os) throw std::runtime_error("cannot write " + ratio_out);
    write_ratio_csv(os, best);
    std::cout << "wrote ratio data for " << best.size() << " records to "
              << ratio_out << '\n';
  }
  return 0;
}

int run_lattice(int M, int n, const std::string& b_spec,
                const std::string& table_path, const std::string& out,
                bool extend) {
  const std::vector<int> b = parse_b(b_spec);
  const CyclicGenerator g = CyclicGenerator::create(M, n, b);
  const AssociatedLattice lat = associated_lattice(g);
  const CenterDensityTable table = load_table(table_path);
  const BoundInfo info = bound_info(M, g.k, table);
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write " + out);
  write_lattice_csv(os, lat, info.W, extend);
  std::cout << "wrote " << lat.representatives.size()
            << " representatives (shell radius " << fmt(info.W, 3) << ") to "
            << out << '\n';
  std::cout << "shortest folded representative norm: "
            << fmt(min_folded_norm(lat)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sforge: design, evaluate and catalog cyclic group codes"};
  app.require_subcommand(1);

  int dim = 4, points = 2, workers = 0;
  long long candidates = 512;
  std::uint64_t seed = 0;
  std::string b_spec, out, catalog_path, table_path, ratio_out;
  bool extend = false;

  auto even_dim = CLI::Validator(
      [](std::string& s) {
        if (std::stoi(s) % 2 != 0) return std::string("dimension must be even");
        return std::string();
      },
      "EVEN");

  CLI::App* design = app.add_subcommand(
      "design", "shell-constrained random search for a good generator");
  design->add_option("--dim", dim, "even ambient dimension n")
      ->required()
      ->check(CLI::PositiveNumber)
      ->check(even_dim);
  design->add_option("--points", points, "number of points M")->required();
  design->add_option("--candidates", candidates, "distinct candidates Q");
  design->add_option("--seed", seed, "RNG seed");
  design->add_option("--workers", workers, "worker threads (0 = auto)");
  design->add_option("--density-table", table_path, "center density CSV");
  design->add_option("--out", out, "catalog file to append to");

  CLI::App* exhaustive = app.add_subcommand(
      "exhaustive", "isometry-reduced brute force over all generators");
  exhaustive->add_option("--dim", dim, "even ambient dimension n")
      ->required()
      ->check(CLI::PositiveNumber)
      ->check(even_dim);
  exhaustive->add_option("--points", points, "number of points M")->required();
  exhaustive->add_option("--workers", workers, "worker threads (0 = auto)");
  exhaustive->add_option("--density-table", table_path, "center density CSV");
  exhaustive->add_option("--out", out, "catalog file to append to");

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "solve the initial vector problem for a given generator");
  evaluate->add_option("--dim", dim, "ambient dimension n")
      ->required()
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--points", points, "number of points M")->required();
  evaluate->add_option("--b", b_spec, "comma-separated rotation exponents")
      ->required();
  evaluate->add_option("--density-table", table_path, "center density CSV");
  evaluate->add_option("--out", out, "catalog file to append to");

  CLI::App* bound = app.add_subcommand(
      "bound", "target distance and candidate norm for (M, n)");
  bound->add_option("--dim", dim, "even ambient dimension n")
      ->required()
      ->check(CLI::PositiveNumber)
      ->check(even_dim);
  bound->add_option("--points", points, "number of points M")->required();
  bound->add_option("--density-table", table_path, "center density CSV");

  CLI::App* chart = app.add_subcommand(
      "chart", "efficiency chart data from a catalog");
  chart->add_option("--catalog", catalog_path, "catalog JSONL file")
      ->required();
  chart->add_option("--out", out, "chart CSV output")->required();
  chart->add_option("--ratio-out", ratio_out, "bound-ratio CSV output");

  CLI::App* lattice = app.add_subcommand(
      "lattice", "associated lattice plot data for a generator");
  lattice->add_option("--dim", dim, "even ambient dimension n (>= 4)")
      ->required()
      ->check(CLI::PositiveNumber)
      ->check(even_dim);
  lattice->add_option("--points", points, "number of points M")->required();
  lattice->add_option("--b", b_spec, "comma-separated rotation exponents")
      ->required();
  lattice->add_option("--density-table", table_path, "center density CSV");
  lattice->add_option("--out", out, "lattice CSV output")->required();
  lattice->add_flag("--extend", extend,
                    "periodically extend the window to [-M/4, 5M/4)^2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(design))
      return run_design(points, dim, candidates, seed, workers, table_path,
                        out);
    if (app.got_subcommand(exhaustive))
      return run_exhaustive(points, dim, workers, table_path, out);
    if (app.got_subcommand(evaluate))
      return run_evaluate(points, dim, b_spec, table_path, out);
    if (app.got_subcommand(bound)) return run_bound(points, dim, table_path);
    if (app.got_subcommand(chart))
      return run_chart(catalog_path, out, ratio_out);
    if (app.got_subcommand(lattice))
      return run_lattice(points, dim, b_spec, table_path, out, extend);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
