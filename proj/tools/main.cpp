// Command-line front end for the robust orthogonal-complement PCA library.
// Thin synchronous shell over the C API: CSV in, CSV out, exit codes
// 0 (success), 2 (I/O or parse), 3 (configuration).
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rocpca.h"

namespace {

namespace fs = std::filesystem;

struct CliExit {
  int code;
  std::string message;
};

int exit_code_for(rocpca_status status) {
  switch (status) {
    case ROCPCA_OK:
      return 0;
    case ROCPCA_ERR_DATA:
    case ROCPCA_ERR_DIMENSION:
      return 2;
    case ROCPCA_ERR_INVALID_ARGUMENT:
    case ROCPCA_ERR_CONFIG:
    case ROCPCA_ERR_FEASIBILITY:
      return 3;
    default:
      return 1;
  }
}

void check(rocpca_status status, const std::string& context) {
  if (status == ROCPCA_OK) return;
  throw CliExit{exit_code_for(status), context + ": " + rocpca_last_error()};
}

using ConfigPtr = std::unique_ptr<rocpca_config, void (*)(rocpca_config*)>;
using DatasetPtr = std::unique_ptr<rocpca_dataset, void (*)(rocpca_dataset*)>;
using ResultPtr = std::unique_ptr<rocpca_result, void (*)(rocpca_result*)>;
using SimPtr = std::unique_ptr<rocpca_simulation, void (*)(rocpca_simulation*)>;
using TablePtr = std::unique_ptr<rocpca_table, void (*)(rocpca_table*)>;

ConfigPtr make_config() {
  ConfigPtr config(rocpca_config_new(), rocpca_config_free);
  if (!config) throw CliExit{1, "out of memory"};
  return config;
}

DatasetPtr make_dataset(const double* values, int64_t rows, int64_t cols) {
  DatasetPtr data(rocpca_dataset_new(values, rows, cols), rocpca_dataset_free);
  if (!data) throw CliExit{1, std::string("dataset: ") + rocpca_last_error()};
  return data;
}

std::string format_value(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string trimmed(const std::string& text) {
  size_t begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  size_t end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

bool parse_cell(const std::string& cell, double& out) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  size_t start = 0;
  for (;;) {
    size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

struct Csv {
  std::vector<double> values;
  int64_t rows = 0;
  int64_t cols = 0;
};

// Reads a numeric CSV. A non-numeric first line is treated as a header and
// skipped; every later cell must parse as a number and every row must have
// the same width.
Csv read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliExit{2, "cannot open '" + path + "'"};
  Csv csv;
  std::string line;
  long long line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    std::vector<std::string> cells = split(line, ',');
    std::vector<double> row;
    row.reserve(cells.size());
    size_t bad_col = cells.size();
    for (size_t j = 0; j < cells.size(); ++j) {
      double value = 0.0;
      if (!parse_cell(trimmed(cells[j]), value)) {
        bad_col = j;
        break;
      }
      row.push_back(value);
    }
    if (bad_col != cells.size()) {
      if (!seen_data && line_no == 1) continue;  // header row
      throw CliExit{2, path + ": line " + std::to_string(line_no) +
                           ", column " + std::to_string(bad_col + 1) +
                           ": cannot parse '" + trimmed(cells[bad_col]) +
                           "' as a number"};
    }
    if (!seen_data) {
      csv.cols = static_cast<int64_t>(row.size());
      seen_data = true;
    } else if (static_cast<int64_t>(row.size()) != csv.cols) {
      throw CliExit{2, path + ": line " + std::to_string(line_no) +
                           ": expected " + std::to_string(csv.cols) +
                           " columns, found " + std::to_string(row.size())};
    }
    csv.values.insert(csv.values.end(), row.begin(), row.end());
    ++csv.rows;
  }
  if (!seen_data)
    throw CliExit{2, path + ": no numeric rows found"};
  return csv;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw CliExit{2, "cannot write '" + path.string() + "'"};
  return out;
}

void write_matrix_csv(const fs::path& path, const double* data, int64_t rows,
                      int64_t cols) {
  std::ofstream out = open_output(path);
  std::string line;
  for (int64_t i = 0; i < rows; ++i) {
    line.clear();
    for (int64_t j = 0; j < cols; ++j) {
      if (j) line += ',';
      line += format_value(data[i * cols + j]);
    }
    line += '\n';
    out << line;
  }
  out.close();
  if (!out) throw CliExit{2, "failed writing '" + path.string() + "'"};
}

// Flagged units, 1-based: "row" lines in row mode, "row,col" in element mode.
void write_index_csv(const fs::path& path, const int64_t* values,
                     int64_t count, bool element_mode) {
  std::ofstream out = open_output(path);
  if (element_mode) {
    out << "row,col\n";
    for (int64_t i = 0; i < count; ++i)
      out << values[2 * i] + 1 << ',' << values[2 * i + 1] + 1 << '\n';
  } else {
    out << "row\n";
    for (int64_t i = 0; i < count; ++i) out << values[i] + 1 << '\n';
  }
  out.close();
  if (!out) throw CliExit{2, "failed writing '" + path.string() + "'"};
}

fs::path prepare_output_dir(const std::string& dir) {
  fs::path path(dir.empty() ? "." : dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) throw CliExit{2, "cannot create '" + path.string() + "': " + ec.message()};
  return path;
}

// Options are collected as strings and forwarded verbatim so that the
// library performs all validation; only supplied keys are forwarded.
using OptionMap = std::map<std::string, std::string>;

void add_config_option(CLI::App* sub, OptionMap& opts, const std::string& flag,
                       const std::string& key, const std::string& help) {
  sub->add_option_function<std::string>(
      flag, [&opts, key](const std::string& value) { opts[key] = value; },
      help);
}

void add_solver_flags(CLI::App* sub, OptionMap& opts) {
  add_config_option(sub, opts, "--rank", "rank",
                    "Number of principal directions to keep (default 1)");
  add_config_option(sub, opts, "--mode", "mode",
                    "Outlier unit: row or element (default row)");
  add_config_option(sub, opts, "--q", "q",
                    "Outlier budget: rows (row mode) or entries (element mode)");
  add_config_option(sub, opts, "--rule", "rule",
                    "quantile (budgeted), soft, hard, or hard-ridge");
  add_config_option(sub, opts, "--lambda", "lambda",
                    "Penalty level for soft/hard/hard-ridge rules");
  add_config_option(sub, opts, "--eta", "eta", "Ridge weight (default 1e-3)");
  add_config_option(sub, opts, "--kappa", "kappa",
                    "Line-search backtracking factor (default 0.1)");
  add_config_option(sub, opts, "--rho", "rho",
                    "Line-search sufficient-decrease factor (default 1e-3)");
  add_config_option(sub, opts, "--window", "window",
                    "Nonmonotone line-search window (default 10)");
  add_config_option(sub, opts, "--nu", "nu",
                    "Budget cooling rate (default 0.05)");
  add_config_option(sub, opts, "--m0", "m0",
                    "Random starts in the scouting phase (default 10)");
  add_config_option(sub, opts, "--n0", "n0",
                    "Outer iterations per scouting start (default 2)");
  add_config_option(sub, opts, "--m1", "m1",
                    "Starts kept until convergence (default 2)");
  add_config_option(sub, opts, "--tol-outer", "tol-outer",
                    "Outer-loop projector tolerance (default 1e-6)");
  add_config_option(sub, opts, "--tol-inner-s", "tol-inner-s",
                    "Inner (mu, S) fixed-point tolerance (default 1e-8)");
  add_config_option(sub, opts, "--tol-grad", "tol-grad",
                    "Manifold gradient tolerance (default 1e-6)");
  add_config_option(sub, opts, "--tol-rel-f", "tol-rel-f",
                    "Objective plateau tolerance (default 1e-10)");
  add_config_option(sub, opts, "--max-outer", "max-outer",
                    "Outer iteration cap (default 200)");
  add_config_option(sub, opts, "--max-inner", "max-inner",
                    "Inner iteration cap (default 500)");
  add_config_option(sub, opts, "--threads", "threads",
                    "Worker threads; 0 = machine parallelism (default 0)");
}

void add_generator_flags(CLI::App* sub, OptionMap& opts) {
  add_config_option(sub, opts, "--n", "n", "Sample count (default 100)");
  add_config_option(sub, opts, "--p", "p", "Ambient dimension (default 10)");
  add_config_option(sub, opts, "--d", "d",
                    "Comma-separated signal scales, e.g. 60,40,20");
  add_config_option(sub, opts, "--sigma2", "sigma2",
                    "Noise variance (default 1)");
  add_config_option(sub, opts, "--outliers", "outliers",
                    "Planted outlier count (default 0)");
  add_config_option(sub, opts, "--leverage", "leverage",
                    "Outlier magnitude (default 0)");
}

// Plain-text config file of `key = value` lines mirroring flag names.
// Values already set by flags win; '#' starts a comment line.
void apply_config_file(const std::string& path, OptionMap& opts) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw CliExit{2, "cannot open '" + path + "'"};
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trimmed(line);
    if (text.empty() || text[0] == '#') continue;
    const size_t eq = text.find('=');
    const std::string key =
        eq == std::string::npos ? "" : trimmed(text.substr(0, eq));
    if (key.empty())
      throw CliExit{3, path + ": line " + std::to_string(line_no) +
                           ": expected `key = value`"};
    opts.emplace(key, trimmed(text.substr(eq + 1)));
  }
}

ConfigPtr build_config(OptionMap opts, const std::string& config_file) {
  apply_config_file(config_file, opts);
  // The library default is a single worker; the CLI default is machine
  // parallelism, capped by an explicit --threads.
  if (opts.find("threads") == opts.end()) opts["threads"] = "0";
  ConfigPtr config = make_config();
  for (const auto& [key, value] : opts)
    check(rocpca_config_set(config.get(), key.c_str(), value.c_str()),
          "--" + key);
  return config;
}

std::vector<double> result_matrix(const rocpca_result* result,
                                  const char* name, int64_t& rows,
                                  int64_t& cols) {
  const double* data = nullptr;
  check(rocpca_result_matrix(result, name, &data, &rows, &cols), name);
  return std::vector<double>(data, data + rows * cols);
}

double result_scalar(const rocpca_result* result, const char* name) {
  double value = 0.0;
  check(rocpca_result_scalar(result, name, &value), name);
  return value;
}

std::vector<int64_t> parse_plan(const std::string& text) {
  std::vector<int64_t> plan;
  for (const std::string& item : split(text, ',')) {
    const std::string cell = trimmed(item);
    int64_t value = 0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end)
      throw CliExit{3, "--plan: cannot parse '" + cell + "' as an integer"};
    plan.push_back(value);
  }
  return plan;
}

struct FitArgs {
  std::string input;
  std::string output_dir = ".";
  std::string truth;
  std::string plan;
  std::string config_file;
  OptionMap opts;
};

void run_fit(const FitArgs& args, bool batch) {
  Csv csv = read_csv(args.input);
  ConfigPtr config = build_config(args.opts, args.config_file);
  DatasetPtr data = make_dataset(csv.values.data(), csv.rows, csv.cols);

  rocpca_result* raw = nullptr;
  if (batch) {
    if (args.plan.empty()) {
      check(rocpca_batch_fit(data.get(), config.get(), nullptr, 0, &raw),
            "batch-fit");
    } else {
      std::vector<int64_t> plan = parse_plan(args.plan);
      check(rocpca_batch_fit(data.get(), config.get(), plan.data(),
                             plan.size(), &raw),
            "batch-fit");
    }
  } else {
    check(rocpca_fit(data.get(), config.get(), &raw), "fit");
  }
  ResultPtr result(raw, rocpca_result_free);

  fs::path out_dir = prepare_output_dir(args.output_dir);
  int64_t rows = 0, cols = 0;
  std::vector<double> v_hat = result_matrix(result.get(), "v_hat", rows, cols);
  write_matrix_csv(out_dir / "v_hat.csv", v_hat.data(), rows, cols);
  const int64_t v_hat_rows = rows, v_hat_cols = cols;
  std::vector<double> m = result_matrix(result.get(), "v_perp", rows, cols);
  write_matrix_csv(out_dir / "v_perp.csv", m.data(), rows, cols);
  m = result_matrix(result.get(), "mu", rows, cols);
  write_matrix_csv(out_dir / "mu.csv", m.data(), rows, cols);
  m = result_matrix(result.get(), "s", rows, cols);
  write_matrix_csv(out_dir / "s.csv", m.data(), rows, cols);

  const int64_t* flagged = nullptr;
  int64_t count = 0;
  int element_mode = 0;
  check(rocpca_result_flagged(result.get(), &flagged, &count, &element_mode),
        "flagged");
  write_index_csv(out_dir / "outliers.csv", flagged, count,
                  element_mode != 0);

  nlohmann::json summary;
  summary["objective"] = result_scalar(result.get(), "objective");
  summary["outer_iterations"] = static_cast<long long>(
      result_scalar(result.get(), "outer_iterations"));
  summary["converged"] = result_scalar(result.get(), "converged") != 0.0;
  summary["stationarity_residual"] =
      result_scalar(result.get(), "stationarity_residual");
  summary["mode"] = element_mode ? "element" : "row";
  summary["flagged_count"] = static_cast<long long>(count);
  if (!args.truth.empty()) {
    Csv truth = read_csv(args.truth);
    DatasetPtr truth_data =
        make_dataset(truth.values.data(), truth.rows, truth.cols);
    DatasetPtr fitted = make_dataset(v_hat.data(), v_hat_rows, v_hat_cols);
    double affinity = 0.0;
    check(rocpca_subspace_affinity(fitted.get(), truth_data.get(), &affinity),
          "--truth '" + args.truth + "'");
    summary["affinity"] = affinity;
  }
  std::ofstream out = open_output(out_dir / "summary.json");
  out << summary.dump(2) << '\n';
  out.close();
  if (!out)
    throw CliExit{2, "failed writing '" + (out_dir / "summary.json").string() +
                         "'"};
}

struct SimulateArgs {
  std::string output_dir = ".";
  std::string config_file;
  OptionMap opts;
};

void run_simulate(const SimulateArgs& args) {
  ConfigPtr config = build_config(args.opts, args.config_file);
  rocpca_simulation* raw = nullptr;
  check(rocpca_simulate(config.get(), &raw), "simulate");
  SimPtr sim(raw, rocpca_simulation_free);

  fs::path out_dir = prepare_output_dir(args.output_dir);
  const std::pair<const char*, const char*> files[] = {
      {"x", "x.csv"},
      {"v_star", "truth_v.csv"},
      {"v_perp_star", "truth_vperp.csv"},
      {"s_star", "truth_s.csv"},
  };
  for (const auto& [name, file] : files) {
    const double* data = nullptr;
    int64_t rows = 0, cols = 0;
    check(rocpca_simulation_matrix(sim.get(), name, &data, &rows, &cols),
          name);
    write_matrix_csv(out_dir / file, data, rows, cols);
  }
  const int64_t* outliers = nullptr;
  int64_t count = 0;
  int element_mode = 0;
  check(rocpca_simulation_outliers(sim.get(), &outliers, &count,
                                   &element_mode),
        "outliers");
  write_index_csv(out_dir / "outlier_index.csv", outliers, count,
                  element_mode != 0);
}

struct ParsedTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

ParsedTable parse_table(const std::string& csv) {
  ParsedTable table;
  for (const std::string& line : split(csv, '\n')) {
    if (line.empty()) continue;
    if (table.columns.empty()) table.columns = split(line, ',');
    else table.rows.push_back(split(line, ','));
  }
  return table;
}

// Measurement columns get a bundled reference value alongside; the rest
// identify the setting and are used to match rows across the two tables.
const std::set<std::string>& metric_columns() {
  static const std::set<std::string> names = {
      "affinity", "M",       "S",
      "JD",       "seconds", "measured_affinity",
      "ceiling_affinity"};
  return names;
}

ParsedTable merge_with_reference(const ParsedTable& measured,
                                 const ParsedTable& reference) {
  std::vector<size_t> key_cols;
  for (size_t c = 0; c < measured.columns.size(); ++c)
    if (!metric_columns().count(measured.columns[c])) key_cols.push_back(c);

  ParsedTable merged;
  for (size_t c = 0; c < measured.columns.size(); ++c) {
    merged.columns.push_back(measured.columns[c]);
    if (metric_columns().count(measured.columns[c]))
      merged.columns.push_back(measured.columns[c] + "_ref");
  }
  for (const std::vector<std::string>& row : measured.rows) {
    const std::vector<std::string>* ref_row = nullptr;
    for (const std::vector<std::string>& candidate : reference.rows) {
      bool match = candidate.size() == row.size();
      for (size_t k : key_cols)
        match = match && candidate[k] == row[k];
      if (match) {
        ref_row = &candidate;
        break;
      }
    }
    std::vector<std::string> out;
    for (size_t c = 0; c < row.size(); ++c) {
      out.push_back(row[c]);
      if (metric_columns().count(measured.columns[c]))
        out.push_back(ref_row ? (*ref_row)[c] : "-");
    }
    merged.rows.push_back(std::move(out));
  }
  return merged;
}

std::string render_table(const ParsedTable& table, const std::string& format) {
  std::string out;
  if (format == "markdown") {
    out += "|";
    for (const std::string& col : table.columns) out += " " + col + " |";
    out += "\n|";
    for (size_t c = 0; c < table.columns.size(); ++c) out += " --- |";
    out += "\n";
    for (const auto& row : table.rows) {
      out += "|";
      for (const std::string& cell : row) out += " " + cell + " |";
      out += "\n";
    }
    return out;
  }
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

struct BenchArgs {
  std::string scenario;
  int reps = 0;
  uint64_t seed = 0;
  std::string format = "csv";
  std::string output;
  std::string config_file;
  OptionMap opts;
};

void run_bench(const BenchArgs& args) {
  ConfigPtr config = build_config(args.opts, args.config_file);
  rocpca_table* raw = nullptr;
  check(rocpca_bench_run(args.scenario.c_str(), args.reps, args.seed,
                         config.get(), &raw),
        "bench");
  TablePtr measured(raw, rocpca_table_free);
  rocpca_table* ref_raw = nullptr;
  check(rocpca_bench_reference(args.scenario.c_str(), &ref_raw), "bench");
  TablePtr reference(ref_raw, rocpca_table_free);

  ParsedTable merged =
      merge_with_reference(parse_table(rocpca_table_csv(measured.get())),
                           parse_table(rocpca_table_csv(reference.get())));
  std::string rendered = render_table(merged, args.format);
  std::cout << rendered;
  if (!args.output.empty()) {
    std::ofstream out = open_output(args.output);
    out << rendered;
    out.close();
    if (!out) throw CliExit{2, "failed writing '" + args.output + "'"};
  }
}

struct PitfallArgs {
  int64_t p = 10001;
  double epsilon = 0.1;
  int64_t n = 50;
  uint64_t seed = 0;
};

void run_pitfall(const PitfallArgs& args) {
  double measured = 0.0;
  double theoretical = 0.0;
  check(rocpca_pitfall_demo(args.p, args.epsilon, args.n, args.seed,
                            &measured, &theoretical),
        "pitfall");
  std::cout << "p = " << args.p << '\n'
            << "epsilon = " << format_value(args.epsilon) << '\n'
            << "n = " << args.n << '\n'
            << "measured_affinity = " << format_value(100.0 * measured) << '\n'
            << "ceiling_affinity = " << format_value(100.0 * theoretical)
            << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Robust orthogonal-complement PCA: joint principal-subspace recovery "
      "and outlier flagging."};
  app.footer(
      "Exit codes: 0 success, 2 I/O or parse error, 3 configuration error.");
  app.require_subcommand(1);

  FitArgs fit_args;
  CLI::App* fit = app.add_subcommand(
      "fit", "Fit on a CSV matrix and write the estimated model");
  fit->add_option("input", fit_args.input, "Input CSV (n rows, p columns)")
      ->required();
  fit->add_option("-o,--output-dir", fit_args.output_dir,
                  "Directory for v_hat/v_perp/mu/s/outliers/summary files");
  fit->add_option("--truth", fit_args.truth,
                  "CSV frame of true directions; adds affinity to summary");
  add_solver_flags(fit, fit_args.opts);
  add_config_option(fit, fit_args.opts, "--seed", "seed",
                    "Seed for multi-start initialization (default 0)");
  fit->add_option("--config", fit_args.config_file,
                  "Config file of `key = value` lines mirroring flag names");

  FitArgs batch_args;
  CLI::App* batch = app.add_subcommand(
      "batch-fit", "Fit batchwise for high ambient dimension");
  batch->add_option("input", batch_args.input, "Input CSV (n rows, p columns)")
      ->required();
  batch->add_option("-o,--output-dir", batch_args.output_dir,
                    "Directory for v_hat/v_perp/mu/s/outliers/summary files");
  batch->add_option("--truth", batch_args.truth,
                    "CSV frame of true directions; adds affinity to summary");
  batch->add_option("--plan", batch_args.plan,
                    "Comma-separated complement sizes per batch, e.g. "
                    "35,35,27 (default: built-in plan)");
  add_solver_flags(batch, batch_args.opts);
  add_config_option(batch, batch_args.opts, "--seed", "seed",
                    "Seed for multi-start initialization (default 0)");
  batch->add_option("--config", batch_args.config_file,
                    "Config file of `key = value` lines mirroring flag names");

  SimulateArgs sim_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Write a synthetic dataset with planted ground truth");
  simulate->add_option("-o,--output-dir", sim_args.output_dir,
                       "Directory for x/truth_v/truth_vperp/truth_s/"
                       "outlier_index files");
  add_config_option(simulate, sim_args.opts, "--rank", "rank",
                    "Number of planted principal directions");
  add_config_option(simulate, sim_args.opts, "--mode", "mode",
                    "Outlier unit: row or element (default row)");
  add_config_option(simulate, sim_args.opts, "--seed", "seed",
                    "Generator seed (default 0)");
  add_generator_flags(simulate, sim_args.opts);
  simulate->add_option("--config", sim_args.config_file,
                       "Config file of `key = value` lines mirroring flag "
                       "names");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench", "Run a named benchmark scenario against bundled reference values");
  bench->add_option("scenario", bench_args.scenario,
                    "One of: table1, table2, table4, table8, pitfall")
      ->required();
  bench->add_option("--reps", bench_args.reps,
                    "Replicates per cell; 0 = scenario default");
  bench->add_option("--seed", bench_args.seed, "Base seed (default 0)");
  bench->add_option("--format", bench_args.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  bench->add_option("-o,--output", bench_args.output,
                    "Also write the table to this file");
  add_solver_flags(bench, bench_args.opts);
  bench->add_option("--config", bench_args.config_file,
                    "Config file of `key = value` lines mirroring flag names");

  PitfallArgs pitfall_args;
  CLI::App* pitfall = app.add_subcommand(
      "pitfall", "Show the rank-reduction pitfall against its closed form");
  pitfall->add_option("--p", pitfall_args.p, "Ambient dimension (default 10001)");
  pitfall->add_option("--epsilon", pitfall_args.epsilon,
                      "Corruption level (default 0.1)");
  pitfall->add_option("--n", pitfall_args.n, "Sample count (default 50)");
  pitfall->add_option("--seed", pitfall_args.seed, "Seed (default 0)");

  try {
    app.parse(argc, argv);
    if (fit->parsed()) run_fit(fit_args, false);
    if (batch->parsed()) run_fit(batch_args, true);
    if (simulate->parsed()) run_simulate(sim_args);
    if (bench->parsed()) run_bench(bench_args);
    if (pitfall->parsed()) run_pitfall(pitfall_args);
  } catch (const CliExit& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }
  return 0;
}
