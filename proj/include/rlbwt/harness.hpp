#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlbwt/init.hpp"
#include "rlbwt/neighborhood.hpp"
#include "rlbwt/search.hpp"
#include "rlbwt/stats.hpp"
#include "rlbwt/text.hpp"

namespace rlbwt {

/// Experiment grid. In `inits`, a FromFile path may contain "{name}", which is
/// replaced by each input file's name.
struct ExperimentConfig {
  std::vector<std::filesystem::path> files;
  std::vector<InitMethod> inits;
  std::vector<NeighborhoodSpec> specs;
  std::size_t budget = kDefaultBudget;
  std::size_t samples = 0;
  std::uint64_t master_seed = 0;
  std::size_t random_starts = 20;
  std::filesystem::path output_dir = ".";
  std::size_t parallelism = 0;  // 0: hardware concurrency
  EndMarkerPolicy end_marker;
  bool write_traces = false;
};

/// key = value lines, lists comma separated, '#' comments. Relative paths are
/// resolved against `base_dir`. Throws kParse.
ExperimentConfig parse_config(std::string_view contents, const std::filesystem::path& base_dir);
ExperimentConfig load_config(const std::filesystem::path& path);

struct RunRecord {
  std::string file;
  std::size_t file_bytes = 0;
  std::size_t sigma = 0;
  std::string init;
  std::string spec;
  std::uint64_t seed = 0;
  double initial_c = 0;
  double final_c = 0;
  std::size_t steps = 0;
  std::size_t hitting_step = 0;
  Termination terminated = Termination::kLocalMinimum;
  double wall_ms = 0;
  // Not part of records.csv.
  std::vector<TracePoint> trace;
  Ordering final_ordering;

  /// Compares the records.csv columns except wall_ms.
  bool same_outcome(const RunRecord& other) const;
};

struct SampleRow {
  std::string file;
  std::size_t sample_index = 0;
  std::size_t fitness = 0;
  double c = 0;
};

struct SummaryRow {
  std::string file;
  std::string method;
  Summary stats;
};

struct RunFailure {
  std::string file;
  std::string init;
  std::string spec;
  std::string message;
};

struct ExperimentResult {
  std::vector<RunRecord> records;
  std::vector<SampleRow> samples;
  std::vector<SummaryRow> summary;
  std::vector<RunFailure> failures;
  std::vector<std::string> warnings;
};

/// One search run, timed.
RunRecord run_search(const Text& text, std::string_view file_label, const Ordering& init,
                     std::string_view init_label, const NeighborhoodSpec& spec,
                     std::size_t budget, std::uint64_t seed);

/// Runs files x inits x specs (random expanded to `random_starts` fixed
/// starts) plus optional sampling. Records come back in grid order regardless
/// of parallelism. Files that cannot be loaded are skipped with a warning.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Groups search records by (file, init without start index, spec) and sample
/// rows by file under method "sampling". Throws kEmptyGroup on empty input.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records,
                                  const std::vector<SampleRow>& samples = {});

/// records.csv, samples.csv, summary.csv, errors.csv (only with failures),
/// and traces/ when enabled.
void write_experiment(const ExperimentConfig& cfg, const ExperimentResult& result);

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records_csv(std::istream& in);
void write_samples_csv(std::ostream& out, const std::vector<SampleRow>& rows);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);
/// step,fitness,c at each improvement.
void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace, std::size_t file_bytes);

std::string record_to_json(const RunRecord& record);

/// Splits one CSV line, honoring double quotes.
std::vector<std::string> split_csv_line(std::string_view line);
std::string csv_field(std::string_view value);
/// Shortest representation that reads back to the same double.
std::string format_double(double v);
/// Fixed three decimals.
std::string format_3dp(double v);

}  // namespace rlbwt
