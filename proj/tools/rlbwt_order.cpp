// rlbwt-order: alphabet-ordering search for run-length encoded BWTs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rlbwt/error.hpp"
#include "rlbwt/harness.hpp"
#include "rlbwt/init.hpp"
#include "rlbwt/parallel.hpp"
#include "rlbwt/rle.hpp"
#include "rlbwt/search.hpp"
#include "rlbwt/transform.hpp"

namespace fs = std::filesystem;
using namespace rlbwt;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

EndMarkerPolicy marker_policy(const std::string& value) {
  if (value == "auto") return EndMarkerPolicy::automatic();
  if (value.size() == 1 && !std::isdigit(static_cast<unsigned char>(value[0]))) {
    return EndMarkerPolicy::fixed_byte(static_cast<Byte>(value[0]));
  }
  const unsigned long b = std::stoul(value);
  if (b > 255) throw Error(ErrorKind::kParse, "end marker must be a byte value");
  return EndMarkerPolicy::fixed_byte(static_cast<Byte>(b));
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  return out;
}

std::string join_ordering(const Ordering& o) {
  std::string s;
  for (Byte b : o.perm()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(b);
  }
  return s;
}

std::string signed_3dp(double v) {
  std::string s = format_3dp(v);
  return s.front() == '-' ? s : "+" + s;
}

struct FileArgs {
  std::string file;
  std::string end_marker = "auto";

  void add_to(CLI::App* cmd) {
    cmd->add_option("-f,--file", file, "Input file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--end-marker", end_marker, "auto, a byte value 0-255, or a single character");
  }
  Text load() const { return load_text(file, marker_policy(end_marker)); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search alphabet orderings that shrink the run-length encoded BWT of a file"};
  app.require_subcommand(1);

  // bwt
  FileArgs bwt_file;
  std::string bwt_ordering = "ascii";
  std::string bwt_out;
  bool bwt_star_mode = false;
  auto* bwt_cmd = app.add_subcommand("bwt", "Write the BWT of a file under an ordering");
  bwt_file.add_to(bwt_cmd);
  bwt_cmd->add_option("-o,--ordering", bwt_ordering, "Init method name, random:<seed> or file:<path>");
  bwt_cmd->add_option("--out", bwt_out, "Output path")->required();
  bwt_cmd->add_flag("--star", bwt_star_mode, "Rotations without an end marker (short inputs only)");

  // rle
  std::string rle_in;
  std::string rle_out;
  auto* rle_cmd = app.add_subcommand("rle", "Run-length encode or decode bytes (2 bytes per run)");
  rle_cmd->require_subcommand(1);
  auto* rle_enc = rle_cmd->add_subcommand("encode", "Encode raw bytes");
  auto* rle_dec = rle_cmd->add_subcommand("decode", "Decode a pair stream");
  for (auto* c : {rle_enc, rle_dec}) {
    c->add_option("--in", rle_in, "Input path")->required()->check(CLI::ExistingFile);
    c->add_option("--out", rle_out, "Output path")->required();
  }

  // fitness
  FileArgs fit_file;
  std::string fit_ordering = "ascii";
  auto* fit_cmd = app.add_subcommand("fitness", "Print RLBWT size and percentage change");
  fit_file.add_to(fit_cmd);
  fit_cmd->add_option("-o,--ordering", fit_ordering, "Init method name, random:<seed> or file:<path>");

  // sample
  FileArgs sample_file;
  std::size_t sample_count = 1000;
  std::uint64_t sample_seed = 0;
  std::size_t sample_threads = 0;
  std::string sample_out = "samples.csv";
  auto* sample_cmd = app.add_subcommand("sample", "Uniform random sampling of orderings");
  sample_file.add_to(sample_cmd);
  sample_cmd->add_option("-n,--samples", sample_count, "Number of samples")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", sample_seed, "Seed");
  sample_cmd->add_option("--threads", sample_threads, "Workers (0: all cores)");
  sample_cmd->add_option("--out", sample_out, "samples.csv path");

  // search
  FileArgs search_file;
  std::string search_init = "ascii";
  std::string search_spec = "swap:lex";
  std::size_t search_budget = kDefaultBudget;
  std::uint64_t search_seed = 0;
  std::string search_out_dir = ".";
  auto* search_cmd = app.add_subcommand("search", "One first-improvement local search run");
  search_file.add_to(search_cmd);
  search_cmd->add_option("--init", search_init, "Init method name, random:<seed> or file:<path>");
  search_cmd->add_option("--spec", search_spec, "<swap|insert|swap-then-insert|insert-then-swap>:<lex|revlex|random>");
  search_cmd->add_option("--budget", search_budget, "Maximum fitness evaluations")->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", search_seed, "Seed for random neighbor order");
  search_cmd->add_option("--out-dir", search_out_dir, "Directory for record.json and trace.csv");

  // exhaustive
  FileArgs exh_file;
  std::size_t exh_cap = kDefaultSigmaCap;
  std::string exh_out = "exhaustive.csv";
  auto* exh_cmd = app.add_subcommand("exhaustive", "Evaluate every ordering of a small alphabet");
  exh_file.add_to(exh_cmd);
  exh_cmd->add_option("--sigma-cap", exh_cap, "Largest alphabet accepted");
  exh_cmd->add_option("--out", exh_out, "CSV path");

  // experiment
  std::string config_path;
  auto* exp_cmd = app.add_subcommand("experiment", "Run an experiment grid from a config file");
  exp_cmd->add_option("-c,--config", config_path, "Config file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*bwt_cmd) {
      const Text text = bwt_file.load();
      const Ordering o = init_ordering(InitMethod::parse(bwt_ordering), text);
      const Bytes out = bwt_star_mode ? bwt_star(text, o) : bwt(text, o);
      write_file(bwt_out, out);
      std::cout << "wrote " << out.size() << " bytes, end marker " << static_cast<unsigned>(text.end_marker())
                << ", runs " << count_runs(out) << '\n';
    } else if (*rle_cmd) {
      const Bytes in = read_file(rle_in);
      if (*rle_enc) {
        write_file(rle_out, serialize(rle_encode(in)));
      } else {
        write_file(rle_out, rle_decode(deserialize(in)));
      }
    } else if (*fit_cmd) {
      const Text text = fit_file.load();
      const Ordering o = init_ordering(InitMethod::parse(fit_ordering), text);
      const std::size_t f = fitness(text, o);
      std::cout << "f=" << f << '\n'
                << "C=" << signed_3dp(percent_change(static_cast<double>(f), static_cast<double>(text.size())))
                << '\n';
    } else if (*sample_cmd) {
      const Text text = sample_file.load();
      const SampleStats s = random_sampling(text, sample_count, sample_seed, resolve_threads(sample_threads));
      std::vector<SampleRow> rows;
      const std::string label = fs::path(sample_file.file).filename().string();
      for (std::size_t k = 0; k < s.samples; ++k) rows.push_back({label, k, s.fitness[k], s.percent[k]});
      auto out = open_out(sample_out);
      write_samples_csv(out, rows);
      std::cout << "samples=" << s.samples << " min_c=" << format_3dp(s.percent_summary.min)
                << " max_c=" << format_3dp(s.percent_summary.max) << " mean_c=" << format_3dp(s.percent_summary.mean)
                << " std_c=" << format_3dp(s.percent_summary.std) << " improvements=" << s.improvements
                << " harmonic_bound=" << format_3dp(harmonic_bound(s.samples)) << '\n';
    } else if (*search_cmd) {
      const Text text = search_file.load();
      const InitMethod init = InitMethod::parse(search_init);
      const NeighborhoodSpec spec = NeighborhoodSpec::parse(search_spec);
      const RunRecord rec = run_search(text, fs::path(search_file.file).filename().string(),
                                       init_ordering(init, text), init.name(), spec, search_budget, search_seed);
      fs::create_directories(search_out_dir);
      auto json_out = open_out(fs::path(search_out_dir) / "record.json");
      json_out << record_to_json(rec) << '\n';
      auto trace_out = open_out(fs::path(search_out_dir) / "trace.csv");
      write_trace_csv(trace_out, rec.trace, rec.file_bytes);
      std::cout << "initial_c=" << signed_3dp(rec.initial_c) << " final_c=" << signed_3dp(rec.final_c)
                << " steps=" << rec.steps << " hitting_step=" << rec.hitting_step
                << " terminated=" << to_string(rec.terminated) << '\n';
    } else if (*exh_cmd) {
      const Text text = exh_file.load();
      const ExhaustiveStats s = exhaustive_search(text, exh_cap);
      auto out = open_out(exh_out);
      out << "index,ordering,fitness,c\n";
      for (std::size_t i = 0; i < s.results.size(); ++i) {
        const auto& e = s.results[i];
        out << i << ',' << join_ordering(e.ordering) << ',' << e.fitness << ',' << format_double(e.percent) << '\n';
      }
      std::cout << "orderings=" << s.results.size() << " best_c=" << format_3dp(s.best().percent)
                << " worst_c=" << format_3dp(s.worst().percent) << " mean_c=" << format_3dp(s.percent_summary.mean)
                << " std_c=" << format_3dp(s.percent_summary.std) << '\n';
    } else if (*exp_cmd) {
      const ExperimentConfig cfg = load_config(config_path);
      const ExperimentResult result = run_experiment(cfg);
      for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
      for (const auto& f : result.failures) {
        std::cerr << "run failed: " << f.file << ' ' << f.init << ' ' << f.spec << ": " << f.message << '\n';
      }
      write_experiment(cfg, result);
      std::cout << "runs=" << result.records.size() << " samples=" << result.samples.size()
                << " failures=" << result.failures.size() << " output=" << cfg.output_dir.string() << '\n';
      if (!result.failures.empty()) return kExitRuntime;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
