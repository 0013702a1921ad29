#include "rlbwt/harness.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "json.hpp"

#include "rlbwt/error.hpp"
#include "rlbwt/parallel.hpp"
#include "rlbwt/random.hpp"
#include "rlbwt/rle.hpp"

namespace rlbwt {
namespace {

constexpr std::string_view kRecordsHeader =
    "file,bytes,sigma,init,spec,seed,initial_c,final_c,steps,hitting_step,terminated,wall_ms";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t end = value.find(',', start);
    if (end == std::string_view::npos) end = value.size();
    const std::string_view item = trim(value.substr(start, end - start));
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kParse, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

double parse_double(std::string_view s, std::string_view what) {
  return parse_number<double>(s, what);
}

bool parse_bool(std::string_view s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw Error(ErrorKind::kParse, "bad boolean '" + std::string(s) + "'");
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view p) {
  std::filesystem::path path{std::string(p)};
  return path.is_absolute() ? path : base / path;
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

std::string base_init(std::string_view label) { return std::string(label.substr(0, label.find('#'))); }

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ':' || c == '#' || c == '/' || c == '\\') c = '_';
  }
  return s;
}

void open_for_write(std::ofstream& out, const std::filesystem::path& path) {
  out.open(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
}

struct PlannedRun {
  std::size_t file_index;
  InitMethod init;
  std::string init_label;
  NeighborhoodSpec spec;
  std::uint64_t seed;
};

}  // namespace

ExperimentConfig parse_config(std::string_view contents, const std::filesystem::path& base_dir) {
  ExperimentConfig cfg;
  cfg.output_dir = base_dir;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    ++line_no;
    std::string_view line = contents.substr(start, end - start);
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "files") {
      for (const auto& f : split_list(value)) cfg.files.push_back(resolve(base_dir, f));
    } else if (key == "inits") {
      for (const auto& name : split_list(value)) {
        InitMethod m = InitMethod::parse(name);
        if (m.kind == InitKind::kFromFile) m.path = resolve(base_dir, m.path.string());
        cfg.inits.push_back(std::move(m));
      }
    } else if (key == "specs") {
      if (value == "all") {
        cfg.specs = all_neighborhood_specs();
      } else {
        for (const auto& s : split_list(value)) cfg.specs.push_back(NeighborhoodSpec::parse(s));
      }
    } else if (key == "budget") {
      cfg.budget = parse_number<std::size_t>(value, "budget");
    } else if (key == "samples") {
      cfg.samples = parse_number<std::size_t>(value, "samples");
    } else if (key == "master_seed") {
      cfg.master_seed = parse_number<std::uint64_t>(value, "master_seed");
    } else if (key == "random_starts") {
      cfg.random_starts = parse_number<std::size_t>(value, "random_starts");
    } else if (key == "output_dir") {
      cfg.output_dir = resolve(base_dir, value);
    } else if (key == "threads") {
      cfg.parallelism = parse_number<std::size_t>(value, "threads");
    } else if (key == "end_marker") {
      cfg.end_marker = value == "auto" ? EndMarkerPolicy::automatic()
                                       : EndMarkerPolicy::fixed_byte(static_cast<Byte>(
                                             parse_number<unsigned>(value, "end_marker")));
    } else if (key == "traces") {
      cfg.write_traces = parse_bool(value);
    } else {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": unknown key '" +
                                         std::string(key) + "'");
    }
  }
  if (cfg.files.empty()) throw Error(ErrorKind::kParse, "config lists no files");
  if (cfg.budget == 0) throw Error(ErrorKind::kParse, "budget must be at least 1");
  if (!cfg.specs.empty() && cfg.inits.empty()) throw Error(ErrorKind::kParse, "specs given without inits");
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  const Bytes data = read_file(path);
  return parse_config(std::string_view(reinterpret_cast<const char*>(data.data()), data.size()),
                      path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
}

bool RunRecord::same_outcome(const RunRecord& o) const {
  return file == o.file && file_bytes == o.file_bytes && sigma == o.sigma && init == o.init &&
         spec == o.spec && seed == o.seed && initial_c == o.initial_c && final_c == o.final_c &&
         steps == o.steps && hitting_step == o.hitting_step && terminated == o.terminated;
}

RunRecord run_search(const Text& text, std::string_view file_label, const Ordering& init,
                     std::string_view init_label, const NeighborhoodSpec& spec, std::size_t budget,
                     std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchResult r = first_improvement_search(text, init, spec, budget, seed);
  const auto t1 = std::chrono::steady_clock::now();

  const auto n = static_cast<double>(text.size());
  RunRecord rec;
  rec.file = std::string(file_label);
  rec.file_bytes = text.size();
  rec.sigma = init.size();
  rec.init = std::string(init_label);
  rec.spec = spec.name();
  rec.seed = seed;
  rec.initial_c = percent_change(static_cast<double>(r.initial_fitness), n);
  rec.final_c = percent_change(static_cast<double>(r.best_fitness), n);
  rec.steps = r.steps;
  rec.hitting_step = r.hitting_step;
  rec.terminated = r.terminated;
  rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  rec.trace = std::move(r.trace);
  rec.final_ordering = std::move(r.best_ordering);
  return rec;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  ExperimentResult result;
  std::vector<std::unique_ptr<Text>> texts;
  std::vector<std::string> labels;
  for (const auto& path : cfg.files) {
    try {
      texts.push_back(std::make_unique<Text>(load_text(path, cfg.end_marker)));
      labels.push_back(path.filename().string());
    } catch (const Error& e) {
      result.warnings.push_back("skipping " + path.string() + ": " + e.what());
    }
  }

  std::vector<PlannedRun> plan;
  for (std::size_t fi = 0; fi < texts.size(); ++fi) {
    for (const auto& init : cfg.inits) {
      std::vector<std::pair<InitMethod, std::string>> starts;
      if (init.kind == InitKind::kRandom) {
        for (std::size_t s = 0; s < cfg.random_starts; ++s) {
          InitMethod m = init;
          m.seed = cfg.master_seed + s;
          starts.emplace_back(m, "random#" + std::to_string(s));
        }
      } else {
        InitMethod m = init;
        if (m.kind == InitKind::kFromFile) m.path = replace_all(m.path.string(), "{name}", labels[fi]);
        starts.emplace_back(m, m.name());
      }
      for (const auto& [method, label] : starts) {
        for (const auto& spec : cfg.specs) {
          plan.push_back({fi, method, label, spec, mix_seed(cfg.master_seed, plan.size())});
        }
      }
    }
  }

  std::vector<std::optional<RunRecord>> slots(plan.size());
  std::vector<std::optional<RunFailure>> failed(plan.size());
  const std::size_t threads = resolve_threads(cfg.parallelism);
  parallel_for(plan.size(), threads, [&](std::size_t i, std::size_t) {
    const PlannedRun& run = plan[i];
    const Text& text = *texts[run.file_index];
    try {
      const Ordering init = init_ordering(run.init, text);
      slots[i] = run_search(text, labels[run.file_index], init, run.init_label, run.spec, cfg.budget,
                            run.seed);
    } catch (const std::exception& e) {
      failed[i] = RunFailure{labels[run.file_index], run.init_label, run.spec.name(), e.what()};
    }
  });
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (slots[i]) result.records.push_back(std::move(*slots[i]));
    if (failed[i]) result.failures.push_back(std::move(*failed[i]));
  }

  if (cfg.samples > 0) {
    for (std::size_t fi = 0; fi < texts.size(); ++fi) {
      const SampleStats s = random_sampling(*texts[fi], cfg.samples, mix_seed(cfg.master_seed, ~fi), threads);
      for (std::size_t k = 0; k < s.samples; ++k) {
        result.samples.push_back({labels[fi], k, s.fitness[k], s.percent[k]});
      }
    }
  }

  if (!result.records.empty() || !result.samples.empty()) {
    result.summary = summarize(result.records, result.samples);
  }
  return result;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records,
                                  const std::vector<SampleRow>& samples) {
  if (records.empty() && samples.empty()) throw Error(ErrorKind::kEmptyGroup, "nothing to summarize");
  // Groups keep first-appearance order.
  std::vector<std::pair<std::string, std::string>> keys;
  std::map<std::pair<std::string, std::string>, std::vector<double>> groups;
  auto add = [&](const std::string& file, std::string method, double c) {
    auto key = std::make_pair(file, std::move(method));
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) keys.push_back(key);
    it->second.push_back(c);
  };
  for (const auto& r : records) add(r.file, base_init(r.init) + "/" + r.spec, r.final_c);
  for (const auto& s : samples) add(s.file, "sampling", s.c);

  std::vector<SummaryRow> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back({key.first, key.second, summarize(groups[key])});
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string format_3dp(double v) {
  char buf[64];
  // Avoid printing "-0.000".
  const double rounded = std::round(v * 1000.0) / 1000.0;
  std::snprintf(buf, sizeof buf, "%.3f", rounded == 0.0 ? 0.0 : rounded);
  return buf;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kRecordsHeader << '\n';
  for (const auto& r : records) {
    out << csv_field(r.file) << ',' << r.file_bytes << ',' << r.sigma << ',' << csv_field(r.init) << ','
        << csv_field(r.spec) << ',' << r.seed << ',' << format_double(r.initial_c) << ','
        << format_double(r.final_c) << ',' << r.steps << ',' << r.hitting_step << ','
        << to_string(r.terminated) << ',' << format_double(r.wall_ms) << '\n';
  }
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kRecordsHeader) {
    throw Error(ErrorKind::kParse, "records.csv header mismatch");
  }
  std::vector<RunRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 12) {
      throw Error(ErrorKind::kParse, "records.csv line " + std::to_string(line_no) + ": expected 12 fields");
    }
    RunRecord r;
    r.file = f[0];
    r.file_bytes = parse_number<std::size_t>(f[1], "bytes");
    r.sigma = parse_number<std::size_t>(f[2], "sigma");
    r.init = f[3];
    r.spec = f[4];
    r.seed = parse_number<std::uint64_t>(f[5], "seed");
    r.initial_c = parse_double(f[6], "initial_c");
    r.final_c = parse_double(f[7], "final_c");
    r.steps = parse_number<std::size_t>(f[8], "steps");
    r.hitting_step = parse_number<std::size_t>(f[9], "hitting_step");
    r.terminated = parse_termination(f[10]);
    r.wall_ms = parse_double(f[11], "wall_ms");
    out.push_back(std::move(r));
  }
  return out;
}

void write_samples_csv(std::ostream& out, const std::vector<SampleRow>& rows) {
  out << "file,sample_index,fitness,c\n";
  for (const auto& r : rows) {
    out << csv_field(r.file) << ',' << r.sample_index << ',' << r.fitness << ',' << format_double(r.c) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "file,method,min_c,max_c,mean_c,std_c\n";
  for (const auto& r : rows) {
    out << csv_field(r.file) << ',' << csv_field(r.method) << ',' << format_3dp(r.stats.min) << ','
        << format_3dp(r.stats.max) << ',' << format_3dp(r.stats.mean) << ',' << format_3dp(r.stats.std)
        << '\n';
  }
}

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace, std::size_t file_bytes) {
  out << "step,fitness,c\n";
  for (const auto& p : trace) {
    out << p.step << ',' << p.fitness << ','
        << format_double(percent_change(static_cast<double>(p.fitness), static_cast<double>(file_bytes)))
        << '\n';
  }
}

std::string record_to_json(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["file"] = r.file;
  j["bytes"] = r.file_bytes;
  j["sigma"] = r.sigma;
  j["init"] = r.init;
  j["spec"] = r.spec;
  j["seed"] = r.seed;
  j["initial_c"] = r.initial_c;
  j["final_c"] = r.final_c;
  j["steps"] = r.steps;
  j["hitting_step"] = r.hitting_step;
  j["terminated"] = to_string(r.terminated);
  j["wall_ms"] = r.wall_ms;
  j["std"] = "population";
  j["random_order_reshuffle"] = "per_improvement";
  auto& ordering = j["final_ordering"] = nlohmann::json::array();
  for (Byte b : r.final_ordering.perm()) ordering.push_back(b);
  auto& trace = j["trace"] = nlohmann::json::array();
  for (const auto& p : r.trace) trace.push_back({p.step, p.fitness});
  return j.dump(2);
}

void write_experiment(const ExperimentConfig& cfg, const ExperimentResult& result) {
  std::filesystem::create_directories(cfg.output_dir);
  std::ofstream out;
  open_for_write(out, cfg.output_dir / "records.csv");
  write_records_csv(out, result.records);
  out.close();
  if (!result.samples.empty()) {
    open_for_write(out, cfg.output_dir / "samples.csv");
    write_samples_csv(out, result.samples);
    out.close();
  }
  open_for_write(out, cfg.output_dir / "summary.csv");
  write_summary_csv(out, result.summary);
  out.close();
  if (!result.failures.empty()) {
    open_for_write(out, cfg.output_dir / "errors.csv");
    out << "file,init,spec,message\n";
    for (const auto& f : result.failures) {
      out << csv_field(f.file) << ',' << csv_field(f.init) << ',' << csv_field(f.spec) << ','
          << csv_field(f.message) << '\n';
    }
    out.close();
  }
  if (cfg.write_traces) {
    const auto dir = cfg.output_dir / "traces";
    std::filesystem::create_directories(dir);
    for (const auto& r : result.records) {
      open_for_write(out, dir / sanitize(r.file + "__" + r.init + "__" + r.spec + ".csv"));
      write_trace_csv(out, r.trace, r.file_bytes);
      out.close();
    }
  }
}

}  // namespace rlbwt
