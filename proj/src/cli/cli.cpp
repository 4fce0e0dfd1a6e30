#include "lcslab/cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "lcslab/cli/manifest.hpp"
#include "lcslab/dataset_io.hpp"
#include "lcslab/error.hpp"
#include "lcslab/records.hpp"

namespace fs = std::filesystem;

namespace lcslab::cli {

namespace {

struct Globals {
  int workers = 0;
  std::string out_dir = "lcslab_out";
};

/// Writes `content` to dir/name and records the name in the manifest.
void emit(const fs::path& dir, const std::string& name, const std::string& content, RunManifest& m) {
  std::ofstream f(dir / name, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
  f << content;
  m.outputs.push_back(name);
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidInput("bad number '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

/// --probs wins over --q; both given must agree.
Alphabet resolve_alphabet(unsigned q, bool q_given, const std::string& probs) {
  if (probs.empty()) return Alphabet::uniform(q);
  Alphabet a = Alphabet::from_probs(parse_double_list(probs));
  if (q_given && a.size() != q) throw InvalidInput("--q disagrees with the number of --probs entries");
  return a;
}

// ---------------------------------------------------------------- exact

struct ExactArgs {
  std::string n = "2..10";
  unsigned k = 2;
  unsigned q = 2;
  bool no_symmetry = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
  int places = 12;
};

int cmd_exact(const ExactArgs& a, const Globals& g, std::ostream& out, RunManifest& m) {
  const auto ns = parse_size_list(a.n);
  m.config = {{"n", join_sizes(ns)},        {"k", std::to_string(a.k)},
              {"q", std::to_string(a.q)},   {"symmetry", a.no_symmetry ? "off" : "on"},
              {"budget", std::to_string(a.budget)}, {"places", std::to_string(a.places)}};
  const fs::path dir(g.out_dir);
  ExactOptions opts;
  opts.budget = a.budget;
  opts.use_symmetry = !a.no_symmetry;
  opts.workers = g.workers;

  std::string csv = exact_csv_header() + "\n";
  std::string jsonl;
  out << exact_csv_header() << '\n';
  for (std::size_t n : ns) {
    const auto start = std::chrono::steady_clock::now();
    const ExactResult r = exact_k_stats(static_cast<unsigned>(n), a.k, a.q, opts);
    m.details["seconds"][std::to_string(n)] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string row = exact_csv_row(r, a.places);
    csv += row + "\n";
    jsonl += to_json(r, a.places).dump() + "\n";
    out << row << '\n';
    emit(dir, "exact_hist_n" + std::to_string(n) + "_k" + std::to_string(a.k) + "_q" + std::to_string(a.q) + ".dat",
         exact_histogram_dat(r), m);
  }
  emit(dir, "exact.csv", csv, m);
  emit(dir, "exact.jsonl", jsonl, m);
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string n;
  std::string preset;
  unsigned k = 2;
  unsigned q = 2;
  std::string probs;
  std::uint64_t trials = 4096;
  std::uint64_t group_size = 0;
  std::uint64_t seed = 1;
  double confidence = 0.95;
  std::uint64_t cell_budget = kDefaultCellBudget;
  std::uint64_t batch_size = 256;
};

struct ScheduleEntry {
  std::size_t n;
  std::uint64_t trials;
  std::uint64_t group_size;
};

std::vector<ScheduleEntry> preset_schedule(const std::string& name, std::vector<std::string>& warnings) {
  std::vector<ScheduleEntry> s;
  if (name == "desk") {
    for (std::size_t n = 16; n <= 25; ++n) s.push_back({n, 4096, 0});
    for (std::size_t n : {50, 100, 200, 500}) s.push_back({n, 4096, 0});
  } else if (name == "full" || name == "paper") {
    // datasets of 2^8 sequences: 2^10 of them up to n = 25, 2^7 beyond;
    // 2^4 x 2^4 for n >= 1000
    for (std::size_t n = 16; n <= 25; ++n) s.push_back({n, 256u * 1024u, 256});
    for (std::size_t n = 50; n <= 500; n += 50) s.push_back({n, 256u * 128u, 256});
    for (std::size_t n = 1000; n <= 5000; n += 500) s.push_back({n, 16u * 16u, 16});
  } else if (name == "extended" || name == "paper-extended") {
    // min(2^n, 1e5) trials, which is 1e5 for every n here
    for (std::size_t n : {20, 50, 100, 200, 500, 1000, 2000}) s.push_back({n, 100000, 0});
    for (std::size_t n : {5000, 10000}) s.push_back({n, 10000, 0});
    for (std::size_t n : {20000, 50000, 100000}) s.push_back({n, 100, 0});
    warnings.push_back("preset 'extended' reaches n=100000; expect several minutes per core");
  } else {
    throw InvalidInput("unknown preset '" + name + "' (desk, full, extended)");
  }
  return s;
}

std::string estimate_row_from_json(const Json& j) {
  std::vector<double> probs = j.at("probs").get<std::vector<double>>();
  std::ostringstream os;
  os << j.at("n").get<std::size_t>() << ',' << j.at("k").get<unsigned>() << ',' << j.at("q").get<unsigned>() << ','
     << csv_field(format_probs(probs)) << ',' << j.at("trials").get<std::uint64_t>() << ','
     << j.at("seed").get<std::uint64_t>() << ',' << format_double(j.at("mean").get<double>()) << ','
     << format_double(j.at("gamma").get<double>()) << ',' << format_double(j.at("variance").get<double>()) << ','
     << format_double(j.at("mean_ci").at(0).get<double>()) << ','
     << format_double(j.at("mean_ci").at(1).get<double>()) << ','
     << format_double(j.at("variance_ci").at(0).get<double>()) << ','
     << format_double(j.at("variance_ci").at(1).get<double>());
  return os.str();
}

int cmd_simulate(const SimulateArgs& a, bool q_given, const Globals& g, std::ostream& out, RunManifest& m) {
  if (a.n.empty() == a.preset.empty()) throw InvalidInput("give exactly one of --n or --preset");
  const Alphabet alphabet = resolve_alphabet(a.q, q_given, a.probs);

  std::vector<ScheduleEntry> schedule;
  if (!a.preset.empty())
    schedule = preset_schedule(a.preset, m.warnings);
  else
    for (std::size_t n : parse_size_list(a.n)) schedule.push_back({n, a.trials, a.group_size});

  m.config = {{"k", std::to_string(a.k)},
              {"probs", format_probs(alphabet.probs())},
              {"seed", std::to_string(a.seed)},
              {"confidence", format_double(a.confidence)},
              {"cell_budget", std::to_string(a.cell_budget)}};
  if (!a.preset.empty()) {
    m.config["preset"] = a.preset;
  } else {
    m.config["n"] = a.n;
    m.config["trials"] = std::to_string(a.trials);
    m.config["group_size"] = std::to_string(a.group_size);
  }

  const fs::path dir(g.out_dir);
  const fs::path log = dir / "simulate.jsonl";
  std::vector<EstimateRecord> records;
  std::string dat = "# n gamma_hat variance\n";
  for (const auto& e : schedule) {
    ExperimentConfig c;
    c.n = e.n;
    c.k = a.k;
    c.alphabet = alphabet;
    c.trials = e.trials;
    c.group_size = e.group_size;
    c.batch_size = a.batch_size;
    c.master_seed = a.seed;
    c.confidence_level = a.confidence;
    c.cell_budget = a.cell_budget;
    c.validate();
    EstimateRecord r = run_experiment(c, g.workers);
    m.details["seconds"][std::to_string(e.n)] = r.wall_time_seconds;
    std::ofstream(log, std::ios::app | std::ios::binary) << to_json(r).dump() << '\n';
    out << estimate_csv_row(r) << '\n';
    dat += std::to_string(e.n) + " " + format_double(r.gamma_hat) + " " + format_double(r.sample_variance) + "\n";
    records.push_back(std::move(r));
  }
  m.outputs.push_back("simulate.jsonl");

  // summary CSV over the whole log, including earlier runs
  std::ifstream in(log);
  std::string csv = estimate_csv_header() + "\n";
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) csv += estimate_row_from_json(Json::parse(line)) + "\n";
  emit(dir, "simulate.csv", csv, m);
  emit(dir, "simulate_gamma.dat", dat, m);

  std::set<std::size_t> distinct;
  for (const auto& r : records) distinct.insert(r.config.n);
  if (distinct.size() >= 3) {
    const PowerLawFit fit = fit_variance_growth(records);
    Json j;
    j["exponent"] = fit.exponent;
    j["coefficient"] = fit.coefficient;
    j["r_squared"] = fit.r_squared;
    emit(dir, "simulate_fit.json", j.dump(2) + "\n", m);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- dataset

struct GenArgs {
  unsigned q = 2;
  std::string probs;
  std::size_t n = 20;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::string file;
};

int cmd_dataset_gen(const GenArgs& a, bool q_given, const Globals& g, std::ostream& out, RunManifest& m) {
  DatasetSpec spec;
  spec.alphabet = resolve_alphabet(a.q, q_given, a.probs);
  spec.seq_length = a.n;
  spec.count = a.count;
  spec.master_seed = a.seed;
  m.config = {{"q", std::to_string(spec.alphabet.size())},
              {"probs", format_probs(spec.alphabet.probs())},
              {"n", std::to_string(a.n)},
              {"count", std::to_string(a.count)},
              {"seed", std::to_string(a.seed)}};
  const SequenceDataset ds = generate(spec, g.workers);
  const fs::path path = a.file.empty() ? fs::path(g.out_dir) / "dataset.txt" : fs::path(a.file);
  write_dataset(path, ds);
  m.outputs.push_back(path.string());
  out << "wrote " << ds.sequences.size() << " sequences to " << path.string() << '\n';
  return kExitOk;
}

int cmd_dataset_analyze(const std::string& file, const Globals& g, std::ostream& out, RunManifest& m) {
  const SequenceDataset ds = read_dataset(fs::path(file));
  m.config = {{"file", file}};
  Json j;
  j["spec"] = {{"q", ds.spec.alphabet.size()},
               {"n", ds.spec.seq_length},
               {"count", ds.spec.count},
               {"seed", ds.spec.master_seed},
               {"probs", ds.spec.alphabet.probs()}};
  const CoverageReport cov = coverage(ds);
  const CompositionReport comp = composition(ds);
  j["coverage"] = to_json(cov);
  j["composition"] = to_json(comp);
  emit(fs::path(g.out_dir), "analysis.json", j.dump(2) + "\n", m);
  out << "distinct " << cov.distinct_count << " duplicates " << cov.duplicate_count << " chi2 "
      << format_double(comp.chi2_global) << " (99.9% critical " << format_double(comp.chi2_critical_999) << ")\n";
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string dataset;
  unsigned q = 2;
  std::string probs;
  std::size_t n = 100;
  std::size_t count = 0;
  std::uint64_t seed = 1;
  unsigned k = 2;
  std::string algorithms = "dea,long_run,greedy,tournament";
  std::string reference = "exact";
  std::size_t window = 0;
  std::size_t max_dp_seqs = 3;
  std::uint64_t cell_budget = kDefaultCellBudget;
};

int cmd_bench(const BenchArgs& a, bool q_given, const Globals& g, std::ostream& out, RunManifest& m) {
  BenchmarkOptions opts;
  opts.group_size = a.k;
  opts.window = a.window;
  opts.max_dp_seqs = a.max_dp_seqs;
  opts.cell_budget = a.cell_budget;
  opts.workers = g.workers;
  if (a.reference == "exact")
    opts.reference = ReferenceKind::kExact;
  else if (a.reference == "upper_bound")
    opts.reference = ReferenceKind::kUpperBound;
  else
    throw InvalidInput("--reference must be exact or upper_bound");
  opts.algorithms.clear();
  std::stringstream ss(a.algorithms);
  for (std::string name; std::getline(ss, name, ',');) {
    const auto alg = parse_algorithm(name);
    if (!alg) throw InvalidInput("unknown algorithm '" + name + "'");
    opts.algorithms.push_back(*alg);
  }

  SequenceDataset ds;
  if (!a.dataset.empty()) {
    ds = read_dataset(fs::path(a.dataset));
    opts.dataset_id = fs::path(a.dataset).stem().string();
    m.config["dataset"] = a.dataset;
  } else {
    ds.spec.alphabet = resolve_alphabet(a.q, q_given, a.probs);
    ds.spec.seq_length = a.n;
    ds.spec.count = a.count == 0 ? std::size_t{10} * a.k : a.count;
    ds.spec.master_seed = a.seed;
    ds = generate(ds.spec, g.workers);
    opts.dataset_id = "generated";
    m.config["q"] = std::to_string(ds.spec.alphabet.size());
    m.config["probs"] = format_probs(ds.spec.alphabet.probs());
    m.config["n"] = std::to_string(ds.spec.seq_length);
    m.config["count"] = std::to_string(ds.spec.count);
    m.config["seed"] = std::to_string(ds.spec.master_seed);
  }
  m.config["k"] = std::to_string(a.k);
  m.config["algorithms"] = a.algorithms;
  m.config["reference"] = a.reference;
  m.config["window"] = std::to_string(a.window);
  m.config["max_dp_seqs"] = std::to_string(a.max_dp_seqs);
  m.config["cell_budget"] = std::to_string(a.cell_budget);

  const BenchmarkResult res = benchmark(ds, opts);
  if (!res.warning.empty()) m.warnings.push_back(res.warning);
  std::string csv = heuristic_csv_header(opts.algorithms) + "\n";
  std::string jsonl;
  for (const auto& r : res.reports) {
    csv += heuristic_csv_row(r) + "\n";
    jsonl += to_json(r).dump() + "\n";
  }
  const fs::path dir(g.out_dir);
  emit(dir, "bench.csv", csv, m);
  emit(dir, "bench.jsonl", jsonl, m);
  const std::string summary = summary_csv(res.summary);
  emit(dir, "bench_summary.csv", summary, m);
  for (const auto& s : res.summary) m.details["seconds"][s.algorithm] = s.total_seconds;
  m.details["reference_used"] = reference_name(res.used_reference);
  out << summary;
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string grid = "0.05:0.5:0.05";
  std::string q_list = "2,4,8,16";
  std::size_t n = 500;
  unsigned k = 2;
  std::uint64_t trials = 1024;
  std::uint64_t group_size = 0;
  std::uint64_t seed = 1;
  double confidence = 0.95;
};

int cmd_sweep(const SweepArgs& a, bool alphabet, const Globals& g, std::ostream& out, RunManifest& m) {
  ExperimentConfig base;
  base.n = a.n;
  base.k = a.k;
  base.trials = a.trials;
  base.group_size = a.group_size;
  base.master_seed = a.seed;
  base.confidence_level = a.confidence;
  m.config = {{"n", std::to_string(a.n)},
              {"k", std::to_string(a.k)},
              {"trials", std::to_string(a.trials)},
              {"group_size", std::to_string(a.group_size)},
              {"seed", std::to_string(a.seed)},
              {"confidence", format_double(a.confidence)}};
  SweepCurve curve;
  if (alphabet) {
    std::vector<unsigned> qs;
    for (std::size_t q : parse_size_list(a.q_list)) qs.push_back(static_cast<unsigned>(q));
    m.config["q"] = a.q_list;
    curve = sweep_alphabet(base, qs, g.workers);
  } else {
    const auto grid = parse_grid(a.grid);
    m.config["grid"] = a.grid;
    curve = sweep_p(base, grid, g.workers);
  }
  for (const auto& p : curve.points) m.details["seconds"][format_double(p.value)] = p.record.wall_time_seconds;
  const fs::path dir(g.out_dir);
  const std::string stem = alphabet ? "sweep_alphabet" : "sweep_p";
  const std::string csv = sweep_csv(curve);
  emit(dir, stem + ".csv", csv, m);
  emit(dir, stem + ".dat", sweep_dat(curve), m);
  out << csv;
  return kExitOk;
}

}  // namespace

std::vector<std::size_t> parse_size_list(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("bad integer '" + s + "' in '" + text + "'");
    return std::stoull(s);
  };
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    std::string hi_text = item.substr(dots + 2);
    std::size_t step = 1;
    if (const auto colon = hi_text.find(':'); colon != std::string::npos) {
      step = number(hi_text.substr(colon + 1));
      hi_text = hi_text.substr(0, colon);
    }
    const std::size_t lo = number(item.substr(0, dots)), hi = number(hi_text);
    if (step == 0 || hi < lo) throw InvalidInput("bad range '" + item + "'");
    for (std::size_t v = lo; v <= hi; v += step) out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty list '" + text + "'");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lcslab: longest common subsequence statistics and heuristic benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file mirroring the command-line flags");
  Globals g;
  app.add_option("--workers", g.workers, "OpenMP threads (0 = default); never changes results")
      ->envname("LCSLAB_WORKERS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out_dir, "output directory")->capture_default_str();

  ExactArgs ea;
  auto* exact = app.add_subcommand("exact", "exhaustive LCS statistics for small n");
  exact->add_option("--n", ea.n, "lengths, e.g. 2..12")->capture_default_str();
  exact->add_option("--k", ea.k, "sequences per tuple")->capture_default_str();
  exact->add_option("--q", ea.q, "alphabet size")->capture_default_str();
  exact->add_flag("--no-symmetry", ea.no_symmetry, "enumerate without orbit reduction");
  exact->add_option("--budget", ea.budget, "maximum evaluated tuples")->capture_default_str();
  exact->add_option("--places", ea.places, "decimal places in outputs")->capture_default_str()->check(CLI::Range(0, 18));

  SimulateArgs sa;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates of E|LCS| and Var|LCS|");
  simulate->add_option("--n", sa.n, "lengths, e.g. 1000 or 50..500:50");
  simulate->add_option("--preset", sa.preset, "desk, full or extended");
  simulate->add_option("--k", sa.k, "sequences per trial")->capture_default_str();
  auto* sim_q = simulate->add_option("--q", sa.q, "uniform alphabet size")->capture_default_str();
  simulate->add_option("--probs", sa.probs, "symbol probabilities, e.g. 0.9,0.1");
  simulate->add_option("--trials", sa.trials, "trials per length")->capture_default_str();
  simulate->add_option("--group-size", sa.group_size, "grouped protocol dataset size (0 = off)")->capture_default_str();
  simulate->add_option("--seed", sa.seed, "master seed")->capture_default_str();
  simulate->add_option("--confidence", sa.confidence, "interval level")->capture_default_str();
  simulate->add_option("--cell-budget", sa.cell_budget, "k-way DP cell budget")->capture_default_str();
  simulate->add_option("--batch-size", sa.batch_size, "trials per scheduling chunk")->capture_default_str();

  auto* dataset = app.add_subcommand("dataset", "generate or analyze sequence datasets");
  dataset->require_subcommand(1);
  GenArgs ga;
  auto* gen = dataset->add_subcommand("gen", "write a random dataset file");
  auto* gen_q = gen->add_option("--q", ga.q, "uniform alphabet size")->capture_default_str();
  gen->add_option("--probs", ga.probs, "symbol probabilities");
  gen->add_option("--n", ga.n, "sequence length")->capture_default_str();
  gen->add_option("--count", ga.count, "number of sequences")->capture_default_str();
  gen->add_option("--seed", ga.seed, "master seed")->capture_default_str();
  gen->add_option("--file", ga.file, "output path (default <out>/dataset.txt)");
  std::string analyze_file;
  auto* analyze = dataset->add_subcommand("analyze", "coverage and composition report");
  analyze->add_option("file", analyze_file, "dataset file")->required();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "performance ratios of LCS heuristics");
  bench->add_option("--dataset", ba.dataset, "dataset file (otherwise generated)");
  auto* bench_q = bench->add_option("--q", ba.q, "uniform alphabet size")->capture_default_str();
  bench->add_option("--probs", ba.probs, "symbol probabilities");
  bench->add_option("--n", ba.n, "sequence length")->capture_default_str();
  bench->add_option("--count", ba.count, "sequences to generate (default 10 groups)");
  bench->add_option("--seed", ba.seed, "master seed")->capture_default_str();
  bench->add_option("--k", ba.k, "sequences per group")->capture_default_str();
  bench->add_option("--algorithms", ba.algorithms, "comma-separated subset")->capture_default_str();
  bench->add_option("--reference", ba.reference, "exact or upper_bound")->capture_default_str();
  bench->add_option("--window", ba.window, "deposition window (0 = default)")->capture_default_str();
  bench->add_option("--max-dp-seqs", ba.max_dp_seqs, "sequences in the upper-bound DP")->capture_default_str();
  bench->add_option("--cell-budget", ba.cell_budget, "k-way DP cell budget")->capture_default_str();

  SweepArgs wa;
  auto* sweep = app.add_subcommand("sweep", "estimates along symbol skew or alphabet size");
  sweep->require_subcommand(1);
  auto add_common = [&](CLI::App* s) {
    s->add_option("--n", wa.n, "sequence length")->capture_default_str();
    s->add_option("--k", wa.k, "sequences per trial")->capture_default_str();
    s->add_option("--trials", wa.trials, "trials per point")->capture_default_str();
    s->add_option("--group-size", wa.group_size, "grouped protocol dataset size (0 = off)")->capture_default_str();
    s->add_option("--seed", wa.seed, "master seed")->capture_default_str();
    s->add_option("--confidence", wa.confidence, "interval level")->capture_default_str();
  };
  auto* sweep_p_cmd = sweep->add_subcommand("p", "binary alphabet with P(1) = p");
  sweep_p_cmd->add_option("--grid", wa.grid, "start:stop:step or list within (0, 0.5]")->capture_default_str();
  add_common(sweep_p_cmd);
  auto* sweep_q_cmd = sweep->add_subcommand("alphabet", "uniform alphabets of several sizes");
  sweep_q_cmd->add_option("--q", wa.q_list, "alphabet sizes, e.g. 2,4,8,16")->capture_default_str();
  add_common(sweep_q_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunManifest m;
  m.started = utc_timestamp();
  try {
    fs::create_directories(g.out_dir);
    int rc = kExitOk;
    if (*exact) {
      m.command = "exact";
      rc = cmd_exact(ea, g, out, m);
    } else if (*simulate) {
      m.command = "simulate";
      rc = cmd_simulate(sa, sim_q->count() > 0, g, out, m);
    } else if (*gen) {
      m.command = "dataset_gen";
      rc = cmd_dataset_gen(ga, gen_q->count() > 0, g, out, m);
    } else if (*analyze) {
      m.command = "dataset_analyze";
      rc = cmd_dataset_analyze(analyze_file, g, out, m);
    } else if (*bench) {
      m.command = "bench";
      rc = cmd_bench(ba, bench_q->count() > 0, g, out, m);
    } else if (*sweep_p_cmd) {
      m.command = "sweep_p";
      rc = cmd_sweep(wa, false, g, out, m);
    } else if (*sweep_q_cmd) {
      m.command = "sweep_alphabet";
      rc = cmd_sweep(wa, true, g, out, m);
    }
    m.finished = utc_timestamp();
    m.details["workers"] = g.workers;
    for (const auto& w : m.warnings) err << "warning: " << w << '\n';
    write_manifest(g.out_dir, m);
    return rc;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const InvalidInput& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"lcslab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lcslab::cli
