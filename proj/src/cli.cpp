#include "bqaoa/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "bqaoa/formats.hpp"
#include "bqaoa/postprocess.hpp"

namespace bqaoa {
namespace {

namespace fs = std::filesystem;

constexpr std::size_t kListedArgmins = 16;

struct Common {
  std::uint64_t seed = 0;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  unsigned threads = 1;
};

void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + '\n'; }

std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad --schedule entry \"" + item + "\"");
    }
  }
  if (out.empty()) throw InvalidInput("--schedule is empty");
  return out;
}

ExactResult exact_for(const SpinPolynomial& poly, const Common& common) {
  BruteForceOptions options;
  options.max_qubits = common.enumeration_cap;
  options.max_stored_argmins = kListedArgmins;
  options.threads = common.threads;
  return brute_force(poly, options);
}

Json exact_header(const ExactResult& exact) {
  return Json{{"cmin", exact.cmin}, {"cmax", exact.cmax}, {"argmin_count", exact.argmin_count}};
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string config;
  std::string instance;
  std::string out;
  std::uint64_t seed = 0;
  std::size_t shots = 0, stages = 0, steps = 0, circuits = 0, layers = 0, max_qubits = 0;
  double alpha = 0.0, sigma = 0.0;
  std::string schedule;
  unsigned threads = 1;
  std::vector<std::string> baselines;
  std::size_t baseline_samples = 0;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::map<std::string, CLI::Option*> opts;

  bool given(const std::string& name) const { return opts.at(name)->count() > 0; }
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  Json doc = Json::object();
  fs::path config_dir;
  if (!a.config.empty()) {
    doc = parse_json(read_file(a.config), "config " + a.config);
    if (!doc.is_object()) throw InvalidInput("config " + a.config + " must be a JSON object");
    config_dir = fs::path(a.config).parent_path();
  }
  const auto from_doc_path = [&](const char* key) -> std::string {
    if (!doc.contains(key)) return {};
    fs::path p = doc.at(key).get<std::string>();
    return (p.is_relative() ? config_dir / p : p).string();
  };

  StageConfig config = stage_config_from_json(doc);
  const bool schedule_given = doc.contains("bias_schedule") || a.given("--schedule");

  if (a.given("--seed")) {
    config.seed = a.seed;
  } else if (!doc.contains("seed")) {
    throw InvalidInput("a master seed is required (--seed or \"seed\" in the config)");
  }
  if (a.given("--shots")) config.shots = a.shots;
  if (a.given("--stages")) config.stages = a.stages;
  if (a.given("--steps")) config.steps_per_stage = a.steps;
  if (a.given("--circuits")) config.circuits_per_step = a.circuits;
  if (a.given("--layers")) config.layers = a.layers;
  if (a.given("--alpha")) config.alpha = a.alpha;
  if (a.given("--sigma")) config.sigma0 = a.sigma;
  if (a.given("--max-qubits")) config.max_qubits = a.max_qubits;
  if (a.given("--threads")) config.threads = a.threads;
  if (a.given("--schedule")) config.bias_schedule = parse_schedule(a.schedule);
  if (!schedule_given && config.stages < config.bias_schedule.size()) config.bias_schedule.resize(config.stages);
  config.validate();

  const std::string instance_path = a.given("--instance") ? a.instance : from_doc_path("instance");
  if (instance_path.empty()) throw InvalidInput("no instance given (--instance or \"instance\" in the config)");
  const std::string out_dir = a.given("--out") ? a.out : from_doc_path("out");
  if (out_dir.empty()) throw InvalidInput("no output directory given (--out or \"out\" in the config)");

  std::vector<std::string> baselines = a.baselines;
  if (!a.given("--baseline") && doc.contains("baselines")) baselines = doc.at("baselines").get<std::vector<std::string>>();
  for (const auto& b : baselines) {
    if (b != "random" && b != "local") throw InvalidInput("unknown baseline \"" + b + "\"");
  }
  std::size_t samples = config.shots;
  if (a.given("--baseline-samples")) {
    samples = a.baseline_samples;
  } else if (doc.contains("baseline_samples")) {
    samples = doc.at("baseline_samples").get<std::size_t>();
  }

  const Instance instance = load_instance(instance_path);
  const Common common{config.seed, a.enumeration_cap, config.threads};
  const ExactResult exact = exact_for(instance.poly, common);
  const BiasedQaoaResult result = biased_qaoa(instance.poly, config);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  write_file(dir / "trace.log", format_trace(result.trace));
  write_file(dir / "counts_raw.json", dump(counts_to_json(result.final_raw)));
  write_file(dir / "counts_post.json", dump(counts_to_json(result.final_post)));
  write_file(dir / "cdf.txt", format_cdf(ar_cdf(result.final_post, instance.poly, exact)));

  Json runs = Json::object();
  runs["quantum"] = summary_to_json(summarize(result.final_post, instance.poly, exact));
  runs["quantum_raw"] = summary_to_json(summarize(result.final_raw, instance.poly, exact));
  for (const auto& b : baselines) {
    SampleCounts counts(instance.poly.n());
    if (b == "random") {
      counts = random_baseline(instance.poly, samples, config.seed);
    } else {
      GreedyConfig greedy;
      greedy.max_traversals = config.greedy_traversals;
      greedy.seed = config.seed;
      counts = counts_from(instance.poly.n(), local_solver(instance.poly, samples, greedy));
    }
    write_file(dir / ("counts_" + b + ".json"), dump(counts_to_json(counts)));
    runs[b] = summary_to_json(summarize(counts, instance.poly, exact));
  }
  Json summary{{"instance", instance_path},
               {"n", instance.poly.n()},
               {"exact", exact_header(exact)},
               {"best", result.best.str()},
               {"best_cost", result.best_cost},
               {"config", stage_config_to_json(config)},
               {"runs", std::move(runs)}};
  write_file(dir / "summary.json", dump(summary));

  out << "best cost " << format_number(result.best_cost) << " (min " << format_number(exact.cmin) << ") written to "
      << out_dir << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- exact

int cmd_exact(const std::string& instance_path, const std::string& out_path, const Common& common,
              std::ostream& out) {
  const Instance instance = load_instance(instance_path);
  const ExactResult exact = exact_for(instance.poly, common);
  Json doc{{"n", instance.poly.n()}};
  doc.update(exact_header(exact));
  Json argmins = Json::array();
  for (const auto& b : exact.argmins) argmins.push_back(b.str());
  doc["argmins"] = std::move(argmins);
  if (instance.graph) {
    doc["max_cut"] = cut_value(*instance.graph, exact.argmins.front());
    doc["min_cut"] = 0.0 - exact.cmax;
  }
  emit(out, out_path, dump(doc));
  return kExitOk;
}

// ---------------------------------------------------------------- baseline

int cmd_baseline(const std::string& instance_path, const std::string& kind, std::size_t samples, int restarts,
                 int traversals, const std::string& out_path, const Common& common, std::ostream& out) {
  const Instance instance = load_instance(instance_path);
  SampleCounts counts(instance.poly.n());
  if (kind == "random") {
    counts = random_baseline(instance.poly, samples, common.seed);
  } else {
    GreedyConfig greedy;
    greedy.max_traversals = traversals;
    greedy.restarts = restarts;
    greedy.seed = common.seed;
    greedy.validate();
    counts = counts_from(instance.poly.n(), local_solver(instance.poly, samples, greedy));
  }
  const ExactResult exact = exact_for(instance.poly, common);
  if (!out_path.empty()) write_file(out_path, dump(counts_to_json(counts)));
  out << dump(summary_to_json(summarize(counts, instance.poly, exact)));
  return kExitOk;
}

// ---------------------------------------------------------------- report

int cmd_report(const std::string& counts_path, const std::string& instance_path, const std::string& out_path,
               const std::string& cdf_path, const Common& common, std::ostream& out) {
  const SampleCounts counts = counts_from_json(parse_json(read_file(counts_path), "counts " + counts_path));
  if (counts.empty()) throw InvalidInput("counts file " + counts_path + " holds no shots");
  const Instance instance = load_instance(instance_path);
  if (counts.n() != instance.poly.n()) throw InvalidInput("counts and instance disagree on the number of variables");
  const ExactResult exact = exact_for(instance.poly, common);
  emit(out, out_path, dump(summary_to_json(summarize(counts, instance.poly, exact))));
  if (!cdf_path.empty()) emit(out, cdf_path, format_cdf(ar_cdf(counts, instance.poly, exact)));
  return kExitOk;
}

// ---------------------------------------------------------------- postprocess

int cmd_postprocess(const std::string& counts_path, const std::string& instance_path, int traversals,
                    const std::string& out_path, const Common& common, std::ostream& out) {
  const SampleCounts counts = counts_from_json(parse_json(read_file(counts_path), "counts " + counts_path));
  const Instance instance = load_instance(instance_path);
  if (counts.n() != instance.poly.n()) throw InvalidInput("counts and instance disagree on the number of variables");
  GreedyConfig greedy;
  greedy.max_traversals = traversals;
  greedy.seed = common.seed;
  greedy.validate();
  emit(out, out_path, dump(counts_to_json(postprocess_counts(counts, instance.poly, greedy))));
  return kExitOk;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string kind;
  int rows = 1, cols = 1;
  std::string coupling, triples;
  int n = 0, k = 3;
  bool weighted = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
};

CouplingFragment load_coupling(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(parse_json(text, "coupling " + path));
  return {parse_edge_list(text), {}};
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.kind == "heavy-hex") {
    const auto fragment = heavy_hex_fragment(a.rows, a.cols);
    emit(out, a.out, dump(graph_to_json(fragment.graph, &fragment.triples)));
    return kExitOk;
  }
  if (!a.seed_given) throw InvalidInput("gen " + a.kind + " requires --seed");
  if (a.kind == "spin-glass") {
    CouplingFragment fragment;
    if (!a.coupling.empty()) {
      fragment = load_coupling(a.coupling);
      if (!a.triples.empty()) {
        fragment.triples = parse_triples(read_file(a.triples));
      } else if (fragment.triples.empty()) {
        fragment.triples = degree_two_triples(fragment.graph);
      }
    } else {
      fragment = heavy_hex_fragment(a.rows, a.cols);
      if (!a.triples.empty()) fragment.triples = parse_triples(read_file(a.triples));
    }
    const auto poly = spin_glass_instance(fragment.graph, fragment.triples, a.seed);
    emit(out, a.out, dump(polynomial_to_json(poly)));
    return kExitOk;
  }
  if (a.kind == "regular") {
    if (a.n <= 0) throw InvalidInput("gen regular requires --n");
    emit(out, a.out, format_edge_list(random_regular_graph(a.n, a.k, a.seed, a.weighted)));
    return kExitOk;
  }
  throw InvalidInput("unknown instance kind \"" + a.kind + "\"");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biased-QAOA hybrid solver for spin polynomials", args.empty() ? "bqaoa" : args.front()};
  app.require_subcommand(1);

  Common common;
  std::string instance, out_path, counts_path, cdf_path;
  const auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--enumeration-cap", common.enumeration_cap, "Largest n solved by exhaustive enumeration")
        ->capture_default_str();
    sub->add_option("--threads", common.threads, "Worker threads (0 = hardware concurrency)");
  };

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run the staged biased-QAOA loop and write a report directory");
  solve.opts["--config"] = solve_cmd->add_option("--config", solve.config, "JSON run configuration");
  solve.opts["--instance"] = solve_cmd->add_option("--instance", solve.instance, "Instance file");
  solve.opts["--out"] = solve_cmd->add_option("--out", solve.out, "Output directory");
  solve.opts["--seed"] = solve_cmd->add_option("--seed", solve.seed, "Master seed");
  solve.opts["--shots"] = solve_cmd->add_option("--shots", solve.shots, "Shots per circuit");
  solve.opts["--stages"] = solve_cmd->add_option("--stages", solve.stages, "Number of stages");
  solve.opts["--steps"] = solve_cmd->add_option("--steps", solve.steps, "Optimization steps per stage");
  solve.opts["--circuits"] = solve_cmd->add_option("--circuits", solve.circuits, "Circuits per step");
  solve.opts["--layers"] = solve_cmd->add_option("--layers", solve.layers, "QAOA layers p");
  solve.opts["--alpha"] = solve_cmd->add_option("--alpha", solve.alpha, "CVaR tail fraction");
  solve.opts["--sigma"] = solve_cmd->add_option("--sigma", solve.sigma, "Initial CMA-ES step size");
  solve.opts["--schedule"] = solve_cmd->add_option("--schedule", solve.schedule, "Comma-separated bias angles");
  solve.opts["--max-qubits"] = solve_cmd->add_option("--max-qubits", solve.max_qubits, "Simulator qubit limit");
  solve.opts["--threads"] = solve_cmd->add_option("--threads", solve.threads, "Worker threads (0 = hardware)");
  solve.opts["--baseline"] =
      solve_cmd->add_option("--baseline", solve.baselines, "Classical baselines to add: random, local");
  solve.opts["--baseline-samples"] =
      solve_cmd->add_option("--baseline-samples", solve.baseline_samples, "Samples per baseline (default: shots)");
  solve_cmd->add_option("--enumeration-cap", solve.enumeration_cap, "Largest n solved by exhaustive enumeration");

  auto* exact_cmd = app.add_subcommand("exact", "Exhaustive minimum and maximum of an instance");
  exact_cmd->add_option("--instance", instance, "Instance file")->required();
  exact_cmd->add_option("--out", out_path, "Output file (default: stdout)");
  add_cap(exact_cmd);

  std::string kind;
  std::size_t samples = 2048;
  int restarts = 5;
  int traversals = 5;
  auto* baseline_cmd = app.add_subcommand("baseline", "Sample a classical baseline and summarize it");
  baseline_cmd->add_option("--instance", instance, "Instance file")->required();
  baseline_cmd->add_option("--kind", kind, "random or local")->required()->check(CLI::IsMember({"random", "local"}));
  baseline_cmd->add_option("--samples", samples, "Number of samples")->capture_default_str();
  baseline_cmd->add_option("--seed", common.seed, "Master seed")->required();
  baseline_cmd->add_option("--restarts", restarts, "Greedy passes per sample (local)")->capture_default_str();
  baseline_cmd->add_option("--traversals", traversals, "Traversals per greedy pass")->capture_default_str();
  baseline_cmd->add_option("--out", out_path, "Write the counts document here");
  add_cap(baseline_cmd);

  auto* report_cmd = app.add_subcommand("report", "Summarize a counts document against an instance");
  report_cmd->add_option("--counts", counts_path, "Counts document")->required();
  report_cmd->add_option("--instance", instance, "Instance file")->required();
  report_cmd->add_option("--out", out_path, "Summary output (default: stdout)");
  report_cmd->add_option("--cdf", cdf_path, "Write the AR CDF table here");
  add_cap(report_cmd);

  auto* post_cmd = app.add_subcommand("postprocess", "Greedy-refine every shot of a counts document");
  post_cmd->add_option("--counts", counts_path, "Counts document")->required();
  post_cmd->add_option("--instance", instance, "Instance file")->required();
  post_cmd->add_option("--seed", common.seed, "Master seed")->required();
  post_cmd->add_option("--traversals", traversals, "Traversals per greedy pass")->capture_default_str();
  post_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("kind", gen.kind, "heavy-hex, spin-glass or regular")
      ->required()
      ->check(CLI::IsMember({"heavy-hex", "spin-glass", "regular"}));
  gen_cmd->add_option("--rows", gen.rows, "Heavy-hex fragment rows")->capture_default_str();
  gen_cmd->add_option("--cols", gen.cols, "Heavy-hex fragment columns")->capture_default_str();
  gen_cmd->add_option("--coupling", gen.coupling, "Coupling graph (edge list or graph JSON) for spin-glass");
  gen_cmd->add_option("--triples", gen.triples, "Cubic-term triples for spin-glass");
  gen_cmd->add_option("--n", gen.n, "Node count for regular");
  gen_cmd->add_option("--k", gen.k, "Degree for regular")->capture_default_str();
  gen_cmd->add_flag("--weighted", gen.weighted, "Draw edge weights from {0.25, 0.5, 0.75, 1}");
  auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");

  try {
    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve, out);
    if (exact_cmd->parsed()) return cmd_exact(instance, out_path, common, out);
    if (baseline_cmd->parsed()) {
      return cmd_baseline(instance, kind, samples, restarts, traversals, out_path, common, out);
    }
    if (report_cmd->parsed()) return cmd_report(counts_path, instance, out_path, cdf_path, common, out);
    if (post_cmd->parsed()) return cmd_postprocess(counts_path, instance, traversals, out_path, common, out);
    if (gen_cmd->parsed()) {
      gen.seed_given = gen_seed->count() > 0;
      return cmd_gen(gen, out);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed document: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace bqaoa
