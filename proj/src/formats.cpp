#include "bqaoa/formats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bqaoa {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <class T>
T get_field(const Json& doc, const char* key, std::string_view what) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InvalidInput(std::string(what) + ": missing field \"" + key + "\"");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string(what) + ": bad field \"" + key + "\": " + e.what());
  }
}

// Lines of whitespace-separated numbers; returns the rows and the "# n=" value.
struct Table {
  std::vector<std::vector<std::string>> rows;
  std::optional<std::size_t> declared_n;
};

Table split_table(std::string_view text) {
  Table table;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      auto body = trim(view.substr(1));
      if (body.starts_with("n=")) table.declared_n = static_cast<std::size_t>(std::stoull(std::string(body.substr(2))));
      continue;
    }
    std::istringstream fields{std::string(view)};
    std::vector<std::string> row;
    for (std::string f; fields >> f;) row.push_back(f);
    table.rows.push_back(std::move(row));
  }
  return table;
}

VarIndex parse_index(const std::string& s) {
  VarIndex v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw InvalidInput("bad node index \"" + s + "\"");
  return v;
}

double parse_real(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw InvalidInput("bad number \"" + s + "\"");
    return v;
  } catch (const std::logic_error&) {
    throw InvalidInput("bad number \"" + s + "\"");
  }
}

Json bits_or_null(const std::optional<Bitstring>& b) { return b ? Json(b->str()) : Json(nullptr); }

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError("cannot write file: " + path.string());
  out << content;
  if (!out) throw FileError("failed writing file: " + path.string());
}

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

Json polynomial_to_json(const SpinPolynomial& poly) {
  Json terms = Json::array();
  for (const auto& t : poly.terms()) terms.push_back(Json::array({t.coeff, t.vars}));
  return Json{{"n", poly.n()}, {"terms", std::move(terms)}};
}

SpinPolynomial polynomial_from_json(const Json& doc) {
  const auto n = get_field<std::size_t>(doc, "n", "polynomial");
  const auto& raw = doc.at("terms");
  if (!raw.is_array()) throw InvalidInput("polynomial: \"terms\" must be an array");
  std::vector<Term> terms;
  for (const auto& t : raw) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number() || !t[1].is_array()) {
      throw InvalidInput("polynomial: each term must be [coeff, [vars...]]");
    }
    Term term;
    term.coeff = t[0].get<double>();
    for (const auto& v : t[1]) {
      if (!v.is_number_unsigned()) throw InvalidInput("polynomial: variable indices must be non-negative integers");
      term.vars.push_back(v.get<VarIndex>());
    }
    terms.push_back(std::move(term));
  }
  return SpinPolynomial(n, std::move(terms));
}

Json graph_to_json(const WeightedGraph& graph, const std::vector<Triple>* triples) {
  Json edges = Json::array();
  for (const auto& e : graph.edges()) edges.push_back(Json::array({e.i, e.j, e.weight}));
  Json doc{{"n", graph.n()}, {"edges", std::move(edges)}};
  if (triples != nullptr) {
    Json t = Json::array();
    for (const auto& tr : *triples) t.push_back(Json::array({tr[0], tr[1], tr[2]}));
    doc["triples"] = std::move(t);
  }
  return doc;
}

CouplingFragment graph_from_json(const Json& doc) {
  const auto n = get_field<std::size_t>(doc, "n", "graph");
  const auto& raw = doc.at("edges");
  if (!raw.is_array()) throw InvalidInput("graph: \"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : raw) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned() ||
        !e[2].is_number()) {
      throw InvalidInput("graph: each edge must be [i, j, w]");
    }
    edges.push_back({e[0].get<VarIndex>(), e[1].get<VarIndex>(), e[2].get<double>()});
  }
  CouplingFragment out{WeightedGraph(n, std::move(edges)), {}};
  if (doc.contains("triples")) {
    for (const auto& t : doc.at("triples")) {
      if (!t.is_array() || t.size() != 3) throw InvalidInput("graph: each triple must be [i, j, k]");
      out.triples.push_back({t[0].get<VarIndex>(), t[1].get<VarIndex>(), t[2].get<VarIndex>()});
    }
  }
  return out;
}

WeightedGraph parse_edge_list(std::string_view text) {
  const auto table = split_table(text);
  std::vector<Edge> edges;
  std::size_t n = 0;
  for (const auto& row : table.rows) {
    if (row.size() != 2 && row.size() != 3) throw InvalidInput("edge list lines must be \"i j [w]\"");
    Edge e{parse_index(row[0]), parse_index(row[1]), row.size() == 3 ? parse_real(row[2]) : 1.0};
    n = std::max<std::size_t>(n, std::max(e.i, e.j) + std::size_t{1});
    edges.push_back(e);
  }
  if (table.declared_n) {
    if (*table.declared_n < n) throw InvalidInput("edge list declares fewer nodes than it uses");
    n = *table.declared_n;
  }
  return WeightedGraph(n, std::move(edges));
}

std::string format_edge_list(const WeightedGraph& graph) {
  std::string out = "# n=" + std::to_string(graph.n()) + "\n";
  for (const auto& e : graph.edges()) {
    out += std::to_string(e.i) + ' ' + std::to_string(e.j) + ' ' + format_number(e.weight) + '\n';
  }
  return out;
}

std::vector<Triple> parse_triples(std::string_view text) {
  std::vector<Triple> out;
  for (const auto& row : split_table(text).rows) {
    if (row.size() != 3) throw InvalidInput("triple lines must be \"i j k\"");
    out.push_back({parse_index(row[0]), parse_index(row[1]), parse_index(row[2])});
  }
  return out;
}

Instance load_instance(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto body = trim(text);
  if (body.empty()) throw InvalidInput("instance file is empty: " + path.string());
  if (body.front() == '{') {
    const Json doc = parse_json(body, "instance " + path.string());
    if (doc.contains("terms")) return {polynomial_from_json(doc), std::nullopt};
    if (doc.contains("edges")) {
      auto fragment = graph_from_json(doc);
      auto poly = maxcut_polynomial(fragment.graph);
      return {std::move(poly), std::move(fragment.graph)};
    }
    throw InvalidInput("instance " + path.string() + " has neither \"terms\" nor \"edges\"");
  }
  auto graph = parse_edge_list(body);
  auto poly = maxcut_polynomial(graph);
  return {std::move(poly), std::move(graph)};
}

Json counts_to_json(const SampleCounts& counts) {
  Json map = Json::object();
  for (const auto& [bits, m] : counts) map[bits.str()] = m;
  return Json{{"n", counts.n()}, {"shots", counts.shots()}, {"counts", std::move(map)}};
}

SampleCounts counts_from_json(const Json& doc) {
  const auto n = get_field<std::size_t>(doc, "n", "counts");
  if (!doc.contains("counts") || !doc.at("counts").is_object()) throw InvalidInput("counts: missing \"counts\" object");
  SampleCounts out(n);
  for (const auto& [key, value] : doc.at("counts").items()) {
    if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0) {
      throw InvalidInput("counts: multiplicities must be positive integers");
    }
    out.add(Bitstring::parse(key), value.get<std::uint64_t>());
  }
  if (doc.contains("shots") && doc.at("shots").get<std::uint64_t>() != out.shots()) {
    throw InvalidInput("counts: \"shots\" does not equal the sum of multiplicities");
  }
  return out;
}

Json summary_to_json(const RunSummary& s) {
  Json top = Json::array();
  for (const auto& t : s.top_solutions) top.push_back(Json{{"bits", t.bits.str()}, {"count", t.count}});
  return Json{{"best", s.best},         {"best_ar", s.best_ar}, {"likelihood", s.likelihood},
              {"mean", s.mean},         {"mean_ar", s.mean_ar}, {"count", s.count},
              {"unique", s.unique_optimal}, {"total_shots", s.shots}, {"top_solutions", std::move(top)}};
}

RunSummary summary_from_json(const Json& doc) {
  RunSummary s;
  s.best = get_field<double>(doc, "best", "summary");
  s.best_ar = get_field<double>(doc, "best_ar", "summary");
  s.likelihood = get_field<double>(doc, "likelihood", "summary");
  s.mean = get_field<double>(doc, "mean", "summary");
  s.mean_ar = get_field<double>(doc, "mean_ar", "summary");
  s.count = get_field<std::uint64_t>(doc, "count", "summary");
  s.unique_optimal = get_field<std::size_t>(doc, "unique", "summary");
  s.shots = get_field<std::uint64_t>(doc, "total_shots", "summary");
  if (doc.contains("top_solutions")) {
    for (const auto& t : doc.at("top_solutions")) {
      s.top_solutions.push_back({Bitstring::parse(t.at("bits").get<std::string>()), t.at("count").get<std::uint64_t>()});
    }
  }
  return s;
}

std::string format_cdf(const std::vector<CdfPoint>& cdf) {
  std::string out = "# fraction ar\n";
  for (const auto& p : cdf) out += format_number(p.fraction) + ' ' + format_number(p.ar) + '\n';
  return out;
}

std::vector<CdfPoint> parse_cdf(std::string_view text) {
  std::vector<CdfPoint> out;
  for (const auto& row : split_table(text).rows) {
    if (row.size() != 2) throw InvalidInput("cdf lines must be \"fraction ar\"");
    out.push_back({parse_real(row[0]), parse_real(row[1])});
  }
  return out;
}

std::string format_trace(const RunTrace& trace) {
  std::string out;
  std::size_t step_pos = 0;
  for (const auto& stage : trace.stages) {
    Json ev{{"event", "stage"},
            {"stage", stage.stage},
            {"delta", stage.delta},
            {"target", bits_or_null(stage.target)},
            {"hamming_from_previous_target",
             stage.hamming_from_previous_target ? Json(*stage.hamming_from_previous_target) : Json(nullptr)},
            {"delta_max_at_distance",
             stage.delta_max_at_distance ? Json(*stage.delta_max_at_distance) : Json(nullptr)},
            {"theta", stage.theta}};
    out += ev.dump() + '\n';
    for (; step_pos < trace.steps.size() && trace.steps[step_pos].stage == stage.stage; ++step_pos) {
      const auto& step = trace.steps[step_pos];
      Json circuits = Json::array();
      for (const auto& c : step.circuits) {
        circuits.push_back(Json{{"gamma", c.gamma},
                                {"beta", c.beta},
                                {"cvar", c.cvar},
                                {"min_cost", c.min_cost},
                                {"baseline", c.baseline}});
      }
      Json sev{{"event", "step"},         {"stage", step.stage},         {"step", step.step},
               {"circuits", circuits},    {"best_cost", step.best_cost}, {"best", step.best.str()}};
      out += sev.dump() + '\n';
    }
  }
  const auto& f = trace.final;
  Json fev{{"event", "final"},           {"stage", f.stage},
           {"step", f.step},             {"circuit", f.circuit},
           {"raw_best_cost", f.raw_best_cost}, {"post_best_cost", f.post_best_cost}};
  out += fev.dump() + '\n';
  return out;
}

RunTrace parse_trace(std::string_view text) {
  RunTrace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const Json ev = parse_json(line, "trace line");
    const auto kind = get_field<std::string>(ev, "event", "trace");
    if (kind == "stage") {
      StageRecord s;
      s.stage = ev.at("stage").get<std::size_t>();
      s.delta = ev.at("delta").get<double>();
      s.theta = ev.at("theta").get<std::vector<double>>();
      if (!ev.at("target").is_null()) s.target = Bitstring::parse(ev.at("target").get<std::string>());
      if (!ev.at("hamming_from_previous_target").is_null()) {
        s.hamming_from_previous_target = ev.at("hamming_from_previous_target").get<std::size_t>();
      }
      if (!ev.at("delta_max_at_distance").is_null()) {
        s.delta_max_at_distance = ev.at("delta_max_at_distance").get<double>();
      }
      trace.stages.push_back(std::move(s));
    } else if (kind == "step") {
      StepRecord s;
      s.stage = ev.at("stage").get<std::size_t>();
      s.step = ev.at("step").get<std::size_t>();
      s.best = Bitstring::parse(ev.at("best").get<std::string>());
      s.best_cost = ev.at("best_cost").get<double>();
      for (const auto& c : ev.at("circuits")) {
        s.circuits.push_back({c.at("gamma").get<std::vector<double>>(), c.at("beta").get<std::vector<double>>(),
                              c.at("cvar").get<double>(), c.at("min_cost").get<double>(),
                              c.at("baseline").get<bool>()});
      }
      trace.steps.push_back(std::move(s));
    } else if (kind == "final") {
      trace.final.stage = ev.at("stage").get<std::size_t>();
      trace.final.step = ev.at("step").get<std::size_t>();
      trace.final.circuit = ev.at("circuit").get<std::size_t>();
      trace.final.raw_best_cost = ev.at("raw_best_cost").get<double>();
      trace.final.post_best_cost = ev.at("post_best_cost").get<double>();
    } else {
      throw InvalidInput("trace: unknown event \"" + kind + "\"");
    }
  }
  return trace;
}

StageConfig stage_config_from_json(const Json& doc, StageConfig c) {
  if (!doc.is_object()) throw InvalidInput("run configuration must be a JSON object");
  auto take = [&](const char* key, auto& field) {
    if (doc.contains(key)) field = get_field<std::decay_t<decltype(field)>>(doc, key, "run configuration");
  };
  take("stages", c.stages);
  take("steps_per_stage", c.steps_per_stage);
  take("circuits_per_step", c.circuits_per_step);
  take("shots", c.shots);
  take("layers", c.layers);
  take("bias_schedule", c.bias_schedule);
  take("sigma0", c.sigma0);
  take("alpha", c.alpha);
  take("gamma_positive", c.gamma_positive);
  take("gamma_init_max", c.gamma_init_max);
  take("beta_init_half_width", c.beta_init_half_width);
  take("greedy_traversals", c.greedy_traversals);
  take("seed", c.seed);
  take("max_qubits", c.max_qubits);
  take("threads", c.threads);
  return c;
}

Json stage_config_to_json(const StageConfig& c) {
  return Json{{"stages", c.stages},
              {"steps_per_stage", c.steps_per_stage},
              {"circuits_per_step", c.circuits_per_step},
              {"shots", c.shots},
              {"layers", c.layers},
              {"bias_schedule", c.bias_schedule},
              {"sigma0", c.sigma0},
              {"alpha", c.alpha},
              {"gamma_positive", c.gamma_positive},
              {"gamma_init_max", c.gamma_init_max},
              {"beta_init_half_width", c.beta_init_half_width},
              {"greedy_traversals", c.greedy_traversals},
              {"seed", c.seed},
              {"max_qubits", c.max_qubits}};
}

}  // namespace bqaoa
