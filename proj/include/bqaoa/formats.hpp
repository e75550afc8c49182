#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bqaoa/biased_qaoa.hpp"
#include "bqaoa/error.hpp"
#include "bqaoa/instances.hpp"
#include "bqaoa/oracle.hpp"
#include "bqaoa/problem.hpp"
#include "bqaoa/sample_counts.hpp"

namespace bqaoa {

using Json = nlohmann::ordered_json;

/// A referenced file does not exist or cannot be read/written.
class FileError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

[[nodiscard]] std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);
[[nodiscard]] Json parse_json(std::string_view text, std::string_view what);

// {"n": N, "terms": [[coeff, [vars...]], ...]}
[[nodiscard]] Json polynomial_to_json(const SpinPolynomial& poly);
[[nodiscard]] SpinPolynomial polynomial_from_json(const Json& doc);

// {"n": N, "edges": [[i, j, w], ...], "triples": [[i, j, k], ...]}; triples optional.
[[nodiscard]] Json graph_to_json(const WeightedGraph& graph, const std::vector<Triple>* triples = nullptr);
[[nodiscard]] CouplingFragment graph_from_json(const Json& doc);

/// "i j w" per line ("i j" means w = 1). Blank lines and '#' comments are
/// skipped; a "# n=<count>" comment fixes the node count, otherwise it is
/// one more than the largest index.
[[nodiscard]] WeightedGraph parse_edge_list(std::string_view text);
[[nodiscard]] std::string format_edge_list(const WeightedGraph& graph);

/// "i j k" per line, same comment rules as edge lists.
[[nodiscard]] std::vector<Triple> parse_triples(std::string_view text);

struct Instance {
  SpinPolynomial poly;
  /// Present for Max-Cut instances read from a graph document.
  std::optional<WeightedGraph> graph;
};

/// Polynomial JSON, graph JSON (as Max-Cut) or edge-list text (as Max-Cut).
[[nodiscard]] Instance load_instance(const std::filesystem::path& path);

// {"n": N, "shots": S, "counts": {"0101": m, ...}}; key character i is bit i.
[[nodiscard]] Json counts_to_json(const SampleCounts& counts);
[[nodiscard]] SampleCounts counts_from_json(const Json& doc);

[[nodiscard]] Json summary_to_json(const RunSummary& summary);
[[nodiscard]] RunSummary summary_from_json(const Json& doc);

/// "fraction ar" per line with a commented header.
[[nodiscard]] std::string format_cdf(const std::vector<CdfPoint>& cdf);
[[nodiscard]] std::vector<CdfPoint> parse_cdf(std::string_view text);

/// One JSON object per line: a "stage" event at each stage start, a "step"
/// event per optimization step and a closing "final" event.
[[nodiscard]] std::string format_trace(const RunTrace& trace);
[[nodiscard]] RunTrace parse_trace(std::string_view text);

/// Reads StageConfig fields present in `doc`, keeping `base` for the rest.
[[nodiscard]] StageConfig stage_config_from_json(const Json& doc, StageConfig base = {});
[[nodiscard]] Json stage_config_to_json(const StageConfig& config);

[[nodiscard]] std::string format_number(double value);

}  // namespace bqaoa
