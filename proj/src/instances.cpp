#include "bqaoa/instances.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "bqaoa/error.hpp"
#include "bqaoa/seeding.hpp"

namespace bqaoa {

CouplingFragment heavy_hex_fragment(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidInput("heavy-hex fragment needs rows >= 1 and cols >= 1");
  const int length = 4 * cols + 1;
  std::vector<Edge> edges;
  std::vector<VarIndex> chain_start;
  VarIndex next = 0;
  std::vector<std::vector<std::pair<VarIndex, int>>> gap_bridges(static_cast<std::size_t>(rows));
  for (int r = 0; r <= rows; ++r) {
    chain_start.push_back(next);
    for (int c = 0; c + 1 < length; ++c) edges.push_back({next + static_cast<VarIndex>(c), next + static_cast<VarIndex>(c) + 1, 1.0});
    next += static_cast<VarIndex>(length);
    if (r == rows) break;
    const int first = (r % 2 == 0) ? 0 : 2;
    for (int c = first; c < length; c += 4) gap_bridges[static_cast<std::size_t>(r)].push_back({next++, c});
  }
  for (int g = 0; g < rows; ++g) {
    for (auto [bridge, col] : gap_bridges[static_cast<std::size_t>(g)]) {
      edges.push_back({chain_start[static_cast<std::size_t>(g)] + static_cast<VarIndex>(col), bridge, 1.0});
      edges.push_back({bridge, chain_start[static_cast<std::size_t>(g) + 1] + static_cast<VarIndex>(col), 1.0});
    }
  }
  WeightedGraph graph(next, std::move(edges));
  auto triples = degree_two_triples(graph);
  return {std::move(graph), std::move(triples)};
}

std::vector<Triple> degree_two_triples(const WeightedGraph& graph) {
  std::vector<std::vector<VarIndex>> adj(graph.n());
  for (const auto& e : graph.edges()) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::set<Triple> out;
  for (VarIndex j = 0; j < graph.n(); ++j) {
    if (adj[j].size() != 2) continue;
    const VarIndex a = std::min(adj[j][0], adj[j][1]);
    const VarIndex b = std::max(adj[j][0], adj[j][1]);
    out.insert(Triple{a, j, b});
  }
  return {out.begin(), out.end()};
}

SpinPolynomial spin_glass_instance(const WeightedGraph& coupling, const std::vector<Triple>& triples,
                                   std::uint64_t seed) {
  std::set<Triple> seen;
  for (const auto& t : triples) {
    for (VarIndex v : t) {
      if (v >= coupling.n()) throw InvalidInput("triple index " + std::to_string(v) + " out of range");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw InvalidInput("triple repeats a node");
    Triple key = t;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) throw InvalidInput("duplicate triple");
  }
  std::mt19937_64 rng(derive_seed(seed, Stream::kCoefficients));
  auto draw = [&rng] { return (rng() >> 63) != 0 ? 1.0 : -1.0; };
  std::vector<Term> terms;
  terms.reserve(coupling.n() + coupling.edges().size() + triples.size());
  for (VarIndex v = 0; v < coupling.n(); ++v) terms.push_back({draw(), {v}});
  for (const auto& e : coupling.edges()) terms.push_back({draw(), {e.i, e.j}});
  for (const auto& t : triples) terms.push_back({draw(), {t[0], t[1], t[2]}});
  return SpinPolynomial(coupling.n(), std::move(terms));
}

WeightedGraph random_regular_graph(int n, int k, std::uint64_t seed, bool weighted) {
  if (n < 1 || k < 0 || k >= n || (n * k) % 2 != 0) {
    throw InvalidInput("no simple " + std::to_string(k) + "-regular graph on " + std::to_string(n) + " nodes");
  }
  std::mt19937_64 rng(derive_seed(seed, Stream::kGraph));
  std::vector<VarIndex> points;
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < k; ++c) points.push_back(static_cast<VarIndex>(v));
  }
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<VarIndex, VarIndex>> pairs;
    bool ok = true;
    for (std::size_t p = 0; p < points.size(); p += 2) {
      auto a = points[p], b = points[p + 1];
      if (a == b) {
        ok = false;
        break;
      }
      if (a > b) std::swap(a, b);
      if (!pairs.insert({a, b}).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    std::mt19937_64 weight_rng(derive_seed(seed, Stream::kGraph, {1}));
    for (auto [a, b] : pairs) {
      double w = 1.0;
      if (weighted) w = 0.25 * static_cast<double>(1 + (weight_rng() >> 62));
      edges.push_back({a, b, w});
    }
    return WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
  }
  throw Error("random_regular_graph: pairing model did not produce a simple graph");
}

}  // namespace bqaoa
