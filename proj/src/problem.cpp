#include "bqaoa/problem.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "bqaoa/error.hpp"

namespace bqaoa {
namespace {

bool canonical_less(const Term& a, const Term& b) {
  if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
  return a.vars < b.vars;
}

// +1 when an even number of the term's spins are -1 (bit 0).
bool term_negative(const Term& t, const Bitstring& x) {
  bool neg = false;
  for (VarIndex v : t.vars) neg ^= !x[v];
  return neg;
}

void check_length(const SpinPolynomial& poly, const Bitstring& x) {
  if (x.size() != poly.n()) {
    throw InvalidInput("bitstring length " + std::to_string(x.size()) +
                       " does not match polynomial size " + std::to_string(poly.n()));
  }
}

}  // namespace

SpinPolynomial::SpinPolynomial(std::size_t n, std::vector<Term> terms) : n_(n) {
  std::map<std::vector<VarIndex>, double> merged;
  for (auto& t : terms) {
    if (!std::isfinite(t.coeff)) throw InvalidInput("non-finite polynomial coefficient");
    std::sort(t.vars.begin(), t.vars.end());
    if (std::adjacent_find(t.vars.begin(), t.vars.end()) != t.vars.end()) {
      throw InvalidInput("term repeats a variable");
    }
    if (!t.vars.empty() && t.vars.back() >= n) {
      throw InvalidInput("term variable " + std::to_string(t.vars.back()) + " out of range for n=" +
                         std::to_string(n));
    }
    merged[std::move(t.vars)] += t.coeff;
  }
  terms_.reserve(merged.size());
  for (auto& [vars, coeff] : merged) {
    if (coeff != 0.0) terms_.push_back(Term{coeff, vars});
  }
  std::sort(terms_.begin(), terms_.end(), canonical_less);
}

double SpinPolynomial::constant() const noexcept {
  if (!terms_.empty() && terms_.front().vars.empty()) return terms_.front().coeff;
  return 0.0;
}

std::size_t SpinPolynomial::count_degree(std::size_t degree) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.vars.size() == degree; }));
}

std::size_t SpinPolynomial::max_degree() const noexcept { return terms_.empty() ? 0 : terms_.back().vars.size(); }

double SpinPolynomial::coefficient_l1() const noexcept {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

TermIndex::TermIndex(const SpinPolynomial& poly) : offsets_(poly.n() + 1, 0) {
  const auto terms = poly.terms();
  for (const auto& t : terms) {
    for (VarIndex v : t.vars) ++offsets_[v + 1];
  }
  for (std::size_t v = 0; v < poly.n(); ++v) offsets_[v + 1] += offsets_[v];
  entries_.resize(offsets_.back());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t k = 0; k < terms.size(); ++k) {
    for (VarIndex v : terms[k].vars) entries_[fill[v]++] = k;
  }
}

std::span<const std::uint32_t> TermIndex::terms_of(std::size_t var) const {
  if (var + 1 >= offsets_.size()) throw InvalidInput("variable index out of range");
  return {entries_.data() + offsets_[var], entries_.data() + offsets_[var + 1]};
}

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.i == e.j) throw InvalidInput("self-loop on node " + std::to_string(e.i));
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.j >= n) throw InvalidInput("edge endpoint " + std::to_string(e.j) + " out of range");
    if (!std::isfinite(e.weight)) throw InvalidInput("non-finite edge weight");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].i == edges_[k - 1].i && edges_[k].j == edges_[k - 1].j) {
      throw InvalidInput("duplicate edge (" + std::to_string(edges_[k].i) + ", " + std::to_string(edges_[k].j) + ")");
    }
  }
}

std::size_t WeightedGraph::degree(std::size_t v) const {
  if (v >= n_) throw InvalidInput("node index out of range");
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.i == v || e.j == v; }));
}

std::size_t WeightedGraph::max_degree() const noexcept {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.i];
    ++deg[e.j];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool WeightedGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{static_cast<VarIndex>(a), static_cast<VarIndex>(b), 0.0},
                            [](const Edge& x, const Edge& y) { return x.i != y.i ? x.i < y.i : x.j < y.j; });
}

std::vector<VarIndex> WeightedGraph::neighbors(std::size_t v) const {
  std::vector<VarIndex> out;
  for (const auto& e : edges_) {
    if (e.i == v) out.push_back(e.j);
    if (e.j == v) out.push_back(e.i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double WeightedGraph::total_weight() const noexcept {
  double s = 0.0;
  for (const auto& e : edges_) s += e.weight;
  return s;
}

SpinPolynomial maxcut_polynomial(const WeightedGraph& graph) {
  std::vector<Term> terms;
  terms.reserve(graph.edges().size() * 2);
  for (const auto& e : graph.edges()) {
    terms.push_back(Term{-0.5 * e.weight, {}});
    terms.push_back(Term{0.5 * e.weight, {e.i, e.j}});
  }
  return SpinPolynomial(graph.n(), std::move(terms));
}

double evaluate(const SpinPolynomial& poly, const Bitstring& x) {
  check_length(poly, x);
  double sum = 0.0;
  for (const auto& t : poly.terms()) sum += term_negative(t, x) ? -t.coeff : t.coeff;
  return sum;
}

double delta_evaluate(const SpinPolynomial& poly, const Bitstring& x, std::size_t i, const TermIndex& index) {
  check_length(poly, x);
  if (i >= poly.n()) throw InvalidInput("flip index " + std::to_string(i) + " out of range");
  const auto terms = poly.terms();
  double sum = 0.0;
  for (std::uint32_t k : index.terms_of(i)) sum += term_negative(terms[k], x) ? -terms[k].coeff : terms[k].coeff;
  return -2.0 * sum;
}

SpinPolynomial negate(const SpinPolynomial& poly) {
  std::vector<Term> terms(poly.terms().begin(), poly.terms().end());
  for (auto& t : terms) t.coeff = -t.coeff;
  return SpinPolynomial(poly.n(), std::move(terms));
}

double cut_value(const WeightedGraph& graph, const Bitstring& x) {
  if (x.size() != graph.n()) throw InvalidInput("bitstring length does not match graph size");
  double cut = 0.0;
  for (const auto& e : graph.edges()) {
    if (x[e.i] != x[e.j]) cut += e.weight;
  }
  return cut;
}

}  // namespace bqaoa
