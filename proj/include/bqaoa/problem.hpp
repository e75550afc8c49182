#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bqaoa/bitstring.hpp"

namespace bqaoa {

using VarIndex = std::uint32_t;

/// One monomial coeff * prod_{v in vars} z_v. An empty `vars` is a constant.
struct Term {
  double coeff = 0.0;
  std::vector<VarIndex> vars;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Cost function C(z) as a sparse multilinear polynomial over +-1 spins.
///
/// Construction sorts each term's variables, merges terms with the same
/// variable set, drops terms whose merged coefficient is exactly zero and
/// stores the result in canonical order (by degree, then lexicographically),
/// so two polynomials built from permuted term lists compare equal.
class SpinPolynomial {
 public:
  SpinPolynomial() = default;
  SpinPolynomial(std::size_t n, std::vector<Term> terms);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::span<const Term> terms() const noexcept { return terms_; }
  [[nodiscard]] double constant() const noexcept;
  /// Number of terms with exactly `degree` variables.
  [[nodiscard]] std::size_t count_degree(std::size_t degree) const noexcept;
  [[nodiscard]] std::size_t max_degree() const noexcept;
  /// Sum of |coeff| over all terms; bounds |C(x)|.
  [[nodiscard]] double coefficient_l1() const noexcept;

  friend bool operator==(const SpinPolynomial&, const SpinPolynomial&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

/// Per-variable list of the terms that contain it.
class TermIndex {
 public:
  explicit TermIndex(const SpinPolynomial& poly);

  [[nodiscard]] std::span<const std::uint32_t> terms_of(std::size_t var) const;
  [[nodiscard]] std::size_t n() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> entries_;
};

struct Edge {
  VarIndex i = 0;
  VarIndex j = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with finite edge weights. Edges are stored with
/// i < j, sorted by (i, j).
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t degree(std::size_t v) const;
  [[nodiscard]] std::size_t max_degree() const noexcept;
  [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const;
  [[nodiscard]] std::vector<VarIndex> neighbors(std::size_t v) const;
  [[nodiscard]] double total_weight() const noexcept;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// C(z) = -1/2 sum_{(i,j)} w_ij (1 - z_i z_j); minimizing C maximizes the cut.
[[nodiscard]] SpinPolynomial maxcut_polynomial(const WeightedGraph& graph);

[[nodiscard]] double evaluate(const SpinPolynomial& poly, const Bitstring& x);

/// C(flip(x, i)) - C(x), touching only the terms that contain i.
[[nodiscard]] double delta_evaluate(const SpinPolynomial& poly, const Bitstring& x, std::size_t i,
                                    const TermIndex& index);

[[nodiscard]] SpinPolynomial negate(const SpinPolynomial& poly);

/// Weight of edges crossing the partition x.
[[nodiscard]] double cut_value(const WeightedGraph& graph, const Bitstring& x);

}  // namespace bqaoa
