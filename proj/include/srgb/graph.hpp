#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "srgb/srg_params.hpp"

namespace srgb {

/// Fixed-size bitset sized at runtime; rows of the adjacency matrix.
class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  bool any() const;
  std::size_t count() const;
  /// Lowest set index, or size() when empty.
  std::size_t first() const;

  Bitset& operator&=(const Bitset& o);
  /// this &= ~o
  Bitset& subtract(const Bitset& o);
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::vector<std::size_t> indices() const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1 (symmetric, no loops).
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : rows_(n, Bitset(n)) {}

  std::size_t order() const { return rows_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& neighbours(std::size_t u) const { return rows_[u]; }
  std::size_t degree(std::size_t u) const { return rows_[u].count(); }
  std::size_t edge_count() const;
  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> rows_;
};

bool is_prime(std::int64_t n);

/// Paley graph on Z_p: a ~ b iff a-b is a nonzero square. p prime, p = 1 mod 4.
Graph paley(std::int64_t p);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph petersen_graph();
/// Point-line incidence graph of the Fano plane (the Heawood graph).
Graph fano_incidence_graph();
Graph line_graph(const Graph& g);
/// Same vertices; u ~ v iff their distance in g is exactly i (i >= 1).
Graph distance_graph(const Graph& g, std::size_t i);
/// Distance-3 graph of the line graph of the Heawood graph: edge-regular
/// (21, 8, 3) but not strongly regular.
Graph heawood_line_distance3();

std::optional<EdgeRegularParams> is_edge_regular(const Graph& g);
std::optional<SrgParams> is_strongly_regular(const Graph& g);

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // sorted vertex list
};

inline constexpr std::size_t kMaxCliqueOrder = 512;

/// Exact maximum clique: bitset branch and bound with greedy colouring bounds.
/// Throws std::length_error above kMaxCliqueOrder vertices.
CliqueResult max_clique(const Graph& g);

/// Checks min_b C(b, c) >= 0 for every clique size c = 2..omega(g).
bool check_thm42(const Graph& g, const EdgeRegularParams& p);

}  // namespace srgb
