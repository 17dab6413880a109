#include "srgb/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "srgb/cab_bounds.hpp"

namespace srgb {

// Bitset -------------------------------------------------------------------

bool Bitset::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Bitset::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return (i << 6) + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return n_;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

// Graph --------------------------------------------------------------------

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order()) throw DomainError("edge endpoint out of range");
  if (u == v) throw DomainError("loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const Bitset& row : rows_) total += row.count();
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v : rows_[u].indices())
      if (u < v) out.emplace_back(u, v);
  return out;
}

// Constructions ------------------------------------------------------------

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Graph paley(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("paley: " + std::to_string(p) + " is not prime");
  if (p % 4 != 1) throw DomainError("paley: p must be 1 mod 4 so that -1 is a square");
  std::vector<bool> square(static_cast<std::size_t>(p), false);
  for (std::int64_t x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = true;
  Graph g(static_cast<std::size_t>(p));
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = a + 1; b < p; ++b)
      if (square[static_cast<std::size_t>(b - a)]) g.add_edge(a, b);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph fano_incidence_graph() {
  // Lines of the Fano plane on points 1..7.
  static constexpr int kLines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                       {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
  Graph g(14);  // points 0..6, lines 7..13
  for (std::size_t line = 0; line < 7; ++line)
    for (int point : kLines[line]) g.add_edge(static_cast<std::size_t>(point - 1), 7 + line);
  return g;
}

Graph line_graph(const Graph& g) {
  auto es = g.edges();
  if (es.empty()) throw DomainError("line graph of an edgeless graph");
  Graph out(es.size());
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) out.add_edge(i, j);
    }
  return out;
}

Graph distance_graph(const Graph& g, std::size_t i) {
  if (i == 0) throw DomainError("distance graph needs i >= 1");
  const std::size_t n = g.order();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  Graph out(n);
  std::vector<std::size_t> dist(n);
  for (std::size_t src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    std::queue<std::size_t> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      if (dist[u] == i) continue;
      for (std::size_t w : g.neighbours(u).indices()) {
        if (dist[w] != kUnseen) continue;
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
    for (std::size_t v = src + 1; v < n; ++v)
      if (dist[v] == i) out.add_edge(src, v);
  }
  return out;
}

Graph heawood_line_distance3() {
  return distance_graph(line_graph(fano_incidence_graph()), 3);
}

// Regularity ---------------------------------------------------------------

std::optional<EdgeRegularParams> is_edge_regular(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  const std::size_t k = g.degree(0);
  if (k == 0) return std::nullopt;
  for (std::size_t u = 1; u < n; ++u)
    if (g.degree(u) != k) return std::nullopt;
  std::optional<std::size_t> lambda;
  for (auto [u, v] : g.edges()) {
    std::size_t common = (g.neighbours(u) & g.neighbours(v)).count();
    if (lambda && *lambda != common) return std::nullopt;
    lambda = common;
  }
  return EdgeRegularParams{static_cast<std::int64_t>(n), static_cast<std::int64_t>(k),
                           static_cast<std::int64_t>(*lambda)};
}

std::optional<SrgParams> is_strongly_regular(const Graph& g) {
  auto er = is_edge_regular(g);
  if (!er || er->k > er->v - 2) return std::nullopt;
  std::optional<std::size_t> mu;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      std::size_t common = (g.neighbours(u) & g.neighbours(v)).count();
      if (mu && *mu != common) return std::nullopt;
      mu = common;
    }
  return SrgParams{er->v, er->k, er->lambda, static_cast<std::int64_t>(*mu)};
}

// Maximum clique -----------------------------------------------------------

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : n_(g.order()) {
    // Degree-descending order, index tie-break; renumber so bit i is order_[i].
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return g.degree(a) > g.degree(b);
    });
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
    adj_.assign(n_, Bitset(n_));
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v : g.neighbours(u).indices()) adj_[pos[u]].set(pos[v]);
  }

  CliqueResult run() {
    Bitset all(n_);
    for (std::size_t i = 0; i < n_; ++i) all.set(i);
    if (n_ > 0) expand(all);
    CliqueResult out;
    out.size = best_.size();
    for (std::size_t i : best_) out.witness.push_back(order_[i]);
    std::sort(out.witness.begin(), out.witness.end());
    return out;
  }

 private:
  // Greedy sequential colouring of P; vertices come out grouped by colour with
  // colour[i] bounding the clique size within the first i+1 vertices.
  void colour_sort(const Bitset& p, std::vector<std::size_t>& verts,
                   std::vector<std::size_t>& colour) const {
    Bitset uncoloured = p;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset q = uncoloured;
      while (q.any()) {
        std::size_t v = q.first();
        q.reset(v);
        q.subtract(adj_[v]);
        uncoloured.reset(v);
        verts.push_back(v);
        colour.push_back(c);
      }
    }
  }

  void expand(Bitset p) {
    std::vector<std::size_t> verts, colour;
    colour_sort(p, verts, colour);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current_.size() + colour[i] <= best_.size()) return;
      std::size_t v = verts[i];
      current_.push_back(v);
      Bitset next = p & adj_[v];
      if (next.any()) {
        expand(std::move(next));
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<Bitset> adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

CliqueResult max_clique(const Graph& g) {
  if (g.order() > kMaxCliqueOrder)
    throw std::length_error("max_clique supports at most " + std::to_string(kMaxCliqueOrder) +
                            " vertices, got " + std::to_string(g.order()));
  return CliqueSearch(g).run();
}

bool check_thm42(const Graph& g, const EdgeRegularParams& p) {
  auto actual = is_edge_regular(g);
  if (!actual || !(*actual == p)) throw DomainError("graph is not edge-regular with the given parameters");
  std::size_t omega = max_clique(g).size;
  for (std::int64_t c = 2; c <= static_cast<std::int64_t>(omega); ++c) {
    // c == v only for complete graphs, where C(., v) is the constant 0.
    BigInt least = c < p.v ? cap_min_over_b(p, c).value : cap_eval(p, 0, c);
    if (least < 0) return false;
  }
  return true;
}

}  // namespace srgb
