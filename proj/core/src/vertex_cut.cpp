#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "kneserlab/binomial.hpp"
#include "kneserlab/errors.hpp"
#include "kneserlab/kneser.hpp"

namespace kneserlab {
namespace {

constexpr int kInfinite = 1 << 28;

using AdjacencyLists = std::vector<std::vector<int>>;

AdjacencyLists build_adjacency(const UniverseParams& params, const CutSearchLimits& limits) {
  const auto count = binomial(params.n, params.r);
  if (count > limits.max_vertices) {
    throw BudgetError("vertex-cut search: C(" + std::to_string(params.n) + "," + std::to_string(params.r) +
                      ")=" + std::to_string(count) + " exceeds limit " + std::to_string(limits.max_vertices));
  }
  const DisjointnessGraph g(params, EnumerationBudget{count});
  AdjacencyLists adj(g.vertex_count());
  Mask v = full_mask(params.r);
  for (std::size_t i = 0; i < adj.size(); ++i, v = next_same_popcount(v)) {
    g.for_each_neighbor(v, [&](Mask w) { adj[i].push_back(static_cast<int>(g.index_of(w))); });
  }
  return adj;
}

// Unit vertex capacities on the split graph: in(v) = 2v, out(v) = 2v + 1.
class VertexSplitFlow {
 public:
  VertexSplitFlow(const AdjacencyLists& adj, const std::vector<char>& removed, const std::vector<char>& uncuttable)
      : head_(2 * adj.size(), -1) {
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (removed[v]) continue;
      add_arc(in(v), out(v), uncuttable[v] ? kInfinite : 1);
      for (int w : adj[v]) {
        if (!removed[w]) add_arc(out(v), in(w), kInfinite);
      }
    }
    parent_arc_.resize(head_.size());
  }

  // min(limit + 1, number of vertices needed to separate s from t).
  int local_connectivity(int s, int t, int limit) {
    std::fill(flow_.begin(), flow_.end(), 0);
    const int source = out(s);
    const int sink = in(t);
    int total = 0;
    std::vector<int> queue;
    queue.reserve(head_.size());
    while (total <= limit) {
      std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
      queue.clear();
      queue.push_back(source);
      parent_arc_[source] = -2;
      for (std::size_t h = 0; h < queue.size() && parent_arc_[sink] == -1; ++h) {
        const int u = queue[h];
        for (int a = head_[u]; a != -1; a = next_[a]) {
          const int w = to_[a];
          if (parent_arc_[w] == -1 && flow_[a] < cap_[a]) {
            parent_arc_[w] = a;
            queue.push_back(w);
          }
        }
      }
      if (parent_arc_[sink] == -1) break;
      int push = limit + 1 - total;
      for (int w = sink; w != source; w = to_[parent_arc_[w] ^ 1]) {
        push = std::min(push, cap_[parent_arc_[w]] - flow_[parent_arc_[w]]);
      }
      for (int w = sink; w != source; w = to_[parent_arc_[w] ^ 1]) {
        flow_[parent_arc_[w]] += push;
        flow_[parent_arc_[w] ^ 1] -= push;
      }
      total += push;
    }
    return std::min(total, limit + 1);
  }

 private:
  static int in(std::size_t v) { return static_cast<int>(2 * v); }
  static int out(std::size_t v) { return static_cast<int>(2 * v + 1); }

  void add_arc(int from, int to, int cap) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    flow_.push_back(0);
    next_.push_back(head_[from]);
    head_[from] = id;
    to_.push_back(from);
    cap_.push_back(0);
    flow_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = id + 1;
  }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> flow_;
  std::vector<int> next_;
  std::vector<int> parent_arc_;
};

bool adjacent(const AdjacencyLists& adj, int s, int t) {
  return std::binary_search(adj[s].begin(), adj[s].end(), t);
}

int count_components(const AdjacencyLists& adj, const std::vector<char>& removed) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack;
  int components = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (removed[v] || seen[v]) continue;
    ++components;
    seen[v] = 1;
    stack.assign(1, static_cast<int>(v));
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

std::vector<int> remaining_vertices(const std::vector<char>& removed) {
  std::vector<int> out;
  for (std::size_t v = 0; v < removed.size(); ++v) {
    if (!removed[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

// Is there a set S of at most `budget` vertices, avoiding `removed` and `uncuttable`,
// whose deletion (together with `removed`) leaves at least two components? Even's sweep:
// some vertex among the first budget + 1 survives, and the lowest-indexed survivor
// is separated from a higher-indexed one.
bool has_cut_within(const AdjacencyLists& adj, const std::vector<char>& removed,
                    const std::vector<char>& uncuttable, int budget) {
  const auto order = remaining_vertices(removed);
  if (order.size() < 2) return false;
  if (count_components(adj, removed) >= 2) return true;
  if (budget <= 0) return false;
  VertexSplitFlow flow(adj, removed, uncuttable);
  for (std::size_t i = 0; i < order.size() && i <= static_cast<std::size_t>(budget); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (adjacent(adj, order[i], order[j])) continue;
      if (flow.local_connectivity(order[i], order[j], budget) <= budget) return true;
    }
  }
  return false;
}

// Vertex connectivity of the whole graph, or nullopt when it is complete.
std::optional<int> vertex_connectivity(const AdjacencyLists& adj) {
  const std::vector<char> none(adj.size(), 0);
  if (adj.size() >= 2 && count_components(adj, none) >= 2) return 0;
  VertexSplitFlow flow(adj, none, none);
  std::optional<int> best;
  for (std::size_t i = 0; i < adj.size() && (!best || i <= static_cast<std::size_t>(*best)); ++i) {
    for (std::size_t j = i + 1; j < adj.size(); ++j) {
      if (adjacent(adj, static_cast<int>(i), static_cast<int>(j))) continue;
      const int limit = best ? *best - 1 : static_cast<int>(adj.size());
      const int k = flow.local_connectivity(static_cast<int>(i), static_cast<int>(j), limit);
      if (k <= limit) best = k;
    }
  }
  return best;
}

Family family_from_indices(const UniverseParams& params, const std::vector<int>& indices) {
  std::vector<Mask> masks;
  masks.reserve(indices.size());
  for (int i : indices) masks.push_back(canonical_unrank(static_cast<std::uint64_t>(i), params.r));
  return Family::from_masks(params.n, params.r, masks);
}

}  // namespace

std::optional<CutWitness> min_disconnecting_set(const UniverseParams& params, int max_size,
                                                const CutSearchLimits& limits) {
  if (max_size < 0) throw DomainError("max_size must be >= 0");
  const auto adj = build_adjacency(params, limits);
  const auto connectivity = vertex_connectivity(adj);
  if (!connectivity || *connectivity > max_size) return std::nullopt;
  const int target = *connectivity;

  // Lexicographically smallest cut of size `target`: fix members greedily in canonical
  // order, marking every skipped vertex as uncuttable.
  std::vector<char> removed(adj.size(), 0);
  std::vector<char> uncuttable(adj.size(), 0);
  std::vector<int> chosen;
  for (std::size_t v = 0; v < adj.size() && static_cast<int>(chosen.size()) < target; ++v) {
    removed[v] = 1;
    if (has_cut_within(adj, removed, uncuttable, target - static_cast<int>(chosen.size()) - 1)) {
      chosen.push_back(static_cast<int>(v));
    } else {
      removed[v] = 0;
      uncuttable[v] = 1;
    }
  }
  if (static_cast<int>(chosen.size()) != target) {
    throw Error("vertex-cut search lost track of the minimum cut");
  }
  return make_cut_witness(params, family_from_indices(params, chosen));
}

std::optional<CutWitness> min_disconnecting_set_exhaustive(const UniverseParams& params, int max_size,
                                                           const CutSearchLimits& limits) {
  if (max_size < 0) throw DomainError("max_size must be >= 0");
  const auto adj_lists = build_adjacency(params, limits);
  const int n_vertices = static_cast<int>(adj_lists.size());
  if (n_vertices > 64) throw BudgetError("exhaustive cut search handles at most 64 vertices");

  std::vector<Mask> adj(n_vertices, 0);
  for (int v = 0; v < n_vertices; ++v) {
    for (int w : adj_lists[v]) adj[v] |= Mask{1} << w;
  }
  const Mask all = n_vertices == 64 ? ~Mask{0} : (Mask{1} << n_vertices) - 1;
  auto disconnected = [&](Mask remaining) {
    if (std::popcount(remaining) < 2) return false;
    Mask seen = remaining & (~remaining + 1);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= remaining & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen != remaining;
  };

  std::uint64_t tested = 0;
  const int largest = std::min(max_size, n_vertices - 2);
  for (int k = 0; k <= largest; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (++tested > limits.max_subsets) {
        throw BudgetError("exhaustive cut search exceeded " + std::to_string(limits.max_subsets) + " candidates");
      }
      Mask cut = 0;
      for (int i : idx) cut |= Mask{1} << i;
      if (disconnected(all & ~cut)) return make_cut_witness(params, family_from_indices(params, idx));
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n_vertices - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace kneserlab
