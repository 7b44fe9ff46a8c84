#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kneserlab/family.hpp"
#include "kneserlab/rset.hpp"

namespace kneserlab {

// Edge relation of the disjointness (Kneser) graph: true iff a ∩ b = ∅.
constexpr bool are_adjacent(const RSet& a, const RSet& b) { return !intersects(a, b); }

// Implicit disjointness graph on C([n], r). Vertices are addressed by canonical index;
// neighbours of v are the r-subsets of [n] \ v, produced in canonical order.
class DisjointnessGraph {
 public:
  explicit DisjointnessGraph(const UniverseParams& params, const EnumerationBudget& budget = {});

  const UniverseParams& params() const noexcept { return params_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }

  Mask vertex(std::size_t index) const { return canonical_unrank(index, params_.r); }
  std::size_t index_of(Mask v) const { return static_cast<std::size_t>(canonical_index(v)); }

  template <class Fn>
  void for_each_neighbor(Mask v, Fn&& fn) const {
    for_each_subset_of_size(full_mask(params_.n) & ~v, params_.r, std::forward<Fn>(fn));
  }

  std::uint64_t degree() const;

 private:
  UniverseParams params_;
  std::size_t vertex_count_;
};

// Connected components of C([n], r) \ forbidden under disjointness.
struct ComponentLabeling {
  static constexpr int kForbidden = -1;

  UniverseParams params;
  Family forbidden;
  // Indexed by canonical vertex index; kForbidden for members of `forbidden`.
  std::vector<int> labels;
  int component_count = 0;
  std::vector<std::size_t> component_sizes;

  std::optional<int> label_of(const RSet& s) const;
  Family component(int id) const;
  std::size_t labelled_vertex_count() const;
};

// Breadth-first labelling; component ids follow the canonical order of each component's
// first vertex.
ComponentLabeling components_avoiding(const UniverseParams& params, const Family& forbidden,
                                      const EnumerationBudget& budget = {});

bool is_connected_avoiding(const UniverseParams& params, const Family& forbidden,
                           const EnumerationBudget& budget = {});

// Shortest a = T_0, ..., T_g = b with consecutive sets disjoint and none forbidden.
// Expansion is in canonical order, so the path is reproducible.
std::optional<std::vector<RSet>> bfs_path_avoiding(const UniverseParams& params, const Family& forbidden,
                                                   const RSet& a, const RSet& b,
                                                   const EnumerationBudget& budget = {});

struct CutWitness {
  int size = 0;
  Family cut;
  // side_b is the second component of the remainder; side_a holds all the others.
  Family side_a;
  Family side_b;
};

struct CutSearchLimits {
  // Largest C(n, r) the flow-based search accepts.
  std::uint64_t max_vertices = 2000;
  // Largest number of candidate cuts the exhaustive search may test.
  std::uint64_t max_subsets = 20'000'000;
};

// Smallest family whose removal disconnects the disjointness graph, ties broken by
// the lexicographically smallest cut (sets compared in canonical order). Returns an
// empty cut when the graph is already disconnected and nullopt when no cut of size
// <= max_size exists. Local vertex connectivities come from unit-capacity max-flow on
// the vertex-split graph.
std::optional<CutWitness> min_disconnecting_set(const UniverseParams& params, int max_size,
                                                const CutSearchLimits& limits = {});

// Same contract, found by testing every candidate cut in size-then-lexicographic order.
// Only for tiny graphs (at most 64 vertices).
std::optional<CutWitness> min_disconnecting_set_exhaustive(const UniverseParams& params, int max_size,
                                                           const CutSearchLimits& limits = {});

// Rebuilds the sides of a cut from the remainder's components. Throws DomainError if
// the cut does not disconnect.
CutWitness make_cut_witness(const UniverseParams& params, const Family& cut);

// Structure of the intersection graph on C([2r], r).
struct KPartiteReport {
  int r = 0;
  int k = 0;
  // Part i pairs the i-th canonical r-subset of [2r-1] with its complement in [2r].
  std::vector<std::pair<RSet, RSet>> parts;
  bool holds = false;
  std::vector<std::string> violations;
};

KPartiteReport check_complete_kpartite(int r, const EnumerationBudget& budget = {});

}  // namespace kneserlab
