#include "kneserlab/kneser.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "kneserlab/binomial.hpp"
#include "kneserlab/errors.hpp"

namespace kneserlab {
namespace {

void require_matches(const UniverseParams& params, const Family& f, const char* what) {
  if (f.universe() != params.n || f.r() != params.r) {
    throw DomainError(std::string(what) + " lives in (n=" + std::to_string(f.universe()) + ", r=" +
                      std::to_string(f.r()) + "), expected (n=" + std::to_string(params.n) +
                      ", r=" + std::to_string(params.r) + ")");
  }
}

std::vector<char> forbidden_marks(const DisjointnessGraph& g, const Family& forbidden) {
  std::vector<char> marks(g.vertex_count(), 0);
  for (const auto& s : forbidden) marks[g.index_of(s.bits())] = 1;
  return marks;
}

}  // namespace

DisjointnessGraph::DisjointnessGraph(const UniverseParams& params, const EnumerationBudget& budget)
    : params_(params), vertex_count_(binomial(params.n, params.r)) {
  require_within_budget(params, budget);
}

std::uint64_t DisjointnessGraph::degree() const { return binomial(params_.n - params_.r, params_.r); }

std::optional<int> ComponentLabeling::label_of(const RSet& s) const {
  const int label = labels.at(canonical_index(s.bits()));
  if (label == kForbidden) return std::nullopt;
  return label;
}

Family ComponentLabeling::component(int id) const {
  std::vector<Mask> masks;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == id) masks.push_back(canonical_unrank(i, params.r));
  }
  return Family::from_masks(params.n, params.r, masks);
}

std::size_t ComponentLabeling::labelled_vertex_count() const {
  return static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(), [](int l) { return l != kForbidden; }));
}

ComponentLabeling components_avoiding(const UniverseParams& params, const Family& forbidden,
                                      const EnumerationBudget& budget) {
  require_matches(params, forbidden, "forbidden family");
  const DisjointnessGraph g(params, budget);
  const auto marks = forbidden_marks(g, forbidden);

  constexpr int kUnseen = -2;
  ComponentLabeling out{.params = params, .forbidden = forbidden};
  out.labels.assign(g.vertex_count(), kUnseen);
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i]) out.labels[i] = ComponentLabeling::kForbidden;
  }

  std::vector<Mask> queue;
  queue.reserve(g.vertex_count());
  Mask start = full_mask(params.r);
  for (std::size_t start_index = 0; start_index < g.vertex_count();
       ++start_index, start = next_same_popcount(start)) {
    if (out.labels[start_index] != kUnseen) continue;
    const int id = out.component_count++;
    std::size_t size = 0;
    queue.clear();
    queue.push_back(start);
    out.labels[start_index] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ++size;
      g.for_each_neighbor(queue[head], [&](Mask w) {
        auto& label = out.labels[g.index_of(w)];
        if (label == kUnseen) {
          label = id;
          queue.push_back(w);
        }
      });
    }
    out.component_sizes.push_back(size);
  }
  return out;
}

bool is_connected_avoiding(const UniverseParams& params, const Family& forbidden, const EnumerationBudget& budget) {
  return components_avoiding(params, forbidden, budget).component_count <= 1;
}

std::optional<std::vector<RSet>> bfs_path_avoiding(const UniverseParams& params, const Family& forbidden,
                                                   const RSet& a, const RSet& b, const EnumerationBudget& budget) {
  require_matches(params, forbidden, "forbidden family");
  if (a.size() != params.r || b.size() != params.r || a.universe() > params.n || b.universe() > params.n) {
    throw DomainError("path endpoints must be r-subsets of [n]");
  }
  if (a.bits() == b.bits()) throw DomainError("path endpoints must differ");
  if (forbidden.contains(a) || forbidden.contains(b)) throw DomainError("path endpoint lies in the forbidden family");

  const DisjointnessGraph g(params, budget);
  const auto marks = forbidden_marks(g, forbidden);
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::vector<std::uint64_t> parent(g.vertex_count(), kNone);
  std::vector<Mask> queue{a.bits()};
  const auto a_index = g.index_of(a.bits());
  parent[a_index] = a_index;
  bool found = false;
  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    const Mask v = queue[head];
    const auto v_index = g.index_of(v);
    g.for_each_neighbor(v, [&](Mask w) {
      const auto w_index = g.index_of(w);
      if (marks[w_index] || parent[w_index] != kNone) return true;
      parent[w_index] = v_index;
      if (w == b.bits()) {
        found = true;
        return false;
      }
      queue.push_back(w);
      return true;
    });
  }
  if (!found) return std::nullopt;

  std::vector<RSet> path;
  for (auto i = g.index_of(b.bits());; i = parent[i]) {
    path.emplace_back(g.vertex(i), params.n);
    if (i == a_index) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

CutWitness make_cut_witness(const UniverseParams& params, const Family& cut) {
  const auto labels = components_avoiding(params, cut);
  if (labels.component_count < 2) throw DomainError("family does not disconnect the disjointness graph");
  std::vector<Mask> side_a;
  std::vector<Mask> side_b;
  for (std::size_t i = 0; i < labels.labels.size(); ++i) {
    const int l = labels.labels[i];
    if (l == ComponentLabeling::kForbidden) continue;
    (l == 1 ? side_b : side_a).push_back(canonical_unrank(i, params.r));
  }
  return CutWitness{
      .size = static_cast<int>(cut.size()),
      .cut = cut,
      .side_a = Family::from_masks(params.n, params.r, side_a),
      .side_b = Family::from_masks(params.n, params.r, side_b),
  };
}

KPartiteReport check_complete_kpartite(int r, const EnumerationBudget& budget) {
  const auto params = make_params(2 * r, r);
  const auto vertices = all_rset_masks(params, budget);
  const int n = 2 * r;
  const Mask top = element_bit(n);

  KPartiteReport report{.r = r};
  for (Mask x : vertices) {
    if (x & top) continue;
    report.parts.emplace_back(RSet(x, n), RSet(full_mask(n) & ~x, n));
  }
  report.k = static_cast<int>(report.parts.size());

  std::vector<int> part_of(vertices.size(), -1);
  for (int i = 0; i < report.k; ++i) {
    part_of[canonical_index(report.parts[i].first.bits())] = i;
    part_of[canonical_index(report.parts[i].second.bits())] = i;
  }
  if (std::find(part_of.begin(), part_of.end(), -1) != part_of.end()) {
    report.violations.push_back("parts do not cover every vertex");
  }

  // Intersection graph: same part <=> no edge.
  constexpr std::size_t kMaxViolations = 16;
  for (std::size_t i = 0; i < vertices.size() && report.violations.size() < kMaxViolations; ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const bool edge = (vertices[i] & vertices[j]) != 0;
      const bool same_part = part_of[i] == part_of[j];
      if (edge == same_part) {
        report.violations.push_back((edge ? "edge inside part: {" : "missing edge between parts: {") +
                                    to_string(RSet(vertices[i], n)) + "} {" + to_string(RSet(vertices[j], n)) +
                                    "}");
        if (report.violations.size() >= kMaxViolations) break;
      }
    }
  }
  report.holds = report.violations.empty() && static_cast<std::uint64_t>(report.k) == binomial(2 * r - 1, r);
  return report;
}

}  // namespace kneserlab
