#include "kneserlab/family.hpp"

#include <algorithm>
#include <string>

#include "kneserlab/errors.hpp"

namespace kneserlab {

Family::Family(int universe_n, int r) : n_(universe_n), r_(r) {
  if (universe_n < 1 || universe_n > kMaxUniverse) {
    throw DomainError("family universe n=" + std::to_string(universe_n) + " out of range");
  }
  if (r < 0 || r > universe_n) throw DomainError("family set size r=" + std::to_string(r) + " out of range");
}

Family::Family(int universe_n, int r, std::vector<RSet> members) : Family(universe_n, r) {
  for (const auto& s : members) {
    if (s.size() != r || (s.bits() & ~full_mask(universe_n)) != 0) {
      throw DomainError("set {" + to_string(s) + "} is not an " + std::to_string(r) + "-subset of [" +
                        std::to_string(universe_n) + "]");
    }
  }
  // Members built against a smaller universe are re-homed so equality is by bits.
  for (auto& s : members) s = RSet(s.bits(), universe_n);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

Family Family::from_masks(int universe_n, int r, std::span<const Mask> masks) {
  std::vector<RSet> members;
  members.reserve(masks.size());
  for (Mask m : masks) members.emplace_back(m, universe_n);
  return Family(universe_n, r, std::move(members));
}

Family Family::complete(const UniverseParams& params, const EnumerationBudget& budget) {
  const auto masks = all_rset_masks(params, budget);
  return from_masks(params.n, params.r, masks);
}

bool Family::contains_mask(Mask bits) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), bits,
                             [](const RSet& s, Mask b) { return s.bits() < b; });
  return it != members_.end() && it->bits() == bits;
}

bool Family::contains(const RSet& s) const { return contains_mask(s.bits()); }

std::vector<Mask> Family::masks() const {
  std::vector<Mask> out;
  out.reserve(members_.size());
  for (const auto& s : members_) out.push_back(s.bits());
  return out;
}

void require_same_universe(const Family& f, const Family& g) {
  if (f.universe() != g.universe() || f.r() != g.r()) {
    throw DomainError("families live in different universes: (n=" + std::to_string(f.universe()) +
                      ", r=" + std::to_string(f.r()) + ") vs (n=" + std::to_string(g.universe()) +
                      ", r=" + std::to_string(g.r()) + ")");
  }
}

Family family_union(const Family& f, const Family& g) {
  require_same_universe(f, g);
  std::vector<RSet> out(f.begin(), f.end());
  out.insert(out.end(), g.begin(), g.end());
  return Family(f.universe(), f.r(), std::move(out));
}

Family family_difference(const Family& f, const Family& g) {
  require_same_universe(f, g);
  std::vector<RSet> out;
  for (const auto& s : f) {
    if (!g.contains(s)) out.push_back(s);
  }
  return Family(f.universe(), f.r(), std::move(out));
}

bool is_intersecting(const Family& f) {
  const auto m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!intersects(m[i], m[j])) return false;
    }
  }
  return true;
}

CrossIntersectionReport cross_intersection_report(const Family& f, const Family& g, int t) {
  require_same_universe(f, g);
  if (t < 1) throw DomainError("cross-intersection threshold t must be >= 1");
  CrossIntersectionReport report;
  report.vacuous = f.empty() || g.empty();
  for (const auto& a : f) {
    for (const auto& b : g) {
      if (intersection_size(a, b) < t) {
        report.holds = false;
        report.violation.emplace(a, b);
        return report;
      }
    }
  }
  return report;
}

bool are_cross_intersecting(const Family& f, const Family& g, int t) {
  return cross_intersection_report(f, g, t).holds;
}

bool are_disjoint(const Family& f, const Family& g) {
  require_same_universe(f, g);
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  return std::none_of(small.begin(), small.end(), [&](const RSet& s) { return large.contains(s); });
}

}  // namespace kneserlab
