#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kneserlab/rset.hpp"

namespace kneserlab {

// A duplicate-free collection of r-subsets of [n], kept in canonical order.
class Family {
 public:
  Family(int universe_n, int r);
  // Sorts and deduplicates; every member must be an r-set inside [universe_n].
  Family(int universe_n, int r, std::vector<RSet> members);

  static Family from_masks(int universe_n, int r, std::span<const Mask> masks);
  // All of C([n], r).
  static Family complete(const UniverseParams& params, const EnumerationBudget& budget = {});

  int universe() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(const RSet& s) const;
  bool contains_mask(Mask bits) const;

  std::span<const RSet> members() const noexcept { return members_; }
  const RSet& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  std::vector<Mask> masks() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int n_;
  int r_;
  std::vector<RSet> members_;
};

// Throws DomainError unless both families share n and r.
void require_same_universe(const Family& f, const Family& g);

Family family_union(const Family& f, const Family& g);
Family family_difference(const Family& f, const Family& g);

// Every unordered pair of members intersects. Empty and singleton families qualify.
bool is_intersecting(const Family& f);

struct CrossIntersectionReport {
  bool holds = true;
  // Either family is empty, so `holds` is true for no reason.
  bool vacuous = false;
  // First violating pair in canonical order, when `holds` is false.
  std::optional<std::pair<RSet, RSet>> violation;
};

// |A ∩ B| >= t for every A in f and B in g.
CrossIntersectionReport cross_intersection_report(const Family& f, const Family& g, int t = 1);
bool are_cross_intersecting(const Family& f, const Family& g, int t = 1);

// No set belongs to both families.
bool are_disjoint(const Family& f, const Family& g);

}  // namespace kneserlab
