#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kneserlab/constructions.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/kneser.hpp"
#include "kneserlab/rset.hpp"

namespace kneserlab {

// C(n, r) - C(l, p) for l >= 1, and C(2r, r) when n = 2r.
std::uint64_t theorem_bound(const UniverseParams& params);

struct BoundReport {
  UniverseParams params;
  std::uint64_t binom_n_r = 0;
  std::uint64_t binom_l_p = 0;
  std::uint64_t bound = 0;
  // Size of the smallest disconnecting family c*; exact_max = C(n, r) - c*.
  std::optional<int> min_cut_size;
  std::optional<std::uint64_t> exact_max;
  std::optional<FamilyPair> witness;
  std::optional<std::int64_t> strict_gap;  // bound - exact_max
  std::string note;
};

// Bound only; exact fields left empty.
BoundReport bound_report(const UniverseParams& params);

// Largest |A| + |B| over disjoint, nonempty, cross-intersecting pairs. A and B can only
// be separated by deleting a family whose removal disconnects the disjointness graph,
// and each remaining component must sit wholly on one side, so the answer is
// C(n, r) - c*. The witness puts the second component in b and everything else in a.
BoundReport exact_max_sum(const UniverseParams& params, const CutSearchLimits& limits = {});

// Same maximum by trying every assignment of each r-set to A, B or neither.
// Only for C(n, r) <= 12.
std::optional<std::uint64_t> naive_max_sum(const UniverseParams& params);

struct PairVerification {
  UniverseParams params;
  bool disjoint = false;
  bool cross_intersecting = false;
  bool vacuous = false;
  std::uint64_t size_a = 0;
  std::uint64_t size_b = 0;
  std::uint64_t sum = 0;
  std::uint64_t bound = 0;
  // Only asserted for non-vacuous pairs.
  std::optional<bool> within_bound;
  std::uint64_t min_side = 0;
  std::optional<std::pair<RSet, RSet>> cross_violation;

  bool passes() const { return !vacuous && disjoint && cross_intersecting && within_bound.value_or(false); }
};

PairVerification verify_pair(const UniverseParams& params, const Family& a, const Family& b);

struct ScanRow {
  UniverseParams params;
  std::optional<BoundReport> report;
  std::string error;  // non-empty when the point failed
};

struct ScanOptions {
  bool exact = true;
  CutSearchLimits limits{};
  unsigned max_threads = 0;  // 0: hardware concurrency
};

// One row per (n, r), in input order. A failing point yields an error row.
std::vector<ScanRow> scan(std::span<const std::pair<int, int>> grid, const ScanOptions& options = {});

// Every ordered partition (A, B) of C([2r], r) into two nonempty cross-intersecting
// families, found by trying all 2^C(2r,r) assignments. r <= 3.
std::vector<FamilyPair> full_partition_pairs(int r);

}  // namespace kneserlab
