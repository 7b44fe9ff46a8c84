#include "kneserlab/extremal.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "kneserlab/binomial.hpp"
#include "kneserlab/errors.hpp"

namespace kneserlab {

std::uint64_t theorem_bound(const UniverseParams& params) {
  const auto total = binomial(params.n, params.r);
  if (params.l == 0) return total;
  return total - binomial(params.l, params.p);
}

BoundReport bound_report(const UniverseParams& params) {
  BoundReport report;
  report.params = params;
  report.binom_n_r = binomial(params.n, params.r);
  report.binom_l_p = binomial(params.l, params.p);
  report.bound = theorem_bound(params);
  return report;
}

BoundReport exact_max_sum(const UniverseParams& params, const CutSearchLimits& limits) {
  auto report = bound_report(params);
  const auto vertices = static_cast<int>(report.binom_n_r);
  const auto cut = min_disconnecting_set(params, vertices, limits);
  if (!cut) {
    report.note = "disjointness graph is complete: no disjoint cross-intersecting pair of nonempty families";
    return report;
  }
  report.min_cut_size = cut->size;
  report.exact_max = report.binom_n_r - static_cast<std::uint64_t>(cut->size);
  report.strict_gap = static_cast<std::int64_t>(report.bound) - static_cast<std::int64_t>(*report.exact_max);
  std::string parameters = "n=" + std::to_string(params.n) + " r=" + std::to_string(params.r) +
                           " cut_size=" + std::to_string(cut->size);
  report.witness = FamilyPair{cut->side_a, cut->side_b, "min_cut_split", std::move(parameters)};
  if (params.l >= 1 && *report.exact_max >= report.bound) {
    report.note = "finding: exact maximum reaches the bound with l >= 1";
  }
  return report;
}

std::optional<std::uint64_t> naive_max_sum(const UniverseParams& params) {
  const auto masks = all_rset_masks(params, EnumerationBudget{12});
  const int count = static_cast<int>(masks.size());
  std::vector<std::uint32_t> disjoint_from(count, 0);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if ((masks[i] & masks[j]) == 0) disjoint_from[i] |= 1u << j;
    }
  }
  // Digit i of the base-3 counter: 0 = neither, 1 = A, 2 = B.
  std::vector<int> digit(count, 0);
  std::optional<std::uint64_t> best;
  while (true) {
    std::uint32_t in_a = 0;
    std::uint32_t in_b = 0;
    for (int i = 0; i < count; ++i) {
      if (digit[i] == 1) in_a |= 1u << i;
      if (digit[i] == 2) in_b |= 1u << i;
    }
    if (in_a != 0 && in_b != 0) {
      bool cross = true;
      for (std::uint32_t rest = in_a; rest != 0 && cross; rest &= rest - 1) {
        cross = (disjoint_from[std::countr_zero(rest)] & in_b) == 0;
      }
      if (cross) {
        const auto sum = static_cast<std::uint64_t>(std::popcount(in_a) + std::popcount(in_b));
        if (!best || sum > *best) best = sum;
      }
    }
    int pos = 0;
    while (pos < count && digit[pos] == 2) digit[pos++] = 0;
    if (pos == count) break;
    ++digit[pos];
  }
  return best;
}

PairVerification verify_pair(const UniverseParams& params, const Family& a, const Family& b) {
  if (a.universe() != params.n || a.r() != params.r) {
    throw DomainError("family A does not live in C([n], r) for n=" + std::to_string(params.n) +
                      " r=" + std::to_string(params.r));
  }
  require_same_universe(a, b);
  PairVerification v;
  v.params = params;
  v.disjoint = are_disjoint(a, b);
  const auto cross = cross_intersection_report(a, b, 1);
  v.cross_intersecting = cross.holds;
  v.cross_violation = cross.violation;
  v.vacuous = cross.vacuous;
  v.size_a = a.size();
  v.size_b = b.size();
  v.sum = a.size() + b.size();
  v.bound = theorem_bound(params);
  if (!v.vacuous) v.within_bound = v.sum <= v.bound;
  v.min_side = std::min(v.size_a, v.size_b);
  return v;
}

std::vector<ScanRow> scan(std::span<const std::pair<int, int>> grid, const ScanOptions& options) {
  auto evaluate = [&options](std::pair<int, int> point) {
    ScanRow row;
    row.params = UniverseParams{point.first, point.second, point.first - 2 * point.second, 0};
    try {
      row.params = make_params(point.first, point.second);
      row.report = options.exact ? exact_max_sum(row.params, options.limits) : bound_report(row.params);
    } catch (const Error& e) {
      row.error = e.what();
      row.report.reset();
    }
    return row;
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = options.max_threads == 0 ? hw : options.max_threads;
  std::vector<ScanRow> rows(grid.size());
  for (std::size_t start = 0; start < grid.size(); start += workers) {
    const std::size_t stop = std::min(grid.size(), start + workers);
    std::vector<std::future<ScanRow>> batch;
    for (std::size_t i = start; i < stop; ++i) batch.push_back(std::async(std::launch::async, evaluate, grid[i]));
    for (std::size_t i = start; i < stop; ++i) rows[i] = batch[i - start].get();
  }
  return rows;
}

std::vector<FamilyPair> full_partition_pairs(int r) {
  const auto params = make_params(2 * r, r);
  const auto masks = all_rset_masks(params, EnumerationBudget{24});
  const int count = static_cast<int>(masks.size());
  std::vector<std::uint32_t> disjoint_from(count, 0);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if ((masks[i] & masks[j]) == 0) disjoint_from[i] |= 1u << j;
    }
  }
  const std::uint32_t all = count == 32 ? ~0u : (1u << count) - 1;
  std::vector<FamilyPair> out;
  for (std::uint32_t in_a = 1; in_a < all; ++in_a) {
    const std::uint32_t in_b = all & ~in_a;
    bool cross = true;
    for (std::uint32_t rest = in_a; rest != 0 && cross; rest &= rest - 1) {
      cross = (disjoint_from[std::countr_zero(rest)] & in_b) == 0;
    }
    if (!cross) continue;
    std::vector<Mask> a;
    std::vector<Mask> b;
    for (int i = 0; i < count; ++i) ((in_a >> i) & 1u ? a : b).push_back(masks[i]);
    out.push_back(FamilyPair{Family::from_masks(params.n, r, a), Family::from_masks(params.n, r, b),
                             "full_partition", "n=" + std::to_string(params.n) + " r=" + std::to_string(r)});
  }
  return out;
}

}  // namespace kneserlab
