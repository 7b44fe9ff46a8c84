#include "kneserlab/constructions.hpp"

#include <algorithm>
#include <vector>

#include "kneserlab/binomial.hpp"
#include "kneserlab/errors.hpp"

namespace kneserlab {
namespace {

std::string params_text(const UniverseParams& params) {
  return "n=" + std::to_string(params.n) + " r=" + std::to_string(params.r);
}

FamilyPair checked_pair(Family a, Family b, std::string construction, std::string parameters) {
  if (a.empty() || b.empty()) {
    throw DomainError(construction + ": both families must be nonempty (" + parameters + ")");
  }
  return FamilyPair{std::move(a), std::move(b), std::move(construction), std::move(parameters)};
}

}  // namespace

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::star_partition: return "star_partition";
    case Construction::large_r_pair: return "large_r_pair";
    case Construction::pair_partition: return "pair_partition";
  }
  return "unknown";
}

Construction parse_construction(std::string_view name) {
  for (auto c : {Construction::star_partition, Construction::large_r_pair, Construction::pair_partition}) {
    if (name == to_string(c)) return c;
  }
  throw DomainError("unknown construction '" + std::string(name) + "'");
}

std::string_view to_string(SplitRule rule) {
  switch (rule) {
    case SplitRule::first_half: return "first-half";
    case SplitRule::alternating: return "alternating";
    case SplitRule::singleton_vs_rest: return "singleton-vs-rest";
  }
  return "unknown";
}

SplitRule parse_split_rule(std::string_view name) {
  for (auto rule : {SplitRule::first_half, SplitRule::alternating, SplitRule::singleton_vs_rest}) {
    if (name == to_string(rule)) return rule;
  }
  throw DomainError("unknown split rule '" + std::string(name) + "'");
}

FamilyPair star_partition(const UniverseParams& params, int center, SplitRule rule) {
  const auto star_size = binomial(params.n - 1, params.r - 1);
  const auto half = (star_size + 1) / 2;
  SplitPredicate predicate;
  switch (rule) {
    case SplitRule::first_half:
      predicate = [half](const RSet&, std::size_t i) { return i < half; };
      break;
    case SplitRule::alternating:
      predicate = [](const RSet&, std::size_t i) { return i % 2 == 0; };
      break;
    case SplitRule::singleton_vs_rest:
      predicate = [](const RSet&, std::size_t i) { return i == 0; };
      break;
  }
  return star_partition(params, center, predicate, to_string(rule));
}

FamilyPair star_partition(const UniverseParams& params, int center, const SplitPredicate& to_side_a,
                          std::string_view rule_name) {
  if (center < 1 || center > params.n) {
    throw DomainError("star center " + std::to_string(center) + " outside [1, " + std::to_string(params.n) + "]");
  }
  std::vector<RSet> a;
  std::vector<RSet> b;
  std::size_t index = 0;
  for (const RSet s : enumerate_rsets(params)) {
    if (!s.contains(center)) continue;
    (to_side_a(s, index++) ? a : b).push_back(s);
  }
  return checked_pair(Family(params.n, params.r, std::move(a)), Family(params.n, params.r, std::move(b)),
                      "star_partition",
                      params_text(params) + " center=" + std::to_string(center) + " rule=" + std::string(rule_name));
}

FamilyPair large_r_pair(const UniverseParams& params) {
  if (params.r < 2) throw DomainError("large_r_pair requires r ≥ 2");
  const int r = params.r;
  const Mask one = element_bit(1);
  const Mask two = element_bit(2);
  const Mask inner = full_mask(2 * r);

  std::vector<RSet> a;
  std::vector<RSet> b;
  for (const RSet s : enumerate_rsets(params)) {
    const Mask bits = s.bits();
    const bool has1 = (bits & one) != 0;
    const bool has2 = (bits & two) != 0;
    if (has1 && has2) {
      b.push_back(s);  // B~2, over all of [n]
    } else if ((bits & ~inner) == 0) {
      // Inside [2r]: X (1 in, 2 out), X^c (2 in, 1 out), B~1 (neither).
      (has1 || has2 ? a : b).push_back(s);
    }
  }
  return checked_pair(Family(params.n, r, std::move(a)), Family(params.n, r, std::move(b)), "large_r_pair",
                      params_text(params));
}

std::uint64_t part_count(int r) {
  if (r < 1) throw DomainError("pair partitions require r >= 1");
  return binomial(2 * r - 1, r);
}

Family part(int r, int index) {
  const auto k = part_count(r);
  if (index < 1 || static_cast<std::uint64_t>(index) > k) {
    throw DomainError("part index " + std::to_string(index) + " outside [1, " + std::to_string(k) + "]");
  }
  // The r-subsets of [2r-1] are exactly the first C(2r-1, r) r-sets in canonical order.
  const Mask x = canonical_unrank(static_cast<std::uint64_t>(index - 1), r);
  const int n = 2 * r;
  return Family(n, r, {RSet(x, n), RSet(full_mask(n) & ~x, n)});
}

FamilyPair pair_partition(int r, std::span<const int> selected_parts) {
  const auto params = make_params(2 * r, r);
  const auto k = part_count(r);
  std::vector<char> selected(k + 1, 0);
  std::string listing;
  for (int i : selected_parts) {
    if (i < 1 || static_cast<std::uint64_t>(i) > k) {
      throw DomainError("part index " + std::to_string(i) + " outside [1, " + std::to_string(k) + "]");
    }
    selected[i] = 1;
  }
  std::vector<RSet> a;
  std::vector<RSet> b;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const auto members = part(r, static_cast<int>(i));
    auto& side = selected[i] ? a : b;
    side.insert(side.end(), members.begin(), members.end());
    if (selected[i]) listing += (listing.empty() ? "" : ",") + std::to_string(i);
  }
  return checked_pair(Family(params.n, r, std::move(a)), Family(params.n, r, std::move(b)), "pair_partition",
                      params_text(params) + " parts=" + listing);
}

SizeRecord expected_sizes(const UniverseParams& params, Construction construction) {
  const int n = params.n;
  const int r = params.r;
  const int l = params.l;
  switch (construction) {
    case Construction::star_partition:
      return SizeRecord{.total = binomial(n - 1, r - 1)};
    case Construction::large_r_pair: {
      if (r < 2) throw DomainError("large_r_pair requires r ≥ 2");
      const auto a = 2 * binomial(2 * r - 2, r - 1);
      const auto b = binomial(2 * r - 2, r) + binomial(n - 2, r - 2);
      const auto total = binomial(n - l - 1, r) + binomial(n - l - 2, r - 1) + binomial(n - 2, r - 2);
      return SizeRecord{.a = a, .b = b, .total = total};
    }
    case Construction::pair_partition:
      if (l != 0) throw DomainError("pair_partition lives in n = 2r");
      return SizeRecord{.total = binomial(2 * r, r)};
  }
  throw DomainError("unknown construction");
}

SizeRecord expected_sizes(const UniverseParams& params, std::string_view construction) {
  return expected_sizes(params, parse_construction(construction));
}

}  // namespace kneserlab
