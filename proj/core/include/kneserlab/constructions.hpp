#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "kneserlab/family.hpp"
#include "kneserlab/rset.hpp"

namespace kneserlab {

// Two disjoint, cross-intersecting, nonempty families plus where they came from.
struct FamilyPair {
  Family a;
  Family b;
  std::string construction;
  std::string parameters;
};

enum class Construction { star_partition, large_r_pair, pair_partition };

std::string_view to_string(Construction c);
// Throws DomainError on an unknown name.
Construction parse_construction(std::string_view name);

enum class SplitRule { first_half, alternating, singleton_vs_rest };

std::string_view to_string(SplitRule rule);
SplitRule parse_split_rule(std::string_view name);

// Receives each star member with its canonical position; true sends it to side a.
using SplitPredicate = std::function<bool(const RSet&, std::size_t)>;

// The star at `center` split in two. Throws DomainError if either side ends up empty.
FamilyPair star_partition(const UniverseParams& params, int center, SplitRule rule);
FamilyPair star_partition(const UniverseParams& params, int center, const SplitPredicate& to_side_a,
                          std::string_view rule_name = "custom");

// a = X ∪ X^c with X = {A ⊆ [2r] : 1 ∈ A, 2 ∉ A}; b = {B ⊆ [2r] : 1, 2 ∉ B} ∪ {B ⊆ [n] : 1, 2 ∈ B}.
FamilyPair large_r_pair(const UniverseParams& params);

// Number of complement-pair parts of C([2r], r): C(2r-1, r).
std::uint64_t part_count(int r);
// Part `index` (1-based): the index-th canonical r-subset of [2r-1] and its complement in [2r].
Family part(int r, int index);

// a = union of the selected parts, b = union of the rest. The selection must be a
// nonempty proper subset of 1..C(2r-1, r).
FamilyPair pair_partition(int r, std::span<const int> selected_parts);

struct SizeRecord {
  std::optional<std::uint64_t> a;
  std::optional<std::uint64_t> b;
  std::uint64_t total = 0;
};

// Closed-form sizes. Side sizes are only known for large_r_pair.
SizeRecord expected_sizes(const UniverseParams& params, Construction construction);
SizeRecord expected_sizes(const UniverseParams& params, std::string_view construction);

}  // namespace kneserlab
