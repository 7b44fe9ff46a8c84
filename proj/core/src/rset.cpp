#include "kneserlab/rset.hpp"

#include <algorithm>

#include "kneserlab/binomial.hpp"
#include "kneserlab/errors.hpp"

namespace kneserlab {
namespace {

void check_universe(int n) {
  if (n < 1 || n > kMaxUniverse) {
    throw DomainError("universe size n=" + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxUniverse) + "]");
  }
}

}  // namespace

RSet::RSet(Mask bits, int universe_n) : bits_(bits), n_(universe_n) {
  check_universe(universe_n);
  if ((bits & ~full_mask(universe_n)) != 0) {
    throw DomainError("set has elements outside [" + std::to_string(universe_n) + "]");
  }
}

RSet RSet::of(std::initializer_list<int> elements, int universe_n) {
  return from_elements(std::span<const int>(elements.begin(), elements.size()), universe_n);
}

RSet RSet::from_elements(std::span<const int> elements, int universe_n) {
  check_universe(universe_n);
  Mask bits = 0;
  for (int e : elements) {
    if (e < 1 || e > universe_n) {
      throw DomainError("element " + std::to_string(e) + " outside [1, " + std::to_string(universe_n) + "]");
    }
    if (bits & element_bit(e)) throw DomainError("element " + std::to_string(e) + " repeated");
    bits |= element_bit(e);
  }
  return RSet(bits, universe_n);
}

std::vector<int> RSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask rest = bits_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
  return out;
}

std::string to_string(const RSet& s) {
  std::string out;
  for (int e : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

RSet complement(const RSet& s, int m) {
  if (m < 1 || m > kMaxUniverse) throw DomainError("complement: m=" + std::to_string(m) + " out of range");
  if ((s.bits() & ~full_mask(m)) != 0) {
    throw DomainError("complement: set {" + to_string(s) + "} is not contained in [" + std::to_string(m) + "]");
  }
  return RSet(full_mask(m) & ~s.bits(), std::max(m, s.universe()));
}

UniverseParams make_params(int n, int r) {
  if (r < 1) throw DomainError("requires 1 ≤ r (got r=" + std::to_string(r) + ")");
  if (n < 2 * r) {
    throw DomainError("requires 2r ≤ n (got n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  }
  check_universe(n);
  const int l = n - 2 * r;
  return UniverseParams{n, r, l, std::min(r, (l + 1) / 2)};
}

void require_within_budget(const UniverseParams& params, const EnumerationBudget& budget) {
  const auto count = binomial(params.n, params.r);
  if (count > budget.max_sets) {
    throw BudgetError("C(" + std::to_string(params.n) + "," + std::to_string(params.r) + ")=" +
                      std::to_string(count) + " exceeds enumeration budget " + std::to_string(budget.max_sets));
  }
}

std::uint64_t canonical_index(Mask bits) {
  std::uint64_t index = 0;
  int i = 1;
  for (Mask rest = bits; rest != 0; rest &= rest - 1, ++i) index += binomial(std::countr_zero(rest), i);
  return index;
}

Mask canonical_unrank(std::uint64_t index, int r) {
  Mask bits = 0;
  for (int i = r; i >= 1; --i) {
    // Largest position c with C(c, i) <= index.
    int c = i - 1;
    while (c + 1 < 64 && binomial(c + 1, i) <= index) ++c;
    index -= binomial(c, i);
    bits |= Mask{1} << c;
  }
  return bits;
}

RSetRange::RSetRange(const UniverseParams& params, const EnumerationBudget& budget)
    : n_(params.n), r_(params.r), count_(binomial(params.n, params.r)) {
  require_within_budget(params, budget);
}

RSetRange::iterator RSetRange::begin() const {
  iterator it(full_mask(r_), full_mask(n_), n_);
  return it;
}

std::vector<Mask> all_rset_masks(const UniverseParams& params, const EnumerationBudget& budget) {
  require_within_budget(params, budget);
  std::vector<Mask> out;
  out.reserve(binomial(params.n, params.r));
  const Mask limit = full_mask(params.n);
  for (Mask m = full_mask(params.r); m <= limit; m = next_same_popcount(m)) out.push_back(m);
  return out;
}

}  // namespace kneserlab
