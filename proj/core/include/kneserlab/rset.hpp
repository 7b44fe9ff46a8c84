#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace kneserlab {

// Bit k-1 encodes ground-set element k.
using Mask = std::uint64_t;

inline constexpr int kMaxUniverse = 62;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 5'000'000;

constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr Mask element_bit(int element) { return Mask{1} << (element - 1); }
constexpr int mask_size(Mask m) { return std::popcount(m); }

// A subset of [n] = {1..n}. The cardinality r is carried by the bits, the enclosing
// Family or UniverseParams decides which r is legal.
class RSet {
 public:
  constexpr RSet() = default;
  RSet(Mask bits, int universe_n);

  static RSet of(std::initializer_list<int> elements, int universe_n);
  static RSet from_elements(std::span<const int> elements, int universe_n);

  constexpr Mask bits() const noexcept { return bits_; }
  constexpr int universe() const noexcept { return n_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int element) const noexcept {
    return element >= 1 && element <= n_ && (bits_ & element_bit(element)) != 0;
  }
  std::vector<int> elements() const;

  // Canonical order is ascending numeric bitmask value.
  friend constexpr auto operator<=>(const RSet&, const RSet&) = default;

 private:
  Mask bits_ = 0;
  int n_ = 0;
};

constexpr bool intersects(const RSet& a, const RSet& b) { return (a.bits() & b.bits()) != 0; }
constexpr int intersection_size(const RSet& a, const RSet& b) {
  return std::popcount(a.bits() & b.bits());
}

// "1,5,6"
std::string to_string(const RSet& s);

// [m] \ s. Every element of s must lie in [m].
RSet complement(const RSet& s, int m);

// (n, r, l = n - 2r, p = min{r, ceil(l/2)}).
struct UniverseParams {
  int n = 0;
  int r = 0;
  int l = 0;
  int p = 0;

  friend constexpr bool operator==(const UniverseParams&, const UniverseParams&) = default;
};

UniverseParams make_params(int n, int r);

struct EnumerationBudget {
  std::uint64_t max_sets = kDefaultEnumerationBudget;
};

// Throws BudgetError when C(n, r) > budget.max_sets.
void require_within_budget(const UniverseParams& params, const EnumerationBudget& budget);

// Position of an r-set in the canonical order of C([n], r) (colex rank).
std::uint64_t canonical_index(Mask bits);
// Inverse of canonical_index for r-sets.
Mask canonical_unrank(std::uint64_t index, int r);

// Gosper's successor: the next larger mask with the same popcount.
constexpr Mask next_same_popcount(Mask x) {
  const Mask low = x & (~x + 1);
  const Mask ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

// All r-subsets of [n] in canonical order, produced lazily.
class RSetRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = RSet;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = RSet;

    iterator() = default;
    iterator(Mask current, Mask limit, int n) : current_(current), limit_(limit), n_(n) {}

    RSet operator*() const { return RSet(current_, n_); }
    iterator& operator++() {
      current_ = next_same_popcount(current_);
      if (current_ > limit_) current_ = kEnd;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.current_ == b.current_; }

   private:
    friend class RSetRange;
    static constexpr Mask kEnd = ~Mask{0};
    Mask current_ = kEnd;
    Mask limit_ = 0;
    int n_ = 0;
  };

  RSetRange(const UniverseParams& params, const EnumerationBudget& budget = {});

  iterator begin() const;
  iterator end() const { return iterator{}; }
  std::uint64_t size() const noexcept { return count_; }

 private:
  int n_;
  int r_;
  std::uint64_t count_;
};

inline RSetRange enumerate_rsets(const UniverseParams& params, const EnumerationBudget& budget = {}) {
  return RSetRange(params, budget);
}

// Masks of every r-subset of [n], canonical order.
std::vector<Mask> all_rset_masks(const UniverseParams& params, const EnumerationBudget& budget = {});

// Calls fn(mask) for every k-subset of `pool`, ascending numeric order.
template <class Fn>
void for_each_subset_of_size(Mask pool, int k, Fn&& fn) {
  const int avail = std::popcount(pool);
  if (k < 0 || k > avail) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  int positions[64];
  int count = 0;
  for (Mask rest = pool; rest != 0; rest &= rest - 1) positions[count++] = std::countr_zero(rest);
  const Mask limit = full_mask(avail);
  for (Mask comb = full_mask(k); comb <= limit; comb = next_same_popcount(comb)) {
    Mask out = 0;
    for (Mask bits = comb; bits != 0; bits &= bits - 1) out |= Mask{1} << positions[std::countr_zero(bits)];
    if constexpr (std::is_same_v<decltype(fn(out)), bool>) {
      if (!fn(out)) return;
    } else {
      fn(out);
    }
  }
}

}  // namespace kneserlab
