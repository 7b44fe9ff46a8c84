#include "kneserlab/chain.hpp"

#include <algorithm>
#include <bit>

#include "kneserlab/binomial.hpp"
#include "kneserlab/kneser.hpp"

namespace kneserlab {
namespace {

std::vector<int> bit_positions(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Elements positions[from..to) as a mask.
Mask take(const std::vector<int>& positions, int from, int to) {
  Mask out = 0;
  for (int i = from; i < to; ++i) out |= Mask{1} << positions[i];
  return out;
}

Mask lowest_bits(Mask m, int count) {
  Mask out = 0;
  for (int i = 0; i < count && m != 0; ++i) {
    out |= m & (~m + 1);
    m &= m - 1;
  }
  return out;
}

struct Exhaustion {
  std::string step;
  std::size_t pool_size = 0;
  std::string detail;
};

class ChainBuilder {
 public:
  ChainBuilder(const UniverseParams& params, const Family& forbidden, Mask a, Mask b, const ChainOptions& options)
      : params_(params), forbidden_(forbidden), options_(options), a_(a), b_(b), all_(full_mask(params.n)) {}

  Chain build() {
    trace_.t = std::popcount(a_ & b_);
    if (trace_.t == 0) {
      trace_.case_taken = ChainCase::disjoint_endpoints;
      return finish({a_, b_});
    }
    if ((params_.l + 1) / 2 >= params_.r) return build_case1();
    return build_case2();
  }

 private:
  RSet set(Mask m) const { return RSet(m, params_.n); }

  Chain finish(std::vector<Mask> sets) {
    Chain chain;
    chain.trace = std::move(trace_);
    chain.sets.reserve(sets.size());
    for (Mask m : sets) chain.sets.push_back(set(m));
    return chain;
  }

  [[noreturn]] void fail(const Exhaustion& e) {
    trace_.notes.push_back("exhausted at " + e.step + ": " + e.detail);
    throw ChainConstructionError("candidate pool for " + e.step + " exhausted (" + e.detail + ", |C|=" +
                                     std::to_string(forbidden_.size()) + ")",
                                 trace_, e.pool_size, forbidden_.size());
  }

  void record_exhaustion(const std::string& step, Mask available, int count, std::string detail) {
    if (!deepest_ || step_number(step) >= step_number(deepest_->step)) {
      deepest_ = Exhaustion{step, static_cast<std::size_t>(binomial_saturating(std::popcount(available), count)),
                            std::move(detail)};
    }
  }

  static int step_number(const std::string& step) { return std::stoi(step.substr(2)); }

  Chain build_case1() {
    trace_.case_taken = ChainCase::case1;
    const Mask available = all_ & ~(a_ | b_);
    try {
      const Mask middle = pick_avoiding(CandidatePool{available, params_.r}, forbidden_, 0).bits();
      return finish({a_, middle, b_});
    } catch (const PoolExhaustedError& e) {
      fail(Exhaustion{"S_1", e.pool_size(), e.what()});
    }
  }

  Chain build_case2() {
    const int r = params_.r;
    const int p = params_.p;
    const int t = trace_.t;
    const int m = t / p;
    const int q = t % p;
    const int private_count = r - t;
    const int spill = std::min(private_count, p - q);
    subcase21_ = private_count < p - q;
    trace_.case_taken = subcase21_ ? ChainCase::case2_1 : ChainCase::case2_2;
    trace_.m = m;
    trace_.q = q;

    const auto shared = bit_positions(a_ & b_);
    const auto only_a = bit_positions(a_ & ~b_);
    const auto only_b = bit_positions(b_ & ~a_);

    // 1-based block and skeleton indices, matching A_i, B_i, C_k.
    std::vector<Mask> block_a(m + 2, 0);
    std::vector<Mask> block_b(m + 2, 0);
    for (int i = 1; i <= m; ++i) {
      block_a[i] = take(shared, (i - 1) * p, i * p);
      block_b[i] = take(shared, (m - i) * p + q, (m - i + 1) * p + q);
    }
    block_a[m + 1] = take(shared, m * p, t) | take(only_a, 0, spill);
    block_b[m + 1] = take(shared, 0, q) | take(only_b, 0, spill);

    last_ = 2 * (m + 1) + 1;
    skeleton_.assign(last_ + 2, 0);
    Mask removed_a = 0;
    for (int i = 1; i <= m + 1; ++i) {
      removed_a |= block_a[i];
      skeleton_[2 * i] = a_ & ~removed_a;
    }
    for (int i = 0; i <= m; ++i) {
      Mask removed_b = 0;
      for (int j = 1; j <= m - i + 1; ++j) removed_b |= block_b[j];
      skeleton_[2 * i + 1] = b_ & ~removed_b;
    }
    skeleton_[last_] = b_;

    for (int i = 1; i <= m + 1; ++i) trace_.blocks_a.push_back(set(block_a[i]));
    for (int i = 1; i <= m + 1; ++i) trace_.blocks_b.push_back(set(block_b[i]));
    for (int k = 1; k <= last_; ++k) trace_.skeletons.push_back(set(skeleton_[k]));

    std::vector<Mask> s(last_ + 1, 0);
    s[0] = a_;
    s[last_] = b_;
    used_swap_ = false;
    if (!extend(1, s)) {
      if (!deepest_) deepest_ = Exhaustion{"S_1", 0, "search abandoned"};
      fail(*deepest_);
    }
    if (used_swap_) trace_.case_taken = ChainCase::case2_2_swap;
    return finish(std::move(s));
  }

  // S_k = C_k ∪ K with K drawn from [n] \ (S_{k-1} ∪ C_k), and for even k also outside
  // C_{k+1} so the next skeleton can be completed disjointly.
  bool extend(int k, std::vector<Mask>& s) {
    if (k == last_) return true;
    const Mask c = skeleton_[k];
    Mask excluded = s[k - 1] | c;
    if (k % 2 == 0) excluded |= skeleton_[k + 1];
    const Mask available = all_ & ~excluded;
    const int count = params_.r - std::popcount(c);
    const std::string step = "S_" + std::to_string(k);

    bool admissible_seen = false;
    bool done = false;
    bool over_budget = false;
    for_each_subset_of_size(available, count, [&](Mask chosen) {
      const Mask candidate = c | chosen;
      if (forbidden_.contains_mask(candidate)) return true;
      if (++tried_ > options_.max_candidates) {
        over_budget = true;
        return false;
      }
      if (admissible_seen) {
        ++trace_.backtracks;
        trace_.notes.push_back(step + ": retrying with {" + to_string(set(candidate)) + "}");
      }
      admissible_seen = true;
      s[k] = candidate;
      done = extend(k + 1, s);
      return !done && options_.backtrack;
    });
    if (done) return true;
    if (over_budget) {
      record_exhaustion(step, available, count, "candidate budget exceeded");
      return false;
    }
    if (!admissible_seen) {
      if (k == 2 && !subcase21_) return swap_into_s2(s, available);
      record_exhaustion(step, available, count,
                        "all " + std::to_string(binomial_saturating(std::popcount(available), count)) +
                            " candidates are forbidden");
    }
    return false;
  }

  // Every p-completion of C_2 inside `available` is forbidden. Take w_1 outside S_0 \ C_2
  // and an a_1 of S_1 \ C_1 outside C_3 \ C_1, then trade them:
  //   S_2 = {a_1, w_2..w_p} ∪ C_2,   S_1 = (S_1 \ {a_1}) ∪ {w_1}.
  bool swap_into_s2(std::vector<Mask>& s, Mask available) {
    const int p = params_.p;
    const Mask first_block = a_ & ~skeleton_[2];
    const Mask w1_choices = available & ~first_block;
    const std::string step = "S_2";
    if (w1_choices == 0) {
      record_exhaustion(step, available, p, "swap: no w_1 outside S_0 \\ C_2");
      return false;
    }
    const Mask w1 = w1_choices & (~w1_choices + 1);
    const Mask w_rest = lowest_bits(available & ~w1, p - 1);
    if (std::popcount(w_rest) != p - 1) {
      record_exhaustion(step, available, p, "swap: too few elements for w_2..w_p");
      return false;
    }
    const Mask c1 = skeleton_[1];
    const Mask a_choices = (s[1] & ~c1) & ~(skeleton_[3] & ~c1);
    if (a_choices == 0) {
      record_exhaustion(step, available, p, "swap: every a_i lies in C_3 \\ C_1");
      return false;
    }
    const Mask a1 = a_choices & (~a_choices + 1);
    const Mask new_s2 = a1 | w_rest | skeleton_[2];
    const Mask new_s1 = (s[1] & ~a1) | w1;
    if (forbidden_.contains_mask(new_s2) || forbidden_.contains_mask(new_s1)) {
      record_exhaustion(step, available, p, "swap: exchanged set is forbidden");
      return false;
    }
    const Mask old_s1 = s[1];
    s[1] = new_s1;
    s[2] = new_s2;
    trace_.notes.push_back("S_2 swap: w_1=" + std::to_string(std::countr_zero(w1) + 1) +
                           " a_1=" + std::to_string(std::countr_zero(a1) + 1));
    if (extend(3, s)) {
      used_swap_ = true;
      return true;
    }
    s[1] = old_s1;
    return false;
  }

  const UniverseParams& params_;
  const Family& forbidden_;
  const ChainOptions& options_;
  Mask a_;
  Mask b_;
  Mask all_;
  ChainTrace trace_;
  std::vector<Mask> skeleton_;
  int last_ = 0;
  bool subcase21_ = false;
  bool used_swap_ = false;
  std::uint64_t tried_ = 0;
  std::optional<Exhaustion> deepest_;
};

Chain oracle_chain(const UniverseParams& params, const Family& forbidden, const RSet& a, const RSet& b,
                   const ChainOptions& options, const std::string& reason) {
  auto path = bfs_path_avoiding(params, forbidden, a, b, options.budget);
  if (!path) throw DomainError("no chain exists: endpoints lie in different components (" + reason + ")");
  Chain chain;
  chain.sets = std::move(*path);
  chain.trace.case_taken = ChainCase::oracle_fallback;
  chain.trace.t = intersection_size(a, b);
  chain.trace.notes.push_back("oracle fallback: " + reason);
  return chain;
}

}  // namespace

std::string_view to_string(ChainCase c) {
  switch (c) {
    case ChainCase::disjoint_endpoints: return "disjoint_endpoints";
    case ChainCase::case1: return "case1";
    case ChainCase::case2_1: return "case2_1";
    case ChainCase::case2_2: return "case2_2";
    case ChainCase::case2_2_swap: return "case2_2_swap";
    case ChainCase::oracle_fallback: return "oracle_fallback";
  }
  return "unknown";
}

RSet pick_avoiding(const CandidatePool& pool, const Family& forbidden, Mask completion) {
  const Mask available = pool.available & ~completion;
  const int universe = forbidden.universe();
  if (((available | completion) & ~full_mask(universe)) != 0) {
    throw DomainError("candidate pool reaches outside the universe");
  }
  std::optional<Mask> found;
  for_each_subset_of_size(available, pool.count, [&](Mask k) {
    if (forbidden.contains_mask(completion | k)) return true;
    found = completion | k;
    return false;
  });
  if (!found) {
    const auto pool_size = static_cast<std::size_t>(binomial_saturating(std::popcount(available), pool.count));
    throw PoolExhaustedError(pool_size, forbidden.size(),
                             "all " + std::to_string(pool_size) + " candidates are forbidden");
  }
  return RSet(*found, universe);
}

Chain build_chain(const UniverseParams& params, const Family& forbidden, const RSet& a, const RSet& b,
                  const ChainOptions& options) {
  if (forbidden.universe() != params.n || forbidden.r() != params.r) {
    throw DomainError("forbidden family does not live in C([n], r)");
  }
  for (const RSet* s : {&a, &b}) {
    if (s->size() != params.r || (s->bits() & ~full_mask(params.n)) != 0) {
      throw DomainError("chain endpoint {" + to_string(*s) + "} is not an r-subset of [n]");
    }
  }
  if (a.bits() == b.bits()) throw DomainError("chain endpoints must differ");
  if (forbidden.contains(a) || forbidden.contains(b)) {
    throw DomainError("chain endpoint lies in the forbidden family");
  }

  const auto allowed = binomial(params.l, params.p);
  const bool disjoint = !intersects(a, b);
  if (forbidden.size() > allowed) {
    if (options.allow_oracle_fallback) {
      return oracle_chain(params, forbidden, a, b, options, "|C| exceeds C(l,p)");
    }
    throw DomainError("|C|=" + std::to_string(forbidden.size()) + " exceeds C(l,p)=" + std::to_string(allowed));
  }
  if (params.l == 0 && !disjoint) {
    if (options.allow_oracle_fallback) return oracle_chain(params, forbidden, a, b, options, "l = 0");
    throw DomainError("l = 0 with intersecting endpoints: the disjointness graph on C([2r], r) is a perfect "
                      "matching, use the n = 2r characterization instead");
  }

  try {
    return ChainBuilder(params, forbidden, a.bits(), b.bits(), options).build();
  } catch (const ChainConstructionError& e) {
    if (!options.allow_oracle_fallback) throw;
    return oracle_chain(params, forbidden, a, b, options, e.what());
  }
}

std::optional<std::string> find_chain_defect(const UniverseParams& params, const Family& forbidden, const RSet& a,
                                             const RSet& b, const Chain& chain) {
  const auto& sets = chain.sets;
  if (sets.size() < 2) return "chain has fewer than two sets";
  if (sets.front().bits() != a.bits()) return "chain does not start at A";
  if (sets.back().bits() != b.bits()) return "chain does not end at B";
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto& s = sets[k];
    const auto label = "S_" + std::to_string(k) + " = {" + to_string(s) + "}";
    if (s.size() != params.r) return label + " does not have r elements";
    if ((s.bits() & ~full_mask(params.n)) != 0) return label + " leaves [n]";
    if (forbidden.contains_mask(s.bits())) return label + " is forbidden";
    if (k + 1 < sets.size() && intersects(s, sets[k + 1])) {
      return label + " meets S_" + std::to_string(k + 1) + " = {" + to_string(sets[k + 1]) + "}";
    }
  }
  return std::nullopt;
}

bool verify_chain(const UniverseParams& params, const Family& forbidden, const RSet& a, const RSet& b,
                  const Chain& chain) {
  return !find_chain_defect(params, forbidden, a, b, chain).has_value();
}

}  // namespace kneserlab
