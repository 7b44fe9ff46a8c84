#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kneserlab/errors.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/rset.hpp"

namespace kneserlab {

// Which branch of the construction produced a chain.
enum class ChainCase {
  disjoint_endpoints,  // A ∩ B = ∅: the chain is [A, B]
  case1,               // ceil(l/2) >= r: one middle set outside A ∪ B
  case2_1,             // ceil(l/2) < r and r - t < p - q
  case2_2,             // ceil(l/2) < r and r - t >= p - q
  case2_2_swap,        // case2_2 where every completion of C_2 was forbidden
  oracle_fallback,     // explicitly requested BFS path
};

std::string_view to_string(ChainCase c);

struct ChainTrace {
  ChainCase case_taken = ChainCase::disjoint_endpoints;
  int t = 0;  // |A ∩ B|
  int m = 0;  // t = m·p + q
  int q = 0;
  // A_1..A_{m+1} and B_1..B_{m+1}: A ∩ B is cut into blocks of p elements; the last
  // blocks also take up to p - q private elements of A (resp. B).
  std::vector<RSet> blocks_a;
  std::vector<RSet> blocks_b;
  // C_1..C_{2(m+1)+1}: C_{2i} = A minus the first i A-blocks, C_{2i+1} = B minus the
  // first m-i+1 B-blocks, C_{2(m+1)+1} = B. S_k is C_k plus elements chosen to avoid
  // the forbidden family.
  std::vector<RSet> skeletons;
  // Candidates abandoned because a later pool ran dry (first-candidate choices only
  // go through when this is 0).
  int backtracks = 0;
  std::vector<std::string> notes;
};

// S_0 = A, ..., S_f = B with consecutive sets disjoint and none forbidden.
struct Chain {
  std::vector<RSet> sets;
  ChainTrace trace;

  int length() const noexcept { return static_cast<int>(sets.size()) - 1; }
};

struct ChainOptions {
  // When a pool runs dry, retry the next admissible candidate of an earlier step.
  // With false every step keeps its canonically first admissible candidate.
  bool backtrack = true;
  // Cap on candidate sets tried across the whole search.
  std::uint64_t max_candidates = 1'000'000;
  // Answer with a BFS path when the construction cannot run (forbidden family too
  // large, l = 0 with intersecting endpoints) or a candidate pool runs dry.
  bool allow_oracle_fallback = false;
  EnumerationBudget budget{};
};

// A candidate pool the counting argument promised to be nonempty was empty. Carries
// the trace up to the failing step.
class ChainConstructionError : public Error {
 public:
  ChainConstructionError(const std::string& what, ChainTrace trace, std::size_t pool_size,
                         std::size_t forbidden_size)
      : Error(what), trace_(std::move(trace)), pool_size_(pool_size), forbidden_size_(forbidden_size) {}

  const ChainTrace& trace() const noexcept { return trace_; }
  std::size_t pool_size() const noexcept { return pool_size_; }
  std::size_t forbidden_size() const noexcept { return forbidden_size_; }

 private:
  ChainTrace trace_;
  std::size_t pool_size_;
  std::size_t forbidden_size_;
};

// Completions of `completion` by `count` elements drawn from `available`.
struct CandidatePool {
  Mask available = 0;
  int count = 0;
};

// Canonically first completion ∪ K (K a `count`-subset of available \ completion) that is
// not in `forbidden`. Throws PoolExhaustedError when every candidate is forbidden.
RSet pick_avoiding(const CandidatePool& pool, const Family& forbidden, Mask completion);

// Requires |forbidden| <= C(l, p), a != b, neither endpoint forbidden, both r-sets.
// Throws DomainError on a violated precondition and ChainConstructionError on pool
// exhaustion (unless options.allow_oracle_fallback).
Chain build_chain(const UniverseParams& params, const Family& forbidden, const RSet& a, const RSet& b,
                  const ChainOptions& options = {});

// First reason the chain is not a valid a-to-b chain avoiding `forbidden`, if any.
std::optional<std::string> find_chain_defect(const UniverseParams& params, const Family& forbidden,
                                             const RSet& a, const RSet& b, const Chain& chain);

bool verify_chain(const UniverseParams& params, const Family& forbidden, const RSet& a, const RSet& b,
                  const Chain& chain);

}  // namespace kneserlab
