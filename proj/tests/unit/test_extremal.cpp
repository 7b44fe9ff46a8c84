#include <doctest.h>

#include "kneserlab/kneserlab.hpp"
#include "oracles.hpp"

using namespace kneserlab;

namespace {

Family F(int n, int r, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<RSet> members;
  for (auto s : sets) members.push_back(RSet::of(s, n));
  return Family(n, r, std::move(members));
}

}  // namespace

TEST_CASE("theorem_bound") {
  CHECK(theorem_bound(make_params(5, 2)) == 9);
  CHECK(theorem_bound(make_params(8, 3)) == 54);
  CHECK(theorem_bound(make_params(4, 2)) == 6);
  CHECK(theorem_bound(make_params(6, 3)) == 20);
  CHECK(theorem_bound(make_params(12, 3)) == oracle::choose(12, 3) - oracle::choose(6, 3));
}

TEST_CASE("exact_max_sum") {
  const auto r42 = exact_max_sum(make_params(4, 2));
  REQUIRE(r42.exact_max);
  CHECK(*r42.exact_max == 6);
  REQUIRE(r42.witness);
  CHECK(r42.witness->a.size() + r42.witness->b.size() == 6);
  // The witness is a union of complement pairs on each side.
  for (const auto* side : {&r42.witness->a, &r42.witness->b}) {
    for (const auto& s : *side) CHECK(side->contains(complement(s, 4)));
  }

  const auto r52 = exact_max_sum(make_params(5, 2));
  CHECK(*r52.exact_max == 7);
  CHECK(*r52.min_cut_size == 3);
  CHECK(*r52.strict_gap == 2);

  const auto r73 = exact_max_sum(make_params(7, 3));
  const oracle::Graph g73(oracle::subsets(7, 3));
  CHECK(*r73.min_cut_size == oracle::min_cut_size(g73, 6));
  CHECK(*r73.exact_max == 35 - static_cast<std::uint64_t>(*r73.min_cut_size));
  CHECK(*r73.exact_max < theorem_bound(make_params(7, 3)));

  const auto r21 = exact_max_sum(make_params(2, 1));
  CHECK_FALSE(r21.exact_max);
  CHECK_FALSE(r21.note.empty());
}

TEST_CASE("exact maximum agrees with assignment brute force") {
  for (auto [n, r] : {std::pair{4, 2}, {5, 2}}) {
    const auto params = make_params(n, r);
    const auto brute = oracle::max_pair_sum(n, r);
    REQUIRE(brute);
    CHECK(*exact_max_sum(params).exact_max == static_cast<std::uint64_t>(*brute));
    CHECK(naive_max_sum(params) == static_cast<std::uint64_t>(*brute));
  }
  // r = 1: the graph is complete, so no nonempty disjoint cross-intersecting pair exists.
  CHECK_FALSE(oracle::max_pair_sum(5, 1));
  CHECK(naive_max_sum(make_params(5, 1)) == std::nullopt);
  CHECK_THROWS_AS(naive_max_sum(make_params(6, 3)), BudgetError);
}

TEST_CASE("witness pairs pass verification") {
  for (auto [n, r] : {std::pair{4, 2}, {5, 2}, {6, 2}, {7, 2}, {8, 2}, {6, 3}, {7, 3}}) {
    const auto params = make_params(n, r);
    const auto report = exact_max_sum(params);
    REQUIRE(report.witness);
    const auto v = verify_pair(params, report.witness->a, report.witness->b);
    CHECK(v.passes());
    CHECK(v.sum == *report.exact_max);
    CHECK(*report.exact_max <= report.bound);
    if (params.l >= 1) CHECK(*report.exact_max + 1 <= report.bound);
  }
}

TEST_CASE("verify_pair") {
  const auto params = make_params(8, 3);
  const auto pair = large_r_pair(params);
  const auto v = verify_pair(params, pair.a, pair.b);
  CHECK(v.disjoint);
  CHECK(v.cross_intersecting);
  CHECK(v.sum == 22);
  CHECK(v.bound == 54);
  CHECK(v.within_bound == true);
  CHECK(v.min_side == 10);
  CHECK(v.passes());

  const auto p52 = make_params(5, 2);
  const auto vac = verify_pair(p52, Family::complete(p52), Family(5, 2));
  CHECK(vac.vacuous);
  CHECK_FALSE(vac.within_bound.has_value());
  CHECK_FALSE(vac.passes());

  const auto bad = verify_pair(p52, F(5, 2, {{1, 2}}), F(5, 2, {{3, 4}}));
  CHECK_FALSE(bad.cross_intersecting);
  CHECK(bad.cross_violation.has_value());
  CHECK_FALSE(bad.passes());

  CHECK_THROWS_AS(verify_pair(p52, F(5, 2, {{1, 2}}), F(6, 2, {{1, 2}})), DomainError);
}

TEST_CASE("scan") {
  const std::vector<std::pair<int, int>> grid{{4, 2}, {5, 2}, {6, 2}};
  ScanOptions quick;
  quick.exact = false;
  const auto rows = scan(grid, quick);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].report->bound == 6);
  CHECK(rows[1].report->bound == 9);
  CHECK(rows[2].report->bound == 13);

  const std::vector<std::pair<int, int>> g63{{6, 3}};
  const auto exact = scan(g63);
  CHECK(exact[0].report->bound == 20);
  CHECK(exact[0].report->exact_max == 20u);

  CHECK(scan({}).empty());

  // Row-level errors do not abort the scan.
  const std::vector<std::pair<int, int>> mixed{{3, 2}, {5, 2}, {40, 20}};
  ScanOptions tight;
  tight.limits.max_vertices = 100;
  const auto out = scan(mixed, tight);
  REQUIRE(out.size() == 3);
  CHECK_FALSE(out[0].error.empty());
  CHECK(out[1].error.empty());
  CHECK(out[1].report->exact_max == 7u);
  CHECK_FALSE(out[2].error.empty());

  // Output order follows input order regardless of threads.
  std::vector<std::pair<int, int>> big;
  for (int r = 2; r <= 3; ++r) {
    for (int l = 0; l <= 3; ++l) big.emplace_back(2 * r + l, r);
  }
  ScanOptions one;
  one.max_threads = 1;
  const auto serial = scan(big, one);
  const auto parallel = scan(big);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < big.size(); ++i) {
    CHECK(serial[i].params.n == big[i].first);
    CHECK(parallel[i].params.n == big[i].first);
    CHECK(serial[i].report->exact_max == parallel[i].report->exact_max);
  }
}

TEST_CASE("bound is nondecreasing in n on the grid") {
  for (int r = 2; r <= 4; ++r) {
    std::uint64_t prev = 0;
    for (int l = 0; l <= 8; ++l) {
      const auto b = theorem_bound(make_params(2 * r + l, r));
      CHECK(b >= prev);
      prev = b;
    }
  }
}

TEST_CASE("full_partition_pairs at r = 2") {
  const auto pairs = full_partition_pairs(2);
  CHECK(pairs.size() == 6);
  for (const auto& p : pairs) {
    CHECK(p.a.size() + p.b.size() == 6);
    CHECK(are_cross_intersecting(p.a, p.b));
    for (const auto& s : p.a) CHECK(p.a.contains(complement(s, 4)));
  }
}
