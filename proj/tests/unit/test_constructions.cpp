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

void check_pair(const FamilyPair& pair) {
  const auto a = oracle::to_familyv(pair.a);
  const auto b = oracle::to_familyv(pair.b);
  CHECK_FALSE(a.empty());
  CHECK_FALSE(b.empty());
  CHECK(oracle::disjoint_families(a, b));
  CHECK(oracle::cross_intersecting(a, b));
}

}  // namespace

TEST_CASE("star_partition") {
  const auto p62 = make_params(6, 2);
  const auto half = star_partition(p62, 1, SplitRule::first_half);
  CHECK(half.a.size() + half.b.size() == 5);
  CHECK(half.a.size() == 3);
  check_pair(half);

  const auto alt = star_partition(make_params(5, 2), 3, SplitRule::alternating);
  CHECK(alt.a.size() + alt.b.size() == 4);
  check_pair(alt);
  for (const auto& s : family_union(alt.a, alt.b)) CHECK(s.contains(3));

  const auto single = star_partition(make_params(4, 2), 1, SplitRule::singleton_vs_rest);
  CHECK(single.a == F(4, 2, {{1, 2}}));
  CHECK(single.b == F(4, 2, {{1, 3}, {1, 4}}));

  const auto custom = star_partition(
      make_params(7, 3), 2, [](const RSet& s, std::size_t) { return s.contains(1); }, "contains-1");
  check_pair(custom);
  CHECK(custom.a.size() + custom.b.size() == binomial(6, 2));

  CHECK_THROWS_AS(star_partition(make_params(5, 2), 0, SplitRule::first_half), DomainError);
  CHECK_THROWS_AS(star_partition(make_params(5, 2), 1, [](const RSet&, std::size_t) { return true; }), DomainError);
  CHECK_THROWS_AS(star_partition(make_params(2, 1), 1, SplitRule::first_half), DomainError);

  for (int n = 4; n <= 9; ++n) {
    for (int r = 2; 2 * r <= n; ++r) {
      const auto pair = star_partition(make_params(n, r), n, SplitRule::alternating);
      check_pair(pair);
      CHECK(pair.a.size() + pair.b.size() == oracle::choose(n - 1, r - 1));
    }
  }
}

TEST_CASE("large_r_pair") {
  const auto p83 = large_r_pair(make_params(8, 3));
  CHECK(p83.a.size() == 12);
  CHECK(p83.b.size() == 10);
  check_pair(p83);
  CHECK(p83.construction == "large_r_pair");

  const auto p62 = large_r_pair(make_params(6, 2));
  CHECK(p62.a == F(6, 2, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  CHECK(p62.b == F(6, 2, {{3, 4}, {1, 2}}));
  CHECK(p62.a.size() + p62.b.size() <= theorem_bound(make_params(6, 2)));
  check_pair(p62);

  const auto p63 = large_r_pair(make_params(6, 3));
  CHECK(p63.a.size() == 12);
  CHECK(p63.b.size() == 8);
  CHECK(p63.a.size() + p63.b.size() == 20);

  CHECK_THROWS_AS(large_r_pair(make_params(4, 1)), DomainError);

  // Direct reading of the set-builder definitions.
  for (int r = 2; r <= 5; ++r) {
    for (int l = 0; l <= 3; ++l) {
      const int n = 2 * r + l;
      const auto pair = large_r_pair(make_params(n, r));
      oracle::FamilyV a;
      oracle::FamilyV b;
      auto has = [](const oracle::SetV& s, int e) { return std::find(s.begin(), s.end(), e) != s.end(); };
      for (const auto& s : oracle::subsets(n, r)) {
        const bool inside = s.back() <= 2 * r;
        const bool x = inside && has(s, 1) && !has(s, 2);
        oracle::SetV comp;
        for (int e = 1; e <= 2 * r; ++e) {
          if (!has(s, e)) comp.push_back(e);
        }
        const bool xc = inside && has(comp, 1) && !has(comp, 2);
        if (x || xc) a.push_back(s);
        if ((inside && !has(s, 1) && !has(s, 2)) || (has(s, 1) && has(s, 2))) b.push_back(s);
      }
      CHECK(oracle::to_familyv(pair.a) == oracle::to_familyv(oracle::to_family(a, n, r)));
      CHECK(oracle::to_familyv(pair.b) == oracle::to_familyv(oracle::to_family(b, n, r)));
      check_pair(pair);
    }
  }
}

TEST_CASE("pair_partition") {
  CHECK(part_count(2) == 3);
  CHECK(part_count(3) == 10);
  CHECK(part(2, 1) == F(4, 2, {{1, 2}, {3, 4}}));

  const std::vector<int> one{1};
  const auto p = pair_partition(2, one);
  CHECK(p.a == F(4, 2, {{1, 2}, {3, 4}}));
  CHECK(p.b == F(4, 2, {{1, 3}, {2, 4}, {1, 4}, {2, 3}}));
  CHECK(p.a.size() + p.b.size() == 6);
  check_pair(p);

  const std::vector<int> two{1, 2};
  const auto q = pair_partition(2, two);
  CHECK(q.a.size() + q.b.size() == 6);
  check_pair(q);

  for (int i = 1; i <= 10; ++i) {
    const std::vector<int> sel{i};
    const auto pr = pair_partition(3, sel);
    CHECK(pr.a.size() == 2);
    CHECK(pr.b.size() == 18);
    check_pair(pr);
  }

  const std::vector<int> none;
  const std::vector<int> all{1, 2, 3};
  const std::vector<int> outside{4};
  CHECK_THROWS_AS(pair_partition(2, none), DomainError);
  CHECK_THROWS_AS(pair_partition(2, all), DomainError);
  CHECK_THROWS_AS(pair_partition(2, outside), DomainError);
}

TEST_CASE("expected_sizes") {
  const auto lr = expected_sizes(make_params(8, 3), Construction::large_r_pair);
  CHECK(lr.total == 22);
  CHECK(lr.total == oracle::choose(5, 3) + oracle::choose(4, 2) + oracle::choose(6, 1));
  CHECK(lr.a == 12u);
  CHECK(lr.b == 10u);
  CHECK(expected_sizes(make_params(6, 2), "star_partition").total == 5);
  CHECK(expected_sizes(make_params(4, 2), "pair_partition").total == 6);
  CHECK_THROWS_AS(expected_sizes(make_params(4, 2), "nope"), DomainError);
  CHECK(parse_split_rule("singleton-vs-rest") == SplitRule::singleton_vs_rest);
  CHECK_THROWS_AS(parse_split_rule("odd"), DomainError);
}

TEST_CASE("materialized sizes equal the closed forms") {
  for (int r = 2; r <= 6; ++r) {
    for (int l = 0; l <= 4; ++l) {
      const int n = 2 * r + l;
      const auto params = make_params(n, r);
      const auto pair = large_r_pair(params);
      const auto expected = expected_sizes(params, Construction::large_r_pair);
      CHECK(pair.a.size() == 2 * oracle::choose(2 * r - 2, r - 1));
      CHECK(pair.b.size() == oracle::choose(2 * r - 2, r) + oracle::choose(n - 2, r - 2));
      CHECK(pair.a.size() + pair.b.size() ==
            oracle::choose(n - l - 1, r) + oracle::choose(n - l - 2, r - 1) + oracle::choose(n - 2, r - 2));
      CHECK(expected.total == pair.a.size() + pair.b.size());
      CHECK(verify_pair(params, pair.a, pair.b).passes());
    }
  }
}
