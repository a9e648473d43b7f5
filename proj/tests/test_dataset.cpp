#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"

using namespace hdrmine;
using hdrmine::testing::kTable1;

TEST_CASE("parse_fimi reads the sample database") {
  const auto db = parse_fimi(kTable1);
  REQUIRE(db.size() == 5);
  CHECK(db.transactions[0] == std::vector<Label>{1, 2, 4});
  CHECK(db.transactions[1] == std::vector<Label>{3});
  CHECK(db.transactions[2] == std::vector<Label>{1, 3, 5});
  CHECK(db.transactions[3] == std::vector<Label>{2, 3});
  CHECK(db.transactions[4] == std::vector<Label>{1, 3});
  CHECK(db.label_universe == std::set<Label>{1, 2, 3, 4, 5});
}

TEST_CASE("parse_fimi edge cases") {
  CHECK(parse_fimi("").size() == 0);
  const auto dup = parse_fimi("7 7 2\n");
  REQUIRE(dup.size() == 1);
  CHECK(dup.transactions[0] == std::vector<Label>{2, 7});

  SUBCASE("blank lines and tabs") {
    const auto db = parse_fimi("\n1\t2 \r\n   \n3\n");
    REQUIRE(db.size() == 2);
    CHECK(db.transactions[0] == std::vector<Label>{1, 2});
  }
  SUBCASE("no trailing newline") { CHECK(parse_fimi("4 5").size() == 1); }
}

TEST_CASE("parse_fimi rejects bad tokens with the line number") {
  try {
    parse_fimi("1 2\n3 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_fimi("-1\n"), ParseError);
  CHECK_THROWS_AS(parse_fimi("1.5\n"), ParseError);
  CHECK_THROWS_AS(parse_fimi("4294967296\n"), ParseError);
  CHECK(parse_fimi("4294967295\n").transactions[0][0] == 4294967295u);
}

TEST_CASE("global_supports") {
  const auto s = global_supports(parse_fimi(kTable1));
  CHECK(s == std::map<Label, Support>{{1, 3}, {2, 2}, {3, 4}, {4, 1}, {5, 1}});
  CHECK(global_supports(RawDatabase{}).empty());
  CHECK(global_supports(parse_fimi("1\n1\n1\n")) == std::map<Label, Support>{{1, 3}});
}

TEST_CASE("prune_and_remap on the sample") {
  const auto raw = parse_fimi(kTable1);
  {
    auto [db, map] = prune_and_remap(raw, 2);
    CHECK(map.labels() == std::vector<Label>{1, 2, 3});
    CHECK(db.item_count == 3);
    CHECK(db.minsup == 2);
    const std::vector<Itemset> expected{{0, 1}, {2}, {0, 2}, {1, 2}, {0, 2}};
    CHECK(db.transactions == expected);
    Rank r = 99;
    CHECK_FALSE(map.rank(4, r));
    REQUIRE(map.rank(3, r));
    CHECK(r == 2);
  }
  {
    auto [db, map] = prune_and_remap(raw, 5);
    CHECK(db.item_count == 0);
    CHECK(db.size() == 0);
  }
  {
    auto [db, map] = prune_and_remap(raw, 1);
    CHECK(db.item_count == 5);
    REQUIRE(db.size() == 5);
    CHECK(db.transactions[0] == Itemset{0, 1, 3});
  }
  CHECK_THROWS_AS(prune_and_remap(raw, 0), ArgumentError);
}

TEST_CASE("prune_and_remap drops empty raw transactions") {
  auto raw = parse_fimi("1\n9\n1 2\n");
  raw.transactions.insert(raw.transactions.begin(), std::vector<Label>{});
  auto [db, map] = prune_and_remap(raw, 2);
  REQUIRE(db.size() == 2);
  CHECK(map.labels() == std::vector<Label>{1});
}

TEST_CASE("gen_sparse") {
  SUBCASE("deterministic for a seed") {
    CHECK(serialize_fimi(gen_sparse(100, 20, 5, 42)) == serialize_fimi(gen_sparse(100, 20, 5, 42)));
    CHECK(serialize_fimi(gen_sparse(100, 20, 5, 42)) != serialize_fimi(gen_sparse(100, 20, 5, 43)));
  }
  SUBCASE("empty") { CHECK(gen_sparse(0, 20, 5, 1).size() == 0); }
  SUBCASE("mean length tracks avg_len") {
    const auto db = gen_sparse(1000, 50, 8, 7);
    const double mean = atl(db.transactions);
    CHECK(mean >= 6.5);
    CHECK(mean <= 9.5);
  }
  SUBCASE("transactions are canonical and in range") {
    const auto db = gen_sparse(300, 6, 5, 3);
    for (const auto& t : db.transactions) {
      REQUIRE(!t.empty());
      CHECK(std::adjacent_find(t.begin(), t.end(), std::greater_equal<>()) == t.end());
      CHECK(t.front() >= 1);
      CHECK(t.back() <= 6);
    }
  }
  SUBCASE("skewed popularity") {
    const auto s = global_supports(gen_sparse(2000, 100, 5, 11));
    Support top = 0, low = ~Support{0};
    for (const auto& [l, v] : s) {
      top = std::max(top, v);
      low = std::min(low, v);
    }
    CHECK(top > 10 * low);
  }
  CHECK_THROWS_AS(gen_sparse(10, 5, 0, 1), ArgumentError);
  CHECK_THROWS_AS(gen_sparse(10, 5, 6, 1), ArgumentError);
}

TEST_CASE("atl") {
  CHECK(atl(parse_fimi(kTable1).transactions) == 2.2);
  CHECK(atl(std::vector<std::vector<int>>{}) == 0.0);
  CHECK(atl(std::vector<std::vector<int>>{{1, 2}, {1, 2}}) == 2.0);
}

TEST_CASE("dataset properties over random databases") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto raw = hdrmine::testing::random_small_db(seed, 15, 40);
    CAPTURE(seed);

    // Supports sum to the total length.
    const auto supports = global_supports(raw);
    const std::size_t by_items = std::accumulate(
        supports.begin(), supports.end(), std::size_t{0},
        [](std::size_t acc, const auto& kv) { return acc + kv.second; });
    std::size_t by_txns = 0;
    for (const auto& t : raw.transactions) by_txns += t.size();
    CHECK(by_items == by_txns);

    // Serialization round trip on canonical input (blank lines are not records).
    auto canonical = raw.transactions;
    std::erase_if(canonical, [](const auto& t) { return t.empty(); });
    CHECK(parse_fimi(serialize_fimi(raw)).transactions == canonical);

    // Every surviving rank is frequent on recount.
    for (Support minsup : {1u, 2u, 3u, 5u}) {
      auto [db, map] = prune_and_remap(raw, minsup);
      std::vector<Support> recount(db.item_count, 0);
      for (const auto& t : db.transactions) {
        CHECK(!t.empty());
        for (Rank r : t) ++recount[r];
      }
      for (Support s : recount) CHECK(s >= minsup);
    }
  }
}
