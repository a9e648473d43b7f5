#include "doctest.h"
#include "hdrmine/miner.hpp"
#include "hdrmine/mfi_store.hpp"

using namespace hdrmine;

// Ranks for the sample: a=0 b=1 c=2 d=3 e=4.
TEST_CASE("maximality_insert keeps an antichain") {
  MfiStore mfi(5);
  CHECK(maximality_insert(mfi, {0, 2}, 2));
  CHECK_FALSE(maximality_insert(mfi, {0}, 3));
  CHECK(maximality_insert(mfi, {1}, 2));
  CHECK(mfi.sorted() == std::vector<MfiEntry>{{{0, 2}, 2}, {{1}, 2}});
  CHECK(mfi.containing(2) == std::vector<std::uint32_t>{0});
  CHECK_FALSE(maximality_insert(mfi, {0, 2}, 2));
}

TEST_CASE("antichain check flags a late superset") {
  MfiStore mfi(5);
  mfi.insert({0}, 3, true);
  CHECK_THROWS_AS(mfi.insert({0, 1}, 1, true), InvariantError);
  MfiStore lax(5);
  lax.insert({0}, 3);
  CHECK(lax.insert({0, 1}, 1));
}

TEST_CASE("has_superset_of") {
  MfiStore mfi(70);
  CHECK_FALSE(mfi.has_superset_of(Itemset{1}));
  CHECK_FALSE(mfi.has_superset_of(Itemset{}));
  mfi.insert({1, 5, 64, 69}, 1);
  mfi.insert({2, 5}, 1);
  CHECK(mfi.has_superset_of(Itemset{5}));
  CHECK(mfi.has_superset_of(Itemset{1, 64, 69}));
  CHECK(mfi.has_superset_of(Itemset{}));
  CHECK_FALSE(mfi.has_superset_of(Itemset{1, 2}));
  CHECK_FALSE(mfi.has_superset_of(Itemset{0}));
  CHECK_THROWS_AS(mfi.insert({70}, 1), ArgumentError);
}

TEST_CASE("lmfi_project") {
  MfiStore mfi(5);
  mfi.insert({0, 2}, 2);
  mfi.insert({1}, 2);
  const auto on_c = lmfi_project(mfi, 2);
  CHECK(on_c.ids() == std::vector<std::uint32_t>{0});
  CHECK(on_c.has_superset_of(Itemset{0, 2}));
  CHECK(lmfi_project(mfi, 3).size() == 0);
  CHECK(lmfi_project(mfi, 2).restrict_to(1).size() == 0);
  CHECK(lmfi_project(mfi, 2).restrict_to(0).size() == 1);
}

TEST_CASE("hut_prune_check") {
  MfiStore mfi(5);
  const Itemset none;
  CHECK_FALSE(hut_prune_check(Itemset{0}, Itemset{2}, mfi));
  mfi.insert({0, 2}, 2);
  CHECK(hut_prune_check(Itemset{0}, Itemset{2}, mfi));
  CHECK_FALSE(hut_prune_check(Itemset{1}, none, mfi));
  CHECK(hut_prune_check(Itemset{0}, Itemset{2}, lmfi_project(mfi, 0)));
  CHECK_FALSE(hut_prune_check(Itemset{0}, Itemset{1, 2}, lmfi_project(mfi, 0)));
}
