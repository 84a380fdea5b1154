#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "support/fixtures.hpp"
#include "tsys/bijection.hpp"
#include "tsys/compatibility.hpp"
#include "tsys/enumerate.hpp"
#include "tsys/fuss_catalan.hpp"

using namespace tsys;

TEST_CASE("extensions keep the base and complete the new block") {
  TransferSystem chain = make_transfer_system(2, {{1, 2}});
  CHECK(build_extension(chain, 1, 0) == make_transfer_system(3, {{1, 2}, {1, 3}}));
  CHECK(build_extension(chain, 1, 1) == make_transfer_system(3, {{1, 2}}));
  CHECK(build_extension(complete(2), 2, 0) ==
        make_transfer_system(4, {{1, 2}, {3, 4}, {1, 3}, {1, 4}}));
  CHECK(build_extension(make_transfer_system(2, {}), 2, 0) ==
        make_transfer_system(4, {{3, 4}}));
  CHECK(build_extension(ExtensionSpec{chain, 1, 0}) == build_extension(chain, 1, 0));

  CHECK_THROWS_AS(build_extension(chain, 1, 2), LevelOutOfRange);  // r = 1 here
  CHECK_THROWS_AS(build_extension(chain, 1, -1), LevelOutOfRange);
  CHECK_THROWS_AS(build_extension(chain, 0, 0), InvalidParams);
  CHECK_THROWS_AS(build_extension(TransferSystem{}, 1, 0), EmptyPoset);
}

TEST_CASE("extension postconditions hold for every base") {
  for (int m = 1; m <= 4; ++m)
    for (const TransferSystem& base : enumerate_all(m)) {
      int r = 0;
      for (int i = 1; i < m; ++i)
        if (base.has(i, m)) ++r;
      for (int k = 1; k <= 3; ++k) {
        auto exts = list_extensions(base, k);
        REQUIRE(static_cast<int>(exts.size()) == r + 1);
        CHECK(std::set<TransferSystem>(exts.begin(), exts.end()).size() == exts.size());
        for (int level = 0; level <= r; ++level) {
          const TransferSystem& ext = exts[level];
          CHECK(ext == build_extension(base, k, level));
          CHECK(restrict(ext, m) == base);
          CHECK(fixed_points(ext, m) == complete(k));
          CHECK(core(ext) == concat(core(base), complete(k)));
          // sources crossing into the block reach all of it, and there are r - level of them
          int crossing = 0;
          for (int i = 1; i <= m; ++i) {
            int hits = 0;
            for (int j = m + 1; j <= m + k; ++j)
              if (ext.has(i, j)) ++hits;
            CHECK((hits == 0 || hits == k));
            if (hits == k) ++crossing;
          }
          CHECK(crossing == r - level);
        }
      }
    }

  // worked counts: a complete base has m - 1 proper transfers into the top
  for (int m = 1; m <= 5; ++m) {
    CHECK(list_extensions(complete(m), 2).size() == static_cast<std::size_t>(m));
    CHECK(list_extensions(make_transfer_system(m, {}), 2).size() == 1);
  }
}

TEST_CASE("sigma reads off blocks and levels") {
  CHECK(sigma(fixtures::blocks412_full()) == make_catalan_tuple({4, 0, 1, 2}));
  CHECK(sigma(make_transfer_system(3, {{1, 2}})) == make_catalan_tuple({2, 0, 1}));
  CHECK(sigma(make_transfer_system(3, {{1, 2}, {1, 3}})) == make_catalan_tuple({2, 1}));
  CHECK(sigma(make_transfer_system(3, {{2, 3}})) == make_catalan_tuple({1, 2}));
  CHECK(sigma(make_transfer_system(3, {})) == make_catalan_tuple({1, 1, 1}));
  for (int k = 1; k <= 6; ++k) CHECK(sigma(complete(k)) == make_catalan_tuple({k}));
  CHECK_THROWS_AS(sigma(TransferSystem{}), EmptyPoset);
}

TEST_CASE("sigma_inverse rebuilds the system") {
  CHECK(sigma_inverse(make_catalan_tuple({4, 0, 1, 2})) == fixtures::blocks412_full());
  for (int k = 1; k <= 6; ++k) CHECK(sigma_inverse(make_catalan_tuple({k})) == complete(k));
  CHECK_THROWS_AS(sigma_inverse(CatalanTuple{}), InvalidTuple);
}

TEST_CASE("sigma is a bijection onto tuples of the same length") {
  for (int n = 1; n <= 6; ++n) {
    std::set<CatalanTuple> image;
    for (const TransferSystem& sys : enumerate_all(n)) {
      CatalanTuple t = sigma(sys);
      CHECK(t.length() == n);
      CHECK(sigma_inverse(t) == sys);
      image.insert(t);
    }
    CHECK(image.size() == enumerate_all(n).size());  // injective
    auto tuples = enumerate_tuples(n);
    CHECK(image == std::set<CatalanTuple>(tuples.begin(), tuples.end()));
    for (const CatalanTuple& t : tuples) CHECK(sigma(sigma_inverse(t)) == t);
  }
}

TEST_CASE("sigma respects cores and the excess law") {
  for (int n = 1; n <= 6; ++n)
    for (const TransferSystem& sys : enumerate_all(n)) {
      CatalanTuple t = sigma(sys);
      CHECK(tuple_core(t) == Composition(core_blocks(sys)));
      int transfers_to_top = 0;
      for (int j = 1; j < n; ++j)
        if (sys.has(j, n)) ++transfers_to_top;
      CHECK(excess(t) == transfers_to_top);
    }
}

TEST_CASE("counting pairs through cores") {
  CoreCount three = count_by_cores(3);
  CHECK(three.total == 12);
  REQUIRE(three.rows.size() == 4);

  auto row = [&](const Composition& c) -> const CoreBreakdownRow& {
    for (const auto& r : three.rows)
      if (r.blocks == c) return r;
    REQUIRE(false);
    return three.rows.front();
  };
  CHECK(row(Composition({3})).tuple_count == 1);
  CHECK(row(Composition({3})).catalan_product == 5);
  CHECK(row(Composition({3})).contribution == 5);
  CHECK(row(Composition({2, 1})).tuple_count == 2);
  CHECK(row(Composition({2, 1})).contribution == 4);
  CHECK(row(Composition({1, 2})).tuple_count == 1);
  CHECK(row(Composition({1, 2})).contribution == 2);
  CHECK(row(Composition({1, 1, 1})).contribution == 1);

  // rows follow the composition enumeration and reconcile internally
  for (int n = 1; n <= 7; ++n) {
    CoreCount cc = count_by_cores(n);
    auto comps = compositions_of(n);
    REQUIRE(cc.rows.size() == comps.size());
    BigCount sum = 0;
    for (std::size_t idx = 0; idx < comps.size(); ++idx) {
      const CoreBreakdownRow& r = cc.rows[idx];
      CHECK(r.blocks == comps[idx]);
      CHECK(r.tuple_count ==
            BigCount(static_cast<long long>(enumerate_tuples_with_core(r.blocks).size())));
      BigCount prod = 1;
      for (int part : r.blocks.parts()) prod *= catalan(part);
      CHECK(r.catalan_product == prod);
      CHECK(r.contribution == r.tuple_count * r.catalan_product);
      sum += r.contribution;
    }
    CHECK(cc.total == sum);
  }
  CHECK_THROWS_AS(count_by_cores(0), BoundsError);
}

TEST_CASE("core-indexed totals match every other count") {
  for (int n = 1; n <= 8; ++n) {
    BigCount total = count_by_cores(n).total;
    CHECK(total == fuss_catalan(n, 3, 1));
    CHECK(total == tuple_catalan_sum(n));
    CHECK(total == count_d(n, 0));
  }
  for (int n = 1; n <= 30; ++n) CHECK(tuple_catalan_sum(n) == fuss_catalan(n, 3, 1));
  CHECK_THROWS_AS(tuple_catalan_sum(0), BoundsError);

  // the same sum taken tuple by tuple, entries weighted by Catalan numbers
  for (int n = 1; n <= 10; ++n) {
    BigCount sum = 0;
    for (const CatalanTuple& t : enumerate_tuples(n)) {
      BigCount prod = 1;
      for (int e : t.entries()) prod *= catalan(e);
      sum += prod;
    }
    CHECK(sum == fuss_catalan(n, 3, 1));
  }

  // and the bijection route: partners of sys grouped by sigma fibers
  for (int n = 1; n <= 6; ++n) {
    BigCount sum = 0;
    for (const TransferSystem& sys : enumerate_all(n)) {
      BigCount prod = 1;
      for (int e : sigma(sys).entries()) prod *= catalan(e);
      sum += prod;
      CHECK(prod == BigCount(static_cast<long long>(compatible_partners(sys).size())));
    }
    CHECK(sum == count_pairs(n, CountMethod::recurrence));
  }
}
