#include "doctest.h"

#include "macneille/errors.hpp"
#include "macneille/poset.hpp"
#include "macneille/verify.hpp"
#include "oracle.hpp"

using namespace macneille;

TEST_CASE("subset algebra and canonical order") {
  const auto a = Subset::of(5, {0, 2});
  const auto b = Subset::of(5, {2, 3});
  CHECK((a & b) == Subset::of(5, {2}));
  CHECK((a | b) == Subset::of(5, {0, 2, 3}));
  CHECK((a - b) == Subset::of(5, {0}));
  CHECK(a.complement() == Subset::of(5, {1, 3, 4}));
  CHECK(Subset::full(5).size() == 5);
  CHECK(Subset::empty(5).is_empty());
  CHECK(canonical_less(Subset::of(5, {4}), Subset::of(5, {0, 1})));
  CHECK(canonical_less(Subset::of(5, {0, 3}), Subset::of(5, {1, 2})));
  CHECK_FALSE(canonical_less(a, a));

  std::size_t count = 0;
  for_each_submask(Subset::of(6, {1, 3, 5}), [&](const Subset& s) {
    CHECK(s.is_subset_of(Subset::of(6, {1, 3, 5})));
    ++count;
  });
  CHECK(count == 8);
}

TEST_CASE("validation accepts orders and rejects cycles, extrema and bad labels") {
  const auto fly = fixtures::butterfly();
  CHECK(fly.size() == 4);
  CHECK(fly.leq(fly.index_of("a"), fly.index_of("d")));
  CHECK_FALSE(fly.leq(fly.index_of("c"), fly.index_of("d")));

  CHECK_THROWS_AS(FinitePoset::from_labels({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
  CHECK_THROWS_WITH_AS(FinitePoset::from_labels({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}),
                       "poset has minimum '1'", HypothesisError);
  CHECK_NOTHROW(FinitePoset::from_labels({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}, {.allow_extrema = true}));
  CHECK_THROWS_AS(FinitePoset::from_labels({"a", "b"}, {{"a", "z"}}), UnknownElementError);
  CHECK_THROWS_AS(FinitePoset::from_labels({"a", "a"}, {}), ValidationError);
}

TEST_CASE("bounds on the butterfly") {
  const auto p = fixtures::butterfly();
  const auto ab = p.subset_of_labels({"a", "b"});
  const auto cd = p.subset_of_labels({"c", "d"});
  CHECK(p.upper_bounds(ab) == cd);
  CHECK(p.lower_bounds(cd) == ab);
  CHECK(p.upper_bounds(p.empty_set()) == p.universe());
  CHECK(p.lower_bounds(p.empty_set()) == p.universe());
  CHECK(p.upper_bounds(p.universe()).is_empty());
  CHECK_FALSE(p.supremum(ab).has_value());
  CHECK(p.maximal_elements(p.universe()) == cd);
  CHECK(p.minimal_elements(p.universe()) == ab);
  CHECK_FALSE(p.is_directed(cd));
  CHECK(p.is_directed(p.subset_of_labels({"a", "c"})));
  CHECK(p.is_directed(p.empty_set()));
  CHECK(p.is_down_set(ab));
  CHECK(p.is_cofinal_in(cd, p.universe()));
  CHECK_FALSE(p.is_cofinal_in(ab, p.universe()));
  CHECK_THROWS_AS(p.is_cofinal_in(p.universe(), ab), NotASubsetError);
}

TEST_CASE("hasse covers are the transitive reduction") {
  const auto chain = fixtures::chain(4);
  const auto covers = hasse_covers(chain);
  CHECK(covers == std::vector<Pair>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(FinitePoset::from_relation(chain.labels(), covers, {.allow_extrema = true}) == chain);
}

TEST_CASE("bounds agree with the oracle on random posets") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    verify::Rng rng(seed);
    const auto p = verify::generate_poset(2 + seed % 5, 0.45, true, rng);
    for_each_submask(p.universe(), [&](const Subset& a) {
      CHECK(oracle::from(p.upper_bounds(a)) == oracle::upper(p, oracle::from(a)));
      CHECK(oracle::from(p.lower_bounds(a)) == oracle::lower(p, oracle::from(a)));
    });
    CHECK(FinitePoset::from_relation(p.labels(), hasse_covers(p), {.allow_extrema = true}) == p);
  }
}

TEST_CASE("maps: increasing and order-isomorphic embeddings") {
  const auto anti = fixtures::antichain(2);
  const auto fly = fixtures::butterfly();
  CHECK(PosetMap(anti, fly, {0, 1}).is_oie());
  CHECK(PosetMap::identity(fly).is_oie());
  const PosetMap fold(fly, anti, {0, 1, 0, 1});
  CHECK_FALSE(fold.is_increasing());
  CHECK(PosetMap::constant(fly, anti, 0).is_increasing());
  CHECK_FALSE(PosetMap::constant(fly, anti, 0).is_oie());
  CHECK_THROWS_WITH_AS(PosetMap(fly, anti, {0, 1}), doctest::Contains("map not total"), ValidationError);
}
