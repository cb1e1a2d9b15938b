#include "doctest.h"

#include <cstdlib>

#include "macneille/completion.hpp"
#include "macneille/errors.hpp"
#include "macneille/verify.hpp"
#include "oracle.hpp"

using namespace macneille;

namespace {

std::set<oracle::Set> lattice_members(const CompletionLattice& l) {
  std::set<oracle::Set> out;
  for (const auto& c : l.cuts()) out.insert(oracle::from(c.members()));
  return out;
}

}  // namespace

TEST_CASE("antichain of two has four cuts") {
  const auto p = fixtures::antichain(2);
  const auto l = dedekind_completion(p);
  CHECK(l.size() == 4);
  CHECK(lattice_members(l) == oracle::all_cuts(p));
  CHECK(l.covers().size() == 4);
}

TEST_CASE("butterfly has seven cuts including the middle one") {
  const auto p = fixtures::butterfly();
  const auto naive = dedekind_completion(p, {.strategy = CompletionStrategy::Naive});
  const auto generated = dedekind_completion(p, {.strategy = CompletionStrategy::Generated});
  REQUIRE(naive.size() == 7);
  CHECK(lattice_members(naive) == oracle::all_cuts(p));
  CHECK(naive.cuts() == generated.cuts());
  CHECK(naive.index_of(p.subset_of_labels({"a", "b"})).has_value());
  const std::vector<std::vector<std::string>> expected{{},         {"a"},           {"b"},
                                                       {"a", "b"}, {"a", "b", "c"}, {"a", "b", "d"},
                                                       {"a", "b", "c", "d"}};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(p.labels_of(naive.cut(i).members()) == expected[i]);
  CHECK(naive.embedding() == std::vector<std::size_t>{1, 2, 4, 5});
}

TEST_CASE("cut closure and validation") {
  const auto p = fixtures::butterfly();
  CHECK(cut_closure(p, p.subset_of_labels({"c"})).members() == p.subset_of_labels({"a", "b", "c"}));
  CHECK(cut_closure(p, p.subset_of_labels({"a", "b"})).members() == p.subset_of_labels({"a", "b"}));
  CHECK(cut_closure(p, p.empty_set()).members().is_empty());
  CHECK_FALSE(is_cut(p, p.subset_of_labels({"c"})));
  CHECK_THROWS_AS(Cut(p, p.subset_of_labels({"c"})), ValidationError);
  CHECK(embed(p, p.index_of("c")).members() == p.principal_ideal(p.index_of("c")));
}

TEST_CASE("sup and inf of cuts") {
  const auto p = fixtures::butterfly();
  const std::vector<Cut> ab{embed(p, 0), embed(p, 1)};
  CHECK(sup_cuts(p, ab).members() == p.subset_of_labels({"a", "b"}));
  CHECK(inf_cuts(p, ab).members().is_empty());
  CHECK(sup_cuts(p, {}).members().is_empty());
  CHECK(inf_cuts(p, {}).members() == p.universe());
  const std::vector<Cut> mixed{embed(p, 0), embed(fixtures::antichain(2), 0)};
  CHECK_THROWS_AS(sup_cuts(p, mixed), MixedBaseError);
}

TEST_CASE("density and bounds of proper cuts") {
  const auto p = fixtures::butterfly();
  const Cut mid(p, p.subset_of_labels({"a", "b"}));
  CHECK(density_check(mid));
  const auto bounds = proper_cut_bounds(mid);
  REQUIRE(bounds.has_value());
  CHECK(p.leq(bounds->first, bounds->second));
}

TEST_CASE("strategies agree with the naive oracle on random posets") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    verify::Rng rng(seed);
    const auto p = verify::generate_poset(1 + seed % 7, 0.4, true, rng);
    const auto naive = dedekind_completion(p, {.strategy = CompletionStrategy::Naive});
    const auto generated = dedekind_completion(p, {.strategy = CompletionStrategy::Generated});
    CHECK(lattice_members(naive) == oracle::all_cuts(p));
    CHECK(naive.cuts() == generated.cuts());
    for (std::size_t x = 0; x < p.size(); ++x) {
      CHECK(naive.cut(naive.embedding()[x]).members() == p.principal_ideal(x));
    }
  }
}

TEST_CASE("closure laws hold for every subset") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    verify::Rng rng(seed);
    const auto p = verify::generate_poset(2 + seed % 5, 0.5, true, rng);
    for_each_submask(p.universe(), [&](const Subset& a) {
      const auto c = cut_closure(p, a).members();
      CHECK(a.is_subset_of(c));
      CHECK(cut_closure(p, c).members() == c);
      CHECK(oracle::from(c) == oracle::closure(p, oracle::from(a)));
      for_each_submask(a, [&](const Subset& b) { CHECK(cut_closure(p, b).members().is_subset_of(c)); });
    });
  }
}

TEST_CASE("size cap") {
  verify::Rng rng(3);
  const auto p = verify::generate_poset(12, 0.3, true, rng);
  CHECK_THROWS_AS(dedekind_completion(p, {.strategy = CompletionStrategy::Naive, .size_cap = 8}), SizeCapError);
  CHECK_NOTHROW(dedekind_completion(p, {.strategy = CompletionStrategy::Generated, .size_cap = 8}));
  CHECK_THROWS_AS(
      dedekind_completion(p, {.strategy = CompletionStrategy::Automatic, .size_cap = 8, .node_budget = 2}),
      SizeCapError);

  ::setenv("POSET_SIZE_CAP", "7", 1);
  CHECK(default_size_cap() == 7);
  ::unsetenv("POSET_SIZE_CAP");
  CHECK(default_size_cap() == 20);
}
