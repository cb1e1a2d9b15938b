#include "doctest.h"

#include "macneille/errors.hpp"
#include "macneille/extensions.hpp"
#include "macneille/verify.hpp"
#include "oracle.hpp"

using namespace macneille;

TEST_CASE("butterfly identity on {c,d}") {
  const auto p = fixtures::butterfly();
  const auto id = PosetMap::identity(p);
  const auto cd = p.subset_of_labels({"c", "d"});
  CHECK(phi_sharp(id, cd).members() == p.universe());
  CHECK(phi_tilde(id, cd).members() == p.subset_of_labels({"a", "b"}));
  CHECK(phi_L(id, CofinalSelector::maximal_elements(), cd).members() == p.subset_of_labels({"a", "b"}));
  CHECK(phi_bar(id, cd).members() == p.universe());
  CHECK(phi_bar(id, cd, BarStrategy::Naive).members() == p.universe());
}

TEST_CASE("empty subset maps to the bottom cut") {
  const auto p = fixtures::butterfly();
  const auto id = PosetMap::identity(p);
  for (auto op : {Operator::Sharp, Operator::Tilde, Operator::Bar}) {
    CHECK(extend(op, id, p.empty_set()).value.members().is_empty());
  }
  const auto sel = CofinalSelector::explicit_table({});
  CHECK(phi_L(id, sel, p.empty_set()).members().is_empty());
}

TEST_CASE("singletons go to principal ideals of the image") {
  const auto x = fixtures::butterfly();
  const auto y = fixtures::antichain(2);
  const PosetMap fold(x, y, {0, 1, 0, 1});
  for (std::size_t e = 0; e < x.size(); ++e) {
    const auto single = x.subset_of({e});
    for (auto op : {Operator::Sharp, Operator::Tilde, Operator::Bar}) {
      CHECK(extend(op, fold, single).value.members() == y.principal_ideal(fold(e)));
    }
  }
}

TEST_CASE("cofinal subsets of a chain") {
  const auto c = fixtures::chain(2);
  const auto subs = enumerate_cofinal_subsets(c, c.universe());
  REQUIRE(subs.size() == 2);
  CHECK(c.labels_of(subs[0]) == std::vector<std::string>{"2"});
  CHECK(c.labels_of(subs[1]) == std::vector<std::string>{"1", "2"});
}

TEST_CASE("selectors") {
  const auto p = fixtures::butterfly();
  const auto cd = p.subset_of_labels({"c", "d"});
  const auto all = p.universe();
  CHECK(CofinalSelector::maximal_elements().select(p, all) == cd);
  CHECK(CofinalSelector::identity().select(p, all) == all);

  const auto outside = CofinalSelector::explicit_table({{cd.bits(), p.subset_of_labels({"a"})}});
  CHECK_THROWS_AS(outside.select(p, cd), InvalidSelectorError);
  const auto not_cofinal = CofinalSelector::explicit_table({{cd.bits(), p.subset_of_labels({"c"})}});
  CHECK_THROWS_AS(not_cofinal.select(p, cd), InvalidSelectorError);
  CHECK_THROWS_AS(CofinalSelector::explicit_table({}).select(p, cd), InvalidSelectorError);
  CHECK_THROWS_AS(extend(Operator::L, PosetMap::identity(p), cd, nullptr), InvalidSelectorError);
  CHECK(operator_from_string("tilde") == Operator::Tilde);
  CHECK_THROWS(operator_from_string("hash"));
}

TEST_CASE("operators match the oracle and satisfy the inclusion chain") {
  for (std::uint64_t seed = 1; seed <= 90; ++seed) {
    verify::InstanceSpec spec;
    spec.x_size = 2 + seed % 4;
    spec.y_size = 2 + (seed / 4) % 4;
    spec.seed = seed;
    spec.map_kind = static_cast<verify::MapKind>(seed % 3);
    const auto inst = verify::generate_instance(spec);
    for_each_submask(inst.x.universe(), [&](const Subset& a) {
      const auto set = oracle::from(a);
      const auto sharp = phi_sharp(inst.phi, a).members();
      const auto tilde = phi_tilde(inst.phi, a).members();
      const auto bar = phi_bar(inst.phi, a).members();
      CHECK(oracle::from(sharp) == oracle::sharp(inst.phi, set));
      CHECK(oracle::from(tilde) == oracle::tilde(inst.phi, set));
      CHECK(oracle::from(bar) == oracle::bar(inst.phi, set));
      CHECK(phi_L(inst.phi, inst.selector, a).members() == tilde);
      CHECK(tilde.is_subset_of(bar));
      CHECK(bar.is_subset_of(sharp));
      CHECK(extensions_within_sharp(inst.phi, inst.selector, a));
      if (inst.phi.is_increasing()) CHECK(bar == sharp);
    });
  }
}
