#include "doctest.h"

#include "macneille/errors.hpp"
#include "macneille/verify.hpp"

using namespace macneille;

TEST_CASE("generators are deterministic and respect their kinds") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    for (auto kind : {verify::MapKind::Arbitrary, verify::MapKind::Increasing, verify::MapKind::Oie}) {
      verify::InstanceSpec spec{.x_size = 2 + seed % 4, .y_size = 2 + seed % 4, .map_kind = kind, .seed = seed};
      const auto a = verify::generate_instance(spec);
      const auto b = verify::generate_instance(spec);
      CHECK(a.x == b.x);
      CHECK(a.y == b.y);
      CHECK(a.phi == b.phi);
      CHECK(a.selector == b.selector);
      CHECK_FALSE(a.x.minimum().has_value());
      CHECK_FALSE(a.x.maximum().has_value());
      if (kind == verify::MapKind::Increasing) CHECK(a.phi.is_increasing());
      if (kind == verify::MapKind::Oie) CHECK(a.phi.is_oie());
    }
  }
}

TEST_CASE("an extrema-free poset of one element cannot exist") {
  verify::Rng rng(1);
  CHECK_THROWS_AS(verify::generate_poset(1, 0.5, false, rng), GenerationExhaustedError);
}

TEST_CASE("documents round trip through instances") {
  for (const auto& inst : verify::fixture_instances()) {
    const auto back = verify::from_document(verify::to_document(inst));
    CHECK(back.x == inst.x);
    CHECK(back.y == inst.y);
    CHECK(back.phi == inst.phi);
    CHECK(back.selector == inst.selector);
  }
}

TEST_CASE("catalog") {
  const auto& cat = verify::catalog();
  CHECK(cat.size() >= 20);
  CHECK(verify::check_info("Prop3.1").kind == verify::CheckKind::Claim);
  CHECK(verify::check_info("Prop3.2-control").kind == verify::CheckKind::Control);
  CHECK_THROWS_AS(verify::check_info("NoSuchProp"), UnknownCheckError);
}

TEST_CASE("reports and exit codes") {
  verify::RunConfig config;
  config.instances = 12;
  const auto claim = verify::run_check("Prop3.1", config);
  CHECK(claim.passed());
  CHECK(claim.instances_run == 12 + verify::fixture_instances().size());
  CHECK(claim.subjects_checked > 0);
  CHECK(verify::to_json(claim)["status"] == "pass");
  CHECK_FALSE(verify::to_json(claim).contains("elapsed_ms"));
  CHECK(verify::to_json(claim, true).contains("elapsed_ms"));

  const auto control = verify::run_check("Prop3.3-control", config);
  CHECK(control.control_counterexamples > 0);
  CHECK(control.label() == "hypothesis-violated control");
  const std::vector<verify::VerificationReport> both{claim, control};
  CHECK(verify::exit_code(both) == 0);

  auto failing = claim;
  failing.failure_count = 1;
  const std::vector<verify::VerificationReport> bad{failing};
  CHECK(verify::exit_code(bad) == 1);
}

TEST_CASE("a non-increasing map run through the increasing claim is reported as a control") {
  const auto fly = fixtures::butterfly();
  const auto anti = fixtures::antichain(2);
  const std::vector<verify::Instance> only{
      {fly, anti, PosetMap(fly, anti, {0, 1, 0, 1}), CofinalSelector::identity(), "fold"}};
  const auto r = verify::run_check_on("Prop3.3", only);
  CHECK(r.subjects_checked == 0);
  CHECK(r.control_subjects > 0);
  CHECK(r.label() == "hypothesis-violated control");
  CHECK(r.passed());
}

TEST_CASE("control witnesses replay") {
  verify::RunConfig config;
  config.instances = 30;
  const auto r = verify::run_check("Thm4.1-diag4.2-sharp-control", config);
  REQUIRE_FALSE(r.control_witnesses.empty());
  const auto& w = r.control_witnesses.front();
  CHECK(w.control);
  CHECK(verify::replay(w));
  const auto again = verify::witness_from_json(verify::to_json(w));
  CHECK(verify::replay(again));
  CHECK(verify::to_json(again) == verify::to_json(w));
}

TEST_CASE("run_checks expands all in catalog order") {
  verify::RunConfig config;
  config.instances = 4;
  const std::vector<std::string> ids{"all"};
  const auto reports = verify::run_checks(ids, config);
  REQUIRE(reports.size() == verify::catalog().size());
  for (std::size_t i = 0; i < reports.size(); ++i) CHECK(reports[i].check_id == verify::catalog()[i].id);
}
