#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "macneille/extensions.hpp"
#include "macneille/io.hpp"
#include "macneille/poset.hpp"

namespace macneille::verify {

enum class MapKind { Arbitrary, Increasing, Oie };

std::string_view to_string(MapKind kind);

/// Parameters of one random instance. Identical specs generate identical
/// instances.
struct InstanceSpec {
  std::size_t x_size = 4;
  std::size_t y_size = 4;
  double edge_probability = 0.4;
  MapKind map_kind = MapKind::Arbitrary;
  std::uint64_t seed = 0;
  bool allow_extrema = false;
};

/// Deterministic generator used everywhere in this module. Only raw
/// engine output is consumed, so sequences do not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct GenerationLimits {
  std::size_t poset_retries = 2000;
  std::size_t map_search_budget = 200000;
  std::size_t codomain_retries = 200;
};

/// Random DAG over x_size elements (edge i -> j, i < j, with the given
/// probability) closed into a poset. Without allow_extrema, regenerates
/// until the result has neither a minimum nor a maximum; throws
/// GenerationExhaustedError when that fails within the retry budget.
FinitePoset generate_poset(std::size_t size, double edge_probability, bool allow_extrema, Rng& rng,
                           std::string_view label_prefix = "x", const GenerationLimits& limits = {});
FinitePoset generate_poset(const InstanceSpec& spec, const GenerationLimits& limits = {});

/// A random map of the requested kind, confirmed with is_increasing /
/// is_oie. Throws GenerationExhaustedError if none is found.
PosetMap generate_map(const FinitePoset& x, const FinitePoset& y, MapKind kind, Rng& rng,
                      const GenerationLimits& limits = {});

/// L(A) = Max(A) plus a random part of the rest of A, for every A.
CofinalSelector random_selector_table(const FinitePoset& x, Rng& rng);

/// Everything a check needs: X, Y, phi and a cofinal selector on X.
struct Instance {
  FinitePoset x;
  FinitePoset y;
  PosetMap phi;
  CofinalSelector selector;
  std::string origin;
};

/// X from the spec, Y regenerated until a map of the requested kind
/// exists. The selector kind rotates with the seed.
Instance generate_instance(const InstanceSpec& spec, const GenerationLimits& limits = {});

/// Hand-built instances over the antichain, chain and butterfly fixtures.
std::vector<Instance> fixture_instances();

io::InstanceDocument to_document(const Instance& instance, std::span<const Subset> subject = {});
Instance from_document(const io::InstanceDocument& doc);

enum class CheckKind {
  /// A statement that must hold on every instance satisfying its hypothesis.
  Claim,
  /// Evaluates the conclusion of a claim where its hypothesis fails; it
  /// should find counterexamples, proving the claim's check is not vacuous.
  Control,
};

struct CheckInfo {
  std::string id;
  CheckKind kind;
  std::string statement;
  /// Map kinds the default corpus cycles through.
  std::vector<MapKind> corpus_kinds;
};

/// Every registered check, in report order.
const std::vector<CheckInfo>& catalog();
/// Throws UnknownCheckError.
const CheckInfo& check_info(std::string_view id);

struct RunConfig {
  /// |X| up to which subjects are enumerated exhaustively.
  std::size_t exhaustive_max = 5;
  /// Random subjects drawn per instance above the exhaustive tier.
  std::size_t sampled_subjects = 64;
  /// |X#| up to which all families of cuts are enumerated.
  std::size_t family_exhaustive_max = 8;
  /// Random families drawn per instance above that.
  std::size_t sampled_families = 1000;
  /// Largest |A| for the literal cofinal-subset enumeration.
  std::size_t naive_bar_max = 10;

  // Default corpus.
  std::uint64_t seed = 7;
  std::size_t instances = 100;
  std::size_t x_min = 2;
  std::size_t x_max = 5;
  std::size_t y_min = 2;
  std::size_t y_max = 5;
  bool include_fixtures = true;
  GenerationLimits limits;
};

/// One recorded counterexample, replayable from `document`.
struct Witness {
  std::string check_id;
  /// Recorded where the claim's hypothesis does not hold.
  bool control = false;
  io::InstanceDocument document;
  /// Names of the subject subsets inside `document`, in order.
  std::vector<std::string> subject;
  std::string message;
  std::vector<std::string> expected;
  std::vector<std::string> actual;
};

struct VerificationReport {
  std::string check_id;
  CheckKind kind = CheckKind::Claim;
  std::size_t instances_run = 0;
  /// Subjects where the hypothesis held and the conclusion was checked.
  std::size_t subjects_checked = 0;
  std::size_t failure_count = 0;
  /// First failure only.
  std::vector<Witness> failures;
  /// Subjects violating the hypothesis, where the conclusion was still
  /// evaluated; counterexamples found there are expected.
  std::size_t control_subjects = 0;
  std::size_t control_counterexamples = 0;
  std::vector<Witness> control_witnesses;
  std::size_t subjects_skipped = 0;
  std::vector<std::string> notes;
  std::chrono::duration<double, std::milli> elapsed{0};

  /// Claims: zero failures. Controls: at least one counterexample.
  bool passed() const;
  /// Controls that found no counterexample.
  bool inconclusive() const { return kind == CheckKind::Control && control_counterexamples == 0; }
  /// "claim", or "hypothesis-violated control" for controls and for claim
  /// runs whose every subject violated the hypothesis.
  std::string label() const;
};

/// The default corpus for a check: fixtures plus `instances` generated
/// specs cycling through the configured sizes and the check's map kinds.
std::vector<InstanceSpec> default_specs(const CheckInfo& info, const RunConfig& config);
std::vector<Instance> default_corpus(const CheckInfo& info, const RunConfig& config);

VerificationReport run_check(std::string_view check_id, std::span<const InstanceSpec> specs,
                             const RunConfig& config = {});
VerificationReport run_check_on(std::string_view check_id, std::span<const Instance> instances,
                                const RunConfig& config = {});
/// Runs on default_corpus.
VerificationReport run_check(std::string_view check_id, const RunConfig& config = {});

/// `ids` may contain "all". Reports come back in catalog order.
std::vector<VerificationReport> run_checks(std::span<const std::string> ids, const RunConfig& config = {});

/// Re-evaluates a witness; true when it still fails.
bool replay(const Witness& witness);

io::json to_json(const Witness& witness);
Witness witness_from_json(const io::json& j);
io::json to_json(const VerificationReport& report, bool include_timing = false);
io::json to_json(std::span<const VerificationReport> reports, bool include_timing = false);

/// 0 when every claim passed, 1 otherwise. Controls never count.
int exit_code(std::span<const VerificationReport> reports);

}  // namespace macneille::verify
