#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "macneille/completion.hpp"
#include "macneille/extensions.hpp"
#include "macneille/poset.hpp"

namespace macneille::io {

using nlohmann::json;

enum class RelationKind { Covers, Full };

struct NamedPoset {
  std::string name;
  FinitePoset poset;
  RelationKind relation_kind = RelationKind::Covers;
  friend bool operator==(const NamedPoset&, const NamedPoset&) = default;
};

struct NamedMap {
  std::string name;
  std::string domain;
  std::string codomain;
  PosetMap map;
  friend bool operator==(const NamedMap&, const NamedMap&) = default;
};

struct NamedSubset {
  std::string name;
  std::string poset;
  Subset members;
  friend bool operator==(const NamedSubset&, const NamedSubset&) = default;
};

struct NamedSelector {
  std::string name;
  /// Poset whose labels the table uses; empty for the built-in kinds.
  std::string poset;
  CofinalSelector selector;
  friend bool operator==(const NamedSelector&, const NamedSelector&) = default;
};

/// A set of named posets, maps, subsets and selectors that reference each
/// other by name.
struct InstanceDocument {
  std::vector<NamedPoset> posets;
  std::vector<NamedMap> maps;
  std::vector<NamedSubset> subsets;
  std::vector<NamedSelector> selectors;

  /// Lookups throw ValidationError for unknown names. An empty name picks
  /// the only entry of that kind, if there is exactly one.
  const NamedPoset& poset(std::string_view name) const;
  const NamedMap& map(std::string_view name) const;
  const NamedSubset& subset(std::string_view name) const;
  const NamedSelector& selector(std::string_view name) const;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

/// Parses and validates a document. Throws ParseError for malformed JSON
/// or mistyped fields and ValidationError for broken cross references,
/// non-total maps, duplicate labels and similar.
InstanceDocument parse_instance(std::string_view text, PosetOptions options = {});
InstanceDocument instance_from_json(const json& j, PosetOptions options = {});

json to_json(const InstanceDocument& doc);
std::string print_instance(const InstanceDocument& doc);

/// Cut members as labels sorted alphabetically.
std::vector<std::string> sorted_labels(const FinitePoset& p, const Subset& s);
/// "{a,b}", "{}" for the empty set.
std::string brace_label(const FinitePoset& p, const Subset& s);

/// Hasse diagram of a poset as a DOT digraph.
std::string poset_dot(const FinitePoset& p, std::string_view graph_name = "poset");
/// Hasse diagram of a completion lattice as a DOT digraph, one node per cut.
std::string completion_dot(const CompletionLattice& lattice, std::string_view graph_name = "completion");

/// {cuts, order, embedding}
json completion_artifact(const CompletionLattice& lattice);

/// {operator, input_subset, result_cut, is_cut, comparisons}
json extension_artifact(const ExtensionResult& result, const PosetMap& phi);

}  // namespace macneille::io
