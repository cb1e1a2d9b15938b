#include "macneille/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "macneille/errors.hpp"

namespace macneille::io {

namespace {

std::string line_of(std::string_view text, std::size_t byte) {
  const auto upto = text.substr(0, std::min(byte, text.size()));
  return std::to_string(1 + std::count(upto.begin(), upto.end(), '\n'));
}

// Field access with JSON-pointer style paths in error messages.
const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + "/" + key + ": missing field");
  return *it;
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a string");
  return j.get<std::string>();
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  return j;
}

std::vector<std::string> strings_at(const json& j, const std::string& path) {
  std::vector<std::string> out;
  const auto& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(string_at(arr[i], path + "/" + std::to_string(i)));
  return out;
}

std::pair<std::string, std::string> pair_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ParseError(path + ": expected a [from, to] pair");
  return {string_at(j[0], path + "/0"), string_at(j[1], path + "/1")};
}

std::size_t count_strict(const std::vector<std::pair<std::string, std::string>>& rel) {
  std::set<std::pair<std::string, std::string>> distinct;
  for (const auto& [a, b] : rel) {
    if (a != b) distinct.emplace(a, b);
  }
  return distinct.size();
}

const json* optional_array(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) return nullptr;
  return &array_at(*it, path + "/" + key);
}

Subset subset_from_labels(const FinitePoset& p, const std::vector<std::string>& labels, const std::string& path) {
  Subset s = p.empty_set();
  for (const auto& l : labels) {
    try {
      s.insert(p.index_of(l));
    } catch (const UnknownElementError&) {
      throw ValidationError(path + ": unknown element '" + l + "'");
    }
  }
  return s;
}

template <typename T>
const T& lookup(const std::vector<T>& items, std::string_view name, const char* what) {
  if (name.empty()) {
    if (items.size() == 1) return items.front();
    throw ValidationError(std::string("a ") + what + " name is required (document has " +
                          std::to_string(items.size()) + ")");
  }
  for (const auto& item : items) {
    if (item.name == name) return item;
  }
  throw ValidationError(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

template <typename T>
void require_unique_names(const std::vector<T>& items, const char* what) {
  std::set<std::string> seen;
  for (const auto& item : items) {
    if (!seen.insert(item.name).second) throw ValidationError(std::string("duplicate ") + what + " name '" + item.name + "'");
  }
}

json labels_json(const FinitePoset& p, const Subset& s) { return json(p.labels_of(s)); }

}  // namespace

const NamedPoset& InstanceDocument::poset(std::string_view name) const { return lookup(posets, name, "poset"); }
const NamedMap& InstanceDocument::map(std::string_view name) const { return lookup(maps, name, "map"); }
const NamedSubset& InstanceDocument::subset(std::string_view name) const { return lookup(subsets, name, "subset"); }
const NamedSelector& InstanceDocument::selector(std::string_view name) const {
  return lookup(selectors, name, "selector");
}

InstanceDocument parse_instance(std::string_view text, PosetOptions options) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("line " + line_of(text, e.byte) + ": " + e.what());
  }
  return instance_from_json(j, options);
}

InstanceDocument instance_from_json(const json& j, PosetOptions options) {
  if (!j.is_object()) throw ParseError("/: expected an object");
  InstanceDocument doc;

  const auto& posets = array_at(field(j, "posets", ""), "/posets");
  for (std::size_t i = 0; i < posets.size(); ++i) {
    const std::string path = "/posets/" + std::to_string(i);
    const auto& pj = posets[i];
    NamedPoset np;
    np.name = string_at(field(pj, "name", path), path + "/name");
    auto elements = strings_at(field(pj, "elements", path), path + "/elements");
    std::vector<std::pair<std::string, std::string>> rel;
    if (const json* rj = optional_array(pj, "relation", path)) {
      for (std::size_t k = 0; k < rj->size(); ++k) {
        rel.push_back(pair_at((*rj)[k], path + "/relation/" + std::to_string(k)));
      }
    }
    const std::string kind =
        pj.contains("relation_kind") ? string_at(pj["relation_kind"], path + "/relation_kind") : std::string("covers");
    if (kind == "covers") {
      np.relation_kind = RelationKind::Covers;
    } else if (kind == "full") {
      np.relation_kind = RelationKind::Full;
    } else {
      throw ValidationError(path + "/relation_kind: expected \"covers\" or \"full\", got \"" + kind + "\"");
    }
    try {
      np.poset = FinitePoset::from_labels(std::move(elements), rel, options);
      if (np.relation_kind == RelationKind::Full && np.poset.strict_pairs().size() != count_strict(rel)) {
        throw ValidationError("relation_kind \"full\" requires a transitive relation");
      }
    } catch (const HypothesisError&) {
      throw;
    } catch (const Error& e) {
      throw ValidationError(path + ": " + e.what());
    }
    doc.posets.push_back(std::move(np));
  }
  require_unique_names(doc.posets, "poset");

  if (const auto* maps = optional_array(j, "maps", "")) {
    for (std::size_t i = 0; i < maps->size(); ++i) {
      const std::string path = "/maps/" + std::to_string(i);
      const auto& mj = (*maps)[i];
      const std::string name = string_at(field(mj, "name", path), path + "/name");
      const std::string dom = string_at(field(mj, "domain", path), path + "/domain");
      const std::string cod = string_at(field(mj, "codomain", path), path + "/codomain");
      const auto& x = doc.poset(dom).poset;
      const auto& y = doc.poset(cod).poset;
      std::vector<std::optional<std::size_t>> table(x.size());
      const auto& pairs = array_at(field(mj, "pairs", path), path + "/pairs");
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const std::string ppath = path + "/pairs/" + std::to_string(k);
        auto [from, to] = pair_at(pairs[k], ppath);
        std::size_t xi = 0;
        std::size_t yi = 0;
        try {
          xi = x.index_of(from);
          yi = y.index_of(to);
        } catch (const UnknownElementError& e) {
          throw ValidationError(ppath + ": " + e.what());
        }
        if (table[xi] && *table[xi] != yi) {
          throw ValidationError(ppath + ": element '" + from + "' has two images");
        }
        table[xi] = yi;
      }
      std::vector<std::size_t> dense;
      for (std::size_t k = 0; k < table.size(); ++k) {
        if (!table[k]) throw ValidationError(path + ": map not total; '" + x.label(k) + "' has no image");
        dense.push_back(*table[k]);
      }
      doc.maps.push_back(NamedMap{name, dom, cod, PosetMap(x, y, std::move(dense))});
    }
  }
  require_unique_names(doc.maps, "map");

  if (const auto* subsets = optional_array(j, "subsets", "")) {
    for (std::size_t i = 0; i < subsets->size(); ++i) {
      const std::string path = "/subsets/" + std::to_string(i);
      const auto& sj = (*subsets)[i];
      NamedSubset ns;
      ns.name = string_at(field(sj, "name", path), path + "/name");
      ns.poset = string_at(field(sj, "poset", path), path + "/poset");
      const auto& p = doc.poset(ns.poset).poset;
      ns.members = subset_from_labels(p, strings_at(field(sj, "members", path), path + "/members"), path + "/members");
      doc.subsets.push_back(std::move(ns));
    }
  }
  require_unique_names(doc.subsets, "subset");

  if (const auto* selectors = optional_array(j, "selectors", "")) {
    for (std::size_t i = 0; i < selectors->size(); ++i) {
      const std::string path = "/selectors/" + std::to_string(i);
      const auto& sj = (*selectors)[i];
      const std::string name = string_at(field(sj, "name", path), path + "/name");
      const auto kind = selector_kind_from_string(string_at(field(sj, "kind", path), path + "/kind"));
      if (kind == CofinalSelector::Kind::MaximalElements) {
        doc.selectors.push_back({name, "", CofinalSelector::maximal_elements()});
        continue;
      }
      if (kind == CofinalSelector::Kind::Identity) {
        doc.selectors.push_back({name, "", CofinalSelector::identity()});
        continue;
      }
      const std::string pname = string_at(field(sj, "poset", path), path + "/poset");
      const auto& p = doc.poset(pname).poset;
      std::map<Subset::Word, Subset> table;
      const auto& tj = array_at(field(sj, "table", path), path + "/table");
      for (std::size_t k = 0; k < tj.size(); ++k) {
        const std::string epath = path + "/table/" + std::to_string(k);
        Subset in = subset_from_labels(p, strings_at(field(tj[k], "input", epath), epath + "/input"), epath + "/input");
        Subset out =
            subset_from_labels(p, strings_at(field(tj[k], "output", epath), epath + "/output"), epath + "/output");
        if (!table.emplace(in.bits(), out).second) throw ValidationError(epath + ": duplicate table input");
      }
      doc.selectors.push_back({name, pname, CofinalSelector::explicit_table(std::move(table))});
    }
  }
  require_unique_names(doc.selectors, "selector");
  return doc;
}

json to_json(const InstanceDocument& doc) {
  json j;
  j["posets"] = json::array();
  for (const auto& np : doc.posets) {
    const auto& p = np.poset;
    json rel = json::array();
    const auto pairs = np.relation_kind == RelationKind::Covers ? hasse_covers(p) : p.strict_pairs();
    for (const auto& [a, b] : pairs) rel.push_back({p.label(a), p.label(b)});
    j["posets"].push_back({{"name", np.name},
                           {"elements", p.labels()},
                           {"relation", rel},
                           {"relation_kind", np.relation_kind == RelationKind::Covers ? "covers" : "full"}});
  }
  j["maps"] = json::array();
  for (const auto& nm : doc.maps) {
    json pairs = json::array();
    const auto& m = nm.map;
    for (std::size_t x = 0; x < m.domain().size(); ++x) pairs.push_back({m.domain().label(x), m.codomain().label(m(x))});
    j["maps"].push_back({{"name", nm.name}, {"domain", nm.domain}, {"codomain", nm.codomain}, {"pairs", pairs}});
  }
  j["subsets"] = json::array();
  for (const auto& ns : doc.subsets) {
    const auto& p = doc.poset(ns.poset).poset;
    j["subsets"].push_back({{"name", ns.name}, {"poset", ns.poset}, {"members", labels_json(p, ns.members)}});
  }
  j["selectors"] = json::array();
  for (const auto& sel : doc.selectors) {
    json sj = {{"name", sel.name}, {"kind", std::string(to_string(sel.selector.kind()))}};
    if (sel.selector.kind() == CofinalSelector::Kind::ExplicitTable) {
      const auto& p = doc.poset(sel.poset).poset;
      sj["poset"] = sel.poset;
      json table = json::array();
      for (const auto& [in, out] : sel.selector.table()) {
        table.push_back({{"input", labels_json(p, Subset(p.size(), in))}, {"output", labels_json(p, out)}});
      }
      sj["table"] = table;
    }
    j["selectors"].push_back(sj);
  }
  return j;
}

std::string print_instance(const InstanceDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::vector<std::string> sorted_labels(const FinitePoset& p, const Subset& s) {
  auto labels = p.labels_of(s);
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::string brace_label(const FinitePoset& p, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : sorted_labels(p, s)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string poset_dot(const FinitePoset& p, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) os << "  n" << i << " [label=" << quoted(p.label(i)) << "];\n";
  for (const auto& [a, b] : hasse_covers(p)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string completion_dot(const CompletionLattice& lattice, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    os << "  c" << i << " [label=" << quoted(brace_label(lattice.base(), lattice.cut(i).members())) << "];\n";
  }
  for (const auto& [a, b] : lattice.covers()) os << "  c" << a << " -> c" << b << ";\n";
  os << "}\n";
  return os.str();
}

json completion_artifact(const CompletionLattice& lattice) {
  const auto& base = lattice.base();
  json cuts = json::array();
  for (const auto& c : lattice.cuts()) cuts.push_back(sorted_labels(base, c.members()));
  json order = json::array();
  for (const auto& [a, b] : lattice.covers()) order.push_back({a, b});
  json embedding = json::object();
  for (std::size_t x = 0; x < base.size(); ++x) embedding[base.label(x)] = lattice.embedding()[x];
  return {{"cuts", cuts}, {"order", order}, {"embedding", embedding}};
}

json extension_artifact(const ExtensionResult& result, const PosetMap& phi) {
  const auto& x = phi.domain();
  const auto& y = phi.codomain();
  const Subset sharp = phi_sharp(phi, result.input).members();
  const Subset& value = result.value.members();
  return {{"operator", std::string(to_string(result.op))},
          {"input_subset", sorted_labels(x, result.input)},
          {"result_cut", sorted_labels(y, value)},
          {"is_cut", is_cut(y, value)},
          {"comparisons", {{"subset_of_sharp", value.is_subset_of(sharp)}, {"equal_to_sharp", value == sharp}}}};
}

}  // namespace macneille::io
