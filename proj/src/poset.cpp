#include "macneille/poset.hpp"

#include <algorithm>
#include <unordered_set>

#include "macneille/errors.hpp"

namespace macneille {

FinitePoset::FinitePoset() : data_(std::make_shared<Data>()) {}

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels, const std::vector<Pair>& relation,
                                       PosetOptions options) {
  const std::size_t n = labels.size();
  if (n > kMaxElements) {
    throw ValidationError("poset has " + std::to_string(n) + " elements; at most " +
                          std::to_string(kMaxElements) + " are supported");
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw ValidationError("duplicate element label '" + l + "'");
    }
  }

  // up[i] = elements reachable from i (i <= j)
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
  for (const auto& [from, to] : relation) {
    if (from >= n || to >= n) {
      throw UnknownElementError("relation references element index " + std::to_string(std::max(from, to)) +
                                " outside a poset of size " + std::to_string(n));
    }
    up[from].insert(to);
  }
  // Warshall over bitset rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].contains(k)) up[i] |= up[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (up[i].contains(j) && up[j].contains(i)) {
        throw CycleError("elements '" + labels[i] + "' and '" + labels[j] + "' are mutually <=");
      }
    }
  }
  std::vector<Subset> down(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].for_each([&](std::size_t j) { down[j].insert(i); });

  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  data->down = std::move(down);
  data->up = std::move(up);
  FinitePoset p(std::move(data));

  if (!options.allow_extrema) {
    if (auto m = p.minimum()) throw HypothesisError("poset has minimum '" + p.label(*m) + "'");
    if (auto m = p.maximum()) throw HypothesisError("poset has maximum '" + p.label(*m) + "'");
  }
  return p;
}

FinitePoset FinitePoset::from_labels(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::string, std::string>>& relation,
                                     PosetOptions options) {
  auto find = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw UnknownElementError("unknown element '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<Pair> pairs;
  pairs.reserve(relation.size());
  for (const auto& [a, b] : relation) pairs.emplace_back(find(a), find(b));
  return from_relation(std::move(labels), pairs, options);
}

std::size_t FinitePoset::index_of(std::string_view label) const {
  const auto& ls = data_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) throw UnknownElementError("unknown element '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - ls.begin());
}

Subset FinitePoset::subset_of_labels(const std::vector<std::string>& labels) const {
  Subset s = empty_set();
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

std::vector<std::string> FinitePoset::labels_of(const Subset& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(label(i)); });
  return out;
}

Subset FinitePoset::upper_bounds(const Subset& a) const {
  Subset result = universe();
  a.for_each([&](std::size_t i) { result &= data_->up[i]; });
  return result;
}

Subset FinitePoset::lower_bounds(const Subset& a) const {
  Subset result = universe();
  a.for_each([&](std::size_t i) { result &= data_->down[i]; });
  return result;
}

Subset FinitePoset::maximal_elements(const Subset& a) const {
  Subset result = empty_set();
  a.for_each([&](std::size_t i) {
    Subset above = data_->up[i] & a;
    above.erase(i);
    if (above.is_empty()) result.insert(i);
  });
  return result;
}

Subset FinitePoset::minimal_elements(const Subset& a) const {
  Subset result = empty_set();
  a.for_each([&](std::size_t i) {
    Subset below = data_->down[i] & a;
    below.erase(i);
    if (below.is_empty()) result.insert(i);
  });
  return result;
}

bool FinitePoset::is_cofinal_in(const Subset& b, const Subset& a) const {
  if (!b.is_subset_of(a)) throw NotASubsetError("candidate cofinal set is not contained in A");
  bool ok = true;
  a.for_each([&](std::size_t i) {
    if (ok && (data_->up[i] & b).is_empty()) ok = false;
  });
  return ok;
}

bool FinitePoset::is_directed(const Subset& a) const {
  const auto ms = a.members();
  for (std::size_t p = 0; p < ms.size(); ++p) {
    for (std::size_t q = p + 1; q < ms.size(); ++q) {
      if ((data_->up[ms[p]] & data_->up[ms[q]] & a).is_empty()) return false;
    }
  }
  return true;
}

bool FinitePoset::is_down_set(const Subset& a) const {
  bool ok = true;
  a.for_each([&](std::size_t i) {
    if (!data_->down[i].is_subset_of(a)) ok = false;
  });
  return ok;
}

std::optional<std::size_t> FinitePoset::minimum() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (data_->up[i].is_full()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::maximum() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (data_->down[i].is_full()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::supremum(const Subset& a) const {
  const Subset ub = upper_bounds(a);
  const Subset least = ub & lower_bounds(ub);
  if (least.is_empty()) return std::nullopt;
  return least.members().front();
}

std::optional<std::size_t> FinitePoset::infimum(const Subset& a) const {
  const Subset lb = lower_bounds(a);
  const Subset greatest = lb & upper_bounds(lb);
  if (greatest.is_empty()) return std::nullopt;
  return greatest.members().front();
}

std::vector<Pair> FinitePoset::strict_pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    data_->up[i].for_each([&](std::size_t j) {
      if (j != i) out.emplace_back(i, j);
    });
  }
  return out;
}

bool operator==(const FinitePoset& a, const FinitePoset& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->labels == b.data_->labels && a.data_->down == b.data_->down;
}

std::vector<Pair> hasse_covers(const FinitePoset& p) {
  std::vector<Pair> covers;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Subset strictly_above = p.principal_filter(i);
    strictly_above.erase(i);
    // y covers i iff y is minimal among the strict upper set of i.
    p.minimal_elements(strictly_above).for_each([&](std::size_t j) { covers.emplace_back(i, j); });
  }
  return covers;
}

PosetMap::PosetMap(FinitePoset domain, FinitePoset codomain, std::vector<std::size_t> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_.size()) {
    throw ValidationError("map not total: table has " + std::to_string(table_.size()) + " entries for " +
                          std::to_string(domain_.size()) + " domain elements");
  }
  for (auto y : table_) {
    if (y >= codomain_.size()) throw ValidationError("map image index out of range");
  }
}

PosetMap PosetMap::identity(const FinitePoset& p) {
  std::vector<std::size_t> t(p.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return PosetMap(p, p, std::move(t));
}

PosetMap PosetMap::constant(const FinitePoset& domain, const FinitePoset& codomain, std::size_t value) {
  return PosetMap(domain, codomain, std::vector<std::size_t>(domain.size(), value));
}

Subset PosetMap::image(const Subset& a) const {
  Subset out = codomain_.empty_set();
  a.for_each([&](std::size_t i) { out.insert(table_[i]); });
  return out;
}

bool PosetMap::is_increasing() const {
  for (const auto& [a, b] : domain_.strict_pairs()) {
    if (!codomain_.leq(table_[a], table_[b])) return false;
  }
  return true;
}

bool PosetMap::is_oie() const {
  const std::size_t n = domain_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && table_[a] == table_[b]) return false;
      if (domain_.leq(a, b) != codomain_.leq(table_[a], table_[b])) return false;
    }
  }
  return true;
}

namespace fixtures {

FinitePoset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return FinitePoset::from_relation(std::move(labels), {}, {.allow_extrema = n < 2});
}

FinitePoset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Pair> rel;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    if (i + 1 < n) rel.emplace_back(i, i + 1);
  }
  return FinitePoset::from_relation(std::move(labels), rel, {.allow_extrema = true});
}

FinitePoset butterfly() {
  return FinitePoset::from_relation({"a", "b", "c", "d"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

}  // namespace fixtures

}  // namespace macneille
