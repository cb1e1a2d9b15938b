#include "macneille/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "macneille/completion.hpp"
#include "macneille/errors.hpp"

namespace macneille::verify {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_string(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return h;
}

/// Elements in an order compatible with <=: strictly smaller elements
/// have strictly smaller principal ideals.
std::vector<std::size_t> linear_extension(const FinitePoset& p) {
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.principal_ideal(a).size() < p.principal_ideal(b).size();
  });
  return order;
}

}  // namespace

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Arbitrary:
      return "arbitrary";
    case MapKind::Increasing:
      return "increasing";
    case MapKind::Oie:
      return "oie";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Generation

FinitePoset generate_poset(std::size_t size, double edge_probability, bool allow_extrema, Rng& rng,
                           std::string_view label_prefix, const GenerationLimits& limits) {
  if (size == 0) throw GenerationExhaustedError("cannot generate an empty poset");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::string(label_prefix) + std::to_string(i));
  for (std::size_t attempt = 0; attempt < limits.poset_retries; ++attempt) {
    std::vector<Pair> edges;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (rng.chance(edge_probability)) edges.emplace_back(i, j);
      }
    }
    auto p = FinitePoset::from_relation(labels, edges, {.allow_extrema = true});
    if (allow_extrema || (!p.minimum() && !p.maximum())) return p;
  }
  throw GenerationExhaustedError("no extrema-free poset of size " + std::to_string(size) + " after " +
                                 std::to_string(limits.poset_retries) + " attempts");
}

namespace {

/// Grows `x` to `size` elements. Each new element is placed above a random
/// down-set and below a random up-set lying over it, so the order among the
/// original elements is untouched and x embeds into the result. Positions are
/// shuffled before labelling.
FinitePoset grow_poset(const FinitePoset& x, std::size_t size, bool allow_extrema, Rng& rng,
                       std::string_view label_prefix, const GenerationLimits& limits) {
  const std::size_t n = x.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::string(label_prefix) + std::to_string(i));
  for (std::size_t attempt = 0; attempt < limits.poset_retries; ++attempt) {
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) leq[i][j] = x.leq(i, j);
    }
    for (std::size_t z = n; z < size; ++z) {
      leq[z][z] = true;
      std::vector<bool> up(z, false), down(z, false);
      for (std::size_t i = 0; i < z; ++i) {
        if (!rng.chance(0.35)) continue;
        for (std::size_t j = 0; j < z; ++j) up[j] = up[j] || leq[i][j];
      }
      for (std::size_t i = 0; i < z; ++i) {
        bool below_all = !up[i];
        for (std::size_t u = 0; u < z && below_all; ++u) below_all = !up[u] || leq[i][u];
        if (!below_all || !rng.chance(0.35)) continue;
        for (std::size_t j = 0; j < z; ++j) down[j] = down[j] || leq[j][i];
      }
      for (std::size_t i = 0; i < z; ++i) {
        leq[i][z] = down[i];
        leq[z][i] = up[i];
      }
    }
    std::vector<std::size_t> position(size);
    for (std::size_t i = 0; i < size; ++i) position[i] = i;
    rng.shuffle(position);
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (i != j && leq[i][j]) pairs.emplace_back(position[i], position[j]);
      }
    }
    auto p = FinitePoset::from_relation(labels, pairs, {.allow_extrema = true});
    if (allow_extrema || (!p.minimum() && !p.maximum())) return p;
  }
  throw GenerationExhaustedError("no extrema-free extension of size " + std::to_string(size));
}

}  // namespace

FinitePoset generate_poset(const InstanceSpec& spec, const GenerationLimits& limits) {
  Rng rng(spec.seed);
  return generate_poset(spec.x_size, spec.edge_probability, spec.allow_extrema, rng, "x", limits);
}

namespace {

/// Randomised backtracking over partial assignments in linear-extension
/// order. `consistent(x, y, table, assigned)` decides whether x may map to y.
template <typename Consistent>
std::optional<std::vector<std::size_t>> search_map(const FinitePoset& x, const FinitePoset& y, Rng& rng,
                                                   std::size_t budget, Consistent&& consistent) {
  const auto order = linear_extension(x);
  std::vector<std::size_t> table(x.size(), 0);
  Subset assigned = x.empty_set();
  std::size_t steps = 0;

  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const std::size_t elem = order[k];
    std::vector<std::size_t> candidates(y.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
    rng.shuffle(candidates);
    for (auto cand : candidates) {
      if (++steps > budget) return false;
      if (!consistent(elem, cand, table, assigned)) continue;
      table[elem] = cand;
      assigned.insert(elem);
      if (place(k + 1)) return true;
      assigned.erase(elem);
    }
    return false;
  };
  if (place(0)) return table;
  return std::nullopt;
}

}  // namespace

PosetMap generate_map(const FinitePoset& x, const FinitePoset& y, MapKind kind, Rng& rng,
                      const GenerationLimits& limits) {
  std::optional<std::vector<std::size_t>> table;
  switch (kind) {
    case MapKind::Arbitrary: {
      std::vector<std::size_t> t(x.size());
      for (auto& v : t) v = rng.below(y.size());
      table = std::move(t);
      break;
    }
    case MapKind::Increasing:
      table = search_map(x, y, rng, limits.map_search_budget,
                         [&](std::size_t e, std::size_t c, const std::vector<std::size_t>& t, const Subset& done) {
                           bool ok = true;
                           done.for_each([&](std::size_t o) {
                             if (x.leq(o, e) && !y.leq(t[o], c)) ok = false;
                             if (x.leq(e, o) && !y.leq(c, t[o])) ok = false;
                           });
                           return ok;
                         });
      break;
    case MapKind::Oie:
      if (y.size() < x.size()) break;
      table = search_map(x, y, rng, limits.map_search_budget,
                         [&](std::size_t e, std::size_t c, const std::vector<std::size_t>& t, const Subset& done) {
                           bool ok = true;
                           done.for_each([&](std::size_t o) {
                             if (t[o] == c) ok = false;
                             if (x.leq(o, e) != y.leq(t[o], c)) ok = false;
                             if (x.leq(e, o) != y.leq(c, t[o])) ok = false;
                           });
                           return ok;
                         });
      break;
  }
  if (!table) {
    throw GenerationExhaustedError("no " + std::string(to_string(kind)) + " map found between posets of sizes " +
                                   std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  PosetMap phi(x, y, std::move(*table));
  const bool ok = kind == MapKind::Arbitrary || (kind == MapKind::Increasing && phi.is_increasing()) ||
                  (kind == MapKind::Oie && phi.is_oie());
  if (!ok) throw GenerationExhaustedError("generated map failed its kind check");
  return phi;
}

CofinalSelector random_selector_table(const FinitePoset& x, Rng& rng) {
  if (x.size() > 16) throw SizeCapError("explicit selector tables are limited to 16 elements");
  std::map<Subset::Word, Subset> table;
  for_each_submask(x.universe(), [&](const Subset& a) {
    Subset chosen = x.maximal_elements(a);
    a.for_each([&](std::size_t i) {
      if (rng.chance(0.5)) chosen.insert(i);
    });
    table.emplace(a.bits(), chosen);
  });
  return CofinalSelector::explicit_table(std::move(table));
}

Instance generate_instance(const InstanceSpec& requested, const GenerationLimits& limits) {
  InstanceSpec spec = requested;
  if (spec.map_kind == MapKind::Oie) spec.y_size = std::max(spec.y_size, spec.x_size);
  Rng rng(spec.seed);
  FinitePoset x = generate_poset(spec.x_size, spec.edge_probability, spec.allow_extrema, rng, "x", limits);
  CofinalSelector selector = CofinalSelector::identity();
  switch (spec.seed % 3) {
    case 0:
      selector = CofinalSelector::identity();
      break;
    case 1:
      selector = CofinalSelector::maximal_elements();
      break;
    default:
      selector = x.size() <= 12 ? random_selector_table(x, rng) : CofinalSelector::maximal_elements();
      break;
  }
  for (std::size_t attempt = 0; attempt < limits.codomain_retries; ++attempt) {
    FinitePoset y = spec.map_kind == MapKind::Oie && spec.y_size >= x.size()
                        ? grow_poset(x, spec.y_size, spec.allow_extrema, rng, "y", limits)
                        : generate_poset(spec.y_size, spec.edge_probability, spec.allow_extrema, rng, "y", limits);
    try {
      PosetMap phi = generate_map(x, y, spec.map_kind, rng, limits);
      std::string origin = "seed=" + std::to_string(spec.seed) + " |X|=" + std::to_string(spec.x_size) +
                           " |Y|=" + std::to_string(spec.y_size) + " map=" + std::string(to_string(spec.map_kind));
      return Instance{std::move(x), std::move(y), std::move(phi), std::move(selector), std::move(origin)};
    } catch (const GenerationExhaustedError&) {
      continue;
    }
  }
  throw GenerationExhaustedError("no codomain admitting a " + std::string(to_string(spec.map_kind)) +
                                 " map within the retry budget");
}

std::vector<Instance> fixture_instances() {
  const auto anti = fixtures::antichain(2);
  const auto fly = fixtures::butterfly();
  const auto chain = fixtures::chain(3);
  std::vector<Instance> out;
  // a -> a, b -> b into the butterfly: an OIE.
  out.push_back({anti, fly, PosetMap(anti, fly, {0, 1}), CofinalSelector::maximal_elements(), "antichain-2 -> butterfly"});
  out.push_back({fly, fly, PosetMap::identity(fly), CofinalSelector::identity(), "butterfly identity"});
  out.push_back({chain, chain, PosetMap::identity(chain), CofinalSelector::maximal_elements(), "chain-3 identity"});
  // c -> a, d -> b folds the butterfly onto an antichain; not increasing.
  out.push_back({fly, anti, PosetMap(fly, anti, {0, 1, 0, 1}), CofinalSelector::identity(), "butterfly fold"});
  // Order-reversing on the chain.
  out.push_back({chain, chain, PosetMap(chain, chain, {2, 1, 0}), CofinalSelector::maximal_elements(), "chain-3 reversal"});
  return out;
}

io::InstanceDocument to_document(const Instance& instance, std::span<const Subset> subject) {
  io::InstanceDocument doc;
  doc.posets.push_back({"X", instance.x, io::RelationKind::Covers});
  doc.posets.push_back({"Y", instance.y, io::RelationKind::Covers});
  doc.maps.push_back({"phi", "X", "Y", instance.phi});
  for (std::size_t i = 0; i < subject.size(); ++i) doc.subsets.push_back({"S" + std::to_string(i), "X", subject[i]});
  const bool table = instance.selector.kind() == CofinalSelector::Kind::ExplicitTable;
  doc.selectors.push_back({"L", table ? "X" : "", instance.selector});
  return doc;
}

Instance from_document(const io::InstanceDocument& doc) {
  const auto& x = doc.poset("X").poset;
  const auto& y = doc.poset("Y").poset;
  const auto& phi = doc.map("phi").map;
  const auto& sel = doc.selector("L").selector;
  return Instance{x, y, phi, sel, "document"};
}

// ---------------------------------------------------------------------------
// Checks

namespace {

enum class Scope {
  Whole,
  Element,
  SubsetOfX,
  SubsetPair,
  CutOfX,
  CutPair,
  CutFamily,
  NonemptyCutFamily,
};

enum class State { Holds, Fails, NotApplicable, ControlHolds, ControlFails };

struct Verdict {
  State state = State::Holds;
  std::string message;
  std::optional<Subset> expected;
  std::optional<Subset> actual;
  /// Labels of expected/actual come from Y rather than X.
  bool in_y = true;
  /// Counted into the check's notes (used for strict inclusions).
  bool noteworthy = false;
};

Verdict holds() { return {}; }
Verdict not_applicable() {
  Verdict v;
  v.state = State::NotApplicable;
  return v;
}
Verdict fails(std::string msg) {
  Verdict v;
  v.state = State::Fails;
  v.message = std::move(msg);
  return v;
}
Verdict fails(std::string msg, const Subset& expected, const Subset& actual, bool in_y = true) {
  return {.state = State::Fails, .message = std::move(msg), .expected = expected, .actual = actual, .in_y = in_y};
}

/// Turns a verdict on the conclusion into a control verdict.
Verdict as_control(Verdict v) {
  if (v.state == State::Fails) v.state = State::ControlFails;
  else if (v.state == State::Holds) v.state = State::ControlHolds;
  return v;
}

class Context {
 public:
  Context(const Instance& inst, const RunConfig& config) : inst(inst), config(config) {}
  const Instance& inst;
  const RunConfig& config;

  const CompletionLattice& lattice() const {
    if (!lattice_) lattice_ = dedekind_completion(inst.x, {.size_cap = std::max<std::size_t>(inst.x.size(), 20)});
    return *lattice_;
  }
  bool extrema_free() const { return !inst.x.minimum() && !inst.x.maximum(); }
  std::vector<Cut> cuts_of(std::span<const Subset> members) const {
    std::vector<Cut> out;
    for (const auto& m : members) out.emplace_back(inst.x, m);
    return out;
  }

 private:
  mutable std::optional<CompletionLattice> lattice_;
};

using Eval = std::function<Verdict(const Context&, std::span<const Subset>)>;

struct CheckDef {
  CheckInfo info;
  Scope scope;
  Eval eval;
};

Subset ideal_y(const Instance& inst, std::size_t x) { return inst.y.principal_ideal(inst.phi(x)); }

// Brute-force bound existence, independent of the bitset operators.
bool bounded_above(const FinitePoset& p, const Subset& a) {
  for (std::size_t y = 0; y < p.size(); ++y) {
    bool all = true;
    a.for_each([&](std::size_t i) { all = all && p.leq(i, y); });
    if (all) return true;
  }
  return false;
}

bool bounded_below(const FinitePoset& p, const Subset& a) {
  for (std::size_t y = 0; y < p.size(); ++y) {
    bool all = true;
    a.for_each([&](std::size_t i) { all = all && p.leq(y, i); });
    if (all) return true;
  }
  return false;
}

// ---- poset_core ------------------------------------------------------------

Verdict check_antitone(const Context& c, std::span<const Subset> s) {
  const auto& x = c.inst.x;
  const Subset& a = s[0];
  const Subset& b = s[1];
  if (!x.upper_bounds(b).is_subset_of(x.upper_bounds(a))) {
    return fails("B^u not inside A^u", x.upper_bounds(a), x.upper_bounds(b), false);
  }
  if (!x.lower_bounds(b).is_subset_of(x.lower_bounds(a))) {
    return fails("B^l not inside A^l", x.lower_bounds(a), x.lower_bounds(b), false);
  }
  return holds();
}

Verdict check_expansion(const Context& c, std::span<const Subset> s) {
  const auto& x = c.inst.x;
  const Subset& a = s[0];
  const Subset ul = x.lower_bounds(x.upper_bounds(a));
  const Subset lu = x.upper_bounds(x.lower_bounds(a));
  if (!a.is_subset_of(ul)) return fails("A not inside A^{ul}", a, ul, false);
  if (!a.is_subset_of(lu)) return fails("A not inside A^{lu}", a, lu, false);
  return holds();
}

Verdict check_tripling(const Context& c, std::span<const Subset> s) {
  const auto& x = c.inst.x;
  const Subset& a = s[0];
  const Subset u = x.upper_bounds(a);
  const Subset l = x.lower_bounds(a);
  const Subset ulu = x.upper_bounds(x.lower_bounds(u));
  const Subset lul = x.lower_bounds(x.upper_bounds(l));
  if (ulu != u) return fails("A^{ulu} != A^u", u, ulu, false);
  if (lul != l) return fails("A^{lul} != A^l", l, lul, false);
  return holds();
}

Verdict check_singletons(const Context& c, std::span<const Subset> s) {
  const auto& x = c.inst.x;
  const std::size_t e = s[0].members().front();
  const Subset up = x.principal_filter(e);
  const Subset down = x.principal_ideal(e);
  if (x.upper_bounds(s[0]) != up) return fails("{x}^u != [x>", up, x.upper_bounds(s[0]), false);
  if (x.lower_bounds(s[0]) != down) return fails("{x}^l != <x]", down, x.lower_bounds(s[0]), false);
  if (x.lower_bounds(up) != down) return fails("[x>^l != <x]", down, x.lower_bounds(up), false);
  if (x.upper_bounds(down) != up) return fails("<x]^u != [x>", up, x.upper_bounds(down), false);
  const Subset ul = x.lower_bounds(x.upper_bounds(s[0]));
  const Subset lu = x.upper_bounds(x.lower_bounds(s[0]));
  if (ul != down) return fails("{x}^{ul} != <x]", down, ul, false);
  if (lu != up) return fails("{x}^{lu} != [x>", up, lu, false);
  return holds();
}

Verdict check_empty_full(const Context& c, std::span<const Subset> s) {
  const auto& x = c.inst.x;
  const Subset& a = s[0];
  const Subset u = x.upper_bounds(a);
  const Subset l = x.lower_bounds(a);
  if (c.extrema_free()) {
    if (u.is_full() != a.is_empty() || l.is_full() != a.is_empty()) {
      return fails("A^u = X <=> A^l = X <=> A empty violated", x.universe(), u, false);
    }
  } else if (a.is_empty() && (!u.is_full() || !l.is_full())) {
    return fails("empty set must have A^u = A^l = X", x.universe(), u, false);
  }
  if (u.is_empty() == bounded_above(x, a)) return fails("A^u empty <=> A unbounded above violated");
  if (l.is_empty() == bounded_below(x, a)) return fails("A^l empty <=> A unbounded below violated");
  return holds();
}

Verdict check_hasse_roundtrip(const Context& c, std::span<const Subset>) {
  const auto& x = c.inst.x;
  const auto covers = hasse_covers(x);
  const auto rebuilt = FinitePoset::from_relation(x.labels(), covers, {.allow_extrema = true});
  if (!(rebuilt == x)) return fails("closure of the cover pairs differs from the order");
  const std::set<Pair> cover_set(covers.begin(), covers.end());
  for (const auto& [i, j] : x.strict_pairs()) {
    bool between = false;
    for (std::size_t k = 0; k < x.size(); ++k) between = between || (x.less(i, k) && x.less(k, j));
    if (between == cover_set.contains({i, j})) {
      return fails("pair " + x.label(i) + " < " + x.label(j) + " misclassified as cover/non-cover");
    }
  }
  return holds();
}

// ---- completion -------------------------------------------------------------

Verdict check_order_complete(const Context& c, std::span<const Subset> family) {
  const auto& x = c.inst.x;
  const auto& lat = c.lattice();
  const auto cuts = c.cuts_of(family);
  const Cut sup = sup_cuts(x, cuts);
  const Cut inf = inf_cuts(x, cuts);
  if (!lat.index_of(sup.members())) return fails("supremum is not in X#", sup.members(), sup.members(), false);
  if (!lat.index_of(inf.members())) return fails("infimum is not in X#", inf.members(), inf.members(), false);
  // Least upper / greatest lower bound among all cuts, by enumeration.
  for (const auto& candidate : lat.cuts()) {
    const Subset& m = candidate.members();
    bool upper = true;
    bool lower = true;
    for (const auto& f : family) {
      upper = upper && f.is_subset_of(m);
      lower = lower && m.is_subset_of(f);
    }
    if (upper && !sup.members().is_subset_of(m)) return fails("sup is not below an upper bound", m, sup.members(), false);
    if (lower && !m.is_subset_of(inf.members())) return fails("inf is not above a lower bound", m, inf.members(), false);
  }
  for (const auto& f : family) {
    if (!f.is_subset_of(sup.members()) || !inf.members().is_subset_of(f)) return fails("sup/inf do not bound the family");
  }
  return holds();
}

Verdict check_embedding(const Context& c, std::span<const Subset> s) {
  const auto& x = c.inst.x;
  const auto& lat = c.lattice();
  const Subset& set = s[0];
  std::vector<Cut> images;
  set.for_each([&](std::size_t e) { images.push_back(embed(x, e)); });
  if (auto sup = x.supremum(set)) {
    const Cut got = sup_cuts(x, images);
    if (got.members() != x.principal_ideal(*sup)) {
      return fails("embedding does not preserve the supremum", x.principal_ideal(*sup), got.members(), false);
    }
  }
  if (auto inf = x.infimum(set)) {
    const Cut got = inf_cuts(x, images);
    if (got.members() != x.principal_ideal(*inf)) {
      return fails("embedding does not preserve the infimum", x.principal_ideal(*inf), got.members(), false);
    }
  }
  if (set.size() == 1) {
    const std::size_t e = set.members().front();
    if (lat.cut(lat.embedding()[e]).members() != x.principal_ideal(e)) return fails("embedding table disagrees with <x]");
    for (std::size_t o = 0; o < x.size(); ++o) {
      if (x.leq(e, o) != x.principal_ideal(e).is_subset_of(x.principal_ideal(o))) {
        return fails("embedding is not an order embedding at " + x.label(e) + ", " + x.label(o));
      }
      if (o != e && x.principal_ideal(e) == x.principal_ideal(o)) return fails("embedding is not injective");
    }
  }
  return holds();
}

Verdict check_density(const Context& c, std::span<const Subset> s) {
  if (!density_check(Cut(c.inst.x, s[0]))) return fails("cut is not the sup and inf of principal ideals");
  return holds();
}

Verdict check_closure_as_sup(const Context& c, std::span<const Subset> s) {
  const auto& x = c.inst.x;
  std::vector<Cut> ideals;
  s[0].for_each([&](std::size_t e) { ideals.push_back(embed(x, e)); });
  const Subset lhs = cut_closure(x, s[0]).members();
  const Subset rhs = sup_cuts(x, ideals).members();
  if (lhs != rhs) return fails("A^{ul} != sup{<x] : x in A}", lhs, rhs, false);
  return holds();
}

Verdict check_proper_bounds(const Context& c, std::span<const Subset> s) {
  const auto& x = c.inst.x;
  const Subset& a = s[0];
  const bool proper = !a.is_empty() && !a.is_full();
  bool exists = false;
  for (std::size_t lo = 0; lo < x.size() && !exists; ++lo) {
    for (std::size_t hi = 0; hi < x.size() && !exists; ++hi) {
      exists = x.principal_ideal(lo).is_subset_of(a) && a.is_subset_of(x.principal_ideal(hi));
    }
  }
  if (c.extrema_free() ? proper != exists : (proper && !exists)) return fails("biconditional for proper cuts violated");
  const auto witness = proper_cut_bounds(Cut(x, a));
  if (witness.has_value() != (proper && exists)) return fails("proper_cut_bounds disagrees with enumeration");
  if (witness && !(x.principal_ideal(witness->first).is_subset_of(a) &&
                   a.is_subset_of(x.principal_ideal(witness->second)))) {
    return fails("proper_cut_bounds returned an invalid witness pair");
  }
  return holds();
}

Verdict check_closure_operator(const Context& c, std::span<const Subset> s) {
  const auto& x = c.inst.x;
  const Subset& a = s[0];
  const Subset& b = s[1];
  const Subset ca = cut_closure(x, a).members();
  const Subset cb = cut_closure(x, b).members();
  if (!a.is_subset_of(ca)) return fails("not extensive", a, ca, false);
  if (cut_closure(x, ca).members() != ca) return fails("not idempotent", ca, cut_closure(x, ca).members(), false);
  if (!ca.is_subset_of(cb)) return fails("not monotone", cb, ca, false);
  if (!x.is_down_set(ca)) return fails("closure is not a down-set", ca, ca, false);
  for (const auto& cut : c.lattice().cuts()) {
    if (a.is_subset_of(cut.members()) && !ca.is_subset_of(cut.members())) {
      return fails("closure is not the smallest cut containing A", cut.members(), ca, false);
    }
  }
  return holds();
}

Verdict check_strategies(const Context& c, std::span<const Subset>) {
  const auto& x = c.inst.x;
  const auto naive = dedekind_completion(x, {.strategy = CompletionStrategy::Naive, .size_cap = 64});
  const auto generated = dedekind_completion(x, {.strategy = CompletionStrategy::Generated});
  if (naive.size() != generated.size()) return fails("strategies produce different numbers of cuts");
  for (std::size_t i = 0; i < naive.size(); ++i) {
    if (naive.cut(i).members() != generated.cut(i).members()) {
      return fails("strategies disagree at cut " + std::to_string(i), naive.cut(i).members(),
                   generated.cut(i).members(), false);
    }
    if (i > 0 && !canonical_less(naive.cut(i - 1).members(), naive.cut(i).members())) {
      return fails("cuts are not in canonical order");
    }
  }
  if (!naive.index_of(x.universe())) return fails("X is missing from X#");
  if (c.extrema_free() && !naive.index_of(x.empty_set())) return fails("empty set is missing from X#");
  if (naive.embedding() != generated.embedding()) return fails("embedding tables differ");
  return holds();
}

// ---- extensions -------------------------------------------------------------

Verdict check_tilde_equals_L(const Context& c, std::span<const Subset> s) {
  const auto& phi = c.inst.phi;
  const Subset tilde = phi_tilde(phi, s[0]).members();
  for (const auto& sel : {c.inst.selector, CofinalSelector::identity(), CofinalSelector::maximal_elements()}) {
    const Subset l = phi_L(phi, sel, s[0]).members();
    if (l != tilde) {
      return fails("phi_tilde != phi_L for selector " + std::string(to_string(sel.kind())), tilde, l);
    }
  }
  return holds();
}

Verdict check_bar_within_tilde(const Context& c, std::span<const Subset> s) {
  const auto& phi = c.inst.phi;
  const Subset bar = phi_bar(phi, s[0]).members();
  const Subset tilde = phi_tilde(phi, s[0]).members();
  Verdict v = bar.is_subset_of(tilde) ? holds() : fails("phi_bar(A) not inside phi_tilde(A)", tilde, bar);
  if (!c.inst.x.is_directed(s[0])) return as_control(v);
  v.noteworthy = v.state == State::Holds && bar != tilde;
  return v;
}

Verdict check_bar_equals_sharp(const Context& c, std::span<const Subset> s) {
  const auto& phi = c.inst.phi;
  const Subset& a = s[0];
  const Subset sharp = phi_sharp(phi, a).members();
  const Subset bar = phi_bar(phi, a).members();
  Verdict v = bar == sharp ? holds() : fails("phi_bar(A) != phi_sharp(A)", sharp, bar);
  if (!phi.is_increasing()) return as_control(v);
  if (v.state == State::Holds && a.size() <= c.config.naive_bar_max) {
    for (const auto& b : enumerate_cofinal_subsets(c.inst.x, a, c.config.naive_bar_max)) {
      const Subset via_b = cut_closure(c.inst.y, phi.image(b)).members();
      if (via_b != sharp) return fails("(phi(B))^{ul} != (phi(A))^{ul} for a cofinal B", sharp, via_b);
    }
  }
  return v;
}

Verdict check_directed_agreement(const Context& c, std::span<const Subset> s) {
  const auto& phi = c.inst.phi;
  const Subset& a = s[0];
  if (!phi.is_increasing() || !c.inst.x.is_directed(a)) return not_applicable();
  const Subset sharp = phi_sharp(phi, a).members();
  const Subset bar = phi_bar(phi, a).members();
  const Subset tilde = phi_tilde(phi, a).members();
  const Subset l = phi_L(phi, c.inst.selector, a).members();
  if (bar != sharp) return fails("phi_bar != phi_sharp", sharp, bar);
  if (tilde != sharp) return fails("phi_tilde != phi_sharp", sharp, tilde);
  if (l != sharp) return fails("phi_L != phi_sharp", sharp, l);
  return holds();
}

Verdict check_within_sharp(const Context& c, std::span<const Subset> s) {
  const auto& phi = c.inst.phi;
  if (extensions_within_sharp(phi, c.inst.selector, s[0])) return holds();
  const Subset joined = phi_bar(phi, s[0]).members() | phi_tilde(phi, s[0]).members() |
                        phi_L(phi, c.inst.selector, s[0]).members();
  return fails("union of phi_bar, phi_tilde, phi_L escapes phi_sharp", phi_sharp(phi, s[0]).members(), joined);
}

Verdict check_outputs_are_cuts(const Context& c, std::span<const Subset> s) {
  const auto& phi = c.inst.phi;
  const auto& y = c.inst.y;
  const std::pair<const char*, Subset> outputs[] = {
      {"phi_sharp", phi_sharp(phi, s[0]).members()},
      {"phi_tilde", phi_tilde(phi, s[0]).members()},
      {"phi_L", phi_L(phi, c.inst.selector, s[0]).members()},
      {"phi_bar", phi_bar(phi, s[0]).members()},
  };
  for (const auto& [name, v] : outputs) {
    const Subset closed = y.lower_bounds(y.upper_bounds(v));
    if (closed != v || !y.is_down_set(v)) return fails(std::string(name) + " output is not a cut of Y", closed, v);
  }
  return holds();
}

Verdict check_sharp_monotone(const Context& c, std::span<const Subset> s) {
  const Subset lo = phi_sharp(c.inst.phi, s[0]).members();
  const Subset hi = phi_sharp(c.inst.phi, s[1]).members();
  if (!lo.is_subset_of(hi)) return fails("A inside B but phi#(A) not inside phi#(B)", hi, lo);
  return holds();
}

Verdict check_diagram_singletons(const Context& c, std::span<const Subset> s) {
  const auto& phi = c.inst.phi;
  const std::size_t e = s[0].members().front();
  const Subset want = ideal_y(c.inst, e);
  for (auto op : {Operator::Sharp, Operator::Tilde, Operator::L, Operator::Bar}) {
    const Subset got = extend(op, phi, s[0], &c.inst.selector).value.members();
    if (got != want) return fails(std::string(to_string(op)) + " on {x} differs from <phi(x)]", want, got);
  }
  return holds();
}

Verdict check_diagram_ideals(const Context& c, std::span<const Subset> s) {
  const auto& phi = c.inst.phi;
  const std::size_t e = s[0].members().front();
  const Subset ideal = c.inst.x.principal_ideal(e);
  const Subset want = ideal_y(c.inst, e);
  for (auto op : {Operator::Tilde, Operator::L, Operator::Bar}) {
    const Subset got = extend(op, phi, ideal, &c.inst.selector).value.members();
    if (got != want) return fails(std::string(to_string(op)) + " on <x] differs from <phi(x)]", want, got);
  }
  // phi_sharp on <x] reduces to <phi(x)] only for increasing maps.
  if (phi.is_increasing()) {
    const Subset got = phi_sharp(phi, ideal).members();
    if (got != want) return fails("sharp on <x] differs from <phi(x)]", want, got);
  }
  return holds();
}

Verdict check_sharp_on_ideals(const Context& c, std::span<const Subset> s) {
  const auto& phi = c.inst.phi;
  const std::size_t e = s[0].members().front();
  const Subset want = ideal_y(c.inst, e);
  const Subset got = phi_sharp(phi, c.inst.x.principal_ideal(e)).members();
  Verdict v = got == want ? holds() : fails("phi#(<x]) != <phi(x)]", want, got);
  if (!phi.is_increasing()) return as_control(v);
  return v;
}

Verdict check_sharp_oie(const Context& c, std::span<const Subset> s) {
  const auto& phi = c.inst.phi;
  if (!phi.is_oie()) return not_applicable();
  const Subset& a = s[0];
  const Subset& b = s[1];
  const Subset fa = phi_sharp(phi, a).members();
  const Subset fb = phi_sharp(phi, b).members();
  if (a.is_subset_of(b) != fa.is_subset_of(fb)) return fails("phi# on cuts does not reflect inclusion", fb, fa);
  if (a != b && fa == fb) return fails("phi# on cuts is not injective", fb, fa);
  return holds();
}

Verdict check_bounds_sandwich(const Context& c, std::span<const Subset> family) {
  const auto& x = c.inst.x;
  const auto& y = c.inst.y;
  const auto& phi = c.inst.phi;
  const auto cuts = c.cuts_of(family);
  std::vector<Cut> images;
  for (const auto& m : family) images.push_back(phi_sharp(phi, m));
  const Subset mu_inf = phi_sharp(phi, inf_cuts(x, cuts).members()).members();
  const Subset mu_sup = phi_sharp(phi, sup_cuts(x, cuts).members()).members();
  const Subset inf_mu = inf_cuts(y, images).members();
  const Subset sup_mu = sup_cuts(y, images).members();
  if (!mu_inf.is_subset_of(inf_mu)) return fails("mu(inf E) not below inf mu(E)", inf_mu, mu_inf);
  if (!inf_mu.is_subset_of(sup_mu)) return fails("inf mu(E) not below sup mu(E)", sup_mu, inf_mu);
  if (!sup_mu.is_subset_of(mu_sup)) return fails("sup mu(E) not below mu(sup E)", mu_sup, sup_mu);
  return holds();
}

Verdict check_bar_optimized(const Context& c, std::span<const Subset> s) {
  const auto& phi = c.inst.phi;
  const Subset& a = s[0];
  if (a.size() > c.config.naive_bar_max) return not_applicable();
  const Subset fast = phi_bar(phi, a, BarStrategy::Optimized).members();
  const Subset slow = phi_bar(phi, a, BarStrategy::Naive, c.config.naive_bar_max).members();
  if (fast != slow) return fails("optimized phi_bar differs from the literal enumeration", slow, fast);
  const Subset max = c.inst.x.maximal_elements(a);
  const auto cofinal = enumerate_cofinal_subsets(c.inst.x, a, c.config.naive_bar_max);
  if (std::find(cofinal.begin(), cofinal.end(), max) == cofinal.end()) return fails("Max(A) is not listed as cofinal");
  for (const auto& b : cofinal) {
    if (!max.is_subset_of(b)) return fails("a cofinal subset misses a maximal element", max, b, false);
  }
  return holds();
}

const std::vector<CheckDef>& registry() {
  using enum MapKind;
  static const std::vector<CheckDef> defs = {
      {{"A.11", CheckKind::Claim, "A in B implies B^u in A^u and B^l in A^l", {Arbitrary}}, Scope::SubsetPair,
       check_antitone},
      {{"A.12", CheckKind::Claim, "A in A^{ul} and A in A^{lu}", {Arbitrary}}, Scope::SubsetOfX, check_expansion},
      {{"A.13", CheckKind::Claim, "A^{ulu} = A^u and A^{lul} = A^l", {Arbitrary}}, Scope::SubsetOfX, check_tripling},
      {{"A.16-A.17", CheckKind::Claim, "singleton bound identities", {Arbitrary}}, Scope::Element, check_singletons},
      {{"A.4-A.6", CheckKind::Claim, "A^u = X iff A empty; A^u empty iff A unbounded", {Arbitrary}}, Scope::SubsetOfX,
       check_empty_full},
      {{"hasse-roundtrip", CheckKind::Claim, "closure of the cover pairs is the order", {Arbitrary}}, Scope::Whole,
       check_hasse_roundtrip},
      {{"MacNeille-1", CheckKind::Claim, "X# is order complete", {Arbitrary}}, Scope::CutFamily, check_order_complete},
      {{"MacNeille-2", CheckKind::Claim, "x -> <x] is an OIE preserving existing sup and inf", {Arbitrary}},
       Scope::SubsetOfX, check_embedding},
      {{"MacNeille-3", CheckKind::Claim, "order density of X in X#", {Arbitrary}}, Scope::CutOfX, check_density},
      {{"A.22", CheckKind::Claim, "A^{ul} = sup{<x] : x in A}", {Arbitrary}}, Scope::SubsetOfX, check_closure_as_sup},
      {{"A.18", CheckKind::Claim, "proper cuts lie between two principal ideals", {Arbitrary}}, Scope::CutOfX,
       check_proper_bounds},
      {{"closure-operator", CheckKind::Claim, "A -> A^{ul} is extensive, idempotent, monotone and least", {Arbitrary}},
       Scope::SubsetPair, check_closure_operator},
      {{"completion-strategies", CheckKind::Claim, "naive and generated completions agree", {Arbitrary}}, Scope::Whole,
       check_strategies},
      {{"Prop3.1", CheckKind::Claim, "phi_tilde = phi_L for every cofinal selector L", {Arbitrary, Increasing}},
       Scope::SubsetOfX, check_tilde_equals_L},
      {{"Prop3.2", CheckKind::Claim, "directed A: phi_bar(A) in phi_tilde(A)", {Arbitrary, Increasing}},
       Scope::SubsetOfX, check_bar_within_tilde},
      {{"Prop3.2-control", CheckKind::Control, "non-directed A: phi_bar(A) in phi_tilde(A) can fail", {Arbitrary}},
       Scope::SubsetOfX, check_bar_within_tilde},
      {{"Prop3.3", CheckKind::Claim, "increasing phi: phi_bar = phi_sharp, and (phi(B))^{ul} = (phi(A))^{ul}",
        {Increasing}},
       Scope::SubsetOfX, check_bar_equals_sharp},
      {{"Prop3.3-control", CheckKind::Control, "non-increasing phi: phi_bar = phi_sharp can fail", {Arbitrary}},
       Scope::SubsetOfX, check_bar_equals_sharp},
      {{"Cor3.1", CheckKind::Claim, "increasing phi, directed A: all four operators agree", {Increasing}},
       Scope::SubsetOfX, check_directed_agreement},
      {{"2.11", CheckKind::Claim, "phi_bar u phi_tilde u phi_L inside phi_sharp", {Arbitrary, Increasing}},
       Scope::SubsetOfX, check_within_sharp},
      {{"operators-are-cuts", CheckKind::Claim, "every operator output is a cut of Y", {Arbitrary, Increasing}},
       Scope::SubsetOfX, check_outputs_are_cuts},
      {{"PropA.1-1", CheckKind::Claim, "phi_sharp is increasing on P(X)", {Arbitrary}}, Scope::SubsetPair,
       check_sharp_monotone},
      {{"Thm4.1-diag4.1", CheckKind::Claim, "all four operators send {x} to <phi(x)]", {Arbitrary, Increasing}},
       Scope::Element, check_diagram_singletons},
      {{"Thm4.1-diag4.2", CheckKind::Claim,
        "phi_bar, phi_tilde, phi_L send <x] to <phi(x)]; phi_sharp too when phi is increasing",
        {Arbitrary, Increasing}},
       Scope::Element, check_diagram_ideals},
      {{"Thm4.1-diag4.2-sharp-control", CheckKind::Control, "non-increasing phi: phi_sharp(<x]) = <phi(x)] can fail",
        {Arbitrary}},
       Scope::Element, check_sharp_on_ideals},
      {{"PropA.1-2", CheckKind::Claim, "increasing phi: phi_sharp(<x]) = <phi(x)]", {Increasing}}, Scope::Element,
       check_sharp_on_ideals},
      {{"PropA.1-3", CheckKind::Claim, "OIE phi: phi_sharp restricted to X# is an OIE", {Oie}}, Scope::CutPair,
       check_sharp_oie},
      {{"LemmaA.1", CheckKind::Claim, "mu(inf E) <= inf mu(E) <= sup mu(E) <= mu(sup E)", {Arbitrary, Increasing}},
       Scope::NonemptyCutFamily, check_bounds_sandwich},
      {{"phi-bar-optimized", CheckKind::Claim, "(phi(Max A))^{ul} equals the cofinal-subset enumeration",
        {Arbitrary, Increasing}},
       Scope::SubsetOfX, check_bar_optimized},
  };
  return defs;
}

const CheckDef& find_def(std::string_view id) {
  for (const auto& d : registry()) {
    if (d.info.id == id) return d;
  }
  throw UnknownCheckError("unknown check '" + std::string(id) + "'");
}

// ---- subjects -----------------------------------------------------------------

using Subject = std::vector<Subset>;

Subset random_subset(const Subset& within, Rng& rng) {
  Subset s(within.universe());
  within.for_each([&](std::size_t i) {
    if (rng.chance(0.5)) s.insert(i);
  });
  return s;
}

std::vector<Subject> families(const std::vector<Subset>& cuts, bool nonempty, const RunConfig& config, Rng& rng) {
  std::vector<Subject> out;
  const std::size_t k = cuts.size();
  if (k <= config.family_exhaustive_max) {
    for (std::uint64_t mask = nonempty ? 1 : 0; mask < (std::uint64_t{1} << k); ++mask) {
      Subject f;
      for (std::size_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1U) f.push_back(cuts[i]);
      }
      out.push_back(std::move(f));
    }
    return out;
  }
  if (!nonempty) out.push_back({});
  out.push_back(cuts);
  while (out.size() < config.sampled_families) {
    Subject f;
    // Mix sparse and dense families.
    const double p = (out.size() % 2 == 0) ? 0.15 : 0.5;
    for (const auto& c : cuts) {
      if (rng.chance(p)) f.push_back(c);
    }
    if (nonempty && f.empty()) f.push_back(cuts[rng.below(k)]);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Subject> subjects_for(Scope scope, const Context& ctx, Rng& rng) {
  const auto& x = ctx.inst.x;
  const auto& config = ctx.config;
  const bool exhaustive = x.size() <= config.exhaustive_max;
  std::vector<Subject> out;
  switch (scope) {
    case Scope::Whole:
      out.push_back({});
      break;
    case Scope::Element:
      for (std::size_t e = 0; e < x.size(); ++e) out.push_back({x.subset_of({e})});
      break;
    case Scope::SubsetOfX:
      if (exhaustive) {
        for_each_submask(x.universe(), [&](const Subset& a) { out.push_back({a}); });
      } else {
        out.push_back({x.empty_set()});
        out.push_back({x.universe()});
        while (out.size() < config.sampled_subjects) out.push_back({random_subset(x.universe(), rng)});
      }
      break;
    case Scope::SubsetPair:
      if (exhaustive) {
        for_each_submask(x.universe(), [&](const Subset& b) {
          for_each_submask(b, [&](const Subset& a) { out.push_back({a, b}); });
        });
      } else {
        while (out.size() < config.sampled_subjects) {
          const Subset b = random_subset(x.universe(), rng);
          out.push_back({random_subset(b, rng), b});
        }
      }
      break;
    case Scope::CutOfX:
      for (const auto& c : ctx.lattice().cuts()) out.push_back({c.members()});
      break;
    case Scope::CutPair: {
      const auto& cuts = ctx.lattice().cuts();
      if (cuts.size() * cuts.size() <= 4096) {
        for (const auto& a : cuts) {
          for (const auto& b : cuts) out.push_back({a.members(), b.members()});
        }
      } else {
        while (out.size() < config.sampled_families) {
          out.push_back({cuts[rng.below(cuts.size())].members(), cuts[rng.below(cuts.size())].members()});
        }
      }
      break;
    }
    case Scope::CutFamily:
    case Scope::NonemptyCutFamily: {
      std::vector<Subset> cuts;
      for (const auto& c : ctx.lattice().cuts()) cuts.push_back(c.members());
      out = families(cuts, scope == Scope::NonemptyCutFamily, config, rng);
      break;
    }
  }
  return out;
}

Witness make_witness(const CheckDef& def, const Instance& inst, const Subject& subject, const Verdict& v) {
  Witness w;
  w.check_id = def.info.id;
  w.control = v.state == State::ControlFails;
  w.document = to_document(inst, subject);
  for (std::size_t i = 0; i < subject.size(); ++i) w.subject.push_back("S" + std::to_string(i));
  w.message = v.message + " [" + inst.origin + "]";
  const auto& labels_from = v.in_y ? inst.y : inst.x;
  if (v.expected) w.expected = io::sorted_labels(labels_from, *v.expected);
  if (v.actual) w.actual = io::sorted_labels(labels_from, *v.actual);
  return w;
}

}  // namespace

const std::vector<CheckInfo>& catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

const CheckInfo& check_info(std::string_view id) { return find_def(id).info; }

bool VerificationReport::passed() const {
  if (kind == CheckKind::Control) return control_counterexamples > 0;
  return failure_count == 0;
}

std::string VerificationReport::label() const {
  if (kind == CheckKind::Control || (subjects_checked == 0 && control_subjects > 0)) {
    return "hypothesis-violated control";
  }
  return "claim";
}

std::vector<InstanceSpec> default_specs(const CheckInfo& info, const RunConfig& config) {
  static constexpr double kProbabilities[] = {0.25, 0.4, 0.55, 0.7};
  std::vector<InstanceSpec> specs;
  Rng sizes(splitmix64(config.seed));
  const std::size_t x_span = config.x_max - std::min(config.x_min, config.x_max) + 1;
  const std::size_t y_span = config.y_max - std::min(config.y_min, config.y_max) + 1;
  for (std::size_t i = 0; i < config.instances; ++i) {
    InstanceSpec spec;
    spec.map_kind = info.corpus_kinds[i % info.corpus_kinds.size()];
    spec.x_size = config.x_min + i % x_span;
    spec.y_size = config.y_min + sizes.below(y_span);
    if (spec.map_kind == MapKind::Oie) spec.y_size = std::max(spec.y_size, spec.x_size);
    spec.edge_probability = kProbabilities[(i / x_span) % 4];
    spec.seed = splitmix64(config.seed ^ splitmix64(i + 1) ^ hash_string(to_string(spec.map_kind)));
    specs.push_back(spec);
  }
  return specs;
}

std::vector<Instance> default_corpus(const CheckInfo& info, const RunConfig& config) {
  std::vector<Instance> out;
  if (config.include_fixtures) out = fixture_instances();
  for (const auto& spec : default_specs(info, config)) out.push_back(generate_instance(spec, config.limits));
  return out;
}

VerificationReport run_check_on(std::string_view check_id, std::span<const Instance> instances,
                                const RunConfig& config) {
  const auto& def = find_def(check_id);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check_id = def.info.id;
  report.kind = def.info.kind;
  std::size_t noteworthy = 0;

  for (std::size_t n = 0; n < instances.size(); ++n) {
    const auto& inst = instances[n];
    Context ctx(inst, config);
    Rng rng(splitmix64(config.seed ^ hash_string(def.info.id) ^ splitmix64(n)));
    bool ran = false;
    for (const auto& subject : subjects_for(def.scope, ctx, rng)) {
      const Verdict v = def.eval(ctx, subject);
      switch (v.state) {
        case State::NotApplicable:
          ++report.subjects_skipped;
          continue;
        case State::Holds:
        case State::Fails:
          if (def.info.kind == CheckKind::Control) {
            ++report.subjects_skipped;
            continue;
          }
          ++report.subjects_checked;
          if (v.noteworthy) ++noteworthy;
          if (v.state == State::Fails && report.failure_count++ == 0) {
            report.failures.push_back(make_witness(def, inst, subject, v));
          }
          break;
        case State::ControlHolds:
        case State::ControlFails:
          ++report.control_subjects;
          if (v.state == State::ControlFails && report.control_counterexamples++ == 0) {
            report.control_witnesses.push_back(make_witness(def, inst, subject, v));
          }
          break;
      }
      ran = true;
    }
    if (ran) ++report.instances_run;
  }
  if (def.info.id == "Prop3.2") {
    report.notes.push_back("directed subjects with phi_bar strictly inside phi_tilde: " + std::to_string(noteworthy));
  }
  if (report.inconclusive()) report.notes.push_back("inconclusive: no counterexample to the conclusion was found");
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

VerificationReport run_check(std::string_view check_id, std::span<const InstanceSpec> specs, const RunConfig& config) {
  find_def(check_id);
  std::vector<Instance> instances;
  for (const auto& spec : specs) instances.push_back(generate_instance(spec, config.limits));
  return run_check_on(check_id, instances, config);
}

VerificationReport run_check(std::string_view check_id, const RunConfig& config) {
  const auto& def = find_def(check_id);
  const auto start = std::chrono::steady_clock::now();
  auto report = run_check_on(check_id, default_corpus(def.info, config), config);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<VerificationReport> run_checks(std::span<const std::string> ids, const RunConfig& config) {
  std::set<std::string> wanted;
  bool all = false;
  for (const auto& id : ids) {
    if (id == "all") {
      all = true;
    } else {
      find_def(id);
      wanted.insert(id);
    }
  }
  std::vector<VerificationReport> out;
  for (const auto& d : registry()) {
    if (all || wanted.contains(d.info.id)) out.push_back(run_check(d.info.id, config));
  }
  return out;
}

bool replay(const Witness& witness) {
  const auto& def = find_def(witness.check_id);
  const Instance inst = from_document(witness.document);
  Subject subject;
  for (const auto& name : witness.subject) subject.push_back(witness.document.subset(name).members);
  RunConfig config;
  Context ctx(inst, config);
  const Verdict v = def.eval(ctx, subject);
  return v.state == (witness.control ? State::ControlFails : State::Fails);
}

io::json to_json(const Witness& w) {
  return {{"check_id", w.check_id},
          {"control", w.control},
          {"instance", io::to_json(w.document)},
          {"subject", w.subject},
          {"message", w.message},
          {"expected", w.expected},
          {"actual", w.actual}};
}

Witness witness_from_json(const io::json& j) {
  Witness w;
  try {
    w.check_id = j.at("check_id").get<std::string>();
    w.control = j.value("control", false);
    w.document = io::instance_from_json(j.at("instance"), {.allow_extrema = true});
    w.subject = j.at("subject").get<std::vector<std::string>>();
    w.message = j.value("message", "");
    w.expected = j.value("expected", std::vector<std::string>{});
    w.actual = j.value("actual", std::vector<std::string>{});
  } catch (const io::json::exception& e) {
    throw ParseError(std::string("witness: ") + e.what());
  }
  return w;
}

io::json to_json(const VerificationReport& r, bool include_timing) {
  io::json failures = io::json::array();
  for (const auto& w : r.failures) failures.push_back(to_json(w));
  io::json controls = io::json::array();
  for (const auto& w : r.control_witnesses) controls.push_back(to_json(w));
  std::string status;
  if (r.kind == CheckKind::Control) {
    status = r.control_counterexamples > 0 ? "counterexample-found" : "inconclusive";
  } else {
    status = r.failure_count == 0 ? "pass" : "fail";
  }
  io::json j = {{"check_id", r.check_id},
                {"kind", r.label()},
                {"statement", check_info(r.check_id).statement},
                {"status", status},
                {"instances_run", r.instances_run},
                {"subjects_checked", r.subjects_checked},
                {"subjects_skipped", r.subjects_skipped},
                {"failure_count", r.failure_count},
                {"failures", failures},
                {"control_subjects", r.control_subjects},
                {"control_counterexamples", r.control_counterexamples},
                {"control_witnesses", controls},
                {"notes", r.notes}};
  if (include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

io::json to_json(std::span<const VerificationReport> reports, bool include_timing) {
  io::json arr = io::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, include_timing));
  return arr;
}

int exit_code(std::span<const VerificationReport> reports) {
  for (const auto& r : reports) {
    if (r.kind == CheckKind::Claim && r.failure_count > 0) return 1;
  }
  return 0;
}

}  // namespace macneille::verify
