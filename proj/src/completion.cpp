#include "macneille/completion.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "macneille/errors.hpp"

namespace macneille {

namespace {

Subset closure_members(const FinitePoset& base, const Subset& a) {
  return base.lower_bounds(base.upper_bounds(a));
}

void require_base(const FinitePoset& base, const Cut& c) {
  if (!(c.base() == base)) throw MixedBaseError("cut belongs to a different base poset");
}

std::vector<Subset> naive_cuts(const FinitePoset& base) {
  std::vector<Subset> out;
  for_each_submask(base.universe(), [&](const Subset& s) {
    if (closure_members(base, s) == s) out.push_back(s);
  });
  return out;
}

/// Intersection closure of the principal ideals, seeded with X and the
/// bottom cut. Returns nullopt if more than `budget` cuts appear.
std::optional<std::vector<Subset>> generated_cuts(const FinitePoset& base, std::size_t budget) {
  std::unordered_set<Subset> seen;
  std::vector<Subset> family;
  auto add = [&](const Subset& s) {
    if (seen.insert(s).second) family.push_back(s);
  };
  add(base.universe());
  add(closure_members(base, base.empty_set()));
  for (std::size_t x = 0; x < base.size(); ++x) add(base.principal_ideal(x));

  // Intersecting every new member with each principal ideal is enough:
  // each cut is an intersection of principal ideals.
  for (std::size_t next = 0; next < family.size(); ++next) {
    if (family.size() > budget) return std::nullopt;
    const Subset current = family[next];
    for (std::size_t x = 0; x < base.size(); ++x) add(current & base.principal_ideal(x));
  }
  if (family.size() > budget) return std::nullopt;
  return family;
}

}  // namespace

Cut::Cut(FinitePoset base, Subset members) : base_(std::move(base)), members_(members) {
  if (!base_.owns(members_) || closure_members(base_, members_) != members_) {
    throw ValidationError("subset is not a cut");
  }
}

Cut cut_closure(const FinitePoset& base, const Subset& a) {
  return Cut(base, closure_members(base, a), Cut::Trusted{});
}

bool is_cut(const FinitePoset& base, const Subset& a) { return closure_members(base, a) == a; }

Cut embed(const FinitePoset& base, std::size_t x) { return Cut(base, base.principal_ideal(x)); }

Cut sup_cuts(const FinitePoset& base, std::span<const Cut> family) {
  Subset u = base.empty_set();
  for (const auto& c : family) {
    require_base(base, c);
    u |= c.members();
  }
  return cut_closure(base, u);
}

Cut inf_cuts(const FinitePoset& base, std::span<const Cut> family) {
  Subset i = base.universe();
  for (const auto& c : family) {
    require_base(base, c);
    i &= c.members();
  }
  // Cuts are closed under intersection; the constructor re-checks that.
  return Cut(base, i);
}

bool density_check(const Cut& a) {
  const auto& base = a.base();
  std::vector<Cut> below;
  std::vector<Cut> above;
  for (std::size_t x = 0; x < base.size(); ++x) {
    const Subset& ideal = base.principal_ideal(x);
    if (ideal.is_subset_of(a.members())) below.push_back(embed(base, x));
    if (a.members().is_subset_of(ideal)) above.push_back(embed(base, x));
  }
  return sup_cuts(base, below) == a && inf_cuts(base, above) == a;
}

std::optional<std::pair<std::size_t, std::size_t>> proper_cut_bounds(const Cut& a) {
  const auto& base = a.base();
  const Subset& m = a.members();
  if (m.is_empty() || m.is_full()) return std::nullopt;
  std::optional<std::size_t> lo;
  std::optional<std::size_t> hi;
  for (std::size_t x = 0; x < base.size(); ++x) {
    const Subset& ideal = base.principal_ideal(x);
    if (!lo && ideal.is_subset_of(m)) lo = x;
    if (!hi && m.is_subset_of(ideal)) hi = x;
  }
  if (lo && hi) return std::make_pair(*lo, *hi);
  return std::nullopt;
}

std::size_t default_size_cap() {
  if (const char* env = std::getenv("POSET_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20;
}

CompletionLattice::CompletionLattice(FinitePoset base, std::vector<Subset> members) : base_(std::move(base)) {
  std::sort(members.begin(), members.end(), canonical_less);
  cuts_.reserve(members.size());
  for (const auto& m : members) cuts_.push_back(cut_closure(base_, m));
  embedding_.reserve(base_.size());
  for (std::size_t x = 0; x < base_.size(); ++x) embedding_.push_back(*index_of(base_.principal_ideal(x)));
}

std::optional<std::size_t> CompletionLattice::index_of(const Subset& members) const {
  auto it = std::lower_bound(cuts_.begin(), cuts_.end(), members,
                             [](const Cut& c, const Subset& s) { return canonical_less(c.members(), s); });
  if (it != cuts_.end() && it->members() == members) return static_cast<std::size_t>(it - cuts_.begin());
  return std::nullopt;
}

std::vector<Pair> CompletionLattice::covers() const {
  return transitive_reduction(cuts_.size(), [this](std::size_t i, std::size_t j) { return leq(i, j); });
}

CompletionLattice dedekind_completion(const FinitePoset& base, const CompletionOptions& options) {
  const std::size_t n = base.size();
  const bool naive_fits = n <= options.size_cap && n < kMaxElements;
  switch (options.strategy) {
    case CompletionStrategy::Naive:
      if (!naive_fits) {
        throw SizeCapError("naive completion of " + std::to_string(n) + " elements exceeds the size cap of " +
                           std::to_string(options.size_cap));
      }
      return CompletionLattice(base, naive_cuts(base));
    case CompletionStrategy::Generated: {
      auto cuts = generated_cuts(base, options.node_budget);
      if (!cuts) throw SizeCapError("generated completion exceeded the node budget");
      return CompletionLattice(base, std::move(*cuts));
    }
    case CompletionStrategy::Automatic:
      break;
  }
  if (auto cuts = generated_cuts(base, options.node_budget)) return CompletionLattice(base, std::move(*cuts));
  if (naive_fits) return CompletionLattice(base, naive_cuts(base));
  throw SizeCapError("completion of " + std::to_string(n) + " elements exceeds both the size cap of " +
                     std::to_string(options.size_cap) + " and the node budget");
}

}  // namespace macneille
