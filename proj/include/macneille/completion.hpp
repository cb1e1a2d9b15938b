#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "macneille/poset.hpp"
#include "macneille/subset.hpp"

namespace macneille {

/// A subset A of a base poset with A^{ul} = A.
class Cut {
 public:
  /// Throws ValidationError when `members` is not a cut of `base`.
  Cut(FinitePoset base, Subset members);

  const FinitePoset& base() const { return base_; }
  const Subset& members() const { return members_; }

  friend bool operator==(const Cut& a, const Cut& b) { return a.base_ == b.base_ && a.members_ == b.members_; }

 private:
  struct Trusted {};
  Cut(FinitePoset base, Subset members, Trusted) : base_(std::move(base)), members_(members) {}
  friend Cut cut_closure(const FinitePoset&, const Subset&);
  friend Cut inf_cuts(const FinitePoset&, std::span<const Cut>);

  FinitePoset base_;
  Subset members_;
};

/// A^{ul}: the smallest cut containing A.
Cut cut_closure(const FinitePoset& base, const Subset& a);
bool is_cut(const FinitePoset& base, const Subset& a);

/// <x] as a cut.
Cut embed(const FinitePoset& base, std::size_t x);

/// (union of the family)^{ul}; cut_closure(empty) for an empty family.
/// Throws MixedBaseError when a member cut has a different base.
Cut sup_cuts(const FinitePoset& base, std::span<const Cut> family);
/// Intersection of the family; X for an empty family.
Cut inf_cuts(const FinitePoset& base, std::span<const Cut> family);

/// A == sup{<x] : <x] in A} and A == inf{<x] : A in <x]}.
bool density_check(const Cut& a);

/// Witnesses (a, b) with <a] in A in <b]; absent for the empty and full
/// cut, and whenever no such pair exists.
std::optional<std::pair<std::size_t, std::size_t>> proper_cut_bounds(const Cut& a);

enum class CompletionStrategy {
  /// Test every subset of X with is_cut.
  Naive,
  /// Close {<x]} together with the bottom and top cuts under intersection.
  Generated,
  /// Generated, which is never slower; the naive path stays available as an
  /// oracle.
  Automatic,
};

struct CompletionOptions {
  CompletionStrategy strategy = CompletionStrategy::Automatic;
  /// Largest |X| for which the naive 2^|X| scan is attempted.
  std::size_t size_cap = 20;
  /// Largest number of cuts the generated strategy may produce.
  std::size_t node_budget = std::size_t{1} << 20;
};

/// Default size cap, honouring the POSET_SIZE_CAP environment variable.
std::size_t default_size_cap();

/**
 * The Dedekind-MacNeille completion X# of a finite poset.
 *
 * Cuts are kept in canonical order (cardinality, then lexicographic over
 * sorted member indices), so the index of a cut is stable for a given
 * poset regardless of the strategy used to build it.
 */
class CompletionLattice {
 public:
  const FinitePoset& base() const { return base_; }
  std::size_t size() const { return cuts_.size(); }
  const std::vector<Cut>& cuts() const { return cuts_; }
  const Cut& cut(std::size_t i) const { return cuts_.at(i); }

  /// Inclusion order among cuts.
  bool leq(std::size_t i, std::size_t j) const { return cuts_[i].members().is_subset_of(cuts_[j].members()); }
  std::optional<std::size_t> index_of(const Subset& members) const;

  /// Cut index of <x> for every element x.
  const std::vector<std::size_t>& embedding() const { return embedding_; }

  /// Cover pairs of the inclusion order.
  std::vector<Pair> covers() const;

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return cuts_.size() - 1; }

 private:
  friend CompletionLattice dedekind_completion(const FinitePoset&, const CompletionOptions&);
  CompletionLattice(FinitePoset base, std::vector<Subset> members);

  FinitePoset base_;
  std::vector<Cut> cuts_;
  std::vector<std::size_t> embedding_;
};

/// Throws SizeCapError when the requested strategy cannot finish within
/// its limits.
CompletionLattice dedekind_completion(const FinitePoset& base, const CompletionOptions& options = {});

}  // namespace macneille
