#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macneille/subset.hpp"

namespace macneille {

struct PosetOptions {
  /// Accept posets with a global minimum or maximum.
  bool allow_extrema = false;
};

using Pair = std::pair<std::size_t, std::size_t>;

/**
 * An immutable finite poset.
 *
 * Elements are identified by a dense index in [0, size()) and a unique
 * string label. The order is stored twice, as principal ideals (down[i]
 * holds every j with j <= i) and principal filters (up[i] holds every j
 * with i <= j), so that every bound operator is a row intersection.
 *
 * Copies share the underlying storage.
 */
class FinitePoset {
 public:
  FinitePoset();

  /// Builds the reflexive-transitive closure of `relation` over `labels`.
  /// Throws CycleError, UnknownElementError (index out of range),
  /// ValidationError (duplicate labels, too many elements) and, unless
  /// extrema are allowed, HypothesisError.
  static FinitePoset from_relation(std::vector<std::string> labels, const std::vector<Pair>& relation,
                                   PosetOptions options = {});

  /// Label-based variant of from_relation.
  static FinitePoset from_labels(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::string, std::string>>& relation,
                                 PosetOptions options = {});

  std::size_t size() const { return data_->labels.size(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  /// Throws UnknownElementError.
  std::size_t index_of(std::string_view label) const;

  bool leq(std::size_t i, std::size_t j) const { return data_->down[j].contains(i); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  /// <x] = { y | y <= x }
  const Subset& principal_ideal(std::size_t x) const { return data_->down.at(x); }
  /// [x> = { y | y >= x }
  const Subset& principal_filter(std::size_t x) const { return data_->up.at(x); }

  Subset empty_set() const { return Subset::empty(size()); }
  Subset universe() const { return Subset::full(size()); }
  Subset subset_of(std::initializer_list<std::size_t> members) const { return Subset::of(size(), members); }
  /// Throws UnknownElementError.
  Subset subset_of_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Subset& s) const;

  /// A^u, the intersection of the principal filters of A; X for A empty.
  Subset upper_bounds(const Subset& a) const;
  /// A^l, the intersection of the principal ideals of A; X for A empty.
  Subset lower_bounds(const Subset& a) const;

  /// Elements of A with nothing of A strictly above.
  Subset maximal_elements(const Subset& a) const;
  Subset minimal_elements(const Subset& a) const;

  /// Throws NotASubsetError when b is not contained in a.
  bool is_cofinal_in(const Subset& b, const Subset& a) const;
  bool is_directed(const Subset& a) const;
  bool is_down_set(const Subset& a) const;

  std::optional<std::size_t> minimum() const;
  std::optional<std::size_t> maximum() const;

  /// Least upper bound of A in X when it exists.
  std::optional<std::size_t> supremum(const Subset& a) const;
  std::optional<std::size_t> infimum(const Subset& a) const;

  /// Strict pairs (i, j) with i < j, row-major.
  std::vector<Pair> strict_pairs() const;

  /// True when this is the poset's own universe size; used to reject
  /// subsets built for another poset.
  bool owns(const Subset& s) const { return s.universe() == size(); }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<Subset> down;
    std::vector<Subset> up;
  };
  explicit FinitePoset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Covering pairs (x, y): x < y with nothing strictly between.
std::vector<Pair> hasse_covers(const FinitePoset& p);

/// Transitive reduction of any finite partial order given as a predicate.
template <typename Leq>
std::vector<Pair> transitive_reduction(std::size_t n, Leq&& leq) {
  std::vector<Pair> covers;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
      }
      if (covered) covers.emplace_back(i, j);
    }
  }
  return covers;
}

/// A total function table between two posets.
class PosetMap {
 public:
  /// Throws ValidationError when the table is not total or an image is
  /// out of range.
  PosetMap(FinitePoset domain, FinitePoset codomain, std::vector<std::size_t> table);

  static PosetMap identity(const FinitePoset& p);
  static PosetMap constant(const FinitePoset& domain, const FinitePoset& codomain, std::size_t value);

  const FinitePoset& domain() const { return domain_; }
  const FinitePoset& codomain() const { return codomain_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t x) const { return table_.at(x); }

  /// phi(A) as a subset of the codomain.
  Subset image(const Subset& a) const;

  bool is_increasing() const;
  /// Injective and a <= b exactly when phi(a) <= phi(b).
  bool is_oie() const;

  friend bool operator==(const PosetMap&, const PosetMap&) = default;

 private:
  FinitePoset domain_;
  FinitePoset codomain_;
  std::vector<std::size_t> table_;
};

// Canonical fixtures used throughout tests and docs.
namespace fixtures {
/// Two incomparable elements a, b.
FinitePoset antichain(std::size_t n = 2);
/// 1 < 2 < ... < n, labels "1".."n". Has extrema.
FinitePoset chain(std::size_t n);
/// a, b < c, d.
FinitePoset butterfly();
}  // namespace fixtures

}  // namespace macneille
