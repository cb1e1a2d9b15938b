#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "macneille/completion.hpp"
#include "macneille/poset.hpp"

namespace macneille {

/**
 * A cofinal mapping L: P(X) -> P(X), i.e. L(A) is contained in A and is
 * cofinal in it.
 *
 * MaximalElements and Identity are valid by construction. ExplicitTable
 * looks A up in a per-subset table; entries are validated when used.
 */
class CofinalSelector {
 public:
  enum class Kind { MaximalElements, Identity, ExplicitTable };

  static CofinalSelector maximal_elements() { return CofinalSelector(Kind::MaximalElements); }
  static CofinalSelector identity() { return CofinalSelector(Kind::Identity); }
  static CofinalSelector explicit_table(std::map<Subset::Word, Subset> table) {
    CofinalSelector s(Kind::ExplicitTable);
    s.table_ = std::move(table);
    return s;
  }

  Kind kind() const { return kind_; }
  const std::map<Subset::Word, Subset>& table() const { return table_; }

  /// L(A). Throws InvalidSelectorError if the value is not a cofinal
  /// subset of A or the table has no entry for A.
  Subset select(const FinitePoset& x, const Subset& a) const;

  friend bool operator==(const CofinalSelector&, const CofinalSelector&) = default;

 private:
  explicit CofinalSelector(Kind k) : kind_(k) {}
  Kind kind_;
  std::map<Subset::Word, Subset> table_;
};

std::string_view to_string(CofinalSelector::Kind kind);
/// Throws ValidationError.
CofinalSelector::Kind selector_kind_from_string(std::string_view name);

/// phi#(A) = (phi(A))^{ul}
Cut phi_sharp(const PosetMap& phi, const Subset& a);

/// Intersection over a in A of (phi([a> n A))^{ul}; the bottom cut of Y
/// when A is empty.
Cut phi_tilde(const PosetMap& phi, const Subset& a);

/// Same as phi_tilde with a ranging over L(A) only.
Cut phi_L(const PosetMap& phi, const CofinalSelector& selector, const Subset& a);

enum class BarStrategy {
  /// (phi(Max A))^{ul}, valid on finite posets.
  Optimized,
  /// Intersection over every cofinal subset, enumerated explicitly.
  Naive,
};

/// Default largest |A| for which cofinal subsets are enumerated.
inline constexpr std::size_t kCofinalEnumerationCap = 16;

/// Intersection over every B cofinal in A of (phi(B))^{ul}. The naive
/// strategy throws SizeCapError when |A| exceeds `cap`.
Cut phi_bar(const PosetMap& phi, const Subset& a, BarStrategy strategy = BarStrategy::Optimized,
            std::size_t cap = kCofinalEnumerationCap);

/// Every B contained in A that is cofinal in A, in canonical subset order.
std::vector<Subset> enumerate_cofinal_subsets(const FinitePoset& x, const Subset& a,
                                              std::size_t cap = kCofinalEnumerationCap);

/// phi_bar(A) u phi_tilde(A) u phi_L(A) is contained in phi_sharp(A).
bool extensions_within_sharp(const PosetMap& phi, const CofinalSelector& selector, const Subset& a);

enum class Operator { Sharp, Tilde, L, Bar };

std::string_view to_string(Operator op);
/// Accepts "sharp", "tilde", "L", "bar". Throws ValidationError.
Operator operator_from_string(std::string_view name);

struct ExtensionResult {
  Operator op;
  Subset input;
  Cut value;
};

/// Dispatches on `op`. `selector` is required for Operator::L and ignored
/// otherwise; InvalidSelectorError is raised when it is missing.
ExtensionResult extend(Operator op, const PosetMap& phi, const Subset& a, const CofinalSelector* selector = nullptr);

}  // namespace macneille
