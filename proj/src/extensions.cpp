#include "macneille/extensions.hpp"

#include <algorithm>

#include "macneille/errors.hpp"

namespace macneille {

namespace {

void require_domain(const PosetMap& phi, const Subset& a) {
  if (!phi.domain().owns(a)) throw NotASubsetError("subset does not belong to the map's domain");
}

/// Intersection over a in `index` of (phi([a> n A))^{ul}.
Cut trace_intersection(const PosetMap& phi, const Subset& index, const Subset& a) {
  const auto& x = phi.domain();
  const auto& y = phi.codomain();
  if (a.is_empty()) return cut_closure(y, y.empty_set());
  Subset acc = y.universe();
  index.for_each([&](std::size_t i) {
    acc &= cut_closure(y, phi.image(x.principal_filter(i) & a)).members();
  });
  return Cut(y, acc);
}

}  // namespace

Subset CofinalSelector::select(const FinitePoset& x, const Subset& a) const {
  switch (kind_) {
    case Kind::Identity:
      return a;
    case Kind::MaximalElements:
      return x.maximal_elements(a);
    case Kind::ExplicitTable:
      break;
  }
  auto it = table_.find(a.bits());
  if (it == table_.end()) {
    throw InvalidSelectorError("selector table has no entry for {" + [&] {
      std::string s;
      for (const auto& l : x.labels_of(a)) s += (s.empty() ? "" : ",") + l;
      return s;
    }() + "}");
  }
  const Subset& chosen = it->second;
  if (!chosen.is_subset_of(a)) throw InvalidSelectorError("selector value L(A) is not contained in A");
  if (!x.is_cofinal_in(Subset(a.universe(), chosen.bits()), a)) {
    throw InvalidSelectorError("selector value L(A) is not cofinal in A");
  }
  return Subset(a.universe(), chosen.bits());
}

std::string_view to_string(CofinalSelector::Kind kind) {
  switch (kind) {
    case CofinalSelector::Kind::MaximalElements:
      return "MaximalElements";
    case CofinalSelector::Kind::Identity:
      return "Identity";
    case CofinalSelector::Kind::ExplicitTable:
      return "ExplicitTable";
  }
  return "";
}

CofinalSelector::Kind selector_kind_from_string(std::string_view name) {
  if (name == "MaximalElements") return CofinalSelector::Kind::MaximalElements;
  if (name == "Identity") return CofinalSelector::Kind::Identity;
  if (name == "ExplicitTable") return CofinalSelector::Kind::ExplicitTable;
  throw ValidationError("unknown selector kind '" + std::string(name) + "'");
}

Cut phi_sharp(const PosetMap& phi, const Subset& a) {
  require_domain(phi, a);
  return cut_closure(phi.codomain(), phi.image(a));
}

Cut phi_tilde(const PosetMap& phi, const Subset& a) {
  require_domain(phi, a);
  return trace_intersection(phi, a, a);
}

Cut phi_L(const PosetMap& phi, const CofinalSelector& selector, const Subset& a) {
  require_domain(phi, a);
  if (a.is_empty()) return cut_closure(phi.codomain(), phi.codomain().empty_set());
  return trace_intersection(phi, selector.select(phi.domain(), a), a);
}

Cut phi_bar(const PosetMap& phi, const Subset& a, BarStrategy strategy, std::size_t cap) {
  require_domain(phi, a);
  const auto& y = phi.codomain();
  if (strategy == BarStrategy::Optimized) {
    // Every cofinal B contains Max(A), Max(A) is itself cofinal, and
    // B -> (phi(B))^{ul} is monotone, so the intersection collapses.
    return cut_closure(y, phi.image(phi.domain().maximal_elements(a)));
  }
  Subset acc = y.universe();
  for (const auto& b : enumerate_cofinal_subsets(phi.domain(), a, cap)) {
    acc &= cut_closure(y, phi.image(b)).members();
  }
  return Cut(y, acc);
}

std::vector<Subset> enumerate_cofinal_subsets(const FinitePoset& x, const Subset& a, std::size_t cap) {
  if (a.size() > cap) {
    throw SizeCapError("cofinal enumeration over " + std::to_string(a.size()) + " elements exceeds the cap of " +
                       std::to_string(cap));
  }
  std::vector<Subset> out;
  for_each_submask(a, [&](const Subset& b) {
    if (x.is_cofinal_in(b, a)) out.push_back(b);
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool extensions_within_sharp(const PosetMap& phi, const CofinalSelector& selector, const Subset& a) {
  const Subset sharp = phi_sharp(phi, a).members();
  const Subset joined = phi_bar(phi, a).members() | phi_tilde(phi, a).members() | phi_L(phi, selector, a).members();
  return joined.is_subset_of(sharp);
}

std::string_view to_string(Operator op) {
  switch (op) {
    case Operator::Sharp:
      return "sharp";
    case Operator::Tilde:
      return "tilde";
    case Operator::L:
      return "L";
    case Operator::Bar:
      return "bar";
  }
  return "";
}

Operator operator_from_string(std::string_view name) {
  if (name == "sharp") return Operator::Sharp;
  if (name == "tilde") return Operator::Tilde;
  if (name == "L") return Operator::L;
  if (name == "bar") return Operator::Bar;
  throw ValidationError("unknown operator '" + std::string(name) + "'; expected sharp, tilde, L or bar");
}

ExtensionResult extend(Operator op, const PosetMap& phi, const Subset& a, const CofinalSelector* selector) {
  switch (op) {
    case Operator::Sharp:
      return {op, a, phi_sharp(phi, a)};
    case Operator::Tilde:
      return {op, a, phi_tilde(phi, a)};
    case Operator::L:
      if (selector == nullptr) throw InvalidSelectorError("operator L requires a selector");
      return {op, a, phi_L(phi, *selector, a)};
    case Operator::Bar:
      return {op, a, phi_bar(phi, a)};
  }
  throw ValidationError("unknown operator");
}

}  // namespace macneille
