#pragma once

// Brute-force reference implementations written directly from the order
// relation with plain vectors of indices. They share nothing with the
// library beyond FinitePoset::leq and PosetMap::operator().

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "macneille/poset.hpp"

namespace oracle {

using Set = std::set<std::size_t>;

inline Set all(const macneille::FinitePoset& p) {
  Set s;
  for (std::size_t i = 0; i < p.size(); ++i) s.insert(i);
  return s;
}

inline Set upper(const macneille::FinitePoset& p, const Set& a) {
  Set out;
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (std::all_of(a.begin(), a.end(), [&](std::size_t x) { return p.leq(x, y); })) out.insert(y);
  }
  return out;
}

inline Set lower(const macneille::FinitePoset& p, const Set& a) {
  Set out;
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (std::all_of(a.begin(), a.end(), [&](std::size_t x) { return p.leq(y, x); })) out.insert(y);
  }
  return out;
}

inline Set closure(const macneille::FinitePoset& p, const Set& a) { return lower(p, upper(p, a)); }

inline Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline std::vector<Set> all_subsets(const Set& universe) {
  std::vector<std::size_t> items(universe.begin(), universe.end());
  std::vector<Set> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
    Set s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1U) s.insert(items[i]);
    }
    out.push_back(s);
  }
  return out;
}

/// Every A with A^{ul} = A, found by trying all 2^|X| subsets.
inline std::set<Set> all_cuts(const macneille::FinitePoset& p) {
  std::set<Set> out;
  for (const auto& a : all_subsets(all(p))) {
    if (closure(p, a) == a) out.insert(a);
  }
  return out;
}

inline Set image(const macneille::PosetMap& phi, const Set& a) {
  Set out;
  for (auto x : a) out.insert(phi(x));
  return out;
}

inline Set sharp(const macneille::PosetMap& phi, const Set& a) { return closure(phi.codomain(), image(phi, a)); }

inline Set tilde(const macneille::PosetMap& phi, const Set& a) {
  const auto& x = phi.domain();
  const auto& y = phi.codomain();
  if (a.empty()) return closure(y, {});
  Set out = all(y);
  for (auto e : a) {
    Set trace;
    for (auto b : a) {
      if (x.leq(e, b)) trace.insert(b);
    }
    out = intersect(out, closure(y, image(phi, trace)));
  }
  return out;
}

inline bool cofinal(const macneille::FinitePoset& p, const Set& b, const Set& a) {
  if (!subset(b, a)) return false;
  return std::all_of(a.begin(), a.end(), [&](std::size_t x) {
    return std::any_of(b.begin(), b.end(), [&](std::size_t y) { return p.leq(x, y); });
  });
}

/// The literal definition: intersection over every cofinal B of A.
inline Set bar(const macneille::PosetMap& phi, const Set& a) {
  const auto& y = phi.codomain();
  if (a.empty()) return closure(y, {});
  Set out = all(y);
  for (const auto& b : all_subsets(a)) {
    if (cofinal(phi.domain(), b, a)) out = intersect(out, closure(y, image(phi, b)));
  }
  return out;
}

inline Set from(const macneille::Subset& s) {
  const auto m = s.members();
  return Set(m.begin(), m.end());
}

}  // namespace oracle
