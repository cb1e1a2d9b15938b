#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace macneille {

/// Largest universe a Subset can index. Completion and enumeration caps are
/// far below this; it only bounds the storage word.
inline constexpr std::size_t kMaxElements = 64;

/**
 * A set of element indices of one poset, stored as a single 64-bit word.
 *
 * The universe size is carried along so that complements and "full" sets
 * are well defined. Two subsets compare equal only if they have the same
 * universe and the same members.
 */
class Subset {
 public:
  using Word = std::uint64_t;

  Subset() = default;
  explicit Subset(std::size_t universe, Word bits = 0)
      : bits_(bits & full_mask(universe)), universe_(universe) {}

  static Subset empty(std::size_t universe) { return Subset(universe); }
  static Subset full(std::size_t universe) { return Subset(universe, full_mask(universe)); }
  static Subset of(std::size_t universe, std::initializer_list<std::size_t> members) {
    Subset s(universe);
    for (auto i : members) s.insert(i);
    return s;
  }

  std::size_t universe() const { return universe_; }
  Word bits() const { return bits_; }

  bool contains(std::size_t i) const { return i < universe_ && ((bits_ >> i) & 1U); }
  void insert(std::size_t i) { bits_ |= Word{1} << i; }
  void erase(std::size_t i) { bits_ &= ~(Word{1} << i); }

  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full_mask(universe_); }

  bool is_subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }

  Subset operator&(const Subset& o) const { return Subset(universe_, bits_ & o.bits_); }
  Subset operator|(const Subset& o) const { return Subset(universe_, bits_ | o.bits_); }
  Subset operator-(const Subset& o) const { return Subset(universe_, bits_ & ~o.bits_); }
  Subset complement() const { return Subset(universe_, ~bits_); }

  Subset& operator&=(const Subset& o) {
    bits_ &= o.bits_;
    return *this;
  }
  Subset& operator|=(const Subset& o) {
    bits_ |= o.bits_;
    return *this;
  }

  /// Member indices in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (Word w = bits_; w != 0; w &= w - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(w)));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (Word w = bits_; w != 0; w &= w - 1) f(static_cast<std::size_t>(std::countr_zero(w)));
  }

  friend bool operator==(const Subset&, const Subset&) = default;

  static constexpr Word full_mask(std::size_t universe) {
    return universe >= 64 ? ~Word{0} : ((Word{1} << universe) - 1);
  }

 private:
  Word bits_ = 0;
  std::size_t universe_ = 0;
};

/// Canonical order: by cardinality, then lexicographically by the sorted
/// list of member indices. {a} < {b} < {a,b} < {a,b,c} < {a,b,d}.
inline bool canonical_less(const Subset& lhs, const Subset& rhs) {
  const auto ls = lhs.size();
  const auto rs = rhs.size();
  if (ls != rs) return ls < rs;
  Subset::Word a = lhs.bits();
  Subset::Word b = rhs.bits();
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

/// Calls f on every submask of `set` (including empty and `set` itself),
/// in increasing numeric order of the mask.
template <typename F>
void for_each_submask(const Subset& set, F&& f) {
  const Subset::Word mask = set.bits();
  Subset::Word sub = 0;
  while (true) {
    f(Subset(set.universe(), sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace macneille

template <>
struct std::hash<macneille::Subset> {
  std::size_t operator()(const macneille::Subset& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits() ^ (static_cast<std::uint64_t>(s.universe()) << 58));
  }
};
