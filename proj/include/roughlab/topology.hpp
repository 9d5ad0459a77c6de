#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "roughlab/neighborhood.hpp"
#include "roughlab/rational.hpp"

namespace roughlab {

inline constexpr std::size_t max_power_set_size = 20;

namespace detail {
inline bool family_order(std::uint64_t a, std::uint64_t b) {
  const auto ca = std::popcount(a), cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}
}  // namespace detail

/// A duplicate-free collection of subsets in canonical order (cardinality,
/// then bit pattern), so equal families compare byte-for-byte.
class SetFamily {
 public:
  SetFamily(Universe universe, std::vector<std::uint64_t> members)
      : universe_(std::move(universe)), members_(std::move(members)) {
    for (auto& m : members_) m &= universe_.full_bits();
    std::sort(members_.begin(), members_.end(), detail::family_order);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static SetFamily power_set(const Universe& u) {
    if (u.size() > max_power_set_size) throw SizeLimitError("power set too large");
    std::vector<std::uint64_t> ms(std::size_t{1} << u.size());
    for (std::size_t i = 0; i < ms.size(); ++i) ms[i] = i;
    return SetFamily(u, std::move(ms));
  }

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<std::uint64_t>& masks() const { return members_; }

  std::vector<Subset> members() const {
    std::vector<Subset> out;
    out.reserve(members_.size());
    for (auto m : members_) out.push_back(universe_.subset_bits(m));
    return out;
  }

  bool contains_mask(std::uint64_t m) const {
    return std::binary_search(members_.begin(), members_.end(), m, detail::family_order);
  }
  bool contains(const Subset& s) const {
    require_same_universe(universe_, s.universe());
    return contains_mask(s.bits());
  }

  /// True when every member of `other` is also a member of this family.
  bool includes(const SetFamily& other) const {
    require_same_universe(universe_, other.universe_);
    for (auto m : other.members_)
      if (!contains_mask(m)) return false;
    return true;
  }

  bool operator==(const SetFamily& o) const {
    return universe_ == o.universe_ && members_ == o.members_;
  }

 private:
  Universe universe_;
  std::vector<std::uint64_t> members_;
};

/// { F ⊆ U : N(s) \ F ∈ K for all s ∈ F }, by filtering the full power set.
/// Filtering is exact at this scale and doubles as the oracle for any future
/// optimized generator.
inline SetFamily generate_topology_ideal(const NeighborhoodSystem& n, const Ideal& k) {
  require_same_universe(n.universe, k.universe());
  if (n.universe.size() > max_power_set_size)
    throw SizeLimitError("topology generation supports n <= 20");
  const std::size_t count = std::size_t{1} << n.universe.size();
  std::vector<std::uint64_t> members;
  for (std::uint64_t f = 0; f < count; ++f) {
    bool ok = true;
    for (std::uint64_t rest = f; rest && ok; rest &= rest - 1) {
      const auto s = static_cast<std::size_t>(std::countr_zero(rest));
      ok = k.contains_bits(n.map[s].bits() & ~f);
    }
    if (ok) members.push_back(f);
  }
  return SetFamily(n.universe, std::move(members));
}

/// { F ⊆ U : N(s) ⊆ F for all s ∈ F }: the trivial-ideal case.
inline SetFamily generate_topology(const NeighborhoodSystem& n) {
  return generate_topology_ideal(n, Ideal::trivial(n.universe));
}

/// On a finite universe, checking ∅, U and closure under pairwise unions and
/// intersections suffices.
inline bool is_topology(const SetFamily& t) {
  if (!t.contains_mask(0) || !t.contains_mask(t.universe().full_bits())) return false;
  const auto& ms = t.masks();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t k = i + 1; k < ms.size(); ++k) {
      if (!t.contains_mask(ms[i] | ms[k])) return false;
      if (!t.contains_mask(ms[i] & ms[k])) return false;
    }
  return true;
}

struct TopoApproximationResult {
  Subset interior, closure, boundary;
  Accuracy accuracy;  // |interior| / |closure|, indefinite when closure is empty
};

inline TopoApproximationResult topo_approx(const SetFamily& t, const Subset& f) {
  require_same_universe(t.universe(), f.universe());
  if (!is_topology(t)) throw ConfigError("set family is not a topology");
  std::uint64_t interior = 0, open_disjoint = 0;
  for (auto m : t.masks()) {
    if ((m & ~f.bits()) == 0) interior |= m;
    if ((m & f.bits()) == 0) open_disjoint |= m;
  }
  // smallest closed superset = complement of the union of opens missing F
  const std::uint64_t closure = t.universe().full_bits() & ~open_disjoint;
  Accuracy accuracy;
  if (std::popcount(closure) != 0)
    accuracy = Rational(std::popcount(interior), std::popcount(closure));
  return TopoApproximationResult{t.universe().subset_bits(interior),
                                 t.universe().subset_bits(closure),
                                 t.universe().subset_bits(closure & ~interior), accuracy};
}

}  // namespace roughlab
