#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <vector>

#include "roughlab/universe.hpp"

namespace roughlab {

/// An ideal of subsets: a nonempty family closed under subsets and finite
/// unions. On a finite universe such a family is exactly the power set of
/// the union of its members, so an ideal is represented by that union (its
/// carrier): A belongs to the ideal iff A ⊆ carrier. Membership is one mask
/// test and there are exactly 2^n ideals on an n-element universe.
///
/// The improper ideal (carrier = whole universe, i.e. the full power set) is
/// permitted; nothing in the closure laws rules it out.
class Ideal {
 public:
  explicit Ideal(Subset carrier) : carrier_(std::move(carrier)) {}

  /// The smallest ideal, {∅}.
  static Ideal trivial(const Universe& u) { return Ideal(u.empty_set()); }

  /// Smallest ideal containing every basis member; its carrier is the union
  /// of the basis. The basis must be nonempty (a basis {∅} is fine).
  static Ideal from_basis(const std::vector<Subset>& basis) {
    if (basis.empty()) throw ConfigError("ideal basis must not be empty");
    Subset carrier = basis.front();
    for (std::size_t i = 1; i < basis.size(); ++i) carrier = carrier | basis[i];
    return Ideal(std::move(carrier));
  }

  const Universe& universe() const { return carrier_.universe(); }
  const Subset& carrier() const { return carrier_; }
  bool improper() const { return carrier_.full(); }

  bool contains(const Subset& a) const {
    require_same_universe(universe(), a.universe());
    return contains_bits(a.bits());
  }
  bool contains_bits(std::uint64_t bits) const { return (bits & ~carrier_.bits()) == 0; }

  /// The materialized family (all 2^|carrier| members) in canonical order
  /// (cardinality, then bit pattern). Guarded to carriers of at most 20
  /// elements.
  std::vector<Subset> members() const {
    if (carrier_.count() > 20) throw SizeLimitError("ideal too large to materialize");
    std::vector<std::uint64_t> masks;
    std::uint64_t sub = carrier_.bits();
    while (true) {
      masks.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & carrier_.bits();
    }
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
      auto ca = std::popcount(a), cb = std::popcount(b);
      return ca != cb ? ca < cb : a < b;
    });
    std::vector<Subset> out;
    out.reserve(masks.size());
    for (auto m : masks) out.push_back(universe().subset_bits(m));
    return out;
  }

  bool operator==(const Ideal& o) const { return carrier_ == o.carrier_; }

 private:
  Subset carrier_;
};

/// One ideal per carrier, in ascending carrier-mask order (2^n ideals).
class IdealRange {
 public:
  explicit IdealRange(Universe universe) : universe_(std::move(universe)) {
    if (universe_.size() > 32) throw SizeLimitError("ideal enumeration supports n <= 32");
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Ideal;
    using difference_type = std::ptrdiff_t;

    iterator(const IdealRange* range, std::uint64_t carrier) : range_(range), carrier_(carrier) {}
    Ideal operator*() const { return Ideal(range_->universe_.subset_bits(carrier_)); }
    iterator& operator++() {
      ++carrier_;
      return *this;
    }
    bool operator==(const iterator& o) const { return carrier_ == o.carrier_; }
    bool operator!=(const iterator& o) const { return carrier_ != o.carrier_; }

   private:
    const IdealRange* range_;
    std::uint64_t carrier_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, std::uint64_t{1} << universe_.size()); }

 private:
  Universe universe_;
};

inline IdealRange enumerate_ideals(const Universe& u) { return IdealRange(u); }

}  // namespace roughlab
