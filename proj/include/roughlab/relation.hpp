#pragma once

#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "roughlab/universe.hpp"

namespace roughlab {

enum class RelationProperty { Serial, Reflexive, Symmetric, Transitive, Preorder, Equivalence };

inline constexpr std::array<RelationProperty, 6> all_relation_properties = {
    RelationProperty::Serial,     RelationProperty::Reflexive, RelationProperty::Symmetric,
    RelationProperty::Transitive, RelationProperty::Preorder,  RelationProperty::Equivalence};

inline std::string_view property_name(RelationProperty p) {
  switch (p) {
    case RelationProperty::Serial: return "serial";
    case RelationProperty::Reflexive: return "reflexive";
    case RelationProperty::Symmetric: return "symmetric";
    case RelationProperty::Transitive: return "transitive";
    case RelationProperty::Preorder: return "preorder";
    case RelationProperty::Equivalence: return "equivalence";
  }
  return "?";
}

/// A binary relation on a finite universe, stored as one successor mask per
/// element. Immutable after construction.
class FiniteRelation {
 public:
  explicit FiniteRelation(Universe universe)
      : universe_(std::move(universe)), rows_(universe_.size(), 0) {}

  FiniteRelation(Universe universe, std::vector<std::uint64_t> rows)
      : universe_(std::move(universe)), rows_(std::move(rows)) {
    if (rows_.size() != universe_.size()) throw DomainError("relation row count != universe size");
    for (auto& r : rows_) r &= universe_.full_bits();
  }

  /// Duplicate pairs are idempotent; unknown names throw DomainError.
  static FiniteRelation from_pairs(Universe universe,
                                   const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::uint64_t> rows(universe.size(), 0);
    for (const auto& [a, b] : pairs) rows[universe.index(a)] |= std::uint64_t{1} << universe.index(b);
    return FiniteRelation(std::move(universe), std::move(rows));
  }

  /// Decode from the row-major little-endian bit counter (bit s*n+t <=> sRt).
  /// Only defined while the full matrix fits in one word (n <= 8).
  static FiniteRelation from_code(Universe universe, std::uint64_t code) {
    const std::size_t n = universe.size();
    if (n * n > 64) throw SizeLimitError("relation code requires n*n <= 64");
    std::vector<std::uint64_t> rows(n, 0);
    const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
    for (std::size_t s = 0; s < n; ++s) rows[s] = (code >> (s * n)) & row_mask;
    return FiniteRelation(std::move(universe), std::move(rows));
  }

  std::uint64_t code() const {
    const std::size_t n = size();
    if (n * n > 64) throw SizeLimitError("relation code requires n*n <= 64");
    std::uint64_t code = 0;
    for (std::size_t s = 0; s < n; ++s) code |= rows_[s] << (s * n);
    return code;
  }

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }

  bool related(std::size_t s, std::size_t t) const { return (after_bits(s) >> t) & 1u; }

  std::uint64_t after_bits(std::size_t s) const {
    if (s >= rows_.size()) throw DomainError("element index out of range");
    return rows_[s];
  }
  std::uint64_t before_bits(std::size_t t) const {
    if (t >= rows_.size()) throw DomainError("element index out of range");
    std::uint64_t out = 0;
    for (std::size_t s = 0; s < rows_.size(); ++s)
      if ((rows_[s] >> t) & 1u) out |= std::uint64_t{1} << s;
    return out;
  }
  Subset after_set(std::size_t s) const { return universe_.subset_bits(after_bits(s)); }
  Subset before_set(std::size_t t) const { return universe_.subset_bits(before_bits(t)); }

  /// All pairs in row-major order.
  std::vector<std::pair<std::string, std::string>> pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t s = 0; s < size(); ++s)
      for (std::size_t t = 0; t < size(); ++t)
        if (related(s, t)) out.emplace_back(universe_.name(s), universe_.name(t));
    return out;
  }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (auto r : rows_) c += static_cast<std::size_t>(std::popcount(r));
    return c;
  }

  bool satisfies(RelationProperty p) const {
    const std::size_t n = size();
    switch (p) {
      case RelationProperty::Serial:
        for (auto r : rows_)
          if (r == 0) return false;
        return true;
      case RelationProperty::Reflexive:
        for (std::size_t s = 0; s < n; ++s)
          if (!((rows_[s] >> s) & 1u)) return false;
        return true;
      case RelationProperty::Symmetric:
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t t = s + 1; t < n; ++t)
            if (related(s, t) != related(t, s)) return false;
        return true;
      case RelationProperty::Transitive:
        // sRp and pRt imply sRt  <=>  rows[p] ⊆ rows[s] whenever sRp
        for (std::size_t s = 0; s < n; ++s)
          for (std::uint64_t m = rows_[s]; m; m &= m - 1) {
            std::size_t mid = static_cast<std::size_t>(std::countr_zero(m));
            if (rows_[mid] & ~rows_[s]) return false;
          }
        return true;
      case RelationProperty::Preorder:
        return satisfies(RelationProperty::Reflexive) && satisfies(RelationProperty::Transitive);
      case RelationProperty::Equivalence:
        return satisfies(RelationProperty::Reflexive) && satisfies(RelationProperty::Symmetric) &&
               satisfies(RelationProperty::Transitive);
    }
    return false;
  }

  bool operator==(const FiniteRelation& o) const {
    return universe_ == o.universe_ && rows_ == o.rows_;
  }

 private:
  Universe universe_;
  std::vector<std::uint64_t> rows_;
};

inline bool has_property(const FiniteRelation& r, RelationProperty p) { return r.satisfies(p); }

inline constexpr std::size_t max_enumeration_size = 5;

/// All 2^(n*n) relations on the canonical n-element universe, yielded in
/// row-major little-endian counter order, optionally restricted to relations
/// with one property. Guarded to n <= 5.
class RelationRange {
 public:
  explicit RelationRange(std::size_t n, std::optional<RelationProperty> filter = std::nullopt)
      : universe_(Universe::canonical(n == 0 ? 1 : n)), filter_(filter) {
    if (n < 1 || n > max_enumeration_size)
      throw SizeLimitError("relation enumeration supports 1 <= n <= 5");
  }

  std::uint64_t total() const {
    return std::uint64_t{1} << (universe_.size() * universe_.size());
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FiniteRelation;
    using difference_type = std::ptrdiff_t;

    iterator(const RelationRange* range, std::uint64_t code) : range_(range), code_(code) {
      settle();
    }

    FiniteRelation operator*() const {
      return FiniteRelation::from_code(range_->universe_, code_);
    }
    iterator& operator++() {
      ++code_;
      settle();
      return *this;
    }
    bool operator==(const iterator& o) const { return code_ == o.code_; }
    bool operator!=(const iterator& o) const { return code_ != o.code_; }

   private:
    void settle() {
      if (!range_->filter_) return;
      const std::uint64_t limit = range_->total();
      while (code_ < limit &&
             !FiniteRelation::from_code(range_->universe_, code_).satisfies(*range_->filter_))
        ++code_;
    }
    const RelationRange* range_;
    std::uint64_t code_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, total()); }
  const Universe& universe() const { return universe_; }

 private:
  Universe universe_;
  std::optional<RelationProperty> filter_;
};

inline RelationRange enumerate_relations(std::size_t n,
                                         std::optional<RelationProperty> filter = std::nullopt) {
  return RelationRange(n, filter);
}

}  // namespace roughlab
