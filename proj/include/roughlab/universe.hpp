#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace roughlab {

/// Values from different universes were mixed, or an element is unknown.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or power-set sweep was requested beyond the supported size.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or literal.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent configuration (missing ideal, empty basis, non-topology input, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Subset;

/// An ordered finite set of distinct element names.
///
/// Every other value in the library (subsets, relations, ideals, neighborhood
/// systems, set families) carries a handle to its universe, and operations
/// refuse to mix values from different universes. Copies share storage and
/// are cheap. At most 64 elements, so a subset packs into one machine word.
class Universe {
 public:
  explicit Universe(std::vector<std::string> elements)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(elements))) {
    if (names_->empty()) throw DomainError("universe must not be empty");
    if (names_->size() > 64) throw SizeLimitError("universe larger than 64 elements");
    for (std::size_t i = 0; i < names_->size(); ++i)
      for (std::size_t k = i + 1; k < names_->size(); ++k)
        if ((*names_)[i] == (*names_)[k])
          throw DomainError("duplicate element name: " + (*names_)[i]);
  }

  /// The universe {x0, x1, ..., x<n-1>} used by the enumeration sweeps.
  static Universe canonical(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return Universe(std::move(names));
  }

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const {
    if (i >= names_->size()) throw DomainError("element index out of range");
    return (*names_)[i];
  }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == name) return i;
    return std::nullopt;
  }

  std::size_t index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw DomainError("unknown element: " + std::string(name));
  }

  std::uint64_t full_bits() const {
    return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
  }

  bool operator==(const Universe& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
  }

  Subset empty_set() const;
  Subset full_set() const;
  Subset singleton(std::size_t i) const;
  Subset subset_bits(std::uint64_t bits) const;
  Subset subset(std::initializer_list<std::string_view> names) const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

inline void require_same_universe(const Universe& a, const Universe& b) {
  if (!(a == b)) throw DomainError("values belong to different universes");
}

/// A subset of a universe, stored as a bit mask over element indices.
class Subset {
 public:
  Subset(Universe universe, std::uint64_t bits)
      : universe_(std::move(universe)), bits_(bits & universe_.full_bits()) {}

  const Universe& universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool full() const { return bits_ == universe_.full_bits(); }

  bool contains(std::size_t i) const {
    if (i >= universe_.size()) throw DomainError("element index out of range");
    return (bits_ >> i) & 1u;
  }
  bool contains(std::string_view name) const { return contains(universe_.index(name)); }

  Subset operator&(const Subset& o) const {
    require_same_universe(universe_, o.universe_);
    return Subset(universe_, bits_ & o.bits_);
  }
  Subset operator|(const Subset& o) const {
    require_same_universe(universe_, o.universe_);
    return Subset(universe_, bits_ | o.bits_);
  }
  Subset operator-(const Subset& o) const {
    require_same_universe(universe_, o.universe_);
    return Subset(universe_, bits_ & ~o.bits_);
  }
  Subset complement() const { return Subset(universe_, ~bits_); }

  bool is_subset_of(const Subset& o) const {
    require_same_universe(universe_, o.universe_);
    return (bits_ & ~o.bits_) == 0;
  }
  bool intersects(const Subset& o) const {
    require_same_universe(universe_, o.universe_);
    return (bits_ & o.bits_) != 0;
  }

  bool operator==(const Subset& o) const { return universe_ == o.universe_ && bits_ == o.bits_; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < universe_.size(); ++i)
      if ((bits_ >> i) & 1u) out.push_back(universe_.name(i));
    return out;
  }

  /// "{q,t}" in universe order; the empty set prints as "∅".
  std::string to_string() const {
    if (bits_ == 0) return "∅";
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < universe_.size(); ++i)
      if ((bits_ >> i) & 1u) {
        if (!first) out += ",";
        out += universe_.name(i);
        first = false;
      }
    out += "}";
    return out;
  }

 private:
  Universe universe_;
  std::uint64_t bits_;
};

inline Subset Universe::empty_set() const { return Subset(*this, 0); }
inline Subset Universe::full_set() const { return Subset(*this, full_bits()); }
inline Subset Universe::singleton(std::size_t i) const {
  if (i >= size()) throw DomainError("element index out of range");
  return Subset(*this, std::uint64_t{1} << i);
}
inline Subset Universe::subset_bits(std::uint64_t bits) const { return Subset(*this, bits); }
inline Subset Universe::subset(std::initializer_list<std::string_view> names) const {
  std::uint64_t bits = 0;
  for (auto n : names) bits |= std::uint64_t{1} << index(n);
  return Subset(*this, bits);
}

}  // namespace roughlab
