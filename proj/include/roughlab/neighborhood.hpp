#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "roughlab/ideal.hpp"
#include "roughlab/relation.hpp"

namespace roughlab {

/// The eight neighborhood kinds.
///
/// After/Before are the successor and predecessor sets of a point. MinAfter
/// (MinBefore) is the intersection of every after (before) set that contains
/// the point, and is empty when no such set exists. Inter/Union are the
/// pointwise intersection/union of After and Before; MinInter/MinUnion
/// likewise of MinAfter and MinBefore. The combined kinds are always derived
/// from their two constituents, for every neighborhood family below.
///
/// On the command line and in reports the kinds are spelled
/// "a", "b", "<a>", "<b>", "i", "u", "<i>", "<u>".
enum class Kind : unsigned char { After, Before, MinAfter, MinBefore, Inter, Union, MinInter, MinUnion };

inline constexpr std::array<Kind, 8> all_kinds = {Kind::After,    Kind::Before, Kind::MinAfter,
                                                  Kind::MinBefore, Kind::Inter,  Kind::Union,
                                                  Kind::MinInter,  Kind::MinUnion};

/// The four kinds that have a Min* counterpart.
inline constexpr std::array<Kind, 4> plain_kinds = {Kind::After, Kind::Before, Kind::Inter,
                                                    Kind::Union};

inline Kind minimal_counterpart(Kind j) {
  switch (j) {
    case Kind::After: return Kind::MinAfter;
    case Kind::Before: return Kind::MinBefore;
    case Kind::Inter: return Kind::MinInter;
    case Kind::Union: return Kind::MinUnion;
    default: return j;
  }
}

inline std::string_view kind_name(Kind j) {
  switch (j) {
    case Kind::After: return "a";
    case Kind::Before: return "b";
    case Kind::MinAfter: return "<a>";
    case Kind::MinBefore: return "<b>";
    case Kind::Inter: return "i";
    case Kind::Union: return "u";
    case Kind::MinInter: return "<i>";
    case Kind::MinUnion: return "<u>";
  }
  return "?";
}

inline std::optional<Kind> parse_kind(std::string_view s) {
  for (Kind j : all_kinds)
    if (kind_name(j) == s) return j;
  return std::nullopt;
}

/// The four neighborhood families:
///  - Omega: the base neighborhoods taken straight from the relation;
///  - Adhesion: elements whose base neighborhood is identical ("rho");
///  - Overlap: elements whose base neighborhood meets the given one ("i");
///  - OverlapIdeal: overlap that an ideal cannot discard ("ik") — the
///    intersection must fall outside the ideal, not merely be nonempty.
enum class Family : unsigned char { Omega, Adhesion, Overlap, OverlapIdeal };

inline constexpr std::array<Family, 4> all_families = {Family::Omega, Family::Adhesion,
                                                       Family::Overlap, Family::OverlapIdeal};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Omega: return "omega";
    case Family::Adhesion: return "rho";
    case Family::Overlap: return "i";
    case Family::OverlapIdeal: return "ik";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (Family f : all_families)
    if (family_name(f) == s) return f;
  return std::nullopt;
}

namespace detail {

struct OmegaTables {
  std::vector<std::uint64_t> after, before, min_after, min_before;
};

/// min(s) = intersection of base[t] over all t with s in base[t]; empty when
/// that family of sets is empty.
inline std::vector<std::uint64_t> minimal_of(const std::vector<std::uint64_t>& base,
                                             std::uint64_t full) {
  const std::size_t n = base.size();
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::uint64_t acc = full;
    bool any = false;
    for (std::size_t t = 0; t < n; ++t)
      if ((base[t] >> s) & 1u) {
        acc &= base[t];
        any = true;
      }
    out[s] = any ? acc : 0;
  }
  return out;
}

inline OmegaTables omega_tables(const FiniteRelation& r) {
  const std::size_t n = r.size();
  const std::uint64_t full = r.universe().full_bits();
  OmegaTables t;
  t.after.resize(n);
  t.before.resize(n);
  for (std::size_t s = 0; s < n; ++s) t.after[s] = r.after_bits(s);
  for (std::size_t s = 0; s < n; ++s) t.before[s] = r.before_bits(s);
  t.min_after = minimal_of(t.after, full);
  t.min_before = minimal_of(t.before, full);
  return t;
}

inline const std::vector<std::uint64_t>& base_table(const OmegaTables& t, Kind base) {
  switch (base) {
    case Kind::After: return t.after;
    case Kind::Before: return t.before;
    case Kind::MinAfter: return t.min_after;
    case Kind::MinBefore: return t.min_before;
    default: throw DomainError("not a base kind");
  }
}

/// Evaluate any kind by combining the four base kinds.
template <class BaseEval>
std::uint64_t combine(Kind j, BaseEval&& base) {
  switch (j) {
    case Kind::After:
    case Kind::Before:
    case Kind::MinAfter:
    case Kind::MinBefore: return base(j);
    case Kind::Inter: return base(Kind::After) & base(Kind::Before);
    case Kind::Union: return base(Kind::After) | base(Kind::Before);
    case Kind::MinInter: return base(Kind::MinAfter) & base(Kind::MinBefore);
    case Kind::MinUnion: return base(Kind::MinAfter) | base(Kind::MinBefore);
  }
  return 0;
}

inline std::uint64_t omega_bits(const OmegaTables& t, Kind j, std::size_t s) {
  return combine(j, [&](Kind b) { return base_table(t, b)[s]; });
}

inline std::uint64_t adhesion_bits(const OmegaTables& t, Kind j, std::size_t s) {
  return combine(j, [&](Kind b) {
    const auto& m = base_table(t, b);
    std::uint64_t out = 0;
    for (std::size_t e = 0; e < m.size(); ++e)
      if (m[e] == m[s]) out |= std::uint64_t{1} << e;
    return out;
  });
}

inline std::uint64_t overlap_bits(const OmegaTables& t, Kind j, std::size_t s) {
  return combine(j, [&](Kind b) {
    const auto& m = base_table(t, b);
    std::uint64_t out = 0;
    for (std::size_t e = 0; e < m.size(); ++e)
      if (m[e] & m[s]) out |= std::uint64_t{1} << e;
    return out;
  });
}

inline std::uint64_t overlap_ideal_bits(const OmegaTables& t, std::uint64_t carrier, Kind j,
                                        std::size_t s) {
  return combine(j, [&](Kind b) {
    const auto& m = base_table(t, b);
    std::uint64_t out = 0;
    for (std::size_t e = 0; e < m.size(); ++e)
      if ((m[e] & m[s]) & ~carrier) out |= std::uint64_t{1} << e;
    return out;
  });
}

}  // namespace detail

inline Subset omega(const FiniteRelation& r, Kind j, std::size_t s) {
  if (s >= r.size()) throw DomainError("element index out of range");
  return r.universe().subset_bits(detail::omega_bits(detail::omega_tables(r), j, s));
}

/// rho_j(s): the elements whose omega_j-neighborhood equals omega_j(s).
inline Subset adhesion(const FiniteRelation& r, Kind j, std::size_t s) {
  if (s >= r.size()) throw DomainError("element index out of range");
  return r.universe().subset_bits(detail::adhesion_bits(detail::omega_tables(r), j, s));
}

/// i_j(s): the elements whose omega_j-neighborhood meets omega_j(s).
inline Subset overlap(const FiniteRelation& r, Kind j, std::size_t s) {
  if (s >= r.size()) throw DomainError("element index out of range");
  return r.universe().subset_bits(detail::overlap_bits(detail::omega_tables(r), j, s));
}

/// ik_j(s): the elements whose omega_j-intersection with omega_j(s) lies
/// outside the ideal.
inline Subset overlap_ideal(const FiniteRelation& r, const Ideal& k, Kind j, std::size_t s) {
  require_same_universe(r.universe(), k.universe());
  if (s >= r.size()) throw DomainError("element index out of range");
  return r.universe().subset_bits(
      detail::overlap_ideal_bits(detail::omega_tables(r), k.carrier().bits(), j, s));
}

inline Subset omega(const FiniteRelation& r, Kind j, std::string_view element) {
  return omega(r, j, r.universe().index(element));
}
inline Subset adhesion(const FiniteRelation& r, Kind j, std::string_view element) {
  return adhesion(r, j, r.universe().index(element));
}
inline Subset overlap(const FiniteRelation& r, Kind j, std::string_view element) {
  return overlap(r, j, r.universe().index(element));
}
inline Subset overlap_ideal(const FiniteRelation& r, const Ideal& k, Kind j,
                            std::string_view element) {
  return overlap_ideal(r, k, j, r.universe().index(element));
}

/// A fully materialized element → neighborhood map for one family and kind.
struct NeighborhoodSystem {
  Universe universe;
  Family family;
  Kind kind;
  std::optional<Ideal> ideal;  // present iff family == OverlapIdeal
  std::vector<Subset> map;

  const Subset& at(std::size_t i) const {
    if (i >= map.size()) throw DomainError("element index out of range");
    return map[i];
  }
  const Subset& at(std::string_view element) const { return map[universe.index(element)]; }
};

inline NeighborhoodSystem make_system(const FiniteRelation& r, Family f, Kind j,
                                      std::optional<Ideal> ideal = std::nullopt) {
  if (f == Family::OverlapIdeal && !ideal)
    throw ConfigError("family ik requires an ideal");
  if (f != Family::OverlapIdeal && ideal)
    throw ConfigError("family " + std::string(family_name(f)) + " takes no ideal");
  if (ideal) require_same_universe(r.universe(), ideal->universe());

  const auto tables = detail::omega_tables(r);
  const std::uint64_t carrier = ideal ? ideal->carrier().bits() : 0;
  NeighborhoodSystem sys{r.universe(), f, j, std::move(ideal), {}};
  sys.map.reserve(r.size());
  for (std::size_t s = 0; s < r.size(); ++s) {
    std::uint64_t bits = 0;
    switch (f) {
      case Family::Omega: bits = detail::omega_bits(tables, j, s); break;
      case Family::Adhesion: bits = detail::adhesion_bits(tables, j, s); break;
      case Family::Overlap: bits = detail::overlap_bits(tables, j, s); break;
      case Family::OverlapIdeal: bits = detail::overlap_ideal_bits(tables, carrier, j, s); break;
    }
    sys.map.push_back(r.universe().subset_bits(bits));
  }
  return sys;
}

}  // namespace roughlab
