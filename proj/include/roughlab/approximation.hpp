#pragma once

#include <cstdint>

#include "roughlab/neighborhood.hpp"
#include "roughlab/rational.hpp"

namespace roughlab {

/// The two accuracy formulas in use:
///  - IntersectOverUnion: |lower ∩ F| / |upper ∪ F|;
///  - PlainRatio:         |lower| / |upper|  (the adhesion-family convention).
enum class AccuracyVariant { IntersectOverUnion, PlainRatio };

inline std::string_view variant_name(AccuracyVariant v) {
  return v == AccuracyVariant::IntersectOverUnion ? "iou" : "plain";
}

inline std::optional<AccuracyVariant> parse_variant(std::string_view s) {
  if (s == "iou") return AccuracyVariant::IntersectOverUnion;
  if (s == "plain") return AccuracyVariant::PlainRatio;
  return std::nullopt;
}

struct ApproximationResult {
  Subset lower, upper, boundary;
  Accuracy accuracy;
  bool exact;  // lower == upper
};

/// One engine covers all the approximation operators in the taxonomy: pick a
/// neighborhood system N and an ideal K, then
///   lower(F) = { s : N(s) \ F ∈ K },   upper(F) = { s : N(s) ∩ F ∉ K }.
/// With the trivial ideal this degenerates to the classical pair
/// N(s) ⊆ F / N(s) ∩ F ≠ ∅.
inline Subset lower_approx(const NeighborhoodSystem& n, const Ideal& k, const Subset& f) {
  require_same_universe(n.universe, k.universe());
  require_same_universe(n.universe, f.universe());
  std::uint64_t out = 0;
  for (std::size_t s = 0; s < n.map.size(); ++s)
    if (k.contains_bits(n.map[s].bits() & ~f.bits())) out |= std::uint64_t{1} << s;
  return n.universe.subset_bits(out);
}

inline Subset upper_approx(const NeighborhoodSystem& n, const Ideal& k, const Subset& f) {
  require_same_universe(n.universe, k.universe());
  require_same_universe(n.universe, f.universe());
  std::uint64_t out = 0;
  for (std::size_t s = 0; s < n.map.size(); ++s)
    if (!k.contains_bits(n.map[s].bits() & f.bits())) out |= std::uint64_t{1} << s;
  return n.universe.subset_bits(out);
}

/// Boundary, exactness and accuracy for one subset.
///
/// Zero-denominator convention: when F, lower and upper are all empty the
/// empty set is exact and its accuracy is 1; any other vanishing denominator
/// leaves the accuracy indefinite.
inline ApproximationResult approx_report(const NeighborhoodSystem& n, const Ideal& k,
                                         const Subset& f, AccuracyVariant variant) {
  Subset lower = lower_approx(n, k, f);
  Subset upper = upper_approx(n, k, f);
  Subset boundary = upper - lower;
  const bool exact = lower == upper;

  std::size_t num, den;
  if (variant == AccuracyVariant::IntersectOverUnion) {
    num = (lower & f).count();
    den = (upper | f).count();
  } else {
    num = lower.count();
    den = upper.count();
  }

  Accuracy accuracy;
  if (den != 0)
    accuracy = Rational(static_cast<long long>(num), static_cast<long long>(den));
  else if (f.empty() && lower.empty() && upper.empty())
    accuracy = Rational(1, 1);
  return ApproximationResult{lower, upper, boundary, accuracy, exact};
}

}  // namespace roughlab
