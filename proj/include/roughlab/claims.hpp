#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roughlab/approximation.hpp"
#include "roughlab/topology.hpp"

namespace roughlab {

/// Expected standing of a registered claim: a Theorem must hold on every
/// instance satisfying its hypothesis; a Refuted claim must admit a
/// counterexample somewhere.
enum class ClaimStatus { Theorem, Refuted };

/// Where and how a claim's assertion first failed on a concrete instance.
struct Violation {
  std::string detail;                 // e.g. "rho_a(x0)={x0} ⊄ ik_a(x0)=∅"
  std::optional<Kind> kind;           // kind at which it failed, when meaningful
  std::vector<std::string> elements;  // elements involved
};

/// A claim is a closed executable value: the quantifier structure lives in
/// its evaluator, which scans its instance in a fixed order and reports the
/// first violation, if any.
struct Claim {
  std::string id;
  std::string statement;
  std::vector<RelationProperty> hypothesis;
  ClaimStatus expected;
  std::function<std::optional<Violation>(const FiniteRelation&, const Ideal&)> evaluate;
};

enum class VerdictStatus { Holds, Fails, HypothesisUnmet };

inline std::string_view verdict_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::Fails: return "fails";
    case VerdictStatus::HypothesisUnmet: return "hypothesis-unmet";
  }
  return "?";
}

struct Verdict {
  VerdictStatus status;
  std::optional<Violation> violation;  // present iff status == Fails
};

struct Witness {
  FiniteRelation relation;
  Ideal ideal;
  Violation violation;
};

namespace detail {

inline std::string tag(std::string_view family, Kind j, std::string_view element) {
  return std::string(family) + "_" + std::string(kind_name(j)) + "(" + std::string(element) + ")";
}

inline std::optional<Violation> first_non_subset(const FiniteRelation& r,
                                                 const NeighborhoodSystem& small,
                                                 const NeighborhoodSystem& big,
                                                 std::string_view small_name,
                                                 std::string_view big_name, Kind small_kind,
                                                 Kind big_kind) {
  for (std::size_t s = 0; s < r.size(); ++s)
    if (!small.map[s].is_subset_of(big.map[s])) {
      const std::string& e = r.universe().name(s);
      return Violation{tag(small_name, small_kind, e) + "=" + small.map[s].to_string() +
                           " ⊄ " + tag(big_name, big_kind, e) + "=" + big.map[s].to_string(),
                       big_kind,
                       {e}};
    }
  return std::nullopt;
}

}  // namespace detail

/// The registered claims: the corrected statements (Theorem) and the refuted
/// originals (Refuted). Evaluators scan kinds in Ω order and elements in
/// universe order, so the first violation is deterministic.
inline const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = [] {
    std::vector<Claim> claims;

    claims.push_back(Claim{
        "ik-symmetric", "t ∈ ik_j(s) ⇔ s ∈ ik_j(t), for every j in Ω",
        {},
        ClaimStatus::Theorem,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : all_kinds) {
            auto sys = make_system(r, Family::OverlapIdeal, j, k);
            for (std::size_t s = 0; s < r.size(); ++s)
              for (std::size_t t = s + 1; t < r.size(); ++t)
                if (sys.map[s].contains(t) != sys.map[t].contains(s)) {
                  const std::string &es = r.universe().name(s), &et = r.universe().name(t);
                  return Violation{et + " ∈ " + detail::tag("ik", j, es) + " but " + es +
                                       " ∉ " + detail::tag("ik", j, et),
                                   j,
                                   {es, et}};
                }
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "reflexive-min-ik-within-ik",
        "reflexive R ⇒ ik_<j>(s) ⊆ ik_j(s), for j in {a,b,i,u}",
        {RelationProperty::Reflexive},
        ClaimStatus::Theorem,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : plain_kinds) {
            auto fine = make_system(r, Family::OverlapIdeal, minimal_counterpart(j), k);
            auto coarse = make_system(r, Family::OverlapIdeal, j, k);
            if (auto v = detail::first_non_subset(r, fine, coarse, "ik", "ik",
                                                  minimal_counterpart(j), j))
              return v;
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "preorder-min-ik-equals-ik",
        "preorder R ⇒ ik_<j>(s) = ik_j(s), for j in {a,b,i,u}",
        {RelationProperty::Preorder},
        ClaimStatus::Theorem,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : plain_kinds) {
            auto fine = make_system(r, Family::OverlapIdeal, minimal_counterpart(j), k);
            auto coarse = make_system(r, Family::OverlapIdeal, j, k);
            for (std::size_t s = 0; s < r.size(); ++s)
              if (!(fine.map[s] == coarse.map[s])) {
                const std::string& e = r.universe().name(s);
                return Violation{detail::tag("ik", minimal_counterpart(j), e) + "=" +
                                     fine.map[s].to_string() + " ≠ " + detail::tag("ik", j, e) +
                                     "=" + coarse.map[s].to_string(),
                                 j,
                                 {e}};
              }
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "reflexive-rho-within-omega",
        "reflexive R ⇒ rho_j(s) ∩ omega_j(s) = rho_j(s) and rho_j(s) ∪ omega_j(s) = omega_j(s), "
        "for every j in Ω",
        {RelationProperty::Reflexive},
        ClaimStatus::Theorem,
        [](const FiniteRelation& r, const Ideal&) -> std::optional<Violation> {
          for (Kind j : all_kinds) {
            auto rho = make_system(r, Family::Adhesion, j);
            auto om = make_system(r, Family::Omega, j);
            if (auto v = detail::first_non_subset(r, rho, om, "rho", "omega", j, j)) return v;
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "symmetric-ik-kinds-collapse",
        "symmetric R ⇒ ik_i = ik_a = ik_b = ik_u and ik_<i> = ik_<a> = ik_<b> = ik_<u>",
        {RelationProperty::Symmetric},
        ClaimStatus::Theorem,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          const std::array<std::array<Kind, 4>, 2> groups = {
              std::array<Kind, 4>{Kind::Inter, Kind::After, Kind::Before, Kind::Union},
              std::array<Kind, 4>{Kind::MinInter, Kind::MinAfter, Kind::MinBefore, Kind::MinUnion}};
          for (const auto& group : groups) {
            auto head = make_system(r, Family::OverlapIdeal, group[0], k);
            for (std::size_t gi = 1; gi < group.size(); ++gi) {
              auto other = make_system(r, Family::OverlapIdeal, group[gi], k);
              for (std::size_t s = 0; s < r.size(); ++s)
                if (!(head.map[s] == other.map[s])) {
                  const std::string& e = r.universe().name(s);
                  return Violation{detail::tag("ik", group[0], e) + "=" + head.map[s].to_string() +
                                       " ≠ " + detail::tag("ik", group[gi], e) + "=" +
                                       other.map[s].to_string(),
                                   group[gi],
                                   {e}};
                }
            }
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "symtrans-omega-rigid",
        "symmetric and transitive R ⇒ (s ∈ omega_j(t) ⇒ omega_j(s) = omega_j(t)), for every j",
        {RelationProperty::Symmetric, RelationProperty::Transitive},
        ClaimStatus::Theorem,
        [](const FiniteRelation& r, const Ideal&) -> std::optional<Violation> {
          for (Kind j : all_kinds) {
            auto om = make_system(r, Family::Omega, j);
            for (std::size_t t = 0; t < r.size(); ++t)
              for (std::size_t s = 0; s < r.size(); ++s)
                if (om.map[t].contains(s) && !(om.map[s] == om.map[t])) {
                  const std::string &es = r.universe().name(s), &et = r.universe().name(t);
                  return Violation{es + " ∈ " + detail::tag("omega", j, et) + " but " +
                                       detail::tag("omega", j, es) + "=" + om.map[s].to_string() +
                                       " ≠ " + om.map[t].to_string(),
                                   j,
                                   {es, et}};
                }
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "symtrans-ik-within-omega",
        "symmetric and transitive R ⇒ ik_j(s) ⊆ omega_j(s), for every j",
        {RelationProperty::Symmetric, RelationProperty::Transitive},
        ClaimStatus::Theorem,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : all_kinds) {
            auto ik = make_system(r, Family::OverlapIdeal, j, k);
            auto om = make_system(r, Family::Omega, j);
            if (auto v = detail::first_non_subset(r, ik, om, "ik", "omega", j, j)) return v;
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "symtrans-ik-nested",
        "symmetric and transitive R ⇒ (s ∈ ik_j(t) ⇒ ik_j(s) ⊆ ik_j(t)), for every j",
        {RelationProperty::Symmetric, RelationProperty::Transitive},
        ClaimStatus::Theorem,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : all_kinds) {
            auto ik = make_system(r, Family::OverlapIdeal, j, k);
            for (std::size_t t = 0; t < r.size(); ++t)
              for (std::size_t s = 0; s < r.size(); ++s)
                if (ik.map[t].contains(s) && !ik.map[s].is_subset_of(ik.map[t])) {
                  const std::string &es = r.universe().name(s), &et = r.universe().name(t);
                  return Violation{es + " ∈ " + detail::tag("ik", j, et) + " but " +
                                       detail::tag("ik", j, es) + "=" + ik.map[s].to_string() +
                                       " ⊄ " + ik.map[t].to_string(),
                                   j,
                                   {es, et}};
                }
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "reflexive-tau-refines-min-tau",
        "reflexive R ⇒ tau^{ik_j} ⊆ tau^{ik_<j>}, for j in {a,b,i,u}",
        {RelationProperty::Reflexive},
        ClaimStatus::Theorem,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : plain_kinds) {
            auto coarse = generate_topology_ideal(make_system(r, Family::OverlapIdeal, j, k), k);
            auto fine = generate_topology_ideal(
                make_system(r, Family::OverlapIdeal, minimal_counterpart(j), k), k);
            for (auto m : coarse.masks())
              if (!fine.contains_mask(m))
                return Violation{r.universe().subset_bits(m).to_string() + " ∈ tau^{ik_" +
                                     std::string(kind_name(j)) + "} but ∉ tau^{ik_" +
                                     std::string(kind_name(minimal_counterpart(j))) + "}",
                                 j,
                                 {}};
          }
          return std::nullopt;
        }});

    // --- refuted originals ---

    claims.push_back(Claim{
        "reflexive-rho-omega-within-ik",
        "reflexive R ⇒ rho_j(s) ∪ omega_j(s) ⊆ ik_j(s), for every j in Ω",
        {RelationProperty::Reflexive},
        ClaimStatus::Refuted,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : all_kinds) {
            auto rho = make_system(r, Family::Adhesion, j);
            auto om = make_system(r, Family::Omega, j);
            auto ik = make_system(r, Family::OverlapIdeal, j, k);
            for (std::size_t s = 0; s < r.size(); ++s) {
              Subset both = rho.map[s] | om.map[s];
              if (!both.is_subset_of(ik.map[s])) {
                const std::string& e = r.universe().name(s);
                return Violation{detail::tag("rho", j, e) + " ∪ " + detail::tag("omega", j, e) +
                                     "=" + both.to_string() + " ⊄ " + detail::tag("ik", j, e) +
                                     "=" + ik.map[s].to_string(),
                                 j,
                                 {e}};
              }
            }
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "serial-rho-within-ik",
        "serial R ⇒ rho_j(s) ⊆ ik_j(s), for every j in Ω",
        {RelationProperty::Serial},
        ClaimStatus::Refuted,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : all_kinds) {
            auto rho = make_system(r, Family::Adhesion, j);
            auto ik = make_system(r, Family::OverlapIdeal, j, k);
            if (auto v = detail::first_non_subset(r, rho, ik, "rho", "ik", j, j)) return v;
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "transitive-ik-within-min-ik",
        "transitive R ⇒ ik_j(s) ⊆ ik_<j>(s), for j in {a,b,i,u}",
        {RelationProperty::Transitive},
        ClaimStatus::Refuted,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : plain_kinds) {
            auto coarse = make_system(r, Family::OverlapIdeal, j, k);
            auto fine = make_system(r, Family::OverlapIdeal, minimal_counterpart(j), k);
            if (auto v = detail::first_non_subset(r, coarse, fine, "ik", "ik", j,
                                                  minimal_counterpart(j)))
              return v;
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "reflexive-min-tau-within-tau",
        "reflexive R ⇒ tau^{ik_<j>} ⊆ tau^{ik_j}, for j in {a,b,i,u}",
        {RelationProperty::Reflexive},
        ClaimStatus::Refuted,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : plain_kinds) {
            auto coarse = generate_topology_ideal(make_system(r, Family::OverlapIdeal, j, k), k);
            auto fine = generate_topology_ideal(
                make_system(r, Family::OverlapIdeal, minimal_counterpart(j), k), k);
            for (auto m : fine.masks())
              if (!coarse.contains_mask(m))
                return Violation{r.universe().subset_bits(m).to_string() + " ∈ tau^{ik_" +
                                     std::string(kind_name(minimal_counterpart(j))) +
                                     "} but ∉ tau^{ik_" + std::string(kind_name(j)) + "}",
                                 j,
                                 {}};
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "overlap-outside-ideal",
        "omega_j(x) ∩ omega_j(y) ≠ ∅ ⇒ omega_j(x) ∩ omega_j(y) ∉ K, for every j, x, y",
        {},
        ClaimStatus::Refuted,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : all_kinds) {
            auto om = make_system(r, Family::Omega, j);
            for (std::size_t x = 0; x < r.size(); ++x)
              for (std::size_t y = 0; y < r.size(); ++y) {
                Subset meet = om.map[x] & om.map[y];
                if (!meet.empty() && k.contains(meet)) {
                  const std::string &ex = r.universe().name(x), &ey = r.universe().name(y);
                  return Violation{detail::tag("omega", j, ex) + " ∩ " +
                                       detail::tag("omega", j, ey) + "=" + meet.to_string() +
                                       " is nonempty yet belongs to the ideal with carrier " +
                                       k.carrier().to_string(),
                                   j,
                                   {ex, ey}};
                }
              }
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "symtrans-omega-within-ik",
        "symmetric and transitive R ⇒ omega_j(s) ⊆ ik_j(s), for every j",
        {RelationProperty::Symmetric, RelationProperty::Transitive},
        ClaimStatus::Refuted,
        [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
          for (Kind j : all_kinds) {
            auto om = make_system(r, Family::Omega, j);
            auto ik = make_system(r, Family::OverlapIdeal, j, k);
            if (auto v = detail::first_non_subset(r, om, ik, "omega", "ik", j, j)) return v;
          }
          return std::nullopt;
        }});

    return claims;
  }();
  return registry;
}

inline const Claim* find_claim(std::string_view id) {
  for (const Claim& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

/// Evaluate one claim on one instance. A relation that misses the hypothesis
/// gets the explicit HypothesisUnmet status, never a bare "fails".
inline Verdict check_claim(const Claim& c, const FiniteRelation& r, const Ideal& k) {
  require_same_universe(r.universe(), k.universe());
  for (RelationProperty p : c.hypothesis)
    if (!r.satisfies(p)) return Verdict{VerdictStatus::HypothesisUnmet, std::nullopt};
  if (auto v = c.evaluate(r, k)) return Verdict{VerdictStatus::Fails, std::move(v)};
  return Verdict{VerdictStatus::Holds, std::nullopt};
}

/// Scan relations (counter order) × ideals (carrier order) for n = 1..max_n
/// and return the first instance violating the claim. Deterministic: repeated
/// searches return the identical witness. The default size guard is 4;
/// callers may raise it, hard-capped at 5.
inline std::optional<Witness> search_counterexample(const Claim& c, std::size_t max_n,
                                                    std::size_t size_cap = 4) {
  if (size_cap > max_enumeration_size) size_cap = max_enumeration_size;
  if (max_n < 1 || max_n > size_cap)
    throw SizeLimitError("search size must satisfy 1 <= max_n <= " + std::to_string(size_cap));
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const FiniteRelation& r : enumerate_relations(n)) {
      bool hyp = true;
      for (RelationProperty p : c.hypothesis)
        if (!r.satisfies(p)) {
          hyp = false;
          break;
        }
      if (!hyp) continue;
      for (const Ideal& k : enumerate_ideals(r.universe()))
        if (auto v = c.evaluate(r, k)) return Witness{r, k, std::move(*v)};
    }
  }
  return std::nullopt;
}

}  // namespace roughlab
