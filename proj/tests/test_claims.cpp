#include <gtest/gtest.h>

#include <set>

#include <roughlab/claims.hpp>
#include <roughlab/fixtures.hpp>

namespace roughlab {
namespace {

const Claim& claim(std::string_view id) {
  const Claim* c = find_claim(id);
  if (!c) throw std::runtime_error("missing claim: " + std::string(id));
  return *c;
}

TEST(ClaimRegistry, RequiredClaimsPresent) {
  const std::set<std::string> required = {
      "ik-symmetric",
      "reflexive-min-ik-within-ik",
      "preorder-min-ik-equals-ik",
      "reflexive-rho-within-omega",
      "symmetric-ik-kinds-collapse",
      "symtrans-omega-rigid",
      "symtrans-ik-within-omega",
      "symtrans-ik-nested",
      "reflexive-tau-refines-min-tau",
      "reflexive-rho-omega-within-ik",
      "serial-rho-within-ik",
      "transitive-ik-within-min-ik",
      "reflexive-min-tau-within-tau",
      "overlap-outside-ideal",
      "symtrans-omega-within-ik",
  };
  std::set<std::string> ids;
  for (const Claim& c : claim_registry()) {
    EXPECT_TRUE(ids.insert(c.id).second) << "duplicate claim id " << c.id;
    EXPECT_TRUE(c.evaluate != nullptr);
  }
  for (const auto& id : required) EXPECT_TRUE(ids.count(id)) << "missing claim " << id;
}

TEST(CheckClaim, ReflexiveTheoremHoldsOnScenario) {
  const auto& sc = scenarios::reflexive();
  Verdict v = check_claim(claim("reflexive-min-ik-within-ik"), sc.relation, sc.ideal);
  EXPECT_EQ(v.status, VerdictStatus::Holds);
  EXPECT_FALSE(v.violation.has_value());
}

TEST(CheckClaim, SerialRefutedClaimFailsOnScenario) {
  const auto& sc = scenarios::serial();
  Verdict v = check_claim(claim("serial-rho-within-ik"), sc.relation, sc.ideal);
  ASSERT_EQ(v.status, VerdictStatus::Fails);
  ASSERT_TRUE(v.violation.has_value());
  ASSERT_EQ(v.violation->elements.size(), 1u);
  EXPECT_EQ(v.violation->elements[0], "q");
  EXPECT_NE(v.violation->detail.find("rho_a(q)"), std::string::npos);
}

TEST(CheckClaim, SymTransTheoremsHoldAndConverseFails) {
  const auto& sc = scenarios::sym_trans();
  EXPECT_EQ(check_claim(claim("symtrans-ik-within-omega"), sc.relation, sc.ideal).status,
            VerdictStatus::Holds);
  EXPECT_EQ(check_claim(claim("symtrans-omega-rigid"), sc.relation, sc.ideal).status,
            VerdictStatus::Holds);
  EXPECT_EQ(check_claim(claim("symtrans-ik-nested"), sc.relation, sc.ideal).status,
            VerdictStatus::Holds);

  Verdict converse = check_claim(claim("symtrans-omega-within-ik"), sc.relation, sc.ideal);
  ASSERT_EQ(converse.status, VerdictStatus::Fails);
  ASSERT_TRUE(converse.violation.has_value());
  ASSERT_EQ(converse.violation->elements.size(), 1u);
  EXPECT_EQ(converse.violation->elements[0], "t");
}

TEST(CheckClaim, HypothesisUnmetIsDistinctFromFailure) {
  const auto& sc = scenarios::serial();  // serial but not reflexive
  Verdict v = check_claim(claim("reflexive-min-ik-within-ik"), sc.relation, sc.ideal);
  EXPECT_EQ(v.status, VerdictStatus::HypothesisUnmet);
  EXPECT_FALSE(v.violation.has_value());
}

TEST(SearchCounterexample, RefutedClaimsHaveSmallWitnesses) {
  for (const Claim& c : claim_registry()) {
    if (c.expected != ClaimStatus::Refuted) continue;
    auto w = search_counterexample(c, 4);
    ASSERT_TRUE(w.has_value()) << "no witness for " << c.id;
    EXPECT_FALSE(w->violation.detail.empty());
  }
}

TEST(SearchCounterexample, SerialWitnessIsTheSmallestInstance) {
  auto w = search_counterexample(claim("serial-rho-within-ik"), 4);
  ASSERT_TRUE(w.has_value());
  // first serial relation on one element is the loop, first falsifying ideal
  // is the improper one
  EXPECT_EQ(w->relation.size(), 1u);
  EXPECT_EQ(w->relation.code(), 1u);
  EXPECT_EQ(w->ideal.carrier(), w->relation.universe().full_set());
}

TEST(SearchCounterexample, Deterministic) {
  for (std::string_view id : {"reflexive-min-tau-within-tau", "transitive-ik-within-min-ik"}) {
    auto a = search_counterexample(claim(id), 4);
    auto b = search_counterexample(claim(id), 4);
    ASSERT_TRUE(a.has_value());
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(a->relation, b->relation);
    EXPECT_EQ(a->ideal, b->ideal);
    EXPECT_EQ(a->violation.detail, b->violation.detail);
  }
}

TEST(SearchCounterexample, TheoremClaimsSurviveSearchUpToThree) {
  for (const Claim& c : claim_registry()) {
    if (c.expected != ClaimStatus::Theorem) continue;
    auto w = search_counterexample(c, 3);
    EXPECT_FALSE(w.has_value()) << c.id << " falsified: "
                                << (w ? w->violation.detail : std::string{});
  }
}

// Claims are plain values, so ad-hoc statements can be searched too: under an
// equivalence hypothesis, ik_a stays inside omega_a (a special case of the
// symmetric-and-transitive theorem).
TEST(SearchCounterexample, AdHocEquivalenceClaim) {
  Claim c{"adhoc-equivalence-ik-within-omega",
          "equivalence R ⇒ ik_a(s) ⊆ omega_a(s)",
          {RelationProperty::Equivalence},
          ClaimStatus::Theorem,
          [](const FiniteRelation& r, const Ideal& k) -> std::optional<Violation> {
            for (std::size_t s = 0; s < r.size(); ++s)
              if (!overlap_ideal(r, k, Kind::After, s).is_subset_of(omega(r, Kind::After, s)))
                return Violation{"ik_a ⊄ omega_a at " + r.universe().name(s),
                                 Kind::After,
                                 {r.universe().name(s)}};
            return std::nullopt;
          }};
  EXPECT_FALSE(search_counterexample(c, 3).has_value());
}

TEST(SearchCounterexample, SizeGuards) {
  EXPECT_THROW(search_counterexample(claim("serial-rho-within-ik"), 5), SizeLimitError);
  EXPECT_THROW(search_counterexample(claim("serial-rho-within-ik"), 0), SizeLimitError);
  EXPECT_THROW(search_counterexample(claim("serial-rho-within-ik"), 6, 5), SizeLimitError);
  // a raised cap admits max_n = 5; the witness appears at n = 1, so this stays fast
  EXPECT_TRUE(search_counterexample(claim("serial-rho-within-ik"), 5, 5).has_value());
}

TEST(CheckClaim, UniverseMismatchRejected) {
  const auto& sc = scenarios::reflexive();
  Ideal other = Ideal::trivial(Universe::canonical(3));
  EXPECT_THROW(check_claim(claim("ik-symmetric"), sc.relation, other), DomainError);
}

}  // namespace
}  // namespace roughlab
