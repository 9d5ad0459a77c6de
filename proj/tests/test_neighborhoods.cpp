#include <gtest/gtest.h>

#include <random>

#include <roughlab/fixtures.hpp>
#include <roughlab/neighborhood.hpp>

namespace roughlab {
namespace {

FiniteRelation random_relation(std::mt19937& rng, const Universe& u) {
  const std::uint64_t cells = std::uint64_t{1} << (u.size() * u.size());
  const std::uint64_t code =
      (std::uint64_t{rng()} | (std::uint64_t{rng()} << 32)) % cells;
  return FiniteRelation::from_code(u, code);
}

TEST(OmegaNeighborhoods, ReflexiveScenarioValues) {
  const auto& sc = scenarios::reflexive();
  const Universe& u = sc.relation.universe();
  EXPECT_EQ(omega(sc.relation, Kind::After, "t"), u.subset({"q", "t"}));
  EXPECT_EQ(omega(sc.relation, Kind::MinAfter, "t"), u.subset({"t"}));
  EXPECT_EQ(omega(sc.relation, Kind::MinBefore, "t"), u.subset({"q", "t"}));
}

TEST(OmegaNeighborhoods, TransitiveScenarioEmptyMinBefore) {
  const auto& sc = scenarios::transitive();
  EXPECT_TRUE(omega(sc.relation, Kind::MinBefore, "q").empty());
}

TEST(OmegaNeighborhoods, EmptyRelationAllEmpty) {
  Universe u = Universe::canonical(4);
  FiniteRelation r(u);
  for (Kind j : all_kinds)
    for (std::size_t s = 0; s < u.size(); ++s) ASSERT_TRUE(omega(r, j, s).empty());
}

TEST(AdhesionNeighborhoods, ScenarioValues) {
  const auto& reflexive = scenarios::reflexive();
  const Universe& u = reflexive.relation.universe();
  EXPECT_EQ(adhesion(reflexive.relation, Kind::After, "t"), u.subset({"q", "t"}));
  EXPECT_EQ(adhesion(reflexive.relation, Kind::Before, "t"), u.subset({"t"}));

  const auto& transitive = scenarios::transitive();
  EXPECT_EQ(adhesion(transitive.relation, Kind::MinBefore, "q"),
            transitive.relation.universe().subset({"q", "s"}));
}

TEST(AdhesionNeighborhoods, IdentityGivesSingletons) {
  Universe u = Universe::canonical(4);
  std::vector<std::uint64_t> rows;
  for (std::size_t s = 0; s < 4; ++s) rows.push_back(std::uint64_t{1} << s);
  FiniteRelation id(u, rows);
  for (std::size_t s = 0; s < 4; ++s) ASSERT_EQ(adhesion(id, Kind::After, s), u.singleton(s));
}

TEST(OverlapNeighborhoods, SerialScenarioValues) {
  const auto& sc = scenarios::serial();
  const Universe& u = sc.relation.universe();
  EXPECT_EQ(overlap(sc.relation, Kind::After, "q"), u.subset({"q", "t"}));
  EXPECT_EQ(overlap(sc.relation, Kind::After, "t"), u.full_set());
}

TEST(OverlapNeighborhoods, EmptyBaseGivesEmptyOverlap) {
  const auto& sc = scenarios::transitive();
  ASSERT_TRUE(omega(sc.relation, Kind::Before, "p").empty());
  EXPECT_TRUE(overlap(sc.relation, Kind::Before, "p").empty());
}

// Direct evaluation of the defining condition, as an oracle for one
// equivalence relation with classes {p,q} and {s}.
TEST(OverlapNeighborhoods, EquivalenceClasses) {
  Universe u({"p", "q", "s"});
  auto r = FiniteRelation::from_pairs(
      u, {{"p", "p"}, {"p", "q"}, {"q", "p"}, {"q", "q"}, {"s", "s"}});
  ASSERT_TRUE(has_property(r, RelationProperty::Equivalence));
  for (std::size_t s = 0; s < u.size(); ++s) {
    std::uint64_t expected = 0;
    for (std::size_t t = 0; t < u.size(); ++t)
      if (omega(r, Kind::After, t).intersects(omega(r, Kind::After, s)))
        expected |= std::uint64_t{1} << t;
    ASSERT_EQ(overlap(r, Kind::After, s), u.subset_bits(expected));
  }
  EXPECT_EQ(overlap(r, Kind::After, "p"), u.subset({"p", "q"}));
}

TEST(OverlapIdealNeighborhoods, ScenarioValues) {
  const auto& refl = scenarios::reflexive();
  const Universe& u = refl.relation.universe();
  EXPECT_EQ(overlap_ideal(refl.relation, refl.ideal, Kind::After, "t"), u.subset({"q", "t"}));
  EXPECT_TRUE(overlap_ideal(refl.relation, refl.ideal, Kind::MinAfter, "t").empty());
  EXPECT_EQ(overlap_ideal(refl.relation, refl.ideal, Kind::MinUnion, "t"), u.subset({"q", "t"}));

  const auto& st = scenarios::sym_trans();
  EXPECT_TRUE(overlap_ideal(st.relation, st.ideal, Kind::After, "t").empty());

  const auto& pre = scenarios::preorder();
  const Universe& v = pre.relation.universe();
  EXPECT_EQ(overlap_ideal(pre.relation, pre.ideal, Kind::After, "p"), v.subset({"p", "q"}));
  EXPECT_TRUE(overlap_ideal(pre.relation, pre.ideal, Kind::After, "s").empty());
}

TEST(NeighborhoodSystems, MatchesPerElementCalls) {
  std::mt19937 rng(99);
  Universe u = Universe::canonical(4);
  for (int i = 0; i < 30; ++i) {
    FiniteRelation r = random_relation(rng, u);
    Ideal k(u.subset_bits(rng() & 0xf));
    for (Kind j : all_kinds) {
      auto om = make_system(r, Family::Omega, j);
      auto rho = make_system(r, Family::Adhesion, j);
      auto ov = make_system(r, Family::Overlap, j);
      auto ik = make_system(r, Family::OverlapIdeal, j, k);
      for (std::size_t s = 0; s < u.size(); ++s) {
        ASSERT_EQ(om.map[s], omega(r, j, s));
        ASSERT_EQ(rho.map[s], adhesion(r, j, s));
        ASSERT_EQ(ov.map[s], overlap(r, j, s));
        ASSERT_EQ(ik.map[s], overlap_ideal(r, k, j, s));
      }
    }
  }
}

TEST(NeighborhoodSystems, TrivialIdealReducesToPlainOverlap) {
  for (const auto& r : enumerate_relations(3)) {
    Ideal trivial = Ideal::trivial(r.universe());
    for (Kind j : all_kinds) {
      auto ik = make_system(r, Family::OverlapIdeal, j, trivial);
      auto plain = make_system(r, Family::Overlap, j);
      for (std::size_t s = 0; s < r.size(); ++s) ASSERT_EQ(ik.map[s], plain.map[s]);
    }
  }
}

TEST(NeighborhoodSystems, ConfigurationErrors) {
  const auto& sc = scenarios::reflexive();
  EXPECT_THROW(make_system(sc.relation, Family::OverlapIdeal, Kind::After), ConfigError);
  EXPECT_THROW(make_system(sc.relation, Family::Omega, Kind::After, sc.ideal), ConfigError);
}

TEST(NeighborhoodSystems, CombinedKindsAreCombinations) {
  std::mt19937 rng(123);
  Universe u = Universe::canonical(4);
  for (int i = 0; i < 50; ++i) {
    FiniteRelation r = random_relation(rng, u);
    Ideal k(u.subset_bits(rng() & 0xf));
    const auto check = [&](auto&& get) {
      ASSERT_EQ(get(Kind::Inter), get(Kind::After) & get(Kind::Before));
      ASSERT_EQ(get(Kind::Union), get(Kind::After) | get(Kind::Before));
      ASSERT_EQ(get(Kind::MinInter), get(Kind::MinAfter) & get(Kind::MinBefore));
      ASSERT_EQ(get(Kind::MinUnion), get(Kind::MinAfter) | get(Kind::MinBefore));
    };
    for (std::size_t s = 0; s < u.size(); ++s) {
      check([&](Kind j) { return omega(r, j, s); });
      check([&](Kind j) { return adhesion(r, j, s); });
      check([&](Kind j) { return overlap(r, j, s); });
      check([&](Kind j) { return overlap_ideal(r, k, j, s); });
    }
  }
}

TEST(NeighborhoodLaws, OverlapIdealSymmetry) {
  for (const auto& r : enumerate_relations(2))
    for (const Ideal& k : enumerate_ideals(r.universe()))
      for (Kind j : all_kinds)
        for (std::size_t s = 0; s < r.size(); ++s)
          for (std::size_t t = 0; t < r.size(); ++t)
            ASSERT_EQ(overlap_ideal(r, k, j, s).contains(t),
                      overlap_ideal(r, k, j, t).contains(s));
}

TEST(NeighborhoodLaws, LargerIdealShrinksOverlapIdeal) {
  std::mt19937 rng(5);
  Universe u = Universe::canonical(4);
  for (int i = 0; i < 40; ++i) {
    FiniteRelation r = random_relation(rng, u);
    std::uint64_t c1 = rng() & 0xf;
    std::uint64_t c2 = c1 | (rng() & 0xf);
    Ideal k1(u.subset_bits(c1)), k2(u.subset_bits(c2));
    for (Kind j : all_kinds)
      for (std::size_t s = 0; s < u.size(); ++s)
        ASSERT_TRUE(overlap_ideal(r, k2, j, s).is_subset_of(overlap_ideal(r, k1, j, s)));
  }
}

TEST(NeighborhoodLaws, ReflexiveScenarioMinimalWithinBase) {
  const auto& sc = scenarios::reflexive();
  for (Kind j : plain_kinds)
    for (std::size_t s = 0; s < sc.relation.size(); ++s)
      ASSERT_TRUE(overlap_ideal(sc.relation, sc.ideal, minimal_counterpart(j), s)
                      .is_subset_of(overlap_ideal(sc.relation, sc.ideal, j, s)));
}

TEST(NeighborhoodLaws, PreorderScenarioMinimalEqualsBase) {
  const auto& sc = scenarios::preorder();
  ASSERT_TRUE(has_property(sc.relation, RelationProperty::Preorder));
  for (Kind j : plain_kinds)
    for (std::size_t s = 0; s < sc.relation.size(); ++s)
      ASSERT_EQ(overlap_ideal(sc.relation, sc.ideal, minimal_counterpart(j), s),
                overlap_ideal(sc.relation, sc.ideal, j, s));
}

// The stated non-inclusions witnessing the refuted claims.
TEST(NeighborhoodLaws, NegativeFixtures) {
  const auto& serial = scenarios::serial();
  EXPECT_FALSE(adhesion(serial.relation, Kind::After, "q")
                   .is_subset_of(overlap_ideal(serial.relation, serial.ideal, Kind::After, "q")));

  const auto& refl = scenarios::reflexive();
  EXPECT_FALSE(
      adhesion(refl.relation, Kind::MinAfter, "t")
          .is_subset_of(overlap_ideal(refl.relation, refl.ideal, Kind::MinAfter, "t")));

  const auto& st = scenarios::sym_trans();
  EXPECT_FALSE(omega(st.relation, Kind::After, "t")
                   .is_subset_of(overlap_ideal(st.relation, st.ideal, Kind::After, "t")));
}

TEST(NeighborhoodLaws, UnknownElementRejected) {
  const auto& sc = scenarios::reflexive();
  EXPECT_THROW(omega(sc.relation, Kind::After, "z"), DomainError);
  EXPECT_THROW(omega(sc.relation, Kind::After, std::size_t{9}), DomainError);
}

TEST(KindNames, ParseAndPrint) {
  for (Kind j : all_kinds) EXPECT_EQ(parse_kind(kind_name(j)), j);
  EXPECT_FALSE(parse_kind("zz").has_value());
  for (Family f : all_families) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_FALSE(parse_family("zz").has_value());
}

}  // namespace
}  // namespace roughlab
