#include <gtest/gtest.h>

#include <set>

#include <roughlab/ideal.hpp>

namespace roughlab {
namespace {

// Brute-force oracle: a family of subsets encoded as a bit set over masks
// (family bit m set <=> the subset with mask m belongs). Closes a family
// under pairwise unions and under taking subsets, by fixpoint iteration.
std::uint64_t close_family(std::uint64_t family, std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t a = 0; a < subsets; ++a) {
      if (!((family >> a) & 1u)) continue;
      for (std::uint64_t b = 0; b < subsets; ++b) {
        if (!((family >> b) & 1u)) continue;
        if (!((family >> (a | b)) & 1u)) {
          family |= std::uint64_t{1} << (a | b);
          changed = true;
        }
      }
      for (std::uint64_t sub = a;; sub = (sub - 1) & a) {
        if (!((family >> sub) & 1u)) {
          family |= std::uint64_t{1} << sub;
          changed = true;
        }
        if (sub == 0) break;
      }
    }
  }
  return family;
}

std::uint64_t family_bits_of(const Ideal& k) {
  std::uint64_t family = 0;
  for (const Subset& m : k.members()) family |= std::uint64_t{1} << m.bits();
  return family;
}

TEST(IdealBasis, SingletonBasis) {
  Universe u({"p", "q", "s", "t"});
  Ideal k = Ideal::from_basis({u.subset({"t"})});
  auto members = k.members();
  ASSERT_EQ(members.size(), 2u);
  EXPECT_EQ(members[0], u.empty_set());
  EXPECT_EQ(members[1], u.subset({"t"}));
}

TEST(IdealBasis, EmptySetBasis) {
  Universe u({"p", "q", "s", "t"});
  Ideal k = Ideal::from_basis({u.empty_set()});
  auto members = k.members();
  ASSERT_EQ(members.size(), 1u);
  EXPECT_EQ(members[0], u.empty_set());
  EXPECT_EQ(k, Ideal::trivial(u));
}

TEST(IdealBasis, TwoSingletonBasis) {
  Universe u({"p", "q", "s", "t"});
  Ideal k = Ideal::from_basis({u.subset({"s"}), u.subset({"t"})});
  auto members = k.members();
  ASSERT_EQ(members.size(), 4u);
  EXPECT_EQ(members[3], u.subset({"s", "t"}));
  EXPECT_EQ(k.carrier(), u.subset({"s", "t"}));
}

TEST(IdealBasis, EmptyBasisRejected) {
  EXPECT_THROW(Ideal::from_basis({}), ConfigError);
}

TEST(IdealMembership, Examples) {
  Universe u({"p", "q", "s", "t"});
  Ideal kt(u.subset({"t"}));
  EXPECT_FALSE(kt.contains(u.subset({"q", "t"})));
  EXPECT_TRUE(kt.contains(u.empty_set()));

  Ideal kst(u.subset({"s", "t"}));
  std::size_t inside = 0;
  for (std::uint64_t m = 0; m < 16; ++m)
    if (kst.contains(u.subset_bits(m))) ++inside;
  EXPECT_EQ(inside, 4u);  // exactly the subsets of {s,t}
}

TEST(IdealMembership, UniverseMismatch) {
  Universe u({"p", "q"});
  Universe v({"a", "b"});
  Ideal k(u.subset({"p"}));
  EXPECT_THROW(k.contains(v.subset({"a"})), DomainError);
}

TEST(IdealEnumeration, Counts) {
  std::size_t n3 = 0;
  for ([[maybe_unused]] const auto& k : enumerate_ideals(Universe::canonical(3))) ++n3;
  EXPECT_EQ(n3, 8u);
  std::size_t n4 = 0;
  for ([[maybe_unused]] const auto& k : enumerate_ideals(Universe::canonical(4))) ++n4;
  EXPECT_EQ(n4, 16u);
}

// Every nonempty family of subsets of a 3-universe that is closed under
// subsets and unions must coincide with some enumerated ideal, and vice
// versa.
TEST(IdealEnumeration, MatchesBruteForceFamilyFilter) {
  const std::size_t n = 3, subsets = 8;
  std::set<std::uint64_t> closed_families;
  for (std::uint64_t family = 1; family < (std::uint64_t{1} << subsets); ++family) {
    bool subset_closed = true, union_closed = true;
    for (std::uint64_t a = 0; a < subsets && subset_closed && union_closed; ++a) {
      if (!((family >> a) & 1u)) continue;
      for (std::uint64_t b = 0; b < subsets; ++b) {
        if (((family >> b) & 1u) && !((family >> (a | b)) & 1u)) union_closed = false;
        if ((b & a) == b && !((family >> b) & 1u)) subset_closed = false;
      }
    }
    if (subset_closed && union_closed) closed_families.insert(family);
  }

  std::set<std::uint64_t> enumerated;
  for (const Ideal& k : enumerate_ideals(Universe::canonical(n)))
    enumerated.insert(family_bits_of(k));

  EXPECT_EQ(closed_families, enumerated);
  EXPECT_EQ(enumerated.size(), 8u);
}

// The induced family of any basis equals the brute-force union/subset
// closure of that basis (all 255 nonempty bases at n = 3 here; n = 4 runs in
// the acceptance suite).
TEST(IdealBasis, ClosureOracleAtNThree) {
  const std::size_t n = 3, subsets = 8;
  Universe u = Universe::canonical(n);
  for (std::uint64_t basis_bits = 1; basis_bits < (std::uint64_t{1} << subsets); ++basis_bits) {
    std::vector<Subset> basis;
    for (std::uint64_t m = 0; m < subsets; ++m)
      if ((basis_bits >> m) & 1u) basis.push_back(u.subset_bits(m));
    Ideal k = Ideal::from_basis(basis);
    ASSERT_EQ(family_bits_of(k), close_family(basis_bits, n));
  }
}

TEST(IdealProperties, ClosureLawsForAllIdealsUpToFour) {
  Universe u = Universe::canonical(4);
  for (const Ideal& k : enumerate_ideals(u)) {
    auto members = k.members();
    ASSERT_TRUE(k.contains(u.empty_set()));
    for (const Subset& a : members) {
      for (const Subset& b : members) ASSERT_TRUE(k.contains(a | b));
      for (std::uint64_t sub = a.bits();; sub = (sub - 1) & a.bits()) {
        ASSERT_TRUE(k.contains(u.subset_bits(sub)));
        if (sub == 0) break;
      }
    }
  }
}

TEST(IdealProperties, CarrierMonotonicity) {
  Universe u = Universe::canonical(4);
  for (std::uint64_t c1 = 0; c1 < 16; ++c1)
    for (std::uint64_t c2 = 0; c2 < 16; ++c2) {
      if ((c1 & ~c2) != 0) continue;  // only c1 ⊆ c2
      Ideal k1(u.subset_bits(c1)), k2(u.subset_bits(c2));
      for (const Subset& m : k1.members()) ASSERT_TRUE(k2.contains(m));
    }
}

TEST(IdealProperties, ImproperIdealAllowed) {
  Universe u = Universe::canonical(3);
  Ideal all(u.full_set());
  EXPECT_TRUE(all.improper());
  EXPECT_EQ(all.members().size(), 8u);
  EXPECT_TRUE(all.contains(u.full_set()));
}

}  // namespace
}  // namespace roughlab
