#pragma once

#include <string>
#include <vector>

#include "roughlab/approximation.hpp"
#include "roughlab/topology.hpp"

namespace roughlab {

/// A bundled worked example: one relation and one ideal with hand-computed
/// expected values, replayed by replay_fixtures() and reusable from tests.
struct Scenario {
  std::string id;
  FiniteRelation relation;
  Ideal ideal;
};

namespace scenarios {

namespace detail {
inline Universe pqst() {
  static const Universe u({"p", "q", "s", "t"});
  return u;
}
inline Universe pqs() {
  static const Universe u({"p", "q", "s"});
  return u;
}
}  // namespace detail

/// Reflexive relation on {p,q,s,t}; ideal {∅,{t}}.
inline const Scenario& reflexive() {
  static const Scenario sc{
      "reflexive",
      FiniteRelation::from_pairs(detail::pqst(), {{"p", "s"},
                                                  {"p", "t"},
                                                  {"q", "t"},
                                                  {"t", "q"},
                                                  {"p", "p"},
                                                  {"q", "q"},
                                                  {"s", "s"},
                                                  {"t", "t"}}),
      Ideal(detail::pqst().subset({"t"}))};
  return sc;
}

/// Serial (not reflexive) relation on {p,q,s,t}; ideal {∅,{t}}.
inline const Scenario& serial() {
  static const Scenario sc{
      "serial",
      FiniteRelation::from_pairs(detail::pqst(), {{"p", "p"},
                                                  {"s", "p"},
                                                  {"t", "p"},
                                                  {"q", "t"},
                                                  {"t", "q"},
                                                  {"t", "t"}}),
      Ideal(detail::pqst().subset({"t"}))};
  return sc;
}

/// Transitive relation on {p,q,s,t}; ideal {∅,{t}}.
inline const Scenario& transitive() {
  static const Scenario sc{
      "transitive",
      FiniteRelation::from_pairs(detail::pqst(), {{"p", "s"},
                                                  {"p", "t"},
                                                  {"p", "q"},
                                                  {"t", "q"},
                                                  {"t", "t"}}),
      Ideal(detail::pqst().subset({"t"}))};
  return sc;
}

/// Preorder on {p,q,s}; ideal {∅,{s}}.
inline const Scenario& preorder() {
  static const Scenario sc{
      "preorder",
      FiniteRelation::from_pairs(detail::pqs(), {{"p", "p"},
                                                 {"q", "q"},
                                                 {"s", "s"},
                                                 {"p", "q"},
                                                 {"p", "s"},
                                                 {"q", "s"}}),
      Ideal(detail::pqs().subset({"s"}))};
  return sc;
}

/// A single loop {(t,t)} on {p,q,s,t}: symmetric and transitive; ideal {∅,{t}}.
inline const Scenario& sym_trans() {
  static const Scenario sc{"sym-trans",
                           FiniteRelation::from_pairs(detail::pqst(), {{"t", "t"}}),
                           Ideal(detail::pqst().subset({"t"}))};
  return sc;
}

/// The reflexive relation again, paired with the larger ideal
/// {∅,{s},{t},{s,t}}; used for the generated-topology fixtures.
inline const Scenario& topology_pair() {
  static const Scenario sc{"topology", reflexive().relation,
                           Ideal(detail::pqst().subset({"s", "t"}))};
  return sc;
}

inline std::vector<const Scenario*> all() {
  return {&reflexive(), &serial(), &transitive(), &preorder(), &sym_trans(), &topology_pair()};
}

}  // namespace scenarios

struct FixtureCheck {
  std::string fixture;
  std::string label;
  std::string expected;
  std::string actual;
  bool pass;
};

struct FixtureReport {
  std::vector<FixtureCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
  std::size_t count_for(std::string_view fixture) const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (c.fixture == fixture) ++n;
    return n;
  }
};

namespace detail {

class FixtureRecorder {
 public:
  explicit FixtureRecorder(FixtureReport& report) : report_(report) {}

  void set(const std::string& fixture, const std::string& label, const Subset& actual,
           const Subset& expected) {
    report_.checks.push_back(
        {fixture, label, expected.to_string(), actual.to_string(), actual == expected});
  }

  void family(const std::string& fixture, const std::string& label, const SetFamily& actual,
              const SetFamily& expected) {
    report_.checks.push_back({fixture, label, family_str(expected), family_str(actual),
                              actual == expected});
  }

  void subsets(const std::string& fixture, const std::string& label,
               const std::vector<Subset>& actual, const std::vector<Subset>& expected) {
    report_.checks.push_back({fixture, label, list_str(expected), list_str(actual),
                              list_str(actual) == list_str(expected)});
  }

  void truth(const std::string& fixture, const std::string& label, bool actual) {
    report_.checks.push_back({fixture, label, "true", actual ? "true" : "false", actual});
  }

 private:
  static std::string family_str(const SetFamily& f) { return list_str(f.members()); }
  static std::string list_str(const std::vector<Subset>& sets) {
    std::string out = "{";
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (i) out += ",";
      out += sets[i].to_string();
    }
    return out + "}";
  }
  FixtureReport& report_;
};

}  // namespace detail

/// Recompute every stated value of the bundled scenarios (neighborhoods of
/// all four families, ideal families, generated topologies, and the
/// non-inclusions they witness) and compare for exact equality. Mismatches
/// are report entries, not faults.
inline FixtureReport replay_fixtures() {
  FixtureReport report;
  detail::FixtureRecorder rec(report);

  // reflexive scenario: all eight kinds of omega, rho and ik at t
  {
    const Scenario& sc = scenarios::reflexive();
    const Universe& u = sc.relation.universe();
    const auto at_t = [&](Family f, Kind j) {
      return f == Family::OverlapIdeal ? overlap_ideal(sc.relation, sc.ideal, j, "t")
                                       : make_system(sc.relation, f, j).at("t");
    };
    const auto expect = [&](Family f, Kind j, std::initializer_list<std::string_view> names) {
      rec.set(sc.id, std::string(family_name(f)) + "_" + std::string(kind_name(j)) + "(t)",
              at_t(f, j), u.subset(names));
    };
    expect(Family::Omega, Kind::After, {"q", "t"});
    expect(Family::Omega, Kind::Before, {"p", "q", "t"});
    expect(Family::Omega, Kind::Inter, {"q", "t"});
    expect(Family::Omega, Kind::Union, {"p", "q", "t"});
    expect(Family::Omega, Kind::MinAfter, {"t"});
    expect(Family::Omega, Kind::MinBefore, {"q", "t"});
    expect(Family::Omega, Kind::MinInter, {"t"});
    expect(Family::Omega, Kind::MinUnion, {"q", "t"});
    expect(Family::Adhesion, Kind::After, {"q", "t"});
    expect(Family::Adhesion, Kind::Before, {"t"});
    expect(Family::Adhesion, Kind::Inter, {"t"});
    expect(Family::Adhesion, Kind::Union, {"q", "t"});
    expect(Family::Adhesion, Kind::MinAfter, {"t"});
    expect(Family::Adhesion, Kind::MinBefore, {"q", "t"});
    expect(Family::Adhesion, Kind::MinInter, {"t"});
    expect(Family::Adhesion, Kind::MinUnion, {"q", "t"});
    expect(Family::OverlapIdeal, Kind::After, {"q", "t"});
    expect(Family::OverlapIdeal, Kind::Before, {"p", "q", "s", "t"});
    expect(Family::OverlapIdeal, Kind::Inter, {"q", "t"});
    expect(Family::OverlapIdeal, Kind::Union, {"p", "q", "s", "t"});
    expect(Family::OverlapIdeal, Kind::MinAfter, {});
    expect(Family::OverlapIdeal, Kind::MinBefore, {"q", "t"});
    expect(Family::OverlapIdeal, Kind::MinInter, {});
    expect(Family::OverlapIdeal, Kind::MinUnion, {"q", "t"});

    rec.subsets(sc.id, "ideal members", sc.ideal.members(),
                {u.subset({}), u.subset({"t"})});
    rec.truth(sc.id, "rho_<a>(t) ⊄ ik_<a>(t)",
              !adhesion(sc.relation, Kind::MinAfter, "t")
                   .is_subset_of(overlap_ideal(sc.relation, sc.ideal, Kind::MinAfter, "t")));
    rec.truth(sc.id, "rho_<i>(t) ⊄ ik_<i>(t)",
              !adhesion(sc.relation, Kind::MinInter, "t")
                   .is_subset_of(overlap_ideal(sc.relation, sc.ideal, Kind::MinInter, "t")));
    rec.truth(sc.id, "omega_<a>(t) ⊄ ik_<a>(t)",
              !omega(sc.relation, Kind::MinAfter, "t")
                   .is_subset_of(overlap_ideal(sc.relation, sc.ideal, Kind::MinAfter, "t")));
    rec.truth(sc.id, "omega_<i>(t) ⊄ ik_<i>(t)",
              !omega(sc.relation, Kind::MinInter, "t")
                   .is_subset_of(overlap_ideal(sc.relation, sc.ideal, Kind::MinInter, "t")));
  }

  // serial scenario: omega_a, rho_a, i_a and ik_a for all four elements
  {
    const Scenario& sc = scenarios::serial();
    const Universe& u = sc.relation.universe();
    const auto expect = [&](Family f, std::string_view elem,
                            std::initializer_list<std::string_view> names) {
      Subset actual = f == Family::OverlapIdeal
                          ? overlap_ideal(sc.relation, sc.ideal, Kind::After, elem)
                          : make_system(sc.relation, f, Kind::After).at(elem);
      rec.set(sc.id, std::string(family_name(f)) + "_a(" + std::string(elem) + ")", actual,
              u.subset(names));
    };
    expect(Family::Omega, "p", {"p"});
    expect(Family::Omega, "q", {"t"});
    expect(Family::Omega, "s", {"p"});
    expect(Family::Omega, "t", {"p", "q", "t"});
    expect(Family::Adhesion, "p", {"p", "s"});
    expect(Family::Adhesion, "q", {"q"});
    expect(Family::Adhesion, "s", {"p", "s"});
    expect(Family::Adhesion, "t", {"t"});
    expect(Family::Overlap, "p", {"p", "s", "t"});
    expect(Family::Overlap, "q", {"q", "t"});
    expect(Family::Overlap, "s", {"p", "s", "t"});
    expect(Family::Overlap, "t", {"p", "q", "s", "t"});
    expect(Family::OverlapIdeal, "p", {"p", "s", "t"});
    expect(Family::OverlapIdeal, "q", {});
    expect(Family::OverlapIdeal, "s", {"p", "s", "t"});
    expect(Family::OverlapIdeal, "t", {"p", "s", "t"});

    rec.subsets(sc.id, "ideal members", sc.ideal.members(), {u.subset({}), u.subset({"t"})});
    rec.truth(sc.id, "rho_a(q) ⊄ ik_a(q)",
              !adhesion(sc.relation, Kind::After, "q")
                   .is_subset_of(overlap_ideal(sc.relation, sc.ideal, Kind::After, "q")));
  }

  // transitive scenario: the before-side values for all four elements
  {
    const Scenario& sc = scenarios::transitive();
    const Universe& u = sc.relation.universe();
    const auto expect = [&](Family f, Kind j, std::string_view elem,
                            std::initializer_list<std::string_view> names) {
      Subset actual = f == Family::OverlapIdeal
                          ? overlap_ideal(sc.relation, sc.ideal, j, elem)
                          : make_system(sc.relation, f, j).at(elem);
      rec.set(sc.id,
              std::string(family_name(f)) + "_" + std::string(kind_name(j)) + "(" +
                  std::string(elem) + ")",
              actual, u.subset(names));
    };
    expect(Family::Omega, Kind::Before, "p", {});
    expect(Family::Omega, Kind::Before, "q", {"p", "t"});
    expect(Family::Omega, Kind::Before, "s", {"p"});
    expect(Family::Omega, Kind::Before, "t", {"p", "t"});
    expect(Family::Omega, Kind::MinBefore, "p", {"p"});
    expect(Family::Omega, Kind::MinBefore, "q", {});
    expect(Family::Omega, Kind::MinBefore, "s", {});
    expect(Family::Omega, Kind::MinBefore, "t", {"p", "t"});
    expect(Family::Adhesion, Kind::Before, "p", {"p"});
    expect(Family::Adhesion, Kind::Before, "q", {"q", "t"});
    expect(Family::Adhesion, Kind::Before, "s", {"s"});
    expect(Family::Adhesion, Kind::Before, "t", {"q", "t"});
    expect(Family::Adhesion, Kind::MinBefore, "p", {"p"});
    expect(Family::Adhesion, Kind::MinBefore, "q", {"q", "s"});
    expect(Family::Adhesion, Kind::MinBefore, "s", {"q", "s"});
    expect(Family::Adhesion, Kind::MinBefore, "t", {"t"});
    expect(Family::OverlapIdeal, Kind::Before, "p", {});
    expect(Family::OverlapIdeal, Kind::Before, "q", {"q", "s", "t"});
    expect(Family::OverlapIdeal, Kind::Before, "s", {"q", "s", "t"});
    expect(Family::OverlapIdeal, Kind::Before, "t", {"q", "s", "t"});
    expect(Family::OverlapIdeal, Kind::MinBefore, "p", {"p", "t"});
    expect(Family::OverlapIdeal, Kind::MinBefore, "q", {});
    expect(Family::OverlapIdeal, Kind::MinBefore, "s", {});
    expect(Family::OverlapIdeal, Kind::MinBefore, "t", {"p", "t"});

    for (std::string_view e : {"p", "q", "s", "t"})
      rec.truth(sc.id, "ik_b(" + std::string(e) + ") ≠ ik_<b>(" + std::string(e) + ")",
                !(overlap_ideal(sc.relation, sc.ideal, Kind::Before, e) ==
                  overlap_ideal(sc.relation, sc.ideal, Kind::MinBefore, e)));
  }

  // preorder scenario on {p,q,s}
  {
    const Scenario& sc = scenarios::preorder();
    const Universe& u = sc.relation.universe();
    rec.set(sc.id, "omega_a(p)", omega(sc.relation, Kind::After, "p"), u.full_set());
    rec.set(sc.id, "omega_a(q)", omega(sc.relation, Kind::After, "q"), u.subset({"q", "s"}));
    rec.set(sc.id, "omega_a(s)", omega(sc.relation, Kind::After, "s"), u.subset({"s"}));
    rec.set(sc.id, "rho_a(p)", adhesion(sc.relation, Kind::After, "p"), u.subset({"p"}));
    rec.set(sc.id, "rho_a(q)", adhesion(sc.relation, Kind::After, "q"), u.subset({"q"}));
    rec.set(sc.id, "rho_a(s)", adhesion(sc.relation, Kind::After, "s"), u.subset({"s"}));
    rec.set(sc.id, "ik_a(p)", overlap_ideal(sc.relation, sc.ideal, Kind::After, "p"),
            u.subset({"p", "q"}));
    rec.set(sc.id, "ik_a(q)", overlap_ideal(sc.relation, sc.ideal, Kind::After, "q"),
            u.subset({"p", "q"}));
    rec.set(sc.id, "ik_a(s)", overlap_ideal(sc.relation, sc.ideal, Kind::After, "s"),
            u.subset({}));
    rec.subsets(sc.id, "ideal members", sc.ideal.members(), {u.subset({}), u.subset({"s"})});
    for (std::string_view e : {"p", "q", "s"})
      rec.truth(sc.id, "omega_a(" + std::string(e) + ") ⊄ ik_a(" + std::string(e) + ")",
                !omega(sc.relation, Kind::After, e)
                     .is_subset_of(overlap_ideal(sc.relation, sc.ideal, Kind::After, e)));
    rec.truth(sc.id, "rho_a(s) ⊄ ik_a(s)",
              !adhesion(sc.relation, Kind::After, "s")
                   .is_subset_of(overlap_ideal(sc.relation, sc.ideal, Kind::After, "s")));
  }

  // symmetric-and-transitive scenario: failing converse inclusion at t
  {
    const Scenario& sc = scenarios::sym_trans();
    const Universe& u = sc.relation.universe();
    rec.set(sc.id, "omega_a(t)", omega(sc.relation, Kind::After, "t"), u.subset({"t"}));
    rec.set(sc.id, "ik_a(t)", overlap_ideal(sc.relation, sc.ideal, Kind::After, "t"),
            u.subset({}));
    rec.truth(sc.id, "omega_a(t) ⊄ ik_a(t)",
              !omega(sc.relation, Kind::After, "t")
                   .is_subset_of(overlap_ideal(sc.relation, sc.ideal, Kind::After, "t")));
  }

  // topology scenario: both generated families, exactly
  {
    const Scenario& sc = scenarios::topology_pair();
    const Universe& u = sc.relation.universe();
    auto tau_min = generate_topology_ideal(
        make_system(sc.relation, Family::OverlapIdeal, Kind::MinAfter, sc.ideal), sc.ideal);
    auto tau = generate_topology_ideal(
        make_system(sc.relation, Family::OverlapIdeal, Kind::After, sc.ideal), sc.ideal);

    rec.family(sc.id, "tau^{ik_<a>}", tau_min, SetFamily::power_set(u));
    SetFamily expected_tau(
        u, {u.subset({}).bits(), u.subset({"p"}).bits(), u.subset({"q"}).bits(),
            u.subset({"s"}).bits(), u.subset({"p", "q"}).bits(), u.subset({"p", "s"}).bits(),
            u.subset({"q", "s"}).bits(), u.subset({"q", "t"}).bits(),
            u.subset({"p", "q", "s"}).bits(), u.subset({"p", "q", "t"}).bits(),
            u.subset({"q", "s", "t"}).bits(), u.full_set().bits()});
    rec.family(sc.id, "tau^{ik_a}", tau, expected_tau);
    rec.truth(sc.id, "tau^{ik_<a>} is a topology", is_topology(tau_min));
    rec.truth(sc.id, "tau^{ik_a} is a topology", is_topology(tau));
    rec.truth(sc.id, "tau^{ik_<a>} ⊄ tau^{ik_a}", !tau.includes(tau_min));
    rec.subsets(sc.id, "ideal members", sc.ideal.members(),
                {u.subset({}), u.subset({"s"}), u.subset({"t"}), u.subset({"s", "t"})});
  }

  return report;
}

}  // namespace roughlab
