#pragma once

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "roughlab/claims.hpp"
#include "roughlab/fixtures.hpp"
#include "roughlab/io.hpp"

namespace roughlab {

namespace cli_detail {

struct LoadedInputs {
  FiniteRelation relation;
  std::optional<Ideal> ideal;
};

inline LoadedInputs load_inputs(const std::string& relation_path, const std::string& ideal_path,
                                std::ostream& err) {
  FiniteRelation r = load_relation(relation_path);
  std::optional<Ideal> k;
  if (!ideal_path.empty()) {
    k = load_ideal(ideal_path, r.universe());
    if (k->improper())
      err << "note: ideal is improper (carrier = whole universe)\n";
  }
  return LoadedInputs{std::move(r), std::move(k)};
}

inline Family resolve_family(const std::string& family_flag, bool have_ideal, bool topology_mode) {
  std::string name = family_flag;
  if (name.empty()) name = (topology_mode && have_ideal) ? "ik" : "omega";
  auto f = parse_family(name);
  if (!f) throw ConfigError("unknown family: " + name + " (use omega|rho|i|ik)");
  if (*f == Family::OverlapIdeal && !have_ideal)
    throw ConfigError("family ik requires --ideal");
  return *f;
}

inline Kind resolve_kind(const std::string& kind_flag) {
  auto j = parse_kind(kind_flag);
  if (!j) throw ConfigError("unknown kind: " + kind_flag +
                            " (use a|b|<a>|<b>|i|u|<i>|<u>, shell-quoted)");
  return *j;
}

/// Build the neighborhood system for a command; the ideal parameterizes the
/// system only for family ik.
inline NeighborhoodSystem build_system(const FiniteRelation& r, Family f, Kind j,
                                       const std::optional<Ideal>& k) {
  if (f == Family::OverlapIdeal) return make_system(r, f, j, k);
  return make_system(r, f, j);
}

inline std::size_t search_cap_from_env() {
  std::size_t cap = 4;
  if (const char* env = std::getenv("ROUGHLAB_MAX_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1) cap = static_cast<std::size_t>(v);
  }
  return cap < max_enumeration_size ? cap : max_enumeration_size;
}

inline int cmd_nbhd(const LoadedInputs& in, Family family, Kind kind, const std::string& element,
                    ReportFormat fmt, std::ostream& out) {
  auto sys = build_system(in.relation, family, kind, in.ideal);
  if (!element.empty()) {
    const Subset& nb = sys.at(element);
    if (fmt == ReportFormat::Json) {
      Json j;
      j["element"] = element;
      j["neighborhood"] = nb.names();
      out << j.dump(1) << '\n';
    } else {
      out << nb.to_string() << '\n';
    }
    return 0;
  }
  if (fmt == ReportFormat::Json) {
    Json j;
    for (std::size_t i = 0; i < sys.map.size(); ++i)
      j[sys.universe.name(i)] = sys.map[i].names();
    out << j.dump(1) << '\n';
  } else {
    for (std::size_t i = 0; i < sys.map.size(); ++i)
      out << sys.universe.name(i) << ": " << sys.map[i].to_string() << '\n';
  }
  return 0;
}

inline int cmd_approx(const LoadedInputs& in, Family family, Kind kind,
                      const std::string& set_literal, bool all_subsets,
                      const std::string& variant_flag, ReportFormat fmt, std::ostream& out) {
  auto sys = build_system(in.relation, family, kind, in.ideal);
  const Ideal op_ideal = in.ideal ? *in.ideal : Ideal::trivial(in.relation.universe());

  AccuracyVariant variant = family == Family::Adhesion ? AccuracyVariant::PlainRatio
                                                       : AccuracyVariant::IntersectOverUnion;
  if (!variant_flag.empty()) {
    auto v = parse_variant(variant_flag);
    if (!v) throw ConfigError("unknown accuracy variant: " + variant_flag + " (use iou|plain)");
    variant = *v;
  }

  std::vector<ApproxRow> rows;
  if (all_subsets) {
    const std::size_t n = in.relation.size();
    if (n > 5) throw SizeLimitError("--all-subsets supports universes of at most 5 elements");
    std::vector<std::uint64_t> masks(std::size_t{1} << n);
    for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = i;
    std::sort(masks.begin(), masks.end(), detail::family_order);
    for (auto m : masks) {
      Subset f = in.relation.universe().subset_bits(m);
      rows.push_back({f, approx_report(sys, op_ideal, f, variant)});
    }
  } else {
    Subset f = parse_set_literal(in.relation.universe(), set_literal);
    rows.push_back({f, approx_report(sys, op_ideal, f, variant)});
  }
  out << render_approx(rows, fmt, variant);
  return 0;
}

inline int cmd_topology(const LoadedInputs& in, Family family, Kind kind, std::ostream& out) {
  auto sys = build_system(in.relation, family, kind, in.ideal);
  SetFamily t = in.ideal ? generate_topology_ideal(sys, *in.ideal) : generate_topology(sys);
  out << family_to_json(t).dump(1) << '\n';
  out << "members: " << t.size() << '\n';
  out << "topology: " << (is_topology(t) ? "yes" : "no") << '\n';
  return 0;
}

inline int cmd_check(const LoadedInputs& in, const Claim& claim, std::ostream& out) {
  const Ideal k = in.ideal ? *in.ideal : Ideal::trivial(in.relation.universe());
  Verdict v = check_claim(claim, in.relation, k);
  out << "claim: " << claim.id << '\n';
  out << "statement: " << claim.statement << '\n';
  out << "status: " << verdict_name(v.status) << '\n';
  if (v.violation) out << "violation: " << v.violation->detail << '\n';
  return (v.status == VerdictStatus::Fails && claim.expected == ClaimStatus::Theorem) ? 1 : 0;
}

inline int cmd_search(const Claim& claim, std::size_t max_n, std::ostream& out) {
  auto witness = search_counterexample(claim, max_n, search_cap_from_env());
  out << "claim: " << claim.id << '\n';
  if (!witness) {
    out << "no counterexample up to n=" << max_n << '\n';
    return 0;
  }
  out << "relation: " << relation_to_json(witness->relation).dump() << '\n';
  out << "ideal: " << ideal_to_json(witness->ideal).dump() << '\n';
  out << "violation: " << witness->violation.detail << '\n';
  return claim.expected == ClaimStatus::Theorem ? 1 : 0;
}

inline int cmd_ingest(const std::string& table_path, const std::string& threshold_text,
                      const std::string& output_path, std::ostream& out) {
  InformationTable table = load_table(table_path);
  FiniteRelation r = ingest_information_table(table, parse_rational(threshold_text));
  const Json j = relation_to_json(r);
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw ParseError("cannot write file: " + output_path);
  file << j.dump(1) << '\n';
  out << "wrote " << output_path << ": " << r.size() << " objects, " << r.pair_count()
      << " pairs\n";
  return 0;
}

inline int cmd_examples(std::ostream& out) {
  FixtureReport report = replay_fixtures();
  for (const auto& c : report.checks) {
    if (c.pass)
      out << "ok " << c.fixture << ": " << c.label << " = " << c.actual << '\n';
    else
      out << "FAIL " << c.fixture << ": " << c.label << " expected " << c.expected << " got "
          << c.actual << '\n';
  }
  out << "fixtures: " << report.checks.size() << " checks, " << report.failures()
      << " failures\n";
  return report.all_pass() ? 0 : 1;
}

}  // namespace cli_detail

/// Entry point shared by the binary and the tests. Exit codes: 0 success,
/// 1 falsified theorem or fixture mismatch, 2 usage or input errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite rough-set neighborhood laboratory"};
  app.require_subcommand(1);

  std::string relation_path, ideal_path, family_flag, kind_flag, element, set_literal;
  std::string variant_flag, format_flag = "text", claim_id, table_path, threshold_text = "1";
  std::string output_path;
  bool all_subsets = false, list_claims = false;
  std::size_t max_n = 4;

  auto add_common = [&](CLI::App* cmd, bool need_kind) {
    cmd->add_option("--relation", relation_path, "relation JSON file")->required();
    cmd->add_option("--ideal", ideal_path, "ideal JSON file");
    cmd->add_option("--family", family_flag, "omega|rho|i|ik");
    auto* kind = cmd->add_option("--kind", kind_flag, "a|b|<a>|<b>|i|u|<i>|<u>");
    if (need_kind) kind->required();
  };

  CLI::App* nbhd = app.add_subcommand("nbhd", "print one neighborhood or a full system");
  add_common(nbhd, true);
  nbhd->add_option("--element", element, "element name (omit for the full system)");
  nbhd->add_option("--format", format_flag, "text|csv|markdown|json");

  CLI::App* approx = app.add_subcommand("approx", "lower/upper approximation report");
  add_common(approx, true);
  approx->add_option("--set", set_literal, "subset literal, e.g. \"q,t\" (∅ or \"\" for empty)");
  approx->add_flag("--all-subsets", all_subsets, "report every subset (universe of at most 5)");
  approx->add_option("--variant", variant_flag, "accuracy variant: iou|plain");
  approx->add_option("--format", format_flag, "text|csv|markdown|json");

  CLI::App* topology = app.add_subcommand("topology", "generate a topology and check the axioms");
  add_common(topology, true);

  CLI::App* check = app.add_subcommand("check", "evaluate a registered claim on one instance");
  check->add_option("--claim", claim_id, "claim id (see --list)");
  check->add_option("--relation", relation_path, "relation JSON file");
  check->add_option("--ideal", ideal_path, "ideal JSON file");
  check->add_flag("--list", list_claims, "list registered claims");

  CLI::App* search = app.add_subcommand("search", "search for a counterexample to a claim");
  search->add_option("--claim", claim_id, "claim id")->required();
  search->add_option("--max-n", max_n, "largest universe size to scan (default 4)");

  CLI::App* ingest = app.add_subcommand("ingest", "derive a relation from an information table");
  ingest->add_option("--table", table_path, "information table CSV")->required();
  ingest->add_option("--threshold", threshold_text, "agreement threshold in [0,1], e.g. 2/3");
  ingest->add_option("--output", output_path, "relation JSON to write")->required();

  CLI::App* examples = app.add_subcommand("examples", "replay the bundled fixtures");

  std::vector<const char*> argv;
  argv.push_back("roughlab");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (nbhd->parsed() || approx->parsed() || topology->parsed()) {
      auto in = cli_detail::load_inputs(relation_path, ideal_path, err);
      const bool topo = topology->parsed();
      Family family = cli_detail::resolve_family(family_flag, in.ideal.has_value(), topo);
      if (family != Family::OverlapIdeal && in.ideal && nbhd->parsed())
        throw ConfigError("--ideal is superfluous for family " +
                          std::string(family_name(family)) + " neighborhoods");
      Kind kind = cli_detail::resolve_kind(kind_flag);
      auto fmt = parse_format(format_flag);
      if (!fmt) throw ConfigError("unknown format: " + format_flag);
      if (nbhd->parsed()) return cli_detail::cmd_nbhd(in, family, kind, element, *fmt, out);
      if (approx->parsed())
        return cli_detail::cmd_approx(in, family, kind, set_literal, all_subsets, variant_flag,
                                      *fmt, out);
      return cli_detail::cmd_topology(in, family, kind, out);
    }
    if (check->parsed()) {
      if (list_claims) {
        for (const Claim& c : claim_registry())
          out << c.id << " [" << (c.expected == ClaimStatus::Theorem ? "theorem" : "refuted")
              << "]: " << c.statement << '\n';
        return 0;
      }
      if (claim_id.empty() || relation_path.empty())
        throw ConfigError("check requires --claim and --relation (or --list)");
      const Claim* claim = find_claim(claim_id);
      if (!claim) throw ConfigError("unknown claim: " + claim_id);
      auto in = cli_detail::load_inputs(relation_path, ideal_path, err);
      return cli_detail::cmd_check(in, *claim, out);
    }
    if (search->parsed()) {
      const Claim* claim = find_claim(claim_id);
      if (!claim) throw ConfigError("unknown claim: " + claim_id);
      return cli_detail::cmd_search(*claim, max_n, out);
    }
    if (ingest->parsed())
      return cli_detail::cmd_ingest(table_path, threshold_text, output_path, out);
    if (examples->parsed()) return cli_detail::cmd_examples(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace roughlab
