#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "roughlab/approximation.hpp"
#include "roughlab/topology.hpp"

namespace roughlab {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// relation files: {"universe": ["p","q"], "pairs": [["p","q"], ...]}
// ---------------------------------------------------------------------------

inline FiniteRelation relation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("universe") || !j["universe"].is_array())
    throw ParseError("relation file needs a \"universe\" array");
  std::vector<std::string> names;
  for (const auto& n : j["universe"]) {
    if (!n.is_string()) throw ParseError("universe entries must be strings");
    names.push_back(n.get<std::string>());
  }
  Universe u(std::move(names));
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("pairs")) {
    if (!j["pairs"].is_array()) throw ParseError("\"pairs\" must be an array");
    for (const auto& p : j["pairs"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw ParseError("each pair must be a two-string array");
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  return FiniteRelation::from_pairs(std::move(u), pairs);
}

inline Json relation_to_json(const FiniteRelation& r) {
  Json j;
  j["universe"] = r.universe().names();
  Json pairs = Json::array();
  for (const auto& [a, b] : r.pairs()) pairs.push_back(Json::array({a, b}));
  j["pairs"] = std::move(pairs);
  return j;
}

// ---------------------------------------------------------------------------
// ideal files: {"basis": [["t"]]} and/or {"carrier": ["s","t"]}
// ---------------------------------------------------------------------------

inline Ideal ideal_from_json(const Json& j, const Universe& u) {
  if (!j.is_object()) throw ParseError("ideal file must be an object");
  std::optional<Ideal> from_basis, from_carrier;
  if (j.contains("basis")) {
    if (!j["basis"].is_array()) throw ParseError("\"basis\" must be an array of name arrays");
    std::vector<Subset> basis;
    for (const auto& member : j["basis"]) {
      if (!member.is_array()) throw ParseError("each basis member must be a name array");
      std::uint64_t bits = 0;
      for (const auto& n : member) {
        if (!n.is_string()) throw ParseError("basis entries must be strings");
        bits |= std::uint64_t{1} << u.index(n.get<std::string>());
      }
      basis.push_back(u.subset_bits(bits));
    }
    from_basis = Ideal::from_basis(basis);
  }
  if (j.contains("carrier")) {
    if (!j["carrier"].is_array()) throw ParseError("\"carrier\" must be a name array");
    std::uint64_t bits = 0;
    for (const auto& n : j["carrier"]) {
      if (!n.is_string()) throw ParseError("carrier entries must be strings");
      bits |= std::uint64_t{1} << u.index(n.get<std::string>());
    }
    from_carrier = Ideal(u.subset_bits(bits));
  }
  if (from_basis && from_carrier) {
    if (!(*from_basis == *from_carrier))
      throw ParseError("ideal file: basis and carrier induce different ideals");
    return *from_basis;
  }
  if (from_basis) return *from_basis;
  if (from_carrier) return *from_carrier;
  throw ParseError("ideal file needs \"basis\" or \"carrier\"");
}

inline Json ideal_to_json(const Ideal& k) {
  Json j;
  j["carrier"] = k.carrier().names();
  return j;
}

inline Json parse_json_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + what);
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FiniteRelation load_relation(const std::string& path) {
  return relation_from_json(parse_json_text(read_file(path), path));
}

inline Ideal load_ideal(const std::string& path, const Universe& u) {
  return ideal_from_json(parse_json_text(read_file(path), path), u);
}

// ---------------------------------------------------------------------------
// set literals and set families
// ---------------------------------------------------------------------------

namespace detail {
inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}
}  // namespace detail

/// Comma-separated element names; "" and "∅" denote the empty set.
inline Subset parse_set_literal(const Universe& u, std::string_view literal) {
  std::string_view body = detail::trim(literal);
  if (body.empty() || body == "∅") return u.empty_set();
  std::uint64_t bits = 0;
  while (true) {
    const auto comma = body.find(',');
    std::string_view tok = detail::trim(body.substr(0, comma));
    if (tok.empty()) throw ParseError("empty element name in set literal");
    bits |= std::uint64_t{1} << u.index(tok);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return u.subset_bits(bits);
}

/// Canonically ordered JSON list of element-name lists.
inline Json family_to_json(const SetFamily& f) {
  Json out = Json::array();
  for (const auto& m : f.members()) out.push_back(m.names());
  return out;
}

// ---------------------------------------------------------------------------
// information tables (CSV with a header row; first column = object name)
// ---------------------------------------------------------------------------

struct InformationTable {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<std::vector<std::string>> values;  // values[object][attribute]
};

inline InformationTable table_from_csv(std::istream& in) {
  InformationTable t;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    std::string_view rest = detail::trim(line);
    if (rest.empty()) continue;
    std::vector<std::string> cells;
    while (true) {
      const auto comma = rest.find(',');
      cells.emplace_back(detail::trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (header) {
      if (cells.size() < 2) throw ParseError("information table needs at least one attribute");
      t.attributes.assign(cells.begin() + 1, cells.end());
      header = false;
      continue;
    }
    if (cells.size() != t.attributes.size() + 1)
      throw ParseError("ragged information table row: " + cells.front());
    t.objects.push_back(cells.front());
    t.values.emplace_back(cells.begin() + 1, cells.end());
  }
  if (header) throw ParseError("information table is empty");
  if (t.objects.empty()) throw ParseError("information table has no object rows");
  return t;
}

inline InformationTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return table_from_csv(in);
}

/// sRt iff the fraction of attributes where s and t agree is at least the
/// threshold. Threshold 1 is plain attribute indiscernibility (an
/// equivalence); threshold 0 relates everything.
inline FiniteRelation ingest_information_table(const InformationTable& t,
                                               const Rational& threshold) {
  if (threshold.num() < 0 || threshold.num() > threshold.den())
    throw ConfigError("threshold must lie in [0,1]");
  Universe u(t.objects);
  const long long total = static_cast<long long>(t.attributes.size());
  std::vector<std::uint64_t> rows(u.size(), 0);
  for (std::size_t s = 0; s < u.size(); ++s)
    for (std::size_t e = 0; e < u.size(); ++e) {
      long long agree = 0;
      for (std::size_t a = 0; a < t.attributes.size(); ++a)
        if (t.values[s][a] == t.values[e][a]) ++agree;
      // agree/total >= num/den  <=>  agree*den >= num*total
      if (agree * threshold.den() >= threshold.num() * total)
        rows[s] |= std::uint64_t{1} << e;
    }
  return FiniteRelation(std::move(u), std::move(rows));
}

/// "2/3", "0.75", "1" — exact.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = detail::trim(text);
  if (body.empty()) throw ParseError("empty number");
  const auto slash = body.find('/');
  const auto parse_ll = [](std::string_view s) -> long long {
    if (s.empty()) throw ParseError("malformed number");
    long long v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw ParseError("malformed number: " + std::string(s));
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (slash != std::string_view::npos) {
    long long den = parse_ll(body.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator");
    return Rational(parse_ll(body.substr(0, slash)), den);
  }
  const auto dot = body.find('.');
  if (dot == std::string_view::npos) return Rational(parse_ll(body), 1);
  std::string_view frac = body.substr(dot + 1);
  long long den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  return Rational(parse_ll(body.substr(0, dot)) * den + (frac.empty() ? 0 : parse_ll(frac)), den);
}

// ---------------------------------------------------------------------------
// report rendering
// ---------------------------------------------------------------------------

enum class ReportFormat { Csv, Markdown, Json, Text };

inline std::optional<ReportFormat> parse_format(std::string_view s) {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "markdown" || s == "md") return ReportFormat::Markdown;
  if (s == "json") return ReportFormat::Json;
  if (s == "text") return ReportFormat::Text;
  return std::nullopt;
}

struct ApproxRow {
  Subset set;
  ApproximationResult result;
};

/// One row per subset: set, lower, upper, boundary, accuracy, exact. The
/// accuracy column is labelled with the variant so the formula in use is
/// always visible in the report itself.
inline std::string render_approx(const std::vector<ApproxRow>& rows, ReportFormat fmt,
                                 AccuracyVariant variant) {
  const std::string acc_head = "accuracy(" + std::string(variant_name(variant)) + ")";
  std::ostringstream out;
  switch (fmt) {
    case ReportFormat::Csv:
      out << "set,lower,upper,boundary," << acc_head << ",exact\n";
      for (const auto& row : rows)
        out << '"' << row.set.to_string() << "\",\"" << row.result.lower.to_string() << "\",\""
            << row.result.upper.to_string() << "\",\"" << row.result.boundary.to_string()
            << "\"," << accuracy_str(row.result.accuracy) << ','
            << (row.result.exact ? "true" : "false") << '\n';
      break;
    case ReportFormat::Markdown:
    case ReportFormat::Text:
      out << "| set | lower | upper | boundary | " << acc_head << " | exact |\n";
      out << "| --- | --- | --- | --- | --- | --- |\n";
      for (const auto& row : rows)
        out << "| " << row.set.to_string() << " | " << row.result.lower.to_string() << " | "
            << row.result.upper.to_string() << " | " << row.result.boundary.to_string() << " | "
            << accuracy_str(row.result.accuracy) << " | " << (row.result.exact ? "true" : "false")
            << " |\n";
      break;
    case ReportFormat::Json: {
      Json doc;
      doc["variant"] = std::string(variant_name(variant));
      Json arr = Json::array();
      for (const auto& row : rows) {
        Json r;
        r["set"] = row.set.names();
        r["lower"] = row.result.lower.names();
        r["upper"] = row.result.upper.names();
        r["boundary"] = row.result.boundary.names();
        r["accuracy"] = accuracy_str(row.result.accuracy);
        r["exact"] = row.result.exact;
        arr.push_back(std::move(r));
      }
      doc["rows"] = std::move(arr);
      out << doc.dump(1) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace roughlab
