#include "nullity/report.hpp"

#include "nullity/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <sstream>

namespace nullity {

namespace {

using json = nlohmann::ordered_json;

const std::array<Erratum, 5> kErrata{{
    {"c5.printed.case1", "formula-mismatch",
     "published C5 polynomial for characteristic 5 disagrees with the census; the chain-ring value (6q-5)/q^6 matches"},
    {"c5.printed.case3", "formula-mismatch",
     "published C5 polynomial for q = 4 (mod 5) disagrees with the census and with the cyclic decomposition formula"},
    {"c5.printed.case4", "formula-mismatch",
     "published C5 polynomial for q = 1 (mod 5) disagrees with the census except at q = 11, where the two happen to coincide"},
    {"table1.row5", "paper-typo", "F2C4 printed as 3/36; the census gives 3/16, which the printed decimal 0.18 matches"},
    {"table1.row11", "convention-note",
     "F2S3 fraction 5/64 is the two-sided value, the decimal 0.113 is the one-sided value 29/256"},
}};

json rational_json(const BigRational& r) {
  return {{"num", boost::multiprecision::numerator(r).str()}, {"den", boost::multiprecision::denominator(r).str()}};
}

std::string with_decimal(const BigRational& r) { return to_string(r) + " (~" + to_decimal(r, 6) + ")"; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

template <typename T>
std::string gap_list(const std::vector<T>& values) {
  std::vector<std::string> parts;
  for (const auto& v : values) {
    if constexpr (std::is_same_v<T, BigInt>)
      parts.push_back(v.str());
    else
      parts.push_back(std::to_string(v));
  }
  return "[ " + join(parts, ", ") + " ]";
}

/// |d - v| < 10^-k where k is the number of digits after the point in d.
bool decimal_consistent(const std::string& decimal, const BigRational& v) {
  const auto dot = decimal.find('.');
  const std::size_t k = dot == std::string::npos ? 0 : decimal.size() - dot - 1;
  std::string digits = decimal;
  if (dot != std::string::npos) digits.erase(dot, 1);
  // cpp_int reads a leading 0 as octal
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  const BigRational d(BigInt(digits), big_pow(10, k));
  BigRational diff = d - v;
  if (diff < 0) diff = -diff;
  return diff < BigRational(1, big_pow(10, k));
}

GroupRing make_ring(const std::string& coeff, const std::string& group, const Limits&) {
  if (coeff.empty()) throw Error(ErrorCode::parse, "--coeff is required");
  if (group.empty()) throw Error(ErrorCode::parse, "--group is required");
  return GroupRing(CoeffRing::parse(coeff), CayleyGroup::parse(group));
}

std::string comparison_text(const Comparison& c) {
  std::ostringstream out;
  out << "instance " << c.coeff << "[" << c.group << "] side=" << to_string(c.side) << "\n";
  for (const auto& row : c.rows) {
    out << "  " << row.label;
    if (row.variant) out << " [" << to_string(*row.variant) << "]";
    out << ": " << with_decimal(row.value);
    if (row.variant) {
      out << "  match=" << (row.matches_oracle ? "true" : "false");
      if (!row.matches_oracle) out << (row.erratum ? "  known erratum: " + row.erratum->description : "  UNEXPECTED");
    }
    out << "\n";
  }
  return out.str();
}

json comparison_json(const Comparison& c) {
  json rows = json::array();
  for (const auto& row : c.rows) {
    json r{{"label", row.label}, {"value", rational_json(row.value)}, {"decimal", to_decimal(row.value, 20)}};
    if (row.variant) {
      r["variant"] = to_string(*row.variant);
      r["matches_oracle"] = row.matches_oracle;
      r["provenance"] = row.provenance;
      r["known_erratum"] = row.erratum ? json(row.erratum->key) : json(nullptr);
    }
    rows.push_back(std::move(r));
  }
  return {{"coeff", c.coeff}, {"group", c.group}, {"side", to_string(c.side)}, {"rows", rows}};
}

RunResult run_oracle(const RunRequest& req) {
  const auto ring = make_ring(req.coeff, req.group, req.limits);
  auto record = oracle_record(ring, req.side.value_or(Side::left), req.limits);
  if (!req.timing) record.elapsed_ms = 0;
  return {0, req.format == Format::json ? record_json(record) + "\n" : record_text(record) + "\n"};
}

RunResult run_formula(const RunRequest& req) {
  const auto ring = make_ring(req.coeff, req.group, req.limits);
  const Side side = req.side.value_or(Side::left);
  auto results = formulas_for(ring.coeffs(), ring.group(), side);
  if (req.variant != VariantChoice::both) {
    const Variant want = req.variant == VariantChoice::printed ? Variant::printed : Variant::derived;
    std::erase_if(results, [&](const FormulaResult& r) { return r.variant != want; });
    if (results.empty())
      throw Error(ErrorCode::domain, std::string("no ") + to_string(want) + " formula for " + ring.coeffs().spec() + "[" +
                                         ring.group().label() + "]");
  }
  if (req.format == Format::json) {
    json items = json::array();
    for (const auto& r : results)
      items.push_back({{"id", r.id},
                       {"variant", to_string(r.variant)},
                       {"value", rational_json(r.value)},
                       {"decimal", to_decimal(r.value, 20)},
                       {"provenance", r.provenance}});
    json doc{{"coeff", ring.coeffs().spec()}, {"group", ring.group().label()}, {"side", to_string(side)}, {"results", items}};
    return {0, doc.dump(2) + "\n"};
  }
  std::ostringstream out;
  out << ring.coeffs().spec() << "[" << ring.group().label() << "] side=" << to_string(side) << "\n";
  for (const auto& r : results)
    out << "  " << r.id << " [" << to_string(r.variant) << "]: " << with_decimal(r.value) << "\n    " << r.provenance
        << "\n";
  return {0, out.str()};
}

RunResult run_compare(const RunRequest& req) {
  const auto ring = make_ring(req.coeff, req.group, req.limits);
  const auto cmp = compare_instance(ring, req.side.value_or(Side::left), req.limits);
  const int code = cmp.unexpected_mismatch() ? 1 : 0;
  if (req.format == Format::json) return {code, comparison_json(cmp).dump(2) + "\n"};
  return {code, comparison_text(cmp)};
}

RunResult run_table1(const RunRequest& req) {
  const auto rows = reproduce_table1(req.limits);
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.expected; });
  if (req.format == Format::json) {
    json items = json::array();
    for (const auto& r : rows) {
      json item{{"n", r.number},
                {"ring", r.display},
                {"coeff", r.coeff},
                {"group", r.group},
                {"printed", r.printed_text},
                {"printed_decimal", r.printed_decimal},
                {"oracle", rational_json(r.oracle)},
                {"status", r.status},
                {"expected", r.expected},
                {"note", r.note}};
      if (r.oracle_left) item["oracle_left"] = rational_json(*r.oracle_left);
      items.push_back(std::move(item));
    }
    return {ok ? 0 : 1, json{{"rows", items}}.dump(2) + "\n"};
  }
  std::ostringstream out;
  out << "n   ring            printed           oracle (two-sided)        oracle (left)             status\n";
  for (const auto& r : rows) {
    auto pad = [](std::string s, std::size_t w) {
      if (s.size() < w) s.resize(w, ' ');
      return s + " ";
    };
    out << pad(std::to_string(r.number), 3) << pad(r.display, 15)
        << pad(r.printed_text + " ~" + r.printed_decimal, 17) << pad(with_decimal(r.oracle), 25)
        << pad(r.oracle_left ? with_decimal(*r.oracle_left) : "-", 25) << r.status << "\n";
    if (!r.note.empty()) out << "    note: " << r.note << "\n";
  }
  return {ok ? 0 : 1, out.str()};
}

RunResult run_catalog(const RunRequest& req) {
  const auto catalog = default_catalog(req.catalog_max_size);
  const auto cls = classify_threshold(catalog, req.threshold, req.limits, req.side.value_or(Side::twosided));
  auto selected = [&](const CatalogInstance& inst) {
    return std::any_of(cls.selected.begin(), cls.selected.end(),
                       [&](const ClassifiedInstance& s) { return s.instance.name() == inst.name(); });
  };
  if (req.format == Format::json) {
    json evaluated = json::array(), chosen = json::array(), skipped = json::array();
    for (const auto& e : cls.evaluated)
      evaluated.push_back({{"coeff", e.instance.coeff}, {"group", e.instance.group},
                           {"probability", rational_json(e.probability)}, {"selected", selected(e.instance)}});
    for (const auto& s : cls.selected) chosen.push_back(s.instance.name());
    for (const auto& s : cls.skipped) skipped.push_back({{"instance", s.instance.name()}, {"reason", s.reason}});
    json doc{{"threshold", rational_json(cls.threshold)}, {"side", to_string(cls.convention)},
             {"evaluated", evaluated}, {"selected", chosen}, {"skipped", skipped}};
    return {0, doc.dump(2) + "\n"};
  }
  std::ostringstream out;
  out << "threshold " << to_string(cls.threshold) << " side=" << to_string(cls.convention) << ", "
      << cls.evaluated.size() << " instances evaluated, " << cls.skipped.size() << " skipped\n";
  for (const auto& s : cls.selected) out << "  selected " << s.instance.name() << ": " << with_decimal(s.probability) << "\n";
  for (const auto& s : cls.skipped) out << "  skipped " << s.instance.name() << ": " << s.reason << "\n";
  return {0, out.str()};
}

}  // namespace

Command parse_command(std::string_view text) {
  if (text == "oracle") return Command::oracle;
  if (text == "formula") return Command::formula;
  if (text == "compare") return Command::compare;
  if (text == "table1") return Command::table1;
  if (text == "catalog") return Command::catalog;
  throw Error(ErrorCode::parse, "unknown command '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "text") return Format::text;
  throw Error(ErrorCode::parse, "format must be json or text");
}

VariantChoice parse_variant(std::string_view text) {
  if (text == "printed") return VariantChoice::printed;
  if (text == "derived") return VariantChoice::derived;
  if (text == "both") return VariantChoice::both;
  throw Error(ErrorCode::parse, "variant must be printed, derived or both");
}

std::span<const Erratum> errata_manifest() { return kErrata; }

const Erratum* find_erratum(std::string_view key) {
  const auto it = std::find_if(kErrata.begin(), kErrata.end(), [&](const Erratum& e) { return e.key == key; });
  return it == kErrata.end() ? nullptr : &*it;
}

OracleRecord to_record(const AnnihilatorHistogram& h) {
  return {h.group, h.coeff, h.side, h.ann_sizes(), h.counts, h.probability(), 0};
}

OracleRecord oracle_record(const GroupRing& ring, Side side, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  OracleRecord record;
  if (ring.coeffs().is_field()) {
    record = to_record(annihilator_histogram(ring, side, limits));
  } else {
    const GroupRingView view(std::make_shared<const GroupRing>(ring));
    const auto census = annihilator_census(view, side, limits);
    record.group = ring.group().label();
    record.coeff = ring.coeffs().spec();
    record.side = side;
    for (const auto& [size, count] : census) {
      record.ann_sizes.emplace_back(size);
      record.counts.push_back(count);
    }
    record.probability = census_probability(census, view.size());
  }
  record.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return record;
}

std::string record_json(const OracleRecord& r) {
  json sizes = json::array();
  for (const auto& s : r.ann_sizes) sizes.push_back(s.convert_to<std::uint64_t>());
  json doc{{"group", r.group},
           {"coeff", r.coeff},
           {"side", to_string(r.side)},
           {"ann_sizes", sizes},
           {"counts", r.counts},
           {"probability", rational_json(r.probability)},
           {"elapsed_ms", r.elapsed_ms}};
  return doc.dump();
}

std::string record_text(const OracleRecord& r) {
  const char* label = r.side == Side::left ? "|ann_l|" : r.side == Side::right ? "|ann_r|" : "|ann|";
  std::ostringstream out;
  out << "rec( Size := " << gap_list(r.counts) << ",\n     " << label << " := " << gap_list(r.ann_sizes)
      << ", group := \"" << r.group << "\", coeff := \"" << r.coeff << "\", p := " << to_string(r.probability) << " )";
  return out.str();
}

bool Comparison::unexpected_mismatch() const {
  return std::any_of(rows.begin(), rows.end(), [](const CompareRow& r) { return !r.matches_oracle && !r.erratum; });
}

Comparison compare_instance(const GroupRing& ring, Side side, const Limits& limits) {
  Comparison c;
  c.coeff = ring.coeffs().spec();
  c.group = ring.group().label();
  c.side = side;
  c.oracle = nullity_probability(ring, side, limits);
  c.rows.push_back({"oracle", std::nullopt, c.oracle, true, nullptr, "exhaustive census"});
  std::vector<FormulaResult> formulas;
  try {
    formulas = formulas_for(ring.coeffs(), ring.group(), side);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::domain) throw;
  }
  for (auto& f : formulas) {
    CompareRow row{f.id, f.variant, f.value, f.value == c.oracle, nullptr, f.provenance};
    // Derived values are ours and have no excuse to disagree.
    if (!row.matches_oracle && f.variant == Variant::printed) row.erratum = find_erratum(f.id);
    c.rows.push_back(std::move(row));
  }
  return c;
}

std::vector<Table1Row> reproduce_table1(const Limits& limits) {
  struct Published {
    const char* display;
    const char* coeff;
    const char* group;
    const char* fraction;
    const char* decimal;
  };
  static constexpr std::array<Published, 11> kRows{{
      {"F2C2", "F:2", "C:2", "1/2", "0.5"},
      {"F3C2", "F:3", "C:2", "25/81", "0.308"},
      {"F5C2", "F:5", "C:2", "81/625", "0.129"},
      {"F2C3", "F:2", "C:3", "21/64", "0.328"},
      {"F2C4", "F:2", "C:4", "3/36", "0.18"},
      {"F3C3", "F:3", "C:3", "1/9", "0.111"},
      {"F4C2", "F:4", "C:2", "5/32", "0.156"},
      {"F2(C2xC2)", "F:2", "C:2xC:2", "7/32", "0.218"},
      {"Z4C2", "Z:4", "C:2", "7/32", "0.218"},
      {"Z6C2", "Z:6", "C:2", "25/162", "0.154"},
      {"F2S3", "F:2", "S3", "5/64", "0.113"},
  }};
  std::vector<Table1Row> rows;
  for (std::size_t i = 0; i < kRows.size(); ++i) {
    const auto& pub = kRows[i];
    Table1Row row;
    row.number = static_cast<int>(i + 1);
    row.display = pub.display;
    row.coeff = pub.coeff;
    row.group = pub.group;
    row.printed_text = pub.fraction;
    row.printed = parse_rational(pub.fraction);
    row.printed_decimal = pub.decimal;
    const GroupRing ring(CoeffRing::parse(pub.coeff), CayleyGroup::parse(pub.group));
    row.oracle = nullity_probability(ring, Side::twosided, limits);
    if (!ring.group().is_abelian()) row.oracle_left = nullity_probability(ring, Side::left, limits);

    const bool fraction_ok = row.printed == row.oracle;
    const bool decimal_ok = decimal_consistent(row.printed_decimal, row.oracle);
    const bool decimal_left = row.oracle_left && decimal_consistent(row.printed_decimal, *row.oracle_left);
    if (fraction_ok && decimal_ok) {
      row.status = "match";
    } else if (!fraction_ok && decimal_ok) {
      row.status = "paper-typo";
      row.note = "printed fraction " + row.printed_text + " is not the census value " + to_string(row.oracle) +
                 "; the printed decimal " + row.printed_decimal + " is";
    } else if (fraction_ok && decimal_left) {
      row.status = "convention-note";
      row.note = "fraction is the two-sided value; decimal " + row.printed_decimal + " is the one-sided value " +
                 to_string(*row.oracle_left);
    } else {
      row.status = "mismatch";
    }
    if (row.status != "match") {
      const auto* e = find_erratum("table1.row" + std::to_string(row.number));
      row.expected = e != nullptr && e->kind == row.status;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RunResult run_command(const RunRequest& request) {
  switch (request.command) {
    case Command::oracle: return run_oracle(request);
    case Command::formula: return run_formula(request);
    case Command::compare: return run_compare(request);
    case Command::table1: return run_table1(request);
    case Command::catalog: return run_catalog(request);
  }
  throw Error(ErrorCode::internal, "unknown command");
}

}  // namespace nullity
