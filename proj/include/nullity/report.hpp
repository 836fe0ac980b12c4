#pragma once

#include "nullity/formulas.hpp"
#include "nullity/groupring.hpp"
#include "nullity/oracle.hpp"
#include "nullity/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nullity {

enum class Command { oracle, formula, compare, table1, catalog };
enum class Format { json, text };
enum class VariantChoice { printed, derived, both };

Command parse_command(std::string_view text);
Format parse_format(std::string_view text);
VariantChoice parse_variant(std::string_view text);

struct RunRequest {
  Command command = Command::oracle;
  std::string coeff;
  std::string group;
  std::optional<Side> side;  // oracle/formula/compare default left, catalog twosided
  VariantChoice variant = VariantChoice::both;
  Format format = Format::text;
  Limits limits;
  BigRational threshold{1, 4};  // catalog only
  std::uint64_t catalog_max_size = 1024;
  bool timing = true;  // false pins elapsed_ms to 0 for byte-stable output
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

/// Runs one CLI command. Exit code 0 iff nothing unexpected: published cells
/// the errata manifest lists are expected mismatches.
RunResult run_command(const RunRequest& request);

// ---------------------------------------------------------------------------
// Errata manifest
// ---------------------------------------------------------------------------

struct Erratum {
  std::string key;   // formula id ("c5.printed.case3") or table cell ("table1.row5")
  std::string kind;  // "formula-mismatch", "paper-typo" or "convention-note"
  std::string description;
};

std::span<const Erratum> errata_manifest();
const Erratum* find_erratum(std::string_view key);

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

/// Annihilator record for any coefficient ring: sizes ascending with their
/// element counts. Field instances come from the rank census, Z/nZ
/// instances from enumeration.
struct OracleRecord {
  std::string group;
  std::string coeff;
  Side side = Side::left;
  std::vector<BigInt> ann_sizes;
  std::vector<std::uint64_t> counts;
  BigRational probability;
  std::uint64_t elapsed_ms = 0;
};

OracleRecord oracle_record(const GroupRing& ring, Side side, const Limits& limits);
OracleRecord to_record(const AnnihilatorHistogram& h);
std::string record_json(const OracleRecord& r);
/// rec(Size := [ ... ], |ann_l| := [ ... ], group := "S3", ...) layout.
std::string record_text(const OracleRecord& r);

struct CompareRow {
  std::string label;  // "oracle" or a formula id
  std::optional<Variant> variant;
  BigRational value;
  bool matches_oracle = true;
  const Erratum* erratum = nullptr;
  std::string provenance;
};

struct Comparison {
  std::string coeff;
  std::string group;
  Side side = Side::left;
  BigRational oracle;
  std::vector<CompareRow> rows;  // oracle first
  [[nodiscard]] bool unexpected_mismatch() const;
};

Comparison compare_instance(const GroupRing& ring, Side side, const Limits& limits);

struct Table1Row {
  int number = 0;
  std::string display;
  std::string coeff;
  std::string group;
  std::string printed_text;  // as published, unreduced
  BigRational printed;
  std::string printed_decimal;
  BigRational oracle;                      // two-sided (all sides agree when abelian)
  std::optional<BigRational> oracle_left;  // nonabelian rows only
  std::string status;                      // match | paper-typo | convention-note | mismatch
  std::string note;
  bool expected = true;
};

std::vector<Table1Row> reproduce_table1(const Limits& limits);

}  // namespace nullity
