// nullity: zero-product probabilities of finite group algebras, by census
// and by closed form.
#include "nullity/nullity.h"

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"Exact zero-product probabilities of finite group algebras"};
  app.require_subcommand(1);

  nullity_limits limits;
  nullity_limits_default(&limits);
  std::string coeff, group, side, variant = "both", format = "text", threshold = "1/4";
  bool no_timing = false;

  const std::map<std::string, nullity_command> commands{
      {"oracle", NULLITY_CMD_ORACLE},   {"formula", NULLITY_CMD_FORMULA}, {"compare", NULLITY_CMD_COMPARE},
      {"table1", NULLITY_CMD_TABLE1},   {"catalog", NULLITY_CMD_CATALOG}};
  const std::map<std::string, std::string> help{
      {"oracle", "annihilator census record and exact probability"},
      {"formula", "closed-form values that apply to the instance"},
      {"compare", "closed forms against the census, with exact-match flags"},
      {"table1", "reproduce the published table of algebras with P >= 1/10"},
      {"catalog", "threshold classification over F_q C_n (q^n <= 1024) and extra instances"}};

  for (const auto& [name, cmd] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    if (cmd == NULLITY_CMD_ORACLE || cmd == NULLITY_CMD_FORMULA || cmd == NULLITY_CMD_COMPARE) {
      sub->add_option("--coeff", coeff, "coefficient ring: F:p^m, F:q or Z:n")->required();
      sub->add_option("--group", group, "group: C:n, AxB, S3, Q8 or @table.json")->required();
    }
    if (cmd != NULLITY_CMD_TABLE1)
      sub->add_option("--side", side, "left, right or twosided")->check(CLI::IsMember({"left", "right", "twosided"}));
    if (cmd == NULLITY_CMD_FORMULA)
      sub->add_option("--variant", variant, "printed, derived or both")->check(CLI::IsMember({"printed", "derived", "both"}));
    if (cmd == NULLITY_CMD_CATALOG) sub->add_option("--threshold", threshold, "selection threshold a/b");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-elements", limits.max_elements, "census element cap")->check(CLI::PositiveNumber);
    sub->add_option("--max-pairs", limits.max_pairs, "naive pair-count cap")->check(CLI::PositiveNumber);
    sub->add_option("--workers", limits.workers, "worker threads (0 = all cores)");
    sub->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");
  }

  CLI11_PARSE(app, argc, argv);

  nullity_request req;
  nullity_request_default(&req);
  const std::string name = app.get_subcommands().front()->get_name();
  req.command = commands.at(name);
  req.coeff = coeff.empty() ? nullptr : coeff.c_str();
  req.group = group.empty() ? nullptr : group.c_str();
  req.side = side.empty() ? -1 : side == "left" ? NULLITY_SIDE_LEFT : side == "right" ? NULLITY_SIDE_RIGHT : NULLITY_SIDE_TWOSIDED;
  req.variant = variant == "printed" ? NULLITY_VARIANT_PRINTED : variant == "derived" ? NULLITY_VARIANT_DERIVED : NULLITY_VARIANT_BOTH;
  req.format = format == "json" ? NULLITY_FORMAT_JSON : NULLITY_FORMAT_TEXT;
  req.limits = limits;
  req.threshold = threshold.c_str();
  req.timing = no_timing ? 0 : 1;

  char* report = nullptr;
  int exit_code = 0;
  const nullity_status status = nullity_run(&req, &report, &exit_code);
  if (status != NULLITY_OK) {
    std::fprintf(stderr, "nullity: %s: %s\n", nullity_status_name(status), nullity_last_error());
    return 2;
  }
  std::fputs(report, stdout);
  nullity_string_free(report);
  return exit_code;
}
