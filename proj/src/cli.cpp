#include "schur/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "schur/amalgam.hpp"
#include "schur/bar_oracle.hpp"
#include "schur/compose.hpp"
#include "schur/errors.hpp"
#include "schur/json_io.hpp"
#include "schur/presentation.hpp"
#include "schur/report.hpp"

namespace schur {

namespace {

struct Options {
  bool json = false;
  bool trace = false;
  bool check = false;
  bool aspherical = false;
  std::size_t cap = kDefaultOrderCap;
  std::string input;
};

Report run_expr(const Options& o) {
  Report r;
  r.command = "expr";
  r.input = o.input;
  const GroupExpr e = parse_expr(o.input, o.cap);
  // The oracle needs a finite group; reject before doing any work.
  std::optional<FiniteGroup> finite;
  if (o.check) finite = finite_group_of(e, o.cap);
  const MultiplierResult m = schur_multiplier(e, ComposeOptions{o.cap});
  r.result["group"] = to_string(e);
  r.result["multiplier"] = to_json(m.multiplier);
  r.result["abelianization"] = to_json(abelianize_expr(e));
  for (const auto& step : m.trace) r.trace.push_back(trace_entry(step));
  if (finite) {
    const FgAbelianGroup oracle = bar_h2(*finite, o.cap);
    r.check = OracleCheck{oracle, oracle == m.multiplier};
  }
  return r;
}

Report run_pres(const Options& o) {
  if (o.check) throw InvalidArgument("--check applies to expr only");
  Report r;
  r.command = "pres";
  r.input = o.input;
  const Presentation p = parse_presentation(o.input, o.aspherical);
  const MultiplierBounds b = multiplier_bounds(p);
  r.result["presentation"] = to_string(p);
  r.result["generators"] = p.generator_count();
  r.result["relators"] = p.relators.size();
  r.result["abelianization"] = to_json(abelianization(p));
  r.result["h2_complex"] = to_json(b.h2_complex);
  r.result["relator_bound"] = b.relator_bound;
  r.result["rank_bound"] = b.rank_bound;
  r.result["exact"] = b.exact;
  return r;
}

Report run_oracle(const Options& o) {
  Report r;
  r.command = "oracle";
  r.input = o.input;
  const GroupExpr e = parse_expr(o.input, o.cap);
  const FiniteGroup g = finite_group_of(e, o.cap);
  const FgAbelianGroup h1 = bar_h1(g);
  const FgAbelianGroup h2 = bar_h2(g, o.cap);
  r.result["group"] = to_string(e);
  r.result["order"] = g.order();
  r.result["h1"] = to_json(h1);
  r.result["h2"] = to_json(h2);
  r.trace.push_back({"bar-oracle", to_string(e), to_string(h2),
                     "normalized bar complex, C_2 rank " + std::to_string((g.order() - 1) * (g.order() - 1)) +
                         ", C_3 rank " +
                         std::to_string((g.order() - 1) * (g.order() - 1) * (g.order() - 1))});
  return r;
}

Report run_amalgam(const Options& o) {
  if (o.check) throw InvalidArgument("--check applies to expr only");
  Report r;
  r.command = "amalgam";
  r.input = o.input;
  std::ifstream in(o.input);
  if (!in) throw InvalidArgument("cannot open '" + o.input + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  const AmalgamSolution s = solve(amalgam_problem_from_json(j));
  r.result["sub"] = to_json(s.sub);
  r.result["quot"] = to_json(s.quot);
  r.result["sub_exact"] = s.sub_exact;
  r.result["determined"] = s.determined;
  r.result["value"] = s.value ? to_json(*s.value) : Json(nullptr);
  r.result["notes"] = s.notes;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur multiplier calculator", "schurcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit the report as JSON");
  app.add_flag("--trace", o.trace, "Show the derivation trace");
  app.add_flag("--check", o.check, "Cross-check an expr result with the bar oracle");
  app.add_option("--cap", o.cap, "Largest group order handed to the bar oracle")
      ->check(CLI::PositiveNumber);

  auto* expr = app.add_subcommand("expr", "Schur multiplier of a group expression");
  expr->add_option("expression", o.input, "e.g. \"Z/4 x Z/6 * Z\"")->required();
  auto* pres = app.add_subcommand("pres", "Homology bounds from a finite presentation");
  pres->add_option("presentation", o.input, "e.g. \"<a,b | a^2, b^2, [a,b]>\"")->required();
  pres->add_flag("--aspherical", o.aspherical, "Assert the presentation complex is aspherical");
  auto* oracle = app.add_subcommand("oracle", "H_1 and H_2 of a finite group via the bar complex");
  oracle->add_option("group", o.input, "finite group expression, e.g. \"D4\" or \"Z/2 x Z/2\"")->required();
  auto* amalgam = app.add_subcommand("amalgam", "Mayer-Vietoris constraints for an amalgam");
  amalgam->add_option("problem", o.input, "path to an amalgam problem JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*expr)
      report = run_expr(o);
    else if (*pres)
      report = run_pres(o);
    else if (*oracle)
      report = run_oracle(o);
    else
      report = run_amalgam(o);
  } catch (const ParseError& e) {
    err << "syntax error: " << e.what() << '\n';
    return kExitSyntax;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const IllDefinedMap& e) {
    err << "ill-defined amalgam data: " << e.what() << '\n';
    return kExitIllDefinedAmalgam;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.json)
    out << to_json(report).dump(2) << '\n';
  else
    out << render_text(report, o.trace);
  if (report.check && !report.check->agrees) return kExitOracleDisagrees;
  return kExitOk;
}

}  // namespace schur
