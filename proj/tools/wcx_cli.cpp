// Command-line front end: weighted-complex boundary computations for GU(p,q).

#include <iostream>

#include "CLI11.hpp"

#include "wcx/commands.hpp"

namespace {

void add_common(CLI::App* sub, wcx::CommandOptions& o) {
  sub->add_option("--p", o.p, "p of GU(p,q)")->required();
  sub->add_option("--q", o.q, "q of GU(p,q)")->required();
  sub->add_option("--config", o.config, "run configuration (flat JSON)");
  sub->add_option("--format", o.format, "json or tsv");
  sub->add_flag("--strict", o.strict, "fail on missing substitutions and unknown config keys");
}

void add_profile(CLI::App* sub, wcx::CommandOptions& o) {
  sub->add_option("--lambda", o.lambda, "highest weight, e.g. \"1,0,0;0\"")->required();
  sub->add_option("--profile", o.profile, "weight profile t_1..t_q, e.g. \"-2,inf\"");
  sub->add_flag("--ic", o.ic, "use the intersection-complex profile");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary restrictions and trace terms of weighted complexes on unitary Shimura varieties"};
  app.require_subcommand(1);
  wcx::CommandOptions o;

  auto* info = app.add_subcommand("info", "boundary strata and intersection-complex profiles");
  add_common(info, o);

  auto* kostant = app.add_subcommand("kostant", "Lie algebra cohomology of a nilpotent radical");
  add_common(kostant, o);
  kostant->add_option("--subset", o.subset, "parabolic S, e.g. \"1,2\"");
  kostant->add_option("--lambda", o.lambda, "highest weight")->required();
  kostant->add_flag("--oracle", o.oracle, "cross-check with the Chevalley-Eilenberg complex");

  auto* restrict_cmd = app.add_subcommand("restrict", "class of the restriction to a boundary stratum");
  add_common(restrict_cmd, o);
  add_profile(restrict_cmd, o);
  restrict_cmd->add_option("--stratum", o.stratum, "stratum r (default 1)");

  auto* trace = app.add_subcommand("trace", "term list of the trace formula");
  add_common(trace, o);
  add_profile(trace, o);
  trace->add_option("--gamma0", o.gamma0, "torus element \"[s=K:]x1,...;c\" (repeatable)");

  auto* verify = app.add_subcommand("verify", "run self-verification suites");
  verify->add_option("--suite", o.suite, "suite name or \"all\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : wcx::kExitUsage;
  }

  const auto* chosen = app.get_subcommands().front();
  const auto res = wcx::run_command(chosen->get_name(), o);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
