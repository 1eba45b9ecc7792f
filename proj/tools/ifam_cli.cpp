// ifam: shifting, partitions, EKR/HM verification and maximal-family
// enumeration for k-uniform intersecting families.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ifam/commands.hpp"

int main(int argc, char** argv) {
  using namespace ifam;

  CLI::App app{"Intersecting k-uniform set families: shifting, type partition, "
               "EKR / Hilton-Milner verification, maximal family enumeration"};
  app.footer("Caps: enumeration n <= " + std::to_string(kMaxEnumerationN) +
             ", generator search k <= " + std::to_string(kMaxGeneratorK) +
             ", oracle C(n,k) <= " + std::to_string(kMaxOracleVertices) +
             ".\nExit status: 0 all checks pass, 1 a check failed, 2 usage or input error.");
  app.require_subcommand(1);

  CommandOptions opt;
  int n = 0;
  int k = 0;
  std::string kind;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--machine", opt.machine, "key=value output");
    sub->add_flag("--no-timestamp", opt.no_timestamp, "omit the timestamp line");
  };

  auto* partition = app.add_subcommand("partition", "type partition and counting bounds of a family");
  partition->add_option("--input", opt.input, "family file")->required();
  add_common(partition);

  auto* verify = app.add_subcommand("verify", "verify ekr | hm | identities");
  verify->add_option("kind", kind, "ekr, hm or identities")
      ->required()
      ->check(CLI::IsMember({"ekr", "hm", "identities"}));
  auto* vn = verify->add_option("--n", n, "ground set size");
  auto* vk = verify->add_option("--k", k, "uniformity");
  verify->add_option("--k-max", opt.k_max, "largest k for identity sweeps")->capture_default_str();
  add_common(verify);

  auto* enumerate = app.add_subcommand("enumerate", "all maximal shifted intersecting families");
  auto* en = enumerate->add_option("--n", n, "ground set size")->required();
  auto* ek = enumerate->add_option("--k", k, "uniformity")->required();
  enumerate->add_option("--output", opt.output, "family file to write");
  enumerate->add_flag("--oracle", opt.oracle, "also run the brute-force clique oracle and compare");
  enumerate->add_flag("--shifted-only", opt.shifted_only, "restrict oracle output to shifted families");
  add_common(enumerate);

  auto* shift = app.add_subcommand("shift", "shift closure of a family");
  shift->add_option("--input", opt.input, "family file")->required();
  shift->add_option("--output", opt.output, "family file to write");
  add_common(shift);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CommandOutcome res;
  if (*partition) {
    res = cmd_partition(opt);
  } else if (*verify) {
    if (*vn) opt.n = n;
    if (*vk) opt.k = k;
    res = cmd_verify(kind, opt);
  } else if (*enumerate) {
    if (*en) opt.n = n;
    if (*ek) opt.k = k;
    res = cmd_enumerate(opt);
  } else if (*shift) {
    res = cmd_shift(opt);
  }
  (res.exit_code == 2 ? std::cerr : std::cout) << res.report;
  return res.exit_code;
}
