// reflekt command line front end.  Talks to the core exclusively through
// the C API in reflekt.h; every verb configures a job, runs one suite and
// prints (or writes) the report.  Exit status 0 iff all checks passed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <reflekt.h>

namespace {

struct Options {
  std::string model;  // empty: use the verb's default
  std::string spin = "1/2";
  int sites = 2;
  unsigned seed = 1;
  std::string format = "text";
  std::string out;
  std::string specialize;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--model", opt.model, "a1-affine or a1");
  cmd->add_option("--spin", opt.spin, "auxiliary spin: 1/2, 1, 3/2");
  cmd->add_option("--sites", opt.sites, "chain length")->check(CLI::Range(0, 8));
  cmd->add_option("--seed", opt.seed, "seed for specialized draws");
  cmd->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opt.out, "write the report to this path");
  cmd->add_option("--specialize", opt.specialize,
                  "comma-separated var=value bindings, e.g. xi=3/7,v=2");
}

int run_job(const std::string& suite, const Options& opt,
            const std::string& default_model) {
  reflekt_job* job = reflekt_job_new();
  if (!job) {
    std::cerr << "reflekt: out of memory\n";
    return 2;
  }

  int rc = 0;
  const std::pair<const char*, std::string> settings[] = {
      {"suite", suite},
      {"model", opt.model.empty() ? default_model : opt.model},
      {"spin", opt.spin},
      {"sites", std::to_string(opt.sites)},
      {"seed", std::to_string(opt.seed)},
      {"format", opt.format},
      {"specialize", opt.specialize},
  };
  for (const auto& [key, value] : settings) {
    if (std::string(key) == "specialize" && value.empty()) continue;
    if (reflekt_job_set(job, key, value.c_str()) != 0) {
      std::cerr << "reflekt: " << reflekt_job_last_error(job) << "\n";
      rc = 2;
      break;
    }
  }

  if (rc == 0 && reflekt_job_run(job) != 0) {
    std::cerr << "reflekt: " << reflekt_job_last_error(job) << "\n";
    rc = 2;
  }

  if (rc == 0) {
    char* report = reflekt_job_report(job);
    if (!report) {
      std::cerr << "reflekt: no report\n";
      rc = 2;
    } else {
      if (opt.out.empty()) {
        std::cout << report;
        if (*report && report[std::string(report).size() - 1] != '\n')
          std::cout << "\n";
      } else {
        std::ofstream f(opt.out, std::ios::binary);
        f << report;
        if (!f) {
          std::cerr << "reflekt: cannot write " << opt.out << "\n";
          rc = 2;
        }
      }
      reflekt_string_free(report);
    }
  }

  if (rc == 0 && !reflekt_job_passed(job)) rc = 1;
  reflekt_job_free(job);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflekt: exact verification of reflection K-matrices and "
               "boundary transfer matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", reflekt_version());

  Options opt;
  std::string verify_suite;
  std::string finite_variant;

  auto* verify = app.add_subcommand(
      "verify", "run a named identity suite (re, dual-re, crossing, ybe, "
                "quasi-k, coideal)");
  verify->add_option("suite", verify_suite, "suite name")
      ->required()
      ->check(CLI::IsMember(
          {"re", "dual-re", "crossing", "ybe", "quasi-k", "coideal"}));
  add_common(verify, opt);

  auto* kmatrix =
      app.add_subcommand("kmatrix", "derive the trigonometric, dual and "
                                    "tensor K-matrices");
  add_common(kmatrix, opt);

  auto* transfer = app.add_subcommand(
      "transfer", "two-row transfer matrices: commutativity and "
                  "multiplicativity");
  add_common(transfer, opt);

  auto* hamiltonian = app.add_subcommand(
      "hamiltonian", "open-chain Hamiltonian from the transfer matrix");
  add_common(hamiltonian, opt);

  auto* finite = app.add_subcommand(
      "finite", "finite-type transfer elements (trivial, kolb)");
  finite->add_option("variant", finite_variant, "trivial or kolb")
      ->required()
      ->check(CLI::IsMember({"trivial", "kolb"}));
  add_common(finite, opt);

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) {
    const std::string def =
        verify_suite == "quasi-k" ? "a1" : "a1-affine";
    return run_job(verify_suite, opt, def);
  }
  if (kmatrix->parsed()) return run_job("kmatrix", opt, "a1-affine");
  if (transfer->parsed()) return run_job("transfer", opt, "a1-affine");
  if (hamiltonian->parsed()) return run_job("hamiltonian", opt, "a1-affine");
  if (finite->parsed()) return run_job("finite-" + finite_variant, opt, "a1");
  return 2;
}
