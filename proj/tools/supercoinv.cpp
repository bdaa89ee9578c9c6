#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "supercoinv/errors.hpp"
#include "supercoinv/verify.hpp"

using namespace supercoinv;

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for coinvariant algebras, hyperplane arrangements and superspace"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string suite;
  int max_n = 0;
  std::uint32_t seed = 0;
  bool exhaustive = false;
  std::string out_path;
  std::string format = "json";
  std::string order = "grevlex";
  std::int64_t prime = 0;

  auto* verify = app.add_subcommand("verify", "run a suite and emit a report");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--n", max_n, "largest n to sweep");
  auto* exh = verify->add_flag("--exhaustive", exhaustive, "every instance (default)");
  verify->add_option("--sample", seed, "keep a seeded half of the instances")->excludes(exh);
  verify->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
  verify->add_option("--order", order, "monomial order for ideal comparisons")->check(CLI::IsMember({"grevlex", "lex"}));
  verify->add_option("--prime", prime, "prime for finite-field point counts");
  verify->add_option("--cap", cfg.degree_cap, "bosonic degree cap for superspace tables");
  verify->add_flag("--allow-large", cfg.allow_large, "allow n = 5 sweeps of the expensive suites");
  verify->add_flag("--timings", cfg.timings, "record elapsed milliseconds");
  verify->add_flag("--inject-fault", cfg.inject_fault, "corrupt one input per suite (self-test)")->group("");
  verify->add_option("--out", out_path, "report path (stdout when omitted)");
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string spec;
  auto* show = app.add_subcommand("show", "pretty-print objects");
  auto* show_arr = show->add_subcommand("arrangement", "print an arrangement and its root poset");
  show_arr->add_option("spec", spec, "e.g. \"n=3; H:0-1,1-2,0-3\"")->required();
  show->require_subcommand(1);

  app.add_subcommand("list", "list the suite names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list")) {
      for (const auto& name : suite_names()) std::cout << name << "\n";
      return 0;
    }
    if (app.got_subcommand(show)) {
      std::cout << describe_arrangement(Arrangement::parse(spec));
      return 0;
    }
    if (verify->count("--n")) cfg.max_n = max_n;
    if (verify->count("--sample")) cfg.sample_seed = seed;
    if (verify->count("--prime")) cfg.prime = prime;
    cfg.order = order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    auto reports = run_suite(suite, cfg);
    ReportFormat fmt = format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
    if (out_path.empty()) {
      emit_report(reports, fmt, std::cout);
    } else {
      emit_report(reports, fmt, out_path);
    }
    std::size_t failed = 0;
    for (const auto& r : reports) failed += !r.pass;
    std::cerr << suite << ": " << reports.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
