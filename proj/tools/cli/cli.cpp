#include "cli/cli.hpp"

#include <algorithm>
#include <exception>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/manifest.hpp"
#include "wafomlab/errors.hpp"

namespace wafomlab::cli {

namespace {

// "500/200" or "500,200" into stage-1 and stage-2 trial counts.
void apply_budget(const std::string& budget, int& stage1, int& stage2) {
  const auto sep = budget.find_first_of("/,");
  if (sep == std::string::npos) throw ParseError("--budget must look like 500/200");
  try {
    std::size_t a = 0;
    std::size_t b = 0;
    const std::string first = budget.substr(0, sep);
    const std::string second = budget.substr(sep + 1);
    stage1 = std::stoi(first, &a);
    stage2 = std::stoi(second, &b);
    if (a != first.size() || b != second.size()) throw ParseError("--budget must look like 500/200");
  } catch (const std::logic_error&) {
    throw ParseError("--budget must look like 500/200");
  }
}

void add_threads(CLI::App* app, int& threads) {
  app->add_option("--threads", threads, "worker threads; 0 uses WAFOMLAB_THREADS or all cores")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"WAFOM computation, low-WAFOM net search and QMC benchmarks over F2 digital nets", "wafomlab"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  WafomCommand wafom;
  auto* w = app.add_subcommand("wafom", "WAFOM of a net file (or generator) by one or all methods");
  w->add_option("net", wafom.net_file, "net file in wafom-net v1 format");
  w->add_option("--gen", wafom.gen_file, "generator file (wafom-gen v1) for the sequential method");
  w->add_option("--method", wafom.method, "dual | inversion | sequential | all")
      ->check(CLI::IsMember({"dual", "inversion", "sequential", "all"}));
  w->add_option("--cap", wafom.cap, "log2 of the largest enumeration allowed")->check(CLI::Range(0, 40));
  add_threads(w, wafom.threads);

  SearchCommand search;
  auto* s = app.add_subcommand("search", "two-stage random search for a low-WAFOM generator");
  s->add_option("--d", search.d, "log2 of the number of points")->required();
  s->add_option("--n", search.n, "digits per coordinate")->capture_default_str();
  s->add_option("--s", search.s, "dimension S")->capture_default_str();
  s->add_option("--stage1", search.stage1, "stage-1 trials")->capture_default_str();
  s->add_option("--stage2", search.stage2, "stage-2 trials")->capture_default_str();
  s->add_option("--seed", search.seed, "master seed")->capture_default_str();
  s->add_option("--poly", search.poly, "primitive polynomial a_1..a_d as bits (default: drawn from the seed)");
  s->add_option("--out", search.out, "output prefix for .net, .gen, .trace.csv, .manifest.json")->required();
  add_threads(s, search.threads);

  Figure1Command fig1;
  std::string budget1;
  auto* f1 = app.add_subcommand("figure1", "searched WAFOM against Sobol over a range of d");
  f1->add_option("--dmin", fig1.dmin)->capture_default_str();
  f1->add_option("--dmax", fig1.dmax)->capture_default_str();
  f1->add_option("--n", fig1.n)->capture_default_str();
  f1->add_option("--s", fig1.s)->capture_default_str();
  f1->add_option("--stage1", fig1.stage1)->capture_default_str();
  f1->add_option("--stage2", fig1.stage2)->capture_default_str();
  f1->add_option("--budget", budget1, "stage-1/stage-2 trials, e.g. 500/200");
  f1->add_option("--seed", fig1.seed)->capture_default_str();
  f1->add_option("--out", fig1.out, "output directory")->required();
  add_threads(f1, fig1.threads);

  Figure2Command fig2;
  auto* f2 = app.add_subcommand("figure2", "integration error of searched nets and classical point sets");
  f2->add_option("--nets", fig2.nets_dir, "directory of searched .net files");
  f2->add_option("--integrand", fig2.integrand, "asian | constant | linear | product | walsh")
      ->capture_default_str();
  f2->add_option("--params", fig2.params, "integrand parameters as key=value");
  f2->add_option("--dmin", fig2.dmin, "smallest d when --nets is absent")->capture_default_str();
  f2->add_option("--dmax", fig2.dmax, "largest d when --nets is absent")->capture_default_str();
  f2->add_option("--n", fig2.n, "digits when --nets is absent")->capture_default_str();
  f2->add_option("--s", fig2.s, "dimension when --nets is absent")->capture_default_str();
  f2->add_option("--reference-log2", fig2.reference_log2, "log2 of the reference point count")
      ->check(CLI::Range(1, 26))
      ->capture_default_str();
  f2->add_option("--seed", fig2.seed, "seed recorded in the CSV")->capture_default_str();
  f2->add_option("--out", fig2.out, "output directory")->required();

  SpectrumCommand spectrum;
  auto* sp = app.add_subcommand("spectrum", "Walsh coefficients of a discretized integrand against mu(A)");
  sp->add_option("--n", spectrum.n)->capture_default_str();
  sp->add_option("--s", spectrum.s)->capture_default_str();
  sp->add_option("--integrand", spectrum.integrand)->capture_default_str();
  sp->add_option("--params", spectrum.params, "integrand parameters as key=value");
  sp->add_option("--out", spectrum.out, "output CSV (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*w) {
      run_wafom(wafom, out, err);
    } else if (*s) {
      run_search(search, out, err);
    } else if (*f1) {
      if (!budget1.empty()) apply_budget(budget1, fig1.stage1, fig1.stage2);
      run_figure1(fig1, out, err);
    } else if (*f2) {
      run_figure2(fig2, out, err);
    } else if (*sp) {
      run_spectrum(spectrum, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RankError& e) {
    err << "error: " << e.what() << '\n';
    return kInvariant;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kInvariant;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace wafomlab::cli
