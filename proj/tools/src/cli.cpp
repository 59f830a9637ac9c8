#include "forestbound_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "forestbound/bounds.hpp"
#include "forestbound/curve.hpp"
#include "forestbound/io.hpp"
#include "forestbound/pruning.hpp"
#include "forestbound/sim.hpp"
#include "forestbound/zeta.hpp"

namespace forestbound::cli {
namespace {

ForestFamily load_forest(const std::string& path) { return io::parse_forest(io::read_file(path)); }

// Writes to `path`, or to `out` when no path was given.
void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (path) {
    io::write_file(*path, text);
  } else {
    out << text;
  }
}

std::vector<Hypothesis> parse_index_list(const std::string& text) {
  std::vector<Hypothesis> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw FormatError("not a hypothesis index: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

struct ValidateArgs {
  std::string in;
};

struct CompleteArgs {
  std::string in;
  std::optional<std::string> out;
};

struct PruneArgs {
  std::string in;
  std::optional<std::string> out;
  std::optional<std::string> report;
};

struct VstarArgs {
  std::string family;
  std::optional<std::string> select;
  std::optional<std::string> indices;
  bool auto_complete = false;
};

struct CurveArgs {
  std::string family;
  std::optional<std::string> path;
  std::optional<std::string> pvalues;
  std::optional<std::string> out;
  bool prune = false;
  bool audit = false;
  bool naive = false;
  bool auto_complete = false;
};

struct BenchArgs {
  sim::ScenarioConfig config;
  std::string zeta = "trivial";
  std::string order = "identity";
  std::optional<int> naive_repl;
  bool no_naive = false;
  std::optional<std::string> csv;
};

struct DyadicArgs {
  int height = 10;
  Count atom_size = 1;
  std::optional<std::string> out;
};

struct ZetaArgs {
  std::string in;
  std::optional<std::string> pvalues;
  std::string method = "trivial";
  double alpha = 0.05;
  std::optional<std::string> out;
};

int do_validate(const ValidateArgs& a, std::ostream& out) {
  const ForestFamily f = load_forest(a.in);
  out << "ok: m=" << f.hypothesis_count() << " atoms=" << f.atom_count() << " regions=" << f.size()
      << " depth=" << f.max_depth() << " complete=" << (f.is_complete() ? "yes" : "no") << "\n";
  return kOk;
}

int do_complete(const CompleteArgs& a, std::ostream& out) {
  emit(a.out, io::serialize_forest(complete_family(load_forest(a.in))), out);
  return kOk;
}

int do_prune(const PruneArgs& a, std::ostream& out) {
  const PruneResult r = prune(load_forest(a.in));
  if (a.report) io::write_file(*a.report, io::removed_csv(r.removed));
  emit(a.out, io::serialize_forest(r.pruned_family), out);
  if (a.out) {
    out << "removed " << r.removed.size() << " of " << r.pruned_family.size() + r.removed.size()
        << " regions; V*(full) = " << r.vstar_full << "\n";
  }
  return kOk;
}

int do_vstar(const VstarArgs& a, std::ostream& out) {
  const ForestFamily f = load_forest(a.family);
  std::vector<Hypothesis> members = a.select ? io::parse_hypotheses(io::read_file(*a.select))
                                             : parse_index_list(a.indices.value_or(""));
  for (Hypothesis h : members) {
    if (h < 1 || h > f.hypothesis_count()) {
      throw IndexOutOfRange("hypothesis " + std::to_string(h) + " outside 1.." +
                            std::to_string(f.hypothesis_count()));
    }
  }
  std::sort(members.begin(), members.end());
  out << vstar(f, SelectionSet(std::move(members)), {.auto_complete = a.auto_complete}) << "\n";
  return kOk;
}

int do_curve(const CurveArgs& a, std::ostream& out) {
  ForestFamily f = load_forest(a.family);
  if (a.auto_complete) f = complete_family(f);
  const SelectionPath path =
      a.path ? SelectionPath(io::parse_hypotheses(io::read_file(*a.path)), f.hypothesis_count())
             : path_from_pvalues(io::parse_pvalues(io::read_file(*a.pvalues)));
  if (a.prune) f = compact(prune(f));
  const BoundCurve curve = a.naive ? naive_curve(f, path) : fast_curve(f, path, {.audit = a.audit});
  emit(a.out, io::curve_csv(curve, path), out);
  return kOk;
}

int do_bench(BenchArgs a, std::ostream& out) {
  a.config.zeta_method = parse_zeta_method(a.zeta);
  if (a.order == "identity") {
    a.config.path_order = sim::PathOrder::identity;
  } else if (a.order == "pvalue") {
    a.config.path_order = sim::PathOrder::pvalue;
  } else {
    throw InvalidConfigError("unknown path order '" + a.order + "'");
  }
  a.config.naive_repl = a.no_naive ? std::optional<int>(0) : a.naive_repl;
  const sim::BenchReport report = sim::run_scenario(a.config);
  if (a.csv) io::write_file(*a.csv, sim::to_csv(report));
  out << "m=" << report.config.m << " H=" << report.config.tree_height
      << " zeta=" << to_string(report.config.zeta_method) << " |K|=" << report.regions
      << " |K_pr|=" << report.pruned_regions << " V*(full)=" << report.vstar_full
      << " curves_identical=" << (report.curves_identical ? "yes" : "no") << "\n";
  out << sim::to_table(report);
  if (!report.curves_identical) throw AuditError("timed variants returned different curves");
  return kOk;
}

int do_gen_dyadic(const DyadicArgs& a, std::ostream& out) {
  emit(a.out, io::serialize_forest(build_dyadic(a.height, a.atom_size)), out);
  return kOk;
}

int do_zeta(const ZetaArgs& a, std::ostream& out) {
  const ForestFamily f = load_forest(a.in);
  const ZetaEstimator est{parse_zeta_method(a.method), a.alpha};
  std::vector<double> p;
  if (a.pvalues) {
    p = io::parse_pvalues(io::read_file(*a.pvalues));
  } else if (est.method == ZetaMethod::dkwm) {
    throw InvalidConfigError("--zeta dkwm needs --pvalues");
  }
  emit(a.out, io::serialize_forest(estimate_zetas(f, est, p)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Post hoc bounds on false positives with forest-structured reference families",
               "forestbound"};
  app.require_subcommand(1, 1);
  std::function<int()> action;

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check a forest file and print a summary");
  validate->add_option("--in", va.in, "Forest file")->required();
  validate->callback([&] { action = [&] { return do_validate(va, out); }; });

  CompleteArgs ca;
  auto* complete = app.add_subcommand("complete", "Add missing atoms with zeta = |P_n|");
  complete->add_option("--in", ca.in, "Forest file")->required();
  complete->add_option("--out", ca.out, "Output forest file (default: stdout)");
  complete->callback([&] { action = [&] { return do_complete(ca, out); }; });

  PruneArgs pa;
  auto* prune_cmd = app.add_subcommand("prune", "Remove regions that never tighten the bound");
  prune_cmd->add_option("--in", pa.in, "Complete forest file")->required();
  prune_cmd->add_option("--out", pa.out, "Pruned forest file (default: stdout)");
  prune_cmd->add_option("--report", pa.report, "CSV of removed regions (i,j)");
  prune_cmd->callback([&] { action = [&] { return do_prune(pa, out); }; });

  VstarArgs vsa;
  auto* vstar_cmd = app.add_subcommand("vstar", "Bound on false positives in one selection");
  vstar_cmd->add_option("--family", vsa.family, "Forest file")->required();
  auto* select = vstar_cmd->add_option("--select", vsa.select, "Selection CSV (hypothesis_index)");
  vstar_cmd->add_option("--indices", vsa.indices, "Comma-separated hypothesis indices")
      ->excludes(select);
  vstar_cmd->add_flag("--auto-complete", vsa.auto_complete, "Complete the family first");
  vstar_cmd->callback([&] { action = [&] { return do_vstar(vsa, out); }; });

  CurveArgs cva;
  auto* curve = app.add_subcommand("curve", "Bound curve along a selection path");
  curve->add_option("--family", cva.family, "Forest file")->required();
  auto* path = curve->add_option("--path", cva.path, "Path CSV (hypothesis_index)");
  auto* pvals = curve->add_option("--pvalues", cva.pvalues, "P-value CSV; path by increasing p");
  path->excludes(pvals);
  curve->add_option("--out", cva.out, "Curve CSV (default: stdout)");
  curve->add_flag("--prune", cva.prune, "Prune the family before the sweep");
  curve->add_flag("--audit", cva.audit, "Check the partition identities after every step");
  curve->add_flag("--naive", cva.naive, "Recompute the bound per prefix (slow reference)");
  curve->add_flag("--auto-complete", cva.auto_complete, "Complete the family first");
  curve->callback([&] {
    if (!cva.path && !cva.pvalues) throw CLI::RequiredError("--path or --pvalues");
    action = [&] { return do_curve(cva, out); };
  });

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time naive and fast curves on a simulated scenario");
  bench->add_option("--m", ba.config.m, "Number of hypotheses")->capture_default_str();
  bench->add_option("--height", ba.config.tree_height, "Dyadic tree height")->capture_default_str();
  bench->add_option("--zeta", ba.zeta, "trivial or dkwm")
      ->check(CLI::IsMember({"trivial", "dkwm"}))
      ->capture_default_str();
  bench->add_option("--alpha", ba.config.alpha, "Joint level for dkwm")->capture_default_str();
  bench->add_option("--n-repl", ba.config.n_repl, "Timed runs per variant")->capture_default_str();
  bench->add_option("--n-repl-naive", ba.naive_repl, "Timed runs for naive variants");
  bench->add_flag("--no-naive", ba.no_naive, "Skip the naive variants");
  bench->add_option("--warmup", ba.config.warmup, "Untimed runs per variant")->capture_default_str();
  bench->add_option("--seed", ba.config.seed, "RNG seed")->capture_default_str();
  bench->add_option("--signal", ba.config.signal_leaves, "Atoms with signal")->delimiter(',');
  bench->add_option("--mu", ba.config.mu, "Signal mean")->capture_default_str();
  bench->add_option("--order", ba.order, "identity or pvalue")
      ->check(CLI::IsMember({"identity", "pvalue"}))
      ->capture_default_str();
  bench->add_option("--csv", ba.csv, "Write the summary as CSV");
  bench->callback([&] { action = [&] { return do_bench(ba, out); }; });

  DyadicArgs da;
  auto* dyadic = app.add_subcommand("gen-dyadic", "Write a complete dyadic family");
  dyadic->add_option("--height", da.height, "Tree height")->capture_default_str();
  dyadic->add_option("--atom-size", da.atom_size, "Hypotheses per atom")->capture_default_str();
  dyadic->add_option("--out", da.out, "Output forest file (default: stdout)");
  dyadic->callback([&] { action = [&] { return do_gen_dyadic(da, out); }; });

  ZetaArgs za;
  auto* zeta = app.add_subcommand("zeta", "Re-estimate every region's zeta");
  zeta->add_option("--in", za.in, "Forest file")->required();
  zeta->add_option("--pvalues", za.pvalues, "P-value CSV (required for dkwm)");
  zeta->add_option("--zeta", za.method, "trivial or dkwm")
      ->check(CLI::IsMember({"trivial", "dkwm"}))
      ->capture_default_str();
  zeta->add_option("--alpha", za.alpha, "Joint level")->capture_default_str();
  zeta->add_option("--out", za.out, "Output forest file (default: stdout)");
  zeta->callback([&] { action = [&] { return do_zeta(za, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (app.get_subcommands().empty()) err << app.help();
    return kUsage;
  }

  try {
    return action();
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace forestbound::cli
