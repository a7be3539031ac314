#include "ordtype/cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "ordtype/ap_classify.hpp"
#include "ordtype/cayley_io.hpp"
#include "ordtype/corpus.hpp"
#include "ordtype/group_expr.hpp"
#include "ordtype/suites.hpp"

namespace ordtype {

namespace {

std::string verdict_text(const APVerdict& v) {
  return v.is_ap ? "yes, ratio " + std::to_string(*v.ratio) : "no";
}

void print_tau(const FiniteGroup& g, std::ostream& out) {
  const auto spectrum = order_spectrum(g);
  const auto tau = same_order_type(spectrum);
  out << "group: " << g.label() << '\n'
      << "order: " << g.order() << '\n'
      << "spectrum: " << spectrum.to_string() << '\n'
      << "tau_e: " << tau.to_string() << '\n'
      << "arithmetic progression: " << verdict_text(is_arithmetic_progression(tau)) << '\n';
}

void print_info(const FiniteGroup& g, std::ostream& out) {
  const auto p = structural_profile(g);
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "group: " << g.label() << '\n'
      << "order: " << g.order() << '\n'
      << "abelian: " << yes(p.is_abelian) << '\n'
      << "nilpotent: " << yes(p.is_nilpotent) << '\n'
      << "solvable: " << yes(p.is_solvable) << '\n'
      << "p-group prime: " << (p.p_group_prime ? std::to_string(*p.p_group_prime) : "-") << '\n'
      << "exponent: " << p.exponent << '\n'
      << "center size: " << p.center_size << '\n'
      << "c2: " << p.c2 << '\n'
      << "prime divisors:";
  for (auto q : p.prime_divisors) out << ' ' << q;
  out << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Element-order statistics and same-order types of finite groups", "ordtype"};
  app.require_subcommand(1);

  std::string expr_text;
  auto* tau_cmd = app.add_subcommand("tau", "Print order, spectrum, tau_e and progression verdict");
  tau_cmd->add_option("expr", expr_text, "Group expression, e.g. \"C(7) x Q(8)\"")->required();

  auto* info_cmd = app.add_subcommand("info", "Print the structural profile");
  info_cmd->add_option("expr", expr_text, "Group expression")->required();

  std::string suite_name;
  std::uint64_t max_order = kDefaultMaxOrder;
  std::string json_path;
  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem suite over the built-in corpus");
  verify_cmd->add_option("--suite", suite_name, "audit, thm11, thm23, prop25, thm26, prop22, search4 or all")
      ->required();
  verify_cmd->add_option("--max-order", max_order, "Largest group order in the corpus")
      ->check(CLI::Range(std::uint64_t{1}, kMaxCorpusOrder));
  verify_cmd->add_option("--json", json_path, "Write the JSON report to this path");
  verify_cmd->add_option("--threads", threads, "Worker threads (default: THREADS or all cores)");

  std::size_t tau_size = 0;
  bool want_ap = false;
  auto* search_cmd = app.add_subcommand("search", "List corpus groups with a given |tau_e|");
  search_cmd->add_option("--max-order", max_order, "Largest group order in the corpus")
      ->check(CLI::Range(std::uint64_t{1}, kMaxCorpusOrder));
  search_cmd->add_option("--tau-size", tau_size, "Required number of class sizes")->required();
  search_cmd->add_flag("--ap", want_ap, "Only arithmetic progressions");
  search_cmd->add_option("--threads", threads, "Worker threads");

  std::string path, export_path;
  auto* ingest_cmd = app.add_subcommand("ingest", "Validate and analyse a Cayley-table file");
  ingest_cmd->add_option("path", path, "Cayley-table file")->required();
  ingest_cmd->add_option("--export", export_path, "Re-export the validated table");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (tau_cmd->parsed()) {
      print_tau(eval_expr(expr_text), out);
    } else if (info_cmd->parsed()) {
      print_info(eval_expr(expr_text), out);
    } else if (verify_cmd->parsed()) {
      const auto suite = parse_suite(suite_name);
      if (!suite) {
        err << "unknown suite '" << suite_name << "'\n";
        return kExitUsage;
      }
      const auto report = run_suite(*suite, {max_order, threads});
      out << "suite " << report.suite << ": " << report.groups_checked << " groups checked, "
          << report.findings.size() << " findings, " << report.failures.size() << " failures ("
          << report.wall_time.count() << " ms)\n";
      for (const auto& f : report.failures) {
        out << "FAIL " << f.group << " [" << f.check << "] " << f.note << '\n';
      }
      if (!json_path.empty()) {
        std::ofstream js(json_path, std::ios::binary);
        if (!js) {
          err << "cannot write " << json_path << '\n';
          return kExitUsage;
        }
        js << to_json_text(report);
      }
      return report.ok() ? kExitOk : kExitSuiteFailure;
    } else if (search_cmd->parsed()) {
      std::size_t hits = 0;
      for (const auto& ev : evaluate_corpus(max_order, threads, false)) {
        if (!ev.record || ev.record->tau_size != tau_size) continue;
        if (want_ap && !ev.record->verdict.is_ap) continue;
        ++hits;
        out << ev.label << "  order " << ev.order << "  tau_e " << ev.record->tau.to_string()
            << "  AP " << verdict_text(ev.record->verdict) << '\n';
      }
      out << hits << " group(s)\n";
    } else if (ingest_cmd->parsed()) {
      const auto g = ingest(path);
      print_tau(g, out);
      if (!export_path.empty()) export_group(g, export_path);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace ordtype
