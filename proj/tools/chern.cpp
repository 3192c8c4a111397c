// chern — exact Hilbert-Samuel multiplicities, Chern coefficients, and a
// verification lab for sign and bound laws of parameter ideals.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input
// error, 3 instability or genericity failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chern/groebner.hpp"
#include "chern/report.hpp"
#include "chern/script.hpp"

namespace {

using namespace chern;

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void print_reports(const std::vector<ExperimentReport>& reports) {
  for (const ExperimentReport& r : reports) {
    std::cout << r.claim << " [" << r.entry << "] " << to_string(r.verdict);
    for (const char* key : {"e", "lambda", "dim", "depth", "error"})
      if (r.evidence.contains(key)) std::cout << "  " << key << "=" << r.evidence[key].dump();
    std::cout << "  (" << static_cast<long>(r.ms) << " ms)\n";
    if (r.evidence.contains("basis"))
      for (const auto& g : r.evidence["basis"]) std::cout << "    " << g.get<std::string>() << "\n";
  }
  int counts[4] = {0, 0, 0, 0};
  for (const ExperimentReport& r : reports) ++counts[static_cast<int>(r.verdict)];
  std::cout << reports.size() << " checks: " << counts[0] << " pass, " << counts[1]
            << " fail, " << counts[2] << " hypothesis_unverified, " << counts[3]
            << " unstable\n";
}

void emit(const std::vector<ExperimentReport>& reports, const LabConfig& cfg,
          const std::string& json_path, const std::string& csv_path) {
  if (!json_path.empty()) write_file(json_path, report_json(reports, cfg));
  if (!csv_path.empty()) write_file(csv_path, report_csv(reports));
}

Script load_script(const std::string& file, const std::string& inline_text) {
  if (!inline_text.empty()) return parse_script(inline_text);
  if (file.empty()) throw InputError("no script given (pass a file or use -e)");
  return parse_script(read_file(file));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hilbert-Samuel coefficient lab over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  LabConfig cfg;
  auto* seed_opt = app.add_option("--seed", cfg.seed, "run seed")->envname("CHERN_SEED");
  app.add_option("--char", cfg.characteristic, "prime characteristic for built-in rings");
  auto* nmax_opt = app.add_option("--nmax", cfg.nmax, "Hilbert-Samuel sampling bound");
  auto* trials_opt =
      app.add_option("--trials", cfg.trials, "random parameter ideals per sign test");

  std::string json_path, csv_path, file, inline_text, suite = "paper", flip, target, target2,
                                                      target3;

  auto* run = app.add_subcommand("run", "run a script of declarations and tasks");
  run->add_option("file", file, "script file");
  run->add_option("-e,--eval", inline_text, "inline script text");
  run->add_option("--json", json_path, "write a JSON report");
  run->add_option("--csv", csv_path, "write a CSV report");

  auto* corpus = app.add_subcommand("corpus", "run a suite over the built-in corpus");
  corpus->add_option("--suite", suite, "paper, cm, noncm, modules, or all");
  corpus->add_option("--json", json_path, "write a JSON report");
  corpus->add_option("--csv", csv_path, "write a CSV report");
  corpus->add_option("--flip", flip, "negate one entry's CM expectation (negative control)");

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of a declared ideal");
  gb->add_option("name", target, "ideal name")->required();
  gb->add_option("file", file, "script file with declarations");
  gb->add_option("-e,--eval", inline_text, "inline declarations");

  auto* dim = app.add_subcommand("dim", "Krull dimension of a ring or ideal");
  dim->add_option("name", target, "ring or ideal name")->required();
  dim->add_option("file", file, "script file with declarations");
  dim->add_option("-e,--eval", inline_text, "inline declarations");

  auto* dep = app.add_subcommand("depth", "depth of a ring");
  dep->add_option("name", target, "ring name")->required();
  dep->add_option("file", file, "script file with declarations");
  dep->add_option("-e,--eval", inline_text, "inline declarations");

  auto* len = app.add_subcommand("length", "vector-space length of a zero-dimensional quotient");
  len->add_option("name", target, "ideal name")->required();
  len->add_option("file", file, "script file with declarations");
  len->add_option("-e,--eval", inline_text, "inline declarations");

  auto* coeffs = app.add_subcommand("coeffs", "Hilbert-Samuel coefficient fit");
  coeffs->add_option("ring", target, "ring name")->required();
  coeffs->add_option("ideal", target2, "ideal name");
  coeffs->add_option("file", file, "script file with declarations");
  coeffs->add_option("-e,--eval", inline_text, "inline declarations");

  try {
    app.parse(argc, argv);
    cfg.lock_seed = seed_opt->count() > 0;
    cfg.lock_nmax = nmax_opt->count() > 0;
    cfg.lock_trials = trials_opt->count() > 0;

    std::vector<ExperimentReport> reports;
    if (corpus->parsed()) {
      reports = run_corpus(suite, cfg, flip);
    } else if (run->parsed()) {
      reports = run_script(load_script(file, inline_text), cfg);
    } else {
      // one-shot forms append a synthetic task to the declarations
      Script s = load_script(file, inline_text);
      Script::Stmt task;
      task.kind = Script::Kind::Task;
      if (gb->parsed()) task.name = "gb";
      if (dim->parsed()) task.name = "dim";
      if (dep->parsed()) task.name = "depth";
      if (len->parsed()) task.name = "length";
      if (coeffs->parsed()) task.name = "coeffs";
      task.args.push_back(target);
      if (!target2.empty()) task.args.push_back(target2);
      task.kwargs.emplace_back("nmax", std::to_string(cfg.nmax));
      s.stmts.push_back(task);
      reports = run_script(s, cfg);
    }
    print_reports(reports);
    emit(reports, cfg, json_path, csv_path);
    int code = exit_code_for(reports);
    if (code != 0) std::cerr << "exit " << code << (code == 1 ? " (check failed)" : "") << "\n";
    return code;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UnstableError& e) {
    std::cerr << "unstable: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
