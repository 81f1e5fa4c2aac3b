// amspec_main.cpp — CLI front end: classify one described operator into a
// JSON report, or run a named randomized property suite.

#include "amspec/report.hpp"
#include "amspec/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitSuiteFailed = 4;

int run_classify(const std::string& input, const std::string& report_path,
                 const amspec::PipelineOptions& opt) {
  const amspec::OperatorDescription d = amspec::parse_description_file(input);
  const amspec::Json report = amspec::run_pipeline(d, opt);
  const std::string text = report.dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path);
    if (!out) throw amspec::SchemaError("report: cannot open \"" + report_path + "\" for writing");
    out << text;
  }
  return 0;
}

int run_suite_command(const std::string& name, std::uint64_t seed, std::int64_t trials) {
  const amspec::SuiteResult r = amspec::run_suite(name, seed, trials);
  amspec::Json summary;
  summary["suite"] = r.name;
  summary["trials"] = r.trials;
  summary["failures"] = r.failures;
  summary["passed"] = r.passed();
  summary["seconds"] = r.seconds;
  amspec::Json notes = amspec::Json::array();
  for (const auto& n : r.notes) notes.push_back(n);
  summary["notes"] = std::move(notes);
  summary["counterexamples"] = r.counterexamples;
  std::cout << summary.dump(2) << "\n";
  return r.passed() ? 0 : kExitSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of structured Hilbert-space operators"};
  app.require_subcommand(1);

  std::string input;
  std::string report_path;
  amspec::PipelineOptions opt;
  CLI::App* classify = app.add_subcommand("classify", "Analyze one operator description");
  classify->add_option("--input", input, "Operator description (JSON)")->required();
  classify->add_option("--report", report_path, "Write the report here instead of stdout");
  classify->add_option("--truncation", opt.truncation,
                       "Finite-section size for numeric cross-checks")
      ->capture_default_str();
  classify->add_option("--tolerance", opt.tolerance, "Numeric comparison tolerance")
      ->capture_default_str();
  classify->add_flag("--emit-witness", opt.emit_witness, "Include attainment witnesses");
  classify->add_flag("--timing", opt.timing, "Append wall-clock timing (non-deterministic)");

  std::string suite_name;
  std::uint64_t seed = 0;
  std::int64_t trials = 200;
  bool list_suites = false;
  CLI::App* suite = app.add_subcommand("suite", "Run a randomized property suite");
  suite->add_option("--name", suite_name, "Suite name");
  suite->add_option("--seed", seed, "Base seed")->capture_default_str();
  suite->add_option("--trials", trials, "Number of independent trials")->capture_default_str();
  suite->add_flag("--list", list_suites, "List suite names and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return run_classify(input, report_path, opt);
    if (list_suites) {
      for (const auto& name : amspec::suite_names()) std::cout << name << "\n";
      return 0;
    }
    if (suite_name.empty()) throw amspec::SchemaError("suite: --name is required");
    return run_suite_command(suite_name, seed, trials);
  } catch (const amspec::ModelInvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const amspec::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
