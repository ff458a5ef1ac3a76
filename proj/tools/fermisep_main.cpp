#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fermisep/scenario.hpp"

namespace {

// Exit code contract: 0 all assertions pass, 1 assertion failure,
// 2 input error, 3 capacity exceeded.
constexpr int kExitPass = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

double resolve_default_tol(const CLI::Option* tol_opt, double tol_flag) {
  if (tol_opt->count() > 0) return tol_flag;
  if (const char* env = std::getenv("FERMISEP_TOL")) {
    char* end = nullptr;
    const double parsed = std::strtod(env, &end);
    if (end == env || *end != '\0' || parsed <= 0)
      throw fermisep::ParseError("FERMISEP_TOL must be a positive number");
    return parsed;
  }
  return fermisep::kDefaultVerdictTol;
}

void emit(const fermisep::ReportDocument& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.to_string();
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw fermisep::ParseError("cannot open output file: " + out_path);
  out << report.to_string();
}

int run_files(const std::vector<std::string>& files, const std::string& out_path,
              double tol, int jobs) {
  if (files.size() == 1) {
    const fermisep::ReportDocument report = fermisep::run_scenario_file(files[0], tol);
    emit(report, out_path);
    return report.all_passed ? kExitPass : kExitAssertion;
  }

  // Batch mode: independent scenarios, per-file outputs next to the inputs.
  std::vector<int> codes(files.size(), kExitInput);
  std::vector<std::string> outputs(files.size());
  std::atomic<size_t> next{0};
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
        try {
          const fermisep::ReportDocument report =
              fermisep::run_scenario_file(files[i], tol);
          outputs[i] = report.to_string();
          codes[i] = report.all_passed ? kExitPass : kExitAssertion;
        } catch (const fermisep::CapacityError& e) {
          outputs[i] = std::string("error: ") + e.what() + "\n";
          codes[i] = kExitCapacity;
        } catch (const std::exception& e) {
          outputs[i] = std::string("error: ") + e.what() + "\n";
          codes[i] = kExitInput;
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  int worst = kExitPass;
  for (size_t i = 0; i < files.size(); ++i) {
    if (out_path.empty()) {
      std::cout << "== " << files[i] << " ==\n" << outputs[i];
    } else {
      std::ofstream out(out_path + "." + std::to_string(i));
      out << outputs[i];
    }
    worst = std::max(worst, codes[i]);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability and correlation analysis for antisymmetric states"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string out_path;
  double tol_flag = fermisep::kDefaultVerdictTol;
  int jobs = 1;
  auto* run = app.add_subcommand("run", "Run one or more scenario files");
  run->add_option("file", files, "Scenario file(s), JSON")->required();
  run->add_option("--out", out_path, "Write report(s) to this path");
  auto* tol_opt = run->add_option("--tol", tol_flag, "Default tolerance");
  run->add_option("--jobs", jobs, "Concurrent scenario files in batch mode")
      ->check(CLI::PositiveNumber);

  std::string example_id;
  bool as_json = false;
  auto* rep = app.add_subcommand("reproduce", "Run a built-in worked example");
  rep->add_option("id", example_id, "Example id (see list-examples)")->required();
  rep->add_flag("--json", as_json, "Emit the full JSON report");

  bool list_json = false;
  auto* list = app.add_subcommand("list-examples", "List built-in examples");
  list->add_flag("--json", list_json, "Emit the catalog as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInput;
  }

  try {
    if (run->parsed()) {
      const double tol = resolve_default_tol(tol_opt, tol_flag);
      return run_files(files, out_path, tol, jobs);
    }
    if (rep->parsed()) {
      const fermisep::ReportDocument report = fermisep::reproduce(example_id);
      if (as_json) {
        std::cout << report.to_string();
      } else {
        for (const auto& check : report.doc.at("checks"))
          std::cout << (check.at("pass").get<bool>() ? "PASS " : "FAIL ")
                    << check.at("name").get<std::string>() << "\n";
        std::cout << (report.all_passed ? "all checks passed" : "FAILURES present")
                  << "\n";
      }
      return report.all_passed ? kExitPass : kExitAssertion;
    }
    if (list->parsed()) {
      const auto& catalog = fermisep::example_catalog();
      if (list_json) {
        fermisep::Json arr = fermisep::Json::array();
        for (const auto& e : catalog)
          arr.push_back({{"id", e.id}, {"section", e.section},
                         {"description", e.description}});
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& e : catalog)
          std::cout << e.id << "  [" << e.section << "]  " << e.description << "\n";
      }
      return kExitPass;
    }
  } catch (const fermisep::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
