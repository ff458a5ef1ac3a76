#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fermisep/separability.hpp"

namespace fermisep {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

struct ReportDocument {
  Json doc;
  bool all_passed = true;

  std::string to_string() const { return doc.dump(2) + "\n"; }
};

// Round to 15 significant digits so serialized reports are byte-stable.
double round_sig(double x);
Json complex_json(Complex z);

// Parse + validate + execute a version-1 scenario document.
ReportDocument run_scenario(const Json& scenario, double default_tol);
ReportDocument run_scenario_file(const std::string& path, double default_tol);

struct ExampleInfo {
  std::string id;
  std::string section;
  std::string description;
};

// Stable catalog of the built-in worked examples.
const std::vector<ExampleInfo>& example_catalog();

// Runs a built-in example against its embedded expected values.
ReportDocument reproduce(const std::string& id);

}  // namespace fermisep
