#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bicanon/errors.hpp"

namespace bicanon::tools {

using Json = nlohmann::ordered_json;

// A schema violation, located by a JSON pointer ("/curve1/branch/2/element")
// or, for syntax errors, by "line:column".
class ScenarioError : public InvalidInput {
 public:
  ScenarioError(std::string location, const std::string& message)
      : InvalidInput(location + ": " + message), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

struct RunOptions {
  bool verbose = false;
};

// The single result object behind both output formats.
struct Report {
  std::string kind;
  std::string name;
  Json body;            // kind-specific fields, in display order
  std::string summary;  // one line, printed last in the text form

  Json to_json() const;
  std::string to_text() const;
};

// Parses scenario text; syntax errors become ScenarioError at "source:line:column".
Json parse_scenario(const std::string& text, const std::string& source);

// Validates the payload against its kind's schema, then runs it. Throws
// ScenarioError / InvalidInput (exit 1) or InconsistentData (exit 2).
Report run_scenario(const Json& scenario, const RunOptions& options = {});

std::vector<std::string> builtin_names();
std::optional<std::string> builtin_text(const std::string& name);

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// `run <file|builtin>`: reads a file if one exists at target, else a builtin.
Outcome execute(const std::string& target, bool json, bool verbose);
Outcome list_builtin();

}  // namespace bicanon::tools
