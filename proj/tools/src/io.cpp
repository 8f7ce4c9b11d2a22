#include <filesystem>
#include <fstream>
#include <sstream>

#include "bicanon/tools/scenario.hpp"

namespace bicanon::tools {

namespace detail {
// Generated from scenarios/*.json at build time.
const std::vector<std::pair<std::string, std::string>>& builtin_table();
}  // namespace detail

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Scalars and arrays of scalars (possibly nested once) print on one line.
bool is_flat(const Json& j) {
  if (is_scalar(j)) return true;
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (x.is_object()) return false;
    if (x.is_array()) {
      for (const auto& y : x)
        if (!is_scalar(y)) return false;
    }
  }
  return true;
}

std::string inline_value(const Json& j) {
  if (is_scalar(j)) return scalar(j);
  std::string out = "[";
  bool first = true;
  for (const auto& x : j) {
    out += (first ? "" : ", ") + inline_value(x);
    first = false;
  }
  return out + "]";
}

void render(std::ostringstream& os, const Json& obj, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const auto& v = it.value();
    if (is_flat(v)) {
      os << pad << it.key() << ": " << inline_value(v) << "\n";
      continue;
    }
    os << pad << it.key() << ":\n";
    if (v.is_object()) {
      render(os, v, indent + 2);
      continue;
    }
    for (const auto& item : v) {
      bool flat_row = item.is_object();
      if (flat_row) {
        for (const auto& f : item) flat_row = flat_row && is_flat(f);
      }
      if (flat_row) {
        os << pad << "  -";
        for (auto f = item.begin(); f != item.end(); ++f) os << " " << f.key() << "=" << inline_value(f.value());
        os << "\n";
      } else if (item.is_object()) {
        os << pad << "  -\n";
        render(os, item, indent + 4);
      } else {
        os << pad << "  - " << inline_value(item) << "\n";
      }
    }
  }
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Json Report::to_json() const {
  return Json{{"kind", kind}, {"name", name}, {"result", body}, {"summary", summary}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << name << " [" << kind << "]\n";
  render(os, body, 2);
  os << summary << "\n";
  return os.str();
}

Json parse_scenario(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const auto end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    if (const auto pos = detail.find("syntax error"); pos != std::string::npos) detail = detail.substr(pos);
    throw ScenarioError(source + ":" + std::to_string(line) + ":" + std::to_string(column), detail);
  }
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : detail::builtin_table()) out.push_back(name);
  return out;
}

std::optional<std::string> builtin_text(const std::string& name) {
  for (const auto& [n, text] : detail::builtin_table())
    if (n == name) return text;
  return std::nullopt;
}

Outcome execute(const std::string& target, bool json, bool verbose) {
  Outcome o;
  std::string source = target;
  try {
    std::string text;
    if (std::filesystem::is_regular_file(target)) {
      text = read_file(target);
    } else if (auto b = builtin_text(target)) {
      text = *b;
      source = "builtin " + target;
    } else {
      o.exit_code = 1;
      o.err = "error: no scenario file or builtin named \"" + target + "\"\n";
      return o;
    }
    const auto doc = parse_scenario(text, source);
    const auto report = run_scenario(doc, RunOptions{verbose});
    o.out = json ? report.to_json().dump(2) + "\n" : report.to_text();
  } catch (const ScenarioError& e) {
    o.exit_code = 1;
    // syntax errors already carry the source
    const bool located_in_source = e.location().rfind(source, 0) == 0;
    o.err = "error: " + (located_in_source ? std::string() : source + ": ") + e.what() + "\n";
  } catch (const InvalidInput& e) {
    o.exit_code = 1;
    o.err = "error: " + source + ": " + e.what() + "\n";
  } catch (const InconsistentData& e) {
    o.exit_code = 2;
    o.err = "inconsistent: " + source + ": " + e.what() + "\n";
  } catch (const std::exception& e) {
    o.exit_code = 2;
    o.err = "internal error: " + source + ": " + e.what() + "\n";
  }
  return o;
}

Outcome list_builtin() {
  Outcome o;
  for (const auto& name : builtin_names()) o.out += name + "\n";
  return o;
}

}  // namespace bicanon::tools
