#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bicanon/tools/scenario.hpp"

namespace bicanon::tools::detail {

// Read-only view of a JSON value that remembers where it came from, so every
// schema error names the offending field.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const Json& raw() const { return *j_; }
  std::string where() const { return path_.empty() ? "/" : path_; }

  [[noreturn]] void fail(const std::string& message) const { throw ScenarioError(where(), message); }

  bool is_string() const { return j_->is_string(); }
  bool is_object() const { return j_->is_object(); }
  bool is_array() const { return j_->is_array(); }

  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

  Node at(const std::string& key) const {
    if (!j_->is_object()) fail("expected an object");
    const auto it = j_->find(key);
    if (it == j_->end()) fail("missing field \"" + key + "\"");
    return Node(*it, path_ + "/" + key);
  }

  std::vector<Node> items() const {
    if (!j_->is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "/" + std::to_string(i));
    return out;
  }

  std::vector<std::pair<std::string, Node>> fields() const {
    if (!j_->is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = j_->begin(); it != j_->end(); ++it) out.emplace_back(it.key(), Node(it.value(), path_ + "/" + it.key()));
    return out;
  }

  std::int64_t integer() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<std::int64_t>();
  }

  std::string string() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

  std::vector<std::int64_t> integers() const {
    std::vector<std::int64_t> out;
    for (const auto& n : items()) out.push_back(n.integer());
    return out;
  }

  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (const auto& n : items()) out.push_back(n.string());
    return out;
  }

  // Rejects fields outside `allowed`.
  void only(std::initializer_list<const char*> allowed) const {
    for (const auto& [key, node] : fields()) {
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) node.fail("unknown field");
    }
  }

 private:
  const Json* j_;
  std::string path_;
};

// Runs f; an InvalidInput raised by the core while building a value from
// this node is re-raised at the node's location.
template <class F>
auto located(const Node& node, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ScenarioError&) {
    throw;
  } catch (const InvalidInput& e) {
    node.fail(e.what());
  }
}

}  // namespace bicanon::tools::detail
