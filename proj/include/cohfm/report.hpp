#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "cohfm/rational.hpp"

namespace cohfm {

/// Ordered key/value tree rendered as the deterministic line-oriented block
/// format used by the CLI and the golden tests. No timestamps, no floats,
/// byte-identical across runs and worker counts.
struct ReportNode {
  std::string key;
  std::string value;  // leaves only
  std::vector<ReportNode> children;

  static ReportNode block(std::string key) { return {std::move(key), "", {}}; }
  static ReportNode leaf(std::string key, std::string value) {
    return {std::move(key), std::move(value), {}};
  }

  ReportNode& add(ReportNode child) {
    children.push_back(std::move(child));
    return children.back();
  }
  ReportNode& add(std::string key, std::string value) {
    return add(leaf(std::move(key), std::move(value)));
  }
  ReportNode& add(std::string key, const char* value) {
    return add(leaf(std::move(key), std::string(value)));
  }
  ReportNode& add(std::string key, const Rat& value) {
    return add(leaf(std::move(key), rat_str(value)));
  }
  template <typename Int>
    requires std::is_integral_v<Int>
  ReportNode& add(std::string key, Int value) {
    return add(leaf(std::move(key), std::to_string(value)));
  }
  ReportNode& add(std::string key, bool value) = delete;  // spell it out
  ReportNode& add_bool(std::string key, bool value) {
    return add(leaf(std::move(key), value ? "true" : "false"));
  }
};

// Nested "key: value" lines with two-space indentation.
std::string render_text(const ReportNode& node);
// Flattened "a.b.c: value" lines, one per leaf.
std::string render_flat(const ReportNode& node);

}  // namespace cohfm
