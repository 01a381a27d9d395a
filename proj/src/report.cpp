#include "cohfm/report.hpp"

namespace cohfm {

namespace {

void render_text_into(const ReportNode& node, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(2 * depth), ' ');
  out += node.key;
  out += ':';
  if (!node.value.empty()) {
    out += ' ';
    out += node.value;
  }
  out += '\n';
  for (const ReportNode& child : node.children) render_text_into(child, depth + 1, out);
}

void render_flat_into(const ReportNode& node, const std::string& prefix, std::string& out) {
  const std::string path = prefix.empty() ? node.key : prefix + "." + node.key;
  if (node.children.empty()) {
    out += path;
    out += ": ";
    out += node.value;
    out += '\n';
    return;
  }
  for (const ReportNode& child : node.children) render_flat_into(child, path, out);
}

}  // namespace

std::string render_text(const ReportNode& node) {
  std::string out;
  render_text_into(node, 0, out);
  return out;
}

std::string render_flat(const ReportNode& node) {
  std::string out;
  render_flat_into(node, "", out);
  return out;
}

}  // namespace cohfm
