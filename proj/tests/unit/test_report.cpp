#include "cohfm/error.hpp"
#include "cohfm/report.hpp"
#include "cohfm/verify.hpp"
#include "doctest.h"

using namespace cohfm;

TEST_SUITE_BEGIN("report");

TEST_CASE("nested rendering") {
  ReportNode root = ReportNode::block("search");
  root.add("total", 42);
  root.add("c3_target", rat(16, 3));
  ReportNode& rejected = root.add(ReportNode::block("rejected"));
  rejected.add("rank", 0);
  rejected.add("c1", 40);
  root.add_bool("infeasible_within_bounds", true);

  CHECK(render_text(root) ==
        "search:\n"
        "  total: 42\n"
        "  c3_target: 16/3\n"
        "  rejected:\n"
        "    rank: 0\n"
        "    c1: 40\n"
        "  infeasible_within_bounds: true\n");
  CHECK(render_flat(root) ==
        "search.total: 42\n"
        "search.c3_target: 16/3\n"
        "search.rejected.rank: 0\n"
        "search.rejected.c1: 40\n"
        "search.infeasible_within_bounds: true\n");
}

TEST_CASE("rendering is reproducible") {
  ReportNode a = suite_report(run_verification_suite("ring-V"));
  ReportNode b = suite_report(run_verification_suite("ring-V"));
  CHECK(render_text(a) == render_text(b));
}

TEST_CASE("verification suite registry") {
  CHECK_THROWS_AS(run_verification_suite("no-such-suite"), Error);
  for (const std::string& name : verification_suite_names()) {
    const SuiteResult result = run_verification_suite(name);
    CHECK(result.suite == name);
    CHECK(!result.checks.empty());
    CHECK(result.passed());
    CHECK(result.first_failure() == nullptr);
  }
}

TEST_SUITE_END();
