#include <gtest/gtest.h>

#include <algorithm>

#include "tamaripop/bounds.hpp"
#include "tamaripop/verify.hpp"

namespace tamaripop {
namespace {

TEST(Verify, SuiteNames) {
  const auto& names = suite_names();
  const std::vector<std::string> expected{"bijection", "pop-oracle", "decomposition", "hash", "theorem-1",
                                          "congruence", "characterization", "theorem-2", "petersen", "all"};
  EXPECT_EQ(names, expected);
}

TEST(Verify, UnknownSuite) {
  EXPECT_THROW(run_suite("bogus"), std::invalid_argument);
}

TEST(Verify, BoundsAreChecked) {
  EXPECT_THROW(run_suite("congruence", {.max_n = 10}), BoundError);
  EXPECT_THROW(run_suite("theorem-1", {.max_n = 20}), BoundError);
  EXPECT_THROW(run_suite("theorem-1", {.max_n = 0}), std::invalid_argument);
}

TEST(Verify, EverySuitePassesAtSmallScale) {
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    const auto report = run_suite(name, {.max_n = 5, .max_t = 3, .seed = 9});
    EXPECT_TRUE(report.passed()) << name;
    EXPECT_FALSE(report.checks.empty()) << name;
    EXPECT_TRUE(std::is_sorted(report.checks.begin(), report.checks.end(),
                               [](const auto& a, const auto& b) { return a.name < b.name; }));
    for (const auto& c : report.checks) EXPECT_EQ(c.name.rfind(name + ".", 0), 0u) << c.name;
  }
}

TEST(Verify, DefaultScaleCountingSuites) {
  for (const char* name : {"theorem-1", "theorem-2"}) {
    const auto report = run_suite(name);
    EXPECT_TRUE(report.passed()) << report_to_json(report, false).dump(2);
  }
}

TEST(Verify, ReportIsDeterministicWithoutTimings) {
  const VerifyOptions opts{.max_n = 6, .max_t = 3, .seed = 4};
  const auto a = report_to_json(run_suite("all", opts), false).dump();
  const auto b = report_to_json(run_suite("all", opts), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("wall_ms"), std::string::npos);
  EXPECT_NE(report_to_json(run_suite("hash", opts), true).dump().find("wall_ms"), std::string::npos);
}

TEST(Verify, ReportShape) {
  const auto j = report_to_json(run_suite("hash", {.max_n = 4, .max_t = 2}), false);
  EXPECT_EQ(j["suite"], "hash");
  EXPECT_EQ(j["parameters"]["max_n"], 4);
  EXPECT_EQ(j["parameters"]["max_t"], 2);
  EXPECT_EQ(j["passed"], true);
  for (const auto& c : j["checks"]) {
    EXPECT_EQ(c["status"], "pass");
    EXPECT_FALSE(c.contains("counterexample"));
  }
}

TEST(Verify, FailingReportCarriesCounterexample) {
  VerificationReport r;
  r.suite = "x";
  r.checks.push_back({"x.a", false, "broken", Json{{"n", 3}}, 1.0});
  EXPECT_FALSE(r.passed());
  const auto j = report_to_json(r, false);
  EXPECT_EQ(j["checks"][0]["status"], "fail");
  EXPECT_EQ(j["checks"][0]["counterexample"]["n"], 3);
}

}  // namespace
}  // namespace tamaripop
