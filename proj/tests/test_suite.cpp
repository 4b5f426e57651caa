#include "voacert/suite.hpp"

#include <gtest/gtest.h>

using namespace voacert;

namespace {

const CheckResult* find(const SuiteReport& r, const std::string& key) {
  for (const auto& c : r.checks)
    if (c.key == key) return &c;
  return nullptr;
}

}  // namespace

TEST(Suite, SmallRangeAllPass) {
  SuiteConfig c;
  c.n_min = 2;
  c.n_max = 4;
  c.sheet_n_min = 4;
  c.sheet_n_max = 4;
  c.sample_count = 20;
  const auto r = run_suite(c);
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  EXPECT_EQ(r.count(CheckStatus::fail), 0u);
  EXPECT_EQ(r.count(CheckStatus::skip), 4u);  // chi_minus at n = 2, 3
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                             [](const CheckResult& a, const CheckResult& b) { return a.key < b.key; }));
}

TEST(Suite, ChiMinusSkippedBelowFour) {
  SuiteConfig c;
  c.n_min = c.n_max = 2;
  c.sheet_n_min = 1;
  c.sheet_n_max = 0;
  const auto r = run_suite(c);
  EXPECT_TRUE(r.passed());
  const auto* s = find(r, "singular/chi_minus/n=2");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->status, CheckStatus::skip);
  EXPECT_FALSE(s->reason.empty());
}

TEST(Suite, InjectedFaultFailsStructure) {
  SuiteConfig c;
  c.n_min = c.n_max = 2;
  c.sheet_n_min = 1;
  c.sheet_n_max = 0;
  c.inject_fault = true;
  c.only = "structure";
  const auto r = run_suite(c);
  EXPECT_FALSE(r.passed());
  const auto* s = find(r, "structure/psl/n=2");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->status, CheckStatus::fail);
  bool triple = false;
  for (const auto& v : s->witness["violations"]) triple |= v["property"] == "jacobi" && v["elements"].size() == 3;
  EXPECT_TRUE(triple);
  EXPECT_NE(s->repro.find("--inject-fault"), std::string::npos);
  EXPECT_NE(s->repro.find("--only structure/psl/n=2"), std::string::npos);
}

TEST(Suite, ResourceLimits) {
  SuiteConfig c;
  c.n_min = c.n_max = 3;
  c.max_n = 2;
  c.sheet_n_min = c.sheet_n_max = 4;
  c.only = "structure/sl";
  auto r = run_suite(c);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].status, CheckStatus::skip);

  c.only = "sheet";
  c.max_n = 6;
  c.sample_count = 5000;
  r = run_suite(c);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].status, CheckStatus::skip);
}

TEST(Suite, ReportsAreDeterministic) {
  SuiteConfig c;
  c.n_min = 2;
  c.n_max = 3;
  c.sheet_n_min = c.sheet_n_max = 4;
  c.sample_count = 10;
  c.workers = 1;
  const std::string one = run_suite(c).to_json().dump();
  c.workers = 4;
  EXPECT_EQ(run_suite(c).to_json().dump(), one);
}

TEST(Suite, ConfigFromJson) {
  const auto c = SuiteConfig::from_json(nlohmann::json::parse(
      R"({"default_n_range":[2,3],"seed":9,"sample_count":12,"resource_limits":{"max_n":4,"max_sample_count":50}})"));
  EXPECT_EQ(c.n_min, 2);
  EXPECT_EQ(c.n_max, 3);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.sample_count, 12u);
  EXPECT_EQ(c.max_n, 4);
  EXPECT_EQ(c.max_sample_count, 50u);
  EXPECT_EQ(SuiteConfig::from_json(c.to_json()).to_json(), c.to_json());
}
