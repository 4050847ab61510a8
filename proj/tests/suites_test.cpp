#include "conekit/suites.hpp"
#include "test_util.hpp"

using namespace conekit;

class SuiteTest : public ::testing::TestWithParam<std::string> {};

// Reduced trial counts; the acceptance binary runs the full counts.
TEST_P(SuiteTest, PassesReduced) {
  const SuiteResult r = run_suite(GetParam(), 50, 2024);
  EXPECT_TRUE(r.passed()) << r.witness.value_or("");
  EXPECT_GT(r.checks, 0u);
}

TEST_P(SuiteTest, Reproducible) {
  const SuiteResult a = run_suite(GetParam(), 10, 77), b = run_suite(GetParam(), 10, 77);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.metrics, b.metrics);
}

namespace {

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suite_registry()) out.push_back(s.name);
  return out;
}

}  // namespace

INSTANTIATE_TEST_SUITE_P(All, SuiteTest, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string n = info.param;
                           for (auto& c : n) c = c == '.' ? '_' : c;
                           return n;
                         });
