#include <gtest/gtest.h>

#include "../golden_cases.hpp"

namespace extatica::golden {
namespace {

class GoldenTest : public ::testing::TestWithParam<Case> {};

TEST_P(GoldenTest, MatchesFixture) {
  const Case& c = GetParam();
  Outcome o = run_case(c);
  EXPECT_EQ(o.exit, c.exit) << o.err;
  if (c.stdout_text) {
    EXPECT_EQ(o.out, *c.stdout_text);
    EXPECT_TRUE(o.err.empty());
  } else {
    EXPECT_TRUE(o.out.empty());
    auto err = nlohmann::json::parse(o.err);
    ASSERT_TRUE(err.is_object());
    EXPECT_EQ(err.size(), 1u);
    EXPECT_TRUE(err.at("error").is_string());
  }
}

INSTANTIATE_TEST_SUITE_P(Cli, GoldenTest, ::testing::ValuesIn(load_cases(EXTATICA_GOLDEN_DIR)),
                         [](const auto& info) { return info.param.name; });

TEST(CliTest, SchemasHaveEveryField) {
  const std::map<std::string, std::vector<std::string>> schemas = {
      {"extactic", {"command", "vars", "field", "mode", "k", "m", "engine", "extactic",
                    "degree", "degree_bound", "identically_zero"}},
      {"invariant-check", {"command", "field", "curve", "invariant", "cofactor"}},
      {"first-integral", {"command", "status", "numerator", "denominator", "rank"}},
      {"bound", {"command", "formula", "lhs", "rhs", "threshold", "verdict"}},
  };
  for (const auto& c : load_cases(EXTATICA_GOLDEN_DIR)) {
    if (!c.stdout_text) continue;
    auto j = nlohmann::json::parse(*c.stdout_text);
    auto it = schemas.find(j.at("command").get<std::string>());
    if (it == schemas.end()) continue;
    EXPECT_EQ(j.size(), it->second.size()) << c.name;
    for (const auto& key : it->second) EXPECT_TRUE(j.contains(key)) << c.name << " " << key;
  }
}

TEST(CliTest, JobsDoNotChangeOutput) {
  std::vector<std::string> base = {"extactic", "--field-corpus", "planted:3,2,4", "--k", "2",
                                   "--system", "homogeneous", "--engine", "modular"};
  std::ostringstream a, b, err;
  auto with_jobs = base;
  with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
  ASSERT_EQ(cli::run(base, a, err), 0);
  ASSERT_EQ(cli::run(with_jobs, b, err), 0);
  EXPECT_EQ(a.str(), b.str());
}

TEST(CliTest, BadEnvironmentOverrideIsAnInputError) {
  ::setenv("EXTATICA_MAX_DIM", "lots", 1);
  std::ostringstream out, err;
  EXPECT_EQ(cli::run({"extactic", "--vars", "x,y", "--field", "x, y", "--k", "1"}, out, err), 2);
  ::unsetenv("EXTATICA_MAX_DIM");
  EXPECT_TRUE(out.str().empty());
}

}  // namespace
}  // namespace extatica::golden
