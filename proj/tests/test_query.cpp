#include <gtest/gtest.h>

#include "core/query.hpp"

namespace cohomlen {
namespace {

const char* const mod2_doc = R"({
  "group": {"p": 2, "rank": 2},
  "spaces": {"X": {"type": "rep_sphere", "weights": [[1, 0], [0, 1], [1, 1]]}},
  "query": "length"
})";

TEST(QueryTest, LengthOfRepSphere) {
  const auto r = run(mod2_doc);
  ASSERT_EQ(r.status, ExitStatus::ok) << r.body.dump();
  const auto& result = r.body.at("result");
  EXPECT_EQ(result.at("kind"), "exact");
  EXPECT_EQ(result.at("lo"), 3);
  EXPECT_EQ(result.at("hi"), 3);
  EXPECT_EQ(result.at("basis"), "cohomology-sphere/p=2");
  EXPECT_EQ(r.body.at("schema"), 1);
  EXPECT_EQ(r.body.at("status"), "ok");
  EXPECT_FALSE(r.body.at("provenance").empty());
}

TEST(QueryTest, VerifyWithLambdaMax) {
  const auto r = run(mod2_doc, std::string("verify"), {{"lambda_max", "4"}});
  ASSERT_EQ(r.status, ExitStatus::ok) << r.body.dump();
  EXPECT_EQ(r.body.at("result").at("lambda"), 3);
  EXPECT_EQ(r.body.at("result").at("agrees"), true);
  EXPECT_EQ(r.body.at("result").at("search_bound"), 4);
}

TEST(QueryTest, VerifyExhaustedIsSearchStatus) {
  const auto r = run(mod2_doc, std::string("verify"), {{"lambda_max", "2"}});
  EXPECT_EQ(r.status, ExitStatus::search);
  EXPECT_EQ(r.body.at("error").at("code"), "E_SEARCH");
}

TEST(QueryTest, BourginYangFromParameters) {
  const auto r = run(R"({"query": "bourgin-yang", "parameters": {"p": 0, "n": 5, "m": 1, "alpha": 1}})");
  ASSERT_EQ(r.status, ExitStatus::ok) << r.body.dump();
  EXPECT_EQ(r.body.at("result").at("bound_exact"), "1/1");
  EXPECT_EQ(r.body.at("result").at("bound_int"), 1);
  EXPECT_EQ(r.body.at("result").at("nonempty"), true);
}

TEST(QueryTest, EulerPolynomialText) {
  const auto r = run(mod2_doc, std::string("euler"));
  ASSERT_EQ(r.status, ExitStatus::ok) << r.body.dump();
  EXPECT_EQ(r.body.at("result").at("polynomial"), "t1^2*t2 + t1*t2^2");
  EXPECT_EQ(r.body.at("result").at("degree"), 3);
}

TEST(QueryTest, BorsukUlamObstructionIsSuccess) {
  const auto r = run(R"({
    "group": {"p": 0, "rank": 1},
    "spaces": {
      "X": {"type": "cohom_sphere", "n": 3, "r": -1, "fixed": [{"line": [1], "dim": 3}]},
      "Y": {"type": "cohom_sphere", "n": 1, "r": -1, "fixed": [{"line": [1], "dim": 1}]}
    },
    "query": "borsuk-ulam",
    "parameters": {"source": "X", "target": "Y"}
  })");
  ASSERT_EQ(r.status, ExitStatus::ok) << r.body.dump();
  EXPECT_EQ(r.body.at("result").at("exists"), "false");
  EXPECT_EQ(r.body.at("result").at("witnesses").size(), 1u);
}

TEST(QueryTest, ValidationFailureIsDataStatus) {
  const auto r = run(R"({
    "group": {"p": 2, "rank": 2},
    "spaces": {"X": {"type": "cohom_sphere", "n": 2, "r": -1,
                     "fixed": [{"line": [1, 0], "dim": 0}, {"line": [0, 1], "dim": 0}]}},
    "query": "length"
  })");
  EXPECT_EQ(r.status, ExitStatus::data);
  EXPECT_EQ(r.body.at("error").at("code"), "E_VALIDATION");
}

TEST(QueryTest, ValidateQueryReportsViolations) {
  const auto r = run(R"({
    "group": {"p": 3, "rank": 2},
    "spaces": {"X": {"type": "cohom_sphere", "n": 2, "r": -1, "fixed": [{"line": [1, 0], "dim": 2}]}},
    "query": "validate"
  })");
  EXPECT_EQ(r.status, ExitStatus::data);
  EXPECT_EQ(r.body.at("status"), "invalid");
  EXPECT_EQ(r.body.at("violations").size(), 2u);
}

TEST(QueryTest, UsageErrors) {
  EXPECT_EQ(run("{not json").status, ExitStatus::usage);
  EXPECT_EQ(run("[1, 2]").status, ExitStatus::usage);
  EXPECT_EQ(run(R"({"group": {"p": 2, "rank": 1}})").status, ExitStatus::usage);
  EXPECT_EQ(run(mod2_doc, std::string("nonsense")).status, ExitStatus::usage);
  EXPECT_EQ(run(mod2_doc, std::nullopt, {{"source", "Missing"}}).status, ExitStatus::usage);
  EXPECT_EQ(run(R"({"schema": 2, "query": "length"})").status, ExitStatus::usage);
}

TEST(QueryTest, ExplicitQueryOverridesDocument) {
  const auto r = run(mod2_doc, std::string("euler"));
  EXPECT_EQ(r.body.at("query"), "euler");
}

TEST(QueryTest, MapExistsAndCanonicalTarget) {
  const char* doc = R"({
    "group": {"p": 3, "rank": 2},
    "spaces": {
      "X": {"type": "cohom_sphere", "n": 3, "r": -1,
            "fixed": [{"line": [1, 0], "dim": 1}, {"line": [0, 1], "dim": 1}]},
      "V": {"type": "rep_sphere", "weights": [[1, 0], [1, 0]]}
    },
    "parameters": {"source": "X", "target": "V"}
  })";
  auto r = run(doc, std::string("map-exists"));
  ASSERT_EQ(r.status, ExitStatus::ok) << r.body.dump();
  EXPECT_EQ(r.body.at("result").at("exists"), "false");
  r = run(doc, std::string("canonical-target"));
  ASSERT_EQ(r.status, ExitStatus::ok) << r.body.dump();
  EXPECT_EQ(r.body.at("result").at("n"), 3);
}

TEST(QueryTest, BoundsQuery) {
  const auto r = run(mod2_doc, std::string("bounds"));
  ASSERT_EQ(r.status, ExitStatus::ok) << r.body.dump();
  EXPECT_EQ(r.body.at("result").at("lower_bound"), 3);
  EXPECT_EQ(r.body.at("result").at("upper_bound"), 9);
  EXPECT_EQ(r.body.at("result").at("a_genus"), 3);
}

TEST(LintTest, Examples) {
  EXPECT_EQ(lint(mod2_doc).status, ExitStatus::ok);
  const auto bad = lint(R"({
    "group": {"p": 2, "rank": 2},
    "spaces": {"X": {"type": "cohom_sphere", "n": 2, "r": -1,
                     "fixed": [{"line": [1, 0], "dim": 0}, {"line": [0, 1], "dim": 0}]}}
  })");
  EXPECT_EQ(bad.status, ExitStatus::data);
  ASSERT_EQ(bad.body.at("violations").size(), 1u);
  const auto message = bad.body.at("violations")[0].at("message").get<std::string>();
  EXPECT_NE(message.find("3"), std::string::npos);
  EXPECT_NE(message.find("2"), std::string::npos);
  EXPECT_EQ(lint("{").status, ExitStatus::usage);
}

TEST(RenderTest, DeterministicAndRoundTrips) {
  for (const auto& q : query_names()) {
    if (q == "bourgin-yang" || q == "borsuk-ulam" || q == "map-exists") continue;
    const auto a = run(mod2_doc, q);
    const auto b = run(mod2_doc, q);
    const auto text = render(a, OutputFormat::json);
    EXPECT_EQ(text, render(b, OutputFormat::json)) << q;
    EXPECT_EQ(json::parse(text), a.body) << q;
    EXPECT_EQ(render(a, OutputFormat::text), render(b, OutputFormat::text)) << q;
    EXPECT_EQ(text.back(), '\n');
  }
}

}  // namespace
}  // namespace cohomlen
