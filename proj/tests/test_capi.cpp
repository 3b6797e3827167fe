#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "cohomlen/cohomlen.h"

namespace {

const char* const doc = R"({
  "group": {"p": 2, "rank": 2},
  "spaces": {"X": {"type": "rep_sphere", "weights": [[1, 0], [0, 1], [1, 1]]}},
  "query": "length"
})";

TEST(CApiTest, Version) { EXPECT_STREQ(cohomlen_version(), "1.0.0"); }

TEST(CApiTest, RunAndRender) {
  cohomlen_report* report = nullptr;
  ASSERT_EQ(cohomlen_run(doc, nullptr, nullptr, nullptr, 0, &report), COHOMLEN_OK);
  ASSERT_NE(report, nullptr);
  EXPECT_EQ(cohomlen_report_status(report), COHOMLEN_OK);
  const std::string text = cohomlen_report_render(report, COHOMLEN_FORMAT_JSON);
  EXPECT_NE(text.find("\"lo\": 3"), std::string::npos);
  EXPECT_STREQ(cohomlen_report_error_code(report), "");
  cohomlen_report_free(report);
}

TEST(CApiTest, ParametersAndSearchFailure) {
  const char* keys[] = {"lambda_max"};
  const char* values[] = {"2"};
  cohomlen_report* report = nullptr;
  EXPECT_EQ(cohomlen_run(doc, "verify", keys, values, 1, &report), COHOMLEN_E_SEARCH);
  ASSERT_NE(report, nullptr);
  EXPECT_STREQ(cohomlen_report_error_code(report), "E_SEARCH");
  cohomlen_report_free(report);
}

TEST(CApiTest, NullArgumentsAreUsageErrors) {
  cohomlen_report* report = nullptr;
  EXPECT_EQ(cohomlen_run(nullptr, nullptr, nullptr, nullptr, 0, &report), COHOMLEN_E_USAGE);
  EXPECT_EQ(cohomlen_run(doc, nullptr, nullptr, nullptr, 0, nullptr), COHOMLEN_E_USAGE);
  EXPECT_NE(std::strlen(cohomlen_last_error()), 0u);
}

TEST(CApiTest, Lint) {
  cohomlen_report* report = nullptr;
  EXPECT_EQ(cohomlen_lint(doc, &report), COHOMLEN_OK);
  cohomlen_report_free(report);
}

TEST(CApiTest, RepSphereHandle) {
  const int64_t weights[] = {1, 0, 0, 1, 1, 1};
  cohomlen_rep_sphere* s = nullptr;
  ASSERT_EQ(cohomlen_rep_sphere_create(2, 2, weights, 3, &s), COHOMLEN_OK);
  int64_t value = 0;
  ASSERT_EQ(cohomlen_rep_sphere_dim(s, &value), COHOMLEN_OK);
  EXPECT_EQ(value, 2);
  ASSERT_EQ(cohomlen_rep_sphere_length(s, &value), COHOMLEN_OK);
  EXPECT_EQ(value, 3);
  const char* euler = nullptr;
  ASSERT_EQ(cohomlen_rep_sphere_euler(s, &euler), COHOMLEN_OK);
  EXPECT_STREQ(euler, "t1^2*t2 + t1*t2^2");
  int agrees = 0;
  ASSERT_EQ(cohomlen_rep_sphere_verify(s, 4, &value, &agrees), COHOMLEN_OK);
  EXPECT_EQ(value, 3);
  EXPECT_EQ(agrees, 1);
  EXPECT_EQ(cohomlen_rep_sphere_verify(s, 2, &value, &agrees), COHOMLEN_E_SEARCH);
  cohomlen_rep_sphere_free(s);
}

TEST(CApiTest, RepSphereErrors) {
  const int64_t zero[] = {0, 0};
  cohomlen_rep_sphere* s = nullptr;
  EXPECT_EQ(cohomlen_rep_sphere_create(3, 2, zero, 1, &s), COHOMLEN_E_DATA);
  EXPECT_EQ(s, nullptr);
  EXPECT_NE(std::string(cohomlen_last_error()).find("E_DOMAIN"), std::string::npos);
  const int64_t w[] = {1};
  EXPECT_EQ(cohomlen_rep_sphere_create(4, 1, w, 1, &s), COHOMLEN_E_DATA);
}

}  // namespace
