#include <gtest/gtest.h>

#include "json.hpp"

#include "hiero/error.hpp"
#include "hiero/harness.hpp"

using namespace hiero;

TEST(Harness, SingleChecks) {
  const Permutation w = Permutation::parse("2143");
  EXPECT_TRUE(check_km(w).pass) << check_km(w).details;
  EXPECT_TRUE(check_bpd_conjecture(w).pass) << check_bpd_conjecture(w).details;
  EXPECT_TRUE(check_equidim(Permutation::parse("214365")).pass);
  EXPECT_EQ(run_check(Conjecture::KM, w).conjecture, Conjecture::KM);
}

TEST(Harness, ConjectureNames) {
  EXPECT_EQ(parse_conjecture("bpd"), Conjecture::BPD);
  EXPECT_EQ(to_string(Conjecture::Equidim), "equidim");
  EXPECT_THROW(parse_conjecture("foo"), Error);
}

TEST(Harness, SweepIsDeterministic) {
  const SweepReport one = sweep(Conjecture::BPD, 4, 1);
  const SweepReport many = sweep(Conjecture::BPD, 4, 4);
  EXPECT_EQ(one.to_json(), many.to_json());
  EXPECT_EQ(one.results.size(), 1u + 2u + 6u + 24u);
  EXPECT_TRUE(one.all_pass());
}

TEST(Harness, ReportJson) {
  const auto j = nlohmann::json::parse(sweep(Conjecture::KM, 2, 1).to_json());
  EXPECT_EQ(j["conjecture"], "km");
  EXPECT_EQ(j["upto"], 2);
  EXPECT_EQ(j["all_pass"], true);
  ASSERT_EQ(j["results"].size(), 3u);
  const auto& r = j["results"][2];
  EXPECT_EQ(r["n"], 2);
  EXPECT_EQ(r["permutation"], "21");
  EXPECT_EQ(r["pass"], true);
  EXPECT_TRUE(r.contains("details"));
}

TEST(Harness, SizeLimits) {
  try {
    (void)sweep(Conjecture::KM, 6, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}
