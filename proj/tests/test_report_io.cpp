#include <gtest/gtest.h>

#include "monoquartic/report_io.hpp"

using namespace monoquartic;

TEST(ReportJson, FieldNamesAndOrder) {
  const Json j = to_json(is_monogenic({-4, 2}));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"trinomial", "irreducible", "c4", "disc",
                                            "disc_factored", "verdicts", "monogenic",
                                            "field_disc", "signature"}));
  EXPECT_EQ(j["trinomial"]["b"], -4);
  EXPECT_EQ(j["disc"], 2048);
  EXPECT_EQ(j["field_disc"], 2048);
  EXPECT_EQ(j["disc_factored"]["factors"], Json::parse("[[2, 11]]"));
  EXPECT_EQ(j["signature"], Json::parse(R"({"r1": 4, "r2": 0})"));
  EXPECT_EQ(j["verdicts"][0]["branch"], 1);
  EXPECT_EQ(j["verdicts"][0]["divides_index"], false);
}

TEST(ReportJson, BranchFourAndSkippedPrime) {
  const Json j = to_json(is_monogenic({5, 5}));
  EXPECT_EQ(j["monogenic"], false);
  EXPECT_TRUE(j["field_disc"].is_null());
  const Json& v0 = j["verdicts"][0];
  EXPECT_EQ(v0["prime"], 2);
  EXPECT_EQ(v0["branch"], 4);
  EXPECT_EQ(v0["divides_index"], true);
  EXPECT_EQ(v0["intermediates"]["h1"], Json::parse("[1, 1, 1]"));
  EXPECT_EQ(v0["intermediates"]["h2"], Json::parse("[1, 1, 1]"));
  const Json& v1 = j["verdicts"][1];
  EXPECT_EQ(v1["evaluated"], false);
  EXPECT_TRUE(v1["divides_index"].is_null());
}

TEST(ReportJson, BigIntegersBecomeStrings) {
  const Integer big = Integer(1) << 70;
  EXPECT_EQ(to_json(big), big.str());
  EXPECT_EQ(to_json(Integer(-5)), -5);
  const Json j = to_json(is_monogenic({1, (Integer(1) << 40) + 1}));
  EXPECT_TRUE(j["disc"].is_string());
  EXPECT_EQ(j["disc"].get<std::string>(), discriminant({1, (Integer(1) << 40) + 1}).str());
}

TEST(ReportJson, ErrorItem) {
  const SearchItem item{{3, 0}, std::nullopt, "degenerate"};
  EXPECT_EQ(to_json(item).dump(), R"({"trinomial":{"b":3,"d":0},"error":"degenerate"})");
}

TEST(ReportCsv, Rows) {
  EXPECT_EQ(csv_row(is_monogenic({-4, 2})), "-4,2,true,true,2048,true,4,0,");
  EXPECT_EQ(csv_row(is_monogenic({5, 5})), "5,5,true,true,2000,false,0,2,2");
  EXPECT_EQ(csv_row(is_monogenic({2, 1})), "2,1,false,false,0,false,,,");
  EXPECT_EQ(std::string(kCsvHeader), "b,d,irreducible,c4,disc,monogenic,r1,r2,failing_prime");
}
