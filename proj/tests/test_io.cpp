#include <gtest/gtest.h>

#include <random>

#include "eislat/io.hpp"
#include "eislat/suites.hpp"

using namespace eislat;

TEST(Io, ParseCoordinates) {
  EXPECT_EQ(io::parse_eis("3"), EisInt(3L));
  EXPECT_EQ(io::parse_eis("-1+2w"), EisInt(-1L, 2L));
  // ω̄ = −1 − ω, so 2 − ω̄ = 3 + ω.
  EXPECT_EQ(io::parse_eis("2-wb"), EisInt(3L, 1L));
  EXPECT_EQ(io::parse_eis("wb"), EisInt::omega_bar());
  EXPECT_EQ(io::parse_eis("-w"), EisInt(0L, -1L));
  EXPECT_EQ(io::parse_eis(" 1 + 2*w "), EisInt(1L, 2L));
  EXPECT_EQ(io::parse_eis("3wb+w"), EisInt(-3L, -2L));
  EXPECT_EQ(io::parse_eis("123456789012345678901234567890"), EisInt(Int("123456789012345678901234567890")));
  for (const char* bad : {"", "x", "1+", "2w3", "*w", "1++w", "w*"}) EXPECT_THROW(io::parse_eis(bad), io::ParseError) << bad;
}

TEST(Io, ParseVectors) {
  EXPECT_EQ(io::parse_vector({"3,1,1,1,1"}), (EVec{3L, 1L, 1L, 1L, 1L}));
  EXPECT_EQ(io::parse_vector({"2-wb", "1", "1", "1", "1"}), (EVec{EisInt(3L, 1L), 1L, 1L, 1L, 1L}));
  EXPECT_THROW(io::parse_vector({"1,,2"}), io::ParseError);
}

TEST(Io, StringRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    EisInt x(d(rng), d(rng));
    EXPECT_EQ(io::parse_eis(x.str()), x) << x.str();
  }
}

TEST(Io, JsonRoundTrip) {
  EVec v{EisInt(3L, -1L), EisInt(Int("-99999999999999999999999"), Int(7)), 0L};
  auto j = io::to_json(v);
  EXPECT_EQ(j[0], nlohmann::json::array({3, -1}));
  EXPECT_TRUE(j[1][0].is_string());
  EXPECT_EQ(io::vec_from_json(j), v);
  EXPECT_EQ(io::vec_from_json(nlohmann::json::parse(j.dump())), v);
  EXPECT_THROW(io::eis_from_json(nlohmann::json::array({1})), io::ParseError);
}

TEST(Io, CertificateJson) {
  EVec v = gamma::Word::letter(gamma::Gen::R3, 2).apply(rho());
  auto cert = gamma::reduce_null(v);
  auto j = io::to_json(cert);
  EXPECT_EQ(io::vec_from_json(j["input"]), v);
  EXPECT_EQ(io::vec_from_json(j["final"]), cert.final_vector);
  EXPECT_EQ(j["word"]["text"], cert.word.str());
  EXPECT_EQ(j["steps"].size(), cert.steps.size());
}

TEST(Suites, Manifest) {
  EXPECT_EQ(suites::suite_names().size(), 7u);
  EXPECT_TRUE(suites::is_suite("all"));
  EXPECT_TRUE(suites::is_suite("milnor"));
  EXPECT_FALSE(suites::is_suite("bogus"));
  EXPECT_THROW(suites::run("bogus", {}), std::invalid_argument);
}

TEST(Suites, ReportIsDeterministic) {
  suites::Params p{1, 7};
  auto a = suites::report_json("milnor", p, suites::run("milnor", p)).dump();
  auto b = suites::report_json("milnor", p, suites::run("milnor", p)).dump();
  EXPECT_EQ(a, b);
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["schema"], suites::kSchema);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["parameters"]["seed"], 7);
}

TEST(Suites, FailuresCarryData) {
  suites::Checks cs{{"a", suites::Status::pass, "", {}}, {"b", suites::Status::skipped, "why", {}}};
  EXPECT_TRUE(suites::all_pass(cs));
  cs.push_back({"c", suites::Status::fail, "", {{"x", 1}}});
  EXPECT_FALSE(suites::all_pass(cs));
  auto j = suites::report_json("relations", {}, {{"relations", cs}});
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["suites"][0]["checks"][2]["data"]["x"], 1);
}
