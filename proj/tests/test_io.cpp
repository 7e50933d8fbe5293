#include <gtest/gtest.h>

#include <sstream>

#include "maxplus/cli.hpp"
#include "maxplus/io.hpp"
#include "support.hpp"

using namespace maxplus;

namespace {

const std::string kFixtures = FIXTURE_DIR;

io::Json worked_doc() {
  return io::instance_to_json(testing_support::worked_instance());
}

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = maxplus::cli::run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST(Io, ParsesWorkedFixture) {
  const auto inst = io::parse_instance(kFixtures + "/worked_1x1.json");
  EXPECT_EQ(inst.tasks(), 1u);
  EXPECT_EQ(inst.workers(), 1u);
  EXPECT_EQ(inst.a, (TropMatrix{{4}}));
  EXPECT_EQ(inst.r, TropMatrix::column({8}));
}

TEST(Io, NullIsTheZeroElement) {
  const auto inst = io::parse_instance(kFixtures + "/feasible_2x3_a.json");
  EXPECT_EQ(inst.a(0, 2), kZero);
  EXPECT_EQ(io::instance_to_json(inst)["A"][0][2], nullptr);
}

TEST(Io, LengthMismatchNamesField) {
  io::Json doc = worked_doc();
  doc["q"] = {1, 2};
  try {
    io::instance_from_json(doc);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("q"), std::string::npos);
  }
  doc = worked_doc();
  doc["C"] = {{1, 2}};
  try {
    io::instance_from_json(doc);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("C row 0"), std::string::npos);
  }
}

TEST(Io, BadEntriesNameRowAndColumn) {
  io::Json doc = worked_doc();
  doc["D"] = {{"x"}};
  try {
    io::instance_from_json(doc);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("D row 0 column 0"), std::string::npos);
  }
  doc = worked_doc();
  doc.erase("B");
  EXPECT_THROW(io::instance_from_json(doc), ParseError);
  EXPECT_THROW(io::instance_from_json(io::Json::parse("[1]")), ParseError);
}

TEST(Io, NullInHIsInvalid) {
  try {
    io::parse_instance(kFixtures + "/invalid_null_h.json");
    FAIL();
  } catch (const InvalidInstance& e) {
    EXPECT_EQ(std::string(e.what()), "h must be regular");
  }
}

TEST(Io, OverflowingNumberRejected) {
  EXPECT_THROW(io::instance_from_text(
                   R"({"m":1,"n":1,"A":[[1e400]],"B":[[3]],"C":[[1]],"D":[[2]],)"
                   R"("g":[0],"h":[10],"q":[5],"r":[8]})"),
               ParseError);
  EXPECT_THROW(io::instance_from_text("{\"m\": NaN}"), ParseError);
}

TEST(Io, ReportRoundTrip) {
  for (const char* f : {"worked_1x1.json", "feasible_2x3_a.json",
                        "feasible_2x3_b.json", "infeasible_stage1.json",
                        "infeasible_stage2.json"}) {
    const auto inst = io::parse_instance(kFixtures + "/" + f);
    const io::ReportFile rep = io::make_report(sched::solve(inst));
    const io::Json j = io::report_to_json(rep);
    const io::ReportFile back = io::report_from_json(io::Json::parse(j.dump()));
    EXPECT_EQ(back, rep) << f;
    EXPECT_EQ(io::report_to_json(back).dump(), j.dump()) << f;
  }
}

TEST(Io, NonDyadicValuesRoundTripExactly) {
  io::ReportFile rep;
  rep.stage1.feasible = true;
  rep.stage1.condition_value = TropValue(-1.0 / 3.0);
  rep.stage1.optimum = TropValue(2.0 / 7.0);
  const io::ReportFile back =
      io::report_from_json(io::Json::parse(io::report_to_json(rep).dump()));
  EXPECT_EQ(back, rep);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"solve", kFixtures + "/worked_1x1.json"}), 0);
  EXPECT_EQ(run({"stage1", kFixtures + "/worked_1x1.json"}), 0);
  EXPECT_EQ(run({"extreme", kFixtures + "/worked_1x1.json"}), 0);
  EXPECT_EQ(run({"solve", kFixtures + "/infeasible_stage1.json"}), 2);
  EXPECT_EQ(run({"stage1", kFixtures + "/infeasible_stage1.json"}), 2);
  EXPECT_EQ(run({"solve", kFixtures + "/infeasible_stage2.json"}), 2);
  EXPECT_EQ(run({"solve", kFixtures + "/invalid_null_h.json"}), 3);
  EXPECT_EQ(run({"solve", kFixtures + "/missing.json"}), 3);
  EXPECT_EQ(run({"frobnicate"}), 1);
}

TEST(Cli, SolveReportsOptima) {
  std::string text;
  ASSERT_EQ(run({"solve", kFixtures + "/worked_1x1.json"}, &text), 0);
  const io::Json j = io::Json::parse(text);
  EXPECT_EQ(j["stage1"]["mu"], -1.0);
  EXPECT_EQ(j["stage2"]["eta"], 2.0);
  EXPECT_EQ(j["solution_set"]["u_box"]["upper"][0], 6.0);
}

TEST(Cli, VerifyAgrees) {
  std::string text;
  ASSERT_EQ(run({"verify", kFixtures + "/worked_1x1.json"}, &text), 0);
  EXPECT_EQ(io::Json::parse(text)["verification"]["agreement"], true);
}

TEST(Cli, SampleIsDeterministic) {
  std::string a, b, c;
  const std::string f = kFixtures + "/feasible_2x3_a.json";
  ASSERT_EQ(run({"sample", f, "--count", "5", "--seed", "42"}, &a), 0);
  ASSERT_EQ(run({"sample", f, "--count", "5", "--seed", "42"}, &b), 0);
  ASSERT_EQ(run({"sample", f, "--count", "5", "--seed", "43"}, &c), 0);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  const io::Json j = io::Json::parse(a);
  EXPECT_EQ(j["seed"], 42u);
  EXPECT_EQ(j["samples"].size(), 5u);
}

TEST(Cli, TextFormat) {
  std::string text;
  ASSERT_EQ(run({"solve", kFixtures + "/infeasible_stage1.json", "--format", "text"},
                &text),
            2);
  EXPECT_NE(text.find("condition value 2"), std::string::npos);
}
