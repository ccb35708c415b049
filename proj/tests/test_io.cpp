#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "logsplit/commands.hpp"
#include "logsplit/error.hpp"
#include "logsplit/io.hpp"

namespace logsplit {
namespace {

using S = ComplexScalar;

const char* kModularJson = R"({
  "punctures": 3,
  "dim": 2,
  "generators": [
    [[{"re": 1}, {"re": 0}], [{"re": 0}, {"re": -1}]],
    [[{"re": "-1/2"}, {"re": 1}], [{"re": "3/4"}, {"re": "1/2"}]]
  ]
})";

const char* kAmbiguousJson = R"({
  "punctures": 3,
  "dim": 2,
  "generators": [
    [[{"r": 1, "q": "3/5"}, {"re": 0}], [{"re": 0}, {"re": 1}]],
    [[{"r": 1, "q": "3/5"}, {"re": 1}], [{"re": 0}, {"re": 1}]]
  ]
})";

// e^{i 1e-7}: its q (about 1.6e-8) snaps to zero only under a loose tolerance.
std::string near_axis_json(const std::string& tolerances = "") {
  std::string doc = R"({"punctures": 2, "dim": 1, "generators": [[[{"re": 1.0, "im": 1e-7}]]])";
  if (!tolerances.empty()) doc += R"(, "tolerances": )" + tolerances;
  return doc + "}";
}

struct CommandRun {
  int code;
  std::string out;
  std::string err;
};

CommandRun run_classify(const std::string& input, const CommandOptions& options = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cmd_classify(in, out, err, options);
  return {code, out.str(), err.str()};
}

CommandRun run_c1(const std::string& input, const CommandOptions& options = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cmd_c1(in, out, err, options);
  return {code, out.str(), err.str()};
}

Error parse_error(const std::string& text) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return Error(ErrorCode::InternalInconsistency, "");
}

TEST(ParseInput, CartesianExactEntries) {
  const InputDocument doc = parse_input(kModularJson);
  EXPECT_EQ(doc.punctures, 3);
  EXPECT_EQ(doc.dim, 2u);
  ASSERT_EQ(doc.generators.size(), 2u);
  EXPECT_TRUE(doc.generators[1].all_exact_cartesian());
  EXPECT_EQ(doc.generators[1](1, 0).exact_cartesian()->re, Rational(3, 4));
  EXPECT_FALSE(doc.tol.has_value());
  const Representation golden = modular_golden_representation();
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        EXPECT_TRUE(exactly_equal(doc.generators[g](i, j), golden.generators()[g](i, j)));
}

TEST(ParseInput, PolarEntries) {
  const InputDocument doc = parse_input(kAmbiguousJson);
  const auto polar = doc.generators[0](0, 0).exact_polar();
  ASSERT_TRUE(polar.has_value());
  EXPECT_EQ(polar->q, Rational(3, 5));
  EXPECT_EQ(polar->r, 1.0);
}

TEST(ParseInput, FloatEntriesAreInexact) {
  const InputDocument doc = parse_input(near_axis_json());
  EXPECT_FALSE(doc.generators[0](0, 0).is_exact());
  EXPECT_DOUBLE_EQ(doc.generators[0](0, 0).value().imag(), 1e-7);
}

TEST(ParseInput, Tolerances) {
  const InputDocument doc = parse_input(near_axis_json(R"({"tol": 1e-6, "integrality_tol": 1e-4})"));
  EXPECT_EQ(doc.tol, 1e-6);
  EXPECT_EQ(doc.integrality_tol, 1e-4);
  EXPECT_EQ(parse_error(near_axis_json(R"({"tol": -1})")).code(), ErrorCode::ParseError);
  EXPECT_EQ(parse_error(near_axis_json(R"({"eps": 1})")).code(), ErrorCode::ParseError);
}

TEST(ParseInput, SyntaxErrorHasPosition) {
  const Error e = parse_error("{\n  \"punctures\": 2,\n  \"dim\": ]\n}");
  EXPECT_EQ(e.code(), ErrorCode::ParseError);
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
}

TEST(ParseInput, FieldErrorsNamePath) {
  const Error missing = parse_error(R"({"punctures": 2, "dim": 1})");
  EXPECT_NE(std::string(missing.what()).find("generators"), std::string::npos);

  const Error entry = parse_error(R"({"punctures": 2, "dim": 1, "generators": [[[{"re": "x/2"}]]]})");
  EXPECT_NE(std::string(entry.what()).find("/generators/0/0/0/re"), std::string::npos) << entry.what();

  const Error unknown = parse_error(R"({"punctures": 2, "dim": 1, "generators": [[[{"re": 1, "z": 0}]]]})");
  EXPECT_NE(std::string(unknown.what()).find("unknown field 'z'"), std::string::npos);

  const Error count = parse_error(R"({"punctures": 3, "dim": 1, "generators": [[[{"re": 1}]]]})");
  EXPECT_NE(std::string(count.what()).find("/generators"), std::string::npos);

  EXPECT_EQ(parse_error(R"({"punctures": 4, "dim": 1, "generators": []})").code(), ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"punctures": 2, "dim": 9, "generators": []})").code(), ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"punctures": 2, "dim": 2, "generators": [[[{"re": 1}]]]})").code(),
            ErrorCode::ParseError);
  EXPECT_EQ(parse_error("[1, 2]").code(), ErrorCode::ParseError);
}

TEST(ParseInput, PolarArgumentOutsideBranch) {
  EXPECT_EQ(parse_error(R"({"punctures": 2, "dim": 1, "generators": [[[{"r": 1, "q": "5/4"}]]]})").code(),
            ErrorCode::OutOfBranch);
  EXPECT_EQ(parse_error(R"({"punctures": 2, "dim": 1, "generators": [[[{"r": 1, "q": 1}]]]})").code(),
            ErrorCode::OutOfBranch);
  EXPECT_EQ(parse_error(R"({"punctures": 2, "dim": 1, "generators": [[[{"r": 0, "q": "1/2"}]]]})").code(),
            ErrorCode::OutOfBranch);
}

TEST(Output, RoundTrip) {
  const OutputDocument doc = OutputDocument::from_report(classify(parse_input(kAmbiguousJson).representation()));
  EXPECT_EQ(doc.kind, "ThreeDim2ReducibleAmbiguous");
  EXPECT_TRUE(doc.ambiguous);
  EXPECT_EQ(doc.candidates, (std::vector<std::vector<int>>{{-1, -1}, {0, -2}}));
  const std::string text = serialize(doc);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(parse_output(text), doc);
  EXPECT_EQ(serialize(parse_output(text)), text);
}

TEST(Output, KeyOrder) {
  const std::string text = serialize(OutputDocument::from_report(classify(modular_golden_representation())));
  const auto at = [&](const char* key) { return text.find(std::string("\"") + key + "\""); };
  EXPECT_LT(at("kind"), at("c1"));
  EXPECT_LT(at("c1"), at("candidates"));
  EXPECT_LT(at("candidates"), at("ambiguous"));
  EXPECT_LT(at("ambiguous"), at("warnings"));
  EXPECT_LT(at("warnings"), at("diagnostics"));
}

TEST(CmdClassify, ModularDocument) {
  const CommandRun r = run_classify(kModularJson);
  ASSERT_EQ(r.code, exit_code::kOk) << r.err;
  const OutputDocument doc = parse_output(r.out);
  EXPECT_EQ(doc.kind, "ThreeDim2Irreducible");
  EXPECT_EQ(doc.c1, -2);
  EXPECT_EQ(doc.candidates, (std::vector<std::vector<int>>{{-1, -1}}));
  EXPECT_FALSE(doc.ambiguous);
  EXPECT_TRUE(r.err.empty());
}

TEST(CmdClassify, DeterministicOutput) {
  EXPECT_EQ(run_classify(kModularJson).out, run_classify(kModularJson).out);
  EXPECT_EQ(run_classify(kAmbiguousJson).out, run_classify(kAmbiguousJson).out);
}

TEST(CmdClassify, AmbiguityWarningOnStderr) {
  const CommandRun r = run_classify(kAmbiguousJson);
  ASSERT_EQ(r.code, exit_code::kOk);
  EXPECT_NE(r.err.find("warning: AmbiguousExtension"), std::string::npos);
}

TEST(CmdClassify, ExitCodes) {
  const std::string dim3 = R"({"punctures": 3, "dim": 3, "generators": [
    [[{"re": 1}, {"re": 0}, {"re": 0}], [{"re": 0}, {"re": 1}, {"re": 0}], [{"re": 0}, {"re": 0}, {"re": 1}]],
    [[{"re": 1}, {"re": 0}, {"re": 0}], [{"re": 0}, {"re": 1}, {"re": 0}], [{"re": 0}, {"re": 0}, {"re": 1}]]]})";
  const CommandRun unsupported = run_classify(dim3);
  EXPECT_EQ(unsupported.code, exit_code::kUnsupported);
  EXPECT_NE(unsupported.err.find("UnsupportedCase"), std::string::npos);
  EXPECT_TRUE(unsupported.out.empty());

  EXPECT_EQ(run_classify("{").code, exit_code::kInvalid);
  EXPECT_EQ(run_classify(R"({"punctures": 2, "dim": 1, "generators": [[[{"r": 1, "q": "5/4"}]]]})").code,
            exit_code::kInvalid);
  const CommandRun singular = run_classify(R"({"punctures": 2, "dim": 1, "generators": [[[{"re": 0}]]]})");
  EXPECT_EQ(singular.code, exit_code::kInvalid);
  EXPECT_NE(singular.err.find("SingularMatrix"), std::string::npos);
}

TEST(CmdClassify, NonIntegralSumExitsThree) {
  // Floating input leaves a rounding residue in the q-sum; an integrality
  // budget below that residue must reject it.
  const std::string doc = R"({"punctures": 3, "dim": 2, "generators": [
    [[{"re": -0.99, "im": -0.87}, {"re": -0.14}], [{"re": -0.80}, {"re": 0.02}]],
    [[{"re": 0.22}, {"re": 0.91, "im": 0.90}], [{"re": 0.01}, {"re": -0.07}]]]})";
  CommandOptions opts;
  opts.integrality_tol = 1e-300;
  const CommandRun r = run_classify(doc, opts);
  EXPECT_EQ(r.code, exit_code::kNonIntegral);
  EXPECT_NE(r.err.find("NonIntegralChernClass"), std::string::npos);
  EXPECT_EQ(run_classify(doc).code, exit_code::kOk);
  EXPECT_EQ(exit_code_for(ErrorCode::NonIntegralChernClass), exit_code::kNonIntegral);
  EXPECT_EQ(exit_code_for(ErrorCode::UnsupportedCase), exit_code::kUnsupported);
  EXPECT_EQ(exit_code_for(ErrorCode::ParseError), exit_code::kInvalid);
  EXPECT_EQ(exit_code_for(ErrorCode::ClosureDefect), exit_code::kInvalid);
}

TEST(CmdClassify, TolerancePrecedence) {
  // Library default keeps the value off the axis.
  EXPECT_EQ(parse_output(run_classify(near_axis_json()).out).c1, -1);
  // The document tolerance snaps it.
  EXPECT_EQ(parse_output(run_classify(near_axis_json(R"({"tol": 1e-6})")).out).c1, 0);
  // The command-line flag wins over the document.
  CommandOptions opts;
  opts.tol = 1e-12;
  EXPECT_EQ(parse_output(run_classify(near_axis_json(R"({"tol": 1e-6})"), opts).out).c1, -1);
}

TEST(CmdC1, ModularDocument) {
  const CommandRun r = run_c1(kModularJson);
  ASSERT_EQ(r.code, exit_code::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("c1").get<int>(), -2);
  EXPECT_EQ(j.at("exact_q_sum").get<std::string>(), "2");
  EXPECT_NEAR(j.at("raw_q_sum").get<double>(), 2.0, 1e-12);
  EXPECT_EQ(j.at("integrality_defect").get<double>(), 0.0);
  EXPECT_TRUE(j.contains("ln_r_closure_defect"));
}

TEST(CmdC1, FloatInputHasNoExactSum) {
  const CommandRun r = run_c1(near_axis_json());
  ASSERT_EQ(r.code, exit_code::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("c1").get<int>(), -1);
  EXPECT_FALSE(j.contains("exact_q_sum"));
}

TEST(CmdSweep, TwoSteps) {
  std::ostringstream out, err;
  ASSERT_EQ(cmd_sweep(2, out, err), exit_code::kOk);
  EXPECT_EQ(out.str(), "q0,q1,root\n0,0,0\n0,1/2,-1\n1/2,0,-1\n1/2,1/2,-1\n");
}

TEST(CmdSweep, OneStep) {
  std::ostringstream out, err;
  ASSERT_EQ(cmd_sweep(1, out, err), exit_code::kOk);
  EXPECT_EQ(out.str(), "q0,q1,root\n0,0,0\n");
}

TEST(CmdSweep, GridCounts) {
  std::ostringstream out, err;
  const int steps = 12;
  ASSERT_EQ(cmd_sweep(steps, out, err), exit_code::kOk);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  int rows = 0, zero = 0, minus_two = 0;
  while (std::getline(lines, line)) {
    ++rows;
    const std::string root = line.substr(line.rfind(',') + 1);
    if (root == "0") ++zero;
    if (root == "-2") ++minus_two;
  }
  EXPECT_EQ(rows, steps * steps);
  EXPECT_EQ(zero, 1);
  // Lattice points with i + j > steps, i, j < steps.
  EXPECT_EQ(minus_two, (steps - 1) * (steps - 2) / 2);
}

TEST(CmdSweep, InvalidSteps) {
  for (int steps : {0, -3, kMaxSweepSteps + 1}) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_sweep(steps, out, err), exit_code::kInvalid);
    EXPECT_TRUE(out.str().empty());
    EXPECT_FALSE(err.str().empty());
  }
}

TEST(CmdSelftest, Passes) {
  std::ostringstream out;
  EXPECT_EQ(cmd_selftest(out), exit_code::kOk) << out.str();
  EXPECT_EQ(out.str().find("FAIL"), std::string::npos);
}

TEST(CmdSelftest, PassesUnderLooseTolerance) {
  std::ostringstream out;
  SelftestOptions opts;
  opts.tolerances.tol = 10.0;
  EXPECT_EQ(cmd_selftest(out, opts), exit_code::kOk) << out.str();
}

TEST(CmdSelftest, CorruptedGoldenFails) {
  std::ostringstream out;
  SelftestOptions opts;
  opts.corrupt_golden = true;
  EXPECT_EQ(cmd_selftest(out, opts), exit_code::kSelftestFailed);
  EXPECT_NE(out.str().find("FAIL modular"), std::string::npos);
}

}  // namespace
}  // namespace logsplit
