#include "logsplit/commands.hpp"

#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "json.hpp"
#include "logsplit/io.hpp"

namespace logsplit {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedCase: return exit_code::kUnsupported;
    case ErrorCode::NonIntegralChernClass: return exit_code::kNonIntegral;
    default: return exit_code::kInvalid;
  }
}

namespace {

Tolerances resolve(const CommandOptions& options, const InputDocument& doc) {
  Tolerances tols;
  if (doc.tol) tols.tol = *doc.tol;
  if (doc.integrality_tol) tols.integrality = *doc.integrality_tol;
  if (options.tol) tols.tol = *options.tol;
  if (options.integrality_tol) tols.integrality = *options.integrality_tol;
  return tols;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInvalid;
  }
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int cmd_classify(std::istream& in, std::ostream& out, std::ostream& err, const CommandOptions& options) {
  return guarded(err, [&] {
    const InputDocument doc = parse_input(slurp(in));
    const ClassificationReport report = classify(doc.representation(), resolve(options, doc));
    for (const auto& w : report.warnings) err << "warning: " << w << "\n";
    out << serialize(OutputDocument::from_report(report));
    return exit_code::kOk;
  });
}

int cmd_c1(std::istream& in, std::ostream& out, std::ostream& err, const CommandOptions& options) {
  return guarded(err, [&] {
    const InputDocument doc = parse_input(slurp(in));
    const Tolerances tols = resolve(options, doc);
    const PuncturedRepresentation prep = build(doc.representation(), tols.tol);
    const ChernResult chern = ohtsuki_c1(prep, tols.integrality);
    for (const auto& w : prep.branch_warnings()) err << "warning: " << w << "\n";
    nlohmann::ordered_json j;
    j["c1"] = chern.c1;
    j["raw_q_sum"] = chern.raw_q_sum;
    if (chern.exact_q_sum) j["exact_q_sum"] = chern.exact_q_sum->str();
    j["integrality_defect"] = chern.integrality_defect;
    j["ln_r_closure_defect"] = chern.ln_r_closure_defect;
    out << j.dump(2) << "\n";
    return exit_code::kOk;
  });
}

int cmd_sweep(int steps, std::ostream& out, std::ostream& err) {
  if (steps < 1 || steps > kMaxSweepSteps) {
    err << "error: steps must be in [1, " << kMaxSweepSteps << "], got " << steps << "\n";
    return exit_code::kInvalid;
  }
  return guarded(err, [&] {
    std::string buffer = "q0,q1,root\n";
    for (int i = 0; i < steps; ++i) {
      const Rational q0(i, steps);
      const std::string prefix = q0.str() + ",";
      for (int j = 0; j < steps; ++j) {
        const Rational q1(j, steps);
        buffer += prefix;
        buffer += q1.str();
        buffer += ',';
        buffer += std::to_string(character_root(q0, q1));
        buffer += '\n';
      }
      if (buffer.size() > (1u << 20)) {
        out << buffer;
        buffer.clear();
      }
    }
    out << buffer;
    return exit_code::kOk;
  });
}

Representation modular_golden_representation(bool corrupt) {
  using S = ComplexScalar;
  Matrix t{{S::exact(1), S::exact(0)}, {S::exact(0), S::exact(-1)}};
  Matrix s{{S::exact(Rational(-1, 2)), S::exact(1)}, {S::exact(Rational(3, 4)), S::exact(Rational(1, 2))}};
  if (corrupt) s(1, 0) = S::exact(Rational(2, 3));
  return Representation(3, {t, s});
}

namespace {

struct Check {
  std::string name;
  std::function<std::string()> run;  // empty string on success
};

std::string expect(bool ok, const std::string& detail) { return ok ? std::string() : detail; }

std::string q_multiset(const EigenData& data) {
  std::vector<std::string> qs;
  for (const auto& p : data.pairs) {
    const std::string q = p.q.exact ? p.q.exact->str() : "~" + std::to_string(p.q.value);
    for (std::size_t k = 0; k < p.multiplicity; ++k) qs.push_back(q);
  }
  std::sort(qs.begin(), qs.end());
  std::string out = "{";
  for (std::size_t i = 0; i < qs.size(); ++i) out += (i ? "," : "") + qs[i];
  return out + "}";
}

}  // namespace

int cmd_selftest(std::ostream& out, const SelftestOptions& options) {
  const Tolerances& tols = options.tolerances;
  const Representation golden = modular_golden_representation(options.corrupt_golden);
  using S = ComplexScalar;

  std::vector<Check> checks;
  checks.push_back({"modular: monodromy at infinity", [&] {
                      const Matrix inf = monodromy_at_infinity(golden.generators(), tols.tol);
                      const Matrix expected{{S::exact(Rational(-1, 2)), S::exact(-1)},
                                            {S::exact(Rational(3, 4)), S::exact(Rational(-1, 2))}};
                      bool same = true;
                      for (std::size_t i = 0; i < 2; ++i)
                        for (std::size_t j = 0; j < 2; ++j) same = same && exactly_equal(inf(i, j), expected(i, j));
                      return expect(same, "(M0 M1)^-1 differs from [[-1/2,-1],[3/4,-1/2]]");
                    }});
  checks.push_back({"modular: local branch data", [&] {
                      const PuncturedRepresentation prep = build(golden, tols.tol);
                      const std::string got = q_multiset(prep.local_eigen[0]) + q_multiset(prep.local_eigen[1]) +
                                              q_multiset(prep.local_eigen[2]);
                      return expect(got == "{0,1/2}{0,1/2}{1/3,2/3}", "got " + got);
                    }});
  checks.push_back({"modular: c1 = -2", [&] {
                      const ChernResult chern = ohtsuki_c1(build(golden, tols.tol), tols.integrality);
                      return expect(chern.c1 == -2 && chern.exact_q_sum == Rational(2),
                                    "c1 = " + std::to_string(chern.c1));
                    }});
  checks.push_back({"modular: irreducible, O(-1)+O(-1)", [&] {
                      const ClassificationReport r = classify(golden, tols);
                      return expect(r.kind == ClassificationKind::ThreeDim2Irreducible && r.candidates.size() == 1 &&
                                        r.candidates[0] == SplittingType({-1, -1}),
                                    std::string(to_string(r.kind)) + " " +
                                        (r.candidates.empty() ? "" : r.candidates[0].str()));
                    }});
  checks.push_back({"character table on quarter lattice", [&] {
                      for (int i = 0; i < 4; ++i) {
                        for (int j = 0; j < 4; ++j) {
                          const int expected = (i == 0 && j == 0) ? 0 : (i + j <= 4 ? -1 : -2);
                          const int got = character_root(Rational(i, 4), Rational(j, 4));
                          if (got != expected) {
                            return "(" + std::to_string(i) + "/4, " + std::to_string(j) + "/4) gave " +
                                   std::to_string(got);
                          }
                        }
                      }
                      return std::string();
                    }});
  checks.push_back({"character (-1, -1) gives O(-1)", [&] {
                      const Representation chi(3, {Matrix{{S::exact(-1)}}, Matrix{{S::exact(-1)}}});
                      const ClassificationReport r = classify(chi, tols);
                      return expect(r.c1 == -1 && r.candidates[0] == SplittingType({-1}),
                                    "got " + r.candidates[0].str());
                    }});
  checks.push_back({"unique flag (-2, 0) is ambiguous", [&] {
                      const S p = S::polar(1.0, Rational(3, 5));
                      const Representation rep(3, {Matrix{{p, S{}}, {S{}, S::one()}}, Matrix{{p, S::one()}, {S{}, S::one()}}});
                      const ClassificationReport r = classify(rep, tols);
                      return expect(r.ambiguous() && r.c1 == -2 && r.candidates.size() == 2 &&
                                        r.candidates[0] == SplittingType({-1, -1}) &&
                                        r.candidates[1] == SplittingType({0, -2}),
                                    std::string(to_string(r.kind)));
                    }});

  bool all_ok = true;
  for (const auto& check : checks) {
    std::string failure;
    try {
      failure = check.run();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    if (failure.empty()) {
      out << "PASS " << check.name << "\n";
    } else {
      all_ok = false;
      out << "FAIL " << check.name << ": " << failure << "\n";
    }
  }
  return all_ok ? exit_code::kOk : exit_code::kSelftestFailed;
}

}  // namespace logsplit
