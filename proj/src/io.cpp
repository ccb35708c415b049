#include "logsplit/io.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "logsplit/error.hpp"

namespace logsplit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, path + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      fail(path, "unknown field '" + key + "'");
    }
  }
}

Rational parse_rational_field(const json& v, const std::string& path) {
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

// Exact value for integers and "p/s" strings; nullopt for floating numbers.
std::optional<Rational> exact_number(const json& v, const std::string& path) {
  if (v.is_string()) return parse_rational_field(v, path);
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number()) return std::nullopt;
  fail(path, "expected a number or a \"p/s\" string");
}

double float_number(const json& v, const std::string& path) {
  if (const auto exact = exact_number(v, path)) return exact->to_double();
  return v.get<double>();
}

ComplexScalar parse_entry(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "matrix entry must be an object");
  if (v.contains("r") || v.contains("q")) {
    reject_unknown(v, {"r", "q"}, path);
    const double r = float_number(require(v, "r", path), path + "/r");
    const json& qv = require(v, "q", path);
    Rational q;
    if (qv.is_string()) q = parse_rational_field(qv, path + "/q");
    else if (qv.is_number_integer()) q = Rational(qv.get<std::int64_t>());
    else fail(path + "/q", "expected a \"p/s\" string");
    try {
      return ComplexScalar::polar(r, q);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what());
    }
  }
  reject_unknown(v, {"re", "im"}, path);
  const json& re = require(v, "re", path);
  const json im = v.contains("im") ? v.at("im") : json(0);
  const auto re_exact = exact_number(re, path + "/re");
  const auto im_exact = exact_number(im, path + "/im");
  if (re_exact && im_exact) return ComplexScalar::exact(*re_exact, *im_exact);
  return ComplexScalar{float_number(re, path + "/re"), float_number(im, path + "/im")};
}

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, position(text, e.byte) + ": malformed JSON");
  }
}

}  // namespace

Representation InputDocument::representation() const { return Representation(punctures, generators); }

InputDocument parse_input(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("/", "document must be an object");
  reject_unknown(doc, {"punctures", "dim", "generators", "tolerances"}, "/");

  InputDocument out;
  try {
    const json& punctures = require(doc, "punctures", "/");
    if (!punctures.is_number_integer()) fail("/punctures", "expected an integer");
    out.punctures = punctures.get<int>();
    if (out.punctures != 2 && out.punctures != 3) fail("/punctures", "must be 2 or 3");

    const json& dim = require(doc, "dim", "/");
    if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1 ||
        dim.get<std::int64_t>() > static_cast<std::int64_t>(kMaxDimension)) {
      fail("/dim", "expected an integer in [1, " + std::to_string(kMaxDimension) + "]");
    }
    out.dim = dim.get<std::size_t>();

    const json& gens = require(doc, "generators", "/");
    if (!gens.is_array()) fail("/generators", "expected an array of matrices");
    if (gens.size() != static_cast<std::size_t>(out.punctures - 1)) {
      fail("/generators", "expected " + std::to_string(out.punctures - 1) + " generators for " +
                              std::to_string(out.punctures) + " punctures, got " + std::to_string(gens.size()));
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string gpath = "/generators/" + std::to_string(g);
      const json& rows = gens[g];
      if (!rows.is_array() || rows.size() != out.dim) fail(gpath, "expected " + std::to_string(out.dim) + " rows");
      Matrix m(out.dim);
      for (std::size_t i = 0; i < out.dim; ++i) {
        const std::string rpath = gpath + "/" + std::to_string(i);
        if (!rows[i].is_array() || rows[i].size() != out.dim) {
          fail(rpath, "expected " + std::to_string(out.dim) + " entries");
        }
        for (std::size_t j = 0; j < out.dim; ++j) m(i, j) = parse_entry(rows[i][j], rpath + "/" + std::to_string(j));
      }
      out.generators.push_back(std::move(m));
    }

    if (doc.contains("tolerances")) {
      const json& tols = doc.at("tolerances");
      if (!tols.is_object()) fail("/tolerances", "expected an object");
      reject_unknown(tols, {"tol", "integrality_tol"}, "/tolerances");
      const auto positive = [](const json& v, const std::string& path) {
        if (!v.is_number() || !(v.get<double>() > 0.0)) fail(path, "expected a positive number");
        return v.get<double>();
      };
      if (tols.contains("tol")) out.tol = positive(tols.at("tol"), "/tolerances/tol");
      if (tols.contains("integrality_tol")) {
        out.integrality_tol = positive(tols.at("integrality_tol"), "/tolerances/integrality_tol");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return out;
}

OutputDocument OutputDocument::from_report(const ClassificationReport& report) {
  OutputDocument doc;
  doc.kind = std::string(to_string(report.kind));
  doc.c1 = report.c1;
  for (const auto& c : report.candidates) doc.candidates.push_back(c.roots());
  doc.ambiguous = report.ambiguous();
  doc.warnings = report.warnings;
  doc.raw_q_sum = report.chern.raw_q_sum;
  doc.integrality_defect = report.chern.integrality_defect;
  doc.ln_r_closure_defect = report.chern.ln_r_closure_defect;
  return doc;
}

std::string serialize(const OutputDocument& doc) {
  ordered_json j;
  j["kind"] = doc.kind;
  j["c1"] = doc.c1;
  j["candidates"] = doc.candidates;
  j["ambiguous"] = doc.ambiguous;
  j["warnings"] = doc.warnings;
  j["diagnostics"] = ordered_json{{"raw_q_sum", doc.raw_q_sum},
                                  {"integrality_defect", doc.integrality_defect},
                                  {"ln_r_closure_defect", doc.ln_r_closure_defect}};
  return j.dump(2) + "\n";
}

OutputDocument parse_output(std::string_view text) {
  const json j = parse_json(text);
  OutputDocument doc;
  try {
    doc.kind = j.at("kind").get<std::string>();
    doc.c1 = j.at("c1").get<int>();
    doc.candidates = j.at("candidates").get<std::vector<std::vector<int>>>();
    doc.ambiguous = j.at("ambiguous").get<bool>();
    doc.warnings = j.at("warnings").get<std::vector<std::string>>();
    const json& diag = j.at("diagnostics");
    doc.raw_q_sum = diag.at("raw_q_sum").get<double>();
    doc.integrality_defect = diag.at("integrality_defect").get<double>();
    doc.ln_r_closure_defect = diag.at("ln_r_closure_defect").get<double>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return doc;
}

}  // namespace logsplit
