#include "maxplus/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace maxplus::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& doc, const std::string& key,
                  const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) fail(where, "missing field \"" + key + "\"");
  return *it;
}

TropValue parse_value(const Json& j, const std::string& where) {
  if (j.is_null()) return kZero;
  if (!j.is_number()) fail(where, "expected a number or null");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "number is not finite");
  return TropValue(v);
}

std::size_t parse_dim(const Json& doc, const char* key) {
  const Json& j = field(doc, key, "instance");
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    fail(key, "expected a positive integer");
  }
  return j.get<std::size_t>();
}

TropMatrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols,
                        const std::string& name) {
  if (!j.is_array()) fail(name, "expected an array of rows");
  if (j.size() != rows) {
    fail(name, "expected " + std::to_string(rows) + " rows, got " +
                   std::to_string(j.size()));
  }
  TropMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_name = name + " row " + std::to_string(i);
    if (!j[i].is_array()) fail(row_name, "expected an array");
    if (j[i].size() != cols) {
      fail(row_name, "expected " + std::to_string(cols) + " entries, got " +
                         std::to_string(j[i].size()));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a(i, c) = parse_value(j[i][c], row_name + " column " + std::to_string(c));
    }
  }
  return a;
}

TropMatrix parse_vector(const Json& j, std::size_t len,
                        const std::string& name) {
  if (!j.is_array()) fail(name, "expected an array");
  if (j.size() != len) {
    fail(name, "expected " + std::to_string(len) + " entries, got " +
                   std::to_string(j.size()));
  }
  TropMatrix v(len, 1);
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = parse_value(j[i], name + " entry " + std::to_string(i));
  }
  return v;
}

// Report matrices carry their own shape.
TropMatrix parse_any_matrix(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    fail(name, "expected a nonempty array of rows");
  }
  return parse_matrix(j, j.size(), j[0].size(), name);
}

TropMatrix parse_any_vector(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) fail(name, "expected a nonempty array");
  return parse_vector(j, j.size(), name);
}

bool parse_bool(const Json& doc, const std::string& key,
                const std::string& where) {
  const Json& j = field(doc, key, where);
  if (!j.is_boolean()) fail(where + "." + key, "expected a boolean");
  return j.get<bool>();
}

Json stage_to_json(const ReportFile::Stage& s, const char* optimum_key) {
  Json j;
  j["feasible"] = s.feasible;
  j["condition_value"] = value_to_json(s.condition_value);
  j["marginal"] = s.marginal;
  if (s.optimum) j[optimum_key] = value_to_json(*s.optimum);
  if (!s.families.empty()) {
    Json fam = Json::object();
    for (const auto& f : s.families) fam[f.name] = value_to_json(f.value);
    j["term_families"] = fam;
    j["dominant_term_family"] = s.dominant_family;
  }
  return j;
}

ReportFile::Stage stage_from_json(const Json& j, const char* optimum_key,
                                  const std::string& where) {
  ReportFile::Stage s;
  s.feasible = parse_bool(j, "feasible", where);
  s.condition_value = parse_value(field(j, "condition_value", where),
                                  where + ".condition_value");
  s.marginal = parse_bool(j, "marginal", where);
  if (j.contains(optimum_key)) {
    s.optimum = parse_value(j.at(optimum_key), where + "." + optimum_key);
  }
  if (j.contains("term_families")) {
    const Json& fam = j.at("term_families");
    if (!fam.is_object()) fail(where + ".term_families", "expected an object");
    for (const auto& [name, value] : fam.items()) {
      s.families.push_back(
          {name, parse_value(value, where + ".term_families." + name)});
    }
    const Json& dom = field(j, "dominant_term_family", where);
    if (!dom.is_string()) fail(where + ".dominant_term_family", "expected a string");
    s.dominant_family = dom.get<std::string>();
  }
  return s;
}

Json point_to_json(const ReportFile::Point& p) {
  Json j;
  if (p.u) j["u"] = vector_to_json(*p.u);
  if (p.v) j["v"] = vector_to_json(*p.v);
  j["x"] = vector_to_json(p.x);
  j["y"] = vector_to_json(p.y);
  j["objective"] = value_to_json(p.objective);
  return j;
}

ReportFile::Point point_from_json(const Json& j, const std::string& where) {
  std::optional<TropMatrix> u, v;
  if (j.contains("u")) u = parse_any_vector(j.at("u"), where + ".u");
  if (j.contains("v")) v = parse_any_vector(j.at("v"), where + ".v");
  return ReportFile::Point{
      std::move(u), std::move(v),
      parse_any_vector(field(j, "x", where), where + ".x"),
      parse_any_vector(field(j, "y", where), where + ".y"),
      parse_value(field(j, "objective", where), where + ".objective")};
}

Json box_to_json(const TropMatrix& lo, const TropMatrix& hi) {
  Json j;
  j["lower"] = vector_to_json(lo);
  j["upper"] = vector_to_json(hi);
  return j;
}

std::string fmt(const TropValue& v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string fmt(const TropMatrix& a) {
  std::ostringstream os;
  os.precision(12);
  if (a.cols() == 1) {
    os << '(';
    for (std::size_t i = 0; i < a.rows(); ++i) os << (i ? ", " : "") << a[i];
    os << ')';
  } else {
    os << a;
  }
  return os.str();
}

void stage_text(std::ostringstream& os, const char* title, const char* sym,
                const ReportFile::Stage& s) {
  os << title << ": " << (s.feasible ? "feasible" : "infeasible")
     << " (condition value " << fmt(s.condition_value)
     << (s.marginal ? ", marginal" : "") << ")\n";
  if (s.optimum) os << "  " << sym << " = " << fmt(*s.optimum) << '\n';
  for (const auto& f : s.families) {
    os << "    " << f.name << ": " << fmt(f.value)
       << (f.name == s.dominant_family ? "  <- attains the maximum" : "")
       << '\n';
  }
}

void point_text(std::ostringstream& os, const ReportFile::Point& p) {
  os << "  ";
  if (p.u) os << "u = " << fmt(*p.u) << ", v = " << fmt(*p.v) << ": ";
  os << "x = " << fmt(p.x) << ", y = " << fmt(p.y)
     << ", objective = " << fmt(p.objective) << '\n';
}

}  // namespace

Json value_to_json(const TropValue& v) {
  return v.is_zero() ? Json(nullptr) : Json(v.value());
}

Json matrix_to_json(const TropMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(value_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const TropMatrix& v) {
  if (v.cols() != 1) return matrix_to_json(v);
  Json out = Json::array();
  for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(value_to_json(v[i]));
  return out;
}

sched::ProblemInstance instance_from_json(const Json& doc) {
  if (!doc.is_object()) fail("instance", "expected an object");
  const std::size_t m = parse_dim(doc, "m");
  const std::size_t n = parse_dim(doc, "n");
  sched::ProblemInstance inst{
      parse_matrix(field(doc, "A", "instance"), m, n, "A"),
      parse_matrix(field(doc, "B", "instance"), m, n, "B"),
      parse_matrix(field(doc, "C", "instance"), m, n, "C"),
      parse_matrix(field(doc, "D", "instance"), m, n, "D"),
      parse_vector(field(doc, "g", "instance"), n, "g"),
      parse_vector(field(doc, "h", "instance"), n, "h"),
      parse_vector(field(doc, "q", "instance"), m, "q"),
      parse_vector(field(doc, "r", "instance"), m, "r")};
  sched::validate(inst);
  return inst;
}

sched::ProblemInstance parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return instance_from_text(text.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

sched::ProblemInstance instance_from_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return instance_from_json(doc);
}

Json instance_to_json(const sched::ProblemInstance& inst) {
  Json j;
  j["m"] = inst.tasks();
  j["n"] = inst.workers();
  j["A"] = matrix_to_json(inst.a);
  j["B"] = matrix_to_json(inst.b);
  j["C"] = matrix_to_json(inst.c);
  j["D"] = matrix_to_json(inst.d);
  j["g"] = vector_to_json(inst.g);
  j["h"] = vector_to_json(inst.h);
  j["q"] = vector_to_json(inst.q);
  j["r"] = vector_to_json(inst.r);
  return j;
}

ReportFile make_report(const sched::SolveReport& report) {
  auto families = [](const std::vector<sched::TermFamily>& fs) {
    std::vector<ReportFile::Family> out;
    for (const auto& f : fs) out.push_back({f.name, f.value});
    return out;
  };
  ReportFile out;
  const auto& s1 = report.stage1;
  out.stage1 = {s1.verdict.feasible, s1.verdict.value, s1.verdict.marginal,
                std::nullopt, families(s1.families), s1.dominant_family};
  if (s1.verdict.feasible) out.stage1.optimum = s1.mu;
  if (report.stage2) {
    const auto& s2 = *report.stage2;
    out.stage2 = ReportFile::Stage{s2.verdict.feasible, s2.verdict.value,
                                   s2.verdict.marginal, std::nullopt,
                                   families(s2.families), s2.dominant_family};
    if (s2.verdict.feasible) out.stage2->optimum = s2.eta;
  }
  if (report.solution) {
    const auto& s = *report.solution;
    out.solution_set = ReportFile::SolutionSet{
        s.u_lower, s.u_upper, s.v_lower, s.v_upper, s.x_generator, s.y_generator};
  }
  for (const auto& p : report.extreme) {
    out.extreme_points.push_back({std::nullopt, std::nullopt, p.x, p.y, p.objective});
  }
  out.notes = report.notes;
  return out;
}

Json report_to_json(const ReportFile& report) {
  Json j;
  j["stage1"] = stage_to_json(report.stage1, "mu");
  if (report.stage2) j["stage2"] = stage_to_json(*report.stage2, "eta");
  if (report.solution_set) {
    const auto& s = *report.solution_set;
    Json set;
    set["u_box"] = box_to_json(s.u_lower, s.u_upper);
    set["v_box"] = box_to_json(s.v_lower, s.v_upper);
    set["generators"] = {{"x", matrix_to_json(s.x_generator)},
                         {"y", matrix_to_json(s.y_generator)}};
    j["solution_set"] = set;
  }
  j["extreme_points"] = Json::array();
  for (const auto& p : report.extreme_points) {
    j["extreme_points"].push_back(point_to_json(p));
  }
  if (report.verification) {
    const auto& v = *report.verification;
    Json ver;
    ver["oracle_run"] = v.oracle_run;
    ver["stage1_found"] = v.stage1_found;
    if (v.stage1_best) ver["stage1_best"] = value_to_json(*v.stage1_best);
    ver["stage2_found"] = v.stage2_found;
    if (v.stage2_best) ver["stage2_best"] = value_to_json(*v.stage2_best);
    ver["tolerance"] = v.tolerance;
    ver["agreement"] = v.agreement;
    j["verification"] = ver;
  }
  if (report.seed) j["seed"] = *report.seed;
  if (!report.samples.empty()) {
    j["samples"] = Json::array();
    for (const auto& p : report.samples) j["samples"].push_back(point_to_json(p));
  }
  j["notes"] = report.notes;
  return j;
}

ReportFile report_from_json(const Json& doc) {
  if (!doc.is_object()) fail("report", "expected an object");
  ReportFile out;
  out.stage1 = stage_from_json(field(doc, "stage1", "report"), "mu", "stage1");
  if (doc.contains("stage2")) {
    out.stage2 = stage_from_json(doc.at("stage2"), "eta", "stage2");
  }
  if (doc.contains("solution_set")) {
    const Json& s = doc.at("solution_set");
    const Json& ub = field(s, "u_box", "solution_set");
    const Json& vb = field(s, "v_box", "solution_set");
    const Json& gen = field(s, "generators", "solution_set");
    out.solution_set = ReportFile::SolutionSet{
        parse_any_vector(field(ub, "lower", "u_box"), "u_box.lower"),
        parse_any_vector(field(ub, "upper", "u_box"), "u_box.upper"),
        parse_any_vector(field(vb, "lower", "v_box"), "v_box.lower"),
        parse_any_vector(field(vb, "upper", "v_box"), "v_box.upper"),
        parse_any_matrix(field(gen, "x", "generators"), "generators.x"),
        parse_any_matrix(field(gen, "y", "generators"), "generators.y")};
  }
  const Json& ext = field(doc, "extreme_points", "report");
  if (!ext.is_array()) fail("extreme_points", "expected an array");
  for (std::size_t k = 0; k < ext.size(); ++k) {
    out.extreme_points.push_back(
        point_from_json(ext[k], "extreme_points[" + std::to_string(k) + "]"));
  }
  if (doc.contains("verification")) {
    const Json& v = doc.at("verification");
    ReportFile::Verification ver;
    ver.oracle_run = parse_bool(v, "oracle_run", "verification");
    ver.stage1_found = parse_bool(v, "stage1_found", "verification");
    if (v.contains("stage1_best")) {
      ver.stage1_best = parse_value(v.at("stage1_best"), "verification.stage1_best");
    }
    ver.stage2_found = parse_bool(v, "stage2_found", "verification");
    if (v.contains("stage2_best")) {
      ver.stage2_best = parse_value(v.at("stage2_best"), "verification.stage2_best");
    }
    const Json& tol = field(v, "tolerance", "verification");
    if (!tol.is_number()) fail("verification.tolerance", "expected a number");
    ver.tolerance = tol.get<double>();
    ver.agreement = parse_bool(v, "agreement", "verification");
    out.verification = ver;
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) fail("seed", "expected an unsigned integer");
    out.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("samples")) {
    const Json& s = doc.at("samples");
    if (!s.is_array()) fail("samples", "expected an array");
    for (std::size_t k = 0; k < s.size(); ++k) {
      out.samples.push_back(point_from_json(s[k], "samples[" + std::to_string(k) + "]"));
    }
  }
  const Json& notes = field(doc, "notes", "report");
  if (!notes.is_array()) fail("notes", "expected an array");
  for (const auto& n : notes) {
    if (!n.is_string()) fail("notes", "expected strings");
    out.notes.push_back(n.get<std::string>());
  }
  return out;
}

std::string report_to_text(const ReportFile& report) {
  std::ostringstream os;
  stage_text(os, "stage 1", "mu", report.stage1);
  if (report.stage2) stage_text(os, "stage 2", "eta", *report.stage2);
  if (report.solution_set) {
    const auto& s = *report.solution_set;
    os << "solution set:\n"
       << "  u in [" << fmt(s.u_lower) << ", " << fmt(s.u_upper) << "]\n"
       << "  v in [" << fmt(s.v_lower) << ", " << fmt(s.v_upper) << "]\n"
       << "  x generator " << fmt(s.x_generator) << '\n'
       << "  y generator " << fmt(s.y_generator) << '\n';
  }
  if (!report.extreme_points.empty()) {
    os << "extreme points:\n";
    for (const auto& p : report.extreme_points) point_text(os, p);
  }
  if (report.verification) {
    const auto& v = *report.verification;
    os << "oracle: stage 1 "
       << (v.stage1_best ? fmt(*v.stage1_best) : std::string("not found"));
    if (v.stage1_found) {
      os << ", stage 2 "
         << (v.stage2_best ? fmt(*v.stage2_best) : std::string("not found"));
    }
    os << "; agreement " << (v.agreement ? "yes" : "no") << '\n';
  }
  if (!report.samples.empty()) {
    os << "samples (seed " << (report.seed ? *report.seed : 0) << "):\n";
    for (const auto& p : report.samples) point_text(os, p);
  }
  for (const auto& n : report.notes) os << "note: " << n << '\n';
  return os.str();
}

}  // namespace maxplus::io
