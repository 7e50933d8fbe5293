#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "maxplus/scheduler.hpp"

namespace maxplus::io {

using Json = nlohmann::ordered_json;

/// Instance document: {"m", "n", "A", "B", "C", "D", "g", "h", "q", "r"},
/// matrices as arrays of rows, vectors as flat arrays, null for the zero
/// element. Throws ParseError (naming field, row and column) for malformed
/// documents and InvalidInstance for well-formed but inadmissible ones.
sched::ProblemInstance parse_instance(const std::filesystem::path& path);
sched::ProblemInstance instance_from_text(std::string_view text);
sched::ProblemInstance instance_from_json(const Json& doc);
Json instance_to_json(const sched::ProblemInstance& inst);

/// Flat, serializable view of a solve run plus optional extras added by
/// the command line (oracle verification, random samples).
struct ReportFile {
  struct Family {
    std::string name;
    TropValue value = kZero;
    friend bool operator==(const Family&, const Family&) = default;
  };
  struct Stage {
    bool feasible = false;
    TropValue condition_value = kZero;
    bool marginal = false;
    std::optional<TropValue> optimum;  // mu or eta
    std::vector<Family> families;
    std::string dominant_family;
    friend bool operator==(const Stage&, const Stage&) = default;
  };
  struct SolutionSet {
    TropMatrix u_lower, u_upper, v_lower, v_upper;
    TropMatrix x_generator, y_generator;
    friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
  };
  struct Point {
    std::optional<TropMatrix> u, v;  // set for sampled points only
    TropMatrix x, y;
    TropValue objective = kZero;
    friend bool operator==(const Point&, const Point&) = default;
  };
  struct Verification {
    bool oracle_run = false;
    bool stage1_found = false;
    std::optional<TropValue> stage1_best;
    bool stage2_found = false;
    std::optional<TropValue> stage2_best;
    double tolerance = 0.0;
    bool agreement = false;
    friend bool operator==(const Verification&, const Verification&) = default;
  };

  Stage stage1;
  std::optional<Stage> stage2;
  std::optional<SolutionSet> solution_set;
  std::vector<Point> extreme_points;
  std::optional<Verification> verification;
  std::optional<std::uint64_t> seed;
  std::vector<Point> samples;
  std::vector<std::string> notes;

  bool feasible() const { return solution_set.has_value(); }
  friend bool operator==(const ReportFile&, const ReportFile&) = default;
};

ReportFile make_report(const sched::SolveReport& report);

Json report_to_json(const ReportFile& report);
/// Inverse of report_to_json. Throws ParseError.
ReportFile report_from_json(const Json& doc);

/// Human-readable rendering.
std::string report_to_text(const ReportFile& report);

/// Conversion helpers shared with the command line.
Json value_to_json(const TropValue& v);
Json matrix_to_json(const TropMatrix& a);  // arrays of rows
Json vector_to_json(const TropMatrix& v);  // flat array for columns

}  // namespace maxplus::io
