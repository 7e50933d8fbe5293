#include "maxplus/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include "maxplus/io.hpp"
#include "maxplus/oracle.hpp"

namespace maxplus::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  double tolerance = 1e-4;
  std::size_t count = 10;
  std::uint64_t seed = 0;
};

// Every point handed out must be optimal; a failure here means the closed
// forms and the constraints disagree.
void check_point(const sched::ProblemInstance& inst, const TropValue& mu,
                 const TropValue& eta, const sched::ScheduleSolution& s) {
  const double slack = sched::two_stage_slack(inst, mu, s.x, s.y);
  if (slack < -1e-9 || !approx_equal(s.objective, eta, 1e-9) ||
      !sched::stage1_solution_check(inst, mu, s.x, s.y)) {
    throw InternalConsistency("materialized schedule is not optimal (slack " +
                              std::to_string(slack) + ")");
  }
}

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<io::ReportFile::Point> draw_samples(
    const sched::ProblemInstance& inst, const sched::StageTwoResult& set,
    std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](const TropMatrix& lo, const TropMatrix& hi) {
    TropMatrix w = lo;
    for (std::size_t i = 0; i < w.rows(); ++i) {
      const double a = lo[i].value(), b = hi[i].value();
      w[i] = std::min(b, a + unit_draw(rng) * (b - a));
    }
    return w;
  };
  std::vector<io::ReportFile::Point> out;
  for (std::size_t k = 0; k < count; ++k) {
    TropMatrix u = draw(set.u_lower, set.u_upper);
    TropMatrix v = draw(set.v_lower, set.v_upper);
    sched::ScheduleSolution s = sched::materialize(set, u, v);
    check_point(inst, set.mu, set.eta, s);
    out.push_back({std::move(u), std::move(v), std::move(s.x), std::move(s.y),
                   s.objective});
  }
  return out;
}

io::ReportFile::Verification verify(const sched::ProblemInstance& inst,
                                    const sched::SolveReport& rep,
                                    double tol) {
  io::ReportFile::Verification v;
  v.oracle_run = true;
  v.tolerance = tol;
  const oracle::GridResult g1 = oracle::grid_search_stage1(inst);
  v.stage1_found = g1.found;
  if (g1.found) v.stage1_best = g1.best;
  const bool s1 = rep.stage1.verdict.feasible;
  v.agreement = g1.found == s1 &&
                (!s1 || approx_equal(g1.best, rep.stage1.mu, tol));
  if (s1 && g1.found) {
    const oracle::GridResult g2 = oracle::grid_search_stage2(inst, rep.stage1.mu);
    v.stage2_found = g2.found;
    if (g2.found) v.stage2_best = g2.best;
    const bool s2 = rep.stage2 && rep.stage2->verdict.feasible;
    v.agreement = v.agreement && g2.found == s2 &&
                  (!s2 || approx_equal(g2.best, rep.stage2->eta, tol));
  }
  return v;
}

void emit(const io::ReportFile& report, const Options& opt, std::ostream& out) {
  const std::string text = opt.format == "json"
                               ? io::report_to_json(report).dump(2) + "\n"
                               : io::report_to_text(report);
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw std::runtime_error("cannot write " + opt.output);
  file << text;
}

int run(const std::string& command, const Options& opt, std::ostream& out,
        std::ostream& err) {
  const sched::ProblemInstance inst = io::parse_instance(opt.input);

  if (command == "stage1") {
    const sched::StageOneResult s1 = sched::solve_stage1(inst);
    io::ReportFile report;
    report.stage1 = {s1.verdict.feasible, s1.verdict.value, s1.verdict.marginal,
                     std::nullopt, {}, s1.dominant_family};
    for (const auto& f : s1.families) report.stage1.families.push_back({f.name, f.value});
    if (s1.verdict.feasible) report.stage1.optimum = s1.mu;
    emit(report, opt, out);
    if (!s1.verdict.feasible) {
      err << "stage 1 infeasible: condition value " << s1.verdict.value << '\n';
      return kInfeasible;
    }
    return kFeasible;
  }

  const sched::SolveReport rep = sched::solve(inst);
  io::ReportFile report = io::make_report(rep);
  if (rep.solution) {
    for (const auto& p : rep.extreme) {
      check_point(inst, rep.solution->mu, rep.solution->eta, p);
    }
  }
  if (command == "extreme") {
    report.solution_set.reset();
  } else if (command == "sample") {
    report.seed = opt.seed;
    report.extreme_points.clear();
    if (rep.solution) {
      if (!is_regular(inst.g) || !is_regular(inst.q)) {
        throw InvalidInstance("sampling needs regular g and q");
      }
      report.samples = draw_samples(inst, *rep.solution, opt.count, opt.seed);
    }
  }

  int code = rep.feasible() ? kFeasible : kInfeasible;
  if (command == "verify") {
    report.verification = verify(inst, rep, opt.tolerance);
    if (!report.verification->agreement) code = kOracleDisagreement;
  }
  emit(report, opt, out);
  if (!rep.stage1.verdict.feasible) {
    err << "stage 1 infeasible: condition value " << rep.stage1.verdict.value
        << '\n';
  } else if (!rep.feasible()) {
    err << "stage 2 infeasible: condition value " << rep.stage2->verdict.value
        << '\n';
  }
  if (code == kOracleDisagreement) {
    err << "oracle disagrees with the closed-form solution\n";
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Two-stage minimax project scheduling in max-plus algebra",
               "lateness"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("-o,--output", opt.output, "Write the report to this file");
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tolerance", opt.tolerance,
                 "Absolute tolerance for oracle agreement in verify")
      ->check(CLI::PositiveNumber);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"solve", "Run both stages and describe the optimal schedules"},
      {"stage1", "First-stage verdict and optimum only"},
      {"verify", "Solve and cross-check against the grid-search oracle"},
      {"extreme", "Extreme points of the optimal set"},
      {"sample", "Materialize random parameter draws from the optimal set"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", opt.input, "Instance file")->required();
    if (name == "sample") {
      sub->add_option("--count", opt.count, "Number of draws");
      sub->add_option("--seed", opt.seed, "Generator seed");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kFeasible;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kOther;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt, out, err);
  } catch (const ParseError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InvalidInstance& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InternalConsistency& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kInternalConsistency;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kOther;
  }
}

}  // namespace maxplus::cli
