// Command-line front end: spectral radius reports, Kleene stars, the four
// optimization problems, project scheduling and brute-force verification,
// all over JSON documents.
//
// Exit codes: 0 ok, 2 parse error, 3 dimension error, 4 solver precondition
// or infeasibility, 5 verification failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <tropt/tropt.hpp>

namespace {

using tropt::io::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitSolver = 4;
constexpr int kExitVerify = 5;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw tropt::ParseError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_document(const std::string& path) {
  try {
    return json::parse(read_input(path));
  } catch (const json::exception& e) {
    throw tropt::ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw tropt::ParseError("cannot open output file: " + path);
  out << text;
}

tropt::SemifieldId document_semifield(const json& doc, const std::string& override_name) {
  if (!override_name.empty()) return tropt::io::parse_semifield(override_name);
  if (doc.is_object() && doc.contains("semifield")) {
    return tropt::io::parse_semifield(doc.at("semifield").get<std::string>());
  }
  return tropt::SemifieldId::max_plus;
}

struct CommonOptions {
  std::string input = "-";
  std::string output;
  std::string semifield;
};

void attach_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("input", opts.input, "input file (default: stdin)");
  cmd->add_option("-o,--output", opts.output, "output file (default: stdout)");
  cmd->add_option("--semifield", opts.semifield,
                  "override the document's semifield "
                  "(max-plus, min-plus, max-times, min-times)");
}

int run_spectral(const CommonOptions& opts) {
  const json doc = parse_document(opts.input);
  return tropt::io::with_semifield(document_semifield(doc, opts.semifield), [&](auto sf) {
    using SF = decltype(sf);
    const tropt::Matrix<SF> a = tropt::io::matrix_from_json<SF>(doc);
    std::ostringstream out;
    tropt::Scalar<SF> lambda;
    tropt::Matrix<SF> p = a;
    for (tropt::Index m = 1; m <= a.rows(); ++m) {
      if (m > 1) p = multiply(p, a);
      const tropt::Scalar<SF> tr = trace(p);
      const tropt::Scalar<SF> term = tropt::trace_root(tr, m);
      lambda = oplus(lambda, term);
      out << "m=" << m << ": tr(A^m) = " << tropt::io::human(tr)
          << ", tr^(1/m)(A^m) = " << tropt::io::human(term) << "\n";
    }
    out << "lambda = " << tropt::io::human(lambda) << "\n";
    write_output(opts.output, out.str());
    return kExitOk;
  });
}

int run_star(const CommonOptions& opts) {
  const json doc = parse_document(opts.input);
  return tropt::io::with_semifield(document_semifield(doc, opts.semifield), [&](auto sf) {
    using SF = decltype(sf);
    const tropt::Matrix<SF> a = tropt::io::matrix_from_json<SF>(doc);
    write_output(opts.output, tropt::io::matrix_to_json(kleene_star(a)).dump(2) + "\n");
    return kExitOk;
  });
}

int run_solve(const CommonOptions& opts) {
  const json doc = parse_document(opts.input);
  return tropt::io::with_semifield(document_semifield(doc, opts.semifield), [&](auto sf) {
    using SF = decltype(sf);
    const tropt::Problem<SF> problem = tropt::io::problem_from_json<SF>(doc);
    try {
      const tropt::OptimizationOutcome<SF> outcome = tropt::solve(problem);
      write_output(opts.output, tropt::io::outcome_to_json(outcome).dump(2) + "\n");
      return kExitOk;
    } catch (const tropt::SolverError& e) {
      const json diagnostics{{"error", e.code()}, {"detail", e.what()}};
      write_output(opts.output, diagnostics.dump(2) + "\n");
      return kExitSolver;
    }
  });
}

int run_schedule(const CommonOptions& opts) {
  const json doc = parse_document(opts.input);
  if (!opts.semifield.empty() &&
      tropt::io::parse_semifield(opts.semifield) != tropt::SemifieldId::max_plus) {
    throw tropt::ParseError("projects are scheduled over max-plus");
  }
  const tropt::Project project = tropt::io::project_from_json(doc);
  try {
    const tropt::ProjectSolution sol = tropt::solve_project(project);

    // Human-readable table on stderr; the JSON document is the output.
    const tropt::SolutionFamily family = describe_solution_family(sol.outcome);
    std::ostringstream table;
    table << std::left << std::setw(14) << "activity" << std::right << std::setw(12)
          << "initiation" << std::setw(12) << "completion" << std::setw(22)
          << "initiation interval" << "\n";
    for (tropt::Index i = 0; i < project.size(); ++i) {
      std::string interval = "[" + tropt::io::human(family.intervals[i].lower) + ", ";
      interval += family.intervals[i].upper
                      ? tropt::io::human(*family.intervals[i].upper) + "]"
                      : std::string("+inf)");
      table << std::left << std::setw(14) << project.activities[i] << std::right
            << std::setw(12) << tropt::io::human(sol.schedule.initiation.at(i))
            << std::setw(12) << tropt::io::human(sol.schedule.completion.at(i))
            << std::setw(22) << interval << "\n";
    }
    table << "max flow time: " << tropt::io::human(sol.schedule.max_flow_time) << "\n";
    std::cerr << table.str();

    write_output(opts.output, tropt::io::schedule_to_json(project, sol).dump(2) + "\n");
    return kExitOk;
  } catch (const tropt::SolverError& e) {
    const json diagnostics{{"error", e.code()}, {"detail", e.what()}};
    write_output(opts.output, diagnostics.dump(2) + "\n");
    return kExitSolver;
  }
}

tropt::GridSpec parse_grid(const std::string& text, tropt::Index n) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw tropt::ParseError("grid must have the form lo:hi:step");
  }
  return tropt::GridSpec::uniform(
      n, tropt::io::rational_from_string(text.substr(0, first)),
      tropt::io::rational_from_string(text.substr(first + 1, second - first - 1)),
      tropt::io::rational_from_string(text.substr(second + 1)));
}

int run_verify(const CommonOptions& opts, const std::string& grid_text,
               const std::string& outcome_path) {
  const json doc = parse_document(opts.input);
  return tropt::io::with_semifield(document_semifield(doc, opts.semifield), [&](auto sf) {
    using SF = decltype(sf);
    const tropt::Problem<SF> problem = tropt::io::problem_from_json<SF>(doc);
    const tropt::GridSpec grid = parse_grid(grid_text, dimension(problem));
    const tropt::OptimizationOutcome<SF> outcome =
        outcome_path.empty()
            ? tropt::solve(problem)
            : tropt::io::outcome_from_json<SF>(parse_document(outcome_path));
    const tropt::VerificationReport<SF> report =
        tropt::verify_solution_set(problem, outcome, grid);

    std::ostringstream out;
    out << "closed-form optimum = " << tropt::io::human(report.closed_form) << "\n";
    out << "grid minimum        = " << tropt::io::human(report.grid_minimum) << " over "
        << report.feasible_points << " feasible points, " << report.argmin_count
        << " argmins\n";
    for (const tropt::VerificationIssue& issue : report.issues) {
      out << "issue [" << issue.check << "]: " << issue.detail << "\n";
    }
    out << (report.pass ? "VERIFY: PASS" : "VERIFY: FAIL") << "\n";
    write_output(opts.output, out.str());
    return report.pass ? kExitOk : kExitVerify;
  });
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* tol = std::getenv("TROPT_TOLERANCE")) {
    try {
      const double value = std::stod(tol);
      if (value > 0) {
        tropt::MaxTimes::tolerance() = value;
        tropt::MinTimes::tolerance() = value;
      }
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring invalid TROPT_TOLERANCE\n";
    }
  }

  CLI::App app{"tropical (idempotent-semifield) linear algebra and optimization"};
  app.require_subcommand(1);

  CommonOptions spectral_opts, star_opts, solve_opts, schedule_opts, verify_opts;
  std::string grid_text = "-5:5:1";
  std::string outcome_path;

  CLI::App* spectral = app.add_subcommand(
      "spectral", "spectral radius of a matrix with the per-power trace terms");
  attach_common(spectral, spectral_opts);

  CLI::App* star = app.add_subcommand("star", "Kleene star of a matrix");
  attach_common(star, star_opts);

  CLI::App* solve = app.add_subcommand(
      "solve", "solve an optimization problem and print the outcome document");
  attach_common(solve, solve_opts);

  CLI::App* schedule = app.add_subcommand(
      "schedule", "solve a project and print the schedule document");
  attach_common(schedule, schedule_opts);

  CLI::App* verify = app.add_subcommand(
      "verify", "check a solved problem against the brute-force grid oracle");
  attach_common(verify, verify_opts);
  verify->add_option("--grid", grid_text, "uniform grid as lo:hi:step")->required();
  verify->add_option("--outcome", outcome_path,
                     "verify this outcome document instead of solving");

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectral->parsed()) return run_spectral(spectral_opts);
    if (star->parsed()) return run_star(star_opts);
    if (solve->parsed()) return run_solve(solve_opts);
    if (schedule->parsed()) return run_schedule(schedule_opts);
    if (verify->parsed()) return run_verify(verify_opts, grid_text, outcome_path);
  } catch (const tropt::ParseError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kExitParse;
  } catch (const tropt::DimensionError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kExitDimension;
  } catch (const tropt::SolverError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kExitSolver;
  } catch (const tropt::ValueError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kExitSolver;
  } catch (const tropt::Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
