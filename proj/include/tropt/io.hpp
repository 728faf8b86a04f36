#pragma once

#include <json.hpp>

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropt/oracle.hpp"
#include "tropt/scheduler.hpp"

// JSON wire formats.
//
//   scalar   a number, the string "zero" for the semifield zero, or a string
//            "p/q" / "d.d" parsed as an exact rational
//   matrix   {"rows": n, "cols": m, "data": [[...], ...]}
//   vector   a plain array (a 1-column matrix object is also accepted)
//   problem  {"semifield": ..., "problem": "rayleigh" | "extended" |
//             "constrained" | "doubly-constrained", "A": matrix,
//             "p"?, "q"?, "c"?, "B"?, "g"?, "C"?, "h"?}
//   outcome  {"optimum", "generator", "lower", "upper" (null when absent),
//             "canonical"}
//   project  {"activities": [names...], "flavor": "window" | "constrained",
//             "start_finish": [{"from", "to", "lag"}...], "start_start"?,
//             "late_start"?, "early_finish"?, "early_start"?}
//
// Exact rationals render canonically: integers as JSON numbers, everything
// else as a gcd-reduced "p/q" string.

namespace tropt::io {

using json = nlohmann::json;

inline SemifieldId parse_semifield(const std::string& name) {
  if (name == "max-plus") return SemifieldId::max_plus;
  if (name == "min-plus") return SemifieldId::min_plus;
  if (name == "max-times") return SemifieldId::max_times;
  if (name == "min-times") return SemifieldId::min_times;
  throw ParseError("unknown semifield: " + name);
}

inline const char* semifield_name(SemifieldId id) {
  switch (id) {
    case SemifieldId::max_plus: return MaxPlus::name;
    case SemifieldId::min_plus: return MinPlus::name;
    case SemifieldId::max_times: return MaxTimes::name;
    case SemifieldId::min_times: return MinTimes::name;
  }
  throw ParseError("unknown semifield id");
}

// Runs f with the trait type selected at runtime.
template <class F>
decltype(auto) with_semifield(SemifieldId id, F&& f) {
  switch (id) {
    case SemifieldId::max_plus: return f(MaxPlus{});
    case SemifieldId::min_plus: return f(MinPlus{});
    case SemifieldId::max_times: return f(MaxTimes{});
    case SemifieldId::min_times: return f(MinTimes{});
  }
  throw ParseError("unknown semifield id");
}

inline Rational rational_from_string(const std::string& text) {
  using boost::multiprecision::cpp_int;
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const cpp_int num(text.substr(0, slash));
      const cpp_int den(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in rational: " + text);
      return Rational(num, den);
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
      const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const cpp_int num(digits);
      const cpp_int den = pow(cpp_int(10), static_cast<unsigned>(text.size() - dot - 1));
      return Rational(num, den);
    }
    return Rational(cpp_int(text));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a rational: " + text);
  }
}

template <class SF>
json scalar_to_json(const Scalar<SF>& s) {
  if (s.is_zero()) return "zero";
  if constexpr (SF::exact) {
    const Rational& v = s.value();
    if (denominator(v) == 1) {
      const auto num = numerator(v);
      if (num >= std::numeric_limits<long long>::min() &&
          num <= std::numeric_limits<long long>::max()) {
        return num.template convert_to<long long>();
      }
    }
    return v.str();
  } else {
    return s.value();
  }
}

template <class SF>
Scalar<SF> scalar_from_json(const json& j) {
  try {
    if (j.is_string()) {
      const std::string text = j.get<std::string>();
      if (text == "zero") return Scalar<SF>::zero();
      return Scalar<SF>(SF::from_rational(rational_from_string(text)));
    }
    if (j.is_number_integer() || j.is_number_unsigned()) {
      return Scalar<SF>(SF::from_rational(Rational(j.get<long long>())));
    }
    if (j.is_number_float()) {
      return Scalar<SF>(SF::from_rational(Rational(j.get<double>())));
    }
  } catch (const ValueError& e) {
    throw ParseError(std::string("invalid scalar ") + j.dump() + ": " + e.what());
  }
  throw ParseError("expected a number or \"zero\", got " + j.dump());
}

template <class SF>
json matrix_to_json(const Matrix<SF>& m) {
  json data = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    data.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

template <class SF>
Matrix<SF> matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw ParseError("matrix must be an object with rows, cols and data");
  }
  const auto rows = j.at("rows").get<long long>();
  const auto cols = j.at("cols").get<long long>();
  if (rows <= 0 || cols <= 0) throw ParseError("matrix dimensions must be positive");
  const json& data = j.at("data");
  if (!data.is_array() || data.size() != static_cast<std::size_t>(rows)) {
    throw ParseError("matrix data must hold exactly 'rows' rows");
  }
  Matrix<SF> m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (Index i = 0; i < m.rows(); ++i) {
    const json& row = data.at(i);
    if (!row.is_array() || row.size() != m.cols()) {
      throw ParseError("matrix row " + std::to_string(i + 1) +
                       " must hold exactly 'cols' entries");
    }
    for (Index k = 0; k < m.cols(); ++k) m(i, k) = scalar_from_json<SF>(row.at(k));
  }
  return m;
}

template <class SF>
json vector_to_json(const Matrix<SF>& v) {
  json out = json::array();
  for (Index i = 0; i < v.length(); ++i) out.push_back(scalar_to_json(v.at(i)));
  return out;
}

template <class SF>
Matrix<SF> column_from_json(const json& j) {
  if (j.is_array()) {
    if (j.empty()) throw ParseError("vector must not be empty");
    std::vector<Scalar<SF>> entries;
    entries.reserve(j.size());
    for (const json& e : j) entries.push_back(scalar_from_json<SF>(e));
    return Matrix<SF>::column(std::move(entries));
  }
  Matrix<SF> m = matrix_from_json<SF>(j);
  if (!m.is_column()) throw ParseError("expected a column vector");
  return m;
}

namespace detail {

template <class SF>
Matrix<SF> required_column(const json& doc, const char* key, Index n) {
  if (!doc.contains(key)) throw ParseError(std::string("missing vector: ") + key);
  Matrix<SF> v = column_from_json<SF>(doc.at(key));
  if (v.rows() != n) {
    throw ParseError(std::string(key) + " must have length " + std::to_string(n));
  }
  return v;
}

template <class SF>
Matrix<SF> optional_column(const json& doc, const char* key, Index n) {
  if (!doc.contains(key) || doc.at(key).is_null()) return Matrix<SF>(n, 1);
  return required_column<SF>(doc, key, n);
}

}  // namespace detail

template <class SF>
Problem<SF> problem_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("problem")) {
    throw ParseError("problem document needs a 'problem' field");
  }
  const std::string kind_name = doc.at("problem").get<std::string>();
  if (!doc.contains("A")) throw ParseError("problem document needs matrix A");
  Matrix<SF> a = matrix_from_json<SF>(doc.at("A"));
  if (!a.is_square()) throw ParseError("A must be square");
  const Index n = a.rows();

  if (kind_name == "rayleigh") {
    return RayleighInstance<SF>{std::move(a)};
  }
  if (kind_name == "extended") {
    UnconstrainedInstance<SF> inst{std::move(a),
                                   detail::optional_column<SF>(doc, "p", n),
                                   detail::required_column<SF>(doc, "q", n)};
    if (doc.contains("c") && !doc.at("c").is_null()) {
      inst.c = scalar_from_json<SF>(doc.at("c"));
    }
    return inst;
  }
  if (kind_name == "constrained") {
    Matrix<SF> b = doc.contains("B") && !doc.at("B").is_null()
                       ? matrix_from_json<SF>(doc.at("B"))
                       : Matrix<SF>(n, n);
    return ConstrainedInstance<SF>{std::move(a), std::move(b),
                                   detail::optional_column<SF>(doc, "p", n),
                                   detail::optional_column<SF>(doc, "g", n)};
  }
  if (kind_name == "doubly-constrained") {
    Matrix<SF> b = doc.contains("B") && !doc.at("B").is_null()
                       ? matrix_from_json<SF>(doc.at("B"))
                       : Matrix<SF>(n, n);
    if (!doc.contains("C")) throw ParseError("doubly-constrained problem needs matrix C");
    Matrix<SF> c = matrix_from_json<SF>(doc.at("C"));
    Matrix<SF> h = detail::required_column<SF>(doc, "h", c.rows());
    return DoublyConstrainedInstance<SF>{std::move(a), std::move(b), std::move(c),
                                         detail::optional_column<SF>(doc, "g", n),
                                         std::move(h)};
  }
  throw ParseError("unknown problem kind: " + kind_name);
}

inline const char* problem_kind_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::rayleigh: return "rayleigh";
    case ProblemKind::extended: return "extended";
    case ProblemKind::constrained: return "constrained";
    case ProblemKind::doubly_constrained: return "doubly-constrained";
  }
  return "unknown";
}

template <class SF>
json outcome_to_json(const OptimizationOutcome<SF>& outcome) {
  const GeneratedSet<SF>& set = outcome.solutions;
  json out{{"optimum", scalar_to_json(outcome.optimum)},
           {"generator", matrix_to_json(set.generator())},
           {"lower", vector_to_json(set.lower())},
           {"canonical", vector_to_json(set.canonical())}};
  out["upper"] = set.upper() ? vector_to_json(*set.upper()) : json(nullptr);
  return out;
}

template <class SF>
OptimizationOutcome<SF> outcome_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("optimum") || !doc.contains("generator") ||
      !doc.contains("lower")) {
    throw ParseError("outcome document needs optimum, generator and lower");
  }
  Matrix<SF> generator = matrix_from_json<SF>(doc.at("generator"));
  Matrix<SF> lower = column_from_json<SF>(doc.at("lower"));
  std::optional<Matrix<SF>> upper;
  if (doc.contains("upper") && !doc.at("upper").is_null()) {
    upper = column_from_json<SF>(doc.at("upper"));
  }
  return OptimizationOutcome<SF>{
      scalar_from_json<SF>(doc.at("optimum")),
      GeneratedSet<SF>(std::move(generator), std::move(lower), std::move(upper))};
}

// ---------------------------------------------------------------------------
// Projects and schedules (max-plus).

namespace detail {

inline Index activity_index(const json& ref, const std::vector<std::string>& names) {
  if (ref.is_string()) {
    const std::string name = ref.get<std::string>();
    for (Index i = 0; i < names.size(); ++i) {
      if (names[i] == name) return i;
    }
    throw ParseError("unknown activity: " + name);
  }
  if (ref.is_number_integer() || ref.is_number_unsigned()) {
    const long long k = ref.get<long long>();
    if (k < 1 || k > static_cast<long long>(names.size())) {
      throw ParseError("activity index out of range: " + std::to_string(k));
    }
    return static_cast<Index>(k - 1);
  }
  throw ParseError("activity reference must be a name or a 1-based index");
}

inline Matrix<MaxPlus> lag_matrix(const json& doc, const char* key,
                                  const std::vector<std::string>& names) {
  Matrix<MaxPlus> m(names.size(), names.size());
  if (!doc.contains(key) || doc.at(key).is_null()) return m;
  const json& list = doc.at(key);
  if (!list.is_array()) throw ParseError(std::string(key) + " must be an array of lags");
  for (const json& e : list) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("lag")) {
      throw ParseError(std::string(key) + " entries need from, to and lag");
    }
    const Index j = activity_index(e.at("from"), names);
    const Index i = activity_index(e.at("to"), names);
    m(i, j) = scalar_from_json<MaxPlus>(e.at("lag"));
  }
  return m;
}

inline Matrix<MaxPlus> time_column(const json& doc, const char* key,
                                   const std::vector<std::string>& names) {
  Matrix<MaxPlus> v(names.size(), 1);
  if (!doc.contains(key) || doc.at(key).is_null()) return v;
  const json& map = doc.at(key);
  if (!map.is_object()) {
    throw ParseError(std::string(key) + " must map activity names to times");
  }
  for (const auto& [name, value] : map.items()) {
    v.at(activity_index(json(name), names)) = scalar_from_json<MaxPlus>(value);
  }
  return v;
}

}  // namespace detail

inline Project project_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("project document must be an object");
  if (doc.contains("semifield") &&
      parse_semifield(doc.at("semifield").get<std::string>()) != SemifieldId::max_plus) {
    throw ParseError("projects are scheduled over max-plus");
  }
  if (!doc.contains("activities") || !doc.at("activities").is_array() ||
      doc.at("activities").empty()) {
    throw ParseError("project needs a nonempty 'activities' array");
  }
  std::vector<std::string> names;
  for (const json& e : doc.at("activities")) {
    if (!e.is_string()) throw ParseError("activity names must be strings");
    names.push_back(e.get<std::string>());
  }
  for (Index i = 0; i < names.size(); ++i) {
    for (Index j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) throw ParseError("duplicate activity: " + names[i]);
    }
  }
  if (!doc.contains("flavor")) throw ParseError("project needs a 'flavor' field");
  const std::string flavor = doc.at("flavor").get<std::string>();

  Matrix<MaxPlus> start_finish = detail::lag_matrix(doc, "start_finish", names);
  Matrix<MaxPlus> early_finish = detail::time_column(doc, "early_finish", names);
  if (flavor == "window") {
    return Project::window(std::move(names), std::move(start_finish),
                           detail::time_column(doc, "late_start", names),
                           std::move(early_finish));
  }
  if (flavor == "constrained") {
    return Project::constrained(std::move(names), std::move(start_finish),
                                detail::lag_matrix(doc, "start_start", names),
                                detail::time_column(doc, "early_start", names),
                                std::move(early_finish));
  }
  throw ParseError("unknown project flavor: " + flavor);
}

inline json family_to_json(const Project& project, const SolutionFamily& family) {
  json intervals = json::array();
  for (Index i = 0; i < family.intervals.size(); ++i) {
    const ActivityInterval& iv = family.intervals[i];
    json entry{{"activity", project.activities[i]},
               {"lower", scalar_to_json(iv.lower)}};
    entry["upper"] = iv.upper ? scalar_to_json(*iv.upper) : json(nullptr);
    intervals.push_back(std::move(entry));
  }
  return intervals;
}

inline json schedule_to_json(const Project& project, const ProjectSolution& sol) {
  const Schedule& schedule = sol.schedule;
  json out{{"semifield", MaxPlus::name},
           {"flavor", project.flavor == ProjectFlavor::window ? "window" : "constrained"},
           {"activities", project.activities},
           {"max_flow_time", scalar_to_json(schedule.max_flow_time)},
           {"initiation", vector_to_json(schedule.initiation)},
           {"completion", vector_to_json(schedule.completion)},
           {"intervals", family_to_json(project, describe_solution_family(sol.outcome))},
           {"outcome", outcome_to_json(sol.outcome)}};
  out["adjusted_start"] =
      schedule.adjusted_start ? vector_to_json(*schedule.adjusted_start) : json(nullptr);
  out["adjusted_finish"] =
      schedule.adjusted_finish ? vector_to_json(*schedule.adjusted_finish) : json(nullptr);
  return out;
}

template <class SF>
json report_to_json(const VerificationReport<SF>& report) {
  json issues = json::array();
  for (const VerificationIssue& issue : report.issues) {
    issues.push_back(json{{"check", issue.check}, {"detail", issue.detail}});
  }
  return json{{"pass", report.pass},
              {"grid_minimum", scalar_to_json(report.grid_minimum)},
              {"closed_form", scalar_to_json(report.closed_form)},
              {"feasible_points", report.feasible_points},
              {"argmins", report.argmin_count},
              {"issues", std::move(issues)}};
}

// Human-readable scalar: the zero element prints as the infinity it stands
// for, directed by the semifield.
template <class SF>
std::string human(const Scalar<SF>& s) {
  if (s.is_zero()) {
    return (SF::id == SemifieldId::max_plus || SF::id == SemifieldId::max_times)
               ? "-inf"
               : "+inf";
  }
  return to_string(s);
}

}  // namespace tropt::io
