// Copyright 2026 The lorentz-torus Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cli/record.hpp"
#include "lorentz/lorentz.hpp"

namespace lorentz::cli {
namespace {

// Bad values on an otherwise well-formed command line (exit code 1).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  int digits = 30;
};

std::string_view code(Criterion criterion) {
  switch (criterion) {
    case Criterion::kDenominatorBelowTwo:
      return "denominator_below_two";
    case Criterion::kNDoesNotDivide:
      return "n_does_not_divide";
    case Criterion::kGammaNotPerfectSquare:
      return "gamma_not_perfect_square";
    case Criterion::kNonIntegralEntries:
      return "non_integral_entries";
    case Criterion::kRationalLightSpeed:
      return "rational_light_speed";
  }
  return "unknown";
}

Rational rational_arg(std::string_view name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(std::string(name) + ": " + e.what() +
                       " (expected N/P or an integer)");
  }
}

Integer integer_arg(std::string_view name, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(std::string(name) + ": " + e.what());
  }
}

std::pair<std::string, std::string> split_pair(std::string_view name,
                                               const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw InvalidInput(std::string(name) + ": expected two values 'x,t', got '" +
                       text + "'");
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

double double_arg(std::string_view name, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw InvalidInput(std::string(name) + ": not a number '" + text + "'");
  }
  return value;
}

Json record(std::string_view command) {
  Json rec;
  rec["command"] = std::string(command);
  rec["inputs"] = Json::object();
  return rec;
}

void reject(Json& rec, const Inadmissible& e) {
  rec["status"] = "inadmissible";
  rec["reason"] = e.what();
  rec["criterion"] = std::string(code(e.criterion()));
}

Triple triple_args(const std::vector<std::string>& mnp, Json& rec) {
  const Integer m = integer_arg("m", mnp.at(0));
  const Integer n = integer_arg("n", mnp.at(1));
  const Integer p = integer_arg("p", mnp.at(2));
  rec["inputs"]["triple"] = Json{{"m", m.get_str()}, {"n", n.get_str()},
                                 {"p", p.get_str()}};
  try {
    return triple_check(m, n, p);
  } catch (const TripleError& e) {
    throw InvalidInput(std::string("not a solution of m²−np=1: ") + e.what());
  }
}

Json params_json(const Triple& t, int digits) {
  const ParamPair pair = pair_from_triple(t);
  return Json{{"V", exact_value(pair.V, digits)},
              {"c_squared", exact_value(pair.c_squared, digits)},
              {"c", exact_value(light_speed(pair.c_squared), digits)}};
}

// 1-based position of `t` in the spectrum of its own light speed.
std::size_t spectrum_index(const Triple& t, const Rational& c_squared) {
  for (std::size_t count = 4;; count *= 2) {
    const Spectrum s = spectrum(c_squared, count);
    for (const auto& term : s.terms) {
      if (term.triple == t) return term.k;
      if (term.triple.m() > t.m()) {
        throw std::logic_error("admissible V missing from its own spectrum");
      }
    }
  }
}

// --- subcommands ------------------------------------------------------------

void cmd_check_v(Json& rec, const Globals& g, const std::string& v_text) {
  rec = record("check-v");
  const Rational V = rational_arg("V", v_text);
  rec["inputs"]["V"] = exact_value(V, g.digits);
  if (V.is_zero()) throw InvalidInput("V: relative speed must be nonzero");
  // (V, c) is admissible iff (-V, c) is.
  const Rational speed = V.abs();
  try {
    const Triple t = triple_from_V(speed);
    const ParamPair pair = pair_from_triple(t);
    rec["status"] = "admissible";
    Json results = params_json(t, g.digits);
    results["reflected"] = V.sign() < 0;
    results["triple"] = triple_json(t);
    results["spectrum_index"] = spectrum_index(t, pair.c_squared);
    rec["results"] = std::move(results);
  } catch (const Inadmissible& e) {
    reject(rec, e);
  }
}

void cmd_check_c(Json& rec, const Globals& g, const std::string& c2_text) {
  rec = record("check-c");
  const Rational c2 = rational_arg("c²", c2_text);
  rec["inputs"]["c_squared"] = exact_value(c2, g.digits);
  if (c2.sign() <= 0) throw InvalidInput("c²: must be positive");
  if (!is_admissible_c(c2)) {
    reject(rec, Inadmissible(Criterion::kRationalLightSpeed));
    rec["c"] = Rational(isqrt(c2.num()), isqrt(c2.den())).to_string();
    return;
  }
  const Triple first = minimal_triple(c2);
  rec["status"] = "admissible";
  rec["results"] = Json{
      {"c", exact_value(light_speed(c2), g.digits)},
      {"n_star", c2.num().get_str()},
      {"p_star", c2.den().get_str()},
      {"pell_d", Integer(c2.num() * c2.den()).get_str()},
      {"minimal_triple", triple_json(first)},
      {"V1", exact_value(Rational(first.n(), first.m()), g.digits)},
  };
}

void cmd_spectrum(Json& rec, const Globals& g, const std::string& c2_text,
                  std::int64_t count, bool signed_output) {
  rec = record("spectrum");
  const Rational c2 = rational_arg("c²", c2_text);
  rec["inputs"]["c_squared"] = exact_value(c2, g.digits);
  rec["inputs"]["count"] = count;
  rec["inputs"]["signed"] = signed_output;
  if (c2.sign() <= 0) throw InvalidInput("c²: must be positive");
  if (count < 1) throw InvalidInput("--count: must be at least 1");
  if (!is_admissible_c(c2)) {
    reject(rec, Inadmissible(Criterion::kRationalLightSpeed));
    return;
  }
  const Spectrum s = spectrum(c2, static_cast<std::size_t>(count));
  rec["status"] = "admissible";
  Json results;
  results["c"] = exact_value(light_speed(c2), g.digits);
  results["n_star"] = s.n_star.get_str();
  results["p_star"] = s.p_star.get_str();
  Json terms = Json::array();
  for (const auto& term : s.terms) {
    const Integer m2 = term.triple.m() * term.triple.m();
    terms.push_back(Json{
        {"k", term.k},
        {"triple", triple_json(term.triple)},
        {"V", exact_value(term.V, g.digits)},
        {"gap_squared", exact_value(term.gap_squared, g.digits)},
        {"gap_law", term.gap_squared * Rational(m2) == c2},
    });
  }
  results["terms"] = std::move(terms);
  if (signed_output) {
    Json values = Json::array();
    for (const auto& v : signed_values(s)) values.push_back(v.to_string());
    results["signed_V"] = std::move(values);
  }
  rec["results"] = std::move(results);
}

void cmd_pell(Json& rec, const Globals&, const std::string& d_text, std::int64_t count) {
  rec = record("pell");
  const Integer d = integer_arg("d", d_text);
  rec["inputs"]["d"] = d.get_str();
  rec["inputs"]["count"] = count;
  if (d < 2 || is_perfect_square(d)) {
    throw InvalidInput("d: must be a non-square integer >= 2");
  }
  if (count < 1) throw InvalidInput("--count: must be at least 1");
  const CFExpansion cf = cf_sqrt(d);
  const PellSolution base = pell_min_solution(d);
  Json period = Json::array();
  for (const auto& a : cf.period) period.push_back(a.get_str());
  Json solutions = Json::array();
  std::size_t k = 1;
  for (const auto& s : pell_solutions(d, static_cast<std::size_t>(count))) {
    solutions.push_back(
        Json{{"k", k++}, {"x", s.x().get_str()}, {"y", s.y().get_str()}});
  }
  rec["status"] = "ok";
  rec["results"] = Json{
      {"cf", Json{{"a0", cf.a0.get_str()},
                  {"period", std::move(period)},
                  {"period_length", cf.period.size()}}},
      {"fundamental_index", fundamental_index(cf)},
      {"minimal", Json{{"x", base.x().get_str()}, {"y", base.y().get_str()}}},
      {"solutions", std::move(solutions)},
  };
}

Json direction_json(const EigenDirection& dir) {
  return Json{{"vector", Json::array({"sqrt(" + dir.radicand.get_str() + ")",
                                      dir.slope.get_str()})},
              {"slope", dir.slope.get_str()},
              {"radicand", dir.radicand.get_str()}};
}

void cmd_anosov(Json& rec, const Globals& g, const std::vector<std::string>& mnp) {
  rec = record("anosov");
  const Triple t = triple_args(mnp, rec);
  const TorusAutomorphism M = matrix_from_triple(t);
  const EigenData e = eigen(t);
  rec["status"] = "ok";
  Json results = params_json(t, g.digits);
  results["matrix"] = Json::array(
      {Json::array({M.a11().get_str(), M.a12().get_str()}),
       Json::array({M.a21().get_str(), M.a22().get_str()})});
  results["determinant"] = M.determinant().get_str();
  results["trace"] = M.trace().get_str();
  results["lambda1"] = exact_value(e.lambda1, g.digits);
  results["lambda2"] = exact_value(e.lambda2, g.digits);
  results["lambda1_float"] = e.lambda1.to_double();
  results["lambda2_float"] = e.lambda2.to_double();
  results["stable_direction"] = direction_json(e.stable_dir);
  results["unstable_direction"] = direction_json(e.unstable_dir);
  results["anosov"] = is_anosov(M);
  rec["results"] = std::move(results);
}

std::string point_text(const RationalPoint& pt) {
  return pt.x().to_string() + "," + pt.t().to_string();
}

void cmd_orbit(Json& rec, const Globals&, const std::vector<std::string>& mnp,
               const std::string& point, std::int64_t max_iter) {
  rec = record("orbit");
  const Triple t = triple_args(mnp, rec);
  const auto [x_text, t_text] = split_pair("--point", point);
  const RationalPoint start = RationalPoint::reduced(
      rational_arg("--point x", x_text), rational_arg("--point t", t_text));
  rec["inputs"]["point"] = point_text(start);
  const Integer q = start.common_denominator();
  if (max_iter == 0) {
    if (!q.fits_slong_p() || q > 3'000'000'000L) {
      throw InvalidInput("--point: denominator too large for iteration");
    }
    max_iter = q.get_si() * q.get_si();
  }
  rec["inputs"]["max_iter"] = max_iter;
  if (max_iter < 1) throw InvalidInput("--max-iter: must be at least 1");

  const TorusAutomorphism M = matrix_from_triple(t);
  std::vector<RationalPoint> cycle;
  try {
    cycle = orbit_cycle(M, start, static_cast<std::uint64_t>(max_iter));
  } catch (const IterationLimit& e) {
    throw InvalidInput(std::string("--max-iter: ") + e.what());
  }
  Json points = Json::array();
  for (const auto& pt : cycle) points.push_back(point_text(pt));
  rec["status"] = "ok";
  rec["results"] = Json{{"period", cycle.size()},
                        {"denominator", q.get_str()},
                        {"cycle", std::move(points)}};
}

void cmd_sample(Json& rec, const Globals&, const std::vector<std::string>& mnp,
                const std::string& seed, std::int64_t steps) {
  rec = record("sample");
  const Triple t = triple_args(mnp, rec);
  const auto [x_text, t_text] = split_pair("--seed", seed);
  const std::pair<double, double> start{double_arg("--seed x", x_text),
                                        double_arg("--seed t", t_text)};
  rec["inputs"]["seed"] = Json::array({start.first, start.second});
  rec["inputs"]["steps"] = steps;
  if (steps < 1) throw InvalidInput("--steps: must be at least 1");
  const OrbitStats stats = orbit_sample(matrix_from_triple(t), start,
                                        static_cast<std::uint64_t>(steps));
  Json grid = Json::array();
  for (const auto& row : stats.counts) grid.push_back(Json(row));
  rec["status"] = "ok";
  rec["results"] = Json{{"grid_size", kGridSize},
                        {"visited_cells", stats.visited_cells},
                        {"occupancy", stats.occupancy},
                        {"grid", std::move(grid)}};
}

void cmd_families(Json& rec, const Globals& g, std::int64_t max_m) {
  rec = record("families");
  rec["inputs"]["max_m"] = max_m;
  if (max_m < 2) throw InvalidInput("--max-m: must be at least 2");
  Json n_large = Json::array();
  Json p_large = Json::array();
  for (long m = 2; m <= max_m; ++m) {
    for (Family family : {Family::kNLarge, Family::kPLarge}) {
      const Triple t = family_triple(m, family);
      Json entry = params_json(t, g.digits);
      entry["triple"] = triple_json(t);
      (family == Family::kNLarge ? n_large : p_large).push_back(std::move(entry));
    }
  }
  rec["status"] = "ok";
  rec["results"] = Json{{"n_large", std::move(n_large)},
                        {"p_large", std::move(p_large)}};
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Admissible Lorentz maps of the 2-torus: exact parameters, "
               "spectra, Pell solutions and dynamics",
               "lorentz"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals globals;
  app.add_flag("--json", globals.json, "Emit a single JSON object");
  app.add_option("--digits", globals.digits,
                 "Digits after the decimal point in approximate values")
      ->check(CLI::Range(0, 10000));

  std::string value_text;
  std::int64_t count = 0;
  bool signed_output = false;
  std::vector<std::string> mnp;
  std::string point_or_seed;
  std::int64_t number = 0;

  std::function<void(Json&)> action;

  auto* check_v = app.add_subcommand("check-v", "Admissibility of a relative speed V");
  check_v->add_option("V", value_text, "Relative speed, N/P or integer")->required();
  check_v->callback([&] { action = [&](Json& rec) { cmd_check_v(rec, globals, value_text); }; });

  auto* check_c = app.add_subcommand("check-c", "Admissibility of a squared light speed");
  check_c->add_option("c2", value_text, "Squared light speed, N/P or integer")->required();
  check_c->callback([&] { action = [&](Json& rec) { cmd_check_c(rec, globals, value_text); }; });

  auto* spectrum_cmd = app.add_subcommand("spectrum", "First K terms of the spectrum of c");
  spectrum_cmd->add_option("c2", value_text, "Squared light speed, N/P or integer")->required();
  spectrum_cmd->add_option("--count", count, "Number of terms")->required();
  spectrum_cmd->add_flag("--signed", signed_output, "Also list the negative half");
  spectrum_cmd->callback([&] {
    action = [&](Json& rec) { cmd_spectrum(rec, globals, value_text, count, signed_output); };
  });

  auto* pell = app.add_subcommand("pell", "Solutions of x^2 - d y^2 = 1");
  pell->add_option("d", value_text, "Non-square integer d >= 2")->required();
  count = 5;
  pell->add_option("--count", count, "Number of solutions")->capture_default_str();
  pell->callback([&] { action = [&](Json& rec) { cmd_pell(rec, globals, value_text, count); }; });

  auto* anosov = app.add_subcommand("anosov", "Matrix, eigen-structure and Anosov test");
  anosov->add_option("mnp", mnp, "m n p")->required()->expected(3);
  anosov->callback([&] { action = [&](Json& rec) { cmd_anosov(rec, globals, mnp); }; });

  auto* orbit = app.add_subcommand("orbit", "Exact period of a rational point");
  orbit->add_option("mnp", mnp, "m n p")->required()->expected(3);
  orbit->add_option("--point", point_or_seed, "Point a/q,b/q")->required();
  orbit->add_option("--max-iter", number, "Iteration budget (default q^2)");
  orbit->callback([&] {
    action = [&](Json& rec) { cmd_orbit(rec, globals, mnp, point_or_seed, number); };
  });

  auto* sample = app.add_subcommand("sample", "Floating-point orbit occupancy on a 32x32 grid");
  sample->add_option("mnp", mnp, "m n p")->required()->expected(3);
  sample->add_option("--seed", point_or_seed, "Seed x,t")->required();
  sample->add_option("--steps", number, "Number of orbit points")->required();
  sample->callback([&] {
    action = [&](Json& rec) { cmd_sample(rec, globals, mnp, point_or_seed, number); };
  });

  auto* families = app.add_subcommand("families", "The two infinite triple families");
  families->add_option("--max-m", number, "Largest m")->required();
  families->callback([&] { action = [&](Json& rec) { cmd_families(rec, globals, number); }; });

  try {
    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << "\n" << app.help();
    return kExitUsage;
  }

  Json rec = record(app.get_subcommands().front()->get_name());
  int code = kExitOk;
  try {
    action(rec);
  } catch (const std::exception& e) {
    // InvalidInput and the library's domain/argument errors alike.
    rec.erase("results");
    rec["status"] = "invalid";
    rec["error"] = e.what();
    code = kExitInvalidInput;
  }

  if (globals.json) {
    out << rec.dump(2) << '\n';
  } else {
    out << render_text(rec);
  }
  return code;
}

}  // namespace lorentz::cli
