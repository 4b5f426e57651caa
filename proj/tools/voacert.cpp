#include "voacert/affine.hpp"
#include "voacert/freefield.hpp"
#include "voacert/geometry.hpp"
#include "voacert/lattice.hpp"
#include "voacert/liesuper.hpp"
#include "voacert/parse.hpp"
#include "voacert/singular.hpp"
#include "voacert/suite.hpp"
#include "voacert/zhu.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using nlohmann::json;
using namespace voacert;

namespace {

struct Globals {
  std::string n = "2";
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad --n value '" + text + "', expected N or A..B");
  }
}

int single_n(const Globals& g) {
  const auto [a, b] = parse_range(g.n);
  if (a != b) throw std::invalid_argument("this command takes a single --n");
  return a;
}

std::string render_text(const json& j) {
  if (!j.is_object()) return j.dump() + "\n";
  if (j.contains("checks") && j["checks"].is_array()) {
    std::string out;
    for (const auto& c : j["checks"]) {
      std::string status = c["status"].get<std::string>();
      for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      out += status + " " + c["key"].get<std::string>();
      if (c.contains("reason")) out += " (" + c["reason"].get<std::string>() + ")";
      if (c.contains("repro")) out += "\n  repro: " + c["repro"].get<std::string>();
      out += "\n";
    }
    const auto& s = j["summary"];
    out += "summary: " + s["pass"].dump() + " pass, " + s["fail"].dump() + " fail, " + s["skip"].dump() + " skip\n";
    return out;
  }
  std::string out;
  for (const auto& [k, v] : j.items()) out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out;
}

void emit(const Globals& g, const json& j) {
  const std::string text = g.format == "text" ? render_text(j) : j.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error("cannot open output file " + g.out);
  f << text;
}

LieSuperalgebra algebra_for(const Globals& g, const std::string& preset) {
  if (!preset.empty()) return voacert::preset(preset);
  return build_psl(single_n(g));
}

json state_json(const LieSuperalgebra& alg, const State& s) { return to_string(alg, s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of mode-algebra, C2, orbit and lattice computations for V^1(psl(n|n))"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--n", g.n, "rank parameter, N or a range A..B");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", g.out, "write the report to this path");

  int status = 0;

  std::string algebra, state_text, word_text, matrix_text, rho_text, lambda_text, config_path, only;
  bool inject = false, timing = false;
  std::size_t count = 1, samples = 100;
  std::optional<std::size_t> samples_opt;
  unsigned workers = 0;

  auto* structure = app.add_subcommand("structure-check", "verify the Lie superalgebra axioms exhaustively");
  structure->add_option("--algebra", algebra, "preset name, sl(n) or psl(n|n)");
  structure->add_flag("--inject-fault", inject, "flip the sign of one bracket before checking");
  structure->callback([&] {
    auto alg = algebra_for(g, algebra);
    if (inject) detail::corrupt_one_bracket(alg);
    const auto rep = check_structure(alg);
    const auto mism = matrix_realisation_mismatches(alg);
    json j = rep.to_json();
    j["matrix_mismatches"] = mism.size();
    j["passed"] = rep.passed && mism.empty();
    emit(g, j);
    if (!j["passed"].get<bool>()) status = 1;
  });

  auto* exporter = app.add_subcommand("export-algebra", "print the structure-constant table as JSON");
  exporter->add_option("--algebra", algebra, "preset name, sl(n) or psl(n|n)");
  exporter->callback([&] { emit(g, algebra_for(g, algebra).to_json()); });

  auto* singular = app.add_subcommand("singular-check", "test whether a state is annihilated by n_+ hat");
  singular->add_option("--state", state_text, "state literal; defaults to chi")->capture_default_str();
  singular->callback([&] {
    const auto alg = build_psl(single_n(g));
    const State s = state_text.empty() ? vector_chi(alg) : parse_state(alg, state_text);
    const auto res = is_singular(alg, s);
    json j{{"input", state_json(alg, s)},
           {"singular", res.singular},
           {"result_state", state_json(alg, res.image)},
           {"is_zero", res.image.is_zero()},
           {"witness", res.witness ? json(to_string(alg, *res.witness)) : json()},
           {"modes_checked", res.modes_checked}};
    emit(g, j);
  });

  auto* word = app.add_subcommand("apply-word", "apply an operator word to a state, right to left");
  word->add_option("--word", word_text, "word literal, e.g. \"E[3,2](1) T E[4,2](1) T\"")->required();
  word->add_option("--state", state_text, "state literal; defaults to chi");
  word->callback([&] {
    const auto alg = build_psl(single_n(g));
    const State s = state_text.empty() ? vector_chi(alg) : parse_state(alg, state_text);
    const auto w = parse_word(alg, word_text);
    const State r = apply_word(alg, w, s);
    emit(g, {{"input", state_json(alg, s)},
             {"word", to_string(alg, w)},
             {"result_state", state_json(alg, r)},
             {"is_zero", r.is_zero()}});
  });

  auto* c2 = app.add_subcommand("c2-reduce", "image of a state in the C2 algebra and its reduced quotient");
  c2->add_option("--state", state_text, "state literal")->required();
  c2->callback([&] {
    const auto alg = build_psl(single_n(g));
    const State s = parse_state(alg, state_text);
    emit(g, {{"input", state_json(alg, s)},
             {"psi", to_string(alg, psi(alg, s))},
             {"psi_reduced", to_string(psi_reduced(alg, s))}});
  });

  auto* cover = app.add_subcommand("minor-cover", "check that the u-vectors produce every 2x2 minor");
  cover->callback([&] {
    const auto rep = minor_cover_check(single_n(g));
    emit(g, rep.to_json());
    if (!rep.covered()) status = 1;
  });

  auto* orbit = app.add_subcommand("orbit-member", "minimal orbit and minimal sheet membership of a matrix");
  orbit->add_option("--matrix", matrix_text, "JSON matrix of rational strings")->required();
  orbit->callback([&] {
    const Matrix z = parse_matrix(matrix_text);
    emit(g, {{"matrix", matrix_to_json(z)},
             {"rank", rank(z)},
             {"in_min_orbit_closure", in_min_orbit_closure(z)},
             {"in_sheet_closure", in_sheet_closure(z)}});
  });

  auto* sample = app.add_subcommand("sheet-sample", "draw exact elements of the minimal sheet");
  sample->add_option("--count", count, "number of samples");
  sample->callback([&] {
    const int n = single_n(g);
    json arr = json::array();
    for (std::size_t k = 0; k < count; ++k) {
      const auto s = sample_sheet_element(n, sample_seed(g.seed, k));
      json y = json::array();
      for (const auto& v : s.y) y.push_back(v.get_str());
      arr.push_back({{"y", y}, {"matrix", matrix_to_json(s.z)}});
    }
    emit(g, {{"n", n}, {"seed", g.seed}, {"samples", arr}});
  });

  auto* vanish = app.add_subcommand("sheet-vanish", "evaluate the U(2,2) minor combinations on sheet samples");
  vanish->add_option("--samples", samples, "number of samples");
  vanish->callback([&] {
    const int n = single_n(g);
    const auto d = minor_decomposition(n);
    std::size_t failing = 0;
    for (const auto& f : d.u22)
      if (!vanishes_on_sheet(f, n, samples, g.seed)) ++failing;
    std::vector<Rational> y(static_cast<std::size_t>(n));
    y[0] = 1;
    const Matrix ss = sheet_matrix(y);
    std::size_t nonzero = 0;
    for (const auto& f : d.v12)
      if (evaluate(f, ss) != 0) ++nonzero;
    const bool ok = failing == 0 && nonzero > 0 && d.is_direct();
    emit(g, {{"n", n},
             {"samples", samples},
             {"dim_v12", d.v12_rank},
             {"dim_u22", d.u22.size()},
             {"direct_sum", d.is_direct()},
             {"u22_failing", failing},
             {"v12_nonzero_on_semisimple", nonzero},
             {"passed", ok}});
    if (!ok) status = 1;
  });

  auto* anomaly = app.add_subcommand("anomaly-check", "levels of the gauge currents built from a weight matrix");
  anomaly->add_option("--rho", rho_text, "JSON integer matrix, one row per hypermultiplet")->required();
  anomaly->callback([&] {
    const Matrix rho = parse_matrix(rho_text);
    const Matrix levels = level_matrix(current_from_weights(rho));
    emit(g, {{"rho", matrix_to_json(rho)}, {"level_matrix", matrix_to_json(levels)}, {"is_zero", levels.is_zero()}});
    if (!levels.is_zero()) status = 1;
  });

  auto* decompose = app.add_subcommand("lattice-decompose", "split an integer weight along rho and rho_vee");
  decompose->add_option("--lambda", lambda_text, "JSON integer array")->required();
  decompose->callback([&] {
    const auto lambda = parse_weight(lambda_text);
    if (app.get_option("--n")->count() > 0 && static_cast<int>(lambda.size()) != single_n(g))
      throw std::invalid_argument("--lambda has length " + std::to_string(lambda.size()) + ", expected --n");
    const auto d = decompose_weight(lambda);
    json lv = json::array();
    for (const auto& x : d.lambda_vee) lv.push_back(x.get_str());
    json l = json::array();
    for (const auto& x : lambda) l.push_back(x.get_si());
    emit(g, {{"lambda", l},
             {"lambda0", d.lambda0.get_str()},
             {"lambda_vee", lv},
             {"j", d.j},
             {"class_lambda0", d.class0},
             {"class_lambda_vee", d.class_vee}});
  });

  auto* disc = app.add_subcommand("discriminant", "invariant factors of the root lattice Q_n");
  disc->callback([&] {
    const int n = single_n(g);
    json f = json::array();
    for (const auto& x : discriminant_group(cartan_lattice(n, 1))) f.push_back(x.get_str());
    emit(g, {{"n", n}, {"invariant_factors", f}});
  });

  auto* suite = app.add_subcommand("suite", "run every certification check");
  suite->add_option("--config", config_path, "JSON config file");
  suite->add_option("--samples", samples_opt, "sheet samples per check");
  suite->add_option("--only", only, "run only checks whose key starts with this prefix");
  suite->add_option("--workers", workers, "worker threads");
  suite->add_flag("--inject-fault", inject, "flip the sign of one bracket in every structure check");
  suite->add_flag("--timing", timing, "record wall time per check (reports are then not reproducible)");
  suite->callback([&] {
    SuiteConfig c;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw std::runtime_error("cannot open config " + config_path);
      c = SuiteConfig::from_json(json::parse(f));
    }
    if (app.get_option("--n")->count() > 0) {
      const auto [a, b] = parse_range(g.n);
      c.n_min = a;
      c.n_max = b;
      c.sheet_n_min = std::max(a, 4);
      c.sheet_n_max = b;
    }
    if (app.get_option("--seed")->count() > 0) c.seed = g.seed;
    if (samples_opt) c.sample_count = *samples_opt;
    if (workers) c.workers = workers;
    c.only = only;
    c.inject_fault = inject;
    c.timing = timing;
    const auto rep = run_suite(c);
    emit(g, rep.to_json());
    if (!rep.passed()) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
