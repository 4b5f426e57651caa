#pragma once

// Runs the full certification suite on a bounded worker pool and assembles a
// deterministic JSON report, sorted by check key.

#include "voacert/affine.hpp"
#include "voacert/freefield.hpp"
#include "voacert/geometry.hpp"
#include "voacert/lattice.hpp"
#include "voacert/liesuper.hpp"
#include "voacert/parse.hpp"
#include "voacert/singular.hpp"
#include "voacert/zhu.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace voacert {

struct SuiteConfig {
  int n_min = 2, n_max = 5;              // mode-calculus checks
  int sheet_n_min = 4, sheet_n_max = 5;  // sheet checks need n >= 4
  std::uint64_t seed = 0;
  std::size_t sample_count = 100;
  int max_n = 6;                      // resource limit on n
  std::size_t max_sample_count = 1000;  // resource limit on samples
  unsigned workers = 0;               // 0: hardware concurrency
  std::string only;                   // run only keys with this prefix
  bool inject_fault = false;          // corrupt one bracket sign
  bool timing = false;                // record wall time per check

  static SuiteConfig from_json(const nlohmann::json& j) {
    SuiteConfig c;
    if (j.contains("default_n_range")) {
      c.n_min = j["default_n_range"].at(0).get<int>();
      c.n_max = j["default_n_range"].at(1).get<int>();
    }
    if (j.contains("sheet_n_range")) {
      c.sheet_n_min = j["sheet_n_range"].at(0).get<int>();
      c.sheet_n_max = j["sheet_n_range"].at(1).get<int>();
    }
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("sample_count")) c.sample_count = j["sample_count"].get<std::size_t>();
    if (j.contains("resource_limits")) {
      const auto& r = j["resource_limits"];
      if (r.contains("max_n")) c.max_n = r["max_n"].get<int>();
      if (r.contains("max_sample_count")) c.max_sample_count = r["max_sample_count"].get<std::size_t>();
      if (r.contains("workers")) c.workers = r["workers"].get<unsigned>();
    }
    return c;
  }

  nlohmann::json to_json() const {
    return {{"default_n_range", {n_min, n_max}},
            {"sheet_n_range", {sheet_n_min, sheet_n_max}},
            {"seed", seed},
            {"sample_count", sample_count},
            {"resource_limits", {{"max_n", max_n}, {"max_sample_count", max_sample_count}}},
            {"only", only},
            {"inject_fault", inject_fault}};
  }
};

enum class CheckStatus { pass, fail, skip };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skip";
  }
}

struct CheckResult {
  explicit CheckResult(std::string k = {}, CheckStatus s = CheckStatus::pass) : key(std::move(k)), status(s) {}

  std::string key;
  CheckStatus status;
  nlohmann::json detail = nlohmann::json::object();
  nlohmann::json witness;  // null unless the check failed
  std::string reason;      // for skips
  std::string repro;
  std::optional<double> seconds;

  nlohmann::json to_json() const {
    nlohmann::json j{{"key", key}, {"status", to_string(status)}, {"detail", detail}};
    if (status == CheckStatus::fail) {
      j["witness"] = witness;
      j["repro"] = repro;
    }
    if (status == CheckStatus::skip) j["reason"] = reason;
    if (seconds) j["seconds"] = *seconds;
    return j;
  }
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
  }
  bool passed() const { return count(CheckStatus::fail) == 0; }

  nlohmann::json to_json() const {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& r : checks) c.push_back(r.to_json());
    return {{"job", {{"command", "suite"}, {"config", config.to_json()}}},
            {"passed", passed()},
            {"summary",
             {{"pass", count(CheckStatus::pass)}, {"fail", count(CheckStatus::fail)}, {"skip", count(CheckStatus::skip)}}},
            {"checks", c}};
  }
};

namespace detail {

struct Job {
  std::string key;
  std::function<CheckResult()> run;
};

inline std::string n_key(const std::string& name, int n) { return name + "/n=" + std::to_string(n); }

/// Flips the sign of the first nonzero bracket [x, y] with x < y, in one order only.
inline void corrupt_one_bracket(LieSuperalgebra& g) {
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b)
      if (!g.bracket(a, b).is_zero()) {
        g.set_bracket(a, b, g.bracket(a, b).scaled(-1));
        return;
      }
}

inline CheckResult structure_check(const std::string& key, LieSuperalgebra g, bool fault) {
  if (fault) corrupt_one_bracket(g);
  CheckResult r{key};
  const auto rep = check_structure(g);
  const auto mism = matrix_realisation_mismatches(g);
  r.detail = {{"algebra", g.name()},
              {"pairs_checked", rep.pairs_checked},
              {"triples_checked", rep.triples_checked},
              {"violations", rep.violation_count},
              {"matrix_mismatches", mism.size()}};
  if (!rep.passed || !mism.empty()) {
    r.status = CheckStatus::fail;
    auto w = rep.to_json();
    for (const auto& m : mism) w["violations"].push_back({{"property", m.property}, {"elements", m.elements}, {"detail", m.detail}});
    r.witness = w;
  }
  return r;
}

inline CheckResult annihilation_check(const std::string& key, int n) {
  const auto g = build_psl(n);
  const State chi = vector_chi(g);
  CheckResult r{key};
  std::size_t checked = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& c : chi_annihilation_cases(g)) {
    ++checked;
    const State image = apply_mode(g, c.element, c.mode, chi);
    if (!image.is_zero())
      failures.push_back({{"mode", c.symbol + "(" + std::to_string(c.mode) + ")"}, {"image", to_string(g, image)}});
  }
  r.detail = {{"cases", checked}};
  if (!failures.empty()) {
    r.status = CheckStatus::fail;
    r.witness = failures;
  }
  return r;
}

inline CheckResult singular_check(const std::string& key, int n, const std::string& which) {
  const auto g = build_psl(n);
  CheckResult r{key};
  State s = which == "chi" ? vector_chi(g) : which == "chi_plus" ? vector_chi_plus(g) : vector_chi_minus(g);
  const auto res = is_singular(g, s);
  std::optional<std::string> expected;
  if (which == "chi_plus") expected = g.basis(g.root(n, n + 1)).label() + "(0)";
  if (which == "chi_minus") expected = g.basis(g.root(1, n + 1)).label() + "(0)";
  const std::string witness = res.witness ? to_string(g, *res.witness) : "";
  r.detail = {{"state", to_string(g, s)}, {"singular", res.singular}, {"modes_checked", res.modes_checked}};
  if (res.witness) r.detail["witness"] = witness;
  const bool ok = expected ? (!res.singular && witness == *expected) : res.singular;
  if (!ok) {
    r.status = CheckStatus::fail;
    r.witness = {{"witness", witness}, {"image", to_string(g, res.image)}, {"expected_witness", expected.value_or("")}};
  }
  return r;
}

inline CheckResult membership_check(const std::string& key, int n, bool plus) {
  const auto g = build_psl(n);
  CheckResult r{key};
  const auto m = plus ? chi_plus_membership(g) : chi_minus_membership(g);
  r.detail = {{"word", to_string(g, plus ? chi_plus_word(g) : chi_minus_word(g))},
              {"scalar", m.scalar ? m.scalar->get_str() : "none"}};
  if (!m.passed()) {
    r.status = CheckStatus::fail;
    r.witness = {{"produced", to_string(g, m.produced)}, {"target", to_string(g, m.target)}};
  }
  return r;
}

inline CheckResult minor_cover_job(const std::string& key, int n) {
  CheckResult r{key};
  const auto rep = minor_cover_check(n);
  r.detail = {{"vectors_checked", rep.vectors_checked},
              {"minors_expected", rep.minors_expected},
              {"minors_produced", rep.minors_produced}};
  if (!rep.covered()) {
    r.status = CheckStatus::fail;
    r.witness = rep.to_json();
  }
  return r;
}

inline CheckResult sheet_check(const std::string& key, int n, std::size_t samples, std::uint64_t seed) {
  CheckResult r{key};
  const auto d = minor_decomposition(n);
  const std::size_t expected_u = binomial2(n) * binomial2(n) - static_cast<std::size_t>(n * n);
  std::vector<Matrix> zs;
  for (std::size_t k = 0; k < samples; ++k) zs.push_back(sample_sheet_element(n, sample_seed(seed, k)).z);
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t u = 0; u < d.u22.size(); ++u)
    for (std::size_t k = 0; k < zs.size(); ++k)
      if (evaluate(d.u22[u], zs[k]) != 0) {
        failures.push_back({{"form", form_to_string(d.u22[u])}, {"sample", k}, {"matrix", matrix_to_json(zs[k])}});
        break;
      }
  std::vector<Rational> y(static_cast<std::size_t>(n));
  y[0] = 1;
  const Matrix semisimple = sheet_matrix(y);
  std::size_t nonvanishing = 0;
  for (const auto& f : d.v12)
    if (evaluate(f, semisimple) != 0) ++nonvanishing;
  r.detail = {{"dim_v12", d.v12_rank},
              {"dim_u22", d.u22.size()},
              {"direct", d.is_direct()},
              {"samples", samples},
              {"v12_nonvanishing_on_semisimple", nonvanishing}};
  if (!d.is_direct() || d.u22.size() != expected_u || !failures.empty() || nonvanishing == 0 ||
      !in_sheet_closure(semisimple) || in_min_orbit_closure(semisimple)) {
    r.status = CheckStatus::fail;
    r.witness = {{"vanishing_failures", failures}, {"expected_dim_u22", expected_u}};
  }
  return r;
}

inline CheckResult anomaly_check(const std::string& key, int n) {
  CheckResult r{key};
  Matrix rho(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) rho(i, 0) = 1;
  const auto J = current_from_weights(rho).front();
  const Rational total = ope_level(J, J);
  const Rational boson = ope_level(boson_part(J), boson_part(J));
  const Rational fermion = ope_level(fermion_part(J), fermion_part(J));
  r.detail = {{"level", total.get_str()}, {"boson", boson.get_str()}, {"fermion", fermion.get_str()}};
  if (total != 0 || boson != -n || fermion != n) {
    r.status = CheckStatus::fail;
    r.witness = r.detail;
  }
  return r;
}

inline CheckResult lattice_check(const std::string& key, int n) {
  CheckResult r{key};
  std::size_t weights = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (long m = -2L * n; m <= 2L * n; ++m)
    for (const auto& lambda : enumerate_P(m, n, 2)) {
      ++weights;
      const auto d = decompose_weight(lambda);
      if (d.class0 != d.class_vee && failures.size() < 8) {
        nlohmann::json l = nlohmann::json::array();
        for (const auto& x : lambda) l.push_back(x.get_si());
        failures.push_back({{"lambda", l}, {"class0", d.class0}, {"class_vee", d.class_vee}});
      }
    }
  const auto disc = discriminant_group(cartan_lattice(n, 1));
  r.detail = {{"weights", weights}, {"discriminant", nlohmann::json::array()}};
  for (const auto& x : disc) r.detail["discriminant"].push_back(x.get_str());
  if (!failures.empty() || disc.size() != 1 || disc[0] != n) {
    r.status = CheckStatus::fail;
    r.witness = failures;
  }
  return r;
}

inline CheckResult skipped(const std::string& key, std::string reason) {
  CheckResult r{key};
  r.status = CheckStatus::skip;
  r.reason = std::move(reason);
  return r;
}

}  // namespace detail

inline std::string repro_command(const SuiteConfig& c, const std::string& key) {
  const auto slash = key.rfind("/n=");
  const std::string n = slash == std::string::npos ? "" : key.substr(slash + 3);
  std::string cmd = "voacert suite --seed " + std::to_string(c.seed) + " --samples " + std::to_string(c.sample_count);
  if (!n.empty()) cmd += " --n " + n;
  if (c.inject_fault) cmd += " --inject-fault";
  return cmd + " --only " + key;
}

inline SuiteReport run_suite(const SuiteConfig& config) {
  using namespace detail;
  std::vector<Job> jobs;
  auto add = [&](std::string key, std::function<CheckResult(const std::string&)> f) {
    if (!config.only.empty() && key.rfind(config.only, 0) != 0) return;
    jobs.push_back({key, [key, f] { return f(key); }});
  };
  const bool samples_ok = config.sample_count <= config.max_sample_count;

  for (int n = config.n_min; n <= config.n_max; ++n) {
    const bool within = n <= config.max_n;
    auto guarded = [&](const std::string& name, std::function<CheckResult(const std::string&)> f) {
      if (within) add(n_key(name, n), std::move(f));
      else add(n_key(name, n), [](const std::string& k) { return skipped(k, "n exceeds resource limit max_n"); });
    };
    guarded("structure/sl", [n, &config](const std::string& k) { return structure_check(k, build_sl(n), config.inject_fault); });
    guarded("structure/psl", [n, &config](const std::string& k) { return structure_check(k, build_psl(n), config.inject_fault); });
    guarded("annihilation/chi", [n](const std::string& k) { return annihilation_check(k, n); });
    guarded("singular/chi", [n](const std::string& k) { return singular_check(k, n, "chi"); });
    guarded("singular/chi_plus", [n](const std::string& k) { return singular_check(k, n, "chi_plus"); });
    guarded("membership/chi_plus", [n](const std::string& k) { return membership_check(k, n, true); });
    if (n >= 4) {
      guarded("singular/chi_minus", [n](const std::string& k) { return singular_check(k, n, "chi_minus"); });
      guarded("membership/chi_minus", [n](const std::string& k) { return membership_check(k, n, false); });
    } else {
      add(n_key("singular/chi_minus", n), [](const std::string& k) { return skipped(k, "chi_minus requires n >= 4"); });
      add(n_key("membership/chi_minus", n), [](const std::string& k) { return skipped(k, "chi_minus requires n >= 4"); });
    }
    guarded("minor-cover", [n](const std::string& k) { return minor_cover_job(k, n); });
    guarded("anomaly", [n](const std::string& k) { return anomaly_check(k, n); });
    guarded("lattice", [n](const std::string& k) { return lattice_check(k, n); });
  }
  for (int n = config.sheet_n_min; n <= config.sheet_n_max; ++n) {
    const std::string key = n_key("sheet", n);
    if (n < 4) add(key, [](const std::string& k) { return skipped(k, "sheet checks require n >= 4"); });
    else if (n > config.max_n) add(key, [](const std::string& k) { return skipped(k, "n exceeds resource limit max_n"); });
    else if (!samples_ok) add(key, [](const std::string& k) { return skipped(k, "sample_count exceeds resource limit"); });
    else add(key, [n, &config](const std::string& k) { return sheet_check(k, n, config.sample_count, config.seed); });
  }

  std::vector<CheckResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      const auto start = std::chrono::steady_clock::now();
      try {
        results[i] = jobs[i].run();
      } catch (const std::exception& e) {
        results[i] = CheckResult{jobs[i].key, CheckStatus::fail};
        results[i].witness = {{"exception", e.what()}};
      }
      if (config.timing)
        results[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  unsigned count = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  count = std::min<unsigned>(count, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (auto& r : results)
    if (r.status == CheckStatus::fail) r.repro = repro_command(config, r.key);
  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) { return a.key < b.key; });
  return {config, std::move(results)};
}

}  // namespace voacert
