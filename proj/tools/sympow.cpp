// Command-line front end: containment predictions, brute-force verification,
// cross-validation tables, and invariant reports for fat point schemes.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympow/closedform.hpp"
#include "sympow/divisor.hpp"
#include "sympow/fatpoints.hpp"
#include "sympow/oracle.hpp"

using nlohmann::json;
using namespace sympow;

namespace {

constexpr int kExitContains = 0;
constexpr int kExitNotContains = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitBudget = 3;
constexpr int kExitBadConfig = 64;

struct JobConfig {
  std::string kind = "conic";  // conic | general
  int n = 5;
  std::uint64_t seed = 20260826;
  std::string field = "p:2147483647";
  std::vector<long> params;  // conic parameters; default 0..n-1
  int m = 1, r = 1;
  int m_max = 4, r_max = 4;
  std::string format = "json";  // json | csv | text
  long long budget = kDefaultWorkBudget;
  bool with_oracle = false;
};

long long default_budget() {
  if (const char* env = std::getenv("SYMPOW_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultWorkBudget;
}

Field parse_field(const std::string& s) {
  if (s == "rational" || s == "q") return Field::rationals();
  if (s.rfind("p:", 0) == 0) return Field::prime(std::stoull(s.substr(2)));
  throw std::invalid_argument("field must be 'rational' or 'p:<prime>'");
}

// Flat key=value lines; '#' comments; unknown keys rejected.
void apply_config_file(const std::string& path, JobConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r'))
      line.pop_back();
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("malformed config line: " + line);
    std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "kind") cfg.kind = val;
    else if (key == "n") cfg.n = std::stoi(val);
    else if (key == "seed") cfg.seed = std::stoull(val);
    else if (key == "field") cfg.field = val;
    else if (key == "m") cfg.m = std::stoi(val);
    else if (key == "r") cfg.r = std::stoi(val);
    else if (key == "m_max") cfg.m_max = std::stoi(val);
    else if (key == "r_max") cfg.r_max = std::stoi(val);
    else if (key == "format") cfg.format = val;
    else if (key == "budget") cfg.budget = std::stoll(val);
    else if (key == "with_oracle") cfg.with_oracle = (val == "1" || val == "true");
    else if (key == "params") {
      cfg.params.clear();
      std::size_t pos = 0;
      while (pos < val.size()) {
        auto comma = val.find(',', pos);
        cfg.params.push_back(std::stol(val.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

json config_json(const JobConfig& cfg) {
  json j;
  j["kind"] = cfg.kind;
  j["n"] = cfg.n;
  j["seed"] = cfg.seed;
  j["field"] = cfg.field;
  if (!cfg.params.empty()) j["params"] = cfg.params;
  j["budget"] = cfg.budget;
  return j;
}

FatPointScheme make_scheme(const JobConfig& cfg) {
  Field f = parse_field(cfg.field);
  if (cfg.kind == "conic") {
    std::vector<long> params = cfg.params;
    if (params.empty()) {
      params.resize(cfg.n);
      std::iota(params.begin(), params.end(), 0L);
    }
    return FatPointScheme::uniform(PointConfig::on_conic(params, f), 1);
  }
  if (cfg.kind == "general")
    return FatPointScheme::uniform(PointConfig::generic(cfg.n, cfg.seed, f), 1);
  throw std::invalid_argument("kind must be 'conic' or 'general'");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_predict(const JobConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v = cfg.kind == "conic" ? contains_conic(cfg.n, cfg.m, cfg.r)
                                  : contains_general(cfg.n, cfg.m, cfg.r);
  json out;
  out["config"] = config_json(cfg);
  out["query"] = {{"op", "predict"}, {"m", cfg.m}, {"r", cfg.r}};
  out["verdict"] = {{"contains", v.contains == Tri::True    ? "true"
                                 : v.contains == Tri::False ? "false"
                                                            : "undecided"},
                    {"method", v.method}};
  out["certificate"] = v.certificate;
  out["timing"] = {{"ms", ms_since(t0)}};
  std::cout << out.dump(2) << "\n";
  return v.contains == Tri::True    ? kExitContains
         : v.contains == Tri::False ? kExitNotContains
                                    : kExitUndecided;
}

int cmd_verify(const JobConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  FatPointScheme z = make_scheme(cfg);
  OracleReport rep;
  try {
    rep = contains_bruteforce(z, cfg.m, cfg.r, cfg.budget);
  } catch (const std::runtime_error& e) {
    json out;
    out["config"] = config_json(cfg);
    out["query"] = {{"op", "verify"}, {"m", cfg.m}, {"r", cfg.r}};
    out["error"] = e.what();
    out["timing"] = {{"ms", ms_since(t0)}};
    std::cout << out.dump(2) << "\n";
    return kExitBudget;
  }
  json out;
  out["config"] = config_json(cfg);
  out["query"] = {{"op", "verify"}, {"m", cfg.m}, {"r", cfg.r}};
  out["report"] = json::parse(rep.to_json());
  out["certificate"] =
      rep.witness ? "witness: " + rep.witness->str() : std::string();
  out["timing"] = {{"ms", ms_since(t0)}};
  std::cout << out.dump(2) << "\n";
  return rep.result ? kExitContains : kExitNotContains;
}

int cmd_table(const JobConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  ConfigClass cls = cfg.kind == "conic" ? ConfigClass::ConicUniform
                                        : ConfigClass::GeneralSimple;
  CrossTable table;
  table.kind = cfg.kind;
  table.n = cfg.n;
  if (cfg.with_oracle) {
    try {
      table = crossvalidate(make_scheme(cfg), cfg.kind == "conic", cfg.m_max,
                            cfg.r_max, cfg.budget);
    } catch (const std::runtime_error& e) {
      std::cerr << e.what() << "\n";
      return kExitBudget;
    }
  } else {
    for (int m = 1; m <= cfg.m_max; ++m)
      for (int r = 1; r <= cfg.r_max; ++r) {
        Verdict v = cfg.kind == "conic" ? contains_conic(cfg.n, m, r)
                                        : contains_general(cfg.n, m, r);
        CrossRow row;
        row.m = m;
        row.r = r;
        row.predicted = v.contains == Tri::True    ? 1
                        : v.contains == Tri::False ? 0
                                                   : -1;
        row.oracle = -1;
        row.agree = true;
        table.rows.push_back(row);
      }
  }
  std::string summary;
  try {
    summary = "rho=" + resurgence(cls, cfg.n).get_str() +
              ", gamma=" + gamma_value(cls, cfg.n).get_str() + ", alpha(m)=" +
              std::to_string(alpha_symbolic(cls, cfg.n, 1)) + "," +
              std::to_string(alpha_symbolic(cls, cfg.n, 2)) + "," +
              std::to_string(alpha_symbolic(cls, cfg.n, 3)) + ",...";
  } catch (const std::exception&) {
    summary = "no closed form for this configuration";
  }
  if (cfg.format == "csv") {
    std::cout << table.to_csv();
    std::cout << "# " << summary << "\n";
  } else {
    json out;
    out["config"] = config_json(cfg);
    out["query"] = {{"op", "table"}, {"m_max", cfg.m_max}, {"r_max", cfg.r_max}};
    out["report"] = json::parse(table.to_json());
    out["certificate"] = summary;
    out["timing"] = {{"ms", ms_since(t0)}};
    std::cout << out.dump(2) << "\n";
  }
  return table.all_agree ? 0 : 1;
}

int cmd_invariants(const JobConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  ConfigClass cls = cfg.kind == "conic" ? ConfigClass::ConicUniform
                                        : ConfigClass::GeneralSimple;
  FatPointScheme z = make_scheme(cfg);
  Ideal iz = fat_ideal(z);
  int alpha = iz.alpha(), omega = iz.omega(), reg = iz.reg_points();

  json rep;
  rep["alpha"] = alpha;
  rep["omega"] = omega;
  rep["reg"] = reg;
  json alphas = json::array();
  for (int m = 1; m <= cfg.m_max; ++m) {
    json a;
    a["m"] = m;
    a["oracle"] = alpha_bruteforce(z, m);
    try {
      a["closed_form"] = alpha_symbolic(cls, cfg.n, m);
    } catch (const std::exception&) {
    }
    alphas.push_back(a);
  }
  rep["alpha_symbolic"] = alphas;
  try {
    mpq_class g = gamma_value(cls, cfg.n);
    rep["gamma"] = g.get_str();
    rep["rho"] = resurgence(cls, cfg.n).get_str();
    RhoBounds b = rho_bounds(alpha, g, reg);
    rep["rho_bounds"] = {b.lower.get_str(), b.upper.get_str()};
  } catch (const std::exception&) {
  }
  if (cfg.kind == "conic") {
    // least t with tL - sum E_i nef, against the top generator degree
    int t = 0;
    while (!is_nef_conic(DivClass{t, std::vector<long long>(cfg.n, 1)})) ++t;
    rep["nef_threshold"] = t;
    rep["omega_matches_nef_threshold"] = (t == omega);
  }

  json out;
  out["config"] = config_json(cfg);
  out["query"] = {{"op", "invariants"}};
  out["report"] = rep;
  out["certificate"] = "";
  out["timing"] = {{"ms", ms_since(t0)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Containments of symbolic vs ordinary powers of point ideals"};
  app.require_subcommand(1);

  JobConfig cfg;
  cfg.budget = default_budget();
  std::string config_file;

  auto add_common = [&](CLI::App* sub, bool grid) {
    sub->add_option("--config", config_file, "key=value config file");
    sub->add_option("--kind", cfg.kind, "conic | general");
    sub->add_option("--n", cfg.n, "number of points");
    sub->add_option("--seed", cfg.seed, "seed for general configurations");
    sub->add_option("--field", cfg.field, "rational | p:<prime>");
    sub->add_option("--params", cfg.params, "conic parameters");
    sub->add_option("--budget", cfg.budget, "work budget for oracle jobs");
    sub->add_option("--format", cfg.format, "json | csv | text");
    if (grid) {
      sub->add_option("--m-max", cfg.m_max, "grid bound on m");
      sub->add_option("--r-max", cfg.r_max, "grid bound on r");
    } else {
      sub->add_option("--m", cfg.m, "symbolic power")->required();
      sub->add_option("--r", cfg.r, "ordinary power")->required();
    }
  };

  CLI::App* predict = app.add_subcommand("predict", "closed-form containment");
  add_common(predict, false);
  CLI::App* verify = app.add_subcommand("verify", "brute-force containment");
  add_common(verify, false);
  CLI::App* table = app.add_subcommand("table", "containment grid");
  add_common(table, true);
  table->add_flag("--with-oracle", cfg.with_oracle, "cross-validate each cell");
  CLI::App* invariants = app.add_subcommand("invariants", "invariant report");
  add_common(invariants, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitBadConfig;
  }

  try {
    if (!config_file.empty()) apply_config_file(config_file, cfg);
    if (cfg.n < 1 || cfg.m < 1 || cfg.r < 1 || cfg.m_max < 0 || cfg.r_max < 0)
      throw std::invalid_argument("n, m, r must be positive");
    parse_field(cfg.field);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitBadConfig;
  }

  try {
    if (predict->parsed()) return cmd_predict(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (table->parsed()) return cmd_table(cfg);
    if (invariants->parsed()) return cmd_invariants(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUndecided;
  }
  return kExitBadConfig;
}
