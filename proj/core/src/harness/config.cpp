#include "gsqg/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "gsqg/error.hpp"

namespace gsqg::harness {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_double(const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) return std::nullopt;
    return d;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<long long> parse_int(const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long d = std::stoll(v, &pos);
    if (pos != v.size()) return std::nullopt;
    return d;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<bool> parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  return std::nullopt;
}

using Setter = std::function<bool(ScenarioConfig&, const std::string&)>;

struct KeyTable {
  // section -> key -> setter
  std::map<std::string, std::map<std::string, Setter>> sections;

  void add(const std::string& section, const std::string& key, Setter s) {
    sections[section][key] = std::move(s);
  }
  std::vector<std::string> sections_with(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [name, keys] : sections) {
      if (keys.count(key)) out.push_back(name);
    }
    return out;
  }
};

template <class F>
Setter real_with(F assign) {
  return [assign](ScenarioConfig& c, const std::string& v) {
    const auto d = parse_double(v);
    if (!d) return false;
    assign(c, *d);
    return true;
  };
}

template <class F>
Setter integer_with(F assign) {
  return [assign](ScenarioConfig& c, const std::string& v) {
    const auto d = parse_int(v);
    if (!d) return false;
    assign(c, *d);
    return true;
  };
}

struct ParseState {
  bool mu_given = false;
  bool law_given = false;
};

KeyTable build_table(ParseState& st) {
  KeyTable t;
  t.add("scenario", "kind", [](ScenarioConfig& c, const std::string& v) {
    try {
      c.kind = scenario_kind_from_string(v);
      return true;
    } catch (const Error&) {
      return false;
    }
  });
  t.add("scenario", "seed", integer_with([](ScenarioConfig& c, long long v) { c.seed = static_cast<std::uint64_t>(v); }));
  t.add("scenario", "out_dir", [](ScenarioConfig& c, const std::string& v) {
    c.out_dir = v;
    return !v.empty();
  });

  t.add("grid", "n", integer_with([](ScenarioConfig& c, long long v) { c.grid.n = static_cast<int>(v); }));
  t.add("grid", "period", real_with([](ScenarioConfig& c, double v) { c.grid.period = v; }));
  t.add("grid", "dealias_fraction", real_with([](ScenarioConfig& c, double v) { c.grid.dealias_fraction = v; }));

  t.add("model", "beta", real_with([](ScenarioConfig& c, double v) { c.model.beta = v; }));
  t.add("model", "kappa", real_with([](ScenarioConfig& c, double v) { c.model.kappa = v; }));
  t.add("model", "gamma", real_with([](ScenarioConfig& c, double v) { c.model.gamma = v; }));
  t.add("model", "mu", real_with([&st](ScenarioConfig& c, double v) {
    c.model.mu = v;
    st.mu_given = true;
  }));
  t.add("model", "eps_visc", real_with([](ScenarioConfig& c, double v) { c.model.eps_visc = v; }));
  t.add("model", "velocity_law", [&st](ScenarioConfig& c, const std::string& v) {
    try {
      c.model.velocity_law = velocity_law_from_string(v);
      st.law_given = true;
      return true;
    } catch (const Error&) {
      return false;
    }
  });

  t.add("gevrey", "alpha", real_with([](ScenarioConfig& c, double v) { c.gevrey.alpha = v; }));
  t.add("gevrey", "lambda", real_with([](ScenarioConfig& c, double v) { c.gevrey.lambda = v; }));
  t.add("gevrey", "eps_rate", real_with([](ScenarioConfig& c, double v) { c.gevrey.eps_rate = v; }));
  t.add("gevrey", "schedule", [](ScenarioConfig& c, const std::string& v) {
    if (v == "fixed") c.gevrey.schedule = LambdaSchedule::fixed;
    else if (v == "power") c.gevrey.schedule = LambdaSchedule::power;
    else if (v == "linear") c.gevrey.schedule = LambdaSchedule::linear;
    else return false;
    return true;
  });

  t.add("initial", "profile", [](ScenarioConfig& c, const std::string& v) {
    static const std::set<std::string> known{"zero", "single_mode", "triad", "random", "vortex_pair", "checkpoint"};
    c.initial.profile = v;
    return known.count(v) > 0;
  });
  t.add("initial", "amplitude", real_with([](ScenarioConfig& c, double v) { c.initial.amplitude = v; }));
  t.add("initial", "normalize", [](ScenarioConfig& c, const std::string& v) {
    if (v == "none") c.initial.normalize = NormalizeBy::none;
    else if (v == "l2") c.initial.normalize = NormalizeBy::l2;
    else if (v == "critical") c.initial.normalize = NormalizeBy::critical;
    else return false;
    return true;
  });
  t.add("initial", "decay", real_with([](ScenarioConfig& c, double v) { c.initial.decay = v; }));
  t.add("initial", "index", integer_with([](ScenarioConfig& c, long long v) { c.initial.index = static_cast<std::uint64_t>(v); }));
  t.add("initial", "m1", integer_with([](ScenarioConfig& c, long long v) { c.initial.m1 = static_cast<int>(v); }));
  t.add("initial", "m2", integer_with([](ScenarioConfig& c, long long v) { c.initial.m2 = static_cast<int>(v); }));
  t.add("initial", "m1b", integer_with([](ScenarioConfig& c, long long v) { c.initial.m1b = static_cast<int>(v); }));
  t.add("initial", "m2b", integer_with([](ScenarioConfig& c, long long v) { c.initial.m2b = static_cast<int>(v); }));
  t.add("initial", "radius", real_with([](ScenarioConfig& c, double v) { c.initial.radius = v; }));
  t.add("initial", "path", [](ScenarioConfig& c, const std::string& v) {
    c.initial.path = v;
    return !v.empty();
  });

  t.add("run", "T", real_with([](ScenarioConfig& c, double v) { c.T = v; }));
  t.add("run", "dt", real_with([](ScenarioConfig& c, double v) { c.dt = v; }));
  t.add("run", "snapshot_stride", integer_with([](ScenarioConfig& c, long long v) { c.snapshot_stride = static_cast<int>(v); }));
  t.add("run", "cfl", real_with([](ScenarioConfig& c, double v) { c.cfl = v; }));
  t.add("run", "nonlinear", [](ScenarioConfig& c, const std::string& v) {
    const auto b = parse_bool(v);
    if (!b) return false;
    c.nonlinear = *b;
    return true;
  });
  t.add("run", "delta", real_with([](ScenarioConfig& c, double v) { c.delta = v; }));
  t.add("run", "sigma", real_with([](ScenarioConfig& c, double v) { c.sigma = v; }));
  t.add("run", "k_list", [](ScenarioConfig& c, const std::string& v) {
    std::vector<double> ks;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto d = parse_double(trim(item));
      if (!d) return false;
      ks.push_back(*d);
    }
    if (ks.empty()) return false;
    c.k_list = ks;
    return true;
  });
  t.add("run", "lam", real_with([](ScenarioConfig& c, double v) { c.lam = v; }));
  t.add("run", "tol", real_with([](ScenarioConfig& c, double v) { c.tol = v; }));
  t.add("run", "max_iter", integer_with([](ScenarioConfig& c, long long v) { c.max_iter = static_cast<int>(v); }));
  t.add("run", "checkpoint_every", integer_with([](ScenarioConfig& c, long long v) { c.checkpoint_every = static_cast<int>(v); }));

  t.add("ensemble", "samples", integer_with([](ScenarioConfig& c, long long v) { c.ensemble_samples = static_cast<int>(v); }));
  t.add("ensemble", "decay", real_with([](ScenarioConfig& c, double v) { c.ensemble_decay = v; }));
  return t;
}

}  // namespace

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::simulate: return "simulate";
    case ScenarioKind::picard: return "picard";
    case ScenarioKind::verify_inequalities: return "verify-inequalities";
    case ScenarioKind::verify_operators: return "verify-operators";
    case ScenarioKind::scaling_check: return "scaling-check";
    case ScenarioKind::decay_study: return "decay-study";
    case ScenarioKind::gevrey_track: return "gevrey-track";
  }
  return "simulate";
}

ScenarioKind scenario_kind_from_string(const std::string& s) {
  std::string k = s;
  for (auto& ch : k) {
    if (ch == '_') ch = '-';
  }
  for (auto kind : {ScenarioKind::simulate, ScenarioKind::picard, ScenarioKind::verify_inequalities,
                    ScenarioKind::verify_operators, ScenarioKind::scaling_check, ScenarioKind::decay_study,
                    ScenarioKind::gevrey_track}) {
    if (to_string(kind) == k) return kind;
  }
  throw DomainError("unknown scenario kind '" + s + "'");
}

std::vector<std::string> validate(const ScenarioConfig& c) {
  std::vector<std::string> v;
  const auto need = [&v](bool ok, const std::string& msg) {
    if (!ok) v.push_back(msg);
  };
  try {
    c.grid.validate();
  } catch (const Error& e) {
    v.push_back(std::string("grid: ") + e.what() + " (GridSpec)");
  }
  const ModelParams& m = c.model;
  need(m.beta > 0.0 && m.beta <= 2.0, "model.beta = " + std::to_string(m.beta) + ": beta must lie in (0, 2] (ModelParams)");
  need(m.kappa > 0.0 && m.kappa <= 2.0, "model.kappa = " + std::to_string(m.kappa) + ": kappa must lie in (0, 2] (ModelParams)");
  need(m.gamma >= 0.0, "model.gamma: gamma must be >= 0 (ModelParams)");
  need(m.eps_visc >= 0.0, "model.eps_visc: eps_visc must be >= 0 (ModelParams)");
  if (m.velocity_law == VelocityLaw::log) {
    need(m.beta == 2.0, "model.velocity_law = log requires beta = 2 (ModelParams)");
    need(m.mu > 0.0, "model.mu: log velocity law requires mu > 0 (ModelParams)");
  }
  need(c.gevrey.alpha > 0.0 && c.gevrey.alpha <= 1.0, "gevrey.alpha must lie in (0, 1] (gevrey_operator)");
  need(c.gevrey.lambda >= 0.0, "gevrey.lambda must be >= 0 (gevrey_operator)");
  need(c.gevrey.eps_rate >= 0.0, "gevrey.eps_rate must be >= 0 (GevreySpec)");
  need(c.T > 0.0, "run.T must be > 0 (simulate)");
  need(c.dt > 0.0, "run.dt must be > 0 (step)");
  if (c.T > 0.0 && c.dt > 0.0) {
    const double r = c.T / c.dt;
    need(std::abs(r - std::round(r)) <= 1e-9 * std::max(1.0, r), "run.T must be an integer multiple of run.dt (SimState: t = step * dt)");
  }
  need(c.snapshot_stride >= 1, "run.snapshot_stride must be >= 1 (simulate)");
  need(c.cfl > 0.0, "run.cfl must be > 0 (step)");
  need(std::isnan(c.delta) || c.delta >= 0.0, "run.delta must be >= 0 (decay_study)");
  need(c.lam >= 1.0 && c.lam == std::floor(c.lam), "run.lam must be an integer >= 1 (rescale_solution)");
  need(c.tol > 0.0, "run.tol must be > 0 (picard_solve)");
  need(c.max_iter >= 1, "run.max_iter must be >= 1 (picard_solve)");
  need(c.checkpoint_every >= 0, "run.checkpoint_every must be >= 0");
  need(c.ensemble_samples >= 1, "ensemble.samples must be >= 1 (EnsembleSpec)");
  need(c.ensemble_decay > 1.0, "ensemble.decay must exceed 1 (EnsembleSpec)");
  need(c.initial.decay > 1.0, "initial.decay must exceed 1 (EnsembleSpec)");
  need(c.initial.amplitude >= 0.0, "initial.amplitude must be >= 0");
  need(c.initial.radius > 0.0, "initial.radius must be > 0");
  if (c.initial.profile == "checkpoint") need(!c.initial.path.empty(), "initial.path is required for the checkpoint profile");
  if (c.kind == ScenarioKind::gevrey_track && c.model.velocity_law == VelocityLaw::power) {
    need(c.gevrey.alpha < c.model.kappa, "gevrey.alpha must be < kappa (gevrey_tracking)");
  }
  return v;
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig c;
  ParseState st;
  const KeyTable table = build_table(st);
  std::vector<std::string> violations;
  std::set<std::string> seen;
  std::string section;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') {
        violations.push_back(where + "malformed section header");
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      if (!table.sections.count(section)) violations.push_back(where + "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      violations.push_back(where + "expected key = value");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    std::string sec = section;
    if (sec.empty()) {
      const auto owners = table.sections_with(key);
      if (owners.empty()) {
        violations.push_back(where + "unknown key '" + key + "'");
        continue;
      }
      if (owners.size() > 1) {
        violations.push_back(where + "key '" + key + "' is ambiguous outside a section");
        continue;
      }
      sec = owners.front();
    }
    const auto s = table.sections.find(sec);
    if (s == table.sections.end()) continue;
    const auto k = s->second.find(key);
    if (k == s->second.end()) {
      violations.push_back(where + "unknown key '" + key + "' in [" + sec + "]");
      continue;
    }
    if (!seen.insert(sec + "." + key).second) {
      violations.push_back(where + "duplicate key " + sec + "." + key);
      continue;
    }
    if (!k->second(c, value)) violations.push_back(where + "bad value '" + value + "' for " + sec + "." + key);
  }
  if (!st.law_given) c.model.velocity_law = c.model.beta == 2.0 ? VelocityLaw::log : VelocityLaw::power;
  if (c.model.velocity_law == VelocityLaw::log && !st.mu_given) {
    violations.push_back("model.mu is required: log velocity law requires mu > 0 (ModelParams)");
  }
  for (auto& msg : validate(c)) violations.push_back(std::move(msg));
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace gsqg::harness
