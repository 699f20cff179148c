#include "chmsav/run_config.hpp"

#include <cctype>
#include <cstddef>
#include <fstream>
#include <set>

#include "chmsav/errors.hpp"

namespace chmsav {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' has non-numeric value '" +
                      value + "'");
  }
}

long to_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long x = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' has non-integer value '" +
                      value + "'");
  }
}

std::vector<double> to_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t comma = value.find(',', start);
    const std::string item =
        trim(value.substr(start, comma == std::string::npos
                                     ? std::string::npos
                                     : comma - start));
    if (!item.empty()) out.push_back(to_double(key, item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) {
    throw ConfigError("config: key '" + key + "' has an empty list");
  }
  return out;
}

InitialCondition parse_ic(const std::string& name) {
  if (name == "traveling_wave") return InitialCondition::traveling_wave;
  if (name == "two_peakon") return InitialCondition::two_peakon;
  if (name == "three_peakon") return InitialCondition::three_peakon;
  if (name == "discontinuous") return InitialCondition::discontinuous;
  throw ConfigError("config: unknown initial condition '" + name + "'");
}

PeakonBranch parse_branch(const std::string& name) {
  if (name == "verbatim") return PeakonBranch::verbatim;
  if (name == "symmetric") return PeakonBranch::symmetric;
  throw ConfigError("config: unknown peakon_branch '" + name + "'");
}

void put_default(std::map<std::string, std::string>& kv,
                 const std::string& key, const std::string& value) {
  kv.emplace(key, value);
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config: cannot open '" + path + "'");
  }
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config: malformed section header at line " +
                          std::to_string(lineno));
      }
      continue;  // sections are cosmetic
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: expected 'key = value' at line " +
                        std::to_string(lineno));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config: empty key at line " + std::to_string(lineno));
    }
    kv[key] = value;
  }
  return kv;
}

RunMode parse_mode(const std::string& name) {
  if (name == "simulate") return RunMode::simulate;
  if (name == "converge") return RunMode::converge;
  if (name == "invariants") return RunMode::invariants;
  throw ConfigError("unknown mode '" + name +
                    "' (expected simulate, converge or invariants)");
}

RunConfig build_run_config(RunMode mode,
                           std::map<std::string, std::string> kv) {
  static const std::set<std::string> known = {
      "mode",       "a",           "b",           "N",
      "tau",        "T",           "C1",          "C2",
      "eps_radicand", "ic",        "m",           "Mmax",
      "c",          "Ntab",        "amplitudes",  "centers",
      "output_dir", "sample_stride", "peakon_branch", "tau_list"};
  for (const auto& [key, value] : kv) {
    if (!known.count(key)) {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }

  // Mode defaults first, then IC presets, so explicit keys always win.
  if (mode == RunMode::invariants) {
    put_default(kv, "ic", "traveling_wave");
    put_default(kv, "N", "32");
    put_default(kv, "tau", "0.0082");
    put_default(kv, "T", "656");
  }
  if (mode == RunMode::converge) {
    put_default(kv, "ic", "traveling_wave");
    put_default(kv, "N", "32");
  }
  const auto ic_name = kv.find("ic");
  if (ic_name == kv.end()) {
    throw ConfigError("config: missing key 'ic'");
  }
  const InitialCondition ic = parse_ic(ic_name->second);
  switch (ic) {
    case InitialCondition::two_peakon:
      put_default(kv, "a", "0");
      put_default(kv, "b", "25");
      put_default(kv, "amplitudes", "3,1");
      put_default(kv, "centers", "-8,0");
      break;
    case InitialCondition::three_peakon:
      put_default(kv, "a", "0");
      put_default(kv, "b", "30");
      put_default(kv, "amplitudes", "2,1,0.8");
      put_default(kv, "centers", "-5,-3,-1");
      break;
    case InitialCondition::discontinuous:
      put_default(kv, "a", "-30");
      put_default(kv, "b", "30");
      break;
    case InitialCondition::traveling_wave:
      put_default(kv, "a", "0");
      break;
  }

  RunConfig cfg;
  cfg.mode = mode;
  cfg.ic = ic;
  auto get = [&kv](const std::string& key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  if (const auto* v = get("a")) cfg.a = to_double("a", *v);
  if (const auto* v = get("b")) {
    cfg.b = to_double("b", *v);
    cfg.has_domain = true;
  }
  if (const auto* v = get("N")) cfg.N = static_cast<int>(to_long("N", *v));
  if (const auto* v = get("tau")) cfg.tau = to_double("tau", *v);
  if (const auto* v = get("T")) cfg.T = to_double("T", *v);
  if (const auto* v = get("C1")) cfg.C1 = to_double("C1", *v);
  if (const auto* v = get("C2")) cfg.C2 = to_double("C2", *v);
  if (const auto* v = get("eps_radicand")) {
    cfg.eps_radicand = to_double("eps_radicand", *v);
  }
  if (const auto* v = get("m")) cfg.wave.m = to_double("m", *v);
  if (const auto* v = get("Mmax")) cfg.wave.m_max = to_double("Mmax", *v);
  if (const auto* v = get("c")) cfg.wave.c = to_double("c", *v);
  if (const auto* v = get("Ntab")) {
    cfg.wave.n_tab = static_cast<int>(to_long("Ntab", *v));
  }
  if (const auto* v = get("output_dir")) cfg.output_dir = *v;
  if (const auto* v = get("sample_stride")) {
    cfg.sample_stride = to_long("sample_stride", *v);
  }
  if (const auto* v = get("peakon_branch")) {
    cfg.peakon_branch = parse_branch(*v);
  }
  if (const auto* v = get("tau_list")) {
    cfg.tau_list = to_list("tau_list", *v);
  }

  if (ic == InitialCondition::two_peakon ||
      ic == InitialCondition::three_peakon) {
    const std::vector<double> amps = to_list("amplitudes", *get("amplitudes"));
    const std::vector<double> centers = to_list("centers", *get("centers"));
    if (amps.size() != centers.size()) {
      throw ConfigError("config: amplitudes and centers differ in length");
    }
    const std::size_t want = ic == InitialCondition::two_peakon ? 2 : 3;
    if (amps.size() != want) {
      throw ConfigError("config: expected " + std::to_string(want) +
                        " peaks for this initial condition");
    }
    cfg.peaks.resize(want);
    for (std::size_t i = 0; i < want; ++i) {
      cfg.peaks[i] = Peak{amps[i], centers[i]};
    }
  }

  // Completeness checks.
  if (cfg.N <= 0) throw ConfigError("config: missing or invalid 'N'");
  if (cfg.tau <= 0.0 && mode != RunMode::converge) {
    throw ConfigError("config: missing or invalid 'tau'");
  }
  if (mode == RunMode::simulate && cfg.T < 0.0) {
    throw ConfigError("config: simulate mode requires 'T'");
  }
  if (mode == RunMode::converge) {
    if (cfg.ic != InitialCondition::traveling_wave) {
      throw ConfigError("config: converge mode requires ic = traveling_wave");
    }
    if (cfg.tau_list.size() < 2) {
      throw ConfigError("config: converge mode needs tau_list with >= 2 values");
    }
    for (double t : cfg.tau_list) {
      if (t <= 0.0) throw ConfigError("config: tau_list values must be > 0");
    }
  }
  if (cfg.ic != InitialCondition::traveling_wave && !cfg.has_domain) {
    throw ConfigError("config: missing domain 'a'/'b'");
  }
  if (cfg.ic == InitialCondition::traveling_wave) {
    const TravelingWaveParams& w = cfg.wave;
    if (!(w.m < w.m_max && w.m_max < w.c)) {
      throw ConfigError("config: traveling wave requires m < Mmax < c");
    }
  }
  return cfg;
}

}  // namespace chmsav
