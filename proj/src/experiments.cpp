#include "chmsav/experiments.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <vector>

#include "chmsav/errors.hpp"

namespace chmsav {

ErrorNorms error_norms(const RealField& u, const RealField& exact,
                       const PeriodicGrid& grid) {
  assert(u.size() == exact.size());
  ErrorNorms norms;
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double d = std::abs(u[j] - exact[j]);
    s += d * d;
    norms.einf = std::max(norms.einf, d);
  }
  norms.e2 = std::sqrt(grid.h * s);
  return norms;
}

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

PreparedRun prepare_run(const RunConfig& cfg) {
  PreparedRun run;
  double final_time = cfg.T;

  if (cfg.ic == InitialCondition::traveling_wave) {
    run.wave = build_traveling_wave(cfg.wave);
    const double b = cfg.a + run.wave->period;
    if (cfg.has_domain && std::abs(cfg.b - b) > 1e-6) {
      std::cerr << "warning: traveling-wave domain is one period; using b = "
                << b << "\n";
    }
    run.grid = build_grid(cfg.a, b, cfg.N);
    run.u0.resize(cfg.N);
    for (int j = 0; j < cfg.N; ++j) {
      run.u0[j] = eval_traveling_wave(*run.wave, run.grid.nodes[j], 0.0);
    }
    if (final_time < 0.0) final_time = run.wave->period;
  } else {
    run.grid = build_grid(cfg.a, cfg.b, cfg.N);
    switch (cfg.ic) {
      case InitialCondition::two_peakon:
      case InitialCondition::three_peakon:
        run.u0 = peakon_superposition(run.grid, cfg.peaks, run.grid.L,
                                      cfg.peakon_branch);
        break;
      case InitialCondition::discontinuous:
        run.u0 = discontinuous_profile(run.grid);
        break;
      default:
        break;
    }
    if (final_time < 0.0) {
      throw ConfigError("config: this initial condition requires 'T'");
    }
  }

  run.params =
      make_params(cfg.tau, final_time, cfg.C1, cfg.C2, cfg.eps_radicand);
  if (!params_time_consistent(run.params)) {
    std::cerr << "warning: M*tau = "
              << static_cast<double>(run.params.M) * run.params.tau
              << " differs from T = " << run.params.T << "\n";
  }
  run.ops = build_symbols(run.grid, cfg.tau);
  return run;
}

namespace {

namespace fs = std::filesystem;

std::ofstream open_csv(const std::string& dir, const std::string& name) {
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / name;
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) {
    throw ConfigError("cannot open output file '" + path.string() + "'");
  }
  return out;
}

void write_invariants_csv(std::ofstream& out,
                          const std::vector<InvariantSample>& samples) {
  out << "n,t,mass,momentum,hamiltonian,modified_energy,mass_drift,"
         "momentum_drift,hamiltonian_drift,modified_energy_drift\n";
  const std::vector<DriftSample> drifts = drift_series(samples);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const InvariantSample& s = samples[i];
    const DriftSample& d = drifts[i];
    out << s.n << ',' << format_full(s.t) << ',' << format_full(s.mass) << ','
        << format_full(s.momentum) << ',' << format_full(s.hamiltonian) << ','
        << format_full(s.modified_energy) << ',' << format_full(d.mass) << ','
        << format_full(d.momentum) << ',' << format_full(d.hamiltonian) << ','
        << format_full(d.modified_energy) << '\n';
  }
}

struct SweepResult {
  double tau = 0.0;
  ErrorNorms norms;
};

}  // namespace

void run_simulate(const RunConfig& cfg) {
  PreparedRun run = prepare_run(cfg);
  std::ofstream sol = open_csv(cfg.output_dir, "solution.csv");
  sol << "t,x,U\n";

  std::vector<InvariantSample> samples;
  const auto observer = [&](const MsavState& state) {
    samples.push_back(sample_invariants(state, run.ops, run.grid, run.params));
    for (int j = 0; j < run.grid.N; ++j) {
      sol << format_full(state.t) << ',' << format_full(run.grid.nodes[j])
          << ',' << format_full(state.u_curr[j]) << '\n';
    }
  };

  const MsavState final_state = chmsav::run(run.u0, run.params, run.ops,
                                            run.grid, observer,
                                            cfg.sample_stride);
  std::ofstream inv = open_csv(cfg.output_dir, "invariants.csv");
  write_invariants_csv(inv, samples);

  const std::vector<DriftSample> drifts = drift_series(samples);
  double max_energy_drift = 0.0, max_mass_drift = 0.0;
  for (const DriftSample& d : drifts) {
    max_energy_drift = std::max(max_energy_drift, d.modified_energy);
    max_mass_drift = std::max(max_mass_drift, d.mass);
  }
  std::cout << "simulate: " << final_state.n << " steps to t = "
            << final_state.t << ", max |dE|/E = " << max_energy_drift
            << ", max |dM|/M = " << max_mass_drift << "\n";
}

void run_invariants(const RunConfig& cfg) {
  PreparedRun run = prepare_run(cfg);
  std::vector<InvariantSample> samples;
  const auto observer = [&](const MsavState& state) {
    samples.push_back(sample_invariants(state, run.ops, run.grid, run.params));
  };
  chmsav::run(run.u0, run.params, run.ops, run.grid, observer,
              cfg.sample_stride);
  std::ofstream inv = open_csv(cfg.output_dir, "invariants.csv");
  write_invariants_csv(inv, samples);

  const std::vector<DriftSample> drifts = drift_series(samples);
  double max_energy_drift = 0.0;
  for (const DriftSample& d : drifts) {
    max_energy_drift = std::max(max_energy_drift, d.modified_energy);
  }
  std::cout << "invariants: " << samples.size() << " samples to t = "
            << samples.back().t << ", max |dE|/E = " << max_energy_drift
            << "\n";
}

void run_converge(const RunConfig& cfg) {
  const TravelingWave wave = build_traveling_wave(cfg.wave);
  const PeriodicGrid grid = build_grid(cfg.a, cfg.a + wave.period, cfg.N);
  RealField u0(cfg.N);
  for (int j = 0; j < cfg.N; ++j) {
    u0[j] = eval_traveling_wave(wave, grid.nodes[j], 0.0);
  }
  const double final_time = cfg.T < 0.0 ? wave.period : cfg.T;

  // Independent runs; each gets its own operators and FFT workspace. The
  // exact field is evaluated at the landing time M*tau of each run.
  std::vector<std::future<SweepResult>> futures;
  for (const double tau : cfg.tau_list) {
    futures.push_back(std::async(std::launch::async, [&, tau]() {
      const SpectralOperators ops = build_symbols(grid, tau);
      const SchemeParams params =
          make_params(tau, final_time, cfg.C1, cfg.C2, cfg.eps_radicand);
      const MsavState final_state = chmsav::run(u0, params, ops, grid);
      RealField exact(cfg.N);
      for (int j = 0; j < cfg.N; ++j) {
        exact[j] = eval_traveling_wave(wave, grid.nodes[j], final_state.t);
      }
      return SweepResult{tau, error_norms(final_state.u_curr, exact, grid)};
    }));
  }
  std::vector<SweepResult> results;
  results.reserve(futures.size());
  for (auto& f : futures) results.push_back(f.get());

  std::ofstream out = open_csv(cfg.output_dir, "convergence.csv");
  out << "tau,e2,order2,einf,orderinf\n";
  std::cout << "tau            e2            order2   einf          orderinf\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const SweepResult& r = results[i];
    std::string order2, orderinf;
    if (i > 0 && results[i - 1].tau != r.tau) {
      const double ratio = std::log(results[i - 1].tau / r.tau);
      const double o2 =
          std::log(results[i - 1].norms.e2 / r.norms.e2) / ratio;
      const double oi =
          std::log(results[i - 1].norms.einf / r.norms.einf) / ratio;
      if (std::isfinite(o2)) order2 = format_full(o2);
      if (std::isfinite(oi)) orderinf = format_full(oi);
    }
    out << format_full(r.tau) << ',' << format_full(r.norms.e2) << ','
        << order2 << ',' << format_full(r.norms.einf) << ',' << orderinf
        << '\n';
    std::printf("%-14.6e %-13.6e %-8s %-13.6e %s\n", r.tau, r.norms.e2,
                order2.empty() ? "-" : order2.substr(0, 6).c_str(),
                r.norms.einf, orderinf.empty() ? "-" : orderinf.substr(0, 6).c_str());
  }
}

}  // namespace chmsav
