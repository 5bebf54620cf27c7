#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "output.hpp"
#include "se2frame/lattice.hpp"
#include "se2frame/wavelet.hpp"

namespace se2frame::cli {
namespace {

SweepConfig sweep_config(const ExperimentConfig& cfg, const CommandOptions& opts) {
  return SweepConfig{cfg.grid, cfg.repetitions, cfg.seed, opts.threads};
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

void maybe_png(const CommandOptions& opts, const std::string& file,
               std::span<const double> values, int width, int height, std::ostream& out) {
  if (!opts.png) return;
  if (write_log_heatmap_png(opts.out_dir / file, values, width, height)) {
    out << "  wrote " << (opts.out_dir / file).string() << "\n";
  } else {
    out << "  (PNG output not available in this build)\n";
  }
}

}  // namespace

void print_report(const FrameReport& r, std::ostream& out) {
  out << "  |Omega|                      " << fmt(r.covolume) << "\n"
      << "  N (angles)                   " << r.num_angles << "\n"
      << "  max n(omega)                 " << r.max_n << "\n"
      << "  rank feasible (N >= max n)   " << (r.feasible ? "yes" : "no") << "\n"
      << "  A (pooled)                   " << fmt(r.A) << "\n"
      << "  B (pooled)                   " << fmt(r.B) << "\n"
      << "  kappa (pooled extremes)      " << fmt(r.kappa) << "\n"
      << "  kappa (averaged fields)      " << fmt(r.kappa_mean_field) << "\n"
      << "  kappa (per repetition)       " << fmt(r.kappa_repetition_mean) << " +/- "
      << fmt(r.kappa_repetition_std) << " over " << r.kappa_per_repetition.size()
      << " repetitions\n"
      << "  degenerate (A <= 1e-14 B)    " << (r.degenerate ? "YES" : "no") << "\n"
      << "  frame                        " << (r.is_frame() ? "yes" : "no") << "\n";
}

AnalyzeResult cmd_analyze(const ExperimentConfig& cfg, const CommandOptions& opts,
                          std::ostream& out) {
  const SamplingSpec spec = make_sampling_spec(cfg);
  const SweepConfig sc = sweep_config(cfg, opts);

  std::atomic<std::size_t> done{0};
  const std::size_t total = static_cast<std::size_t>(sc.grid_size) * sc.grid_size *
                            static_cast<std::size_t>(spec.has_shifts() ? 1 : sc.repetitions);
  auto task = std::async(std::launch::async, [&] { return sweep(spec, sc, &done); });
  while (task.wait_for(std::chrono::seconds(2)) != std::future_status::ready) {
    if (opts.progress) {
      std::cerr << "  sweep: " << done.load() << " / " << total << " matrices\n";
    }
  }
  AnalyzeResult result{{}, task.get()};
  result.report = frame_report(result.field, centered_cell(spec.dual()).area(), spec.num_angles());

  const SpectralField& f = result.field;
  CsvWriter csv(opts.out_dir / "field.csv",
                {"omega1", "omega2", "n", "mean_lambda_min", "mean_lambda_max"});
  for (std::size_t c = 0; c < f.cells(); ++c) {
    csv.add(f.omegas[c].x()).add(f.omegas[c].y()).add(f.counts[c]);
    csv.add(f.mean_lambda_min[c]).add(f.mean_lambda_max[c]);
    csv.end_row();
  }

  out << "analyze" << (cfg.name.empty() ? "" : " [" + cfg.name + "]") << ": p = " << cfg.p
      << ", sigma = " << cfg.sigma << ", rho = " << spec.rho << ", N = " << spec.num_angles()
      << ", grid " << f.grid_size << "x" << f.grid_size << ", " << f.repetitions
      << " repetition(s)\n";
  print_report(result.report, out);
  out << "  wrote " << (opts.out_dir / "field.csv").string() << "\n";

  {
    std::ostringstream summary;
    print_report(result.report, summary);
    std::ofstream txt = open_output(opts.out_dir / "summary.txt");
    txt << serialize_config(cfg) << "\n" << summary.str();
  }

  if (opts.png) {
    std::vector<double> counts(f.counts.begin(), f.counts.end());
    maybe_png(opts, "n.png", counts, f.grid_size, f.grid_size, out);
    maybe_png(opts, "lambda_min.png", f.mean_lambda_min, f.grid_size, f.grid_size, out);
    maybe_png(opts, "lambda_max.png", f.mean_lambda_max, f.grid_size, f.grid_size, out);
  }
  if (result.report.degenerate) {
    out << "  WARNING: degenerate frame: lower bound A is numerically zero\n";
  }
  return result;
}

CountResult cmd_count(const ExperimentConfig& cfg, const CommandOptions& opts, std::ostream& out) {
  const double rho = require_rho(cfg);
  const Lattice2D dual = annihilator(make_lattice(cfg.lattice_basis));
  CountResult result;
  result.omegas = omega_grid(centered_cell(dual), cfg.grid);
  result.field = count_field(result.omegas, rho, dual);

  CsvWriter csv(opts.out_dir / "count.csv", {"omega1", "omega2", "n"});
  for (std::size_t c = 0; c < result.omegas.size(); ++c) {
    csv.add(result.omegas[c].x()).add(result.omegas[c].y()).add(result.field.counts[c]);
    csv.end_row();
  }
  out << "count: rho = " << rho << ", grid " << cfg.grid << "x" << cfg.grid
      << ": max n(omega) = " << result.field.max << ", min n(omega) = " << result.field.min
      << "\n";
  if (cfg.num_angles) {
    out << "  N = " << *cfg.num_angles
        << (*cfg.num_angles >= result.field.max ? " satisfies" : " violates")
        << " the rank condition N >= max n(omega)\n";
  }
  out << "  wrote " << (opts.out_dir / "count.csv").string() << "\n";
  if (opts.png) {
    std::vector<double> counts(result.field.counts.begin(), result.field.counts.end());
    maybe_png(opts, "n.png", counts, cfg.grid, cfg.grid, out);
  }
  return result;
}

CalderonResult cmd_calderon(const ExperimentConfig& cfg, const CommandOptions& opts,
                            std::ostream& out) {
  const double rho = require_rho(cfg);
  const std::vector<double> angles = resolve_angles(cfg);
  const WaveletParams w = WaveletParams::make(cfg.p, cfg.sigma);
  const int m = cfg.grid;
  const double n = static_cast<double>(angles.size());

  CalderonResult result;
  result.points = m;
  result.min_inside = std::numeric_limits<double>::infinity();
  std::vector<double> values(static_cast<std::size_t>(m) * m);
  std::vector<double> reciprocal(values.size(), std::numeric_limits<double>::quiet_NaN());

  CsvWriter csv(opts.out_dir / "calderon.csv",
                {"xi1", "xi2", "calderon", "reciprocal_in_ball", "continuous_times_N_over_2pi"});
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // Cell-centred grid on [-rho, rho]^2.
      const Vec2 xi(rho * (2.0 * (i + 0.5) / m - 1.0), rho * (2.0 * (j + 0.5) / m - 1.0));
      const double c = calderon_semidiscrete(xi, w, angles);
      const std::size_t idx = static_cast<std::size_t>(i) * m + j;
      values[idx] = c;
      csv.add(xi.x()).add(xi.y()).add(c);
      if (xi.norm() < rho) {
        reciprocal[idx] = 1.0 / c;
        result.min_inside = std::min(result.min_inside, c);
        result.max_reciprocal = std::max(result.max_reciprocal, 1.0 / c);
        csv.add(1.0 / c);
      } else {
        csv.add_empty();
      }
      csv.add(calderon_continuous(xi, w) * n / kTwoPi);
      csv.end_row();
    }
  }
  out << "calderon: N = " << angles.size() << ", grid " << m << "x" << m << " on [-rho, rho]^2\n"
      << "  min C_psi inside B(0, rho)   " << fmt(result.min_inside) << "\n"
      << "  max 1/C_psi inside B(0, rho) " << fmt(result.max_reciprocal) << "\n"
      << "  wrote " << (opts.out_dir / "calderon.csv").string() << "\n";
  maybe_png(opts, "calderon.png", values, m, m, out);
  maybe_png(opts, "calderon_reciprocal.png", reciprocal, m, m, out);
  return result;
}

CoveringResult cmd_covering(const ExperimentConfig& cfg, const CommandOptions& opts,
                            std::ostream& out) {
  const double rho = require_rho(cfg);
  const std::vector<double> angles = resolve_angles(cfg);
  CoveringResult result;
  result.L = resolve_L(cfg);
  const MultiplicityField field = multiplicity_field(cfg.p, result.L, rho, angles, cfg.resolution);
  const auto [lo, hi] = std::minmax_element(field.counts.begin(), field.counts.end());
  result.count = CoveringCount{*lo, *hi, cfg.resolution};
  result.bounds = cutoff_frame_bounds(result.count, result.L, cfg.sigma);
  result.heuristic = heuristic_check(cfg.p, result.L, rho);

  CsvWriter csv(opts.out_dir / "covering.csv", {"radius", "phase", "xi1", "xi2", "multiplicity"});
  const auto res = static_cast<std::size_t>(field.resolution);
  for (std::size_t i = 0; i < res; ++i) {
    for (std::size_t j = 0; j < res; ++j) {
      const Vec2 xi = field.point(i, j);
      csv.add(field.radii[i]).add(field.phases[j]).add(xi.x()).add(xi.y());
      csv.add(field.counts[i * res + j]);
      csv.end_row();
    }
  }

  out << "covering: p = " << cfg.p << ", L = " << result.L << ", rho = " << rho
      << ", N = " << angles.size() << ", polar resolution " << cfg.resolution << "\n"
      << "  multiplicity m = " << result.count.m << ", M = " << result.count.M << "\n"
      << "  heuristics: " << result.heuristic.explanation << "\n";
  if (result.bounds.degenerate) {
    out << "  WARNING: m = 0, the discs do not cover B(0, rho): no lower frame bound\n"
        << "  upper bound M L^2            " << fmt(result.bounds.upper) << "\n";
  } else {
    out << "  lower bound m L^2 e^{-L^2 pi^2 sigma^2} " << fmt(result.bounds.lower) << "\n"
        << "  upper bound M L^2            " << fmt(result.bounds.upper) << "\n"
        << "  kappa bound (M/m) e^{L^2 pi^2 sigma^2} " << fmt(result.bounds.kappa_bound) << "\n";
  }
  out << "  wrote " << (opts.out_dir / "covering.csv").string() << "\n";
  return result;
}

OracleResult cmd_oracle(const ExperimentConfig& cfg, const CommandOptions& opts,
                        std::ostream& out) {
  const SamplingSpec spec = make_sampling_spec(cfg, /*need_shifts=*/true);
  if (cfg.test_function.empty()) {
    throw ConfigError("test_function", "required for the oracle command");
  }
  BandLimitedTestFunction f;
  try {
    f = BandLimitedTestFunction::make(cfg.test_function, spec.rho);
  } catch (const InvalidArgument& e) {
    throw ConfigError("test_function", e.what());
  }

  OracleResult r;
  r.energy = energy_sum(f, spec, cfg.tail_tol);
  r.quadratic_form = quadratic_form_integral(f, spec, cfg.oracle_grid);
  r.norm_squared = norm_squared(f);
  r.relative_error = std::abs(r.energy.value - r.quadratic_form.value) /
                     std::max(std::abs(r.quadratic_form.value), std::numeric_limits<double>::min());

  out << "oracle: sampled energy vs dual Gramian quadratic form\n"
      << "  sum over Lambda |W f|^2      " << std::setprecision(12) << r.energy.value
      << "  (shells up to R = " << r.energy.radius << ", " << r.energy.terms << " coefficients)\n"
      << "  |Omega| int <z, G z> domega  " << r.quadratic_form.value << "  (grid "
      << r.quadratic_form.grid_size << "x" << r.quadratic_form.grid_size << ")\n"
      << "  relative difference          " << std::setprecision(3) << r.relative_error << "\n"
      << "  ||f||^2                      " << std::setprecision(12) << r.norm_squared << "\n"
      << "  I(f) / ||f||^2               " << r.energy.value / r.norm_squared << "\n"
      << std::setprecision(6);

  nlohmann::json doc = {
      {"energy_sum", r.energy.value},
      {"energy_radius", r.energy.radius},
      {"energy_terms", r.energy.terms},
      {"quadratic_form_integral", r.quadratic_form.value},
      {"quadratic_form_grid", r.quadratic_form.grid_size},
      {"relative_error", r.relative_error},
      {"norm_squared", r.norm_squared},
  };
  std::ofstream js = open_output(opts.out_dir / "oracle.json");
  js << doc.dump(2) << "\n";
  out << "  wrote " << (opts.out_dir / "oracle.json").string() << "\n";
  return r;
}

GramianResult cmd_gramian(const ExperimentConfig& cfg, const CommandOptions& opts,
                          std::ostream& out) {
  const SamplingSpec spec = make_sampling_spec(cfg, /*need_shifts=*/true);
  if (!cfg.omega) throw ConfigError("omega", "required for the gramian command");

  GramianResult r;
  r.closed_form = build_gramian(*cfg.omega, spec);
  const DualGramian direct = build_gramian_direct(*cfg.omega, spec);
  const DualGramian& g = r.closed_form;
  r.hermitian_defect = hermitian_defect(g.entries);
  r.route_difference = g.empty() ? 0.0 : (g.entries - direct.entries).cwiseAbs().maxCoeff();

  out << "gramian at omega = (" << cfg.omega->x() << ", " << cfg.omega->y()
      << "), |V| = " << g.dim() << ", N = " << spec.num_angles() << "\n";
  if (g.empty()) {
    out << "  V_rho(omega) is empty: 0x0 matrix, empty spectrum\n";
    return r;
  }
  r.spectrum = spectrum(g);

  CsvWriter csv(opts.out_dir / "gramian.csv",
                {"row", "col", "nu1", "nu2", "nu_prime1", "nu_prime2", "re", "im"});
  out << std::setprecision(10);
  for (Eigen::Index a = 0; a < g.dim(); ++a) {
    out << "  ";
    for (Eigen::Index b = 0; b < g.dim(); ++b) {
      const Complex v = g.entries(a, b);
      out << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i ";
      csv.add(static_cast<int>(a)).add(static_cast<int>(b));
      csv.add(g.indices.points[a].x()).add(g.indices.points[a].y());
      csv.add(g.indices.points[b].x()).add(g.indices.points[b].y());
      csv.add(v.real()).add(v.imag());
      csv.end_row();
    }
    out << "\n";
  }
  out << "  Hermitian: " << (r.hermitian_defect <= kHermitianTolerance ? "PASS" : "FAIL")
      << " (relative defect " << r.hermitian_defect << ")\n"
      << "  closed form vs product form: max |difference| = " << r.route_difference << "\n"
      << "  spectrum (ascending):";
  for (double lambda : r.spectrum.eigenvalues) out << " " << lambda;
  out << "\n" << std::setprecision(6)
      << "  wrote " << (opts.out_dir / "gramian.csv").string() << "\n";
  return r;
}

}  // namespace se2frame::cli
