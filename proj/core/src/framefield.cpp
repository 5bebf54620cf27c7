#include "se2frame/framefield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "se2frame/error.hpp"
#include "se2frame/gramian.hpp"
#include "se2frame/parallel.hpp"

namespace se2frame {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double kappa_of(double lower, double upper) { return lower > 0.0 ? upper / lower : kInf; }

}  // namespace

std::vector<Vec2> omega_grid(const FundamentalCell& cell, int grid_size) {
  if (grid_size < 1) throw InvalidArgument("omega_grid: grid size must be >= 1");
  std::vector<Vec2> grid;
  grid.reserve(static_cast<std::size_t>(grid_size) * grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double u = (i + 0.5) / grid_size - 0.5;
    for (int j = 0; j < grid_size; ++j) {
      const double v = (j + 0.5) / grid_size - 0.5;
      grid.push_back(cell.at(u, v));
    }
  }
  return grid;
}

double uniform_open(std::uint64_t seed, std::uint64_t repetition, std::uint64_t index,
                    std::uint64_t coordinate) {
  const std::uint64_t h = mix64(mix64(mix64(seed) ^ repetition) ^ (2 * index + coordinate));
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

std::vector<Vec2> draw_shifts(std::uint64_t seed, int repetition, int count) {
  if (count < 1) throw InvalidArgument("draw_shifts: count must be >= 1");
  if (repetition < 0) throw InvalidArgument("draw_shifts: repetition must be >= 0");
  std::vector<Vec2> shifts;
  shifts.reserve(static_cast<std::size_t>(count));
  const auto rep = static_cast<std::uint64_t>(repetition);
  for (int k = 0; k < count; ++k) {
    const auto idx = static_cast<std::uint64_t>(k);
    shifts.emplace_back(uniform_open(seed, rep, idx, 0), uniform_open(seed, rep, idx, 1));
  }
  return shifts;
}

int SpectralField::max_count() const {
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

SpectralField sweep(const SamplingSpec& spec, const SweepConfig& cfg,
                    std::atomic<std::size_t>* progress) {
  if (cfg.grid_size < 1) throw InvalidArgument("sweep: grid size must be >= 1");
  if (cfg.repetitions < 1) throw InvalidArgument("sweep: repetitions must be >= 1");
  validate_angles(spec.angles);

  const Lattice2D dual = spec.dual();
  SpectralField field;
  field.grid_size = cfg.grid_size;
  field.repetitions = spec.has_shifts() ? 1 : cfg.repetitions;
  field.omegas = omega_grid(centered_cell(dual), cfg.grid_size);

  const std::size_t cells = field.cells();
  std::vector<IndexSet> indices(cells);
  field.counts.resize(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    indices[c] = enumerate_V(field.omegas[c], spec.rho, dual);
    field.counts[c] = static_cast<int>(indices[c].size());
  }

  std::vector<std::vector<Vec2>> shifts(static_cast<std::size_t>(field.repetitions));
  for (int r = 0; r < field.repetitions; ++r) {
    shifts[r] = spec.has_shifts() ? spec.shifts : draw_shifts(cfg.seed, r, spec.num_angles());
    validate_shifts(shifts[r], spec.lattice);
  }

  const std::size_t total = cells * static_cast<std::size_t>(field.repetitions);
  field.lambda_min.assign(total, kNaN);
  field.lambda_max.assign(total, kNaN);

  parallel_for(
      total, cfg.threads,
      [&](std::size_t task) {
        const std::size_t r = task / cells;
        const std::size_t c = task % cells;
        const IndexSet& v = indices[c];
        if (v.empty()) return;
        const Eigen::MatrixXcd phi = analysis_matrix(field.omegas[c], v, spec, shifts[r]);
        const Eigen::MatrixXcd g = phi.adjoint() * phi;
        try {
          const Spectrum s = eigenvalues(g);
          field.lambda_min[task] = s.eigenvalues.front();
          field.lambda_max[task] = s.eigenvalues.back();
        } catch (const NoConvergence& e) {
          std::ostringstream msg;
          msg << e.what() << " at omega = (" << field.omegas[c].x() << ", "
              << field.omegas[c].y() << "), repetition " << r;
          throw NoConvergence(msg.str());
        }
      },
      progress);

  field.mean_lambda_min.assign(cells, kNaN);
  field.mean_lambda_max.assign(cells, kNaN);
  for (std::size_t c = 0; c < cells; ++c) {
    if (field.counts[c] == 0) continue;
    double lo = 0.0;
    double hi = 0.0;
    for (int r = 0; r < field.repetitions; ++r) {
      lo += field.min_at(r, c);
      hi += field.max_at(r, c);
    }
    field.mean_lambda_min[c] = lo / field.repetitions;
    field.mean_lambda_max[c] = hi / field.repetitions;
  }
  return field;
}

FrameReport frame_report(const SpectralField& field, double covol, int num_angles) {
  if (field.cells() == 0) throw InvalidArgument("frame_report: empty field");
  if (!(covol > 0.0)) throw InvalidArgument("frame_report: covolume must be positive");

  FrameReport report;
  report.covolume = covol;
  report.num_angles = num_angles;
  report.max_n = field.max_count();
  report.feasible = num_angles >= report.max_n;

  const std::size_t cells = field.cells();
  double pooled_min = kInf;
  double pooled_max = -kInf;
  report.kappa_per_repetition.reserve(static_cast<std::size_t>(field.repetitions));
  for (int r = 0; r < field.repetitions; ++r) {
    double lo = kInf;
    double hi = -kInf;
    for (std::size_t c = 0; c < cells; ++c) {
      if (field.counts[c] == 0) continue;
      lo = std::min(lo, field.min_at(r, c));
      hi = std::max(hi, field.max_at(r, c));
    }
    pooled_min = std::min(pooled_min, lo);
    pooled_max = std::max(pooled_max, hi);
    report.kappa_per_repetition.push_back(kappa_of(lo, hi));
  }

  double mean_lo = kInf;
  double mean_hi = -kInf;
  for (std::size_t c = 0; c < cells; ++c) {
    if (field.counts[c] == 0) continue;
    mean_lo = std::min(mean_lo, field.mean_lambda_min[c]);
    mean_hi = std::max(mean_hi, field.mean_lambda_max[c]);
  }

  if (pooled_max == -kInf) {
    // Every cell has an empty index set: nothing to bound.
    report.degenerate = true;
    report.kappa = report.kappa_mean_field = kInf;
    report.kappa_repetition_mean = report.kappa_repetition_std = kInf;
    return report;
  }

  report.A = covol * pooled_min;
  report.B = covol * pooled_max;
  report.kappa = kappa_of(report.A, report.B);
  report.A_mean_field = covol * mean_lo;
  report.B_mean_field = covol * mean_hi;
  report.kappa_mean_field = kappa_of(report.A_mean_field, report.B_mean_field);
  report.degenerate = report.A <= kDegenerateRatio * report.B;

  const auto& ks = report.kappa_per_repetition;
  if (std::all_of(ks.begin(), ks.end(), [](double k) { return std::isfinite(k); })) {
    double sum = 0.0;
    for (double k : ks) sum += k;
    const double mean = sum / static_cast<double>(ks.size());
    double sq = 0.0;
    for (double k : ks) sq += (k - mean) * (k - mean);
    report.kappa_repetition_mean = mean;
    report.kappa_repetition_std =
        ks.size() > 1 ? std::sqrt(sq / static_cast<double>(ks.size() - 1)) : 0.0;
  } else {
    report.kappa_repetition_mean = kInf;
    report.kappa_repetition_std = kInf;
  }
  return report;
}

double singular_fraction(const SpectralField& field, double rel_tol) {
  std::size_t total = 0;
  std::size_t singular = 0;
  for (int r = 0; r < field.repetitions; ++r) {
    for (std::size_t c = 0; c < field.cells(); ++c) {
      if (field.counts[c] == 0) continue;
      ++total;
      if (field.min_at(r, c) <= rel_tol * field.max_at(r, c)) ++singular;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(singular) / static_cast<double>(total);
}

}  // namespace se2frame
