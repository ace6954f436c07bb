#pragma once

// Deterministic grid engine behind the case certificates.

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "honeycomb/errors.hpp"

namespace honeycomb {

struct ScanConfig {
  double step = 1e-3;  ///< grid spacing per continuous axis
  double tol = 1e-9;   ///< a margin must exceed this to count as positive
  int n_max = 12;      ///< largest N scanned exhaustively
  std::uint64_t seed = 0;
  /// Conservative mode: each grid value is lowered by lipschitz * step * sqrt(dim) / 2,
  /// covering the whole cell around the sample. 0 disables it.
  double lipschitz = 0.0;

  void validate() const;
};

enum class ScanMethod { Grid, EndpointConcavity, InequalityChain };
std::string_view to_string(ScanMethod method);

struct Range {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
};

struct Coord {
  std::string name;
  double value = 0.0;
};

struct Certificate {
  std::string case_id;
  std::vector<Range> box;
  double min_margin = std::numeric_limits<double>::infinity();
  std::vector<Coord> witness;
  bool passed = false;
  ScanMethod method = ScanMethod::Grid;
  /// Strict certificates need min_margin > tol; non-strict ones (inequality chains
  /// with a designed equality point) need min_margin >= -tol.
  bool strict = true;
  /// Named quantities worth reporting (detected windows, reference margins, ...).
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::string> notes;
  std::vector<Certificate> branches;

  /// Value recorded under `name`; throws std::out_of_range when absent.
  double value(std::string_view name) const;
  const Certificate& branch(std::string_view id) const;
  /// Adds a child; the parent keeps the smaller margin and its witness.
  void absorb(Certificate child);
};

struct ScanResult {
  double min_margin = std::numeric_limits<double>::infinity();
  std::vector<double> witness;
  ScanMethod method = ScanMethod::Grid;
  std::size_t evaluations = 0;
};

/// lo, lo + step, ..., hi (hi always included; a degenerate range yields one point).
/// Points within 1e-9 step of zero are snapped to 0.
std::vector<double> axis_points(double lo, double hi, double step);

namespace detail {
void check_box(std::span<const Range> box);
}

/// Minimum of fn over the box. Grid visits every lattice point in lexicographic order;
/// EndpointConcavity visits only the corners, which is exact for concave fn.
/// The witness is the first point attaining the minimum.
template <class F>
ScanResult scan_positive(F&& fn, std::span<const Range> box, const ScanConfig& cfg,
                         ScanMethod method = ScanMethod::Grid) {
  detail::check_box(box);
  const std::size_t dim = box.size();
  std::vector<std::vector<double>> axes(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    if (method == ScanMethod::EndpointConcavity) {
      axes[d] = box[d].lo == box[d].hi ? std::vector<double>{box[d].lo}
                                       : std::vector<double>{box[d].lo, box[d].hi};
    } else {
      axes[d] = axis_points(box[d].lo, box[d].hi, cfg.step);
    }
  }
  ScanResult out;
  out.method = method;
  std::vector<std::size_t> idx(dim, 0);
  std::vector<double> point(dim);
  bool done = false;
  while (!done) {
    for (std::size_t d = 0; d < dim; ++d) point[d] = axes[d][idx[d]];
    const double v = fn(std::span<const double>(point));
    ++out.evaluations;
    if (v < out.min_margin || out.witness.empty()) {
      out.min_margin = v;
      out.witness = point;
    }
    std::size_t d = dim;
    for (;;) {
      if (d == 0) {
        done = true;
        break;
      }
      --d;
      if (++idx[d] < axes[d].size()) break;
      idx[d] = 0;
    }
  }
  if (method == ScanMethod::Grid && cfg.lipschitz > 0.0)
    out.min_margin -= cfg.lipschitz * cfg.step * std::sqrt(static_cast<double>(dim)) / 2.0;
  return out;
}

/// One branch certificate over a box. With `concave`, the corner minimum is computed
/// too and must agree with the grid minimum (the grid contains the corners, so the
/// grid can only be lower, and concavity says it is not).
template <class F>
Certificate certify_box(std::string case_id, std::vector<Range> box, F&& fn, const ScanConfig& cfg,
                        bool concave) {
  Certificate cert;
  cert.case_id = std::move(case_id);
  const ScanResult grid = scan_positive(fn, box, cfg, ScanMethod::Grid);
  cert.min_margin = grid.min_margin;
  for (std::size_t d = 0; d < box.size(); ++d) cert.witness.push_back({box[d].name, grid.witness[d]});
  cert.method = ScanMethod::Grid;
  bool agree = true;
  if (concave) {
    const ScanResult ends = scan_positive(fn, box, cfg, ScanMethod::EndpointConcavity);
    const double gap = ends.min_margin - grid.min_margin;
    cert.values.emplace_back("endpoint_min", ends.min_margin);
    cert.values.emplace_back("grid_min", grid.min_margin);
    cert.values.emplace_back("concavity_gap", gap);
    cert.method = ScanMethod::EndpointConcavity;
    agree = gap <= std::max(cfg.tol, 1e-12) + cfg.lipschitz * cfg.step * std::sqrt(double(box.size()));
    if (!agree) cert.notes.push_back("grid minimum below corner minimum: concavity claim fails");
  }
  cert.passed = agree && cert.min_margin > cfg.tol;
  cert.box = std::move(box);
  return cert;
}

}  // namespace honeycomb
