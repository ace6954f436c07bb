#include "honeycomb/scan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace honeycomb {

void ScanConfig::validate() const {
  if (!(step > 0.0)) throw PreconditionError("ScanConfig: step must be > 0");
  if (!(tol >= 0.0)) throw PreconditionError("ScanConfig: tol must be >= 0");
  if (n_max < 8) throw PreconditionError("ScanConfig: n_max must be >= 8");
  if (!(lipschitz >= 0.0)) throw PreconditionError("ScanConfig: lipschitz must be >= 0");
}

std::string_view to_string(ScanMethod method) {
  switch (method) {
    case ScanMethod::Grid: return "grid";
    case ScanMethod::EndpointConcavity: return "endpoint-concavity";
    case ScanMethod::InequalityChain: return "inequality-chain";
  }
  return "?";
}

double Certificate::value(std::string_view name) const {
  for (const auto& [k, v] : values)
    if (k == name) return v;
  throw std::out_of_range("certificate " + case_id + " has no value " + std::string(name));
}

const Certificate& Certificate::branch(std::string_view id) const {
  for (const auto& b : branches)
    if (b.case_id == id) return b;
  throw std::out_of_range("certificate " + case_id + " has no branch " + std::string(id));
}

void Certificate::absorb(Certificate child) {
  if (branches.empty()) passed = true;
  passed = passed && child.passed;
  if (child.min_margin < min_margin) {
    min_margin = child.min_margin;
    witness = child.witness;
  }
  branches.push_back(std::move(child));
}

std::vector<double> axis_points(double lo, double hi, double step) {
  if (!(step > 0.0)) throw PreconditionError("axis_points: step must be > 0");
  if (!(lo <= hi)) throw PreconditionError("axis_points: lo must be <= hi");
  std::vector<double> pts;
  if (lo == hi) return {lo};
  const auto n = static_cast<long long>(std::ceil((hi - lo) / step - 1e-9));
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (long long i = 0; i < n; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    // Lattice points that are zero in exact arithmetic land on exactly 0.
    pts.push_back(std::abs(v) < 1e-9 * step ? 0.0 : v);
  }
  pts.push_back(hi);
  return pts;
}

namespace detail {
void check_box(std::span<const Range> box) {
  if (box.empty()) throw PreconditionError("scan: box has no axes");
  for (const auto& r : box)
    if (!(r.lo <= r.hi)) throw PreconditionError("scan: empty range on axis " + r.name);
}
}  // namespace detail

}  // namespace honeycomb
