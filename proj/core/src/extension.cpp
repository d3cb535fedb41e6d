#include "attract/extension.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace attract {

ExtendedMapping::ExtendedMapping(Mapping base, AttractiveApprox approx, double tol)
    : base_(std::move(base)), approx_(std::move(approx)), tol_(tol) {
  if (base_.domain.dim() != approx_.dim) {
    throw std::invalid_argument("ExtendedMapping: domain/approximation dim mismatch");
  }
  if (approx_.whole_space) {
    throw std::invalid_argument(
        "ExtendedMapping: whole-space approximation (every sample fixed); the "
        "extension would be trivial and its fixed set unbounded");
  }
  if (!approx_.feasible) {
    throw std::invalid_argument(
        "ExtendedMapping: infeasible approximation, nothing to project onto");
  }
  if (!(tol_ > 0.0)) throw std::invalid_argument("ExtendedMapping: tol must be positive");
}

bool ExtendedMapping::in_base_branch(const Point& x) const {
  if (!base_.domain.contains(x)) return false;
  const double moved = distance(base_.fn(x), x);
  if (moved > tol_) return true;  // not fixed: C minus Fix
  return approx_.contains(x, tol_);  // fixed: keep only Fix intersect A
}

Point ExtendedMapping::operator()(const Point& x) const {
  if (x.dim() != approx_.dim) {
    throw std::invalid_argument("ExtendedMapping: dimension mismatch");
  }
  if (in_base_branch(x)) return base_.fn(x);
  return project_attractive(approx_, x).point;
}

ExtendedMapping::Branch ExtendedMapping::classify(const Point& x) const {
  if (!base_.domain.contains(x)) return Branch::Projection;
  const double moved = distance(base_.fn(x), x);
  if (moved > 10.0 * tol_) return Branch::Base;
  if (moved > tol_) return Branch::Ambiguous;
  const double v = approx_.membership_violation(x);
  if (std::abs(v) <= 10.0 * tol_ && v > tol_) return Branch::Ambiguous;
  return v <= tol_ ? Branch::Base : Branch::Projection;
}

ExtendedMapping extend(Mapping base, AttractiveApprox approx, double tol) {
  return ExtendedMapping(std::move(base), std::move(approx), tol);
}

ResidualReport verify_extension_fixed_set(const ExtendedMapping& ext,
                                          std::span<const Point> grid) {
  if (grid.empty()) {
    throw std::invalid_argument("verify_extension_fixed_set: empty grid");
  }
  const double tol = ext.tol();
  ResidualReport report;
  report.tol = tol;
  report.note = "fixed iff member";
  for (const Point& g : grid) {
    // Skip tolerance-band points: nearly-fixed base points and points
    // hugging the polytope boundary can land on either side of the split.
    const double mv = ext.approx().membership_violation(g);
    bool band = std::abs(mv) <= 10.0 * tol && std::abs(mv) > tol / 10.0;
    if (!band && ext.base().domain.contains(g)) {
      const double moved = distance(ext.base().fn(g), g);
      band = moved > tol && moved <= 10.0 * tol;
    }
    if (band) {
      ++report.samples_skipped;
      continue;
    }
    const bool member = mv <= tol;
    const double displacement = distance(ext(g), g);
    const bool fixed = displacement <= tol;
    ++report.samples_checked;
    if (member == fixed) continue;
    const double violation = member ? displacement : mv;
    if (violation > report.max_violation) {
      report.max_violation = violation;
      report.witness = {g};
    }
  }
  report.passed = report.max_violation <= tol;
  return report;
}

ResidualReport verify_extension_quasinonexpansive(const ExtendedMapping& ext,
                                                  std::span<const Point> members,
                                                  std::span<const Point> probes,
                                                  double tol) {
  if (members.empty() || probes.empty()) {
    throw std::invalid_argument("verify_extension_quasinonexpansive: empty input");
  }
  for (const Point& m : members) {
    if (!ext.approx().contains(m, ext.tol())) {
      throw std::invalid_argument(
          "verify_extension_quasinonexpansive: " + to_string(m) +
          " is not a member of the approximation");
    }
  }
  ResidualReport report;
  report.tol = tol;
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (const Point& x : probes) {
    const Point ex = ext(x);
    for (const Point& m : members) {
      const double v = distance(ex, m) - distance(x, m);
      ++report.samples_checked;
      if (v > report.max_violation) {
        report.max_violation = v;
        report.witness = {x, m};
      }
    }
  }
  report.passed = report.max_violation <= tol;
  return report;
}

}  // namespace attract
