#pragma once

#include <span>

#include "attract/attractive_set.hpp"
#include "attract/mapping.hpp"
#include "attract/report.hpp"

namespace attract {

/// Extension of T from its domain C to all of R^d:
///   ext x = Tx          on D = (C minus Fix) union (Fix intersect A),
///   ext x = P_A x       elsewhere,
/// where Fix is detected pointwise via ||Tx - x|| <= tol and A is the
/// polytope approximation. The extension's fixed-point set is A itself, and
/// the extension is quasinonexpansive with respect to it.
///
/// Pointwise classification works at tolerance `tol` for both fixedness and
/// membership. Points whose displacement lands in (tol, 10 tol], or which sit
/// within 10 tol of the polytope boundary while looking fixed, are flagged
/// Ambiguous: evaluation still uses the strict split at tol, but verification
/// skips them instead of letting tolerance artifacts masquerade as
/// counterexamples.
class ExtendedMapping {
 public:
  enum class Branch { Base, Projection, Ambiguous };

  ExtendedMapping(Mapping base, AttractiveApprox approx, double tol = kFixedTol);

  Point operator()(const Point& x) const;
  Branch classify(const Point& x) const;
  bool in_base_branch(const Point& x) const;

  const Mapping& base() const { return base_; }
  const AttractiveApprox& approx() const { return approx_; }
  double tol() const { return tol_; }

 private:
  Mapping base_;
  AttractiveApprox approx_;
  double tol_;
};

ExtendedMapping extend(Mapping base, AttractiveApprox approx, double tol = kFixedTol);

/// Checks that the extension's fixed points are exactly the polytope members:
/// every grid point must be fixed iff it lies in the approximation.
/// Ambiguous-band points count as skipped. The violation reported for a
/// mismatch is the displacement (member that moves) or the membership
/// distance (non-member that stays put).
ResidualReport verify_extension_fixed_set(const ExtendedMapping& ext,
                                          std::span<const Point> grid);

/// Checks || ext x - z || <= || x - z || for every probe x and member z.
/// Members must lie in the approximation at the extension's tolerance.
ResidualReport verify_extension_quasinonexpansive(const ExtendedMapping& ext,
                                                  std::span<const Point> members,
                                                  std::span<const Point> probes,
                                                  double tol = kResidualTol);

}  // namespace attract
