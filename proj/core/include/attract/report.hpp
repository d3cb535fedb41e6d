#pragma once

#include <string>
#include <vector>

#include "attract/point.hpp"

namespace attract {

/// Outcome of checking a pointwise inequality over a finite sample family.
/// `witness` holds the sample (or pair of samples) realizing max_violation;
/// it is empty only when every sample was skipped as ambiguous.
struct ResidualReport {
  double max_violation = 0.0;
  std::vector<Point> witness;
  int samples_checked = 0;
  int samples_skipped = 0;
  double tol = 0.0;
  bool passed = false;
  std::string note;
};

}  // namespace attract
