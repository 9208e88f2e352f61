#pragma once

#include "core/linalg.hpp"

#include <string>
#include <vector>

namespace jetinv {

struct LpResult {
  enum class Status { infeasible, unbounded, optimal };
  Status status = Status::infeasible;
  Rational value = 0;
  RationalVector x;
};

// maximize c.x subject to A x = b, x >= 0; exact two-phase simplex with
// Bland's rule.
LpResult lp_maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

enum class Stability { unstable, semistable_not_stable, stable };

std::string to_string(Stability s);

// Position of the origin relative to the convex hull of the weights:
// outside (unstable), on the boundary (semistable, not stable), or in the
// interior (stable).
Stability hilbert_mumford_torus(const std::vector<std::vector<long>>& weights);

}  // namespace jetinv
