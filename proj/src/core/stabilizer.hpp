#pragma once

#include "core/orbit.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jetinv {

enum class LieAlgebra { gl, sl };
enum class StabilizerMode { affine, projective };

// w^{(x) a} (x) (e_1 ^ ... ^ e_twist_rank)^{(x) b}.
struct TwistedPoint {
  WedgeVector wedge;
  int a = 1;
  int b = 0;
  int twist_rank = 1;
};

struct StabilizerResult {
  std::size_t dimension = 0;
  std::vector<RationalMatrix> basis;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
};

// Kernel of X -> X.w (affine) or of (X, c) -> X.w - c w (projective) over
// gl(n) or sl(n), where X acts on Sym^{<=k} C^n as a derivation and on the
// wedge by the Leibniz rule.
StabilizerResult infinitesimal_stabilizer(const WedgeVector& w, LieAlgebra algebra, StabilizerMode mode);

// Twisted version.  X annihilates w^a (x) L^b, L = e_1 ^ ... ^ e_r, exactly
// when X preserves span(e_1..e_r) and X.w = -(b / a) c w with c the trace of
// X on that span: the summands with X.w - mu w outside C w in one slot, or
// with X e_i leaving the span in one slot, are linearly independent of each
// other and of w^a (x) L^b.  Projective mode frees the scalar: X.w in C w.
StabilizerResult infinitesimal_stabilizer(const TwistedPoint& x, LieAlgebra algebra, StabilizerMode mode);

// Whether X.w is a multiple of w.
bool fixes_projectively(const RationalMatrix& x, const WedgeVector& w);

struct ExtraCheck {
  int case_number = 0;
  std::string description;
  bool fixes_limit_point = false;
  bool fixes_projectively = false;
  bool independent = false;
  // Dimension of the span of the limit-stabilizer directions, the torus
  // direction diag(d(i)) and the extra direction, intersected with sl(k).
  std::size_t sl_span_dim = 0;
};

// Checks the extra transformation for lambda^sigma at `trials` random zeta.
ExtraCheck check_extra_stabilizer(int sigma, int k, int trials, std::uint64_t seed, int coeff_bound = 20);

struct Candidate {
  std::string kind;  // "lambda" or "mu"
  int sigma = 0;
  bool closed_form_matches = false;
  std::size_t proj_stab_dim = 0;
  long orbit_codim = 0;
  bool bound_ok = false;
  std::optional<ExtraCheck> extra;
};

struct CodimReport {
  int k = 0;
  int M = 0;
  int K = 0;
  std::size_t base_stabilizer_dim = 0;     // affine sl(k), twisted by e_1^K
  std::size_t base_projective_dim = 0;     // projective sl(k) stabilizer of p_k
  std::size_t open_orbit_dim = 0;
  bool theorem_applies = false;            // k >= 4
  std::vector<Candidate> candidates;
  bool all_bounds_ok() const;
};

CodimReport codim_report(int k, int M, std::uint64_t seed = 0, int coeff_bound = 20);

struct ProbeReport {
  int p = 0;
  int k = 0;
  int M = 0;
  int n = 0;
  int K = 0;
  std::size_t measured_dim = 0;
  std::size_t predicted_dim = 0;
  std::size_t sl_dim = 0;
  std::uint64_t cost = 0;
  bool matches() const { return measured_dim == predicted_dim; }
};

// n^2 * (terms of the point) * (wedge rank) for the probe at (p, k).
std::uint64_t probe_cost(int p, int k);
constexpr std::uint64_t kDefaultProbeCeiling = 600'000;

ProbeReport p1_probe_conjecture(int p, int k, int M, bool force = false,
                                std::uint64_t ceiling = kDefaultProbeCeiling);

}  // namespace jetinv
