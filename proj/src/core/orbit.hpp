#pragma once

#include "core/eps_weight.hpp"
#include "core/flag.hpp"

#include <string>
#include <vector>

namespace jetinv {

// Minimal-weight part of w under lambda; the factors of w index
// Sym^{<=k} C^k.  Throws InvalidInput for w = 0.
WedgeVector limit_point(const WedgeVector& w, const OneParamSubgroup& lambda);

enum class LimitKind { regular, degenerate };

// Wedge over i = 1..k of the sums perm(tau) e_tau over partitions tau of i
// with d(tau) = d(i) (regular) or sigma not in tau (degenerate).
WedgeVector z_closed_form(int sigma, int k, LimitKind kind);

// Columns of the distinguished point for p = 1, as Sym elements.
std::vector<SymElement> distinguished_columns(int k);

// Number of i whose minimal-weight column part is exactly e_i.
int toral_dimension(const OneParamSubgroup& lambda, int k);

struct LimitStabilizer {
  int sigma = 0;
  int k = 0;
  VarSetPtr beta;                            // beta[1..k]
  PolyMatrix matrix;                         // t -> 0 limit, k x k
  std::vector<EpsWeight> n;                  // n_1..n_k at index 0..k-1
  std::vector<std::vector<EpsWeight>> min_exponent;  // per entry, smallest t-power (j >= i)

  RationalMatrix evaluate(const std::vector<Rational>& beta_values) const;
  // d/d beta_m at beta = (1, 0, ..., 0), m = 1..k.
  std::vector<RationalMatrix> lie_directions() const;
};

// Throws ViolatedExpectation if a negative t-power appears.
LimitStabilizer limit_stabilizer_matrix(int sigma, int k);

// theta(i) attaining the maximum that defines n_i (the smallest such j).
int theta(const OneParamSubgroup& lambda, int i);

struct ExtraStabilizer {
  int sigma = 0;
  int k = 0;
  int case_number = 0;  // 1, 2 or 3
  VarSetPtr zeta;
  PolyMatrix matrix;           // T(zeta), k x k, column j = image of e_j
  RationalMatrix direction;    // dT/dzeta
  std::string description;

  RationalMatrix evaluate(const Rational& zeta_value) const;
};

// Throws InvalidInput outside the three cases.
ExtraStabilizer extra_stabilizer(int sigma, int k);

}  // namespace jetinv
