#pragma once

#include "core/flag.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jetinv {

struct InvariantPoly {
  Polynomial poly;
  int n = 0;
  int k = 0;
  int p = 1;
  std::vector<int> weighted_degree;  // length p
  int ordinary_degree = 0;
  // Provenance: the row monomials of the minor and the number of leading
  // columns it uses.
  std::vector<SymMonomial> rows;
  int columns = 0;
};

// Flag Plücker coordinates of phi applied to the generic jet: for p = 1 all
// s x s minors on the first s columns (s = 1..k); for p > 1 the maximal
// minors.  Deduplicated up to a nonzero scalar, in wedge-key order.
// Throws ResourceLimit when the expansion exceeds `ceiling` term products
// (0 means unlimited).
std::vector<InvariantPoly> generator_set(int n, int k, int p, std::uint64_t ceiling = 5'000'000);

// Weight of each variable of symbolic_jet(p, n, k).
std::vector<std::vector<int>> jet_variable_weights(int p, int n, int k);
bool is_weighted_homogeneous(const Polynomial& q, const std::vector<std::vector<int>>& weights,
                             const std::vector<int>& degree);

struct InvarianceWitness {
  std::string kind;  // "reparametrization" or "torus"
  RationalJet gamma;
  std::optional<RationalJet> psi;
  std::vector<Rational> lambda;
  Rational before;
  Rational after;
};

struct InvarianceReport {
  bool passed = true;
  int trials_run = 0;
  std::optional<InvarianceWitness> witness;
};

// Exact randomized check of Q(gamma o psi) = Q(gamma) with psi unipotent
// (p = 1) or with unimodular linear part (p > 1), plus torus homogeneity.
InvarianceReport verify_invariance(const InvariantPoly& q, int trials, std::uint64_t seed, int coeff_bound = 20);

// Same checks for many polynomials over one jet space, sharing the random
// points and the monomial evaluations.
std::vector<InvarianceReport> verify_invariance_batch(const std::vector<InvariantPoly>& qs, int trials,
                                                      std::uint64_t seed, int coeff_bound = 20);

// Q(f o psi) == Q(f) as polynomials for the generic jet f and the generic
// unipotent (p = 1) reparametrization psi.  Small sizes only.
bool verify_invariance_symbolic(const InvariantPoly& q);

struct TestCurveSystem {
  int p = 1;
  int n = 0;
  int k = 0;
  int N = 1;
  RationalMatrix matrix;
  // Row (output monomial, target coordinate) and column (Sym monomial of
  // Psi, target coordinate) labels, coordinates 1-based.
  std::vector<std::pair<SymMonomial, int>> row_labels;
  std::vector<std::pair<SymMonomial, int>> col_labels;
};

// Variables psi[tau][c] for a generic jet C^n -> C^N over the basis of
// Sym^{<=k} C^n; variable index tau_pos * N + (c - 1).
std::vector<std::string> psi_variable_names(int n, int k, int N);

// Coefficients of Psi o gamma for the generic Psi, as polynomials over the
// variable set of gamma (which must contain the psi variables first).
std::vector<Polynomial> test_curve_equations(const PolyJet& gamma, int N, const VarSetPtr& vars);

TestCurveSystem test_curve_system(const RationalJet& gamma, int N);

// Annihilator of the column span of phi(gamma), tensored with C^N, written
// in the psi coordinates.
RationalMatrix perp_system(const RationalJet& gamma, int N);

bool solution_space_equals_perp(const RationalJet& gamma, int N);

}  // namespace jetinv
