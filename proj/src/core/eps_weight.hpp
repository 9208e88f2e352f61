#pragma once

#include "core/rational.hpp"
#include "core/sym_basis.hpp"

#include <compare>
#include <string>
#include <vector>

namespace jetinv {

// a + b*eps with eps a positive infinitesimal; ordered lexicographically.
struct EpsWeight {
  Rational a = 0;
  Rational b = 0;

  EpsWeight() = default;
  EpsWeight(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT

  friend EpsWeight operator+(const EpsWeight& x, const EpsWeight& y) { return {x.a + y.a, x.b + y.b}; }
  friend EpsWeight operator-(const EpsWeight& x, const EpsWeight& y) { return {x.a - y.a, x.b - y.b}; }
  friend EpsWeight operator*(long c, const EpsWeight& x) { return {c * x.a, c * x.b}; }
  EpsWeight& operator+=(const EpsWeight& y) {
    a += y.a;
    b += y.b;
    return *this;
  }
  friend bool operator==(const EpsWeight& x, const EpsWeight& y) { return x.a == y.a && x.b == y.b; }
  friend std::strong_ordering operator<=>(const EpsWeight& x, const EpsWeight& y) {
    if (x.a != y.a) return x.a < y.a ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.b != y.b) return x.b < y.b ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return a == 0 && b == 0; }
  // Numeric value at a concrete eps.
  Rational at(const Rational& eps) const { return a + b * eps; }
  std::string to_string() const;
};

using OneParamSubgroup = std::vector<EpsWeight>;

EpsWeight weight_of(const OneParamSubgroup& lambda, const SymMonomial& tau);

// lambda^sigma_i = i - floor(i / sigma) eps, 2 <= sigma <= k.
OneParamSubgroup lambda_sigma(int sigma, int k);
// mu^sigma_i = i, except mu^sigma_sigma = sigma + eps, 2 <= sigma <= k - 1.
OneParamSubgroup mu_sigma(int sigma, int k);
// (1, 2, ..., k).
OneParamSubgroup lambda_tilde(int k);
// Replaces the formal eps by a rational number.
OneParamSubgroup substitute_eps(const OneParamSubgroup& lambda, const Rational& eps);

struct Head {
  int index = 0;  // 0 when lambda is proportional to (1, ..., k)
  bool regular = false;
};
// First i with lambda_i != i * lambda_1; regular when lambda_i falls below.
Head head(const OneParamSubgroup& lambda);

// rho_j = j lambda_1 - lambda_j, j = 1..k (index 0 unused).
std::vector<EpsWeight> rho(const OneParamSubgroup& lambda);
// rho_{i_1} + ... + rho_{i_s} <= rho_j for every partition of every j <= k - 1.
bool rho_superadditive(const OneParamSubgroup& lambda);

}  // namespace jetinv
