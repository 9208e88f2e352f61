#pragma once

#include "core/linalg.hpp"
#include "core/sym_basis.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace jetinv {

// k-jet of a germ (C^p, 0) -> (C^q, 0) stored by normalized Taylor
// coefficients: f(u) = sum_s coeffs(:, s) u^s over the basis of
// Sym^{<=k} C^p.  Column order follows SymBasis(p, k).
template <class T>
struct JetMap {
  int p = 0;
  int q = 0;
  int k = 0;
  std::shared_ptr<const SymBasis> source;
  Matrix<T> coeffs;  // q x |source|

  JetMap() = default;
  JetMap(int p_, int q_, int k_) : p(p_), q(q_), k(k_), source(make_sym_basis(p_, k_)) {
    if (q_ < 1) throw InvalidInput("jet target dimension must be >= 1");
    coeffs = Matrix<T>(static_cast<std::size_t>(q_), source->size());
  }

  std::size_t size() const { return source->size(); }
  // Coefficient vector of u^s.
  std::vector<T> at(const std::vector<int>& s) const {
    return coeffs.column(source->position(SymMonomial::from_exponents(s)));
  }
  bool operator==(const JetMap& o) const { return p == o.p && q == o.q && k == o.k && coeffs == o.coeffs; }
};

using RationalJet = JetMap<Rational>;
using PolyJet = JetMap<Polynomial>;

// Product of two truncated series without constant term, indexed by `b`.
template <class T>
std::vector<T> series_mul(const SymBasis& b, const std::vector<T>& x, const std::vector<T>& y) {
  std::vector<T> out(b.size(), T(0));
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (x[i] == T(0)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (y[j] == T(0)) continue;
      const long pos = b.product(i, j);
      if (pos < 0) continue;
      out[static_cast<std::size_t>(pos)] += x[i] * y[j];
    }
  }
  return out;
}

// For every monomial tau over the target coordinates of f (degree <= k),
// the truncated series prod_{i in tau} f_i(u).
template <class T>
std::vector<std::vector<T>> monomial_powers(const JetMap<T>& f) {
  const SymBasis target(f.q, f.k);
  const SymBasis& src = *f.source;
  std::vector<std::vector<T>> out(target.size());
  for (std::size_t t = 0; t < target.size(); ++t) {
    const SymMonomial& tau = target.at(t);
    const auto last = static_cast<std::size_t>(tau.entries.back() - 1);
    std::vector<T> f_last(src.size());
    for (std::size_t s = 0; s < src.size(); ++s) f_last[s] = f.coeffs(last, s);
    if (tau.degree() == 1) {
      out[t] = std::move(f_last);
    } else {
      SymMonomial prefix{std::vector<int>(tau.entries.begin(), tau.entries.end() - 1)};
      out[t] = series_mul(src, out[target.position(prefix)], f_last);
    }
  }
  return out;
}

// g o f truncated at order k.
template <class T>
JetMap<T> compose(const JetMap<T>& g, const JetMap<T>& f) {
  if (g.p != f.q) throw InvalidInput("compose: source of g does not match target of f");
  if (g.k != f.k) throw InvalidInput("compose: order mismatch");
  const auto powers = monomial_powers(f);
  JetMap<T> r(f.p, g.q, f.k);
  const std::size_t n_src = f.size();
  for (std::size_t t = 0; t < powers.size(); ++t) {
    for (int c = 0; c < g.q; ++c) {
      const T& gc = g.coeffs(static_cast<std::size_t>(c), t);
      if (gc == T(0)) continue;
      for (std::size_t s = 0; s < n_src; ++s) {
        if (powers[t][s] == T(0)) continue;
        r.coeffs(static_cast<std::size_t>(c), s) += gc * powers[t][s];
      }
    }
  }
  return r;
}

template <class T>
Matrix<T> linear_part(const JetMap<T>& f) {
  Matrix<T> m(static_cast<std::size_t>(f.q), static_cast<std::size_t>(f.p));
  for (int i = 0; i < f.q; ++i)
    for (int j = 0; j < f.p; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = f.coeffs(i, j);
  return m;
}

inline bool is_invertible(const Matrix<Rational>& m) { return determinant(m) != 0; }
inline bool is_invertible(const Matrix<Polynomial>& m) { return !determinant(m).is_zero(); }

// The matrix M with coeffs(compose(gamma, psi)) = coeffs(gamma) * M for
// every jet gamma; row tau is the series of prod_{i in tau} psi_i.
template <class T>
Matrix<T> group_matrix(const JetMap<T>& psi) {
  if (psi.p != psi.q) throw InvalidInput("reparametrization must map C^p to C^p");
  if (!is_invertible(linear_part(psi))) throw InvalidInput("reparametrization has a singular linear part");
  const auto powers = monomial_powers(psi);
  Matrix<T> m(psi.size(), psi.size());
  for (std::size_t t = 0; t < powers.size(); ++t)
    for (std::size_t s = 0; s < psi.size(); ++s) m(t, s) = powers[t][s];
  return m;
}

template <class T>
JetMap<T> identity_jet(int p, int k) {
  JetMap<T> id(p, p, k);
  for (int i = 0; i < p; ++i) id.coeffs(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = T(1);
  return id;
}

// Inverse in the reparametrization group, by degree-wise back-substitution.
RationalJet invert(const RationalJet& psi);

// Weight s of the coordinate indexed by source monomial s.
std::vector<std::vector<int>> torus_weights(int p, int k);

// Coefficient of u^s multiplied by lambda^s.
RationalJet torus_act(const RationalJet& gamma, const std::vector<Rational>& lambda);

// Variables alpha[j] (p = 1) or alpha[l][s] (p > 1) filling a generic
// reparametrization; psi.coeffs(l-1, s) = alpha[l][s].
PolyJet symbolic_reparam(int p, int k);
// Variables u[i][j] (p = 1) or u[s][j] (p > 1) for a generic jet C^p -> C^n;
// the variable index of coeffs(j-1, s) is s * n + (j-1).
PolyJet symbolic_jet(int p, int n, int k, const std::string& prefix = "u");

// Values aligned with the variables of symbolic_jet(p, n, k).
std::vector<Rational> jet_values(const RationalJet& gamma);
RationalJet evaluate_jet(const PolyJet& f, std::span<const Rational> values);
PolyJet promote(const RationalJet& f, const VarSetPtr& vars);

// Closed-form entries of the reparametrization matrix over the variables of
// symbolic_reparam.
Polynomial gk_entry(int i, int j, const VarSetPtr& alpha);
Polynomial gkp_entry(const SymMonomial& tau, const std::vector<int>& nu, int p, const VarSetPtr& alpha);

enum class ReparamKind { general, unipotent, special };

RationalJet random_jet(int p, int q, int k, std::mt19937_64& rng, int bound);
// Regular jets have an injective linear part.
RationalJet random_regular_jet(int p, int q, int k, std::mt19937_64& rng, int bound);
RationalJet random_reparam(int p, int k, ReparamKind kind, std::mt19937_64& rng, int bound);

}  // namespace jetinv
