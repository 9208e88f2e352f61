#include "core/jet.hpp"

namespace jetinv {

RationalJet invert(const RationalJet& psi) {
  if (psi.p != psi.q) throw InvalidInput("reparametrization must map C^p to C^p");
  const RationalMatrix lin = linear_part(psi);
  if (determinant(lin) == 0) throw InvalidInput("reparametrization has a singular linear part");
  const RationalMatrix lin_inv = inverse(lin);
  const auto p = static_cast<std::size_t>(psi.p);

  RationalJet phi(psi.p, psi.p, psi.k);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) phi.coeffs(i, j) = lin_inv(i, j);
  for (int d = 2; d <= psi.k; ++d) {
    // With the degree-d part of phi still zero, the degree-d part of
    // psi o phi is the contribution of lower degrees alone.
    const RationalJet partial = compose(psi, phi);
    const auto [begin, end] = psi.source->block(d);
    for (std::size_t s = begin; s < end; ++s) {
      for (std::size_t i = 0; i < p; ++i) {
        Rational v = 0;
        for (std::size_t j = 0; j < p; ++j) v -= lin_inv(i, j) * partial.coeffs(j, s);
        phi.coeffs(i, s) = v;
      }
    }
  }
  return phi;
}

std::vector<std::vector<int>> torus_weights(int p, int k) {
  const SymBasis b(p, k);
  std::vector<std::vector<int>> w;
  for (const auto& m : b.elements()) w.push_back(m.exponents(p));
  return w;
}

RationalJet torus_act(const RationalJet& gamma, const std::vector<Rational>& lambda) {
  if (static_cast<int>(lambda.size()) != gamma.p) throw InvalidInput("torus element has the wrong dimension");
  RationalJet r = gamma;
  for (std::size_t s = 0; s < gamma.size(); ++s) {
    Rational scale = 1;
    for (int i : gamma.source->at(s).entries) scale *= lambda[static_cast<std::size_t>(i - 1)];
    for (int c = 0; c < gamma.q; ++c) r.coeffs(static_cast<std::size_t>(c), s) *= scale;
  }
  return r;
}

PolyJet symbolic_reparam(int p, int k) {
  const SymBasis b(p, k);
  std::vector<std::string> names;
  for (int l = 1; l <= p; ++l) {
    for (const auto& m : b.elements()) {
      if (p == 1) {
        names.push_back("alpha[" + std::to_string(m.degree()) + "]");
      } else {
        names.push_back("alpha[" + std::to_string(l) + "]" + exponent_key(m.exponents(p)));
      }
    }
  }
  auto vars = make_variables(std::move(names));
  PolyJet psi(p, p, k);
  std::size_t idx = 0;
  for (int l = 0; l < p; ++l)
    for (std::size_t s = 0; s < b.size(); ++s) psi.coeffs(static_cast<std::size_t>(l), s) = Polynomial::variable(vars, idx++);
  return psi;
}

PolyJet symbolic_jet(int p, int n, int k, const std::string& prefix) {
  const SymBasis b(p, k);
  std::vector<std::string> names;
  for (const auto& m : b.elements()) {
    const std::string head = p == 1 ? "[" + std::to_string(m.degree()) + "]" : exponent_key(m.exponents(p));
    for (int j = 1; j <= n; ++j) names.push_back(prefix + head + "[" + std::to_string(j) + "]");
  }
  auto vars = make_variables(std::move(names));
  PolyJet f(p, n, k);
  for (std::size_t s = 0; s < b.size(); ++s)
    for (int j = 0; j < n; ++j)
      f.coeffs(static_cast<std::size_t>(j), s) = Polynomial::variable(vars, s * static_cast<std::size_t>(n) + static_cast<std::size_t>(j));
  return f;
}

std::vector<Rational> jet_values(const RationalJet& gamma) {
  std::vector<Rational> v;
  v.reserve(gamma.size() * static_cast<std::size_t>(gamma.q));
  for (std::size_t s = 0; s < gamma.size(); ++s)
    for (int j = 0; j < gamma.q; ++j) v.push_back(gamma.coeffs(static_cast<std::size_t>(j), s));
  return v;
}

RationalJet evaluate_jet(const PolyJet& f, std::span<const Rational> values) {
  RationalJet r(f.p, f.q, f.k);
  for (std::size_t i = 0; i < f.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < f.coeffs.cols(); ++j) r.coeffs(i, j) = f.coeffs(i, j).evaluate(values);
  return r;
}

PolyJet promote(const RationalJet& f, const VarSetPtr& vars) {
  PolyJet r(f.p, f.q, f.k);
  for (std::size_t i = 0; i < f.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < f.coeffs.cols(); ++j) r.coeffs(i, j) = Polynomial(vars, f.coeffs(i, j));
  return r;
}

Polynomial gk_entry(int i, int j, const VarSetPtr& alpha) {
  Polynomial r(alpha, Rational(0));
  for (const auto& comp : compositions(j, i)) {
    Polynomial term(alpha, Rational(1));
    for (int part : comp) term *= Polynomial::variable(alpha, "alpha[" + std::to_string(part) + "]");
    r += term;
  }
  return r;
}

Polynomial gkp_entry(const SymMonomial& tau, const std::vector<int>& nu, int p, const VarSetPtr& alpha) {
  if (static_cast<int>(nu.size()) != p) throw InvalidInput("multi-index has the wrong length");
  Polynomial r(alpha, Rational(0));
  for (const auto& pieces : vector_compositions(nu, tau.degree())) {
    Polynomial term(alpha, Rational(1));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const std::string name = p == 1 ? "alpha[" + std::to_string(pieces[i][0]) + "]"
                                      : "alpha[" + std::to_string(tau.entries[i]) + "]" + exponent_key(pieces[i]);
      term *= Polynomial::variable(alpha, name);
    }
    r += term;
  }
  return r;
}

RationalJet random_jet(int p, int q, int k, std::mt19937_64& rng, int bound) {
  RationalJet f(p, q, k);
  for (std::size_t i = 0; i < f.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < f.coeffs.cols(); ++j) f.coeffs(i, j) = random_rational(rng, bound);
  return f;
}

RationalJet random_regular_jet(int p, int q, int k, std::mt19937_64& rng, int bound) {
  if (q < p) throw InvalidInput("regular jets need target dimension >= source dimension");
  for (;;) {
    RationalJet f = random_jet(p, q, k, rng, bound);
    if (rank(linear_part(f)) == static_cast<std::size_t>(p)) return f;
  }
}

RationalJet random_reparam(int p, int k, ReparamKind kind, std::mt19937_64& rng, int bound) {
  RationalJet psi = random_jet(p, p, k, rng, bound);
  const auto n = static_cast<std::size_t>(p);
  switch (kind) {
    case ReparamKind::unipotent:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) psi.coeffs(i, j) = i == j ? 1 : 0;
      break;
    case ReparamKind::special: {
      // Unit lower * diagonal * unit upper with determinant one.
      RationalMatrix lo = RationalMatrix::identity(n);
      RationalMatrix up = RationalMatrix::identity(n);
      RationalMatrix diag = RationalMatrix::identity(n);
      Rational prod = 1;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        diag(i, i) = random_nonzero_rational(rng, bound);
        prod *= diag(i, i);
      }
      diag(n - 1, n - 1) = 1 / prod;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          lo(i, j) = random_rational(rng, bound);
          up(j, i) = random_rational(rng, bound);
        }
      }
      const RationalMatrix lin = lo * diag * up;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) psi.coeffs(i, j) = lin(i, j);
      break;
    }
    case ReparamKind::general:
      while (determinant(linear_part(psi)) == 0) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) psi.coeffs(i, j) = random_rational(rng, bound);
      }
      break;
  }
  return psi;
}

}  // namespace jetinv
