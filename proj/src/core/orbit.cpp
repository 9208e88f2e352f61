#include "core/orbit.hpp"

#include <algorithm>

namespace jetinv {

WedgeVector limit_point(const WedgeVector& w, const OneParamSubgroup& lambda) {
  if (w.is_zero()) throw InvalidInput("limit of the zero vector");
  const SymBasis basis(w.n, w.k);
  if (static_cast<int>(lambda.size()) != w.n) throw InvalidInput("weight vector length differs from the ambient dimension");
  std::vector<EpsWeight> cache(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) cache[i] = weight_of(lambda, basis.at(i));
  WedgeVector out;
  out.n = w.n;
  out.k = w.k;
  out.r = w.r;
  bool have = false;
  EpsWeight best;
  for (const auto& [key, c] : w.terms) {
    EpsWeight t;
    for (auto pos : key) t += cache[pos];
    if (!have || t < best) {
      best = t;
      have = true;
      out.terms.clear();
    }
    if (t == best) out.terms.emplace(key, c);
  }
  return out;
}

std::vector<SymElement> distinguished_columns(int k) {
  const SymBasis basis(k, k);
  std::vector<SymElement> cols;
  for (int i = 1; i <= k; ++i) {
    SymElement col;
    for (const auto& tau : partitions_of(i)) col[basis.position(SymMonomial{tau.parts})] = Rational(perm(tau));
    cols.push_back(std::move(col));
  }
  return cols;
}

WedgeVector z_closed_form(int sigma, int k, LimitKind kind) {
  if (kind == LimitKind::regular && (sigma < 2 || sigma > k)) throw InvalidInput("regular kind needs 2 <= sigma <= k");
  if (kind == LimitKind::degenerate && (sigma < 2 || sigma > k - 1)) {
    throw InvalidInput("degenerate kind needs 2 <= sigma <= k - 1");
  }
  const SymBasis basis(k, k);
  std::vector<SymElement> cols;
  for (int i = 1; i <= k; ++i) {
    SymElement col;
    for (const auto& tau : partitions_of(i)) {
      const bool keep = kind == LimitKind::regular
                            ? defect_of_partition(sigma, tau) == defect(sigma, i)
                            : std::find(tau.parts.begin(), tau.parts.end(), sigma) == tau.parts.end();
      if (keep) col[basis.position(SymMonomial{tau.parts})] = Rational(perm(tau));
    }
    cols.push_back(std::move(col));
  }
  return wedge_sparse(k, k, cols);
}

int toral_dimension(const OneParamSubgroup& lambda, int k) {
  if (static_cast<int>(lambda.size()) != k) throw InvalidInput("weight vector length differs from k");
  const SymBasis basis(k, k);
  int count = 0;
  const auto cols = distinguished_columns(k);
  for (int i = 1; i <= k; ++i) {
    const auto& col = cols[static_cast<std::size_t>(i - 1)];
    EpsWeight best;
    bool have = false;
    std::vector<std::size_t> minimal;
    for (const auto& [pos, c] : col) {
      const EpsWeight w = weight_of(lambda, basis.at(pos));
      if (!have || w < best) {
        best = w;
        have = true;
        minimal.clear();
      }
      if (w == best) minimal.push_back(pos);
    }
    if (minimal.size() == 1 && minimal.front() == basis.linear(i)) ++count;
  }
  return count;
}

RationalMatrix LimitStabilizer::evaluate(const std::vector<Rational>& beta_values) const {
  RationalMatrix g(matrix.rows(), matrix.cols());
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) g(i, j) = matrix(i, j).evaluate(beta_values);
  return g;
}

std::vector<RationalMatrix> LimitStabilizer::lie_directions() const {
  std::vector<Rational> at(static_cast<std::size_t>(k), Rational(0));
  at[0] = 1;
  std::vector<RationalMatrix> dirs;
  for (std::size_t m = 0; m < static_cast<std::size_t>(k); ++m) {
    RationalMatrix d(matrix.rows(), matrix.cols());
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      for (std::size_t j = 0; j < matrix.cols(); ++j) d(i, j) = matrix(i, j).derivative(m).evaluate(at);
    dirs.push_back(std::move(d));
  }
  return dirs;
}

int theta(const OneParamSubgroup& lambda, int i) {
  const int k = static_cast<int>(lambda.size());
  int best_j = 1;
  EpsWeight best;
  for (int j = 1; j + i - 1 <= k; ++j) {
    const EpsWeight d = lambda[static_cast<std::size_t>(j + i - 2)] - lambda[static_cast<std::size_t>(j - 1)];
    if (j == 1 || d > best) {
      best = d;
      best_j = j;
    }
  }
  return best_j;
}

LimitStabilizer limit_stabilizer_matrix(int sigma, int k) {
  const OneParamSubgroup lambda = lambda_sigma(sigma, k);
  LimitStabilizer out;
  out.sigma = sigma;
  out.k = k;
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("beta[" + std::to_string(i) + "]");
  out.beta = make_variables(names);

  out.n.assign(static_cast<std::size_t>(k), EpsWeight());
  for (int i = 2; i <= k; ++i) {
    EpsWeight best;
    for (int j = 1; j + i - 1 <= k; ++j) {
      const EpsWeight d = lambda[static_cast<std::size_t>(j + i - 2)] - lambda[static_cast<std::size_t>(j - 1)];
      if (j == 1 || d > best) best = d;
    }
    out.n[static_cast<std::size_t>(i - 1)] = best;
  }

  const auto uk = static_cast<std::size_t>(k);
  out.matrix = PolyMatrix(uk, uk, Polynomial(out.beta, Rational(0)));
  out.min_exponent.assign(uk, std::vector<EpsWeight>(uk));
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      Polynomial entry(out.beta, Rational(0));
      bool first = true;
      EpsWeight lowest;
      for (const auto& comp : compositions(j, i)) {
        EpsWeight e = lambda[static_cast<std::size_t>(i - 1)] - lambda[static_cast<std::size_t>(j - 1)];
        Exponents mono(uk, 0);
        for (int a : comp) {
          e += out.n[static_cast<std::size_t>(a - 1)];
          ++mono[static_cast<std::size_t>(a - 1)];
        }
        if (first || e < lowest) lowest = e;
        first = false;
        if (e < EpsWeight()) {
          throw ViolatedExpectation("negative t-power in limit stabilizer entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + "): " + e.to_string());
        }
        if (e.is_zero()) entry += Polynomial::monomial(out.beta, mono, Rational(1));
      }
      out.matrix(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = entry;
      out.min_exponent[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = lowest;
    }
  }
  return out;
}

RationalMatrix ExtraStabilizer::evaluate(const Rational& zeta_value) const {
  RationalMatrix g(matrix.rows(), matrix.cols());
  const std::vector<Rational> v{zeta_value};
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) g(i, j) = matrix(i, j).evaluate(v);
  return g;
}

ExtraStabilizer extra_stabilizer(int sigma, int k) {
  if (sigma < 2 || sigma > k) throw InvalidInput("extra stabilizer needs 2 <= sigma <= k");
  ExtraStabilizer out;
  out.sigma = sigma;
  out.k = k;
  out.zeta = make_variables({"zeta"});
  const auto uk = static_cast<std::size_t>(k);
  out.matrix = PolyMatrix(uk, uk, Polynomial(out.zeta, Rational(0)));
  for (std::size_t i = 0; i < uk; ++i) out.matrix(i, i) = Polynomial(out.zeta, Rational(1));
  const Polynomial z = Polynomial::variable(out.zeta, 0);
  // Entry (a, b) is the coefficient of e_a in the image of e_b (1-based).
  auto set = [&](int a, int b) { out.matrix(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = z; };
  const auto s = std::to_string(sigma);
  if (sigma == k) {
    out.case_number = 1;
    set(k, k - 1);
    out.description = "e" + std::to_string(k - 1) + " -> e" + std::to_string(k - 1) + " + zeta e" + std::to_string(k);
  } else if ((k + 1) % sigma != 0) {
    out.case_number = 2;
    set(sigma, k);
    out.description = "e" + std::to_string(k) + " -> e" + std::to_string(k) + " + zeta e" + s;
  } else if (k >= 4 && k - 1 > sigma) {
    out.case_number = 3;
    set(sigma, k - 1);
    set(sigma + 1, k);
    out.description = "e" + std::to_string(k - 1) + " -> e" + std::to_string(k - 1) + " + zeta e" + s + ", e" +
                      std::to_string(k) + " -> e" + std::to_string(k) + " + zeta e" + std::to_string(sigma + 1);
  } else {
    throw InvalidInput("(sigma, k) = (" + s + ", " + std::to_string(k) + ") lies outside the three cases");
  }
  out.direction = RationalMatrix(uk, uk);
  for (std::size_t i = 0; i < uk; ++i)
    for (std::size_t j = 0; j < uk; ++j) out.direction(i, j) = out.matrix(i, j).derivative(0).constant_term();
  return out;
}

}  // namespace jetinv
