#include "core/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jetinv {

namespace {

std::uint64_t expansion_cost(const PhiMatrix<Polynomial>& m, std::size_t columns) {
  std::uint64_t cost = 1;
  for (std::size_t c = 0; c < columns; ++c) {
    std::uint64_t nz = 0;
    for (std::size_t r = 0; r < m.m.rows(); ++r) nz += m.m(r, c).is_zero() ? 0 : 1;
    cost *= std::max<std::uint64_t>(nz, 1);
    if (cost > (1ull << 40)) break;
  }
  return cost;
}

}  // namespace

std::vector<InvariantPoly> generator_set(int n, int k, int p, std::uint64_t ceiling) {
  if (n < 1 || k < 1 || p < 1) throw InvalidInput("generator_set needs n, k, p >= 1");
  const PolyJet f = symbolic_jet(p, n, k);
  const PhiMatrix<Polynomial> m = phi(f);
  const SymBasis& rows = *m.target;
  const SymBasis& cols = *m.source;

  std::vector<std::size_t> sizes;
  if (p == 1) {
    for (int s = 1; s <= k; ++s) sizes.push_back(static_cast<std::size_t>(s));
  } else {
    sizes.push_back(cols.size());
  }

  std::vector<InvariantPoly> out;
  std::set<Polynomial::TermMap> seen;
  for (std::size_t s : sizes) {
    if (s > rows.size()) continue;
    if (ceiling != 0 && expansion_cost(m, s) > ceiling) {
      throw ResourceLimit("generator expansion exceeds the configured ceiling");
    }
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    std::vector<int> wdeg(static_cast<std::size_t>(p), 0);
    for (std::size_t c = 0; c < s; ++c) {
      const auto e = cols.at(c).exponents(p);
      for (int i = 0; i < p; ++i) wdeg[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i)];
    }
    for (auto& [key, poly] : wedge_columns(m, idx).terms) {
      if (!seen.insert(poly.monic().terms()).second) continue;
      InvariantPoly q;
      q.poly = poly;
      q.n = n;
      q.k = k;
      q.p = p;
      q.weighted_degree = wdeg;
      q.columns = static_cast<int>(s);
      for (auto r : key) {
        q.rows.push_back(rows.at(r));
        q.ordinary_degree += rows.at(r).degree();
      }
      out.push_back(std::move(q));
    }
  }
  return out;
}

std::vector<std::vector<int>> jet_variable_weights(int p, int n, int k) {
  std::vector<std::vector<int>> w;
  const SymBasis b(p, k);
  for (const auto& m : b.elements())
    for (int j = 0; j < n; ++j) w.push_back(m.exponents(p));
  return w;
}

bool is_weighted_homogeneous(const Polynomial& q, const std::vector<std::vector<int>>& weights,
                             const std::vector<int>& degree) {
  for (const auto& [e, c] : q.terms()) {
    std::vector<int> total(degree.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      for (std::size_t i = 0; i < degree.size(); ++i) total[i] += e[v] * weights[v][i];
    }
    if (total != degree) return false;
  }
  return true;
}

namespace {

struct TrialPoint {
  RationalJet gamma;
  RationalJet psi;
  std::vector<Rational> lambda;
  std::vector<Rational> v_gamma;
  std::vector<Rational> v_moved;
  std::vector<Rational> v_torus;
};

TrialPoint draw_trial(int n, int k, int p, std::mt19937_64& rng, int bound) {
  TrialPoint t;
  t.gamma = random_jet(p, n, k, rng, bound);
  t.psi = random_reparam(p, k, p == 1 ? ReparamKind::unipotent : ReparamKind::special, rng, bound);
  for (int i = 0; i < p; ++i) t.lambda.push_back(random_nonzero_rational(rng, bound));
  t.v_gamma = jet_values(t.gamma);
  t.v_moved = jet_values(compose(t.gamma, t.psi));
  t.v_torus = jet_values(torus_act(t.gamma, t.lambda));
  return t;
}

Rational torus_factor(const std::vector<Rational>& lambda, const std::vector<int>& wdeg) {
  Rational f = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    Rational pw;
    mpz_pow_ui(pw.get_num_mpz_t(), lambda[i].get_num_mpz_t(), static_cast<unsigned long>(wdeg[i]));
    mpz_pow_ui(pw.get_den_mpz_t(), lambda[i].get_den_mpz_t(), static_cast<unsigned long>(wdeg[i]));
    pw.canonicalize();
    f *= pw;
  }
  return f;
}

std::optional<InvarianceWitness> check_point(const InvariantPoly& q, const TrialPoint& t, const Rational& base,
                                             const Rational& moved, const Rational& torus) {
  if (moved != base) {
    return InvarianceWitness{"reparametrization", t.gamma, t.psi, {}, base, moved};
  }
  const Rational expected = torus_factor(t.lambda, q.weighted_degree) * base;
  if (torus != expected) {
    return InvarianceWitness{"torus", t.gamma, std::nullopt, t.lambda, expected, torus};
  }
  return std::nullopt;
}

// Integer evaluation of many homogeneous polynomials sharing monomials.
class BatchEvaluator {
 public:
  explicit BatchEvaluator(const std::vector<const Polynomial*>& polys) {
    std::set<Exponents, GrLexGreater> needed;
    for (const auto* q : polys)
      for (const auto& [e, c] : q->terms()) needed.insert(e);
    // Close under dropping one unit from the last nonzero exponent.
    std::vector<Exponents> work(needed.begin(), needed.end());
    while (!work.empty()) {
      Exponents e = std::move(work.back());
      work.pop_back();
      auto it = std::find_if(e.rbegin(), e.rend(), [](auto x) { return x != 0; });
      if (it == e.rend()) continue;
      --*it;
      if (needed.insert(e).second) work.push_back(e);
    }
    std::vector<Exponents> order(needed.rbegin(), needed.rend());  // ascending degree
    std::map<Exponents, std::size_t, GrLexGreater> index;
    for (std::size_t i = 0; i < order.size(); ++i) index.emplace(order[i], i);
    parent_.resize(order.size());
    var_.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      Exponents e = order[i];
      auto it = std::find_if(e.rbegin(), e.rend(), [](auto x) { return x != 0; });
      if (it == e.rend()) {
        parent_[i] = kNone;
        continue;
      }
      var_[i] = static_cast<std::size_t>(e.rend() - it - 1);
      --*it;
      parent_[i] = index.at(e);
    }
    for (const auto* q : polys) {
      Integer l = 1;
      for (const auto& [e, c] : q->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
      Compiled comp;
      for (const auto& [e, c] : q->terms()) comp.terms.emplace_back(index.at(e), c.get_num() * (l / c.get_den()));
      compiled_.push_back(std::move(comp));
    }
    values_.resize(order.size());
  }

  // Sets the point; returns its common denominator.
  Integer load(const std::vector<Rational>& point) {
    Integer d = 1;
    for (const auto& x : point) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> w(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) w[i] = point[i].get_num() * (d / point[i].get_den());
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (parent_[i] == kNone) {
        values_[i] = 1;
      } else {
        mpz_mul(values_[i].get_mpz_t(), values_[parent_[i]].get_mpz_t(), w[var_[i]].get_mpz_t());
      }
    }
    return d;
  }

  // Value of polynomial i times its denominator scale and D^degree.
  Integer scaled_value(std::size_t i) const {
    Integer s = 0;
    for (const auto& [m, c] : compiled_[i].terms) mpz_addmul(s.get_mpz_t(), c.get_mpz_t(), values_[m].get_mpz_t());
    return s;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Compiled {
    std::vector<std::pair<std::size_t, Integer>> terms;
  };
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> var_;
  std::vector<Compiled> compiled_;
  std::vector<Integer> values_;
};

Integer int_pow(const Integer& b, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

InvarianceReport verify_invariance(const InvariantPoly& q, int trials, std::uint64_t seed, int coeff_bound) {
  return verify_invariance_batch({q}, trials, seed, coeff_bound).front();
}

std::vector<InvarianceReport> verify_invariance_batch(const std::vector<InvariantPoly>& qs, int trials,
                                                      std::uint64_t seed, int coeff_bound) {
  std::vector<InvarianceReport> reports(qs.size());
  if (qs.empty()) return reports;
  const int n = qs.front().n;
  const int k = qs.front().k;
  const int p = qs.front().p;
  for (const auto& q : qs) {
    if (q.n != n || q.k != k || q.p != p) throw InvalidInput("batch polynomials live on different jet spaces");
  }
  std::vector<std::size_t> fast;
  std::vector<std::size_t> slow;
  std::vector<const Polynomial*> fast_polys;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i].poly.is_homogeneous()) {
      fast.push_back(i);
      fast_polys.push_back(&qs[i].poly);
    } else {
      slow.push_back(i);
    }
  }
  BatchEvaluator eval(fast_polys);

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const TrialPoint t = draw_trial(n, k, p, rng, coeff_bound);
    std::vector<Integer> base(fast.size()), moved(fast.size()), torus(fast.size());
    const Integer d_base = eval.load(t.v_gamma);
    for (std::size_t i = 0; i < fast.size(); ++i) base[i] = eval.scaled_value(i);
    const Integer d_moved = eval.load(t.v_moved);
    for (std::size_t i = 0; i < fast.size(); ++i) moved[i] = eval.scaled_value(i);
    const Integer d_torus = eval.load(t.v_torus);
    for (std::size_t i = 0; i < fast.size(); ++i) torus[i] = eval.scaled_value(i);

    for (std::size_t i = 0; i < fast.size(); ++i) {
      InvarianceReport& rep = reports[fast[i]];
      if (!rep.passed) continue;
      ++rep.trials_run;
      const InvariantPoly& q = qs[fast[i]];
      const int deg = std::max(q.poly.degree(), 0);
      const Integer pb = int_pow(d_base, deg);
      const Integer pm = int_pow(d_moved, deg);
      const Integer pt = int_pow(d_torus, deg);
      const Rational lam = torus_factor(t.lambda, q.weighted_degree);
      const bool same = base[i] * pm == moved[i] * pb;
      const bool scaled = torus[i] * pb * lam.get_den() == lam.get_num() * base[i] * pt;
      if (!same || !scaled) {
        const auto values = [&](const std::vector<Rational>& v) { return q.poly.evaluate(v); };
        rep.passed = false;
        rep.witness = check_point(q, t, values(t.v_gamma), values(t.v_moved), values(t.v_torus));
      }
    }
    for (std::size_t i : slow) {
      InvarianceReport& rep = reports[i];
      if (!rep.passed) continue;
      ++rep.trials_run;
      const InvariantPoly& q = qs[i];
      auto w = check_point(q, t, q.poly.evaluate(t.v_gamma), q.poly.evaluate(t.v_moved), q.poly.evaluate(t.v_torus));
      if (w) {
        rep.passed = false;
        rep.witness = std::move(w);
      }
    }
  }
  return reports;
}

namespace {

Polynomial evaluate_poly(const Polynomial& q, const std::vector<Polynomial>& values, const VarSetPtr& vars) {
  Polynomial out(vars, Rational(0));
  std::vector<std::vector<Polynomial>> powers(values.size());
  for (const auto& [e, c] : q.terms()) {
    Polynomial term(vars, c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(Polynomial(vars, Rational(1)));
      while (pw.size() <= e[v]) pw.push_back(pw.back() * values[v]);
      term *= pw[e[v]];
    }
    out += term;
  }
  return out;
}

}  // namespace

bool verify_invariance_symbolic(const InvariantPoly& q) {
  const PolyJet f0 = symbolic_jet(q.p, q.n, q.k);
  const PolyJet a0 = symbolic_reparam(q.p, q.k);
  std::vector<std::string> names = f0.coeffs(0, 0).variables()->names();
  const std::size_t n_jet = names.size();
  for (const auto& nm : a0.coeffs(0, 0).variables()->names()) names.push_back(nm);
  auto vars = make_variables(names);

  PolyJet f(q.p, q.n, q.k);
  for (std::size_t s = 0; s < f.size(); ++s)
    for (int j = 0; j < q.n; ++j)
      f.coeffs(static_cast<std::size_t>(j), s) =
          Polynomial::variable(vars, s * static_cast<std::size_t>(q.n) + static_cast<std::size_t>(j));
  PolyJet psi(q.p, q.p, q.k);
  const std::size_t per = psi.size();
  for (int l = 0; l < q.p; ++l) {
    for (std::size_t s = 0; s < per; ++s) {
      if (s < static_cast<std::size_t>(q.p)) {
        psi.coeffs(static_cast<std::size_t>(l), s) = Polynomial(vars, Rational(s == static_cast<std::size_t>(l) ? 1 : 0));
      } else {
        psi.coeffs(static_cast<std::size_t>(l), s) = Polynomial::variable(vars, n_jet + static_cast<std::size_t>(l) * per + s);
      }
    }
  }
  const PolyJet moved = compose(f, psi);
  std::vector<Polynomial> values;
  for (std::size_t s = 0; s < moved.size(); ++s)
    for (int j = 0; j < q.n; ++j) values.push_back(moved.coeffs(static_cast<std::size_t>(j), s));

  Polynomial lifted(vars, Rational(0));
  for (const auto& [e, c] : q.poly.terms()) {
    Exponents big(vars->size(), 0);
    std::copy(e.begin(), e.end(), big.begin());
    lifted += Polynomial::monomial(vars, big, c);
  }
  return evaluate_poly(q.poly, values, vars) == lifted;
}

std::vector<std::string> psi_variable_names(int n, int k, int N) {
  const SymBasis b(n, k);
  std::vector<std::string> names;
  for (const auto& m : b.elements())
    for (int c = 1; c <= N; ++c) names.push_back("psi" + m.to_string() + "[" + std::to_string(c) + "]");
  return names;
}

std::vector<Polynomial> test_curve_equations(const PolyJet& gamma, int N, const VarSetPtr& vars) {
  if (N < 1) throw InvalidInput("N must be >= 1");
  PolyJet psi(gamma.q, N, gamma.k);
  for (std::size_t t = 0; t < psi.size(); ++t)
    for (int c = 0; c < N; ++c)
      psi.coeffs(static_cast<std::size_t>(c), t) = Polynomial::variable(vars, t * static_cast<std::size_t>(N) + static_cast<std::size_t>(c));
  const PolyJet r = compose(psi, gamma);
  std::vector<Polynomial> eqs;
  for (std::size_t s = 0; s < r.size(); ++s)
    for (int c = 0; c < N; ++c) eqs.push_back(r.coeffs(static_cast<std::size_t>(c), s));
  return eqs;
}

TestCurveSystem test_curve_system(const RationalJet& gamma, int N) {
  TestCurveSystem sys;
  sys.p = gamma.p;
  sys.n = gamma.q;
  sys.k = gamma.k;
  sys.N = N;
  auto vars = make_variables(psi_variable_names(gamma.q, gamma.k, N));
  const auto eqs = test_curve_equations(promote(gamma, vars), N, vars);
  const SymBasis psi_basis(gamma.q, gamma.k);
  sys.matrix = RationalMatrix(eqs.size(), vars->size());
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    for (const auto& [e, c] : eqs[r].terms()) {
      auto it = std::find(e.begin(), e.end(), 1);
      const bool linear = it != e.end() && std::count(e.begin(), e.end(), 0) + 1 == static_cast<long>(e.size());
      if (!linear) throw ViolatedExpectation("test-curve equation is not linear in Psi");
      sys.matrix(r, static_cast<std::size_t>(it - e.begin())) = c;
    }
  }
  for (std::size_t s = 0; s < gamma.size(); ++s)
    for (int c = 1; c <= N; ++c) sys.row_labels.emplace_back(gamma.source->at(s), c);
  for (std::size_t t = 0; t < psi_basis.size(); ++t)
    for (int c = 1; c <= N; ++c) sys.col_labels.emplace_back(psi_basis.at(t), c);
  return sys;
}

RationalMatrix perp_system(const RationalJet& gamma, int N) {
  const PhiMatrix<Rational> m = phi(gamma);
  const SymBasis& rows = *m.target;
  const std::size_t cols = rows.size() * static_cast<std::size_t>(N);
  RationalMatrix out(gamma.size() * static_cast<std::size_t>(N), cols);
  std::size_t r = 0;
  for (std::size_t s = 0; s < gamma.size(); ++s) {
    for (int c = 0; c < N; ++c, ++r) {
      for (std::size_t t = 0; t < rows.size(); ++t) {
        if (m.m(t, s) == 0) continue;
        out(r, t * static_cast<std::size_t>(N) + static_cast<std::size_t>(c)) = m.m(t, s) / Rational(perm(rows.at(t)));
      }
    }
  }
  return out;
}

bool solution_space_equals_perp(const RationalJet& gamma, int N) {
  return same_row_space(test_curve_system(gamma, N).matrix, perp_system(gamma, N));
}

}  // namespace jetinv
