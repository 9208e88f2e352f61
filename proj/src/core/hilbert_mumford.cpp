#include "core/hilbert_mumford.hpp"

#include <optional>

namespace jetinv {

namespace {

struct Tableau {
  std::vector<RationalVector> rows;  // coefficients then rhs
  std::vector<std::size_t> basis;
  std::size_t cols = 0;               // structural + artificial columns

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Maximizes cost over the allowed columns from the current basis.
  LpResult::Status optimize(const RationalVector& cost, std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed && !enter; ++j) {
        Rational reduced = -cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) reduced += cost[basis[i]] * rows[i][j];
        if (reduced < 0) enter = j;
      }
      if (!enter) return LpResult::Status::optimal;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][*enter] <= 0) continue;
        const Rational ratio = rows[i][cols] / rows[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return LpResult::Status::unbounded;
      pivot(*leave, *enter);
    }
  }

  Rational objective(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) v += cost[basis[i]] * rows[i][cols];
    return v;
  }
};

}  // namespace

LpResult lp_maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw InvalidInput("lp dimensions mismatch");
  Tableau t;
  t.cols = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(n + m + 1, Rational(0));
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) row[j] = flip ? Rational(-a(i, j)) : a(i, j);
    row[n + i] = 1;
    row[n + m] = flip ? Rational(-b[i]) : b[i];
    t.rows.push_back(std::move(row));
    t.basis.push_back(n + i);
  }
  RationalVector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.optimize(phase1, n + m);
  LpResult out;
  if (t.objective(phase1) != 0) return out;

  // Drive artificial variables out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (t.rows[i][j] != 0) col = j;
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<long>(i));
      t.basis.erase(t.basis.begin() + static_cast<long>(i));
    }
  }
  RationalVector cost(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  out.status = t.optimize(cost, n);
  if (out.status != LpResult::Status::optimal) return out;
  out.value = t.objective(cost);
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) out.x[t.basis[i]] = t.rows[i][t.cols];
  return out;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::unstable:
      return "unstable";
    case Stability::semistable_not_stable:
      return "semistable-not-stable";
    case Stability::stable:
      return "stable";
  }
  return "unknown";
}

Stability hilbert_mumford_torus(const std::vector<std::vector<long>>& weights) {
  if (weights.empty()) throw InvalidInput("empty weight list");
  const std::size_t r = weights.front().size();
  if (r == 0) throw InvalidInput("weights must have positive dimension");
  for (const auto& w : weights)
    if (w.size() != r) throw InvalidInput("weights of different dimensions");
  const std::size_t m = weights.size();

  // sum c_i alpha_i = 0, sum c_i = 1, c >= 0.
  RationalMatrix a(r + 1, m);
  RationalVector b(r + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t d = 0; d < r; ++d) a(d, i) = weights[i][d];
    a(r, i) = 1;
  }
  b[r] = 1;
  if (lp_maximize(a, b, RationalVector(m, Rational(0))).status == LpResult::Status::infeasible) {
    return Stability::unstable;
  }

  RationalMatrix span(m, r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t d = 0; d < r; ++d) span(i, d) = weights[i][d];
  if (rank(span) < r) return Stability::semistable_not_stable;

  // c_i = t + s_i: maximize t subject to the same constraints.
  RationalMatrix a2(r + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t d = 0; d <= r; ++d) a2(d, i) = a(d, i);
  for (std::size_t d = 0; d < r; ++d) {
    Rational total = 0;
    for (std::size_t i = 0; i < m; ++i) total += weights[i][d];
    a2(d, m) = total;
  }
  a2(r, m) = static_cast<long>(m);
  RationalVector cost(m + 1, Rational(0));
  cost[m] = 1;
  const LpResult strict = lp_maximize(a2, b, cost);
  return strict.status == LpResult::Status::optimal && strict.value > 0 ? Stability::stable
                                                                          : Stability::semistable_not_stable;
}

}  // namespace jetinv
