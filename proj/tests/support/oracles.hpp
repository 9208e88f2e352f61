#pragma once

#include "core/flag.hpp"
#include "core/hilbert_mumford.hpp"
#include "core/linalg.hpp"

#include <functional>
#include <map>
#include <vector>

namespace jetinv::testing {

inline RationalMatrix unit_matrix(std::size_t n, std::size_t a, std::size_t b) {
  RationalMatrix e(n, n);
  e(a, b) = 1;
  return e;
}

// Builds rows indexed by `Key` from columns given as sparse maps.
template <class Key>
RationalMatrix sparse_columns_to_matrix(const std::vector<std::map<Key, Rational>>& columns) {
  std::map<Key, std::size_t> row_of;
  for (const auto& col : columns)
    for (const auto& [key, v] : col) row_of.emplace(key, 0);
  std::size_t next = 0;
  for (auto& [key, idx] : row_of) idx = next++;
  RationalMatrix m(row_of.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [key, v] : columns[c]) m(row_of[key], c) = v;
  return m;
}

// Appends the trace row restricting gl(n) unknowns (first n*n columns) to sl(n).
inline RationalMatrix with_trace_row(const RationalMatrix& m, std::size_t n) {
  RationalMatrix out(m.rows() + 1, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  for (std::size_t a = 0; a < n; ++a) out(m.rows(), a * n + a) = 1;
  return out;
}

// Stabilizer dimension in sl(n) of w, affine or projective, from the Lie
// action of every matrix unit.
inline std::size_t stabilizer_dim_direct(const WedgeVector& w, bool projective) {
  const SymBasis basis(w.n, w.k);
  const auto n = static_cast<std::size_t>(w.n);
  std::vector<std::map<WedgeKey, Rational>> cols;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cols.push_back(lie_apply(basis, unit_matrix(n, a, b), w).terms);
  if (projective) {
    std::map<WedgeKey, Rational> minus;
    for (const auto& [key, v] : w.terms) minus[key] = -v;
    cols.push_back(minus);
  }
  RationalMatrix m = sparse_columns_to_matrix(cols);
  m = with_trace_row(m, n);
  // X = 0 forces c = 0, so kernel vectors correspond to stabilizing X.
  return m.cols() - rank(m);
}

// Affine sl(n) stabilizer dimension of w (x) e_1^{(x) K}, expanding the
// tensor factor completely.
inline std::size_t twisted_stabilizer_dim_full_tensor(const WedgeVector& w, int K) {
  using Key = std::pair<WedgeKey, std::vector<int>>;
  const SymBasis basis(w.n, w.k);
  const auto n = static_cast<std::size_t>(w.n);
  const std::vector<int> ones(static_cast<std::size_t>(K), 0);
  std::vector<std::map<Key, Rational>> cols;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::map<Key, Rational> col;
      for (const auto& [key, v] : lie_apply(basis, unit_matrix(n, a, b), w).terms) col[{key, ones}] += v;
      if (b == 0) {
        for (int slot = 0; slot < K; ++slot) {
          std::vector<int> idx = ones;
          idx[static_cast<std::size_t>(slot)] = static_cast<int>(a);
          for (const auto& [key, v] : w.terms) col[{key, idx}] += v;
        }
      }
      for (auto it = col.begin(); it != col.end();) it = it->second == 0 ? col.erase(it) : std::next(it);
      cols.push_back(col);
    }
  }
  const RationalMatrix m = with_trace_row(sparse_columns_to_matrix(cols), n);
  return m.cols() - rank(m);
}

// Classification by enumeration: semistability through Caratheodory
// simplices, stability through the extreme rays of the cone of functionals
// that are non-positive on every weight.
inline Stability hilbert_mumford_bruteforce(const std::vector<std::vector<long>>& weights) {
  const std::size_t r = weights.front().size();
  const std::size_t m = weights.size();
  auto subsets = [m](std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (cur.size() == size) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < m; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    return out;
  };

  bool semistable = false;
  for (std::size_t size = 1; size <= std::min(m, r + 1) && !semistable; ++size) {
    for (const auto& s : subsets(size)) {
      // Solve sum l_i w_i = 0, sum l_i = 1 for affinely independent points.
      RationalMatrix a(r + 1, size);
      for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t i = 0; i < r; ++i) a(i, j) = weights[s[j]][i];
        a(r, j) = 1;
      }
      if (rank(a) != size) continue;
      RationalMatrix aug(r + 1, size + 1);
      for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t j = 0; j < size; ++j) aug(i, j) = a(i, j);
      aug(r, size) = -1;
      const auto ker = kernel_basis(aug);
      if (ker.size() != 1 || ker[0][size] == 0) continue;
      bool nonneg = true;
      for (std::size_t j = 0; j < size; ++j)
        if (ker[0][j] / ker[0][size] < 0) nonneg = false;
      if (nonneg) {
        semistable = true;
        break;
      }
    }
  }
  if (!semistable) return Stability::unstable;

  RationalMatrix all(m, r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < r; ++j) all(i, j) = weights[i][j];
  if (rank(all) < r) return Stability::semistable_not_stable;
  for (const auto& s : subsets(r - 1)) {
    RationalMatrix tight(r - 1, r);
    for (std::size_t i = 0; i + 1 < r; ++i)
      for (std::size_t j = 0; j < r; ++j) tight(i, j) = weights[s[i]][j];
    const auto ker = kernel_basis(tight);
    if (ker.size() != 1) continue;
    for (int sign : {1, -1}) {
      bool separating = true;
      for (std::size_t i = 0; i < m && separating; ++i) {
        Rational dot = 0;
        for (std::size_t j = 0; j < r; ++j) dot += ker[0][j] * weights[i][j];
        if (sign * dot > 0) separating = false;
      }
      if (separating) return Stability::semistable_not_stable;
    }
  }
  return Stability::stable;
}

}  // namespace jetinv::testing
