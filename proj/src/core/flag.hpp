#pragma once

#include "core/jet.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jetinv {

// Map from source monomials (columns) into Sym^{<=k} C^n (rows).
template <class T>
struct PhiMatrix {
  std::shared_ptr<const SymBasis> target;  // rows
  std::shared_ptr<const SymBasis> source;  // columns
  Matrix<T> m;

  std::vector<T> column(std::size_t s) const { return m.column(s); }
};

// Column s = sum over ordered tuples (s_1, ..., s_j) of nonzero multi-indices
// with s_1 + ... + s_j = s of the product gamma_{s_1} ... gamma_{s_j}.
template <class T>
PhiMatrix<T> phi(const JetMap<T>& gamma) {
  PhiMatrix<T> out;
  out.target = make_sym_basis(gamma.q, gamma.k);
  out.source = gamma.source;
  const SymBasis& tgt = *out.target;
  const SymBasis& src = *out.source;
  const std::size_t n_src = src.size();

  // Splittings s = s' + s'' with both parts nonzero.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> splits(n_src);
  for (std::size_t a = 0; a < n_src; ++a)
    for (std::size_t b = 0; b < n_src; ++b) {
      const long s = src.product(a, b);
      if (s >= 0) splits[static_cast<std::size_t>(s)].emplace_back(a, b);
    }

  std::vector<std::vector<T>> cols(n_src);
  for (std::size_t s = 0; s < n_src; ++s) {
    std::vector<T> c(tgt.size(), T(0));
    for (int a = 0; a < gamma.q; ++a) c[static_cast<std::size_t>(a)] = gamma.coeffs(static_cast<std::size_t>(a), s);
    for (const auto& [head, tail] : splits[s]) {
      const std::vector<T>& prev = cols[head];
      for (std::size_t x = 0; x < tgt.size(); ++x) {
        if (prev[x] == T(0)) continue;
        for (int a = 0; a < gamma.q; ++a) {
          const T& g = gamma.coeffs(static_cast<std::size_t>(a), tail);
          if (g == T(0)) continue;
          const long pos = tgt.product(x, static_cast<std::size_t>(a));
          c[static_cast<std::size_t>(pos)] += prev[x] * g;
        }
      }
    }
    cols[s] = std::move(c);
  }
  out.m = Matrix<T>(tgt.size(), n_src);
  for (std::size_t s = 0; s < n_src; ++s)
    for (std::size_t x = 0; x < tgt.size(); ++x) out.m(x, s) = cols[s][x];
  return out;
}

using WedgeKey = std::vector<std::size_t>;  // strictly increasing basis positions

// Sparse element of the r-th exterior power of Sym^{<=k} C^n.
template <class T>
struct BasicWedge {
  int n = 0;
  int k = 0;
  int r = 0;
  std::map<WedgeKey, T> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const BasicWedge& o) const { return n == o.n && k == o.k && r == o.r && terms == o.terms; }
};

using WedgeVector = BasicWedge<Rational>;

// Inserts pos into the sorted key; returns false when already present and
// otherwise the sign of the sorting permutation through `negative`.
bool wedge_insert(WedgeKey& key, std::size_t pos, bool& negative);

// Exterior product of dense columns over the basis `basis`.
template <class T>
BasicWedge<T> wedge_dense(const SymBasis& basis, const std::vector<std::vector<T>>& columns) {
  BasicWedge<T> w;
  w.n = basis.n();
  w.k = basis.k();
  w.r = static_cast<int>(columns.size());
  std::map<WedgeKey, T> cur{{WedgeKey{}, T(1)}};
  for (const auto& col : columns) {
    std::map<WedgeKey, T> next;
    for (const auto& [key, c] : cur) {
      for (std::size_t pos = 0; pos < col.size(); ++pos) {
        if (col[pos] == T(0)) continue;
        WedgeKey nk = key;
        bool negative = false;
        if (!wedge_insert(nk, pos, negative)) continue;
        T v = c * col[pos];
        if (negative) v = -v;
        next[nk] += v;
      }
    }
    cur.clear();
    for (auto& [key, v] : next) {
      if (!(v == T(0))) cur.emplace(key, std::move(v));
    }
  }
  w.terms = std::move(cur);
  return w;
}

template <class T>
BasicWedge<T> wedge_columns(const PhiMatrix<T>& m, const std::vector<std::size_t>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      if (cols[i] == cols[j]) throw InvalidInput("wedge_columns: repeated column");
  std::vector<std::vector<T>> dense;
  for (auto c : cols) dense.push_back(m.column(c));
  return wedge_dense(*m.target, dense);
}

template <class T>
BasicWedge<T> wedge_all_columns(const PhiMatrix<T>& m) {
  std::vector<std::size_t> cols(m.source->size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return wedge_columns(m, cols);
}

// Wedge of sparse Sym elements.
WedgeVector wedge_sparse(int n, int k, const std::vector<std::map<std::size_t, Rational>>& factors);

// The jet C^p -> C^n, n = sym^{<=k}(p), sending u^s to e_{pos(s)}.
RationalJet distinguished_jet(int p, int k);
// wedge of all columns of phi(distinguished_jet(p, k)).
WedgeVector p_point(int p, int k);

bool in_affine_chart(const WedgeVector& w);

// For each degree d, an independent set of columns spanning the columns of
// source degree <= d.
std::vector<std::vector<RationalVector>> flag_spans(const PhiMatrix<Rational>& m);

// Image of a Sym element under the map induced by g in GL(n).
using SymElement = std::map<std::size_t, Rational>;
SymElement sym_apply(const SymBasis& basis, const RationalMatrix& g, const SymElement& v);
RationalMatrix sym_action_matrix(const SymBasis& basis, const RationalMatrix& g);
WedgeVector wedge_apply(const RationalMatrix& g, const WedgeVector& w);

// Derivation action of the matrix unit E_{a,b} (e_b -> e_a), 0-based.
SymElement lie_unit_on_monomial(const SymBasis& basis, std::size_t a, std::size_t b, std::size_t pos);
// Leibniz extension of a Lie algebra element of gl(n) to a wedge.
WedgeVector lie_apply(const SymBasis& basis, const RationalMatrix& x, const WedgeVector& w);

// c with a = c * b, when one exists and b is nonzero.
std::optional<Rational> wedge_ratio(const WedgeVector& a, const WedgeVector& b);
bool proportional(const WedgeVector& a, const WedgeVector& b);

std::string to_string(const SymBasis& basis, const WedgeVector& w);

}  // namespace jetinv
