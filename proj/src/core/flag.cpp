#include "core/flag.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace jetinv {

bool wedge_insert(WedgeKey& key, std::size_t pos, bool& negative) {
  auto it = std::lower_bound(key.begin(), key.end(), pos);
  if (it != key.end() && *it == pos) return false;
  // Moving pos from the end to its slot passes every larger factor.
  const auto passed = static_cast<std::size_t>(key.end() - it);
  negative = (passed % 2) == 1;
  key.insert(it, pos);
  return true;
}

WedgeVector wedge_sparse(int n, int k, const std::vector<std::map<std::size_t, Rational>>& factors) {
  WedgeVector w;
  w.n = n;
  w.k = k;
  w.r = static_cast<int>(factors.size());
  std::map<WedgeKey, Rational> cur{{WedgeKey{}, Rational(1)}};
  for (const auto& f : factors) {
    std::map<WedgeKey, Rational> next;
    for (const auto& [key, c] : cur) {
      for (const auto& [pos, v] : f) {
        if (v == 0) continue;
        WedgeKey nk = key;
        bool negative = false;
        if (!wedge_insert(nk, pos, negative)) continue;
        Rational t = c * v;
        if (negative) t = -t;
        next[nk] += t;
      }
    }
    cur.clear();
    for (auto& [key, v] : next)
      if (v != 0) cur.emplace(key, v);
  }
  w.terms = std::move(cur);
  return w;
}

RationalJet distinguished_jet(int p, int k) {
  const int n = static_cast<int>(sym_dim_upto(p, k));
  RationalJet g(p, n, k);
  for (std::size_t s = 0; s < g.size(); ++s) g.coeffs(s, s) = 1;
  return g;
}

WedgeVector p_point(int p, int k) { return wedge_all_columns(phi(distinguished_jet(p, k))); }

bool in_affine_chart(const WedgeVector& w) {
  const auto n = static_cast<std::size_t>(w.n);
  for (const auto& [key, c] : w.terms) {
    if (std::all_of(key.begin(), key.end(), [n](std::size_t pos) { return pos < n; })) return true;
  }
  return false;
}

std::vector<std::vector<RationalVector>> flag_spans(const PhiMatrix<Rational>& m) {
  std::vector<std::vector<RationalVector>> out;
  std::vector<RationalVector> basis;
  const SymBasis& src = *m.source;
  for (int d = 1; d <= src.k(); ++d) {
    const auto [begin, end] = src.block(d);
    for (std::size_t s = begin; s < end; ++s) {
      RationalVector col = m.column(s);
      auto trial = basis;
      trial.push_back(col);
      if (rank(from_rows(trial, col.size())) == trial.size()) basis = std::move(trial);
    }
    out.push_back(basis);
  }
  return out;
}

SymElement sym_apply(const SymBasis& basis, const RationalMatrix& g, const SymElement& v) {
  const auto n = static_cast<std::size_t>(basis.n());
  if (g.rows() != n || g.cols() != n) throw InvalidInput("linear map has the wrong size");
  SymElement out;
  for (const auto& [pos, c] : v) {
    if (c == 0) continue;
    SymElement img{{std::numeric_limits<std::size_t>::max(), c}};  // sentinel for the unit
    bool first = true;
    for (int e : basis.at(pos).entries) {
      SymElement next;
      const auto col = static_cast<std::size_t>(e - 1);
      for (const auto& [x, xv] : img) {
        for (std::size_t b = 0; b < n; ++b) {
          if (g(b, col) == 0) continue;
          const std::size_t target = first ? b : static_cast<std::size_t>(basis.product(x, b));
          next[target] += xv * g(b, col);
        }
      }
      img.clear();
      for (auto& [x, xv] : next)
        if (xv != 0) img.emplace(x, xv);
      first = false;
    }
    for (const auto& [x, xv] : img) out[x] += xv;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

RationalMatrix sym_action_matrix(const SymBasis& basis, const RationalMatrix& g) {
  RationalMatrix m(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (const auto& [r, v] : sym_apply(basis, g, SymElement{{c, Rational(1)}})) m(r, c) = v;
  }
  return m;
}

WedgeVector wedge_apply(const RationalMatrix& g, const WedgeVector& w) {
  const SymBasis basis(w.n, w.k);
  std::map<std::size_t, SymElement> images;
  WedgeVector out;
  out.n = w.n;
  out.k = w.k;
  out.r = w.r;
  for (const auto& [key, c] : w.terms) {
    std::vector<std::map<std::size_t, Rational>> factors;
    for (auto pos : key) {
      auto it = images.find(pos);
      if (it == images.end()) it = images.emplace(pos, sym_apply(basis, g, SymElement{{pos, Rational(1)}})).first;
      factors.push_back(it->second);
    }
    for (const auto& [k2, v] : wedge_sparse(w.n, w.k, factors).terms) out.terms[k2] += c * v;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) it = it->second == 0 ? out.terms.erase(it) : std::next(it);
  return out;
}

SymElement lie_unit_on_monomial(const SymBasis& basis, std::size_t a, std::size_t b, std::size_t pos) {
  const SymMonomial& m = basis.at(pos);
  const int from = static_cast<int>(b) + 1;
  const auto mult = std::count(m.entries.begin(), m.entries.end(), from);
  if (mult == 0) return {};
  SymMonomial replaced = m;
  auto it = std::find(replaced.entries.begin(), replaced.entries.end(), from);
  *it = static_cast<int>(a) + 1;
  std::sort(replaced.entries.begin(), replaced.entries.end());
  return SymElement{{basis.position(replaced), Rational(static_cast<long>(mult))}};
}

WedgeVector lie_apply(const SymBasis& basis, const RationalMatrix& x, const WedgeVector& w) {
  WedgeVector out;
  out.n = w.n;
  out.k = w.k;
  out.r = w.r;
  const auto n = static_cast<std::size_t>(basis.n());
  for (const auto& [key, c] : w.terms) {
    for (std::size_t slot = 0; slot < key.size(); ++slot) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (x(a, b) == 0) continue;
          for (const auto& [img, mult] : lie_unit_on_monomial(basis, a, b, key[slot])) {
            WedgeKey rest = key;
            rest.erase(rest.begin() + static_cast<long>(slot));
            // Move the new factor from `slot` to the end first.
            const bool move_sign = ((key.size() - 1 - slot) % 2) == 1;
            bool negative = false;
            if (!wedge_insert(rest, img, negative)) continue;
            Rational v = c * x(a, b) * mult;
            if (negative != move_sign) v = -v;
            out.terms[rest] += v;
          }
        }
      }
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) it = it->second == 0 ? out.terms.erase(it) : std::next(it);
  return out;
}

std::optional<Rational> wedge_ratio(const WedgeVector& a, const WedgeVector& b) {
  if (b.terms.empty()) return std::nullopt;
  if (a.terms.empty()) return Rational(0);
  if (a.terms.size() != b.terms.size()) return std::nullopt;
  const Rational c = a.terms.begin()->second / b.terms.begin()->second;
  auto ia = a.terms.begin();
  for (auto ib = b.terms.begin(); ib != b.terms.end(); ++ib, ++ia) {
    if (ia->first != ib->first || ia->second != c * ib->second) return std::nullopt;
  }
  return c;
}

bool proportional(const WedgeVector& a, const WedgeVector& b) {
  auto r = wedge_ratio(a, b);
  return r.has_value() && *r != 0;
}

std::string to_string(const SymBasis& basis, const WedgeVector& w) {
  if (w.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : w.terms) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) os << "^";
      os << "e";
      for (int e : basis.at(key[i]).entries) os << e;
    }
  }
  return os.str();
}

}  // namespace jetinv
