#include "core/linalg.hpp"

#include <map>

namespace jetinv {

namespace {

std::vector<Integer> clear_denominators(const RationalMatrix& m, std::size_t r) {
  Integer l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& q = m(r, c);
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& q = m(r, c);
    if (q != 0) row[c] = q.get_num() * (l / q.get_den());
  }
  return row;
}

std::vector<Integer> primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

}  // namespace

EchelonForm bareiss_echelon(const RationalMatrix& m) {
  EchelonForm ef;
  ef.cols = m.cols();
  std::vector<std::vector<Integer>> a;
  a.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(clear_denominators(m, r));

  const std::size_t rows = a.size();
  std::size_t r = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = a[i][c];
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        // a[i][j] = (piv * a[i][j] - lead * a[r][j]) / prev, exact.
        t = piv * a[i][j];
        if (lead != 0 && a[r][j] != 0) t -= lead * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    ef.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  ef.rows = std::move(a);
  return ef;
}

std::size_t rank(const RationalMatrix& m) { return bareiss_echelon(m).pivots.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const EchelonForm ef = bareiss_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ef.pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(n, Rational(0));
    x[f] = 1;
    for (std::size_t i = ef.pivots.size(); i-- > 0;) {
      const std::size_t pc = ef.pivots[i];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (ef.rows[i][j] != 0 && x[j] != 0) s += Rational(ef.rows[i][j]) * x[j];
      }
      x[pc] = -s / Rational(ef.rows[i][pc]);
    }
    auto ints = primitive(x);
    for (std::size_t j = 0; j < n; ++j) x[j] = Rational(ints[j]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<RationalVector> kernel_basis_tall(const RationalMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() <= 2 * n) return kernel_basis(m);
  RationalMatrix gram(n, n);
  std::vector<std::size_t> nz;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nz.clear();
    for (std::size_t c = 0; c < n; ++c) {
      if (m(r, c) != 0) nz.push_back(c);
    }
    for (auto i : nz)
      for (auto j : nz) gram(i, j) += m(r, i) * m(r, j);
  }
  return kernel_basis(gram);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  // Rational Bareiss: the same recurrence, exact over any integral domain.
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  if (n > 20) throw ResourceLimit("polynomial determinant larger than 20x20");
  // det of the last (n - r) rows restricted to the unused column set.
  std::map<unsigned long, Polynomial> level{{0ul, Polynomial(1)}};
  for (std::size_t rr = n; rr-- > 0;) {
    std::map<unsigned long, Polynomial> next;
    for (const auto& [mask, minor] : level) {
      if (minor.is_zero()) continue;
      std::size_t parity = 0;  // used columns to the left of c
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1ul << c)) {
          ++parity;
          continue;
        }
        const Polynomial& e = m(rr, c);
        if (e.is_zero()) continue;
        // c sits at position `parity` within mask | c.
        Polynomial term = e * minor;
        if (parity % 2 == 1) term = -term;
        next[mask | (1ul << c)] += term;
      }
    }
    level = std::move(next);
  }
  auto it = level.find((1ul << n) - 1);
  return it == level.end() ? Polynomial(0) : it->second;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("inverse of a non-square matrix");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvalidInput("singular matrix");
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RationalMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a[i][n + j];
  return r;
}

RationalMatrix stack_rows(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw InvalidInput("column count mismatch when stacking");
  RationalMatrix r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix r(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = rows[i][j];
  }
  return r;
}

bool same_row_space(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t ra = rank(a);
  const std::size_t rb = rank(b);
  return ra == rb && rank(stack_rows(a, b)) == ra;
}

}  // namespace jetinv
