#include "core/sym_basis.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace jetinv {

std::vector<int> SymMonomial::exponents(int n) const {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int i : entries) {
    if (i < 1 || i > n) throw InvalidInput("monomial entry out of range");
    ++e[static_cast<std::size_t>(i - 1)];
  }
  return e;
}

SymMonomial SymMonomial::from_exponents(const std::vector<int>& exps) {
  SymMonomial m;
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (int j = 0; j < exps[i]; ++j) m.entries.push_back(static_cast<int>(i) + 1);
  return m;
}

SymMonomial SymMonomial::times(const SymMonomial& other) const {
  SymMonomial m;
  m.entries.resize(entries.size() + other.entries.size());
  std::merge(entries.begin(), entries.end(), other.entries.begin(), other.entries.end(), m.entries.begin());
  return m;
}

std::string SymMonomial::to_string() const { return exponent_key(entries); }

bool canonical_less(const SymMonomial& a, const SymMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.entries < b.entries;
}

SymBasis::SymBasis(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw InvalidInput("sym basis needs n >= 1 and k >= 1");
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      elems_.push_back(SymMonomial{cur});
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      rec(i, remaining - 1);
      cur.pop_back();
    }
  };
  block_start_.push_back(0);
  for (int d = 1; d <= k; ++d) {
    rec(1, d);
    block_start_.push_back(elems_.size());
  }
  for (std::size_t i = 0; i < elems_.size(); ++i) pos_.emplace(elems_[i].entries, i);
  if (elems_.size() <= 400) {
    product_.assign(elems_.size(), std::vector<long>(elems_.size(), -1));
    for (std::size_t a = 0; a < elems_.size(); ++a) {
      for (std::size_t b = 0; b < elems_.size(); ++b) {
        if (elems_[a].degree() + elems_[b].degree() > k) continue;
        product_[a][b] = static_cast<long>(pos_.at(elems_[a].times(elems_[b]).entries));
      }
    }
  }
}

std::size_t SymBasis::position(const SymMonomial& m) const {
  auto it = pos_.find(m.entries);
  if (it == pos_.end()) throw InvalidInput("monomial " + m.to_string() + " not in basis");
  return it->second;
}

long SymBasis::product(std::size_t a, std::size_t b) const {
  if (!product_.empty()) return product_[a][b];
  if (elems_[a].degree() + elems_[b].degree() > k_) return -1;
  return static_cast<long>(pos_.at(elems_[a].times(elems_[b]).entries));
}

std::pair<std::size_t, std::size_t> SymBasis::block(int d) const {
  if (d < 1 || d > k_) throw InvalidInput("degree block out of range");
  return {block_start_[static_cast<std::size_t>(d - 1)], block_start_[static_cast<std::size_t>(d)]};
}

std::shared_ptr<const SymBasis> make_sym_basis(int n, int k) { return std::make_shared<const SymBasis>(n, k); }

Integer sym_dim(int n, int i) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n + i - 1), static_cast<unsigned long>(i));
  return r;
}

std::size_t sym_dim_upto(int n, int k) {
  Integer total = 0;
  for (int i = 1; i <= k; ++i) total += sym_dim(n, i);
  return total.get_ui();
}

int IntPartition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<IntPartition> partitions_of(int m) {
  if (m < 1) throw InvalidInput("partitions need m >= 1");
  std::vector<IntPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int min_part, int remaining) {
    if (remaining == 0) {
      out.push_back(IntPartition{cur});
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      rec(p, remaining - p);
      cur.pop_back();
    }
  };
  rec(1, m);
  return out;
}

namespace {

Integer multiset_orderings(const std::vector<int>& sorted) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), sorted.size());
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), j - i);
    r /= f;
    i = j;
  }
  return r;
}

}  // namespace

Integer perm(const IntPartition& tau) { return multiset_orderings(tau.parts); }
Integer perm(const SymMonomial& tau) { return multiset_orderings(tau.entries); }

int defect(int sigma, int i) {
  if (sigma < 1) throw InvalidInput("defect needs sigma >= 1");
  return i / sigma;
}

int defect_of_partition(int sigma, const IntPartition& tau) {
  int d = 0;
  for (int p : tau.parts) d += defect(sigma, p);
  return d;
}

std::vector<std::vector<int>> compositions(int m) {
  std::vector<std::vector<int>> out;
  for (int len = 1; len <= m; ++len) {
    auto part = compositions(m, len);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<std::vector<int>> compositions(int m, int len) {
  std::vector<std::vector<int>> out;
  if (len < 1 || m < len) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    const int slots = len - static_cast<int>(cur.size());
    if (slots == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int p = 1; p <= remaining - (slots - 1); ++p) {
      cur.push_back(p);
      rec(remaining - p);
      cur.pop_back();
    }
  };
  rec(m);
  return out;
}

std::vector<std::vector<std::vector<int>>> vector_compositions(const std::vector<int>& s, int len) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  const int total = std::accumulate(s.begin(), s.end(), 0);
  if (total == 0) return out;
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& remaining) {
    const bool done = std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; });
    if (done) {
      if (len <= 0 || static_cast<int>(cur.size()) == len) out.push_back(cur);
      return;
    }
    if (len > 0 && static_cast<int>(cur.size()) >= len) return;
    // Enumerate nonzero pieces <= remaining in lexicographic order.
    std::vector<int> piece(remaining.size(), 0);
    std::function<void(std::size_t)> pick = [&](std::size_t idx) {
      if (idx == remaining.size()) {
        if (std::all_of(piece.begin(), piece.end(), [](int x) { return x == 0; })) return;
        std::vector<int> rest(remaining.size());
        for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = remaining[i] - piece[i];
        cur.push_back(piece);
        rec(rest);
        cur.pop_back();
        return;
      }
      for (int v = 0; v <= remaining[idx]; ++v) {
        piece[idx] = v;
        pick(idx + 1);
      }
      piece[idx] = 0;
    };
    pick(0);
  };
  rec(s);
  return out;
}

std::string exponent_key(const std::vector<int>& exps) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) os << ",";
    os << exps[i];
  }
  os << "]";
  return os.str();
}

}  // namespace jetinv
