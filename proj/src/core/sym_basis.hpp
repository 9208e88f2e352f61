#pragma once

#include "core/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace jetinv {

// e_{i1} e_{i2} ... e_{is} with 1 <= i1 <= ... <= is.
struct SymMonomial {
  std::vector<int> entries;

  int degree() const { return static_cast<int>(entries.size()); }
  auto operator<=>(const SymMonomial&) const = default;
  bool operator==(const SymMonomial&) const = default;

  // Exponent vector of length n.
  std::vector<int> exponents(int n) const;
  static SymMonomial from_exponents(const std::vector<int>& exps);
  SymMonomial times(const SymMonomial& other) const;
  std::string to_string() const;  // e.g. "[1,1,3]"
};

// (degree, then lexicographic).
bool canonical_less(const SymMonomial& a, const SymMonomial& b);

// Ordered basis of Sym^{<=k} C^n.
class SymBasis {
 public:
  SymBasis(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return elems_.size(); }
  const SymMonomial& at(std::size_t i) const { return elems_.at(i); }
  const std::vector<SymMonomial>& elements() const { return elems_; }
  int degree_of(std::size_t i) const { return elems_[i].degree(); }
  // Throws InvalidInput when m is not in the basis.
  std::size_t position(const SymMonomial& m) const;
  bool contains(const SymMonomial& m) const { return pos_.count(m.entries) != 0; }
  // Position of the product, or -1 when its degree exceeds k.
  long product(std::size_t a, std::size_t b) const;
  // [begin, end) positions of the degree-d block.
  std::pair<std::size_t, std::size_t> block(int d) const;
  // Position of e_i (1-based).
  std::size_t linear(int i) const { return static_cast<std::size_t>(i - 1); }

 private:
  int n_;
  int k_;
  std::vector<SymMonomial> elems_;
  std::map<std::vector<int>, std::size_t> pos_;
  std::vector<std::size_t> block_start_;
  std::vector<std::vector<long>> product_;  // filled when the basis is small
};

std::shared_ptr<const SymBasis> make_sym_basis(int n, int k);

// dim Sym^i C^n and sum over i = 1..k.
Integer sym_dim(int n, int i);
std::size_t sym_dim_upto(int n, int k);

struct IntPartition {
  std::vector<int> parts;  // weakly increasing

  int sum() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool operator==(const IntPartition&) const = default;
};

std::vector<IntPartition> partitions_of(int m);
Integer perm(const IntPartition& tau);
// Number of distinct orderings of the entries of a monomial.
Integer perm(const SymMonomial& tau);

int defect(int sigma, int i);
int defect_of_partition(int sigma, const IntPartition& tau);

// Ordered compositions of m into positive parts.
std::vector<std::vector<int>> compositions(int m);
// Ordered compositions of m into exactly len positive parts.
std::vector<std::vector<int>> compositions(int m, int len);

// Ordered tuples of nonzero vectors in Z_{>=0}^p summing to s; when len > 0
// only tuples of that length.
std::vector<std::vector<std::vector<int>>> vector_compositions(const std::vector<int>& s, int len = 0);

std::string exponent_key(const std::vector<int>& exps);  // "[1,0]"

}  // namespace jetinv
