#pragma once

#include "core/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace jetinv {

// Ordered list of variable names; polynomials built over the same list
// may be combined.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  // Throws InvalidInput for unknown names.
  std::size_t index(const std::string& name) const;
  bool contains(const std::string& name) const { return lookup_.count(name) != 0; }

  bool operator==(const VariableSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

using VarSetPtr = std::shared_ptr<const VariableSet>;
VarSetPtr make_variables(std::vector<std::string> names);

using Exponents = std::vector<std::uint16_t>;

// Graded lexicographic, largest monomial first.
struct GrLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with rational coefficients.  A polynomial
// without a variable set is a constant that adopts the variable set of
// whatever it is combined with.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrLexGreater>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  Polynomial(VarSetPtr vars, const Rational& c);

  static Polynomial variable(const VarSetPtr& vars, std::size_t index);
  static Polynomial variable(const VarSetPtr& vars, const std::string& name);
  static Polynomial monomial(const VarSetPtr& vars, Exponents exps, const Rational& c);

  const VarSetPtr& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero when absent).
  Rational constant_term() const;
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  // True when every term has the same total degree.
  bool is_homogeneous() const;
  // Coefficient of the given exponent vector (zero when absent).
  Rational coefficient(const Exponents& exps) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Values aligned with the variable set.
  Rational evaluate(std::span<const Rational> values) const;
  // Throws InvalidInput when a variable occurring in the polynomial is missing.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  Polynomial derivative(std::size_t var) const;
  // Replaces one variable by a polynomial over the same variable set.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;

  // True when p == c * (*this) for some nonzero rational c.
  bool proportional_to(const Polynomial& p) const;
  // Divides by the leading coefficient.
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void adopt(const VarSetPtr& vars);
  void normalize();

  VarSetPtr vars_;
  TermMap terms_;
};

}  // namespace jetinv
