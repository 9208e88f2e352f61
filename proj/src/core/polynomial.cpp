#include "core/polynomial.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jetinv {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!lookup_.emplace(names_[i], i).second) throw InvalidInput("duplicate variable name: " + names_[i]);
  }
}

std::size_t VariableSet::index(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) throw InvalidInput("unknown variable: " + name);
  return it->second;
}

VarSetPtr make_variables(std::vector<std::string> names) {
  return std::make_shared<const VariableSet>(std::move(names));
}

bool GrLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), 0u);
  const auto db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

bool same_variables(const VarSetPtr& a, const VarSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Polynomial::Polynomial(VarSetPtr vars, const Rational& c) : vars_(std::move(vars)) {
  if (c != 0) terms_.emplace(Exponents(vars_ ? vars_->size() : 0, 0), c);
}

Polynomial Polynomial::variable(const VarSetPtr& vars, std::size_t index) {
  if (!vars || index >= vars->size()) throw InvalidInput("variable index out of range");
  Exponents e(vars->size(), 0);
  e[index] = 1;
  return monomial(vars, std::move(e), Rational(1));
}

Polynomial Polynomial::variable(const VarSetPtr& vars, const std::string& name) {
  if (!vars) throw InvalidInput("no variable set");
  return variable(vars, vars->index(name));
}

Polynomial Polynomial::monomial(const VarSetPtr& vars, Exponents exps, const Rational& c) {
  if (!vars || exps.size() != vars->size()) throw InvalidInput("exponent vector does not match variable set");
  Polynomial p;
  p.vars_ = vars;
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

void Polynomial::adopt(const VarSetPtr& vars) {
  if (!vars || same_variables(vars_, vars)) return;
  if (vars_) throw InvalidInput("variable-set mismatch");
  vars_ = vars;
  if (!terms_.empty()) {
    Rational c = terms_.begin()->second;
    terms_.clear();
    terms_.emplace(Exponents(vars_->size(), 0), c);
  }
}

void Polynomial::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Rational Polynomial::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& last = *terms_.rbegin();
  const bool zero_exp = std::all_of(last.first.begin(), last.first.end(), [](auto x) { return x == 0; });
  return zero_exp ? last.second : Rational(0);
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto& lo = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(lo.begin(), lo.end(), 0u)) == degree();
}

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  Polynomial rhs = o;
  adopt(rhs.vars_);
  rhs.adopt(vars_);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    Polynomial z;
    z.vars_ = a.vars_ ? a.vars_ : b.vars_;
    if (a.vars_ && b.vars_ && !same_variables(a.vars_, b.vars_)) throw InvalidInput("variable-set mismatch");
    return z;
  }
  Polynomial x = a;
  Polynomial y = b;
  x.adopt(y.vars_);
  y.adopt(x.vars_);
  Polynomial r;
  r.vars_ = x.vars_;
  const std::size_t n = x.vars_ ? x.vars_->size() : 0;
  Exponents e(n);
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      auto [it, inserted] = r.terms_.emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  r.normalize();
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ && b.vars_ && !same_variables(a.vars_, b.vars_)) throw InvalidInput("variable-set mismatch");
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.vars_ && b.vars_) return a.terms_ == b.terms_;
  // At least one side is an unbound constant.
  return a.is_constant() && b.is_constant() && a.constant_term() == b.constant_term();
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  const std::size_t n = vars_ ? vars_->size() : 0;
  if (values.size() < n) throw InvalidInput("assignment does not cover the variable set");
  Rational total = 0;
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned j = 0; j < e[i]; ++j) term *= values[i];
    }
    total += term;
  }
  return total;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& assignment) const {
  const std::size_t n = vars_ ? vars_->size() : 0;
  std::vector<Rational> values(n);
  std::vector<bool> used(n, false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto it = assignment.find(vars_->name(i));
    if (it != assignment.end()) {
      values[i] = it->second;
    } else if (used[i]) {
      throw InvalidInput("missing variable in assignment: " + vars_->name(i));
    }
  }
  return evaluate(values);
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r;
  r.vars_ = vars_;
  if (!vars_) return r;
  if (var >= vars_->size()) throw InvalidInput("variable index out of range");
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.terms_.emplace(std::move(d), c * e[var]);
  }
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  if (!vars_ || var >= vars_->size()) throw InvalidInput("variable index out of range");
  Polynomial result(vars_, Rational(0));
  std::vector<Polynomial> powers{Polynomial(vars_, Rational(1))};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[var] = 0;
    result += monomial(vars_, std::move(rest), c) * powers[e[var]];
  }
  return result;
}

bool Polynomial::proportional_to(const Polynomial& p) const {
  if (is_zero() || p.is_zero()) return false;
  if (terms_.size() != p.terms_.size()) return false;
  const Rational ratio = p.terms_.begin()->second / terms_.begin()->second;
  return p == *this * ratio;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / terms_.begin()->second;
  return *this * inv;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool is_one = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (mag != 1 || is_one) {
      os << mag.get_str();
      if (!is_one) os << "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << vars_->name(i);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace jetinv
