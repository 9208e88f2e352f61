#include "core/eps_weight.hpp"

#include "core/errors.hpp"

namespace jetinv {

std::string EpsWeight::to_string() const {
  if (b == 0) return a.get_str();
  std::string s = a == 0 ? "" : a.get_str();
  if (b > 0) {
    if (!s.empty()) s += "+";
  } else {
    s += "-";
  }
  const Rational mag = abs(b);
  if (mag != 1) s += mag.get_str();
  return s + "eps";
}

EpsWeight weight_of(const OneParamSubgroup& lambda, const SymMonomial& tau) {
  EpsWeight w;
  for (int i : tau.entries) {
    if (i < 1 || i > static_cast<int>(lambda.size())) throw InvalidInput("monomial entry outside the weight vector");
    w += lambda[static_cast<std::size_t>(i - 1)];
  }
  return w;
}

OneParamSubgroup lambda_sigma(int sigma, int k) {
  if (sigma < 2 || sigma > k) throw InvalidInput("lambda^sigma needs 2 <= sigma <= k");
  OneParamSubgroup l;
  for (int i = 1; i <= k; ++i) l.emplace_back(Rational(i), Rational(-defect(sigma, i)));
  return l;
}

OneParamSubgroup mu_sigma(int sigma, int k) {
  if (sigma < 2 || sigma > k - 1) throw InvalidInput("mu^sigma needs 2 <= sigma <= k - 1");
  OneParamSubgroup l;
  for (int i = 1; i <= k; ++i) l.emplace_back(Rational(i), Rational(i == sigma ? 1 : 0));
  return l;
}

OneParamSubgroup lambda_tilde(int k) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  OneParamSubgroup l;
  for (int i = 1; i <= k; ++i) l.emplace_back(Rational(i));
  return l;
}

OneParamSubgroup substitute_eps(const OneParamSubgroup& lambda, const Rational& eps) {
  OneParamSubgroup l;
  for (const auto& w : lambda) l.emplace_back(w.at(eps));
  return l;
}

Head head(const OneParamSubgroup& lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i) {
    const EpsWeight line = static_cast<long>(i + 1) * lambda[0];
    if (lambda[i] != line) return Head{static_cast<int>(i + 1), lambda[i] < line};
  }
  return Head{};
}

std::vector<EpsWeight> rho(const OneParamSubgroup& lambda) {
  std::vector<EpsWeight> r(lambda.size() + 1);
  for (std::size_t j = 1; j <= lambda.size(); ++j) r[j] = static_cast<long>(j) * lambda[0] - lambda[j - 1];
  return r;
}

bool rho_superadditive(const OneParamSubgroup& lambda) {
  const auto r = rho(lambda);
  const int k = static_cast<int>(lambda.size());
  for (int j = 1; j <= k - 1; ++j) {
    for (const auto& tau : partitions_of(j)) {
      EpsWeight s;
      for (int part : tau.parts) s += r[static_cast<std::size_t>(part)];
      if (s > r[static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

}  // namespace jetinv
