#include "core/json_io.hpp"

namespace jetinv {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  throw InvalidInput("rational must be a string or an integer");
}

Json monomial_json(const SymMonomial& m) { return Json(m.entries); }

Json jet_json(const RationalJet& f) {
  Json coeffs = Json::object();
  for (std::size_t s = 0; s < f.size(); ++s) {
    Json col = Json::array();
    for (int c = 0; c < f.q; ++c) col.push_back(rational_json(f.coeffs(static_cast<std::size_t>(c), s)));
    coeffs[exponent_key(f.source->at(s).exponents(f.p))] = col;
  }
  return Json{{"p", f.p}, {"q", f.q}, {"k", f.k}, {"coeffs", coeffs}};
}

namespace {

std::vector<int> parse_key(const std::string& key) {
  Json arr;
  try {
    arr = Json::parse(key);
  } catch (const Json::exception&) {
    throw InvalidInput("malformed multi-index key: " + key);
  }
  if (!arr.is_array()) throw InvalidInput("malformed multi-index key: " + key);
  std::vector<int> v;
  for (const auto& x : arr) {
    if (!x.is_number_integer() || x.get<int>() < 0) throw InvalidInput("malformed multi-index key: " + key);
    v.push_back(x.get<int>());
  }
  return v;
}

int get_positive(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer() || j[field].get<int>() < 1) {
    throw InvalidInput(std::string("missing or invalid field '") + field + "'");
  }
  return j[field].get<int>();
}

}  // namespace

RationalJet jet_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("jet must be a JSON object");
  RationalJet f(get_positive(j, "p"), get_positive(j, "q"), get_positive(j, "k"));
  if (!j.contains("coeffs") || !j["coeffs"].is_object()) throw InvalidInput("jet needs a 'coeffs' object");
  for (const auto& [key, col] : j["coeffs"].items()) {
    const auto exps = parse_key(key);
    if (static_cast<int>(exps.size()) != f.p) throw InvalidInput("multi-index length differs from p: " + key);
    const SymMonomial m = SymMonomial::from_exponents(exps);
    if (m.degree() < 1 || m.degree() > f.k) throw InvalidInput("multi-index degree out of range: " + key);
    if (!col.is_array() || static_cast<int>(col.size()) != f.q) throw InvalidInput("coefficient vector must have q entries");
    const std::size_t s = f.source->position(m);
    for (int c = 0; c < f.q; ++c) f.coeffs(static_cast<std::size_t>(c), s) = rational_from_json(col[static_cast<std::size_t>(c)]);
  }
  return f;
}

Json wedge_json(const WedgeVector& w) {
  const SymBasis basis(w.n, w.k);
  Json terms = Json::array();
  for (const auto& [key, c] : w.terms) {
    Json factors = Json::array();
    for (auto pos : key) factors.push_back(monomial_json(basis.at(pos)));
    terms.push_back(Json{{"factors", factors}, {"coeff", rational_json(c)}});
  }
  return Json{{"n", w.n}, {"k", w.k}, {"r", w.r}, {"terms", terms}};
}

WedgeVector wedge_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("wedge must be a JSON object");
  WedgeVector w;
  w.n = get_positive(j, "n");
  w.k = get_positive(j, "k");
  w.r = get_positive(j, "r");
  const SymBasis basis(w.n, w.k);
  if (!j.contains("terms") || !j["terms"].is_array()) throw InvalidInput("wedge needs a 'terms' array");
  for (const auto& t : j["terms"]) {
    if (!t.contains("factors") || !t["factors"].is_array() || static_cast<int>(t["factors"].size()) != w.r) {
      throw InvalidInput("wedge term must have r factors");
    }
    WedgeKey key;
    bool negative = false;
    for (const auto& f : t["factors"]) {
      SymMonomial m{f.get<std::vector<int>>()};
      std::sort(m.entries.begin(), m.entries.end());
      bool neg = false;
      if (!wedge_insert(key, basis.position(m), neg)) throw InvalidInput("wedge term with a repeated factor");
      negative = negative != neg;
    }
    Rational c = rational_from_json(t.at("coeff"));
    if (negative) c = -c;
    w.terms[key] += c;
  }
  for (auto it = w.terms.begin(); it != w.terms.end();) it = it->second == 0 ? w.terms.erase(it) : std::next(it);
  return w;
}

Json polynomial_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::object();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) exps[p.variables()->name(i)] = e[i];
    terms.push_back(Json{{"coeff", rational_json(c)}, {"exponents", exps}});
  }
  return Json{{"text", p.to_string()}, {"terms", terms}};
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json poly_matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace jetinv
