#pragma once

#include "core/flag.hpp"

#include <json.hpp>

namespace jetinv {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json monomial_json(const SymMonomial& m);

// {"p", "q", "k", "coeffs": {"[s1,...,sp]": ["r1", ..., "rq"]}}
Json jet_json(const RationalJet& f);
RationalJet jet_from_json(const Json& j);

// {"n", "k", "r", "terms": [{"factors": [[1],[1,2]], "coeff": "1"}]}
Json wedge_json(const WedgeVector& w);
WedgeVector wedge_from_json(const Json& j);

// {"text": "...", "terms": [{"coeff": "2", "exponents": {"u[1][1]": 1}}]}
Json polynomial_json(const Polynomial& p);

Json matrix_json(const RationalMatrix& m);
Json poly_matrix_json(const PolyMatrix& m);  // entries as text

}  // namespace jetinv
