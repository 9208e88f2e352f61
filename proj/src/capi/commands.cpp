#include "capi/commands.hpp"

#include "core/hilbert_mumford.hpp"
#include "core/invariants.hpp"
#include "core/stabilizer.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace jetinv::api {

int Params::get_int(const std::string& key, int fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw InvalidInput("");
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("--" + key + " expects an integer, got '" + it->second + "'");
  }
}

std::uint64_t Params::get_u64(const std::string& key, std::uint64_t fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(it->second, &used);
    if (used != it->second.size() || it->second.front() == '-') throw InvalidInput("");
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("--" + key + " expects a non-negative integer, got '" + it->second + "'");
  }
}

std::string Params::get_str(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

bool Params::flag(const std::string& key) const {
  auto it = values_.find(key);
  return it != values_.end() && it->second != "0" && it->second != "false";
}

namespace {

int require_range(const Params& params, const std::string& key, int fallback, int lo, int hi) {
  const int v = params.get_int(key, fallback);
  if (v < lo || v > hi) {
    throw InvalidInput("--" + key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                       std::to_string(v));
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

Json basis_json(const SymBasis& b, int p) {
  Json arr = Json::array();
  for (const auto& m : b.elements()) arr.push_back(p > 0 ? Json(m.exponents(p)) : monomial_json(m));
  return arr;
}

// Inline JSON or @path.
Json load_json(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InvalidInput("cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON input: ") + e.what());
  }
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (width.size() <= j) width.push_back(0);
      width[j] = std::max(width[j], r[j].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      os << std::left << std::setw(static_cast<int>(width[j])) << r[j];
      if (j + 1 < r.size()) os << "  ";
    }
    os << "\n";
  }
  return os.str();
}

std::string monomial_label(const SymMonomial& m, const std::string& prefix = "e") {
  std::string s = prefix;
  for (int e : m.entries) s += std::to_string(e);
  return s;
}

// ---------------------------------------------------------------- group-matrix

Output group_matrix_cmd(const Params& params) {
  const int p = require_range(params, "p", 1, 1, 4);
  const int k = require_range(params, "k", 3, 1, 8);
  if (sym_dim_upto(p, k) > 60 && !params.flag("force")) throw ResourceLimit("group matrix larger than 60x60");
  const SymBasis basis(p, k);
  Output out;
  out.json = Json{{"p", p}, {"k", k}, {"basis", basis_json(basis, p)}};
  std::vector<std::vector<std::string>> rows;
  if (params.has("params") && !params.flag("symbolic")) {
    const auto parts = split(params.get_str("params"), ',');
    if (parts.size() != basis.size() * static_cast<std::size_t>(p)) {
      throw InvalidInput("--params needs " + std::to_string(basis.size() * static_cast<std::size_t>(p)) + " values");
    }
    RationalJet psi(p, p, k);
    for (std::size_t i = 0; i < parts.size(); ++i) psi.coeffs(i / basis.size(), i % basis.size()) = parse_rational(parts[i]);
    const RationalMatrix m = group_matrix(psi);
    out.json["symbolic"] = false;
    out.json["matrix"] = matrix_json(m);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<std::string> r;
      for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
      rows.push_back(r);
    }
  } else {
    const PolyJet psi = symbolic_reparam(p, k);
    const PolyMatrix m = group_matrix(psi);
    out.json["symbolic"] = true;
    out.json["variables"] = psi.coeffs(0, 0).variables()->names();
    out.json["matrix"] = poly_matrix_json(m);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<std::string> r;
      for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
      rows.push_back(r);
    }
    if (params.flag("closed-form")) {
      const VarSetPtr vars = psi.coeffs(0, 0).variables();
      bool all = true;
      Json entries = Json::array();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const Polynomial closed = p == 1 ? gk_entry(basis.at(i).degree(), basis.at(j).degree(), vars)
                                           : gkp_entry(basis.at(i), basis.at(j).exponents(p), p, vars);
          const bool ok = closed == m(i, j);
          all = all && ok;
          if (!closed.is_zero()) entries.push_back(Json{{"row", i + 1}, {"col", j + 1}, {"entry", closed.to_string()}, {"matches", ok}});
        }
      }
      out.json["closed_form"] = Json{{"matches", all}, {"entries", entries}};
      out.violated = !all;
    }
  }
  out.text = table(rows);
  if (out.json.contains("closed_form")) {
    out.text += std::string("closed-form entries ") + (out.json["closed_form"]["matches"].get<bool>() ? "match" : "DIFFER") +
                " the composition oracle\n";
  }
  return out;
}

// ------------------------------------------------------------------------- phi

Output phi_cmd(const Params& params) {
  const int p = require_range(params, "p", 1, 1, 4);
  const int k = require_range(params, "k", 2, 1, 8);
  const int n = require_range(params, "n", 2, 1, 12);
  if (sym_dim_upto(n, k) > 2000 && !params.flag("force")) throw ResourceLimit("Sym^{<=k} C^n larger than 2000");
  Output out;
  std::vector<std::vector<std::string>> rows;
  const SymBasis target(n, k);
  const SymBasis source(p, k);
  std::vector<std::string> header{""};
  for (const auto& m : source.elements()) header.push_back(exponent_key(m.exponents(p)));
  rows.push_back(header);
  out.json = Json{{"p", p}, {"k", k}, {"n", n}, {"rows", basis_json(target, 0)}, {"cols", basis_json(source, p)}};
  if (params.flag("symbolic")) {
    const PhiMatrix<Polynomial> m = phi(symbolic_jet(p, n, k));
    out.json["symbolic"] = true;
    out.json["matrix"] = poly_matrix_json(m.m);
    for (std::size_t i = 0; i < m.m.rows(); ++i) {
      std::vector<std::string> r{monomial_label(target.at(i))};
      for (std::size_t j = 0; j < m.m.cols(); ++j) r.push_back(m.m(i, j).to_string());
      rows.push_back(r);
    }
  } else {
    RationalJet gamma;
    if (params.has("jet")) {
      gamma = jet_from_json(load_json(params.get_str("jet")));
      if (gamma.p != p || gamma.q != n || gamma.k != k) throw InvalidInput("--jet does not match --p/--n/--k");
    } else {
      std::mt19937_64 rng(params.get_u64("seed", 0));
      gamma = random_jet(p, n, k, rng, require_range(params, "coeff-bound", 20, 1, 1'000'000));
    }
    const PhiMatrix<Rational> m = phi(gamma);
    const WedgeVector w = wedge_all_columns(m);
    std::vector<int> dims;
    for (const auto& span : flag_spans(m)) dims.push_back(static_cast<int>(span.size()));
    out.json["symbolic"] = false;
    out.json["jet"] = jet_json(gamma);
    out.json["matrix"] = matrix_json(m.m);
    out.json["plucker"] = wedge_json(w);
    out.json["in_affine_chart"] = in_affine_chart(w);
    out.json["flag_dims"] = dims;
    for (std::size_t i = 0; i < m.m.rows(); ++i) {
      std::vector<std::string> r{monomial_label(target.at(i))};
      for (std::size_t j = 0; j < m.m.cols(); ++j) r.push_back(to_string(m.m(i, j)));
      rows.push_back(r);
    }
  }
  out.text = table(rows);
  if (out.json.contains("flag_dims")) {
    out.text += "flag dims: " + out.json["flag_dims"].dump() + ", in affine chart: " +
                (out.json["in_affine_chart"].get<bool>() ? "yes" : "no") + "\n";
  }
  return out;
}

// ------------------------------------------------------------------ generators

Output generators_cmd(const Params& params) {
  const int n = require_range(params, "n", 2, 1, 12);
  const int k = require_range(params, "k", 2, 1, 8);
  const int p = require_range(params, "p", 1, 1, 4);
  const std::uint64_t ceiling = params.flag("force") ? 0 : 5'000'000;
  const auto gens = generator_set(n, k, p, ceiling);
  Output out;
  Json list = Json::array();
  std::map<std::vector<int>, int> per_degree;
  for (const auto& g : gens) {
    Json rows = Json::array();
    for (const auto& r : g.rows) rows.push_back(monomial_json(r));
    list.push_back(Json{{"provenance", {{"rows", rows}, {"columns", g.columns}}},
                        {"weighted_degree", g.weighted_degree},
                        {"ordinary_degree", g.ordinary_degree},
                        {"polynomial", polynomial_json(g.poly)}});
    ++per_degree[g.weighted_degree];
  }
  out.json = Json{{"n", n}, {"k", k}, {"p", p}, {"count", gens.size()}, {"generators", list}};
  std::vector<std::vector<std::string>> rows{{"weighted degree", "count"}};
  for (const auto& [d, c] : per_degree) rows.push_back({Json(d).dump(), std::to_string(c)});
  out.text = table(rows) + "total: " + std::to_string(gens.size()) + "\n";
  if (params.flag("verify")) {
    const int trials = require_range(params, "trials", 100, 1, 100'000);
    const auto reports = verify_invariance_batch(gens, trials, params.get_u64("seed", 0),
                                                 require_range(params, "coeff-bound", 20, 1, 1'000'000));
    std::size_t failed = 0;
    Json witness = nullptr;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (reports[i].passed) continue;
      if (failed++ == 0 && reports[i].witness) {
        const auto& w = *reports[i].witness;
        witness = Json{{"generator", i}, {"kind", w.kind}, {"gamma", jet_json(w.gamma)}};
        if (w.psi) witness["psi"] = jet_json(*w.psi);
      }
    }
    out.json["verification"] = Json{{"trials", trials}, {"failed", failed}, {"witness", witness}};
    out.text += "invariance: " + std::to_string(gens.size() - failed) + "/" + std::to_string(gens.size()) +
                " passed " + std::to_string(trials) + " trials\n";
    out.violated = failed != 0;
  }
  return out;
}

// ------------------------------------------------------------------ test-curve

Output test_curve_cmd(const Params& params) {
  const int p = require_range(params, "p", 1, 1, 3);
  const int k = require_range(params, "k", 2, 1, 6);
  const int n = require_range(params, "n", 2, 1, 8);
  const int N = require_range(params, "N", 1, 1, 8);
  if (sym_dim_upto(n, k) * static_cast<std::size_t>(N) > 4000 && !params.flag("force")) {
    throw ResourceLimit("test-curve system with more than 4000 unknowns");
  }
  RationalJet gamma;
  if (params.has("jet")) {
    gamma = jet_from_json(load_json(params.get_str("jet")));
    if (gamma.p != p || gamma.q != n || gamma.k != k) throw InvalidInput("--jet does not match --p/--n/--k");
  } else {
    if (n < p) throw InvalidInput("random regular jets need n >= p");
    std::mt19937_64 rng(params.get_u64("seed", 0));
    gamma = random_regular_jet(p, n, k, rng, require_range(params, "coeff-bound", 20, 1, 1'000'000));
  }
  const TestCurveSystem sys = test_curve_system(gamma, N);
  const std::size_t r = rank(sys.matrix);
  const std::size_t expected = sym_dim_upto(p, k) * static_cast<std::size_t>(N);
  const bool regular = rank(linear_part(gamma)) == static_cast<std::size_t>(p);
  const bool perp = same_row_space(sys.matrix, perp_system(gamma, N));
  Output out;
  out.json = Json{{"p", p}, {"k", k}, {"n", n}, {"N", N}, {"jet", jet_json(gamma)}, {"regular", regular},
                  {"equations", sys.matrix.rows()}, {"unknowns", sys.matrix.cols()}, {"rank", r},
                  {"expected_codim", expected}, {"solution_space_equals_perp", perp}, {"matrix", matrix_json(sys.matrix)}};
  out.text = "equations: " + std::to_string(sys.matrix.rows()) + ", unknowns: " + std::to_string(sys.matrix.cols()) +
             "\nrank: " + std::to_string(r) + " (expected " + std::to_string(expected) + ")" +
             "\nsolution space equals perp: " + (perp ? "yes" : "no") + "\n";
  out.violated = regular && (r != expected || !perp);
  return out;
}

// ----------------------------------------------------------------------- orbit

OneParamSubgroup subgroup_from(const Params& params, int k, std::string& kind, int& sigma) {
  kind = params.get_str("kind", "lambda");
  if (kind == "tilde") {
    sigma = 0;
    return lambda_tilde(k);
  }
  sigma = params.get_int("sigma", 2);
  if (kind == "lambda" || kind == "regular") {
    kind = "lambda";
    return lambda_sigma(sigma, k);
  }
  if (kind == "mu" || kind == "degenerate") {
    kind = "mu";
    return mu_sigma(sigma, k);
  }
  throw InvalidInput("--kind must be lambda, mu or tilde");
}

Json weights_json(const OneParamSubgroup& l) {
  Json arr = Json::array();
  for (const auto& w : l) arr.push_back(w.to_string());
  return arr;
}

Output orbit_limit_cmd(const Params& params) {
  const int k = require_range(params, "k", 4, 2, 7);
  std::string kind;
  int sigma = 0;
  const OneParamSubgroup lambda = subgroup_from(params, k, kind, sigma);
  const WedgeVector z = limit_point(p_point(1, k), lambda);
  const Head h = head(lambda);
  Output out;
  out.json = Json{{"k", k}, {"kind", kind}, {"sigma", sigma}, {"weights", weights_json(lambda)},
                  {"head", {{"index", h.index}, {"regular", h.regular}}},
                  {"toral_dimension", toral_dimension(lambda, k)}, {"limit", wedge_json(z)}};
  out.text = "weights: " + out.json["weights"].dump() + "\nlimit: " + to_string(SymBasis(k, k), z) +
             "\ntoral dimension: " + std::to_string(toral_dimension(lambda, k)) + "\n";
  return out;
}

Output orbit_closed_form_cmd(const Params& params) {
  const int k = require_range(params, "k", 4, 2, 7);
  std::string kind;
  int sigma = 0;
  const OneParamSubgroup lambda = subgroup_from(params, k, kind, sigma);
  if (kind == "tilde") throw InvalidInput("closed forms exist for lambda and mu only");
  const LimitKind lk = kind == "lambda" ? LimitKind::regular : LimitKind::degenerate;
  const WedgeVector z = z_closed_form(sigma, k, lk);
  const bool equal = z == limit_point(p_point(1, k), lambda);
  Output out;
  out.json = Json{{"k", k}, {"kind", kind}, {"sigma", sigma}, {"closed_form", wedge_json(z)}, {"equals_limit", equal}};
  out.text = "closed form: " + to_string(SymBasis(k, k), z) + "\nequals brute-force limit: " + (equal ? "yes" : "NO") + "\n";
  out.violated = !equal;
  return out;
}

Output orbit_stabilizer_cmd(const Params& params) {
  const int k = require_range(params, "k", 2, 2, 6);
  Output out;
  if (params.has("sigma") || params.has("kind")) {
    std::string kind;
    int sigma = 0;
    const OneParamSubgroup lambda = subgroup_from(params, k, kind, sigma);
    const WedgeVector z = limit_point(p_point(1, k), lambda);
    const auto res = infinitesimal_stabilizer(z, LieAlgebra::sl, StabilizerMode::projective);
    Json basis = Json::array();
    for (const auto& x : res.basis) basis.push_back(matrix_json(x));
    out.json = Json{{"k", k}, {"kind", kind}, {"sigma", sigma}, {"mode", "projective"}, {"algebra", "sl"},
                    {"dimension", res.dimension}, {"bound", k + 1}, {"basis", basis}};
    out.text = "projective sl(" + std::to_string(k) + ") stabilizer of the " + kind + "^" + std::to_string(sigma) +
               " limit point: dimension " + std::to_string(res.dimension) + "\n";
    return out;
  }
  const int M = require_range(params, "M", 1, 1, 10);
  const int K = M * k * (k + 1) / 2 + 1;
  const auto res = infinitesimal_stabilizer(TwistedPoint{p_point(1, k), 1, K, 1}, LieAlgebra::sl, StabilizerMode::affine);
  Json basis = Json::array();
  for (const auto& x : res.basis) basis.push_back(matrix_json(x));
  out.json = Json{{"k", k}, {"M", M}, {"K", K}, {"mode", "affine"}, {"algebra", "sl"}, {"dimension", res.dimension},
                  {"expected", k - 1}, {"basis", basis}};
  out.text = "affine sl(" + std::to_string(k) + ") stabilizer of p_" + std::to_string(k) + " (x) e1^" + std::to_string(K) +
             ": dimension " + std::to_string(res.dimension) + " (expected " + std::to_string(k - 1) + ")\n";
  out.violated = res.dimension != static_cast<std::size_t>(k - 1);
  return out;
}

Output orbit_codim_cmd(const Params& params) {
  const int k = require_range(params, "k", 4, 2, 6);
  const int M = require_range(params, "M", 1, 1, 10);
  const CodimReport rep = codim_report(k, M, params.get_u64("seed", 0), require_range(params, "coeff-bound", 20, 1, 1'000'000));
  Json cands = Json::array();
  std::vector<std::vector<std::string>> rows{{"kind", "sigma", "proj_stab_dim", "orbit_codim", "bound_ok", "extra"}};
  for (const auto& c : rep.candidates) {
    Json j{{"kind", c.kind}, {"sigma", c.sigma}, {"proj_stab_dim", c.proj_stab_dim}, {"orbit_codim", c.orbit_codim},
           {"bound_ok", c.bound_ok}, {"closed_form_matches", c.closed_form_matches}};
    std::string extra = "-";
    if (c.extra) {
      j["extra_transformation"] = Json{{"case", c.extra->case_number}, {"map", c.extra->description},
                                       {"fixes_limit_point", c.extra->fixes_limit_point},
                                       {"independent", c.extra->independent}, {"sl_span_dim", c.extra->sl_span_dim}};
      extra = "case " + std::to_string(c.extra->case_number) + (c.extra->fixes_limit_point ? ", fixes" : ", MOVES") +
              (c.extra->independent ? ", independent" : ", dependent");
    }
    cands.push_back(j);
    rows.push_back({c.kind, std::to_string(c.sigma), std::to_string(c.proj_stab_dim), std::to_string(c.orbit_codim),
                    c.bound_ok ? "yes" : "NO", extra});
  }
  Output out;
  out.json = Json{{"k", k}, {"M", M}, {"K", rep.K}, {"base_stabilizer_dim", rep.base_stabilizer_dim},
                  {"base_projective_dim", rep.base_projective_dim}, {"open_orbit_dim", rep.open_orbit_dim},
                  {"theorem_applies", rep.theorem_applies}, {"candidates", cands}};
  std::ostringstream os;
  os << "k=" << k << " M=" << M << " K=" << rep.K << "\n"
     << "affine sl(k) stabilizer of p_k (x) e1^K: " << rep.base_stabilizer_dim << "\n"
     << "open orbit dimension: " << rep.open_orbit_dim << "\n";
  if (!rep.candidates.empty()) os << table(rows);
  if (rep.theorem_applies) {
    os << "verdict: " << (rep.all_bounds_ok() ? "every candidate has stabilizer dim >= k+1, boundary codimension >= 2"
                                               : "bound FAILS for some candidate")
       << "\n";
  } else if (!rep.candidates.empty()) {
    os << "verdict: informative only (k < 4)\n";
  }
  out.text = os.str();
  out.violated = rep.theorem_applies && !rep.all_bounds_ok();
  return out;
}

Output orbit_probe_cmd(const Params& params) {
  const int p = require_range(params, "p", 2, 1, 4);
  const int k = require_range(params, "k", 2, 1, 8);
  const int M = require_range(params, "M", 1, 1, 10);
  const ProbeReport rep = p1_probe_conjecture(p, k, M, params.flag("force"));
  Output out;
  out.json = Json{{"p", p}, {"k", k}, {"M", M}, {"n", rep.n}, {"K", rep.K}, {"measured_dim", rep.measured_dim},
                  {"predicted_dim", rep.predicted_dim}, {"sl_dim", rep.sl_dim}, {"matches", rep.matches()}};
  out.text = "n=" + std::to_string(rep.n) + " K=" + std::to_string(rep.K) + ": measured stabilizer dim " +
             std::to_string(rep.measured_dim) + " in sl(" + std::to_string(rep.n) + "), predicted " +
             std::to_string(rep.predicted_dim) + (rep.matches() ? " (match)" : " (MISMATCH)") + "\n";
  return out;
}

Output orbit_limit_stabilizer_cmd(const Params& params) {
  const int k = require_range(params, "k", 4, 2, 7);
  const int sigma = require_range(params, "sigma", 2, 2, k);
  const LimitStabilizer ls = limit_stabilizer_matrix(sigma, k);
  const auto dirs = ls.lie_directions();
  std::vector<RationalVector> rows;
  for (const auto& d : dirs) {
    RationalVector v;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) v.push_back(d(i, j));
    rows.push_back(v);
  }
  const std::size_t dim = rank(from_rows(rows, static_cast<std::size_t>(k * k)));
  Json n = Json::array();
  for (const auto& x : ls.n) n.push_back(x.to_string());
  Output out;
  out.json = Json{{"k", k}, {"sigma", sigma}, {"n", n}, {"matrix", poly_matrix_json(ls.matrix)}, {"lie_dimension", dim}};
  std::vector<std::vector<std::string>> t;
  for (std::size_t i = 0; i < ls.matrix.rows(); ++i) {
    std::vector<std::string> r;
    for (std::size_t j = 0; j < ls.matrix.cols(); ++j) r.push_back(ls.matrix(i, j).to_string());
    t.push_back(r);
  }
  out.text = table(t) + "n_i: " + n.dump() + "\nLie algebra dimension: " + std::to_string(dim) + "\n";
  out.violated = dim != static_cast<std::size_t>(k);
  return out;
}

Output orbit_torus_cmd(const Params& params) {
  // "1,0;-1,0" lists weight vectors separated by ';'.
  std::vector<std::vector<long>> weights;
  for (const auto& item : split(params.get_str("weights"), ';')) {
    std::vector<long> w;
    for (const auto& x : split(item, ',')) {
      try {
        std::size_t used = 0;
        w.push_back(std::stol(x, &used));
        if (used != x.size()) throw InvalidInput("");
      } catch (const std::exception&) {
        throw InvalidInput("--weights expects integers, got '" + x + "'");
      }
    }
    weights.push_back(std::move(w));
  }
  const Stability s = hilbert_mumford_torus(weights);
  Output out;
  out.json = Json{{"weights", weights}, {"classification", to_string(s)}};
  out.text = to_string(s) + "\n";
  return out;
}

// -------------------------------------------------------------------- fixtures

struct Fixture {
  std::string file;
  std::string command;
  Params params;
};

std::vector<Fixture> fixture_list() {
  auto make = [](std::string file, std::string command, std::vector<std::pair<std::string, std::string>> kv) {
    Params p;
    for (auto& [k, v] : kv) p.set(k, v);
    return Fixture{std::move(file), std::move(command), p};
  };
  return {
      make("group_matrix_p1_k4.json", "group-matrix", {{"p", "1"}, {"k", "4"}, {"symbolic", "1"}}),
      make("group_matrix_p2_k3.json", "group-matrix", {{"p", "2"}, {"k", "3"}, {"symbolic", "1"}}),
      make("phi_n2_k2.json", "phi", {{"p", "1"}, {"n", "2"}, {"k", "2"}, {"symbolic", "1"}}),
      make("generators_n2_k2.json", "generators", {{"n", "2"}, {"k", "2"}}),
      make("phi_n3_k3.json", "phi", {{"p", "1"}, {"n", "3"}, {"k", "3"}, {"symbolic", "1"}}),
      make("phi_p2_k2.json", "phi", {{"p", "2"}, {"n", "2"}, {"k", "2"}, {"symbolic", "1"}}),
      make("limit_lambda2_k4.json", "orbit-limit", {{"k", "4"}, {"sigma", "2"}, {"kind", "lambda"}}),
      make("codim_report_k4.json", "orbit-codim-report", {{"k", "4"}, {"M", "1"}}),
  };
}

Output fixtures_cmd(const Params& params, bool regenerate) {
  const std::filesystem::path dir = params.get_str("dir", "tests/fixtures");
  if (regenerate) std::filesystem::create_directories(dir);
  Output out;
  Json files = Json::array();
  std::ostringstream os;
  for (const auto& f : fixture_list()) {
    const std::string body = run_command(f.command, f.params).json.dump(2) + "\n";
    const auto path = dir / f.file;
    if (regenerate) {
      std::ofstream o(path);
      if (!o) throw InvalidInput("cannot write " + path.string());
      o << body;
      files.push_back(Json{{"file", f.file}, {"status", "written"}});
      os << "wrote " << path.string() << "\n";
      continue;
    }
    std::ifstream in(path);
    std::string status;
    if (!in) {
      status = "missing";
    } else {
      std::stringstream ss;
      ss << in.rdbuf();
      status = ss.str() == body ? "match" : "differs";
    }
    if (status != "match") out.violated = true;
    files.push_back(Json{{"file", f.file}, {"status", status}});
    os << status << "  " << path.string() << "\n";
  }
  out.json = Json{{"dir", dir.string()}, {"files", files}};
  out.text = os.str();
  return out;
}

}  // namespace

Output run_command(const std::string& name, const Params& params) {
  static const std::map<std::string, std::function<Output(const Params&)>> table = {
      {"group-matrix", group_matrix_cmd},
      {"phi", phi_cmd},
      {"generators", generators_cmd},
      {"test-curve", test_curve_cmd},
      {"orbit-limit", orbit_limit_cmd},
      {"orbit-closed-form", orbit_closed_form_cmd},
      {"orbit-stabilizer", orbit_stabilizer_cmd},
      {"orbit-codim-report", orbit_codim_cmd},
      {"orbit-probe-p", orbit_probe_cmd},
      {"orbit-limit-stabilizer", orbit_limit_stabilizer_cmd},
      {"orbit-torus", orbit_torus_cmd},
      {"fixtures-regenerate", [](const Params& p) { return fixtures_cmd(p, true); }},
      {"fixtures-check", [](const Params& p) { return fixtures_cmd(p, false); }},
  };
  auto it = table.find(name);
  if (it == table.end()) throw InvalidInput("unknown command: " + name);
  return it->second(params);
}

}  // namespace jetinv::api
