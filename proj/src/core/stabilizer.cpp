#include "core/stabilizer.hpp"

#include <map>
#include <random>

namespace jetinv {

namespace {

class SparseSystem {
 public:
  explicit SparseSystem(std::size_t cols) : cols_(cols) {}

  void add(const WedgeKey& key, std::size_t col, const Rational& v) {
    auto [it, inserted] = row_of_.emplace(key, rows_.size());
    if (inserted) rows_.emplace_back();
    rows_[it->second][col] += v;
  }
  void add_row(std::map<std::size_t, Rational> row) { rows_.push_back(std::move(row)); }

  std::size_t rows() const { return rows_.size(); }

  std::vector<RationalVector> kernel() const {
    RationalMatrix m(rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) m(r, c) = v;
    return kernel_basis_tall(m);
  }

 private:
  std::size_t cols_;
  std::map<WedgeKey, std::size_t> row_of_;
  std::vector<std::map<std::size_t, Rational>> rows_;
};

// E_{a,b}.w for the matrix unit sending e_b to e_a.
WedgeVector unit_apply(const SymBasis& basis, std::size_t a, std::size_t b, const WedgeVector& w) {
  RationalMatrix x(static_cast<std::size_t>(basis.n()), static_cast<std::size_t>(basis.n()));
  x(a, b) = 1;
  return lie_apply(basis, x, w);
}

StabilizerResult solve(const WedgeVector& w, int twist_rank, const Rational& twist_scale, LieAlgebra algebra,
                       StabilizerMode mode) {
  if (w.is_zero()) throw InvalidInput("stabilizer of the zero vector");
  const auto n = static_cast<std::size_t>(w.n);
  const SymBasis basis(w.n, w.k);
  const bool projective = mode == StabilizerMode::projective;
  const std::size_t unknowns = n * n + (projective ? 1 : 0);
  SparseSystem sys(unknowns);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [key, v] : unit_apply(basis, a, b, w).terms) sys.add(key, a * n + b, v);
  if (projective) {
    for (const auto& [key, v] : w.terms) sys.add(key, n * n, -v);
  } else if (twist_rank > 0 && twist_scale != 0) {
    // X.w + (b / a) tr(X|span) w = 0.
    for (std::size_t a = 0; a < static_cast<std::size_t>(twist_rank); ++a)
      for (const auto& [key, v] : w.terms) sys.add(key, a * n + a, twist_scale * v);
  }
  if (twist_rank > 0) {
    for (std::size_t a = static_cast<std::size_t>(twist_rank); a < n; ++a)
      for (std::size_t b = 0; b < static_cast<std::size_t>(twist_rank); ++b) sys.add_row({{a * n + b, Rational(1)}});
  }
  if (algebra == LieAlgebra::sl) {
    std::map<std::size_t, Rational> trace;
    for (std::size_t a = 0; a < n; ++a) trace[a * n + a] = 1;
    sys.add_row(std::move(trace));
  }

  StabilizerResult out;
  out.unknowns = unknowns;
  out.equations = sys.rows();
  for (const auto& v : sys.kernel()) {
    RationalMatrix x(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) x(a, b) = v[a * n + b];
    out.basis.push_back(std::move(x));
  }
  out.dimension = out.basis.size();
  return out;
}

RationalVector flatten(const RationalMatrix& m) {
  RationalVector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Dimension of span(mats) intersected with the traceless matrices.
std::size_t sl_intersection_dim(const std::vector<RationalMatrix>& mats) {
  const std::size_t cols = mats.front().rows() * mats.front().cols();
  std::vector<RationalVector> rows;
  for (const auto& m : mats) rows.push_back(flatten(m));
  const std::size_t r = rank(from_rows(rows, cols));
  bool trace_seen = false;
  for (const auto& m : mats) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    trace_seen = trace_seen || t != 0;
  }
  return trace_seen ? r - 1 : r;
}

}  // namespace

StabilizerResult infinitesimal_stabilizer(const WedgeVector& w, LieAlgebra algebra, StabilizerMode mode) {
  return solve(w, 0, Rational(0), algebra, mode);
}

StabilizerResult infinitesimal_stabilizer(const TwistedPoint& x, LieAlgebra algebra, StabilizerMode mode) {
  if (x.a < 1 || x.b < 0) throw InvalidInput("twisted point needs a >= 1 and b >= 0");
  if (x.twist_rank < 1 || x.twist_rank > x.wedge.n) throw InvalidInput("twist rank out of range");
  return solve(x.wedge, x.b == 0 ? 0 : x.twist_rank, Rational(x.b) / x.a, algebra, mode);
}

bool fixes_projectively(const RationalMatrix& x, const WedgeVector& w) {
  const SymBasis basis(w.n, w.k);
  return wedge_ratio(lie_apply(basis, x, w), w).has_value();
}

ExtraCheck check_extra_stabilizer(int sigma, int k, int trials, std::uint64_t seed, int coeff_bound) {
  const ExtraStabilizer ex = extra_stabilizer(sigma, k);
  const WedgeVector z = z_closed_form(sigma, k, LimitKind::regular);
  ExtraCheck out;
  out.case_number = ex.case_number;
  out.description = ex.description;
  out.fixes_limit_point = true;
  out.fixes_projectively = true;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const WedgeVector moved = wedge_apply(ex.evaluate(random_nonzero_rational(rng, coeff_bound)), z);
    out.fixes_limit_point = out.fixes_limit_point && moved == z;
    out.fixes_projectively = out.fixes_projectively && proportional(moved, z);
  }

  std::vector<RationalMatrix> mats = limit_stabilizer_matrix(sigma, k).lie_directions();
  const auto uk = static_cast<std::size_t>(k);
  RationalMatrix torus(uk, uk);
  for (int i = 1; i <= k; ++i) torus(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = defect(sigma, i);
  mats.push_back(torus);
  std::vector<RationalVector> rows;
  for (const auto& m : mats) rows.push_back(flatten(m));
  const std::size_t before = rank(from_rows(rows, uk * uk));
  rows.push_back(flatten(ex.direction));
  const std::size_t after = rank(from_rows(rows, uk * uk));
  out.independent = after == before + 1;
  mats.push_back(ex.direction);
  out.sl_span_dim = sl_intersection_dim(mats);
  return out;
}

bool CodimReport::all_bounds_ok() const {
  for (const auto& c : candidates)
    if (!c.bound_ok) return false;
  return true;
}

CodimReport codim_report(int k, int M, std::uint64_t seed, int coeff_bound) {
  if (k < 2) throw InvalidInput("codim report needs k >= 2");
  if (M < 1) throw InvalidInput("codim report needs M >= 1");
  CodimReport rep;
  rep.k = k;
  rep.M = M;
  rep.K = M * k * (k + 1) / 2 + 1;
  rep.theorem_applies = k >= 4;
  const WedgeVector pk = p_point(1, k);
  rep.base_stabilizer_dim =
      infinitesimal_stabilizer(TwistedPoint{pk, 1, rep.K, 1}, LieAlgebra::sl, StabilizerMode::affine).dimension;
  rep.base_projective_dim = infinitesimal_stabilizer(pk, LieAlgebra::sl, StabilizerMode::projective).dimension;
  rep.open_orbit_dim = static_cast<std::size_t>(k * k - 1) - rep.base_projective_dim;
  if (k < 3) return rep;

  auto add = [&](const std::string& kind, int sigma, const OneParamSubgroup& lambda, LimitKind lk) {
    Candidate c;
    c.kind = kind;
    c.sigma = sigma;
    const WedgeVector z = limit_point(pk, lambda);
    c.closed_form_matches = z == z_closed_form(sigma, k, lk);
    c.proj_stab_dim = infinitesimal_stabilizer(z, LieAlgebra::sl, StabilizerMode::projective).dimension;
    c.orbit_codim = static_cast<long>(c.proj_stab_dim) - static_cast<long>(rep.base_projective_dim);
    c.bound_ok = c.proj_stab_dim >= static_cast<std::size_t>(k + 1);
    if (lk == LimitKind::regular) {
      try {
        c.extra = check_extra_stabilizer(sigma, k, 5, seed + static_cast<std::uint64_t>(sigma), coeff_bound);
      } catch (const InvalidInput&) {
        // (sigma, k) outside the three cases: no extra transformation.
      }
    }
    rep.candidates.push_back(std::move(c));
  };
  for (int sigma = 2; sigma <= k; ++sigma) add("lambda", sigma, lambda_sigma(sigma, k), LimitKind::regular);
  for (int sigma = 2; sigma <= k - 1; ++sigma) add("mu", sigma, mu_sigma(sigma, k), LimitKind::degenerate);
  return rep;
}

std::uint64_t probe_cost(int p, int k) {
  const auto n = static_cast<std::uint64_t>(sym_dim_upto(p, k));
  // Terms of the point: product of the column sizes, which never merge.
  const PhiMatrix<Rational> m = phi(distinguished_jet(p, k));
  std::uint64_t terms = 1;
  for (std::size_t c = 0; c < m.m.cols(); ++c) {
    std::uint64_t nz = 0;
    for (std::size_t r = 0; r < m.m.rows(); ++r) nz += m.m(r, c) == 0 ? 0 : 1;
    terms *= nz;
    if (terms > (1ull << 40)) break;
  }
  return n * n * terms * n;
}

ProbeReport p1_probe_conjecture(int p, int k, int M, bool force, std::uint64_t ceiling) {
  if (p < 1 || k < 1 || M < 1) throw InvalidInput("probe needs p, k, M >= 1");
  ProbeReport rep;
  rep.p = p;
  rep.k = k;
  rep.M = M;
  rep.n = static_cast<int>(sym_dim_upto(p, k));
  long weight = 0;
  for (int i = 1; i <= k; ++i) weight += i * sym_dim(p, i).get_si();
  rep.K = static_cast<int>(M * weight + 1);
  rep.cost = probe_cost(p, k);
  if (!force && rep.cost > ceiling) {
    throw ResourceLimit("probe at (p, k) = (" + std::to_string(p) + ", " + std::to_string(k) + ") has cost " +
                        std::to_string(rep.cost) + " over the ceiling " + std::to_string(ceiling));
  }
  rep.predicted_dim = static_cast<std::size_t>(p * rep.n - 1);
  rep.sl_dim = static_cast<std::size_t>(rep.n * rep.n - 1);
  rep.measured_dim = infinitesimal_stabilizer(TwistedPoint{p_point(p, k), 1, rep.K, p}, LieAlgebra::sl,
                                              StabilizerMode::affine)
                         .dimension;
  return rep;
}

}  // namespace jetinv
