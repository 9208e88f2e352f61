#include "doctest.h"

#include "core/orbit.hpp"
#include "core/stabilizer.hpp"
#include "support/oracles.hpp"
#include "support/test_support.hpp"

using namespace jetinv;
using jetinv::testing::wedge_of;

namespace {

EpsWeight W(long a, long b = 0) { return EpsWeight(Rational(a), Rational(b)); }

}  // namespace

TEST_SUITE("orbit-analysis") {

TEST_CASE("eps weights order lexicographically") {
  CHECK(W(1, 5) < W(2, -3));
  CHECK(W(2, -1) < W(2));
  CHECK(W(3, -2).to_string() == "3-2eps");
  CHECK(W(3, -2).at(Rational(1, 4)) == Rational(5, 2));
}

TEST_CASE("weights of monomials") {
  CHECK(weight_of({W(1), W(2), W(3)}, SymMonomial{{1, 2}}) == W(3));
  CHECK(weight_of(lambda_tilde(5), SymMonomial{{2, 3, 5}}) == W(10));
  CHECK(weight_of(lambda_sigma(2, 4), SymMonomial{{2, 2}}) == W(4, -2));
}

TEST_CASE("distinguished one-parameter subgroups") {
  CHECK(lambda_sigma(2, 4) == OneParamSubgroup{W(1), W(2, -1), W(3, -1), W(4, -2)});
  CHECK(mu_sigma(3, 4) == OneParamSubgroup{W(1), W(2), W(3, 1), W(4)});
  CHECK_THROWS_AS(lambda_sigma(1, 4), InvalidInput);
  CHECK_THROWS_AS(mu_sigma(4, 4), InvalidInput);
  for (int s = 2; s <= 5; ++s) {
    CHECK(head(lambda_sigma(s, 5)).index == s);
    CHECK(head(lambda_sigma(s, 5)).regular);
  }
  for (int s = 2; s <= 4; ++s) {
    CHECK(head(mu_sigma(s, 5)).index == s);
    CHECK_FALSE(head(mu_sigma(s, 5)).regular);
  }
  CHECK(head(lambda_tilde(4)).index == 0);
}

TEST_CASE("rho is superadditive for the regular subgroups") {
  for (int k = 2; k <= 6; ++k)
    for (int s = 2; s <= k; ++s) CHECK(rho_superadditive(lambda_sigma(s, k)));
}

TEST_CASE("limit points of p_4") {
  const WedgeVector p4 = p_point(1, 4);
  CHECK(limit_point(p4, lambda_tilde(4)) == p4);
  CHECK(limit_point(p4, lambda_sigma(2, 4)) ==
        wedge_of(4, 4, {{{{1}, 1}}, {{{2}, 1}}, {{{3}, 1}, {{1, 2}, 2}}, {{{4}, 1}, {{2, 2}, 1}}}));
  CHECK(limit_point(p4, mu_sigma(2, 4)) ==
        wedge_of(4, 4, {{{{1}, 1}}, {{{1, 1}, 1}}, {{{3}, 1}, {{1, 1, 1}, 1}}, {{{4}, 1}, {{1, 3}, 2}, {{1, 1, 1, 1}, 1}}}));
  WedgeVector zero;
  zero.n = 4;
  zero.k = 4;
  zero.r = 4;
  CHECK_THROWS_AS(limit_point(zero, lambda_tilde(4)), InvalidInput);
}

TEST_CASE("closed forms") {
  CHECK(z_closed_form(2, 4, LimitKind::regular) == limit_point(p_point(1, 4), lambda_sigma(2, 4)));
  const WedgeVector mu2 = z_closed_form(2, 4, LimitKind::degenerate);
  CHECK(mu2 == wedge_of(4, 4, {{{{1}, 1}}, {{{1, 1}, 1}}, {{{3}, 1}, {{1, 1, 1}, 1}}, {{{4}, 1}, {{1, 3}, 2}, {{1, 1, 1, 1}, 1}}}));
  CHECK_THROWS_AS(z_closed_form(4, 4, LimitKind::degenerate), InvalidInput);
}

TEST_CASE("toral dimension") {
  CHECK(toral_dimension(lambda_tilde(4), 4) == 1);
  CHECK(toral_dimension(lambda_sigma(2, 4), 4) == 2);
  const OneParamSubgroup low{W(1), W(-10), W(3), W(4)};
  CHECK(toral_dimension(low, 4) >= 2);
}

TEST_CASE("stabilizer of the twisted distinguished point") {
  for (int k = 2; k <= 4; ++k) {
    const int K = k * (k + 1) / 2 + 1;
    const auto r = infinitesimal_stabilizer(TwistedPoint{p_point(1, k), 1, K, 1}, LieAlgebra::sl, StabilizerMode::affine);
    CHECK(r.dimension == static_cast<std::size_t>(k - 1));
    for (const auto& x : r.basis) {
      // Elements of the stabilizer are strictly upper triangular.
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j) CHECK(x(i, j) == 0);
    }
  }
}

TEST_CASE("twist reduction agrees with the full tensor expansion") {
  const WedgeVector p2 = p_point(1, 2);
  for (int K = 1; K <= 3; ++K) {
    const auto r = infinitesimal_stabilizer(TwistedPoint{p2, 1, K, 1}, LieAlgebra::sl, StabilizerMode::affine);
    CHECK(r.dimension == jetinv::testing::twisted_stabilizer_dim_full_tensor(p2, K));
  }
}

TEST_CASE("stabilizers agree with the direct Lie action") {
  const std::vector<WedgeVector> points = {
      wedge_of(2, 2, {{{{1}, 1}}, {{{2}, 1}}}),
      p_point(1, 2),
      p_point(1, 3),
      z_closed_form(2, 3, LimitKind::regular),
      z_closed_form(2, 4, LimitKind::degenerate),
  };
  for (const auto& w : points) {
    for (bool projective : {false, true}) {
      const auto r = infinitesimal_stabilizer(w, LieAlgebra::sl, projective ? StabilizerMode::projective : StabilizerMode::affine);
      CHECK(r.dimension == jetinv::testing::stabilizer_dim_direct(w, projective));
      for (const auto& x : r.basis) CHECK(fixes_projectively(x, w));
    }
  }
}

TEST_CASE("the tilde generator stabilizes p_k projectively") {
  for (int k = 2; k <= 4; ++k) {
    RationalMatrix d(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) d(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = i + 1;
    CHECK(fixes_projectively(d, p_point(1, k)));
  }
}

TEST_CASE("limit stabilizer at k = 2") {
  const LimitStabilizer ls = limit_stabilizer_matrix(2, 2);
  const auto& b = ls.beta;
  CHECK(ls.matrix(0, 0) == Polynomial::variable(b, 0));
  CHECK(ls.matrix(1, 1) == Polynomial::variable(b, 0) * Polynomial::variable(b, 0));
  CHECK(ls.matrix(1, 0).is_zero());
}

TEST_CASE("limit stabilizer leading terms") {
  for (int k = 3; k <= 5; ++k) {
    for (int sigma = 2; sigma <= k; ++sigma) {
      const LimitStabilizer ls = limit_stabilizer_matrix(sigma, k);
      CHECK(ls.n[0] == EpsWeight());
      for (int i = 2; i <= k; ++i) {
        const int th = theta(lambda_sigma(sigma, k), i);
        REQUIRE(th + i - 1 <= k);
        const Polynomial& e = ls.matrix(static_cast<std::size_t>(th - 1), static_cast<std::size_t>(th + i - 2));
        Exponents exps(static_cast<std::size_t>(k), 0);
        exps[0] = static_cast<std::uint16_t>(th - 1);
        exps[static_cast<std::size_t>(i - 1)] += 1;
        CHECK_MESSAGE(e.coefficient(exps) != 0, "sigma " << sigma << " k " << k << " i " << i);
      }
    }
  }
}

TEST_CASE("limit stabilizer elements fix the limit point") {
  std::mt19937_64 rng(2);
  for (int sigma = 2; sigma <= 4; ++sigma) {
    const LimitStabilizer ls = limit_stabilizer_matrix(sigma, 4);
    const WedgeVector z = z_closed_form(sigma, 4, LimitKind::regular);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> beta;
      beta.push_back(random_nonzero_rational(rng, 9));
      for (int i = 1; i < 4; ++i) beta.push_back(random_rational(rng, 9));
      CHECK(proportional(wedge_apply(ls.evaluate(beta), z), z));
    }
  }
}

TEST_CASE("extra transformations") {
  const ExtraStabilizer c1 = extra_stabilizer(4, 4);
  CHECK(c1.case_number == 1);
  CHECK(c1.direction(3, 2) == 1);
  const ExtraStabilizer c2 = extra_stabilizer(3, 4);
  CHECK(c2.case_number == 2);
  CHECK(c2.direction(2, 3) == 1);
  const ExtraStabilizer c3 = extra_stabilizer(2, 5);
  CHECK(c3.case_number == 3);
  CHECK(c3.direction(1, 3) == 1);
  CHECK(c3.direction(2, 4) == 1);
  CHECK_THROWS_AS(extra_stabilizer(2, 3), InvalidInput);

  for (auto [sigma, k] : std::vector<std::pair<int, int>>{{4, 4}, {3, 4}, {2, 4}, {2, 5}, {3, 5}, {5, 5}}) {
    const ExtraStabilizer t = extra_stabilizer(sigma, k);
    const WedgeVector z = z_closed_form(sigma, k, LimitKind::regular);
    CHECK_MESSAGE(wedge_apply(t.evaluate(Rational(3, 7)), z) == z, "sigma " << sigma << " k " << k);
  }
}

TEST_CASE("extra transformations are independent of the limit stabilizer") {
  for (int sigma = 2; sigma <= 4; ++sigma) {
    const ExtraCheck c = check_extra_stabilizer(sigma, 4, 3, 1);
    CHECK(c.fixes_limit_point);
    CHECK(c.independent);
    CHECK(c.sl_span_dim >= 5);
  }
}

TEST_CASE("codimension reports") {
  const CodimReport r2 = codim_report(2, 1);
  CHECK(r2.base_stabilizer_dim == 1);
  CHECK(r2.candidates.empty());
  CHECK_FALSE(r2.theorem_applies);

  const CodimReport r3 = codim_report(3, 1);
  CHECK(r3.base_stabilizer_dim == 2);
  CHECK(r3.candidates.size() == 3);
  CHECK_FALSE(r3.theorem_applies);

  const CodimReport r4 = codim_report(4, 1);
  CHECK(r4.K == 11);
  CHECK(r4.base_stabilizer_dim == 3);
  CHECK(r4.open_orbit_dim == 12);
  CHECK(r4.candidates.size() == 5);
  CHECK(r4.all_bounds_ok());
}

TEST_CASE("conjecture probe") {
  const ProbeReport r = p1_probe_conjecture(2, 2, 1);
  CHECK(r.n == 5);
  CHECK(r.K == 9);
  CHECK(r.predicted_dim == 9);
  CHECK(r.sl_dim == 24);
  for (int k = 2; k <= 4; ++k) CHECK(p1_probe_conjecture(1, k, 1).measured_dim == static_cast<std::size_t>(k - 1));
  CHECK_THROWS_AS(p1_probe_conjecture(2, 3, 1), ResourceLimit);
}

TEST_CASE("Hilbert-Mumford fixtures") {
  CHECK(hilbert_mumford_torus({{1}, {-1}}) == Stability::stable);
  CHECK(hilbert_mumford_torus({{1}, {2}}) == Stability::unstable);
  CHECK(hilbert_mumford_torus({{0}}) == Stability::semistable_not_stable);
  CHECK(hilbert_mumford_torus({{1, 0}, {-1, 0}}) == Stability::semistable_not_stable);
  CHECK(hilbert_mumford_torus({{1, 0}, {0, 1}, {-1, -1}}) == Stability::stable);
  CHECK(hilbert_mumford_torus({{1, 0}, {0, 1}, {-1, 0}}) == Stability::semistable_not_stable);
  CHECK_THROWS_AS(hilbert_mumford_torus({}), InvalidInput);
}

TEST_CASE("exact simplex") {
  // max x + y subject to x + 2y + s = 4, 3x + y + t = 6.
  RationalMatrix a(2, 4);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(0, 2) = 1;
  a(1, 0) = 3;
  a(1, 1) = 1;
  a(1, 3) = 1;
  const LpResult r = lp_maximize(a, {4, 6}, {1, 1, 0, 0});
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == Rational(14, 5));
  RationalMatrix b(1, 1);
  b(0, 0) = 1;
  CHECK(lp_maximize(b, {-1}, {1}).status == LpResult::Status::infeasible);
}

}  // TEST_SUITE
