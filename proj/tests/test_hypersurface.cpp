#include "curvlab/catalog.hpp"
#include "curvlab/ops.hpp"
#include "curvlab/point.hpp"
#include "curvlab/sampling.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace curvlab;

namespace {

const double kPi = 3.14159265358979323846;

double rel(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

double rel_norm(const SymTensor2& a, const SymTensor2& b) {
    SymTensor2 d = a - b;
    return fnorm(d) / std::max({1.0, fnorm(a), fnorm(b)});
}

} // namespace

TEST_CASE("spectrum validation names the offending field") {
    PrincipalSpectrum s;
    s.n = 2;
    s.groups = {{1.0, 2}};
    CHECK_THROWS_WITH_AS(s.validate(), "dimension: must be >= 3", std::invalid_argument);
    s.n = 4;
    s.groups = {{1.0, 2}};
    CHECK_THROWS_WITH_AS(s.validate(), "principal_curvatures: multiplicities must sum to dimension",
                         std::invalid_argument);
    s.groups = {{1.0, 4}};
    s.epsilon = 2;
    CHECK_THROWS_WITH_AS(s.validate(), "epsilon: must be +1 or -1", std::invalid_argument);
    s.epsilon = 1;
    s.signature = {1.0, 1.0, 1.0};
    CHECK_THROWS_WITH_AS(s.validate(), "signature: length must equal dimension",
                         std::invalid_argument);
    s.signature = {1.0, 1.0, 1.0, 0.5};
    CHECK_THROWS_WITH_AS(s.validate(), "signature: entries must be +1 or -1",
                         std::invalid_argument);
    s.signature.clear();
    s.groups = {{1.0, 3}, {2.0, 0}, {3.0, 1}};
    CHECK_THROWS_WITH_AS(s.validate(), "principal_curvatures: multiplicity must be >= 1",
                         std::invalid_argument);
    s.groups.clear();
    CHECK_THROWS_WITH_AS(s.validate(), "principal_curvatures: must be non-empty",
                         std::invalid_argument);
}

TEST_CASE("spectrum expansion and distinct grouping") {
    PrincipalSpectrum s;
    s.n = 5;
    s.groups = {{1.0, 2}, {1.0 + 1e-15, 1}, {-2.0, 2}};
    std::vector<double> lam = s.expanded();
    REQUIRE(lam.size() == 5);
    CHECK(lam[2] == doctest::Approx(1.0));
    CHECK(lam[4] == doctest::Approx(-2.0));
    std::vector<CurvatureGroup> d = s.distinct_groups();
    REQUIRE(d.size() == 2); // the 1e-15 neighbor merges
    CHECK(d[0].multiplicity == 3);
    CHECK(d[1].multiplicity == 2);
    CHECK(s.signature_or_default() == std::vector<double>(5, 1.0));
}

TEST_CASE("umbilical point gives a space form") {
    PrincipalSpectrum s;
    s.n = 5;
    s.c = 0.7;
    s.groups = {{1.3, 5}};
    s.label = "umbilical";
    PointGeometry p = build_point(s);
    const double k = 1.3 * 1.3 + 0.7; // eps lambda^2 + c
    CurvTensor4 want = k * p.G;
    CurvTensor4 diff = p.R - want;
    CHECK(fnorm(diff) < 1e-12 * fnorm(want));
    SymTensor2 wantS = (s.n - 1.0) * k * p.frame.g;
    CHECK(rel_norm(p.S, wantS) < 1e-12);
    CHECK_FALSE(p.in_U_S);
    CHECK_FALSE(p.in_U_H);
    CHECK(ricci_eigenvalues(p)[0] == doctest::Approx((s.n - 1.0) * k));
}

TEST_CASE("worked three-curvature instance pins every scalar") {
    PointGeometry p = build_point(three_curvature(5, 1, 2, 3, 2, 2, 0));
    CHECK(p.tr_H == doctest::Approx(11.0));
    CHECK(p.cubic.phi == doctest::Approx(6.0));
    CHECK(p.cubic.psi == doctest::Approx(-11.0));
    CHECK(p.cubic.rho == doctest::Approx(6.0));
    CHECK(p.cubic.residual < 1e-14);
    CHECK_FALSE(p.cubic.underdetermined);
    CHECK(tau_invariant(p) == doctest::Approx(336.0));
    CHECK(rho_coeffs(p).rho1 == doctest::Approx(-14.0));
    CHECK(rho_coeffs(p).rho0 == doctest::Approx(-96.0));
    CHECK(p.kappa == doctest::Approx(94.0));
    // S = diag(10, 18, 18, 24, 24)
    CHECK(p.S(0, 0) == doctest::Approx(10.0));
    CHECK(p.S(1, 1) == doctest::Approx(18.0));
    CHECK(p.S(4, 4) == doctest::Approx(24.0));
    CHECK(p.in_U_H);
    CHECK(p.in_U_S);
    CHECK(p.in_U_C);
}

TEST_CASE("tau oracles from the scalar regression set") {
    // {1,2,3 | 1,1,3}, n = 5, c = 0
    CHECK(tau_invariant(build_point(three_curvature(5, 1, 2, 3, 1, 3, 0)))
          == doctest::Approx(504.0));
    // tau = -(n-3)(n-2) lambda^3
    CHECK(tau_invariant(build_point(two_quasi_umbilical(5, 1))) == doctest::Approx(-6.0));
    CHECK(tau_invariant(build_point(two_quasi_umbilical(4, 1))) == doctest::Approx(-2.0));
    CHECK(tau_invariant(build_point(two_quasi_umbilical(5, -1))) == doctest::Approx(6.0));
}

TEST_CASE("multiplicity-pattern tau formulas") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 5 + int(rng() % 3);
        double l0 = U(rng), l1 = U(rng), l2 = U(rng);
        if (std::abs(l0 - l1) < 0.2 || std::abs(l0 - l2) < 0.2 || std::abs(l1 - l2) < 0.2)
            continue;

        // mult (1, 1, n-2): tau = (n-2)(l0 + (n-3) l2)(l1 + (n-3) l2) l2
        PointGeometry a = build_point(three_curvature(n, l0, l1, l2, 1, n - 2, 0.0));
        double want = (n - 2.0) * (l0 + (n - 3.0) * l2) * (l1 + (n - 3.0) * l2) * l2;
        CHECK(rel(tau_invariant(a), want) < 1e-12);

        // mult (1, n1, n2): tau = (l0 + (n1-1) l1 + (n2-1) l2)
        //                        (l1 l2 + (n1 l1 + n2 l2)((n1-1) l1 + (n2-1) l2))
        int n1 = 1 + int(rng() % (n - 2));
        int n2 = n - 1 - n1;
        PointGeometry b = build_point(three_curvature(n, l0, l1, l2, n1, n2, 0.0));
        double f1 = l0 + (n1 - 1.0) * l1 + (n2 - 1.0) * l2;
        double f2 = l1 * l2 + (n1 * l1 + n2 * l2) * ((n1 - 1.0) * l1 + (n2 - 1.0) * l2);
        CHECK(rel(tau_invariant(b), f1 * f2) < 1e-12);
    }
}

TEST_CASE("balanced families collapse tau to rho") {
    // (n1-1) l1 + (n2-1) l2 = 0 forces rho = tau = l0 l1 l2
    double l1 = 1.5, l2 = -3.0; // n1 = 3, n2 = 2: 2*1.5 + 1*(-3) = 0
    PointGeometry p = build_point(three_curvature(6, 0.7, l1, l2, 3, 2, 0.4));
    CHECK(rel(p.cubic.rho, 0.7 * l1 * l2) < 1e-12);
    CHECK(rel(tau_invariant(p), 0.7 * l1 * l2) < 1e-12);

    // l1 = -l2 with n1 = n2: rho = tau = -l0 l1^2
    PointGeometry q = build_point(three_curvature(5, 0.9, 1.2, -1.2, 2, 2, 0.0));
    CHECK(rel(tau_invariant(q), -0.9 * 1.2 * 1.2) < 1e-12);
}

TEST_CASE("austere cartan instance matches every closed form") {
    PointGeometry p = build_point(austere(6, 2, std::sqrt(3.0), 1.0));
    CHECK(p.kappa == doctest::Approx(18.0)); // n(n-1)c - 2p lambda^2
    CHECK(std::abs(p.tau) < 1e-12 * tau_scale(p));
    CHECK(tau_is_zero(p, 1e-12));
    RhoCoeffs rc = rho_coeffs(p);
    CHECK(rc.rho1 == doctest::Approx(7.0));
    CHECK(rc.rho0 == doctest::Approx(-10.0));
    BetaCoeffs bc = beta_coeffs(p);
    CHECK(bc.beta1 == doctest::Approx(0.0));
    CHECK(bc.beta2 == doctest::Approx(3.0 / 20.0));
    CHECK(bc.beta3 == doctest::Approx(0.0));
    CHECK(bc.beta4 == doctest::Approx(0.0));
    CHECK(bc.mu == doctest::Approx(-3.0 / 5.0));
    // beta5 = (n-2) beta2 - (n-3)(n-1) c, beta6 = beta2 - (n-3) c
    CHECK(bc.beta5 == doctest::Approx((6 - 2) * bc.beta2 - (6 - 3) * (6 - 1) * 1.0));
    CHECK(bc.beta6 == doctest::Approx(bc.beta2 - (6 - 3) * 1.0));
    std::array<double, 3> ke = ricci_eigenvalues(p);
    CHECK(ke[0] == doctest::Approx(5.0));
    CHECK(ke[1] == doctest::Approx(2.0));
    CHECK(ke[2] == doctest::Approx(2.0));
    // cartan(2, 1) aliases this spectrum
    PrincipalSpectrum alias = cartan(2, 1.0);
    PointGeometry q = build_point(alias);
    CHECK(rel_norm(q.H, p.H) < 1e-12);
    CHECK(q.spec.c == doctest::Approx(1.0));
}

TEST_CASE("austere scalars hold across the parameter range") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> U(0.3, 2.0);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + int(rng() % 5);
        int p_mult = 1 + int(rng() % ((n - 1) / 2));
        double lam = U(rng), c = U(rng) - 1.0;
        PointGeometry p = build_point(austere(n, p_mult, lam, c));
        CHECK(rel(p.kappa, n * (n - 1.0) * c - 2.0 * p_mult * lam * lam) < 1e-12);
        CHECK(std::abs(p.tr_H) < 1e-12);
        CHECK(std::abs(p.tau) <= 1e-12 * tau_scale(p));
        CHECK(rel(p.cubic.psi, lam * lam) < 1e-12);
        CHECK(std::abs(p.cubic.phi) < 1e-12);
        CHECK(std::abs(p.cubic.rho) < 1e-12);
    }
}

TEST_CASE("type-two points satisfy the example closed forms") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int trial = 0; trial < 16; ++trial) {
        int n = 4 + int(rng() % 4);
        double l0 = U(rng), l1 = U(rng), c = U(rng);
        if (std::abs(l0) < 0.1 || std::abs(l1) < 0.1) continue;
        if (trial % 4 == 1) l1 = l0;  // equal-curvature branch
        if (trial % 4 == 2) l1 = -l0; // Chen's equality branch
        PointGeometry p = build_point(type_two(n, l0, l1, c));
        CHECK(std::abs(p.tau) <= 1e-12 * tau_scale(p));
        CHECK(rel(p.rho_c.rho1, l0 * l1 + 2.0 * (n - 1.0) * c) < 1e-12);
        // rho0 from the corrected recomputation, not the printed display
        CHECK(rel(p.rho_c.rho0, -(n - 1.0) * c * (l0 * l1 + (n - 1.0) * c)) < 1e-12);
        std::array<double, 3> ke = ricci_eigenvalues(p);
        const double k01 = l0 * l1 + (n - 1.0) * c;
        if (p.op_groups.size() == 3) {
            CHECK(rel(ke[0], k01) < 1e-12);
            CHECK(rel(ke[1], k01) < 1e-12);
            CHECK(rel(ke[2], (n - 1.0) * c) < 1e-12);
        }
        // A = tau H = 0
        CHECK(fnorm(p.A) < 1e-10 * std::max(1.0, fnorm(p.S2)));
    }
}

TEST_CASE("type-two equal-curvature cubic uses the authored group structure") {
    PointGeometry p = build_point(type_two(5, 2, 2, 1));
    REQUIRE(p.spec.groups.size() == 3);
    CHECK(p.op_groups.size() == 2);
    CHECK(p.cubic.underdetermined);
    CHECK(p.cubic.phi == doctest::Approx(4.0));
    CHECK(p.cubic.psi == doctest::Approx(-4.0));
    CHECK(p.cubic.rho == doctest::Approx(0.0));
    CHECK(p.cubic.residual < 1e-14);
    CHECK(p.tau == doctest::Approx(0.0));
}

TEST_CASE("clifford two-curvature data matches the worked values") {
    PointGeometry p = build_point(clifford(2, 4, 1.0, kPi / 3.0));
    std::optional<TwoCurvatureData> d = two_curvature_data(p);
    REQUIRE(d.has_value());
    const double s3 = std::sqrt(3.0);
    CHECK(d->alpha == doctest::Approx(1.0 / s3 - s3));
    CHECK(d->beta == doctest::Approx(1.0));
    CHECK(p.tr_H - d->alpha == doctest::Approx(-2.0 / s3));
    // (p-1) l1 + (n-p-1) l2 = -2/sqrt(3) != 0, so the point sits in U_S and U_C
    CHECK(p.in_U_S);
    CHECK(p.in_U_C);
    CHECK_FALSE(p.in_U_H);
    // kappa_1 - kappa_2 = (l1 - l2)((p-1) l1 + (n-p-1) l2)
    std::array<double, 3> ke = ricci_eigenvalues(p);
    const double l1 = 1.0 / s3, l2 = -s3;
    CHECK(ke[0] - ke[1] == doctest::Approx((l1 - l2) * ((2 - 1) * l1 + (4 - 2 - 1) * l2)));

    // three distinct values refuse the two-curvature accessor
    PointGeometry q = build_point(three_curvature(5, 1, 2, 3, 2, 2, 0));
    CHECK_FALSE(two_curvature_data(q).has_value());
}

TEST_CASE("gauss invariant (3.3) holds on every built point") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 24; ++trial) {
        int n = 3 + int(rng() % 4);
        int distinct = 1 + int(rng() % std::min(4, n));
        PrincipalSpectrum s = (trial % 2 == 0) ? random_spectrum(rng, n, distinct)
                                               : random_spectrum_semi(rng, n, distinct);
        PointGeometry p = build_point(s);
        const double c = s.c;
        SymTensor2 lhs = p.S2 - 2.0 * (n - 1.0) * c * p.S;
        lhs += (n - 1.0) * (n - 1.0) * c * c * p.frame.g;
        SymTensor2 rhs = p.H4 - 2.0 * p.tr_H * p.H3;
        rhs += p.tr_H * p.tr_H * p.H2;
        SymTensor2 diff = lhs - rhs;
        double scale = std::max({1.0, fnorm(lhs), fnorm(rhs), fnorm(p.H4)});
        CHECK(fnorm(diff) / scale < 1e-11);
    }
}

TEST_CASE("A equals tau H whenever the cubic is exact") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 16; ++trial) {
        int n = 4 + int(rng() % 3);
        PrincipalSpectrum s = random_spectrum(rng, n, 3);
        PointGeometry p = build_point(s);
        REQUIRE(p.cubic.residual <= 1e-9);
        SymTensor2 want = p.tau * p.H;
        SymTensor2 diff = p.A - want;
        double scale = std::max({1.0, fnorm(p.A), fnorm(want), fnorm(p.S2)});
        CHECK(fnorm(diff) / scale < 1e-10);
    }
}

TEST_CASE("kappa difference factorizations on three-curvature points") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 24; ++trial) {
        int n = 3 + int(rng() % 4);
        PrincipalSpectrum s = random_spectrum(rng, n, 3);
        PointGeometry p = build_point(s);
        REQUIRE(p.op_groups.size() == 3);
        const double l0 = p.op_groups[0].value;
        const double l1 = p.op_groups[1].value;
        const double l2 = p.op_groups[2].value;
        std::array<double, 3> k = ricci_eigenvalues(p);
        const double d = p.cubic.phi - p.tr_H;
        CHECK(rel(k[0] - k[1], (l0 - l1) * (l2 - d)) < 1e-11);
        CHECK(rel(k[0] - k[2], (l0 - l2) * (l1 - d)) < 1e-11);
        CHECK(rel(k[1] - k[2], (l1 - l2) * (l0 - d)) < 1e-11);
        // cubic product identity: (l0 - d)(l1 - d)(l2 - d) = tau
        CHECK(rel((l0 - d) * (l1 - d) * (l2 - d), p.tau) < 1e-11);
        // theorem 5.2 quotient form
        const double lhs = (k[0] - k[1]) * (k[0] - k[2]) * (k[1] - k[2]);
        const double rhs = (l0 - l1) * (l0 - l2) * (l1 - l2) * p.tau;
        CHECK(std::abs(lhs - rhs)
              < 1e-10 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
    }
}

TEST_CASE("membership monotonicity U_H inside U_S and U_C") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 24; ++trial) {
        int n = 4 + int(rng() % 3);
        int distinct = 2 + int(rng() % 3);
        PrincipalSpectrum s = random_spectrum(rng, n, distinct);
        PointGeometry p = build_point(s);
        if (p.in_U_H) {
            CHECK(p.in_U_S);
            CHECK(p.in_U_C);
        }
        CHECK(p.in_U_H == (p.op_groups.size() >= 3));
    }
    // n = 3 has no Weyl tensor: in_U_C is always false
    PointGeometry p3 = build_point(random_spectrum(rng, 3, 3));
    CHECK_FALSE(p3.in_U_C);
    CHECK_FALSE(p3.C.has_value());
}

TEST_CASE("operator spectrum pairs signature with curvature positionally") {
    PrincipalSpectrum s;
    s.n = 4;
    s.c = 0.2;
    s.epsilon = -1;
    s.signature = {1, -1, 1, 1};
    s.groups = {{2.0, 2}, {0.5, 2}};
    PointGeometry p = build_point(s);
    // theta_i = sig_i lambda_i: values 2, -2, 0.5, 0.5
    REQUIRE(p.op_groups.size() == 3);
    CHECK(p.op_groups[0].value == doctest::Approx(2.0));
    CHECK(p.op_groups[1].value == doctest::Approx(-2.0));
    CHECK(p.op_groups[2].value == doctest::Approx(0.5));
    CHECK(p.op_groups[2].multiplicity == 2);
    // trace of the operator, not of the raw diagonal
    CHECK(p.tr_H == doctest::Approx(2.0 - 2.0 + 0.5 + 0.5));
}

TEST_CASE("homothety scaling transforms invariants with their degree") {
    PrincipalSpectrum base = three_curvature(5, 1, 2, 3, 2, 2, 0.3);
    PointGeometry p = build_point(base);
    for (double s : {1e-3, 1e3}) {
        PointGeometry q = build_point(base.scaled(s));
        CHECK(q.spec.c == doctest::Approx(s * s * 0.3));
        CHECK(rel(q.kappa, s * s * p.kappa) < 1e-12);
        CHECK(rel(q.tau, s * s * s * p.tau) < 1e-12);
        CHECK(q.in_U_H == p.in_U_H);
        CHECK(q.in_U_S == p.in_U_S);
        CHECK(q.in_U_C == p.in_U_C);
    }
}

TEST_CASE("transform_point keeps scalars and moves tensors covariantly") {
    std::mt19937_64 rng(73);
    PointGeometry p = build_point(three_curvature(5, 1, 2, 3, 2, 2, 0.5));
    LinMap L = random_congruence(rng, 5);
    PointGeometry q = transform_point(p, L);
    CHECK(q.tau == doctest::Approx(p.tau));
    CHECK(q.kappa == doctest::Approx(p.kappa));
    SymTensor2 wantS = congruence(p.S, L);
    CHECK(rel_norm(q.S, wantS) < 1e-13);
    CurvTensor4 wantR = congruence(p.R, L);
    CurvTensor4 diff = q.R - wantR;
    CHECK(fnorm(diff) < 1e-12 * std::max(1.0, fnorm(wantR)));
    // the transformed frame still reproduces S by contraction of R
    SymTensor2 ric = ricci(q.R, q.frame);
    CHECK(rel_norm(ric, q.S) < 1e-11);
}

TEST_CASE("tau refuses spectra that break the cubic relation") {
    PrincipalSpectrum s;
    s.n = 6;
    s.c = 0.0;
    s.groups = {{1.0, 1}, {2.0, 1}, {3.0, 2}, {-1.0, 2}};
    PointGeometry p = build_point(s);
    CHECK(p.cubic.residual > 1e-9);
    CHECK_THROWS_AS(tau_invariant(p), std::runtime_error);
    CHECK_THROWS_AS(rho_coeffs(p), std::runtime_error);
}

TEST_CASE("ricci eigenvalue accessor guards the group count") {
    PrincipalSpectrum s;
    s.n = 6;
    s.groups = {{1.0, 1}, {2.0, 1}, {3.0, 2}, {-1.0, 2}};
    PointGeometry p = build_point(s);
    CHECK_THROWS_AS(ricci_eigenvalues(p), std::invalid_argument);
    std::mt19937_64 rng(1);
    PointGeometry p3 = build_point(random_spectrum(rng, 3, 2));
    CHECK_THROWS_AS(beta_coeffs(p3), std::invalid_argument);
}
