#include "curvlab/ops.hpp"
#include "curvlab/fit.hpp"
#include "curvlab/sampling.hpp"

#include "doctest.h"

#include <random>

using namespace curvlab;

namespace {

double rel_diff(std::span<const double> a, std::span<const double> b) {
    double num = 0.0, den = 1e-30;
    for (size_t k = 0; k < a.size(); ++k) {
        num += (a[k] - b[k]) * (a[k] - b[k]);
        den = std::max(den, std::abs(a[k]) + std::abs(b[k]));
    }
    return std::sqrt(num) / den;
}

} // namespace

TEST_CASE("symmetric tensor writes mirror entries") {
    SymTensor2 t(3);
    t.set(0, 2, 5.0);
    CHECK(t(2, 0) == 5.0);
    t.add(2, 0, 1.0);
    CHECK(t(0, 2) == 6.0);
    CHECK_THROWS_AS(SymTensor2(0), std::invalid_argument);
}

TEST_CASE("frame construction guards the dimension") {
    CHECK_THROWS_AS(Frame::euclidean(2), std::invalid_argument);
    Frame f = Frame::diagonal({1.0, -1.0, 1.0, 1.0});
    CHECK(f.n == 4);
    CHECK(f.g(1, 1) == -1.0);
    CHECK(f.g_inv(1, 1) == -1.0);
}

TEST_CASE("metric square is the unit constant-curvature tensor") {
    const int n = 4;
    Frame f = Frame::euclidean(n);
    CurvTensor4 G = metric_square(f);
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    double want = (h == k && i == j ? 1.0 : 0.0) - (h == j && i == k ? 1.0 : 0.0);
                    CHECK(G(h, i, j, k) == doctest::Approx(want).epsilon(1e-14));
                }
    CHECK(curvature_symmetry_residual(G) == doctest::Approx(0.0).epsilon(1e-14));
    SymTensor2 ric = ricci(G, f);
    SymTensor2 want = double(n - 1) * SymTensor2::identity(n);
    CHECK(rel_diff(ric.data(), want.data()) < 1e-14);
    CHECK(trace_g(ric, f) == doctest::Approx(n * (n - 1.0)));
}

TEST_CASE("kulkarni-nomizu product is symmetric and curvature-shaped") {
    std::mt19937_64 rng(7);
    const int n = 5;
    SymTensor2 e = random_sym(rng, n), f = random_sym(rng, n);
    CurvTensor4 ef = kn_product(e, f);
    CurvTensor4 fe = kn_product(f, e);
    CHECK(rel_diff(ef.data(), fe.data()) < 1e-15);
    CHECK(curvature_symmetry_residual(ef) < 1e-14);
    // spot value straight from the definition
    CHECK(ef(1, 2, 3, 4)
          == doctest::Approx(e(1, 4) * f(2, 3) + e(2, 3) * f(1, 4) - e(1, 3) * f(2, 4)
                             - e(2, 4) * f(1, 3)));
}

TEST_CASE("ricci of a wedge product matches the closed form") {
    std::mt19937_64 rng(11);
    const int n = 4;
    Frame fr = Frame::euclidean(n);
    SymTensor2 e = random_sym(rng, n), f = random_sym(rng, n);
    CurvTensor4 ef = kn_product(e, f);
    SymTensor2 ric = ricci(ef, fr);
    double tre = trace_g(e, fr), trf = trace_g(f, fr);
    SymTensor2 want(n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            double cross = 0.0;
            for (int r = 0; r < n; ++r) cross += e(j, r) * f(r, k) + f(j, r) * e(r, k);
            want.set(j, k, tre * f(j, k) + trf * e(j, k) - cross);
        }
    CHECK(rel_diff(ric.data(), want.data()) < 1e-14);
}

TEST_CASE("derivation by a curvature tensor kills the metric") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 3; ++trial) {
        const int n = 4 + trial % 2;
        Frame f = trial == 2 ? Frame::diagonal({1, -1, 1, 1}) : Frame::euclidean(n);
        CurvTensor4 b = random_curvature(rng, f.n, 2);
        CurvTensor4 bg = derivation_action(b, f.g, f);
        CHECK(fnorm(bg) < 1e-13 * std::max(1.0, fnorm(b)));
    }
}

TEST_CASE("derivation by the metric square equals the g-excitation") {
    std::mt19937_64 rng(17);
    const int n = 4;
    Frame f = Frame::euclidean(n);
    CurvTensor4 t = random_curvature(rng, n, 2);
    CurvTensor4 G = metric_square(f);
    Tensor6 gt = derivation_action(G, t, f);
    Tensor6 qt = tachibana4(f.g, t);
    CHECK(rel_diff(gt.data(), qt.data()) < 1e-14);
}

TEST_CASE("tachibana operator basics") {
    std::mt19937_64 rng(19);
    const int n = 4;
    SymTensor2 e = random_sym(rng, n), f = random_sym(rng, n);
    CurvTensor4 q = tachibana2(e, f);
    // antisymmetric in the excitation pair, zero on equal arguments
    CHECK(q(1, 2, 0, 3) == doctest::Approx(-q(1, 2, 3, 0)).epsilon(1e-14));
    CHECK(fnorm(tachibana2(e, e)) < 1e-14);
    // spot value from the definition
    CHECK(q(0, 1, 2, 3)
          == doctest::Approx(e(2, 0) * f(3, 1) - e(3, 0) * f(2, 1) + e(2, 1) * f(0, 3)
                             - e(3, 1) * f(0, 2)));
}

TEST_CASE("algebraic battery on random symmetric tensors") {
    std::mt19937_64 rng(23);
    for (int n = 3; n <= 6; ++n) {
        Frame f = n == 5 ? Frame::diagonal({1, -1, 1, -1, 1}) : Frame::euclidean(n);
        SymTensor2 e1 = random_sym(rng, n), e2 = random_sym(rng, n), s = random_sym(rng, n);
        CurvTensor4 ee = kn_product(e1, e1);

        // Q(E,F) = -Q(F,E)
        CurvTensor4 a = tachibana2(e1, e2), b = tachibana2(e2, e1);
        CHECK(fnorm(a + b) < 1e-12 * std::max(1.0, fnorm(a)));

        // Q(E, E^F) = -1/2 Q(F, E^E)
        Tensor6 l1 = tachibana4(e1, kn_product(e1, e2));
        Tensor6 r1 = -0.5 * tachibana4(e2, ee);
        CHECK(rel_diff(l1.data(), r1.data()) < 1e-12);

        // E ^ Q(E,F) = -1/2 Q(F, E^E)
        Tensor6 l2 = kn_wedge4(e1, tachibana2(e1, e2));
        CHECK(rel_diff(l2.data(), r1.data()) < 1e-12);

        // E1 ^ Q(E2,F) + E2 ^ Q(E1,F) + Q(F, E1^E2) = 0
        Tensor6 sum = kn_wedge4(e1, tachibana2(e2, s)) + kn_wedge4(e2, tachibana2(e1, s))
                      + tachibana4(s, kn_product(e1, e2));
        CHECK(fnorm(sum) < 1e-12 * std::max(1.0, fnorm(kn_wedge4(e1, tachibana2(e2, s)))));

        // cyclic: Q(F, E1^E2) + Q(E1, E2^F) + Q(E2, F^E1) = 0
        Tensor6 cyc = tachibana4(s, kn_product(e1, e2)) + tachibana4(e1, kn_product(e2, s))
                      + tachibana4(e2, kn_product(s, e1));
        CHECK(fnorm(cyc) < 1e-12 * std::max(1.0, fnorm(tachibana4(s, kn_product(e1, e2)))));

        // Q(g, g^S) = -Q(S, G) and Q(S, g^S) = -1/2 Q(g, S^S)
        CurvTensor4 G = metric_square(f);
        Tensor6 l3 = tachibana4(f.g, kn_product(f.g, s));
        Tensor6 r3 = -1.0 * tachibana4(s, G);
        CHECK(rel_diff(l3.data(), r3.data()) < 1e-12);
        Tensor6 l4 = tachibana4(s, kn_product(f.g, s));
        Tensor6 r4 = -0.5 * tachibana4(f.g, kn_product(s, s));
        CHECK(rel_diff(l4.data(), r4.data()) < 1e-12);

        // Q(g, G) = 0
        CHECK(fnorm(tachibana4(f.g, G)) < 1e-12 * std::max(1.0, fnorm(G)));
    }
}

TEST_CASE("matrix powers through diagonal metrics") {
    Frame f = Frame::diagonal({1, -1, 1, 1});
    SymTensor2 h = SymTensor2::diag({2, 3, -1, 0.5});
    SymTensor2 h2 = mat_power(h, 2, f);
    // (H^2)_ii = g^ii lambda_i^2 in a diagonal frame
    CHECK(h2(0, 0) == doctest::Approx(4.0));
    CHECK(h2(1, 1) == doctest::Approx(-9.0));
    CHECK(h2(2, 2) == doctest::Approx(1.0));
    CHECK(h2(3, 3) == doctest::Approx(0.25));
    SymTensor2 h1 = mat_power(h, 1, f);
    CHECK(rel_diff(h1.data(), h.data()) < 1e-15);
    CHECK_THROWS_AS(mat_power(h, 0, f), std::invalid_argument);
}

TEST_CASE("weyl tensor is trace free and kills constant curvature") {
    std::mt19937_64 rng(29);
    const int n = 5;
    Frame f = Frame::euclidean(n);
    CurvTensor4 b = random_curvature(rng, n, 3);
    CurvTensor4 c = weyl(b, f);
    CHECK(fnorm(ricci(c, f)) < 1e-12 * std::max(1.0, fnorm(c)));
    CHECK(curvature_symmetry_residual(c) < 1e-12);
    CurvTensor4 G = metric_square(f);
    CHECK(fnorm(weyl(2.5 * G, f)) < 1e-13 * fnorm(G));
    Frame f3 = Frame::euclidean(3);
    CHECK_THROWS_AS(weyl(metric_square(f3), f3), std::invalid_argument);
}

TEST_CASE("congruence transforms commute with the algebra") {
    std::mt19937_64 rng(31);
    const int n = 4;
    Frame f = Frame::diagonal({1, 1, -1, 1});
    LinMap L = random_congruence(rng, n);
    SymTensor2 e1 = random_sym(rng, n), e2 = random_sym(rng, n);
    CurvTensor4 t = random_curvature(rng, n, 2);
    Frame ft = congruence(f, L);

    // wedge and tachibana are metric-free, so they commute with congruence
    CurvTensor4 lhs4 = congruence(kn_product(e1, e2), L);
    CurvTensor4 rhs4 = kn_product(congruence(e1, L), congruence(e2, L));
    CHECK(rel_diff(lhs4.data(), rhs4.data()) < 1e-12);

    Tensor6 lhs6 = congruence(tachibana4(e1, t), L);
    Tensor6 rhs6 = tachibana4(congruence(e1, L), congruence(t, L));
    CHECK(rel_diff(lhs6.data(), rhs6.data()) < 1e-12);

    // the derivation action uses the metric and transforms with the frame
    Tensor6 lhd = congruence(derivation_action(t, t, f), L);
    Tensor6 rhd = derivation_action(congruence(t, L), congruence(t, L), ft);
    CHECK(rel_diff(lhd.data(), rhd.data()) < 1e-11);

    SymTensor2 lric = congruence(ricci(t, f), L);
    SymTensor2 rric = ricci(congruence(t, L), ft);
    CHECK(rel_diff(lric.data(), rric.data()) < 1e-12);
}

TEST_CASE("curvature symmetry residual flags a broken tensor") {
    CurvTensor4 bad(3);
    bad.set(0, 1, 0, 1, 1.0); // no antisymmetric partner entries
    CHECK(curvature_symmetry_residual(bad) > 0.5);
}

TEST_CASE("span fitting recovers exact combinations") {
    std::mt19937_64 rng(37);
    const int n = 4;
    SymTensor2 b1 = random_sym(rng, n), b2 = random_sym(rng, n);
    SymTensor2 target = 2.0 * b1 - 3.0 * b2;
    FitResult fr = fit_in_span(target.data(), {b1.data(), b2.data()}, {"b1", "b2"});
    CHECK(fr.residual < 1e-12);
    CHECK(fr.rank == 2);
    CHECK_FALSE(fr.underdetermined);
    CHECK(fr.coefficients[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(fr.coefficients[1] == doctest::Approx(-3.0).epsilon(1e-10));

    // dependent basis is reported underdetermined, reconstruction still exact
    SymTensor2 b3 = 2.0 * b1;
    FitResult fr2 = fit_in_span(b1.data(), {b1.data(), b3.data()}, {"b1", "2b1"});
    CHECK(fr2.underdetermined);
    CHECK(fr2.rank == 1);
    CHECK(fr2.residual < 1e-12);

    // an unrelated target keeps a large residual
    FitResult fr3 = fit_in_span(b2.data(), {b1.data()}, {"b1"});
    CHECK(fr3.residual > 1e-3);
}

TEST_CASE("random curvature sampler yields genuine curvature tensors") {
    std::mt19937_64 rng(41);
    for (int n = 3; n <= 5; ++n) {
        CurvTensor4 b = random_curvature(rng, n, 2);
        CHECK(curvature_symmetry_residual(b) < 1e-13);
        CHECK(fnorm(b) > 1e-3);
    }
}
