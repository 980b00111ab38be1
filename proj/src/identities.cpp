#include "curvlab/identities.hpp"

#include "curvlab/ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace curvlab {

namespace {

constexpr double kGuard = 1e-30;

// Relative residual against the larger side, floored by the summed norms of
// the constituent terms so two-sided cancellation cannot divide by zero.
template <typename T>
IdentityReport rel_report(const std::string& id, const T& lhs, const T& rhs, double floor) {
    IdentityReport r;
    r.identity_id = id;
    r.applicable = true;
    r.lhs_norm = fnorm(lhs);
    r.rhs_norm = fnorm(rhs);
    T diff = lhs - rhs;
    r.residual = fnorm(diff) / std::max({r.lhs_norm, r.rhs_norm, floor, kGuard});
    return r;
}

IdentityReport scalar_report(const std::string& id, double lhs, double rhs, double floor) {
    IdentityReport r;
    r.identity_id = id;
    r.applicable = true;
    r.lhs_norm = std::abs(lhs);
    r.rhs_norm = std::abs(rhs);
    r.residual = std::abs(lhs - rhs) / std::max({r.lhs_norm, r.rhs_norm, floor, kGuard});
    return r;
}

IdentityReport not_applicable(const std::string& id, const std::string& why) {
    IdentityReport r;
    r.identity_id = id;
    r.applicable = false;
    r.note = why;
    return r;
}

bool cubic_ok(const PointGeometry& p, double tol) { return p.cubic.residual <= tol; }

// S^2 - kappa/(n-1) S, the recurring Weyl correction term.
SymTensor2 weyl_dev(const PointGeometry& p) {
    return p.S2 - (p.kappa / (p.frame.n - 1.0)) * p.S;
}

// Bracket of the quasi-Einstein lemma:
// g^S^2 + (n-2)/2 S^S - kappa g^S + (kappa^2 - tr S^2)/(2(n-1)) g^g.
CurvTensor4 lemma21_bracket(const PointGeometry& p, double& floor) {
    const int n = p.frame.n;
    const Frame& f = p.frame;
    CurvTensor4 t1 = kn_product(f.g, p.S2);
    CurvTensor4 t2 = kn_product(p.S, p.S);
    t2 *= (n - 2.0) / 2.0;
    CurvTensor4 t3 = kn_product(f.g, p.S);
    t3 *= p.kappa;
    CurvTensor4 t4 = kn_product(f.g, f.g);
    t4 *= (p.kappa * p.kappa - p.tr_S2) / (2.0 * (n - 1.0));
    floor = fnorm(t1) + fnorm(t2) + fnorm(t3) + fnorm(t4);
    return t1 + t2 - t3 + t4;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

int SuiteReport::applicable_count() const {
    int k = 0;
    for (const auto& r : reports)
        if (r.applicable) ++k;
    return k;
}

int SuiteReport::failed_count() const {
    int k = 0;
    for (const auto& r : reports)
        if (r.applicable && r.residual > tol) ++k;
    return k;
}

bool SuiteReport::all_passed() const { return failed_count() == 0; }

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = {
        "eq_3_1_S",
        "eq_3_2_kappa",
        "eq_3_3_S2",
        "eq_2_14_crrc",
        "eq_2_15_CS",
        "eq_2_17_RR",
        "eq_2_18_crrc_hyp",
        "eq_2_19_lemma21",
        "eq_2_26_prop23",
        "eq_3_4_S",
        "eq_3_5_S2",
        "eq_3_6_trH_alpha",
        "eq_3_10_roter",
        "eq_4_4_A_tauH",
        "eq_4_9_tau2R",
        "eq_4_10_trace",
        "eq_4_11_QgS2",
        "eq_4_12_QHS",
        "eq_4_13_QgH",
        "eq_4_QHH2",
        "eq_4_16_S3",
        "eq_4_17_RS",
        "eq_4_18_CS",
        "eq_4_19_RC",
        "eq_4_20_CR",
        "eq_4_21_CC",
        "eq_4_24_tauRS",
        "eq_4_25_tauCS",
        "thm_5_1_partially_einstein",
        "thm_5_2_tau_product",
        "eq_6_1_H",
        "eq_6_2_groter",
        "eq_6_3_RS",
        "eq_6_4_CS",
        "eq_6_5_H2",
        "thm_6_1_S3_span",
    };
    return ids;
}

std::vector<IdentityReport> check_construction(const PointGeometry& p, double tol) {
    (void)tol;
    const int n = p.frame.n;
    const double c = p.spec.c;
    const double eps = static_cast<double>(p.spec.epsilon);
    std::vector<IdentityReport> out;

    {
        SymTensor2 rhs = eps * (p.tr_H * p.H - p.H2) + ((n - 1.0) * c) * p.frame.g;
        const double floor = fnorm(p.S) + std::abs(p.tr_H) * fnorm(p.H) + fnorm(p.H2)
                             + (n - 1.0) * std::abs(c) * fnorm(p.frame.g);
        out.push_back(rel_report("eq_3_1_S", p.S, rhs, floor));
    }
    {
        const double rhs = eps * (p.tr_H * p.tr_H - p.tr_H2) + n * (n - 1.0) * c;
        const double floor = p.tr_H * p.tr_H + std::abs(p.tr_H2) + n * (n - 1.0) * std::abs(c);
        out.push_back(scalar_report("eq_3_2_kappa", p.kappa, rhs, floor));
    }
    {
        const double k1 = (n - 1.0) * c;
        SymTensor2 lhs = p.S2 - (2.0 * k1) * p.S + (k1 * k1) * p.frame.g;
        SymTensor2 rhs = p.H4 - (2.0 * p.tr_H) * p.H3 + (p.tr_H * p.tr_H) * p.H2;
        const double floor = fnorm(p.S2) + 2.0 * std::abs(k1) * fnorm(p.S)
                             + k1 * k1 * fnorm(p.frame.g) + fnorm(p.H4)
                             + 2.0 * std::abs(p.tr_H) * fnorm(p.H3)
                             + p.tr_H * p.tr_H * fnorm(p.H2);
        out.push_back(rel_report("eq_3_3_S2", lhs, rhs, floor));
    }
    return out;
}

IdentityReport check_universal_CRRC(const PointGeometry& p, double tol) {
    (void)tol;
    const int n = p.frame.n;
    if (n < 4) return not_applicable("eq_2_14_crrc", "needs n >= 4");
    const Frame& f = p.frame;
    const CurvTensor4& C = *p.C;

    Tensor6 cr = derivation_action(C, p.R, f);
    Tensor6 rc = derivation_action(p.R, C, f);
    Tensor6 cc = derivation_action(C, C, f);
    Tensor6 rr = derivation_action(p.R, p.R, f);
    CurvTensor4 gw = kn_product(f.g, weyl_dev(p));
    Tensor6 corr = tachibana4(f.g, gw);
    corr *= 1.0 / ((n - 2.0) * (n - 2.0));

    Tensor6 lhs = cr + rc;
    Tensor6 rhs = cc + rr - corr;
    // Operand products keep the scale honest when every term cancels to
    // rounding noise, as on Einstein points where C.S and Q(g,*) vanish.
    const double floor = fnorm(cr) + fnorm(rc) + fnorm(cc) + fnorm(rr) + fnorm(corr)
                         + fnorm(C) * (fnorm(C) + fnorm(p.R)) + fnorm(p.R) * fnorm(p.R)
                         + fnorm(f.g) * fnorm(gw) / ((n - 2.0) * (n - 2.0));
    return rel_report("eq_2_14_crrc", lhs, rhs, floor);
}

IdentityReport check_universal_CS(const PointGeometry& p, double tol) {
    (void)tol;
    const int n = p.frame.n;
    if (n < 4) return not_applicable("eq_2_15_CS", "needs n >= 4");
    const Frame& f = p.frame;

    SymTensor2 w = weyl_dev(p);
    CurvTensor4 lhs = derivation_action(*p.C, p.S, f);
    CurvTensor4 rs = derivation_action(p.R, p.S, f);
    CurvTensor4 corr = tachibana2(f.g, w);
    corr *= 1.0 / (n - 2.0);
    CurvTensor4 rhs = rs - corr;
    const double floor = fnorm(lhs) + fnorm(rs) + fnorm(corr)
                         + (fnorm(*p.C) + fnorm(p.R)) * fnorm(p.S)
                         + fnorm(f.g) * fnorm(w) / (n - 2.0);
    return rel_report("eq_2_15_CS", lhs, rhs, floor);
}

IdentityReport check_hypersurface_RR(const PointGeometry& p, double tol) {
    (void)tol;
    const int n = p.frame.n;
    if (n < 4) return not_applicable("eq_2_17_RR", "needs n >= 4");
    const Frame& f = p.frame;
    const double c = p.spec.c;

    Tensor6 lhs = derivation_action(p.R, p.R, f);
    Tensor6 qsr = tachibana4(p.S, p.R);
    Tensor6 qgc = tachibana4(f.g, *p.C);
    qgc *= (n - 2.0) * c;
    Tensor6 rhs = qsr - qgc;
    const double floor = fnorm(lhs) + fnorm(qsr) + fnorm(qgc)
                         + (fnorm(p.R) + fnorm(p.S)) * fnorm(p.R)
                         + (n - 2.0) * std::abs(c) * fnorm(f.g) * fnorm(*p.C);
    return rel_report("eq_2_17_RR", lhs, rhs, floor);
}

IdentityReport check_hypersurface_CRRC(const PointGeometry& p, double tol) {
    (void)tol;
    const int n = p.frame.n;
    if (n < 4) return not_applicable("eq_2_18_crrc_hyp", "needs n >= 4");
    const Frame& f = p.frame;
    const double c = p.spec.c;
    const CurvTensor4& C = *p.C;

    Tensor6 cr = derivation_action(C, p.R, f);
    Tensor6 rc = derivation_action(p.R, C, f);
    Tensor6 cc = derivation_action(C, C, f);
    Tensor6 qsr = tachibana4(p.S, p.R);
    Tensor6 qgc = tachibana4(f.g, C);
    qgc *= (n - 2.0) * c;
    CurvTensor4 gw = kn_product(f.g, weyl_dev(p));
    Tensor6 corr = tachibana4(f.g, gw);
    corr *= 1.0 / ((n - 2.0) * (n - 2.0));

    Tensor6 lhs = cr + rc;
    Tensor6 rhs = cc + qsr - qgc - corr;
    const double floor = fnorm(cr) + fnorm(rc) + fnorm(cc) + fnorm(qsr) + fnorm(qgc) + fnorm(corr)
                         + fnorm(C) * (fnorm(C) + fnorm(p.R)) + fnorm(p.S) * fnorm(p.R)
                         + (n - 2.0) * std::abs(c) * fnorm(f.g) * fnorm(C)
                         + fnorm(f.g) * fnorm(gw) / ((n - 2.0) * (n - 2.0));
    return rel_report("eq_2_18_crrc_hyp", lhs, rhs, floor);
}

namespace {

IdentityReport lemma21_impl(const PointGeometry& p, const ClassificationReport& cls) {
    if (!cls.quasi_einstein.value)
        return not_applicable("eq_2_19_lemma21", "point is not quasi-Einstein");
    if (!p.in_U_C) return not_applicable("eq_2_19_lemma21", "needs in_U_C");

    double floor = 0.0;
    CurvTensor4 bracket = lemma21_bracket(p, floor);
    CurvTensor4 zero(p.frame.n);
    return rel_report("eq_2_19_lemma21", bracket, zero, floor);
}

IdentityReport lemma22_prop23_impl(const PointGeometry& p, const ClassificationReport& cls) {
    const int n = p.frame.n;
    if (n < 4) return not_applicable("eq_2_26_prop23", "needs n >= 4");
    if (!p.in_U_S || !p.in_U_C)
        return not_applicable("eq_2_26_prop23", "needs in_U_S and in_U_C");
    if (!cls.quasi_einstein.value && !cls.roter.value)
        return not_applicable("eq_2_26_prop23", "needs a quasi-Einstein or Roter point");

    double floor = 0.0;
    CurvTensor4 bracket = lemma21_bracket(p, floor);
    FitResult fit = fit_in_span(bracket.data(), {p.C->data()}, {"C"});
    const double tt = fit.coefficients[0];
    CurvTensor4 recon = tt * (*p.C);

    IdentityReport r = rel_report("eq_2_26_prop23", bracket, recon, floor);
    r.identity_id = "eq_2_26_prop23";
    r.fitted = fit;
    std::string note = "tau_tilde=" + fmt(tt);
    if (cls.roter.value && std::abs(cls.roter_coeffs[0]) > kGuard)
        note += ", (n-2)/phi=" + fmt((n - 2.0) / cls.roter_coeffs[0]);
    r.note = note;
    return r;
}

IdentityReport theorem51_impl(const PointGeometry& p, const ClassificationReport& cls, double tol) {
    const char* id = "thm_5_1_partially_einstein";
    if (!p.in_U_H) return not_applicable(id, "needs in_U_H");
    if (!cubic_ok(p, tol)) return not_applicable(id, "cubic relation fails");
    if (!cls.partially_einstein.value)
        return not_applicable(id, "point is not partially Einstein");

    IdentityReport r;
    r.identity_id = id;
    r.applicable = true;
    const double tau_res = std::abs(p.tau) / tau_scale(p);
    double coeff_res = 0.0;
    if (!cls.partially_einstein.underdetermined) {
        const double l = cls.partial_coeffs[0], m = cls.partial_coeffs[1];
        coeff_res = std::max(
            std::abs(l - p.rho_c.rho1) / std::max({1.0, std::abs(l), std::abs(p.rho_c.rho1)}),
            std::abs(m - p.rho_c.rho0) / std::max({1.0, std::abs(m), std::abs(p.rho_c.rho0)}));
    } else {
        SymTensor2 diff = p.S2 - p.rho_c.rho1 * p.S - p.rho_c.rho0 * p.frame.g;
        const double floor = fnorm(p.S2) + std::abs(p.rho_c.rho1) * fnorm(p.S)
                             + std::abs(p.rho_c.rho0) * fnorm(p.frame.g);
        coeff_res = fnorm(diff) / std::max(floor, kGuard);
    }
    r.lhs_norm = std::abs(p.tau);
    r.rhs_norm = 0.0;
    r.residual = std::max({tau_res, cls.partially_einstein.residual, coeff_res});
    r.note = "tau=" + fmt(p.tau) + ", fit=(" + fmt(cls.partial_coeffs[0]) + ","
             + fmt(cls.partial_coeffs[1]) + "), rho=(" + fmt(p.rho_c.rho1) + ","
             + fmt(p.rho_c.rho0) + ")";
    return r;
}

} // namespace

IdentityReport check_lemma21(const PointGeometry& p, double tol) {
    return lemma21_impl(p, classify(p, tol));
}

IdentityReport check_lemma22_prop23(const PointGeometry& p, double tol) {
    return lemma22_prop23_impl(p, classify(p, tol));
}

std::vector<IdentityReport> check_prop31(const PointGeometry& p, double tol) {
    (void)tol;
    std::vector<IdentityReport> out;
    std::optional<TwoCurvatureData> tc = two_curvature_data(p);
    if (!tc || !p.in_U_S) {
        const char* why = !tc ? "needs exactly two distinct curvatures" : "needs in_U_S";
        out.push_back(not_applicable("eq_3_4_S", why));
        out.push_back(not_applicable("eq_3_5_S2", why));
        out.push_back(not_applicable("eq_3_6_trH_alpha", why));
        return out;
    }
    const int n = p.frame.n;
    const double c = p.spec.c;
    const double eps = static_cast<double>(p.spec.epsilon);
    const double dbar = p.tr_H - tc->alpha;
    const double xi = (n - 1.0) * c - eps * tc->beta;

    {
        SymTensor2 rhs = (eps * dbar) * p.H + xi * p.frame.g;
        const double floor = fnorm(p.S) + std::abs(dbar) * fnorm(p.H)
                             + std::abs(xi) * fnorm(p.frame.g);
        out.push_back(rel_report("eq_3_4_S", p.S, rhs, floor));
    }
    {
        const double ch = dbar * (tc->alpha * dbar + 2.0 * eps * xi);
        const double cg = tc->beta * dbar * dbar + xi * xi;
        SymTensor2 rhs = ch * p.H + cg * p.frame.g;
        const double floor = fnorm(p.S2) + std::abs(ch) * fnorm(p.H)
                             + std::abs(cg) * fnorm(p.frame.g);
        out.push_back(rel_report("eq_3_5_S2", p.S2, rhs, floor));
    }
    {
        // On U_S the traceless parts satisfy S - (kappa/n)g = eps(trH - alpha)(H - (trH/n)g),
        // hence trH - alpha cannot vanish there.
        SymTensor2 sdev = p.S - (p.kappa / n) * p.frame.g;
        SymTensor2 hdev = p.H - (p.tr_H / n) * p.frame.g;
        const double lhs = std::abs(dbar) * fnorm(hdev);
        const double rhs = fnorm(sdev);
        IdentityReport r = scalar_report("eq_3_6_trH_alpha", lhs, rhs, fnorm(p.S));
        r.note = "trH-alpha=" + fmt(dbar);
        out.push_back(r);
    }
    return out;
}

IdentityReport check_prop32_roter(const PointGeometry& p, double tol) {
    (void)tol;
    const char* id = "eq_3_10_roter";
    const int n = p.frame.n;
    std::optional<TwoCurvatureData> tc = two_curvature_data(p);
    if (!tc) return not_applicable(id, "needs exactly two distinct curvatures");
    if (n < 4) return not_applicable(id, "needs n >= 4");
    if (!p.in_U_S || !p.in_U_C) return not_applicable(id, "needs in_U_S and in_U_C");

    const double c = p.spec.c;
    const double eps = static_cast<double>(p.spec.epsilon);
    const double dbar = p.tr_H - tc->alpha;
    const double xi = (n - 1.0) * c - eps * tc->beta;
    SymTensor2 w = p.S - xi * p.frame.g;
    CurvTensor4 ww = kn_product(w, w);
    ww *= eps / (2.0 * dbar * dbar);
    CurvTensor4 rhs = ww + c * p.G;
    const double floor = fnorm(p.R) + fnorm(ww) + std::abs(c) * fnorm(p.G);
    IdentityReport r = rel_report(id, p.R, rhs, floor);
    r.note = "phi=" + fmt(eps / (dbar * dbar));
    return r;
}

std::vector<IdentityReport> check_prop41_block(const PointGeometry& p, double tol) {
    std::vector<IdentityReport> out;
    const int n = p.frame.n;
    const Frame& f = p.frame;
    const double c = p.spec.c;
    const double eps = static_cast<double>(p.spec.epsilon);
    const double phi = p.cubic.phi, psi = p.cubic.psi, rho = p.cubic.rho;
    const double tau = p.tau, rho1 = p.rho_c.rho1, rho0 = p.rho_c.rho0;
    const double b1 = p.beta_c.beta1, b2 = p.beta_c.beta2;
    const double b4 = p.beta_c.beta4, b5 = p.beta_c.beta5, b6 = p.beta_c.beta6;
    const bool cubic_holds = cubic_ok(p, tol);
    const double ts = tau_scale(p);

    // A = tau H asks only that the cubic relation holds.
    if (cubic_holds) {
        SymTensor2 rhs = tau * p.H;
        const double floor = fnorm(p.S2) + std::abs(rho1) * fnorm(p.S)
                             + std::abs(rho0) * fnorm(f.g) + ts * fnorm(p.H);
        out.push_back(rel_report("eq_4_4_A_tauH", p.A, rhs, floor));
    } else {
        out.push_back(not_applicable("eq_4_4_A_tauH", "cubic relation fails"));
    }

    const bool block_on = n >= 4 && p.in_U_H && cubic_holds;
    if (!block_on) {
        const char* why = n < 4               ? "needs n >= 4"
                          : !p.in_U_H         ? "needs in_U_H"
                                              : "cubic relation fails";
        for (const char* id : {"eq_4_9_tau2R", "eq_4_10_trace", "eq_4_11_QgS2", "eq_4_12_QHS",
                               "eq_4_13_QgH", "eq_4_QHH2", "eq_4_16_S3", "eq_4_17_RS",
                               "eq_4_18_CS", "eq_4_19_RC", "eq_4_20_CR", "eq_4_21_CC",
                               "eq_4_24_tauRS", "eq_4_25_tauCS"})
            out.push_back(not_applicable(id, why));
        return out;
    }

    const CurvTensor4& C = *p.C;
    CurvTensor4 QgS = tachibana2(f.g, p.S);
    CurvTensor4 QgH = tachibana2(f.g, p.H);
    CurvTensor4 QgS2 = tachibana2(f.g, p.S2);
    CurvTensor4 QSS2 = tachibana2(p.S, p.S2);
    CurvTensor4 QHH2 = tachibana2(p.H, p.H2);

    {
        CurvTensor4 aa = kn_product(p.A, p.A);
        aa *= eps / 2.0;
        CurvTensor4 lhs = (tau * tau) * p.R;
        CurvTensor4 rhs = aa + (tau * tau * c) * p.G;
        const double floor = ts * ts * (fnorm(p.R) + std::abs(c) * fnorm(p.G)) + fnorm(aa);
        out.push_back(rel_report("eq_4_9_tau2R", lhs, rhs, floor));
    }
    {
        SymTensor2 lhs = p.S2 - rho1 * p.S - tau * p.H;
        const double trace_val = (p.tr_S2 - rho1 * p.kappa - tau * p.tr_H) / n;
        SymTensor2 rhs = trace_val * f.g;
        const double floor = fnorm(p.S2) + std::abs(rho1) * fnorm(p.S) + ts * fnorm(p.H)
                             + std::abs(trace_val) * fnorm(f.g);
        IdentityReport r = rel_report("eq_4_10_trace", lhs, rhs, floor);
        const double sfloor = std::abs(p.tr_S2) / n + std::abs(rho1 * p.kappa) / n
                              + ts * std::abs(p.tr_H) / n;
        IdentityReport s = scalar_report("eq_4_10_trace", rho0, trace_val, sfloor);
        r.residual = std::max(r.residual, s.residual);
        r.note = "rho0=" + fmt(rho0) + ", trace=" + fmt(trace_val);
        out.push_back(r);
    }
    {
        CurvTensor4 rhs = rho1 * QgS + tau * QgH;
        const double floor = fnorm(QgS2) + std::abs(rho1) * fnorm(QgS) + ts * fnorm(QgH);
        out.push_back(rel_report("eq_4_11_QgS2", QgS2, rhs, floor));
    }
    {
        CurvTensor4 QHS = tachibana2(p.H, p.S);
        CurvTensor4 lhs = tau * QHS;
        CurvTensor4 rhs = (-1.0) * QSS2 - rho0 * QgS;
        const double floor = ts * fnorm(QHS) + fnorm(QSS2) + std::abs(rho0) * fnorm(QgS);
        out.push_back(rel_report("eq_4_12_QHS", lhs, rhs, floor));
    }
    {
        CurvTensor4 lhs = tau * QgH;
        CurvTensor4 rhs = QgS2 - rho1 * QgS;
        const double floor = ts * fnorm(QgH) + fnorm(QgS2) + std::abs(rho1) * fnorm(QgS);
        out.push_back(rel_report("eq_4_13_QgH", lhs, rhs, floor));
    }
    {
        CurvTensor4 lhs = tau * QHH2;
        CurvTensor4 rhs = eps * (QSS2 + (rho0 + (n - 1.0) * c * rho1) * QgS
                                 - ((n - 1.0) * c) * QgS2);
        const double floor = ts * fnorm(QHH2) + fnorm(QSS2)
                             + std::abs(rho0 + (n - 1.0) * c * rho1) * fnorm(QgS)
                             + (n - 1.0) * std::abs(c) * fnorm(QgS2);
        out.push_back(rel_report("eq_4_QHH2", lhs, rhs, floor));
    }
    {
        const double ch2 = eps * tau * (p.tr_H - phi);
        const double ch = eps * tau * (eps * (n - 1.0) * c - psi);
        const double cg = eps * tau * rho;
        SymTensor2 rhs = rho1 * p.S2 + rho0 * p.S + ch2 * p.H2 + ch * p.H - cg * f.g;
        const double floor = fnorm(p.S3) + std::abs(rho1) * fnorm(p.S2)
                             + std::abs(rho0) * fnorm(p.S) + std::abs(ch2) * fnorm(p.H2)
                             + std::abs(ch) * fnorm(p.H) + std::abs(cg) * fnorm(f.g);
        out.push_back(rel_report("eq_4_16_S3", p.S3, rhs, floor));
    }
    {
        CurvTensor4 lhs = derivation_action(p.R, p.S, f);
        CurvTensor4 rhs = c * QgS + rho * QgH - (eps * b1) * QHH2;
        const double floor = fnorm(lhs) + std::abs(c) * fnorm(QgS) + std::abs(rho) * fnorm(QgH)
                             + std::abs(b1) * fnorm(QHH2);
        out.push_back(rel_report("eq_4_17_RS", lhs, rhs, floor));
    }
    {
        CurvTensor4 lhs = derivation_action(C, p.S, f);
        CurvTensor4 QHS = tachibana2(p.H, p.S);
        CurvTensor4 rhs = b1 * QHS + b2 * QgS + b4 * QgH;
        const double floor = fnorm(lhs) + std::abs(b1) * fnorm(QHS) + std::abs(b2) * fnorm(QgS)
                             + std::abs(b4) * fnorm(QgH);
        out.push_back(rel_report("eq_4_18_CS", lhs, rhs, floor));
    }

    Tensor6 QSR = tachibana4(p.S, p.R);
    Tensor6 QgR = tachibana4(f.g, p.R);
    Tensor6 QSG = tachibana4(p.S, p.G);
    {
        Tensor6 lhs = derivation_action(p.R, C, f);
        lhs *= n - 2.0;
        Tensor6 QHG = tachibana4(p.H, p.G);
        Tensor6 gQ = kn_wedge4(f.g, QHH2);
        Tensor6 rhs = (n - 2.0) * QSR - ((n - 2.0) * (n - 2.0) * c) * QgR
                      - ((n - 3.0) * c) * QSG + rho * QHG + (eps * b1) * gQ;
        const double floor = fnorm(lhs) + (n - 2.0) * fnorm(QSR)
                             + (n - 2.0) * (n - 2.0) * std::abs(c) * fnorm(QgR)
                             + (n - 3.0) * std::abs(c) * fnorm(QSG)
                             + std::abs(rho) * fnorm(QHG) + std::abs(b1) * fnorm(gQ);
        out.push_back(rel_report("eq_4_19_RC", lhs, rhs, floor));
    }
    {
        Tensor6 lhs = derivation_action(C, p.R, f);
        lhs *= n - 2.0;
        CurvTensor4 QgH2 = tachibana2(f.g, p.H2);
        Tensor6 hQ = kn_wedge4(p.H, QgH2);
        const double cr = p.kappa / (n - 1.0) + eps * psi - (n * n - 3.0 * n + 3.0) * c;
        Tensor6 rhs = (n - 3.0) * QSR + (eps * b1) * hQ - ((n - 3.0) * c) * QSG + cr * QgR;
        const double floor = fnorm(lhs) + (n - 3.0) * fnorm(QSR) + std::abs(b1) * fnorm(hQ)
                             + (n - 3.0) * std::abs(c) * fnorm(QSG) + std::abs(cr) * fnorm(QgR);
        out.push_back(rel_report("eq_4_20_CR", lhs, rhs, floor));
    }
    {
        Tensor6 lhs = derivation_action(C, C, f);
        lhs *= n - 2.0;
        CurvTensor4 gH = kn_product(f.g, p.H);
        Tensor6 QSgH = tachibana4(p.S, gH);
        Tensor6 QHG = tachibana4(p.H, p.G);
        Tensor6 rhs = (n - 3.0) * QSR + b5 * QgR + b6 * QSG + b1 * QSgH + b4 * QHG;
        const double floor = fnorm(lhs) + (n - 3.0) * fnorm(QSR) + std::abs(b5) * fnorm(QgR)
                             + std::abs(b6) * fnorm(QSG) + std::abs(b1) * fnorm(QSgH)
                             + std::abs(b4) * fnorm(QHG);
        out.push_back(rel_report("eq_4_21_CC", lhs, rhs, floor));
    }
    {
        CurvTensor4 rs = derivation_action(p.R, p.S, f);
        CurvTensor4 lhs = tau * rs;
        const double cg2 = rho + (n - 1.0) * c * b1;
        const double cgs = tau * c - rho * rho1 - b1 * (rho0 + (n - 1.0) * c * rho1);
        CurvTensor4 rhs = (-b1) * QSS2 + cg2 * QgS2 + cgs * QgS;
        const double floor = ts * fnorm(rs) + std::abs(b1) * fnorm(QSS2)
                             + std::abs(cg2) * fnorm(QgS2) + std::abs(cgs) * fnorm(QgS);
        out.push_back(rel_report("eq_4_24_tauRS", lhs, rhs, floor));
    }
    {
        CurvTensor4 cs = derivation_action(C, p.S, f);
        CurvTensor4 lhs = tau * cs;
        const double cgs = b2 * tau - b1 * rho0 - b4 * rho1;
        CurvTensor4 rhs = (-b1) * QSS2 + b4 * QgS2 + cgs * QgS;
        const double floor = ts * fnorm(cs) + std::abs(b1) * fnorm(QSS2)
                             + std::abs(b4) * fnorm(QgS2) + std::abs(cgs) * fnorm(QgS);
        out.push_back(rel_report("eq_4_25_tauCS", lhs, rhs, floor));
    }
    return out;
}

IdentityReport check_theorem51(const PointGeometry& p, double tol) {
    return theorem51_impl(p, classify(p, tol), tol);
}

IdentityReport check_theorem52(const PointGeometry& p, double tol) {
    (void)tol;
    const char* id = "thm_5_2_tau_product";
    if (p.spec.epsilon != 1) return not_applicable(id, "needs a Riemannian ambient (epsilon = +1)");
    for (double s : p.spec.signature_or_default())
        if (s != 1.0) return not_applicable(id, "needs a Riemannian signature");
    if (p.op_groups.size() != 3)
        return not_applicable(id, "needs exactly three distinct curvatures");

    const double l0 = p.op_groups[0].value;
    const double l1 = p.op_groups[1].value;
    const double l2 = p.op_groups[2].value;
    const double k0 = p.ricci_per_group[0];
    const double k1 = p.ricci_per_group[1];
    const double k2 = p.ricci_per_group[2];

    const double lhs = (k0 - k1) * (k0 - k2) * (k1 - k2);
    const double rhs = (l0 - l1) * (l0 - l2) * (l1 - l2) * p.tau;
    const double kmag = std::max({std::abs(k0), std::abs(k1), std::abs(k2)});
    const double lmag = std::max({std::abs(l0), std::abs(l1), std::abs(l2)});
    const double floor = kmag * kmag * kmag + lmag * lmag * lmag * tau_scale(p);
    IdentityReport r = scalar_report(id, lhs, rhs, floor);
    r.note = "kappa_diff_product=" + fmt(lhs) + ", lambda_diff_product*tau=" + fmt(rhs);
    return r;
}

std::vector<IdentityReport> check_theorem61(const PointGeometry& p, double tol) {
    std::vector<IdentityReport> out;
    const int n = p.frame.n;
    const Frame& f = p.frame;
    const double c = p.spec.c;
    const double eps = static_cast<double>(p.spec.epsilon);
    const double tau = p.tau, rho1 = p.rho_c.rho1, rho0 = p.rho_c.rho0;
    const double b1 = p.beta_c.beta1, b2 = p.beta_c.beta2, b4 = p.beta_c.beta4;
    const double rho = p.cubic.rho;

    const bool on = n >= 4 && p.in_U_H && cubic_ok(p, tol) && !tau_is_zero(p, tol);
    if (!on) {
        const char* why = n < 4                   ? "needs n >= 4"
                          : !p.in_U_H             ? "needs in_U_H"
                          : !cubic_ok(p, tol)     ? "cubic relation fails"
                                                  : "needs tau != 0";
        for (const char* id : {"eq_6_1_H", "eq_6_2_groter", "eq_6_3_RS", "eq_6_4_CS",
                               "eq_6_5_H2", "thm_6_1_S3_span"})
            out.push_back(not_applicable(id, why));
        return out;
    }

    const double ti = 1.0 / tau;
    {
        SymTensor2 rhs = ti * p.A;
        const double floor = fnorm(p.H) + std::abs(ti) * fnorm(p.A);
        out.push_back(rel_report("eq_6_1_H", p.H, rhs, floor));
    }
    {
        CurvTensor4 aa = kn_product(p.A, p.A);
        aa *= eps * ti * ti / 2.0;
        CurvTensor4 rhs = aa + c * p.G;
        const double floor = fnorm(p.R) + fnorm(aa) + std::abs(c) * fnorm(p.G);
        out.push_back(rel_report("eq_6_2_groter", p.R, rhs, floor));
    }

    CurvTensor4 QgS = tachibana2(f.g, p.S);
    CurvTensor4 QgS2 = tachibana2(f.g, p.S2);
    CurvTensor4 QSS2 = tachibana2(p.S, p.S2);
    {
        CurvTensor4 lhs = derivation_action(p.R, p.S, f);
        const double cg2 = ti * (rho + (n - 1.0) * c * b1);
        const double cgs = c - ti * rho * rho1 - ti * b1 * (rho0 + (n - 1.0) * c * rho1);
        CurvTensor4 rhs = (-ti * b1) * QSS2 + cg2 * QgS2 + cgs * QgS;
        const double floor = fnorm(lhs) + std::abs(ti * b1) * fnorm(QSS2)
                             + std::abs(cg2) * fnorm(QgS2) + std::abs(cgs) * fnorm(QgS);
        out.push_back(rel_report("eq_6_3_RS", lhs, rhs, floor));
    }
    {
        CurvTensor4 lhs = derivation_action(*p.C, p.S, f);
        const double cgs = b2 - ti * (b1 * rho0 + b4 * rho1);
        CurvTensor4 rhs = (-ti * b1) * QSS2 + (ti * b4) * QgS2 + cgs * QgS;
        const double floor = fnorm(lhs) + std::abs(ti * b1) * fnorm(QSS2)
                             + std::abs(ti * b4) * fnorm(QgS2) + std::abs(cgs) * fnorm(QgS);
        out.push_back(rel_report("eq_6_4_CS", lhs, rhs, floor));
    }
    {
        const double cs2 = ti * p.tr_H;
        const double cs = -ti * (p.tr_H * rho1 + eps * tau);
        const double cg = ti * (eps * (n - 1.0) * c * tau - rho0 * p.tr_H);
        SymTensor2 rhs = cs2 * p.S2 + cs * p.S + cg * f.g;
        const double floor = fnorm(p.H2) + std::abs(cs2) * fnorm(p.S2)
                             + std::abs(cs) * fnorm(p.S) + std::abs(cg) * fnorm(f.g);
        out.push_back(rel_report("eq_6_5_H2", p.H2, rhs, floor));
    }
    {
        FitResult fit = fit_in_span(p.S3.data(), {p.S2.data(), p.S.data(), f.g.data()},
                                    {"S2", "S", "g"});
        IdentityReport r;
        r.identity_id = "thm_6_1_S3_span";
        r.applicable = true;
        r.lhs_norm = fnorm(p.S3);
        SymTensor2 recon = fit.coefficients[0] * p.S2 + fit.coefficients[1] * p.S
                           + fit.coefficients[2] * f.g;
        r.rhs_norm = fnorm(recon);
        SymTensor2 diff = p.S3 - recon;
        const double floor = fnorm(p.S3) + fnorm(recon);
        r.residual = fnorm(diff) / std::max({r.lhs_norm, r.rhs_norm, floor, kGuard});
        r.fitted = fit;
        r.note = "coeffs=(" + fmt(fit.coefficients[0]) + "," + fmt(fit.coefficients[1]) + ","
                 + fmt(fit.coefficients[2]) + ")";
        out.push_back(r);
    }
    return out;
}

SuiteReport run_suite(const PointGeometry& p, double tol) {
    SuiteReport suite;
    suite.point_label = p.spec.label;
    suite.n = p.frame.n;
    suite.tau = p.tau;
    suite.kappa = p.kappa;
    suite.in_U_H = p.in_U_H;
    suite.in_U_S = p.in_U_S;
    suite.in_U_C = p.in_U_C;
    suite.tol = tol;

    ClassificationReport cls = classify(p, tol);

    for (IdentityReport& r : check_construction(p, tol)) suite.reports.push_back(std::move(r));
    suite.reports.push_back(check_universal_CRRC(p, tol));
    suite.reports.push_back(check_universal_CS(p, tol));
    suite.reports.push_back(check_hypersurface_RR(p, tol));
    suite.reports.push_back(check_hypersurface_CRRC(p, tol));
    suite.reports.push_back(lemma21_impl(p, cls));
    suite.reports.push_back(lemma22_prop23_impl(p, cls));
    for (IdentityReport& r : check_prop31(p, tol)) suite.reports.push_back(std::move(r));
    suite.reports.push_back(check_prop32_roter(p, tol));
    for (IdentityReport& r : check_prop41_block(p, tol)) suite.reports.push_back(std::move(r));
    suite.reports.push_back(theorem51_impl(p, cls, tol));
    suite.reports.push_back(check_theorem52(p, tol));
    for (IdentityReport& r : check_theorem61(p, tol)) suite.reports.push_back(std::move(r));
    return suite;
}

} // namespace curvlab
