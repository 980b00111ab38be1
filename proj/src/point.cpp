#include "curvlab/point.hpp"

#include "curvlab/fit.hpp"
#include "curvlab/ops.hpp"

#include <cmath>
#include <stdexcept>

namespace curvlab {

namespace {

std::vector<CurvatureGroup> group_operator_spectrum(const std::vector<double>& theta) {
    double scale = 0.0;
    for (double t : theta) scale = std::max(scale, std::abs(t));
    const double tol = 1e-12 * std::max(scale, 1.0);
    std::vector<CurvatureGroup> out;
    for (double t : theta) {
        bool merged = false;
        for (auto& grp : out)
            if (std::abs(grp.value - t) <= tol) {
                grp.multiplicity += 1;
                merged = true;
                break;
            }
        if (!merged) out.push_back({t, 1});
    }
    return out;
}

// Operator value of each authored spectrum group, provided every group is
// homogeneous under the signature. Empty when any group mixes signs.
std::vector<double> authored_group_values(const PrincipalSpectrum& spec) {
    const std::vector<double> sig = spec.signature_or_default();
    std::vector<double> vals;
    int idx = 0;
    for (const auto& grp : spec.groups) {
        const double first = sig[idx] * grp.value;
        for (int r = 0; r < grp.multiplicity; ++r)
            if (sig[idx + r] * grp.value != first) return {};
        vals.push_back(first);
        idx += grp.multiplicity;
    }
    return vals;
}

CubicCoeffs compute_cubic(const PointGeometry& p) {
    CubicCoeffs out;
    const size_t k = p.op_groups.size();
    std::vector<double> roots;
    if (k == 3) {
        roots = {p.op_groups[0].value, p.op_groups[1].value, p.op_groups[2].value};
        out.underdetermined = false;
    } else if (k < 3) {
        // The relation is non-unique. A spectrum authored as exactly three
        // groups still pins down a canonical exact completion: the cubic
        // with those group values as roots, repetition included. Otherwise
        // fall back to the minimum-norm triple.
        out.underdetermined = true;
        roots = authored_group_values(p.spec);
        if (roots.size() != 3) roots.clear();
    }
    if (roots.size() == 3) {
        out.phi = roots[0] + roots[1] + roots[2];
        out.psi = -(roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2]);
        out.rho = roots[0] * roots[1] * roots[2];
    } else {
        FitResult fr = fit_in_span(p.H3.data(),
                                   {p.H2.data(), p.H.data(), p.frame.g.data()},
                                   {"H2", "H", "g"});
        out.phi = fr.coefficients[0];
        out.psi = fr.coefficients[1];
        out.rho = fr.coefficients[2];
        out.underdetermined = fr.underdetermined || k < 3;
    }
    // Reconstruction residual of H^3 = phi H^2 + psi H + rho g on the scale of
    // the constituent terms.
    SymTensor2 diff = p.H3 - out.phi * p.H2 - out.psi * p.H - out.rho * p.frame.g;
    const double scale = fnorm(p.H3) + std::abs(out.phi) * fnorm(p.H2)
                         + std::abs(out.psi) * fnorm(p.H) + std::abs(out.rho) * fnorm(p.frame.g);
    out.residual = fnorm(diff) / std::max(scale, 1e-30);
    return out;
}

} // namespace

PointGeometry build_point(const PrincipalSpectrum& spec, double tol) {
    spec.validate();
    PointGeometry p;
    p.spec = spec;
    p.tol = tol;

    const int n = spec.n;
    const double c = spec.c;
    const double eps = static_cast<double>(spec.epsilon);
    const std::vector<double> lam = spec.expanded();
    const std::vector<double> sig = spec.signature_or_default();

    p.frame = Frame::diagonal(sig);
    p.H = SymTensor2::diag(lam);
    p.H2 = mat_power(p.H, 2, p.frame);
    p.H3 = mat_power(p.H, 3, p.frame);
    p.H4 = mat_power(p.H, 4, p.frame);
    p.tr_H = trace_g(p.H, p.frame);
    p.tr_H2 = trace_g(p.H2, p.frame);

    // Gauss equation: R = eps/2 H ^ H + c G, S = eps(trH H - H^2) + (n-1)c g.
    p.G = metric_square(p.frame);
    CurvTensor4 hh = kn_product(p.H, p.H);
    hh *= 0.5 * eps;
    p.R = hh + c * p.G;

    p.S = eps * (p.tr_H * p.H - p.H2) + ((n - 1.0) * c) * p.frame.g;
    p.S2 = mat_power(p.S, 2, p.frame);
    p.S3 = mat_power(p.S, 3, p.frame);
    p.kappa = trace_g(p.S, p.frame);
    p.tr_S2 = trace_g(p.S2, p.frame);

    if (n >= 4) p.C = weyl(p.R, p.frame);

    // Operator spectrum theta_i = sig_i * lambda_i (eigenvalues of g^{-1}H).
    std::vector<double> theta(lam.size());
    for (size_t i = 0; i < lam.size(); ++i) theta[i] = sig[i] * lam[i];
    p.op_groups = group_operator_spectrum(theta);

    p.cubic = compute_cubic(p);
    const double phi = p.cubic.phi, psi = p.cubic.psi, rho = p.cubic.rho;
    const double d = phi - p.tr_H;
    p.tau = rho + d * (psi + p.tr_H * d);
    p.rho_c.rho1 = 2.0 * (n - 1.0) * c - eps * (psi + d * d);
    p.rho_c.rho0 = rho * (phi - 2.0 * p.tr_H) - (n - 1.0) * (n - 1.0) * c * c
                   + eps * (n - 1.0) * c * (psi + d * d);
    p.A = p.S2 - p.rho_c.rho1 * p.S - p.rho_c.rho0 * p.frame.g;

    p.beta_c.kappa_tilde = n * (n + 1.0) * c;
    p.beta_c.mu = (p.kappa / (n - 1.0) - p.beta_c.kappa_tilde / (n + 1.0)) / (n - 2.0);
    p.beta_c.beta1 = eps * d;
    p.beta_c.beta2 = p.beta_c.mu + eps / (n - 2.0) * (d * d + psi);
    p.beta_c.beta3 = eps * p.beta_c.mu * p.tr_H
                     + (psi * (2.0 * p.tr_H - phi) + (n - 3.0) * rho) / (n - 2.0);
    p.beta_c.beta4 = p.beta_c.beta3 - eps * p.beta_c.beta2 * p.tr_H
                     + (n - 1.0) * c * p.beta_c.beta1;
    p.beta_c.beta5 = p.kappa / (n - 1.0) + eps * psi
                     - (n * n - 3.0 * n + 3.0) * c + p.beta_c.beta1 * p.tr_H;
    p.beta_c.beta6 = p.beta_c.beta2 - (n - 3.0) * c;

    // Ricci eigenvalue per operator group: kappa(t) = eps(trH t - t^2) + (n-1)c.
    p.ricci_per_group.clear();
    for (const auto& grp : p.op_groups)
        p.ricci_per_group.push_back(eps * (p.tr_H * grp.value - grp.value * grp.value)
                                    + (n - 1.0) * c);

    // Set memberships. U_H holds where H^2 falls outside span{H, g}, that is
    // where at least three operator eigenvalues are distinct.
    {
        FitResult fr = fit_in_span(p.H2.data(), {p.H.data(), p.frame.g.data()}, {"H", "g"});
        p.u_H_residual = fr.residual;
        p.in_U_H = p.u_H_residual > tol;
    }
    {
        SymTensor2 dev = p.S - (p.kappa / n) * p.frame.g;
        const double scale = fnorm(p.S) + std::abs(p.kappa) / n * fnorm(p.frame.g);
        p.u_S_residual = fnorm(dev) / std::max(scale, 1e-30);
        p.in_U_S = p.u_S_residual > tol;
    }
    if (p.C) {
        p.u_C_residual = fnorm(*p.C) / std::max(fnorm(p.R), 1e-30);
        p.in_U_C = p.u_C_residual > tol;
    } else {
        p.u_C_residual = 0.0;
        p.in_U_C = false;
    }

    return p;
}

CubicCoeffs cubic_coefficients(const PointGeometry& p) { return p.cubic; }

double tau_invariant(const PointGeometry& p) {
    if (p.cubic.residual > p.tol)
        throw std::runtime_error("H^3 relation fails; tau undefined");
    return p.tau;
}

RhoCoeffs rho_coeffs(const PointGeometry& p) {
    if (p.cubic.residual > p.tol)
        throw std::runtime_error("H^3 relation fails; tau undefined");
    return p.rho_c;
}

BetaCoeffs beta_coeffs(const PointGeometry& p) {
    if (p.frame.n < 4) throw std::invalid_argument("beta_coeffs: dimension must be >= 4");
    return p.beta_c;
}

std::array<double, 3> ricci_eigenvalues(const PointGeometry& p) {
    if (p.op_groups.size() > 3)
        throw std::invalid_argument("ricci_eigenvalues: more than three distinct principal curvatures");
    if (p.op_groups.empty())
        throw std::invalid_argument("ricci_eigenvalues: empty spectrum");
    std::array<double, 3> out{};
    for (size_t j = 0; j < 3; ++j) {
        const size_t idx = std::min(j, p.ricci_per_group.size() - 1);
        out[j] = p.ricci_per_group[idx];
    }
    return out;
}

std::optional<TwoCurvatureData> two_curvature_data(const PointGeometry& p) {
    if (p.op_groups.size() != 2) return std::nullopt;
    TwoCurvatureData d;
    d.t1 = p.op_groups[0].value;
    d.t2 = p.op_groups[1].value;
    d.p = p.op_groups[0].multiplicity;
    d.alpha = d.t1 + d.t2;
    d.beta = -d.t1 * d.t2;
    SymTensor2 dev = p.H2 - d.alpha * p.H - d.beta * p.frame.g;
    if (fnorm(dev) > 1e-12 * std::max(1.0, fnorm(p.H2)))
        throw std::logic_error("two_curvature_data: H^2 = alpha H + beta g violated");
    return d;
}

PointGeometry transform_point(const PointGeometry& p, const LinMap& L) {
    PointGeometry q = p;
    q.frame = congruence(p.frame, L);
    q.H = congruence(p.H, L);
    q.H2 = congruence(p.H2, L);
    q.H3 = congruence(p.H3, L);
    q.H4 = congruence(p.H4, L);
    q.S = congruence(p.S, L);
    q.S2 = congruence(p.S2, L);
    q.S3 = congruence(p.S3, L);
    q.A = congruence(p.A, L);
    q.R = congruence(p.R, L);
    q.G = congruence(p.G, L);
    if (p.C) q.C = congruence(*p.C, L);
    return q;
}

double tau_scale(const PointGeometry& p) {
    return 1.0 + std::abs(p.tr_H) * std::abs(p.tr_H) * std::abs(p.tr_H)
           + std::abs(p.cubic.rho) + std::abs(p.cubic.psi * p.tr_H);
}

bool tau_is_zero(const PointGeometry& p, double tol) {
    return std::abs(p.tau) <= tol * tau_scale(p);
}

} // namespace curvlab
