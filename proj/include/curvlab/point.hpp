#pragma once

#include "curvlab/spectrum.hpp"
#include "curvlab/tensor.hpp"

#include <array>
#include <optional>

namespace curvlab {

// Coefficients of the shape-operator cubic H^3 = phi H^2 + psi H + rho g.
// With exactly three distinct operator eigenvalues these are the elementary
// symmetric functions of the roots; otherwise a least-squares fit, min-norm
// and flagged underdetermined when fewer than three values pin it down.
struct CubicCoeffs {
    double phi = 0.0;
    double psi = 0.0;
    double rho = 0.0;
    double residual = 0.0;
    bool underdetermined = false;
};

struct RhoCoeffs {
    double rho1 = 0.0;
    double rho0 = 0.0;
};

struct BetaCoeffs {
    double beta1 = 0.0;
    double beta2 = 0.0;
    double beta3 = 0.0;
    double beta4 = 0.0;
    double beta5 = 0.0;
    double beta6 = 0.0;
    double mu = 0.0;          // conformal mean coefficient
    double kappa_tilde = 0.0; // ambient scalar curvature n(n+1)c
};

// Two-curvature (exactly two distinct operator eigenvalues) bookkeeping:
// H^2 = alpha H + beta g with alpha = t1 + t2, beta = -t1 t2.
struct TwoCurvatureData {
    double alpha = 0.0;
    double beta = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    int p = 0; // multiplicity of t1
};

// Everything derived from one principal-curvature spectrum: the frame, shape
// powers, intrinsic curvature built from the Gauss equation, Weyl part,
// scalar invariants, and set-membership indicators.
struct PointGeometry {
    PrincipalSpectrum spec;
    Frame frame;

    SymTensor2 H, H2, H3, H4;
    SymTensor2 S, S2, S3;
    SymTensor2 A; // S^2 - rho1 S - rho0 g, equal to tau H on the cubic locus
    CurvTensor4 R, G;
    std::optional<CurvTensor4> C; // n >= 4 only

    double tr_H = 0.0;
    double tr_H2 = 0.0;
    double kappa = 0.0;
    double tr_S2 = 0.0;

    // Operator spectrum: eigenvalues of the shape operator g^{-1}H grouped by
    // distinct value, first appearance order.
    std::vector<CurvatureGroup> op_groups;

    CubicCoeffs cubic;
    double tau = 0.0;
    RhoCoeffs rho_c;
    BetaCoeffs beta_c;

    // in_U_H: H^2 does not fit in span{H, g} (at least three distinct operator
    // eigenvalues). in_U_S: S is not proportional to g. in_U_C: Weyl tensor
    // does not vanish relative to R (always false when n = 3).
    bool in_U_H = false, in_U_S = false, in_U_C = false;
    double u_H_residual = 0.0, u_S_residual = 0.0, u_C_residual = 0.0;

    // Ricci eigenvalue per operator group (eigenvalues of g^{-1}S).
    std::vector<double> ricci_per_group;

    double tol = 1e-9;
};

// Construct the point from a spectrum. Validates the spectrum first.
PointGeometry build_point(const PrincipalSpectrum& spec, double tol = 1e-9);

CubicCoeffs cubic_coefficients(const PointGeometry& p);
double tau_invariant(const PointGeometry& p);
RhoCoeffs rho_coeffs(const PointGeometry& p);
BetaCoeffs beta_coeffs(const PointGeometry& p);

// (kappa_0, kappa_1, kappa_2) for the up-to-three distinct operator
// eigenvalues; with fewer groups the last value repeats. Throws
// std::invalid_argument when more than three groups are present.
std::array<double, 3> ricci_eigenvalues(const PointGeometry& p);

// Defined only on points with exactly two distinct operator eigenvalues.
std::optional<TwoCurvatureData> two_curvature_data(const PointGeometry& p);

// Congruence-transform every tensor into the frame defined by L while keeping
// the scalar invariants (they are frame-independent).
PointGeometry transform_point(const PointGeometry& p, const LinMap& L);

// Scale bound used for the tau = 0 decision:
// |tau| <= tol * (1 + |tr H|^3 + |rho| + |psi tr H|).
double tau_scale(const PointGeometry& p);
bool tau_is_zero(const PointGeometry& p, double tol);

} // namespace curvlab
