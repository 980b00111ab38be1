#pragma once

#include "curvlab/fit.hpp"
#include "curvlab/point.hpp"

#include <array>
#include <string>
#include <vector>

namespace curvlab {

// One taxonomy flag with the numeric evidence behind the decision.
struct ClassFlag {
    bool value = false;
    double residual = 0.0;
    bool underdetermined = false;
};

struct ClassificationReport {
    ClassFlag einstein;
    ClassFlag quasi_einstein;
    ClassFlag two_quasi_einstein;
    ClassFlag partially_einstein;
    ClassFlag roter;
    ClassFlag generalized_roter;
    ClassFlag pseudosymmetric;
    ClassFlag ricci_pseudosymmetric;
    ClassFlag semisymmetric;
    ClassFlag conformally_flat;
    ClassFlag quasi_umbilical;
    ClassFlag two_quasi_umbilical;

    int ricci_dev_rank = 0;          // min over alpha of rank(S - alpha g)
    double alpha = 0.0;              // minimizer when the rank is 1 or 2
    int umbilicity_rank = 0;         // min over alpha of rank(H - alpha g)
    double umbilical_alpha = 0.0;

    std::array<double, 2> partial_coeffs{};  // S^2 = l S + m g
    std::array<double, 3> roter_coeffs{};    // phi, mu, eta
    std::array<double, 6> groter_coeffs{};   // phi2, phi1, phi, mu1, mu, eta

    double L_R = 0.0; // pseudosymmetry function from the R.R fit
    double L_S = 0.0; // Ricci pseudosymmetry function from the R.S fit

    double tol = 1e-9;
};

ClassificationReport classify(const PointGeometry& p, double tol = 1e-9);

// Roter coefficients (phi, mu, eta) of R = phi/2 S^S + mu g^S + eta/2 g^g.
// Requires the Roter flag; throws std::logic_error otherwise.
std::array<double, 3> roter_coeff_extract(const PointGeometry& p, double tol = 1e-9);

// Flag names in report order, for serialization and printing.
std::vector<std::pair<std::string, const ClassFlag*>> flag_table(const ClassificationReport& r);

} // namespace curvlab
