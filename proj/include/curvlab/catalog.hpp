#pragma once

#include "curvlab/classify.hpp"
#include "curvlab/point.hpp"
#include "curvlab/spectrum.hpp"

#include <string>
#include <vector>

namespace curvlab {

// One expected property of a catalog instance. Keys are either scalar
// accessors ("tau", "kappa", "rho1", "rho0", "beta1".."beta6", "mu", "phi",
// "psi", "rho", "trH", "kappa_eigen0".."kappa_eigen2", "L_R", "L_S",
// "roter_phi", "roter_mu", "roter_eta", "partial_l", "partial_m") or
// classification flags ("class:<flag name>", value 1 or 0). provenance is
// "[PAPER]" for a value quoted from the source material and "[DERIVED]" for a
// value recomputed through an independent oracle.
struct ExpectedValue {
    std::string key;
    double value = 0.0;
    std::string provenance;
};

struct CatalogEntry {
    std::string name;            // builder name
    std::vector<double> params;  // in builder argument order
    PrincipalSpectrum spectrum;
    std::vector<ExpectedValue> expected;
};

// Builders. Each validates its parameters and throws std::invalid_argument
// with the offending field named.
PrincipalSpectrum clifford(int p, int n, double c, double t);
PrincipalSpectrum austere(int n, int p, double lambda, double c);
PrincipalSpectrum cartan(int p, double c); // austere(3p, p, sqrt(3c), c)
PrincipalSpectrum type_two(int n, double lambda0, double lambda1, double c);
PrincipalSpectrum two_quasi_umbilical(int n, double lambda);
PrincipalSpectrum three_curvature(int n, double lambda0, double lambda1, double lambda2,
                                  int n1, int n2, double c);

// Builder names addressable by string, in stable order.
const std::vector<std::string>& catalog_names();

// Dispatch by name; params in builder order, integer arguments must hold
// integral values. Throws std::invalid_argument for unknown names or bad
// parameter counts.
PrincipalSpectrum catalog_build(const std::string& name, const std::vector<double>& params);

// The regression instances with their expected properties.
const std::vector<CatalogEntry>& standard_catalog();

struct ExpectedCheck {
    std::string key;
    double expected = 0.0;
    double actual = 0.0;
    bool ok = false;
    std::string provenance;
};

// Compare an entry's expected list against a built point + classification.
// Scalars pass when |actual - expected| <= tol * max(1, |expected|); flags
// must match exactly.
std::vector<ExpectedCheck> evaluate_expected(const CatalogEntry& entry, const PointGeometry& p,
                                             const ClassificationReport& cls, double tol);

} // namespace curvlab
