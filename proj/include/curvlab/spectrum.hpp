#pragma once

#include <string>
#include <vector>

namespace curvlab {

// One principal-curvature value with its multiplicity.
struct CurvatureGroup {
    double value = 0.0;
    int multiplicity = 0;
};

// Pointwise data of a hypersurface point in an ambient space form:
// dimension, ambient constant c of the space form, normal epsilon (+1/-1),
// metric signature along the principal directions, and the shape-operator
// spectrum as value/multiplicity groups.
struct PrincipalSpectrum {
    int n = 0;
    double c = 0.0;
    int epsilon = 1;
    std::vector<double> signature;        // empty means all +1
    std::vector<CurvatureGroup> groups;   // in order; multiplicities sum to n
    std::string label;

    // Throws std::invalid_argument with a field-level message on bad data.
    void validate() const;

    // Principal curvatures expanded to length n, group order preserved.
    std::vector<double> expanded() const;

    // Signature expanded to length n (all +1 when unspecified).
    std::vector<double> signature_or_default() const;

    // Distinct values in first-appearance order with merged multiplicities.
    // Values are distinct when they differ by more than 1e-12 * scale.
    std::vector<CurvatureGroup> distinct_groups() const;

    // Homothety H -> s H, c -> s^2 c of the same geometry.
    PrincipalSpectrum scaled(double s) const;
};

} // namespace curvlab
