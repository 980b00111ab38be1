#include "curvlab/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace curvlab {

void PrincipalSpectrum::validate() const {
    if (n < 3) throw std::invalid_argument("dimension: must be >= 3");
    if (!std::isfinite(c)) throw std::invalid_argument("ambient_curvature: must be finite");
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon: must be +1 or -1");
    if (!signature.empty()) {
        if (static_cast<int>(signature.size()) != n)
            throw std::invalid_argument("signature: length must equal dimension");
        for (double s : signature)
            if (s != 1.0 && s != -1.0)
                throw std::invalid_argument("signature: entries must be +1 or -1");
    }
    if (groups.empty()) throw std::invalid_argument("principal_curvatures: must be non-empty");
    int total = 0;
    for (const auto& grp : groups) {
        if (!std::isfinite(grp.value))
            throw std::invalid_argument("principal_curvatures: value must be finite");
        if (grp.multiplicity < 1)
            throw std::invalid_argument("principal_curvatures: multiplicity must be >= 1");
        total += grp.multiplicity;
    }
    if (total != n)
        throw std::invalid_argument("principal_curvatures: multiplicities must sum to dimension");
}

std::vector<double> PrincipalSpectrum::expanded() const {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    for (const auto& grp : groups)
        for (int k = 0; k < grp.multiplicity; ++k) out.push_back(grp.value);
    return out;
}

std::vector<double> PrincipalSpectrum::signature_or_default() const {
    if (!signature.empty()) return signature;
    return std::vector<double>(static_cast<size_t>(n), 1.0);
}

std::vector<CurvatureGroup> PrincipalSpectrum::distinct_groups() const {
    double scale = 0.0;
    for (const auto& grp : groups) scale = std::max(scale, std::abs(grp.value));
    const double tol = 1e-12 * std::max(scale, 1.0);
    std::vector<CurvatureGroup> out;
    for (const auto& grp : groups) {
        bool merged = false;
        for (auto& d : out)
            if (std::abs(d.value - grp.value) <= tol) {
                d.multiplicity += grp.multiplicity;
                merged = true;
                break;
            }
        if (!merged) out.push_back(grp);
    }
    return out;
}

PrincipalSpectrum PrincipalSpectrum::scaled(double s) const {
    PrincipalSpectrum out = *this;
    out.c = c * s * s;
    for (auto& grp : out.groups) grp.value *= s;
    return out;
}

} // namespace curvlab
