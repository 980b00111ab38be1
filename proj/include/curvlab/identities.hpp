#pragma once

#include "curvlab/classify.hpp"
#include "curvlab/fit.hpp"
#include "curvlab/point.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvlab {

// One evaluated tensor identity. residual is relative:
//   |lhs - rhs| / max(|lhs|, |rhs|, floor, 1e-30)
// where floor is the summed norm of the constituent terms, so that a left and
// right side that both cancel to zero still divide by the scale they were
// built from. applicable = false means a precondition failed and no pass/fail
// is asserted.
struct IdentityReport {
    std::string identity_id;
    bool applicable = false;
    double lhs_norm = 0.0;
    double rhs_norm = 0.0;
    double residual = 0.0;
    std::optional<FitResult> fitted; // identities resolved through a fit
    std::string note;

    bool passed(double tol) const { return !applicable || residual <= tol; }
};

struct SuiteReport {
    std::string point_label;
    int n = 0;
    double tau = 0.0;
    double kappa = 0.0;
    bool in_U_H = false, in_U_S = false, in_U_C = false;
    double tol = 1e-9;
    std::vector<IdentityReport> reports;

    int applicable_count() const;
    int failed_count() const;
    bool all_passed() const;
};

// The frozen identity_id strings in suite order.
const std::vector<std::string>& identity_ids();

// Run every check on the point. Reports come back in identity_ids() order.
SuiteReport run_suite(const PointGeometry& p, double tol = 1e-9);

// Individual checks. Each returns applicable = false when its preconditions
// fail; none of them throws on dimension.
std::vector<IdentityReport> check_construction(const PointGeometry& p, double tol);
IdentityReport check_universal_CRRC(const PointGeometry& p, double tol);
IdentityReport check_universal_CS(const PointGeometry& p, double tol);
IdentityReport check_hypersurface_RR(const PointGeometry& p, double tol);
IdentityReport check_hypersurface_CRRC(const PointGeometry& p, double tol);
IdentityReport check_lemma21(const PointGeometry& p, double tol);
IdentityReport check_lemma22_prop23(const PointGeometry& p, double tol);
std::vector<IdentityReport> check_prop31(const PointGeometry& p, double tol);
IdentityReport check_prop32_roter(const PointGeometry& p, double tol);
std::vector<IdentityReport> check_prop41_block(const PointGeometry& p, double tol);
IdentityReport check_theorem51(const PointGeometry& p, double tol);
IdentityReport check_theorem52(const PointGeometry& p, double tol);
std::vector<IdentityReport> check_theorem61(const PointGeometry& p, double tol);

} // namespace curvlab
