#include "curvlab/classify.hpp"

#include "curvlab/ops.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvlab {

namespace {

Eigen::MatrixXd to_eigen(const SymTensor2& t) {
    const int n = t.dim();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = t(i, j);
    return m;
}

struct RankScan {
    int rank = 0;
    double alpha = 0.0;
    double next_sv = 0.0;   // first singular value below the rank cut
    double leading_sv = 0.0;
};

// Minimum rank of T - alpha g over candidate alphas. The singular-value cut is
// 1e-9 x the larger of the matrix's own top singular value and the anchor
// scale, so noise on an exactly-proportional T cannot inflate the rank.
RankScan min_rank_dev(const SymTensor2& t, const SymTensor2& g,
                      const std::vector<double>& candidates, double anchor) {
    RankScan best;
    best.rank = t.dim() + 1;
    for (double a : candidates) {
        Eigen::MatrixXd m = to_eigen(t) - a * to_eigen(g);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        const Eigen::VectorXd sv = svd.singularValues();
        const double top = sv.size() > 0 ? sv(0) : 0.0;
        const double cut = 1e-9 * std::max(top, anchor);
        int r = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > cut) ++r;
        const double next = r < sv.size() ? sv(r) : 0.0;
        if (r < best.rank || (r == best.rank && next < best.next_sv)) {
            best.rank = r;
            best.alpha = a;
            best.next_sv = next;
            best.leading_sv = top;
        }
    }
    return best;
}

std::vector<double> dedupe(const std::vector<double>& v) {
    double scale = 0.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    const double tol = 1e-9 * std::max(scale, 1.0);
    std::vector<double> out;
    for (double x : v) {
        bool seen = false;
        for (double y : out)
            if (std::abs(x - y) <= tol) { seen = true; break; }
        if (!seen) out.push_back(x);
    }
    return out;
}

} // namespace

ClassificationReport classify(const PointGeometry& p, double tol) {
    ClassificationReport r;
    r.tol = tol;
    const int n = p.frame.n;
    const Frame& f = p.frame;

    // Einstein: S proportional to g.
    {
        SymTensor2 dev = p.S - (p.kappa / n) * f.g;
        r.einstein.residual = fnorm(dev) / std::max(fnorm(p.S), 1e-30);
        r.einstein.value = r.einstein.residual <= tol;
    }

    // Rank of S - alpha g over the Ricci eigenvalues.
    {
        RankScan scan = min_rank_dev(p.S, f.g, dedupe(p.ricci_per_group), fnorm(p.S));
        r.ricci_dev_rank = scan.rank;
        if (scan.rank == 1 || scan.rank == 2) r.alpha = scan.alpha;
        const double denom = std::max(fnorm(p.S), 1e-30);
        r.quasi_einstein.value = scan.rank == 1;
        r.quasi_einstein.residual = scan.next_sv / denom;
        r.two_quasi_einstein.value = scan.rank == 2;
        r.two_quasi_einstein.residual = scan.next_sv / denom;
    }

    // Umbilicity rank of H - alpha g over the operator eigenvalues.
    {
        std::vector<double> cand;
        for (const auto& grp : p.op_groups) cand.push_back(grp.value);
        RankScan scan = min_rank_dev(p.H, f.g, dedupe(cand), fnorm(p.H));
        r.umbilicity_rank = scan.rank;
        r.umbilical_alpha = scan.alpha;
        r.quasi_umbilical.value = scan.rank == 1;
        r.quasi_umbilical.residual = scan.next_sv / std::max(fnorm(p.H), 1e-30);
        r.two_quasi_umbilical.value = scan.rank == 2;
        r.two_quasi_umbilical.residual = r.quasi_umbilical.residual;
    }

    // Partially Einstein: S^2 = l S + m g.
    {
        FitResult fit = fit_in_span(p.S2.data(), {p.S.data(), f.g.data()}, {"S", "g"});
        r.partial_coeffs = {fit.coefficients[0], fit.coefficients[1]};
        r.partially_einstein.residual = fit.residual;
        r.partially_einstein.underdetermined = fit.underdetermined;
        r.partially_einstein.value = fit.residual <= tol;
    }

    const CurvTensor4 gS = kn_product(f.g, p.S);
    const CurvTensor4 SS = [&] { CurvTensor4 t = kn_product(p.S, p.S); t *= 0.5; return t; }();

    // Roter: R in span {1/2 S^S, g^S, 1/2 g^g} away from the (quasi-)Einstein
    // degeneracies.
    {
        FitResult fit = fit_in_span(p.R.data(), {SS.data(), gS.data(), p.G.data()},
                                    {"S^S/2", "g^S", "g^g/2"});
        r.roter_coeffs = {fit.coefficients[0], fit.coefficients[1], fit.coefficients[2]};
        r.roter.residual = fit.residual;
        r.roter.underdetermined = fit.underdetermined;
        r.roter.value = fit.residual <= tol && p.in_U_S && p.in_U_C && r.ricci_dev_rank != 1
                        && !r.einstein.value;
    }

    // Generalized Roter: six-term expansion with at least one S^2 term alive.
    {
        const CurvTensor4 gS2 = kn_product(f.g, p.S2);
        const CurvTensor4 SS2 = kn_product(p.S, p.S2);
        const CurvTensor4 S2S2 = [&] { CurvTensor4 t = kn_product(p.S2, p.S2); t *= 0.5; return t; }();
        std::vector<std::span<const double>> basis = {S2S2.data(), SS2.data(), SS.data(),
                                                      gS2.data(), gS.data(), p.G.data()};
        FitResult fit = fit_in_span(p.R.data(), basis,
                                    {"S2^S2/2", "S^S2", "S^S/2", "g^S2", "g^S", "g^g/2"});
        for (int k = 0; k < 6; ++k) r.groter_coeffs[static_cast<size_t>(k)] = fit.coefficients[static_cast<size_t>(k)];
        r.generalized_roter.residual = fit.residual;
        r.generalized_roter.underdetermined = fit.underdetermined;
        const double rnorm = std::max(fnorm(p.R), 1e-30);
        auto significant = [&](int idx, const CurvTensor4& b) {
            return std::abs(fit.coefficients[static_cast<size_t>(idx)]) * fnorm(b) > 1e-8 * rnorm;
        };
        const bool quadratic_alive = significant(0, S2S2) || significant(1, SS2) || significant(3, gS2);
        r.generalized_roter.value = fit.residual <= tol && quadratic_alive && p.in_U_S && p.in_U_C;
    }

    // Pseudosymmetry: R.R = L_R Q(g,R).
    {
        const Tensor6 rr = derivation_action(p.R, p.R, f);
        const Tensor6 qgr = tachibana4(f.g, p.R);
        FitResult fit = fit_in_span(rr.data(), {qgr.data()}, {"Q(g,R)"});
        r.L_R = fit.coefficients[0];
        const double floor = std::max({fnorm(rr), std::abs(r.L_R) * fnorm(qgr), 1e-30});
        Tensor6 diff = rr - r.L_R * qgr;
        r.pseudosymmetric.residual = fnorm(diff) / floor;
        r.pseudosymmetric.value = r.pseudosymmetric.residual <= tol;

        const double semi_scale = std::max(fnorm(qgr),
                                           fnorm(p.R) * fnorm(p.R) / std::max(fnorm(f.g), 1e-30));
        r.semisymmetric.residual = fnorm(rr) / std::max(semi_scale, 1e-30);
        r.semisymmetric.value = r.semisymmetric.residual <= tol;
    }

    // Ricci pseudosymmetry: R.S = L_S Q(g,S).
    {
        const CurvTensor4 rs = derivation_action(p.R, p.S, f);
        const CurvTensor4 qgs = tachibana2(f.g, p.S);
        FitResult fit = fit_in_span(rs.data(), {qgs.data()}, {"Q(g,S)"});
        r.L_S = fit.coefficients[0];
        const double floor = std::max({fnorm(rs), std::abs(r.L_S) * fnorm(qgs), 1e-30});
        CurvTensor4 diff = rs - r.L_S * qgs;
        r.ricci_pseudosymmetric.residual = fnorm(diff) / floor;
        r.ricci_pseudosymmetric.value = r.ricci_pseudosymmetric.residual <= tol;
    }

    // Conformal flatness: vanishing Weyl part; automatic in dimension three.
    if (n == 3) {
        r.conformally_flat.value = true;
        r.conformally_flat.residual = 0.0;
    } else {
        r.conformally_flat.residual = p.u_C_residual;
        r.conformally_flat.value = !p.in_U_C;
    }

    return r;
}

std::array<double, 3> roter_coeff_extract(const PointGeometry& p, double tol) {
    ClassificationReport r = classify(p, tol);
    if (!r.roter.value)
        throw std::logic_error("roter_coeff_extract: point is not a Roter point");
    return r.roter_coeffs;
}

std::vector<std::pair<std::string, const ClassFlag*>> flag_table(const ClassificationReport& r) {
    return {
        {"einstein", &r.einstein},
        {"quasi_einstein", &r.quasi_einstein},
        {"two_quasi_einstein", &r.two_quasi_einstein},
        {"partially_einstein", &r.partially_einstein},
        {"roter", &r.roter},
        {"generalized_roter", &r.generalized_roter},
        {"pseudosymmetric", &r.pseudosymmetric},
        {"ricci_pseudosymmetric", &r.ricci_pseudosymmetric},
        {"semisymmetric", &r.semisymmetric},
        {"conformally_flat", &r.conformally_flat},
        {"quasi_umbilical", &r.quasi_umbilical},
        {"two_quasi_umbilical", &r.two_quasi_umbilical},
    };
}

} // namespace curvlab
