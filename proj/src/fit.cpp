#include "curvlab/fit.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace curvlab {

FitResult fit_in_span(std::span<const double> target,
                      const std::vector<std::span<const double>>& basis,
                      const std::vector<std::string>& labels) {
    const size_t m = basis.size();
    if (labels.size() != m) throw std::invalid_argument("fit_in_span: labels/basis size mismatch");
    if (m == 0) throw std::invalid_argument("fit_in_span: empty basis");
    const size_t len = target.size();
    for (const auto& b : basis)
        if (b.size() != len) throw std::invalid_argument("fit_in_span: basis length mismatch");

    FitResult out;
    out.basis_labels = labels;
    out.coefficients.assign(m, 0.0);

    // Normalize columns so the rank decision is scale-free. Only genuinely
    // zero columns are dropped (coefficient stays zero); a column that is
    // merely small against its peers is still a real direction, and the
    // eigenvalue cutoff below owns the rank decision.
    std::vector<double> nrm(m, 0.0);
    for (size_t c = 0; c < m; ++c) {
        double s = 0.0;
        for (size_t k = 0; k < len; ++k) s += basis[c][k] * basis[c][k];
        nrm[c] = std::sqrt(s);
    }
    std::vector<size_t> live;
    for (size_t c = 0; c < m; ++c)
        if (nrm[c] > 1e-300) live.push_back(c);

    double target_norm = 0.0;
    for (size_t k = 0; k < len; ++k) target_norm += target[k] * target[k];
    target_norm = std::sqrt(target_norm);

    if (live.empty()) {
        out.residual = target_norm / std::max(target_norm, 1e-30);
        out.rank = 0;
        out.underdetermined = m > 0;
        return out;
    }

    const Eigen::Index q = static_cast<Eigen::Index>(live.size());
    Eigen::MatrixXd gram(q, q);
    Eigen::VectorXd rhs(q);
    for (Eigen::Index a = 0; a < q; ++a) {
        const auto& ba = basis[live[static_cast<size_t>(a)]];
        const double na = nrm[live[static_cast<size_t>(a)]];
        double tb = 0.0;
        for (size_t k = 0; k < len; ++k) tb += target[k] * ba[k];
        rhs(a) = tb / na;
        for (Eigen::Index b = a; b < q; ++b) {
            const auto& bb = basis[live[static_cast<size_t>(b)]];
            const double nb = nrm[live[static_cast<size_t>(b)]];
            double s = 0.0;
            for (size_t k = 0; k < len; ++k) s += ba[k] * bb[k];
            gram(a, b) = s / (na * nb);
            gram(b, a) = gram(a, b);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    const Eigen::VectorXd ev = es.eigenvalues();
    const Eigen::MatrixXd U = es.eigenvectors();
    const double ev_max = ev.cwiseAbs().maxCoeff();
    const double cutoff = 1e-10 * std::max(ev_max, 1e-300);

    Eigen::VectorXd y = U.transpose() * rhs;
    int rank = 0;
    for (Eigen::Index a = 0; a < q; ++a) {
        if (ev(a) > cutoff) {
            y(a) /= ev(a);
            ++rank;
        } else {
            y(a) = 0.0; // min-norm component
        }
    }
    const Eigen::VectorXd coef = U * y;

    for (Eigen::Index a = 0; a < q; ++a)
        out.coefficients[live[static_cast<size_t>(a)]] = coef(a) / nrm[live[static_cast<size_t>(a)]];

    out.rank = rank;
    out.underdetermined = rank < static_cast<int>(m);

    double res2 = 0.0;
    for (size_t k = 0; k < len; ++k) {
        double v = target[k];
        for (size_t c = 0; c < m; ++c) v -= out.coefficients[c] * basis[c][k];
        res2 += v * v;
    }
    out.residual = std::sqrt(res2) / std::max(target_norm, 1e-30);
    return out;
}

} // namespace curvlab
