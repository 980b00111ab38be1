#include "curvlab/sampling.hpp"

#include "curvlab/ops.hpp"

#include <algorithm>
#include <cmath>

namespace curvlab {

namespace {

std::vector<double> separated_values(std::mt19937_64& rng, int k, double lo, double hi,
                                     double gap) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> vals;
    while (static_cast<int>(vals.size()) < k) {
        const double v = u(rng);
        bool ok = true;
        for (double w : vals)
            if (std::abs(v - w) < gap) { ok = false; break; }
        if (ok) vals.push_back(v);
    }
    return vals;
}

std::vector<int> random_composition(std::mt19937_64& rng, int total, int parts) {
    // Positive integers summing to total, one draw at a time.
    std::vector<int> m(static_cast<size_t>(parts), 1);
    int left = total - parts;
    std::uniform_int_distribution<int> pick(0, parts - 1);
    while (left > 0) {
        m[static_cast<size_t>(pick(rng))] += 1;
        --left;
    }
    return m;
}

} // namespace

PrincipalSpectrum random_spectrum(std::mt19937_64& rng, int n, int distinct) {
    PrincipalSpectrum s;
    s.n = n;
    std::uniform_real_distribution<double> uc(-1.0, 1.0);
    s.c = uc(rng);
    s.epsilon = 1;
    const std::vector<double> vals = separated_values(rng, distinct, -2.0, 2.0, 0.15);
    const std::vector<int> mult = random_composition(rng, n, distinct);
    for (int i = 0; i < distinct; ++i)
        s.groups.push_back({vals[static_cast<size_t>(i)], mult[static_cast<size_t>(i)]});
    s.label = "random";
    s.validate();
    return s;
}

PrincipalSpectrum random_spectrum_semi(std::mt19937_64& rng, int n, int distinct) {
    PrincipalSpectrum s = random_spectrum(rng, n, distinct);
    std::uniform_int_distribution<int> coin(0, 1);
    s.epsilon = coin(rng) ? 1 : -1;
    s.signature.assign(static_cast<size_t>(n), 1.0);
    for (double& v : s.signature) v = coin(rng) ? 1.0 : -1.0;
    s.label = "random_semi";
    s.validate();
    return s;
}

SymTensor2 random_sym(std::mt19937_64& rng, int n) {
    SymTensor2 t(n);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) t.set(i, j, u(rng));
    return t;
}

CurvTensor4 random_curvature(std::mt19937_64& rng, int n, int terms) {
    CurvTensor4 out(n);
    for (int k = 0; k < terms; ++k) {
        SymTensor2 e = random_sym(rng, n);
        SymTensor2 f = random_sym(rng, n);
        out += kn_product(e, f);
    }
    return out;
}

LinMap random_congruence(std::mt19937_64& rng, int n, double amp) {
    LinMap L(n);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) L.set(i, j, (i == j ? 1.0 : 0.0) + amp * u(rng));
    return L;
}

} // namespace curvlab
