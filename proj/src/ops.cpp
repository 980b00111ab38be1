#include "curvlab/ops.hpp"

#include <cmath>

namespace curvlab {

SymTensor2 congruence(const SymTensor2& t, const LinMap& L) {
    const int n = t.dim();
    if (L.dim() != n) throw std::invalid_argument("congruence: dimension mismatch");
    SymTensor2 out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) s += L(a, i) * L(b, j) * t(a, b);
            out.set(i, j, s);
        }
    return out;
}

CurvTensor4 congruence(const CurvTensor4& t, const LinMap& L) {
    const int n = t.dim();
    if (L.dim() != n) throw std::invalid_argument("congruence: dimension mismatch");
    // Contract one slot at a time to keep the cost at O(n^5).
    CurvTensor4 tmp(n), out(n);
    out = t;
    for (int slot = 0; slot < 4; ++slot) {
        tmp = CurvTensor4(n);
        for (int h = 0; h < n; ++h)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        double s = 0.0;
                        for (int a = 0; a < n; ++a) {
                            // Cycle the contracted slot to the front each pass:
                            // after four passes every slot has been transformed.
                            s += L(a, k) * out(a, h, i, j);
                        }
                        tmp.set(h, i, j, k, s);
                    }
        out = tmp;
    }
    return out;
}

Tensor6 congruence(const Tensor6& t, const LinMap& L) {
    const int n = t.dim();
    if (L.dim() != n) throw std::invalid_argument("congruence: dimension mismatch");
    Tensor6 tmp(n), out(n);
    out = t;
    for (int slot = 0; slot < 6; ++slot) {
        tmp = Tensor6(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        for (int x = 0; x < n; ++x)
                            for (int y = 0; y < n; ++y) {
                                double s = 0.0;
                                for (int r = 0; r < n; ++r) s += L(r, y) * out(r, a, b, c, d, x);
                                tmp.set(a, b, c, d, x, y, s);
                            }
        out = tmp;
    }
    return out;
}

Frame congruence(const Frame& f, const LinMap& L) {
    SymTensor2 g2 = congruence(f.g, L);
    // Invert the transformed metric by Gauss-Jordan with partial pivoting.
    const int n = g2.dim();
    std::vector<double> m(static_cast<size_t>(n) * 2 * n, 0.0);
    auto at = [&](int i, int j) -> double& { return m[static_cast<size_t>(i) * 2 * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) at(i, j) = g2(i, j);
        at(i, n + i) = 1.0;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(at(r, col)) > std::abs(at(piv, col))) piv = r;
        if (std::abs(at(piv, col)) < 1e-14)
            throw std::invalid_argument("congruence: transformed metric is singular");
        if (piv != col)
            for (int j = 0; j < 2 * n; ++j) std::swap(at(piv, j), at(col, j));
        const double d = at(col, col);
        for (int j = 0; j < 2 * n; ++j) at(col, j) /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f2 = at(r, col);
            if (f2 == 0.0) continue;
            for (int j = 0; j < 2 * n; ++j) at(r, j) -= f2 * at(col, j);
        }
    }
    SymTensor2 inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) inv.set(i, j, 0.5 * (at(i, n + j) + at(j, n + i)));
    return Frame(g2, inv);
}

CurvTensor4 kn_product(const SymTensor2& e, const SymTensor2& f) {
    const int n = e.dim();
    if (f.dim() != n) throw std::invalid_argument("kn_product: dimension mismatch");
    CurvTensor4 out(n);
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    out.set(h, i, j, k,
                            e(h, k) * f(i, j) + e(i, j) * f(h, k)
                                - e(h, j) * f(i, k) - e(i, k) * f(h, j));
    return out;
}

Tensor6 kn_wedge4(const SymTensor2& e, const CurvTensor4& t) {
    const int n = e.dim();
    if (t.dim() != n) throw std::invalid_argument("kn_wedge4: dimension mismatch");
    Tensor6 out(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y)
                            out.set(a, b, c, d, x, y,
                                    e(a, d) * t(b, c, x, y) + e(b, c) * t(a, d, x, y)
                                        - e(a, c) * t(b, d, x, y) - e(b, d) * t(a, c, x, y));
    return out;
}

CurvTensor4 tachibana2(const SymTensor2& a, const SymTensor2& t) {
    const int n = a.dim();
    if (t.dim() != n) throw std::invalid_argument("tachibana2: dimension mismatch");
    CurvTensor4 out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    out.set(i, j, x, y,
                            a(x, i) * t(y, j) - a(y, i) * t(x, j)
                                + a(x, j) * t(i, y) - a(y, j) * t(i, x));
    return out;
}

Tensor6 tachibana4(const SymTensor2& a, const CurvTensor4& t) {
    const int n = a.dim();
    if (t.dim() != n) throw std::invalid_argument("tachibana4: dimension mismatch");
    Tensor6 out(n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y)
                            out.set(p, q, c, d, x, y,
                                    a(x, p) * t(y, q, c, d) - a(y, p) * t(x, q, c, d)
                                        + a(x, q) * t(p, y, c, d) - a(y, q) * t(p, x, c, d)
                                        + a(x, c) * t(p, q, y, d) - a(y, c) * t(p, q, x, d)
                                        + a(x, d) * t(p, q, c, y) - a(y, d) * t(p, q, c, x));
    return out;
}

namespace {

// B^r_{xyz} = g^{rs} B_{xyzs}, returned as raw buffer indexed (x,y,z,r).
std::vector<double> raise_last(const CurvTensor4& b, const Frame& f) {
    const int n = b.dim();
    std::vector<double> br(static_cast<size_t>(n) * n * n * n, 0.0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int r = 0; r < n; ++r) {
                    double s = 0.0;
                    for (int q = 0; q < n; ++q) s += b(x, y, z, q) * f.g_inv(q, r);
                    br[((static_cast<size_t>(x) * n + y) * n + z) * n + r] = s;
                }
    return br;
}

} // namespace

CurvTensor4 derivation_action(const CurvTensor4& b, const SymTensor2& t, const Frame& f) {
    const int n = b.dim();
    if (t.dim() != n || f.n != n) throw std::invalid_argument("derivation_action: dimension mismatch");
    const std::vector<double> br = raise_last(b, f);
    auto brv = [&](int x, int y, int z, int r) {
        return br[((static_cast<size_t>(x) * n + y) * n + z) * n + r];
    };
    CurvTensor4 out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    double s = 0.0;
                    for (int r = 0; r < n; ++r)
                        s += brv(x, y, i, r) * t(r, j) + brv(x, y, j, r) * t(i, r);
                    out.set(i, j, x, y, -s);
                }
    return out;
}

Tensor6 derivation_action(const CurvTensor4& b, const CurvTensor4& t, const Frame& f) {
    const int n = b.dim();
    if (t.dim() != n || f.n != n) throw std::invalid_argument("derivation_action: dimension mismatch");
    const std::vector<double> br = raise_last(b, f);
    auto brv = [&](int x, int y, int z, int r) {
        return br[((static_cast<size_t>(x) * n + y) * n + z) * n + r];
    };
    Tensor6 out(n);
    for (int a = 0; a < n; ++a)
        for (int bq = 0; bq < n; ++bq)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y) {
                            double s = 0.0;
                            for (int r = 0; r < n; ++r)
                                s += brv(x, y, a, r) * t(r, bq, c, d)
                                     + brv(x, y, bq, r) * t(a, r, c, d)
                                     + brv(x, y, c, r) * t(a, bq, r, d)
                                     + brv(x, y, d, r) * t(a, bq, c, r);
                            out.set(a, bq, c, d, x, y, -s);
                        }
    return out;
}

SymTensor2 ricci(const CurvTensor4& b, const Frame& f) {
    const int n = b.dim();
    if (f.n != n) throw std::invalid_argument("ricci: dimension mismatch");
    SymTensor2 out(n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                for (int h = 0; h < n; ++h) s += f.g_inv(i, h) * b(i, j, k, h);
            out.set(j, k, s);
        }
    return out;
}

double trace_g(const SymTensor2& t, const Frame& f) {
    const int n = t.dim();
    if (f.n != n) throw std::invalid_argument("trace_g: dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += f.g_inv(i, j) * t(i, j);
    return s;
}

SymTensor2 mat_power(const SymTensor2& t, int p, const Frame& f) {
    const int n = t.dim();
    if (f.n != n) throw std::invalid_argument("mat_power: dimension mismatch");
    if (p < 1) throw std::invalid_argument("mat_power: exponent must be >= 1");
    SymTensor2 out = t;
    for (int step = 1; step < p; ++step) {
        SymTensor2 next(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int r = 0; r < n; ++r)
                    for (int q = 0; q < n; ++q) s += out(i, r) * f.g_inv(r, q) * t(q, j);
                next.set(i, j, s);
            }
        out = next;
    }
    return out;
}

CurvTensor4 metric_square(const Frame& f) {
    CurvTensor4 g2 = kn_product(f.g, f.g);
    g2 *= 0.5;
    return g2;
}

CurvTensor4 weyl(const CurvTensor4& b, const Frame& f) {
    const int n = b.dim();
    if (n < 4) throw std::invalid_argument("weyl: dimension must be >= 4");
    const SymTensor2 s = ricci(b, f);
    const double kappa = trace_g(s, f);
    CurvTensor4 c = b;
    c -= (1.0 / (n - 2)) * kn_product(f.g, s);
    c += (kappa / ((n - 2.0) * (n - 1.0))) * metric_square(f);
    return c;
}

double curvature_symmetry_residual(const CurvTensor4& b) {
    const int n = b.dim();
    double m = 0.0;
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    m = std::max(m, std::abs(b(h, i, j, k) + b(i, h, j, k)));
                    m = std::max(m, std::abs(b(h, i, j, k) + b(h, i, k, j)));
                    m = std::max(m, std::abs(b(h, i, j, k) - b(j, k, h, i)));
                    m = std::max(m, std::abs(b(h, i, j, k) + b(i, j, h, k) + b(j, h, i, k)));
                }
    return m;
}

} // namespace curvlab
