#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace curvlab {

// Dense symmetric (0,2)-tensor. Storage keeps the full n*n grid; set() writes
// both mirror entries so symmetry cannot drift.
class SymTensor2 {
public:
    SymTensor2() = default;
    explicit SymTensor2(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
        if (n < 1) throw std::invalid_argument("SymTensor2: dimension must be positive");
    }

    static SymTensor2 diag(const std::vector<double>& d) {
        SymTensor2 t(static_cast<int>(d.size()));
        for (int i = 0; i < t.n_; ++i) t.a_[static_cast<size_t>(i) * t.n_ + i] = d[static_cast<size_t>(i)];
        return t;
    }

    static SymTensor2 identity(int n) {
        return diag(std::vector<double>(static_cast<size_t>(n), 1.0));
    }

    int dim() const { return n_; }

    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    void set(int i, int j, double v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = v;
    }

    void add(int i, int j, double v) { set(i, j, operator()(i, j) + v); }

    std::span<const double> data() const { return a_; }
    std::span<double> mutable_data() { return a_; }

    SymTensor2& operator+=(const SymTensor2& o) {
        check_dim(o.n_);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    SymTensor2& operator-=(const SymTensor2& o) {
        check_dim(o.n_);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    SymTensor2& operator*=(double s) {
        for (double& v : a_) v *= s;
        return *this;
    }

    friend SymTensor2 operator+(SymTensor2 a, const SymTensor2& b) { return a += b; }
    friend SymTensor2 operator-(SymTensor2 a, const SymTensor2& b) { return a -= b; }
    friend SymTensor2 operator*(double s, SymTensor2 a) { return a *= s; }

private:
    void check_dim(int m) const {
        if (m != n_) throw std::invalid_argument("SymTensor2: dimension mismatch");
    }

    int n_ = 0;
    std::vector<double> a_;
};

// Dense (0,4)-tensor, index order (h,i,j,k). Generalized-curvature symmetries
// are properties of the values, not of the storage.
class CurvTensor4 {
public:
    CurvTensor4() = default;
    explicit CurvTensor4(int n)
        : n_(n), a_(static_cast<size_t>(n) * n * n * n, 0.0) {
        if (n < 1) throw std::invalid_argument("CurvTensor4: dimension must be positive");
    }

    int dim() const { return n_; }

    double operator()(int h, int i, int j, int k) const { return a_[idx(h, i, j, k)]; }
    void set(int h, int i, int j, int k, double v) { a_[idx(h, i, j, k)] = v; }
    void add(int h, int i, int j, int k, double v) { a_[idx(h, i, j, k)] += v; }

    std::span<const double> data() const { return a_; }
    std::span<double> mutable_data() { return a_; }

    CurvTensor4& operator+=(const CurvTensor4& o) {
        check_dim(o.n_);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    CurvTensor4& operator-=(const CurvTensor4& o) {
        check_dim(o.n_);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    CurvTensor4& operator*=(double s) {
        for (double& v : a_) v *= s;
        return *this;
    }

    friend CurvTensor4 operator+(CurvTensor4 a, const CurvTensor4& b) { return a += b; }
    friend CurvTensor4 operator-(CurvTensor4 a, const CurvTensor4& b) { return a -= b; }
    friend CurvTensor4 operator*(double s, CurvTensor4 a) { return a *= s; }

private:
    size_t idx(int h, int i, int j, int k) const {
        return ((static_cast<size_t>(h) * n_ + i) * n_ + j) * n_ + k;
    }
    void check_dim(int m) const {
        if (m != n_) throw std::invalid_argument("CurvTensor4: dimension mismatch");
    }

    int n_ = 0;
    std::vector<double> a_;
};

// Dense (0,6)-tensor, index order (a,b,c,d;x,y): the first four slots are the
// acted-on tensor's, the trailing pair comes from Q(A,.), B(.), or E^(.).
class Tensor6 {
public:
    Tensor6() = default;
    explicit Tensor6(int n)
        : n_(n), a_(static_cast<size_t>(n) * n * n * n * n * n, 0.0) {
        if (n < 1) throw std::invalid_argument("Tensor6: dimension must be positive");
    }

    int dim() const { return n_; }

    double operator()(int a, int b, int c, int d, int x, int y) const { return a_[idx(a, b, c, d, x, y)]; }
    void set(int a, int b, int c, int d, int x, int y, double v) { a_[idx(a, b, c, d, x, y)] = v; }
    void add(int a, int b, int c, int d, int x, int y, double v) { a_[idx(a, b, c, d, x, y)] += v; }

    std::span<const double> data() const { return a_; }
    std::span<double> mutable_data() { return a_; }

    Tensor6& operator+=(const Tensor6& o) {
        check_dim(o.n_);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Tensor6& operator-=(const Tensor6& o) {
        check_dim(o.n_);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Tensor6& operator*=(double s) {
        for (double& v : a_) v *= s;
        return *this;
    }

    friend Tensor6 operator+(Tensor6 a, const Tensor6& b) { return a += b; }
    friend Tensor6 operator-(Tensor6 a, const Tensor6& b) { return a -= b; }
    friend Tensor6 operator*(double s, Tensor6 a) { return a *= s; }

private:
    size_t idx(int a, int b, int c, int d, int x, int y) const {
        return ((((static_cast<size_t>(a) * n_ + b) * n_ + c) * n_ + d) * n_ + x) * n_ + y;
    }
    void check_dim(int m) const {
        if (m != n_) throw std::invalid_argument("Tensor6: dimension mismatch");
    }

    int n_ = 0;
    std::vector<double> a_;
};

// A frame: metric plus its inverse, dimension >= 3.
struct Frame {
    int n = 0;
    SymTensor2 g;
    SymTensor2 g_inv;

    Frame() = default;
    Frame(SymTensor2 metric, SymTensor2 metric_inv)
        : n(metric.dim()), g(std::move(metric)), g_inv(std::move(metric_inv)) {
        if (n < 3) throw std::invalid_argument("Frame: dimension must be >= 3");
        if (g_inv.dim() != n) throw std::invalid_argument("Frame: metric/inverse dimension mismatch");
    }

    // Diagonal +-1 frame; the inverse equals the metric.
    static Frame diagonal(const std::vector<double>& signature) {
        SymTensor2 d = SymTensor2::diag(signature);
        return Frame(d, d);
    }

    static Frame euclidean(int n) {
        return diagonal(std::vector<double>(static_cast<size_t>(n), 1.0));
    }
};

// General invertible linear map, used for congruence transforms in covariance
// tests. Column j holds the j-th new basis vector in old coordinates.
class LinMap {
public:
    explicit LinMap(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

    int dim() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) { a_[static_cast<size_t>(i) * n_ + j] = v; }

private:
    int n_ = 0;
    std::vector<double> a_;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

inline double fnorm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline double fnorm(const SymTensor2& t) { return fnorm(t.data()); }
inline double fnorm(const CurvTensor4& t) { return fnorm(t.data()); }
inline double fnorm(const Tensor6& t) { return fnorm(t.data()); }

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

// T'_{ij} = L_{ai} L_{bj} T_{ab}
SymTensor2 congruence(const SymTensor2& t, const LinMap& L);
CurvTensor4 congruence(const CurvTensor4& t, const LinMap& L);
Tensor6 congruence(const Tensor6& t, const LinMap& L);
Frame congruence(const Frame& f, const LinMap& L);

} // namespace curvlab
