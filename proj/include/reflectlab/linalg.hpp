#pragma once
#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace reflectlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Chart coordinates of a point. Complex charts store real/imaginary parts
/// interleaved as (x1, y1, ..., xn, yn); the BD I matrix domain stores the
/// two matrix rows back to back.
using ChartPoint = Vec;

inline bool all_finite(const Vec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i])) return false;
    return true;
}

/// Dense rank-3 array of Christoffel symbols, indexed (k, i, j) for
/// Gamma^k_ij. Symmetric in (i, j).
class Christoffels {
public:
    Christoffels() : dim_(0) {}
    explicit Christoffels(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim * dim, 0.0) {}

    int dim() const { return dim_; }
    double& at(int k, int i, int j) { return a_[idx(k, i, j)]; }
    double at(int k, int i, int j) const { return a_[idx(k, i, j)]; }

    double max_abs() const {
        double m = 0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }
    double max_abs_diff(const Christoffels& o) const {
        double m = 0;
        for (size_t t = 0; t < a_.size(); ++t) m = std::max(m, std::abs(a_[t] - o.a_[t]));
        return m;
    }

private:
    size_t idx(int k, int i, int j) const {
        return (static_cast<size_t>(k) * dim_ + i) * dim_ + j;
    }
    int dim_;
    std::vector<double> a_;
};

} // namespace reflectlab
