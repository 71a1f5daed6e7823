#include "reflectlab/spaces.hpp"

#include <complex>

namespace reflectlab {

namespace {

// conformal factor helpers: metric = exp(2*phi) * I on the flat chart
double ball_phi_grad(const ChartPoint& p, Vec& grad) {
    double r2 = p.squaredNorm();
    grad = (2.0 / (1.0 - r2)) * p;
    return std::log(2.0 / (1.0 - r2));
}

double cproj1_phi_grad(const ChartPoint& p, Vec& grad) {
    double r2 = p.squaredNorm();
    grad = (-2.0 / (1.0 + r2)) * p;
    return std::log(2.0 / (1.0 + r2));
}

// Scale of the Fubini-Study metric: the n = 1 chart restricts to the round
// two-sphere of radius 1 (Gauss curvature +1), mirroring the curvature -1
// convention on the ball.
constexpr double kFubiniStudyScale = 4.0;

// Realify the Hermitian form H_{jk} on interleaved coordinates
// (x1, y1, ..., xn, yn): block (j, k) is [[Re H, -Im H], [Im H, Re H]].
Mat realify_hermitian(const Eigen::MatrixXcd& H, double scale) {
    int n = static_cast<int>(H.rows());
    Mat g(2 * n, 2 * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            double re = scale * H(j, k).real();
            double im = scale * H(j, k).imag();
            g(2 * j, 2 * k) = re;
            g(2 * j, 2 * k + 1) = -im;
            g(2 * j + 1, 2 * k) = im;
            g(2 * j + 1, 2 * k + 1) = re;
        }
    return g;
}

Eigen::VectorXcd to_complex(const ChartPoint& p) {
    int n = static_cast<int>(p.size()) / 2;
    Eigen::VectorXcd w(n);
    for (int k = 0; k < n; ++k) w[k] = std::complex<double>(p[2 * k], p[2 * k + 1]);
    return w;
}

Mat fubini_study_metric(const ChartPoint& p) {
    Eigen::VectorXcd w = to_complex(p);
    int n = static_cast<int>(w.size());
    double s = 1.0 + w.squaredNorm();
    Eigen::MatrixXcd H(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            std::complex<double> v = (j == k) ? std::complex<double>(s, 0) : std::complex<double>(0, 0);
            v -= std::conj(w[j]) * w[k];
            H(j, k) = v / (s * s);
        }
    return realify_hermitian(H, kFubiniStudyScale);
}

} // namespace

std::string space_kind_id(SpaceKind k) {
    switch (k) {
        case SpaceKind::euclidean_r: return "euclidean_r";
        case SpaceKind::euclidean_c: return "euclidean_c";
        case SpaceKind::chyp_ball: return "chyp_ball";
        case SpaceKind::cproj: return "cproj";
        case SpaceKind::bdi_domain: return "bdi_domain";
        case SpaceKind::quadric_chart: return "quadric_chart";
    }
    return "?";
}

SpaceKind space_kind_from_id(const std::string& id) {
    if (id == "euclidean_r") return SpaceKind::euclidean_r;
    if (id == "euclidean_c") return SpaceKind::euclidean_c;
    if (id == "chyp_ball") return SpaceKind::chyp_ball;
    if (id == "cproj") return SpaceKind::cproj;
    if (id == "bdi_domain") return SpaceKind::bdi_domain;
    if (id == "quadric_chart") return SpaceKind::quadric_chart;
    throw UnsupportedSpace("unknown space id: " + id);
}

ModelSpace ModelSpace::euclidean_real(int n) {
    return ModelSpace(SpaceKind::euclidean_r, n, n, QuadricBranch::v1);
}
ModelSpace ModelSpace::euclidean_complex(int n) {
    return ModelSpace(SpaceKind::euclidean_c, n, 2 * n, QuadricBranch::v1);
}
ModelSpace ModelSpace::hyperbolic_ball(int n) {
    return ModelSpace(SpaceKind::chyp_ball, n, 2 * n, QuadricBranch::v1);
}
ModelSpace ModelSpace::complex_projective(int n) {
    return ModelSpace(SpaceKind::cproj, n, 2 * n, QuadricBranch::v1);
}
ModelSpace ModelSpace::bdi_domain(int n) {
    return ModelSpace(SpaceKind::bdi_domain, n, 2 * n, QuadricBranch::v1);
}
ModelSpace ModelSpace::quadric_chart(int n, QuadricBranch branch) {
    return ModelSpace(SpaceKind::quadric_chart, n, 2 * n, branch);
}

ModelSpace ModelSpace::from_id(const std::string& id, int n, QuadricBranch branch) {
    switch (space_kind_from_id(id)) {
        case SpaceKind::euclidean_r: return euclidean_real(n);
        case SpaceKind::euclidean_c: return euclidean_complex(n);
        case SpaceKind::chyp_ball: return hyperbolic_ball(n);
        case SpaceKind::cproj: return complex_projective(n);
        case SpaceKind::bdi_domain: return bdi_domain(n);
        case SpaceKind::quadric_chart: return quadric_chart(n, branch);
    }
    throw UnsupportedSpace("unknown space id: " + id);
}

std::string ModelSpace::describe() const {
    std::string s = id() + "(" + std::to_string(n_);
    if (kind_ == SpaceKind::quadric_chart)
        s += branch_ == QuadricBranch::v1 ? ", V1" : ", V2";
    return s + ")";
}

bool ModelSpace::has_metric() const {
    switch (kind_) {
        case SpaceKind::euclidean_r:
        case SpaceKind::euclidean_c:
        case SpaceKind::chyp_ball:
        case SpaceKind::cproj:
            return true;
        default:
            return false;
    }
}

bool ModelSpace::has_complex_structure() const {
    return kind_ != SpaceKind::euclidean_r;
}

bool ModelSpace::contains(const ChartPoint& p) const {
    if (p.size() != real_dim_ || !all_finite(p)) return false;
    switch (kind_) {
        case SpaceKind::euclidean_r:
        case SpaceKind::euclidean_c:
        case SpaceKind::cproj:
            return true;
        case SpaceKind::chyp_ball:
            return p.squaredNorm() < 1.0 - kDomainMargin;
        case SpaceKind::bdi_domain: {
            // X X^t < I_2 with rows X1 = p[0..n), X2 = p[n..2n)
            auto x1 = p.head(n_);
            auto x2 = p.tail(n_);
            double s11 = 1.0 - x1.squaredNorm();
            double s22 = 1.0 - x2.squaredNorm();
            double s12 = -x1.dot(x2);
            return s11 > kDomainMargin && s11 * s22 - s12 * s12 > kDomainMargin;
        }
        case SpaceKind::quadric_chart: {
            // chart is valid away from 1 + sum (zeta^k)^2 = 0
            std::complex<double> s(1.0, 0.0);
            for (int k = 0; k < n_; ++k) {
                std::complex<double> z(p[2 * k], p[2 * k + 1]);
                s += z * z;
            }
            return std::abs(s) > kDomainMargin;
        }
    }
    return false;
}

void ModelSpace::require_metric() const {
    if (!has_metric())
        throw NoMetricAvailable("no metric implemented on " + describe());
}

void ModelSpace::require_inside(const ChartPoint& p) const {
    if (!contains(p))
        throw PointOutsideDomain("point outside chart domain of " + describe());
}

Mat ModelSpace::metric(const ChartPoint& p) const {
    require_metric();
    require_inside(p);
    switch (kind_) {
        case SpaceKind::euclidean_r:
        case SpaceKind::euclidean_c:
            return Mat::Identity(real_dim_, real_dim_);
        case SpaceKind::chyp_ball: {
            double lam = 2.0 / (1.0 - p.squaredNorm());
            return lam * lam * Mat::Identity(real_dim_, real_dim_);
        }
        case SpaceKind::cproj:
            return fubini_study_metric(p);
        default:
            throw NoMetricAvailable("unreachable");
    }
}

Mat ModelSpace::metric_inverse(const ChartPoint& p) const {
    switch (kind_) {
        case SpaceKind::euclidean_r:
        case SpaceKind::euclidean_c:
            require_inside(p);
            return Mat::Identity(real_dim_, real_dim_);
        case SpaceKind::chyp_ball: {
            require_inside(p);
            double lam = 2.0 / (1.0 - p.squaredNorm());
            return (1.0 / (lam * lam)) * Mat::Identity(real_dim_, real_dim_);
        }
        default:
            return metric(p).inverse();
    }
}

double ModelSpace::sqrt_det_metric(const ChartPoint& p) const {
    switch (kind_) {
        case SpaceKind::euclidean_r:
        case SpaceKind::euclidean_c:
            require_inside(p);
            return 1.0;
        case SpaceKind::chyp_ball: {
            require_inside(p);
            double lam = 2.0 / (1.0 - p.squaredNorm());
            return std::pow(lam, real_dim_);
        }
        default:
            return std::sqrt(metric(p).determinant());
    }
}

MetricField ModelSpace::metric_field() const {
    require_metric();
    MetricField f;
    f.dim = real_dim_;
    f.provenance = MetricField::Provenance::closed_form;
    ModelSpace self = *this;
    f.eval = [self](const ChartPoint& p) { return self.metric(p); };
    f.inverse_eval = [self](const ChartPoint& p) { return self.metric_inverse(p); };
    f.sqrt_det = [self](const ChartPoint& p) { return self.sqrt_det_metric(p); };
    return f;
}

Vec ModelSpace::apply_complex_structure(const ChartPoint& p, const Vec& v) const {
    if (!has_complex_structure())
        throw NotAComplexSpace("no complex structure on " + describe());
    require_inside(p);
    Vec out(real_dim_);
    if (kind_ == SpaceKind::bdi_domain) {
        // J0 (X1; X2) = (X2; -X1)
        out.head(n_) = v.tail(n_);
        out.tail(n_) = -v.head(n_);
    } else {
        // multiplication by sqrt(-1) on interleaved coordinates
        for (int k = 0; k < n_; ++k) {
            out[2 * k] = -v[2 * k + 1];
            out[2 * k + 1] = v[2 * k];
        }
    }
    return out;
}

ComplexStructure ModelSpace::complex_structure() const {
    if (!has_complex_structure())
        throw NotAComplexSpace("no complex structure on " + describe());
    ModelSpace self = *this;
    return ComplexStructure{[self](const ChartPoint& p, const Vec& v) {
        return self.apply_complex_structure(p, v);
    }};
}

bool ModelSpace::has_closed_form_christoffel() const {
    switch (kind_) {
        case SpaceKind::euclidean_r:
        case SpaceKind::euclidean_c:
        case SpaceKind::chyp_ball:
            return true;
        case SpaceKind::cproj:
            return n_ == 1;
        default:
            return false;
    }
}

Christoffels ModelSpace::christoffel(const ChartPoint& p) const {
    require_metric();
    require_inside(p);
    if (!has_closed_form_christoffel()) return christoffel_fd(p);

    Christoffels G(real_dim_);
    if (kind_ == SpaceKind::euclidean_r || kind_ == SpaceKind::euclidean_c) return G;

    // conformal metric exp(2 phi) * I:
    //   Gamma^k_ij = d_j(phi) delta_ki + d_i(phi) delta_kj - d_k(phi) delta_ij
    Vec grad(real_dim_);
    if (kind_ == SpaceKind::chyp_ball)
        ball_phi_grad(p, grad);
    else
        cproj1_phi_grad(p, grad);
    for (int k = 0; k < real_dim_; ++k)
        for (int i = 0; i < real_dim_; ++i)
            for (int j = 0; j < real_dim_; ++j) {
                double v = 0;
                if (k == i) v += grad[j];
                if (k == j) v += grad[i];
                if (i == j) v -= grad[k];
                G.at(k, i, j) = v;
            }
    return G;
}

Christoffels ModelSpace::christoffel_fd(const ChartPoint& p, double step) const {
    require_metric();
    require_inside(p);
    const int d = real_dim_;
    // all stencil points must stay inside the chart
    std::vector<Mat> dg(d);
    for (int i = 0; i < d; ++i) {
        ChartPoint pp = p, pm = p;
        pp[i] += step;
        pm[i] -= step;
        if (!contains(pp) || !contains(pm))
            throw StencilExitsDomain("finite-difference stencil exits domain of " + describe());
        dg[i] = (metric(pp) - metric(pm)) / (2.0 * step);
    }
    Mat ginv = metric_inverse(p);
    Christoffels G(d);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                double s = 0;
                for (int l = 0; l < d; ++l)
                    s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
                s *= 0.5;
                G.at(k, i, j) = s;
                G.at(k, j, i) = s;
            }
    return G;
}

GeodesicResult ModelSpace::integrate_geodesic(const ChartPoint& p, const Vec& v,
                                              double t_end, double dt) const {
    require_metric();
    require_inside(p);
    if (dt <= 0) throw Error("geodesic dt must be positive");

    GeodesicResult res;
    Vec x = p, u = v;
    double e0 = u.dot(metric(x) * u);
    res.points.push_back(x);
    res.times.push_back(0.0);

    auto accel = [&](const Vec& xx, const Vec& uu, Vec& a) -> bool {
        if (!contains(xx)) return false;
        Christoffels G = christoffel(xx);
        a.setZero(real_dim_);
        for (int k = 0; k < real_dim_; ++k) {
            double s = 0;
            for (int i = 0; i < real_dim_; ++i)
                for (int j = 0; j < real_dim_; ++j)
                    s += G.at(k, i, j) * uu[i] * uu[j];
            a[k] = -s;
        }
        return true;
    };

    int steps = static_cast<int>(std::ceil(t_end / dt - 1e-12));
    Vec k1x, k1u(real_dim_), k2x, k2u(real_dim_), k3x, k3u(real_dim_), k4x, k4u(real_dim_);
    for (int s = 0; s < steps; ++s) {
        double h = std::min(dt, t_end - s * dt);
        bool ok = true;
        k1x = u;
        ok = ok && accel(x, u, k1u);
        ok = ok && accel(x + 0.5 * h * k1x, u + 0.5 * h * k1u, k2u);
        k2x = u + 0.5 * h * k1u;
        ok = ok && accel(x + 0.5 * h * k2x, u + 0.5 * h * k2u, k3u);
        k3x = u + 0.5 * h * k2u;
        ok = ok && accel(x + h * k3x, u + h * k3u, k4u);
        k4x = u + h * k3u;
        if (!ok) {
            res.left_domain = true;
            return res;
        }
        Vec xn = x + (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        Vec un = u + (h / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        if (!contains(xn)) {
            res.left_domain = true;
            return res;
        }
        x = xn;
        u = un;
        res.points.push_back(x);
        res.times.push_back(std::min((s + 1) * dt, t_end));
        double e = u.dot(metric(x) * u);
        res.speed_drift = std::max(res.speed_drift, std::abs(e - e0) / std::max(e0, 1e-300));
    }
    return res;
}

} // namespace reflectlab
