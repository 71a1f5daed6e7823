#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reflectlab/errors.hpp"
#include "reflectlab/linalg.hpp"

namespace reflectlab {

enum class SpaceKind {
    euclidean_r,   // R^n, flat
    euclidean_c,   // C^n, flat, complex chart
    chyp_ball,     // unit ball in C^n, conformal hyperbolic metric
    cproj,         // CP^n in the inhomogeneous chart U0
    bdi_domain,    // {X in M_{2,n}(R) : X X^t < I_2}, algebraic only
    quadric_chart, // chart V1/V2 of the complex hyperquadric, algebraic only
};

enum class QuadricBranch { v1, v2 };

std::string space_kind_id(SpaceKind k);
SpaceKind space_kind_from_id(const std::string& id);

/// Metric tensor of a space as a standalone field of callables.
struct MetricField {
    enum class Provenance { closed_form, finite_difference };
    int dim = 0;
    std::function<Mat(const ChartPoint&)> eval;
    std::function<Mat(const ChartPoint&)> inverse_eval;
    std::function<double(const ChartPoint&)> sqrt_det;
    Provenance provenance = Provenance::closed_form;
};

/// The map J acting on tangent vectors at a point.
struct ComplexStructure {
    std::function<Vec(const ChartPoint&, const Vec&)> apply;
};

struct GeodesicResult {
    std::vector<ChartPoint> points;
    std::vector<double> times;
    bool left_domain = false;
    /// max relative drift of g(xdot, xdot) along the run
    double speed_drift = 0.0;
};

/// A single-chart model space: domain membership, metric (where one is
/// implemented), complex structure (on complex spaces), Christoffel symbols
/// and geodesics. Instances are immutable values; all member functions are
/// const and safe to call concurrently.
class ModelSpace {
public:
    static ModelSpace euclidean_real(int n);
    static ModelSpace euclidean_complex(int n);
    static ModelSpace hyperbolic_ball(int n);
    static ModelSpace complex_projective(int n);
    static ModelSpace bdi_domain(int n);
    static ModelSpace quadric_chart(int n, QuadricBranch branch);
    /// Build from the configuration identifier (euclidean_r, euclidean_c,
    /// chyp_ball, cproj, bdi_domain, quadric_chart).
    static ModelSpace from_id(const std::string& id, int n,
                              QuadricBranch branch = QuadricBranch::v1);

    SpaceKind kind() const { return kind_; }
    int n() const { return n_; }
    int real_dim() const { return real_dim_; }
    QuadricBranch branch() const { return branch_; }
    std::string id() const { return space_kind_id(kind_); }
    /// id plus dimension, e.g. "chyp_ball(2)"
    std::string describe() const;

    bool has_metric() const;
    bool has_complex_structure() const;
    bool contains(const ChartPoint& p) const;

    /// g_ij(p); throws PointOutsideDomain / NoMetricAvailable.
    Mat metric(const ChartPoint& p) const;
    Mat metric_inverse(const ChartPoint& p) const;
    double sqrt_det_metric(const ChartPoint& p) const;
    MetricField metric_field() const;
    ComplexStructure complex_structure() const;

    /// J(v) at p; throws NotAComplexSpace.
    Vec apply_complex_structure(const ChartPoint& p, const Vec& v) const;

    /// Christoffel symbols; closed form where registered, otherwise central
    /// finite differences of the metric.
    Christoffels christoffel(const ChartPoint& p) const;
    /// Finite-difference path, always available on metric spaces. Kept
    /// independent of the closed forms so the two can be cross-checked.
    Christoffels christoffel_fd(const ChartPoint& p, double step = 1e-5) const;
    bool has_closed_form_christoffel() const;

    /// Integrate xddot^k + Gamma^k_ij xdot^i xdot^j = 0 with classic RK4.
    /// Stops early (left_domain = true) if the trajectory exits the chart.
    GeodesicResult integrate_geodesic(const ChartPoint& p, const Vec& v,
                                      double t_end, double dt) const;

    bool operator==(const ModelSpace& o) const {
        return kind_ == o.kind_ && n_ == o.n_ && branch_ == o.branch_;
    }

private:
    ModelSpace(SpaceKind kind, int n, int real_dim, QuadricBranch branch)
        : kind_(kind), n_(n), real_dim_(real_dim), branch_(branch) {}

    void require_metric() const;
    void require_inside(const ChartPoint& p) const;

    SpaceKind kind_;
    int n_;
    int real_dim_;
    QuadricBranch branch_;
};

/// Margin used for strict-inequality domain membership.
inline constexpr double kDomainMargin = 1e-12;

} // namespace reflectlab
