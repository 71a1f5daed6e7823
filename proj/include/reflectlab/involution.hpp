#pragma once
#include <functional>
#include <string>
#include <vector>

#include "reflectlab/report.hpp"
#include "reflectlab/rng.hpp"
#include "reflectlab/spaces.hpp"

namespace reflectlab {

/// Keep the first q components, zero the rest.
Vec projection_begin(const Vec& x, int q);
/// Keep the last n - q components, zero the rest.
Vec projection_end(const Vec& x, int q);

enum class HolomorphySign { anti_holomorphic, holomorphic, not_applicable };

/// Fixed-point set of an involution: membership, orthogonal projection of
/// tangent vectors onto the fixed tangent space, and codimension.
struct FixedSetDescriptor {
    std::function<bool(const ChartPoint&)> contains;
    std::function<Vec(const ChartPoint&, const Vec&)> project_tangent;
    int codim = 0;
};

/// An involutive self-map of a model space together with its differential.
/// The maps constructed here are (anti-)linear in chart coordinates, so the
/// differential coincides with the map's linear part.
struct Involution {
    ModelSpace space;
    std::string name;
    std::function<ChartPoint(const ChartPoint&)> apply;
    std::function<Vec(const ChartPoint&, const Vec&)> differential;
    HolomorphySign sign = HolomorphySign::not_applicable;
    FixedSetDescriptor fixed_set;
    /// set when q > floor(n/2) gives a fixed set congruent to a smaller q
    bool congruent_duplicate = false;
};

/// sigma_q on the BD I domain M_{2,n}(R):
///   (X1; X2) -> (-p_b X1 + p_e X1; p_b X2 - p_e X2).
/// Valid for 0 <= q <= n; entries with q > floor(n/2) are flagged as
/// congruent duplicates of smaller q.
Involution make_sigma_q(int n, int q);

/// tau_q on a hyperquadric chart: zeta^k -> -conj(zeta^k) for k <= q,
/// conj(zeta^k) for k > q. Valid for 1 <= q <= n.
Involution make_tau_q(int n, int q, QuadricBranch branch = QuadricBranch::v1);

/// Coordinatewise conjugation on C^n, the ball, or the CP^n chart.
Involution make_conjugation(const ModelSpace& space);

/// Reflection through the hyperplane {coords[axis] = 0} of a flat space,
/// and sign flip on R^1 targets. Used as sigma_1/sigma_2 in solver
/// experiments.
Involution make_axis_flip(const ModelSpace& space, int axis);
Involution make_negation(const ModelSpace& space);

struct InvolutionCheckTolerances {
    double involutive = 1e-12;
    double isometry = 1e-8;
    double holomorphy = 1e-10;
    double fixed_set = 1e-12;
};

/// Check the defining identities of an involution on random domain samples:
/// involutivity, isometry (when the space has a metric), the holomorphy-sign
/// identity, and fixed-set consistency. Failures are reported, not thrown.
VerificationReport verify_involution(const Involution& inv, int samples,
                                     const InvolutionCheckTolerances& tol,
                                     Sampler& sampler);

/// Random point in the chart domain, bounded away from the domain boundary.
ChartPoint sample_interior_point(const ModelSpace& space, Sampler& sampler);

/// Eigenvalues of the differential at a fixed point, sorted ascending.
Vec differential_eigenvalues(const Involution& inv, const ChartPoint& p);

} // namespace reflectlab
