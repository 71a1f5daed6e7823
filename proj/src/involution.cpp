#include "reflectlab/involution.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

namespace reflectlab {

Vec projection_begin(const Vec& x, int q) {
    if (q < 0 || q > x.size())
        throw IndexOutOfRange("projection_begin: q out of range");
    Vec out = Vec::Zero(x.size());
    out.head(q) = x.head(q);
    return out;
}

Vec projection_end(const Vec& x, int q) {
    if (q < 0 || q > x.size())
        throw IndexOutOfRange("projection_end: q out of range");
    Vec out = Vec::Zero(x.size());
    out.tail(x.size() - q) = x.tail(x.size() - q);
    return out;
}

namespace {

/// Involution that is linear on chart coordinates with diagonal +-1 action:
/// flip[i] marks coordinates that change sign.
Involution make_sign_flip(const ModelSpace& space, std::vector<bool> flip,
                          HolomorphySign sign, const std::string& name) {
    const int d = space.real_dim();
    int codim = static_cast<int>(std::count(flip.begin(), flip.end(), true));
    auto apply = [flip](const ChartPoint& p) {
        Vec out = p;
        for (int i = 0; i < p.size(); ++i)
            if (flip[i]) out[i] = -out[i];
        return out;
    };
    Involution inv;
    inv.space = space;
    inv.name = name;
    inv.apply = apply;
    inv.differential = [apply](const ChartPoint&, const Vec& v) { return apply(v); };
    inv.sign = sign;
    inv.fixed_set.codim = codim;
    inv.fixed_set.contains = [flip, d](const ChartPoint& p) {
        if (p.size() != d) return false;
        for (int i = 0; i < d; ++i)
            if (flip[i] && p[i] != 0.0) return false;
        return true;
    };
    inv.fixed_set.project_tangent = [flip](const ChartPoint&, const Vec& v) {
        Vec out = v;
        for (int i = 0; i < v.size(); ++i)
            if (flip[i]) out[i] = 0.0;
        return out;
    };
    return inv;
}

} // namespace

Involution make_sigma_q(int n, int q) {
    if (q < 0 || q > n) throw InvalidQ("sigma_q requires 0 <= q <= n");
    ModelSpace space = ModelSpace::bdi_domain(n);
    // row X1: flip the first q entries; row X2: flip the last n - q
    std::vector<bool> flip(2 * n, false);
    for (int i = 0; i < q; ++i) flip[i] = true;
    for (int i = q; i < n; ++i) flip[n + i] = true;
    Involution inv = make_sign_flip(space, flip, HolomorphySign::anti_holomorphic,
                                    "sigma_" + std::to_string(q) + "_n" + std::to_string(n));
    inv.congruent_duplicate = q > n / 2;
    return inv;
}

Involution make_tau_q(int n, int q, QuadricBranch branch) {
    if (q < 1 || q > n) throw InvalidQ("tau_q requires 1 <= q <= n");
    ModelSpace space = ModelSpace::quadric_chart(n, branch);
    // zeta^k -> -conj(zeta^k) for k <= q (flip chi), conj(zeta^k) for k > q (flip v)
    std::vector<bool> flip(2 * n, false);
    for (int k = 0; k < n; ++k) {
        if (k < q)
            flip[2 * k] = true;
        else
            flip[2 * k + 1] = true;
    }
    return make_sign_flip(space, flip, HolomorphySign::anti_holomorphic,
                          "tau_" + std::to_string(q) + "_n" + std::to_string(n));
}

Involution make_conjugation(const ModelSpace& space) {
    switch (space.kind()) {
        case SpaceKind::euclidean_c:
        case SpaceKind::chyp_ball:
        case SpaceKind::cproj:
            break;
        default:
            throw UnsupportedSpace("conjugation needs a complex chart with a real form: " +
                                   space.describe());
    }
    std::vector<bool> flip(space.real_dim(), false);
    for (int k = 0; k < space.n(); ++k) flip[2 * k + 1] = true;
    return make_sign_flip(space, flip, HolomorphySign::anti_holomorphic,
                          "conj_" + space.id() + "_n" + std::to_string(space.n()));
}

Involution make_axis_flip(const ModelSpace& space, int axis) {
    if (axis < 0 || axis >= space.real_dim()) throw IndexOutOfRange("axis out of range");
    std::vector<bool> flip(space.real_dim(), false);
    flip[axis] = true;
    return make_sign_flip(space, flip, HolomorphySign::not_applicable,
                          "flip_axis" + std::to_string(axis));
}

Involution make_negation(const ModelSpace& space) {
    std::vector<bool> flip(space.real_dim(), true);
    return make_sign_flip(space, flip, HolomorphySign::not_applicable, "negation");
}

ChartPoint sample_interior_point(const ModelSpace& space, Sampler& sampler) {
    const int d = space.real_dim();
    switch (space.kind()) {
        case SpaceKind::euclidean_r:
        case SpaceKind::euclidean_c:
            return sampler.box(d, -1.0, 1.0);
        case SpaceKind::chyp_ball:
            return sampler.ball(d, 0.85);
        case SpaceKind::cproj:
            return sampler.ball(d, 3.0);
        case SpaceKind::bdi_domain: {
            double a = 0.6 / std::sqrt(static_cast<double>(space.n()));
            for (int t = 0; t < 200; ++t) {
                ChartPoint p = sampler.box(d, -a, a);
                if (space.contains(p)) return p;
            }
            return Vec::Zero(d);
        }
        case SpaceKind::quadric_chart: {
            for (int t = 0; t < 200; ++t) {
                ChartPoint p = sampler.box(d, -1.5, 1.5);
                // stay clear of the chart boundary 1 + sum zeta^2 = 0
                std::complex<double> s(1.0, 0.0);
                for (int k = 0; k < space.n(); ++k) {
                    std::complex<double> z(p[2 * k], p[2 * k + 1]);
                    s += z * z;
                }
                if (std::abs(s) > 1e-3) return p;
            }
            return Vec::Zero(d);
        }
    }
    return Vec::Zero(d);
}

Vec differential_eigenvalues(const Involution& inv, const ChartPoint& p) {
    const int d = inv.space.real_dim();
    Mat D(d, d);
    for (int j = 0; j < d; ++j) D.col(j) = inv.differential(p, Vec::Unit(d, j));
    Eigen::EigenSolver<Mat> es(D);
    Vec re(d);
    for (int i = 0; i < d; ++i) re[i] = es.eigenvalues()[i].real();
    std::sort(re.begin(), re.end());
    return re;
}

VerificationReport verify_involution(const Involution& inv, int samples,
                                     const InvolutionCheckTolerances& tol,
                                     Sampler& sampler) {
    VerificationReport rep;
    rep.experiment_id = "involution:" + inv.name;
    rep.kind = "involution_check";

    auto& r_invol = rep.residual("involutivity", tol.involutive);
    auto& r_fixed = rep.residual("fixed_set", tol.fixed_set);
    const bool with_metric = inv.space.has_metric();
    const bool with_j = inv.space.has_complex_structure() &&
                        inv.sign != HolomorphySign::not_applicable;
    ResidualStat* r_iso = with_metric ? &rep.residual("isometry", tol.isometry) : nullptr;
    ResidualStat* r_holo = with_j ? &rep.residual("holomorphy_sign", tol.holomorphy) : nullptr;
    auto& r_eig = rep.residual("differential_eigenvalues", 1e-9);

    const int d = inv.space.real_dim();
    for (int s = 0; s < samples; ++s) {
        ChartPoint p = sample_interior_point(inv.space, sampler);
        ChartPoint q = inv.apply(p);
        r_invol.absorb((inv.apply(q) - p).lpNorm<Eigen::Infinity>());

        if (with_metric) {
            Vec v = sampler.box(d, -1.0, 1.0);
            Vec w = sampler.box(d, -1.0, 1.0);
            Mat gp = inv.space.metric(p);
            Mat gq = inv.space.metric(q);
            Vec dv = inv.differential(p, v);
            Vec dw = inv.differential(p, w);
            r_iso->absorb(std::abs(dv.dot(gq * dw) - v.dot(gp * w)));
        }
        if (with_j) {
            Vec v = sampler.box(d, -1.0, 1.0);
            Vec lhs = inv.differential(p, inv.space.apply_complex_structure(p, v));
            Vec rhs = inv.space.apply_complex_structure(q, inv.differential(p, v));
            double sgn = inv.sign == HolomorphySign::anti_holomorphic ? -1.0 : 1.0;
            r_holo->absorb((lhs - sgn * rhs).lpNorm<Eigen::Infinity>());
        }

        // midpoint of p and sigma(p) is fixed for these (anti-)linear maps
        ChartPoint m = 0.5 * (p + q);
        if (inv.space.contains(m)) {
            r_fixed.absorb((inv.apply(m) - m).lpNorm<Eigen::Infinity>());
            if (!inv.fixed_set.contains(m))
                r_fixed.absorb(1.0); // membership must accept exact fixed points
            Vec v = sampler.box(d, -1.0, 1.0);
            Vec pv = inv.fixed_set.project_tangent(m, v);
            r_fixed.absorb((inv.differential(m, pv) - pv).lpNorm<Eigen::Infinity>());
        }
    }

    // eigenvalue structure of the differential at one fixed point
    ChartPoint origin = Vec::Zero(d);
    if (inv.space.contains(origin) && inv.fixed_set.contains(origin)) {
        Vec eig = differential_eigenvalues(inv, origin);
        int plus = 0;
        for (int i = 0; i < d; ++i) {
            r_eig.absorb(std::abs(std::abs(eig[i]) - 1.0));
            if (eig[i] > 0) ++plus;
        }
        if (plus != d - inv.fixed_set.codim)
            r_eig.absorb(1.0);
    }

    rep.finalize();
    return rep;
}

} // namespace reflectlab
