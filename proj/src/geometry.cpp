#include "cwave/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cwave/errors.hpp"

namespace cwave::geom {

namespace {

constexpr double kDegenerateGuard = 1.0 + 1e-12;

// 15-point Gauss-Kronrod pair on [-1,1] (abscissae symmetric).
constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGauss7W[4] = {0.129484966168870, 0.279705391489277,
                                0.381830050505119, 0.417959183673469};

struct GK15Result {
    Vec2 value;
    double err;
};

template <typename F>
GK15Result gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Vec2 kron{0, 0}, gauss{0, 0};
    for (int i = 0; i < 8; ++i) {
        const Vec2 fp = f(c + h * kKronrodX[i]);
        const Vec2 fm = (i == 7) ? fp : f(c - h * kKronrodX[i]);
        const Vec2 pair = (i == 7) ? fp : fp + fm;
        kron = kron + kKronrodW[i] * pair;
        // Gauss-7 nodes sit at the odd Kronrod abscissae plus the center.
        if (i % 2 == 1) gauss = gauss + kGauss7W[i / 2] * pair;
    }
    kron = h * kron;
    gauss = h * gauss;
    const double err = std::max(std::abs(kron.u1 - gauss.u1),
                                std::abs(kron.u2 - gauss.u2));
    return {kron, err};
}

template <typename F>
Vec2 adaptive_gk(const F& f, double a, double b, double tol, int depth = 0) {
    const auto r = gk15(f, a, b);
    if (r.err <= tol || depth >= 30) return r.value;
    const double m = 0.5 * (a + b);
    return adaptive_gk(f, a, m, 0.5 * tol, depth + 1) +
           adaptive_gk(f, m, b, 0.5 * tol, depth + 1);
}

}  // namespace

Vec3 prolate_to_cartesian(const ProlateCoords& c) {
    const double ch = std::cosh(c.rho), sh = std::sinh(c.rho);
    return {0.5 + 0.5 * ch * std::cos(c.phi),
            0.5 * sh * std::sin(c.theta) * std::sin(c.phi),
            0.5 * sh * std::cos(c.theta) * std::sin(c.phi)};
}

Rule1D gauss_legendre(int n, double a, double b) {
    if (n < 1) throw Error(ErrorCode::InvalidGrid, "quadrature needs n >= 1 nodes");
    Rule1D r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[i] = 0.5 * (b - a) * (-x) + 0.5 * (a + b);
        r.x[n - 1 - i] = 0.5 * (b - a) * x + 0.5 * (a + b);
        r.w[i] = r.w[n - 1 - i] = 0.5 * (b - a) * w;
    }
    return r;
}

Rule1D periodic_trapezoid(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidGrid, "quadrature needs n >= 1 nodes");
    Rule1D r;
    r.x.resize(n);
    r.w.assign(n, 2.0 * kPi / n);
    for (int i = 0; i < n; ++i) r.x[i] = 2.0 * kPi * i / n;
    return r;
}

std::vector<QuadNode> sphere_surface_quadrature(double r, const AngularRule& rule) {
    if (!(r > 0.0))
        throw Error(ErrorCode::NonpositiveRadius, "sphere surface needs r > 0");
    const Rule1D phi = gauss_legendre(rule.n_phi, 0.0, kPi);
    const Rule1D theta = periodic_trapezoid(rule.n_theta);
    std::vector<QuadNode> nodes;
    nodes.reserve(phi.x.size() * theta.x.size());
    for (std::size_t i = 0; i < phi.x.size(); ++i) {
        const double sp = std::sin(phi.x[i]), cp = std::cos(phi.x[i]);
        for (std::size_t j = 0; j < theta.x.size(); ++j) {
            const Vec3 x{r * sp * std::cos(theta.x[j]), r * sp * std::sin(theta.x[j]),
                         r * cp};
            nodes.push_back({x, r * r * sp * phi.w[i] * theta.w[j]});
        }
    }
    return nodes;
}

std::vector<EllipsoidSurfaceNode> ellipsoid_surface_quadrature(double two_tau,
                                                               const AngularRule& rule) {
    if (!(two_tau > kDegenerateGuard))
        throw Error(ErrorCode::DegenerateEllipsoid, "ellipsoid surface needs 2tau > 1");
    const double a = 0.5 * two_tau;                  // semi-major (cosh/2)
    const double bsemi = 0.5 * std::sqrt(two_tau * two_tau - 1.0);  // sinh/2
    const Rule1D phi = gauss_legendre(rule.n_phi, 0.0, kPi);
    const Rule1D theta = periodic_trapezoid(rule.n_theta);
    std::vector<EllipsoidSurfaceNode> nodes;
    nodes.reserve(phi.x.size() * theta.x.size());
    for (std::size_t i = 0; i < phi.x.size(); ++i) {
        const double sp = std::sin(phi.x[i]), cp = std::cos(phi.x[i]);
        // dS = (1/4) sinh sin(phi) sqrt(cosh^2 - cos^2 phi) dtheta dphi
        const double meas =
            0.5 * bsemi * sp * std::sqrt(two_tau * two_tau - cp * cp);
        for (std::size_t j = 0; j < theta.x.size(); ++j) {
            const Vec3 x{0.5 + a * cp, bsemi * sp * std::sin(theta.x[j]),
                         bsemi * sp * std::cos(theta.x[j])};
            nodes.push_back({x, meas * phi.w[i] * theta.w[j], phi.x[i]});
        }
    }
    return nodes;
}

std::vector<QuadNode> ellipsoid_volume_quadrature(double two_tau,
                                                  const VolumeRule& rule) {
    if (!(two_tau > kDegenerateGuard))
        throw Error(ErrorCode::DegenerateEllipsoid, "ellipsoid volume needs 2tau > 1");
    const double rho_max = std::acosh(two_tau);
    const Rule1D rho = gauss_legendre(rule.n_radial, 0.0, rho_max);
    const Rule1D phi = gauss_legendre(rule.n_phi, 0.0, kPi);
    const Rule1D theta = periodic_trapezoid(rule.n_theta);
    std::vector<QuadNode> nodes;
    nodes.reserve(rho.x.size() * phi.x.size() * theta.x.size());
    for (std::size_t k = 0; k < rho.x.size(); ++k) {
        const double ch = std::cosh(rho.x[k]), sh = std::sinh(rho.x[k]);
        for (std::size_t i = 0; i < phi.x.size(); ++i) {
            const double sp = std::sin(phi.x[i]), cp = std::cos(phi.x[i]);
            const double meas = 0.125 * sh * sp * (ch * ch - cp * cp);
            for (std::size_t j = 0; j < theta.x.size(); ++j) {
                const Vec3 x{0.5 + 0.5 * ch * cp,
                             0.5 * sh * sp * std::sin(theta.x[j]),
                             0.5 * sh * sp * std::cos(theta.x[j])};
                nodes.push_back({x, meas * rho.w[k] * phi.w[i] * theta.w[j]});
            }
        }
    }
    return nodes;
}

std::vector<QuadNode> ball_volume_quadrature(double radius, const VolumeRule& rule) {
    if (!(radius > 0.0))
        throw Error(ErrorCode::NonpositiveRadius, "ball volume needs radius > 0");
    const Rule1D rad = gauss_legendre(rule.n_radial, 0.0, radius);
    const Rule1D phi = gauss_legendre(rule.n_phi, 0.0, kPi);
    const Rule1D theta = periodic_trapezoid(rule.n_theta);
    std::vector<QuadNode> nodes;
    nodes.reserve(rad.x.size() * phi.x.size() * theta.x.size());
    for (std::size_t k = 0; k < rad.x.size(); ++k) {
        const double r = rad.x[k];
        for (std::size_t i = 0; i < phi.x.size(); ++i) {
            const double sp = std::sin(phi.x[i]), cp = std::cos(phi.x[i]);
            for (std::size_t j = 0; j < theta.x.size(); ++j) {
                const Vec3 x{r * sp * std::cos(theta.x[j]),
                             r * sp * std::sin(theta.x[j]), r * cp};
                nodes.push_back({x, r * r * sp * rad.w[k] * phi.w[i] * theta.w[j]});
            }
        }
    }
    return nodes;
}

double grad_factor(double tau, double phi) {
    const double two_tau = 2.0 * tau;
    if (two_tau < 1.0)
        throw Error(ErrorCode::DegenerateEllipsoid, "grad_factor needs 2tau >= 1");
    const double cp = std::cos(phi);
    return 0.5 * std::sqrt((two_tau * two_tau - cp * cp) * (two_tau * two_tau - 1.0));
}

std::vector<QuadNode> retarded_shell_quadrature(const Vec3& fa, const Vec3& fb,
                                                double s, const AngularRule& rule) {
    const Vec3 axis = fb - fa;
    const double d = axis.norm();
    if (!(s > d * kDegenerateGuard) || !(s > 0.0))
        throw Error(ErrorCode::DegenerateEllipsoid,
                    "two-focus shell needs sum above the focus separation");
    // orthonormal frame along the focal axis; concentric limit falls back to
    // the coordinate axes
    Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    if (d > 0.0) {
        e1 = axis * (1.0 / d);
        const Vec3 trial = std::abs(e1.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        const Vec3 t2 = trial - e1 * trial.dot(e1);
        e2 = t2 * (1.0 / t2.norm());
        e3 = {e1.y * e2.z - e1.z * e2.y, e1.z * e2.x - e1.x * e2.z,
              e1.x * e2.y - e1.y * e2.x};
    }
    const Vec3 center = (fa + fb) * 0.5;
    const double a = 0.5 * s;
    const double bsemi = 0.5 * std::sqrt(s * s - d * d);
    const Rule1D phi = gauss_legendre(rule.n_phi, 0.0, kPi);
    const Rule1D theta = periodic_trapezoid(rule.n_theta);
    std::vector<QuadNode> nodes;
    nodes.reserve(phi.x.size() * theta.x.size());
    for (std::size_t i = 0; i < phi.x.size(); ++i) {
        const double sp = std::sin(phi.x[i]), cp = std::cos(phi.x[i]);
        for (std::size_t j = 0; j < theta.x.size(); ++j) {
            const Vec3 x = center + e1 * (a * cp) +
                           (e2 * std::sin(theta.x[j]) + e3 * std::cos(theta.x[j])) *
                               (bsemi * sp);
            // the double retarded kernel collapses the measure to sin(phi)/2
            nodes.push_back({x, 0.5 * sp * phi.w[i] * theta.w[j]});
        }
    }
    return nodes;
}

namespace {

// Parameter values where the symmetry argument of a profile-backed entry
// crosses a knot along the segment a + t (x - a), t in [0,1].
void knot_crossings(const MatrixPotential& p, const Vec3& a, const Vec3& x,
                    std::set<double>* splits) {
    auto param_of = [&](const ScalarField& f, double t) {
        const Vec3 y = a + (x - a) * t;
        return f.kind() == ScalarField::Kind::Radial ? y.norm() : ellipsoidal_param(y);
    };
    const int samples = 64;
    for (int e = 0; e < 4; ++e) {
        const ScalarField& f = p.entry(e / 2, e % 2);
        if (f.kind() != ScalarField::Kind::Radial &&
            f.kind() != ScalarField::Kind::Ellipsoidal)
            continue;
        const auto& knots = f.profile()->knots();
        double prev_t = 0.0, prev_u = param_of(f, 0.0);
        for (int i = 1; i <= samples; ++i) {
            const double t = static_cast<double>(i) / samples;
            const double u = param_of(f, t);
            const double ulo = std::min(prev_u, u), uhi = std::max(prev_u, u);
            const auto lo = std::lower_bound(knots.begin(), knots.end(), ulo);
            const auto hi = std::upper_bound(knots.begin(), knots.end(), uhi);
            for (auto it = lo; it != hi; ++it) {
                double t0 = prev_t, t1 = t, u0 = prev_u - *it, u1 = u - *it;
                if (u0 == 0.0) { splits->insert(t0); continue; }
                if (u0 * u1 > 0.0) continue;
                for (int b = 0; b < 60; ++b) {
                    const double tm = 0.5 * (t0 + t1);
                    const double um = param_of(f, tm) - *it;
                    if (u0 * um <= 0.0) { t1 = tm; u1 = um; }
                    else { t0 = tm; u0 = um; }
                }
                splits->insert(0.5 * (t0 + t1));
            }
            prev_t = t;
            prev_u = u;
        }
    }
}

}  // namespace

Vec2 segment_average(const MatrixPotential& p, const Vec3& a, const Vec3& x) {
    const Vec3 d = x - a;
    const double len = d.norm();
    if (!(len > 0.0))
        throw Error(ErrorCode::CoincidentEndpoints, "segment endpoints coincide");

    // Source at the origin with radially symmetric entries: the parameter is
    // affine in arclength, so the profile integral is exact.
    if (a.norm() == 0.0 && p.symmetry() == Symmetry::Radial) {
        double r1 = 0.0, r2 = 0.0;
        bool exact = true;
        for (int e = 0; e < 4 && exact; ++e)
            exact = p.entry(e / 2, e % 2).kind() != ScalarField::Kind::General;
        if (exact) {
            r1 = p.entry(0, 0).integral_param_to(len) +
                 p.entry(0, 1).integral_param_to(len);
            r2 = p.entry(1, 0).integral_param_to(len) +
                 p.entry(1, 1).integral_param_to(len);
            return Vec2{r1, r2} * (1.0 / (8.0 * kPi * len));
        }
    }

    std::set<double> splits{0.0, 1.0};
    knot_crossings(p, a, x, &splits);
    auto f = [&](double t) { return p.row_sums(a + d * t); };
    Vec2 acc{0, 0};
    double prev = 0.0;
    bool first = true;
    for (double t : splits) {
        if (first) { first = false; prev = t; continue; }
        if (t - prev > 1e-14) acc = acc + adaptive_gk(f, prev, t, 1e-10);
        prev = t;
    }
    return acc * (1.0 / (8.0 * kPi));
}

double prolate_spheroid_area(double two_tau) {
    const double a = 0.5 * two_tau;
    const double b = 0.5 * std::sqrt(two_tau * two_tau - 1.0);
    const double ecc = std::sqrt(1.0 - (b * b) / (a * a));
    return 2.0 * kPi * b * b * (1.0 + (a / (b * ecc)) * std::asin(ecc));
}

double prolate_spheroid_volume(double two_tau) {
    const double a = 0.5 * two_tau;
    const double b2 = 0.25 * (two_tau * two_tau - 1.0);
    return (4.0 / 3.0) * kPi * a * b2;
}

}  // namespace cwave::geom
