#include "cwave/goursat.hpp"

#include <cmath>

#include "cwave/errors.hpp"
#include "cwave/geometry.hpp"

namespace cwave::goursat {

std::function<Vec2(double)> boundary_data(const MatrixPotential& p) {
    if (p.symmetry() != Symmetry::Radial)
        throw Error(ErrorCode::SymmetryMismatch,
                    "coincident boundary data needs a radial potential");
    const MatrixPotential pot = p;
    return [pot](double r) -> Vec2 {
        if (r <= 0.0) return {0.0, 0.0};
        return geom::segment_average(pot, Vec3{0, 0, 0}, Vec3{r, 0, 0}) * r;
    };
}

CausalField solve(const MatrixPotential& p, double eta_max, int n_grid) {
    if (n_grid < 2 || !(eta_max > 0.0))
        throw Error(ErrorCode::InvalidGrid, "solver needs n >= 2 and eta_max > 0");
    if (p.symmetry() != Symmetry::Radial)
        throw Error(ErrorCode::SymmetryMismatch, "characteristic solver is radial");

    const double h = eta_max / n_grid;
    const int N = n_grid;
    CausalField field(p, h, N);

    // potential matrix at the half-grid radii (eta'-xi')/2 = k h/2
    std::vector<Mat2> B(N + 1);
    for (int k = 0; k <= N; ++k) B[k] = p.at_param(0.5 * k * h);

    const auto g = boundary_data(p);
    std::vector<Vec2> gv(N + 1);
    for (int n = 0; n <= N; ++n) {
        gv[n] = g(0.5 * n * h);
        field.at(0, n) = gv[n];
    }

    // colInt[j] = trapezoid over xi' in [0, xi_m] of B v(., eta_j), updated
    // incrementally as m advances; S accumulates the eta' direction.
    std::vector<Vec2> colInt(N + 1, Vec2{0, 0});
    for (int m = 1; m <= N; ++m) {
        for (int j = m - 1; j <= N; ++j)
            colInt[j] = colInt[j] + 0.5 * h * (B[j - (m - 1)] * field.at(m - 1, j));
        field.at(m, m) = {0.0, 0.0};
        Vec2 S{0, 0};
        for (int n = m + 1; n <= N; ++n) {
            const Vec2 rhs_known =
                gv[n] - gv[m] + 0.25 * (S + 0.5 * h * (colInt[n - 1] + colInt[n]));
            // corner term (h^2/16) B v_mn moved to the left-hand side
            const Vec2 vmn = (B[n - m] * (h * h / 16.0)).solve_shifted(rhs_known);
            field.at(m, n) = vmn;
            colInt[n] = colInt[n] + 0.5 * h * (B[n - m] * vmn);
            S = S + 0.5 * h * (colInt[n - 1] + colInt[n]);
        }
    }
    return field;
}

namespace {

Vec2 value_interp(const CausalField& f, double xi, double eta) {
    const double h = f.h();
    const int N = f.grid_count();
    double fx = xi / h, fe = eta / h;
    int i = static_cast<int>(std::floor(fx));
    int j = static_cast<int>(std::floor(fe));
    i = std::clamp(i, 0, N - 1);
    j = std::clamp(j, 0, N - 1);
    if (i > j) i = j;
    const double tx = fx - i, te = fe - j;
    if (i == j) {
        // diagonal half-cell: linear on the triangle (i,i),(i,i+1),(i+1,i+1)
        const Vec2 v00 = f.at(i, j), v01 = f.at(i, j + 1), v11 = f.at(i + 1, j + 1);
        return v00 + te * (v01 - v00) + tx * (v11 - v01);
    }
    const Vec2 v00 = f.at(i, j), v10 = f.at(i + 1, j);
    const Vec2 v01 = f.at(i, j + 1), v11 = f.at(i + 1, j + 1);
    return (1 - tx) * ((1 - te) * v00 + te * v01) + tx * ((1 - te) * v10 + te * v11);
}

Vec2 origin_limit(const CausalField& f, double t) {
    // R(t,0) = d/dr v(t,r)|_0; v is odd in r, so the one-sided quotients at
    // r = h, 2h extrapolate with an h^2 step
    const double h = f.h();
    if (t < 2.0 * h) {
        // too close to the source time for the full stencil
        const double r = 0.5 * t;
        if (r <= 0.0) return {0.0, 0.0};
        return value_interp(f, t - r, t + r) * (1.0 / r);
    }
    const Vec2 q1 = value_interp(f, t - h, t + h) * (1.0 / h);
    const Vec2 q2 = value_interp(f, t - 2 * h, t + 2 * h) * (1.0 / (2.0 * h));
    return (4.0 * q1 - q2) * (1.0 / 3.0);
}

}  // namespace

Vec2 field_R(const CausalField& f, double t, double r) {
    if (r < 0.0) throw Error(ErrorCode::OutOfDomain, "field_R needs r >= 0");
    if (t < r) return {0.0, 0.0};
    if (t + std::max(r, 2.0 * f.h()) > f.eta_max() * (1.0 + 1e-12))
        throw Error(ErrorCode::OutOfDomain, "field_R outside the computed triangle");
    const double h = f.h();
    if (r >= 2.0 * h) return value_interp(f, t - r, t + r) * (1.0 / r);
    // near the axis blend the odd extension: R(t,r) ~ R(t,0) + r^2 curvature
    const Vec2 r0 = origin_limit(f, t);
    if (r == 0.0) return r0;
    const Vec2 r2 = value_interp(f, t - 2 * h, t + 2 * h) * (1.0 / (2.0 * h));
    const double w = (r * r) / (4.0 * h * h);
    return r0 + w * (r2 - r0);
}

Trace trace_coincident(const CausalField& f, const std::vector<double>& times) {
    Trace tr;
    tr.receiver = Receiver::Origin;
    tr.arrival_time = 0.0;
    tr.singular_coefficient = CouplingVector::as_vec2();
    tr.times = times;
    tr.regular.reserve(times.size());
    double prev = 0.0;
    for (double t : times) {
        if (!(t > prev))
            throw Error(ErrorCode::NonmonotoneTimes, "trace times must increase");
        prev = t;
        if (t + 2.0 * f.h() > f.eta_max() * (1.0 + 1e-12))
            throw Error(ErrorCode::OutOfDomain, "trace time beyond the solved grid");
        tr.regular.push_back(field_R(f, t, 0.0));
    }
    return tr;
}

}  // namespace cwave::goursat
