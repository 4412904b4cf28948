#include "cwave/born.hpp"

#include <cmath>

#include "cwave/errors.hpp"
#include "cwave/parallel.hpp"

namespace cwave::born {

namespace {

constexpr double kSixteenPi2 = 16.0 * kPi * kPi;
constexpr double kSixtyFourPi3 = 64.0 * kPi * kPi * kPi;

Vec2 first_order(const MatrixPotential& p, const Vec3& receiver, double t,
                 const geom::AngularRule& rule) {
    Vec2 acc{0, 0};
    if (receiver.norm() == 0.0) {
        // spherical shell |y| = t/2
        for (const auto& nd : geom::retarded_shell_quadrature({0, 0, 0}, receiver, t, rule))
            acc = acc + nd.w * p.row_sums(nd.x);
    } else {
        // confocal shell through the separated receiver, with the closed-form
        // gradient factor
        const double tau = 0.5 * t;
        for (const auto& nd : geom::ellipsoid_surface_quadrature(t, rule))
            acc = acc + (nd.w / geom::grad_factor(tau, nd.phi)) * p.row_sums(nd.x);
    }
    return acc * (1.0 / kSixteenPi2);
}

Vec2 second_order(const MatrixPotential& p, const Vec3& receiver, double t,
                  const BornConfig& cfg) {
    const bool at_origin = receiver.norm() == 0.0;
    const auto outer = at_origin
                           ? geom::ball_volume_quadrature(0.5 * t, cfg.volume)
                           : geom::ellipsoid_volume_quadrature(t, cfg.volume);
    const Vec2 coupling = CouplingVector::as_vec2();
    Vec2 acc{0, 0};
    for (const auto& nd : outer) {
        const Vec3& y2 = nd.x;
        const double leg = (receiver - y2).norm();
        const double t2 = t - leg;
        const double d = y2.norm();
        if (!(t2 > d + 1e-12 * t)) continue;  // outside the inner light cone
        Vec2 inner{0, 0};
        for (const auto& in : geom::retarded_shell_quadrature({0, 0, 0}, y2, t2,
                                                              cfg.surface))
            inner = inner + in.w * (p.eval(in.x) * coupling);
        acc = acc + (nd.w / leg) * (p.eval(y2) * inner);
    }
    return acc * (1.0 / kSixtyFourPi3);
}

}  // namespace

Trace born1_trace(const MatrixPotential& p, const std::vector<double>& times,
                  const geom::AngularRule& rule) {
    Trace tr;
    tr.receiver = Receiver::E;
    tr.arrival_time = 1.0;
    tr.singular_coefficient = CouplingVector::as_vec2();
    tr.times = times;
    tr.regular.assign(times.size(), Vec2{0, 0});
    for (double t : times)
        if (!(t > 1.0))
            throw Error(ErrorCode::DegenerateEllipsoid,
                        "separated receiver trace starts after t = 1");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw Error(ErrorCode::NonmonotoneTimes, "trace times must increase");
    parallel_for(times.size(), [&](std::size_t i) {
        tr.regular[i] = first_order(p, kFocusE, times[i], rule);
    });
    return tr;
}

Trace picard_trace(const MatrixPotential& p, Receiver receiver,
                   const std::vector<double>& times, const BornConfig& cfg) {
    if (cfg.order < 0 || cfg.order > 2)
        throw Error(ErrorCode::UnsupportedOrder, "scattering series supports K <= 2");
    const bool at_origin = receiver == Receiver::Origin;
    const Vec3 rx = at_origin ? Vec3{0, 0, 0} : kFocusE;

    Trace tr;
    tr.receiver = receiver;
    tr.arrival_time = at_origin ? 0.0 : 1.0;
    tr.singular_coefficient = CouplingVector::as_vec2();
    tr.times = times;
    tr.regular.assign(times.size(), Vec2{0, 0});
    for (double t : times)
        if (!(t > tr.arrival_time))
            throw Error(at_origin ? ErrorCode::OutOfDomain
                                  : ErrorCode::DegenerateEllipsoid,
                        "trace time before arrival");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw Error(ErrorCode::NonmonotoneTimes, "trace times must increase");
    if (cfg.order == 0) return tr;

    parallel_for(times.size(), [&](std::size_t i) {
        Vec2 u = first_order(p, rx, times[i], cfg.surface);
        if (cfg.order >= 2) u = u + second_order(p, rx, times[i], cfg);
        tr.regular[i] = u;
    });
    return tr;
}

}  // namespace cwave::born
