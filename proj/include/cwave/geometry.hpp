#pragma once

#include <vector>

#include "cwave/potential.hpp"
#include "cwave/types.hpp"

namespace cwave::geom {

// Prolate spheroidal coordinates for the confocal family |x| + |x-e| = cosh(rho),
// foci at the origin and at e = (1,0,0).
struct ProlateCoords {
    double rho;    // >= 0
    double theta;  // azimuth in [0, 2pi)
    double phi;    // polar in [0, pi]
};

Vec3 prolate_to_cartesian(const ProlateCoords& c);

struct Rule1D {
    std::vector<double> x, w;
};

// Gauss-Legendre on [a, b].
Rule1D gauss_legendre(int n, double a, double b);
// Periodic trapezoid on [0, 2pi).
Rule1D periodic_trapezoid(int n);

struct AngularRule {
    int n_phi = 32;
    int n_theta = 64;
};

struct VolumeRule {
    int n_radial = 24;  // rho (ellipsoid) or r (ball) direction
    int n_phi = 16;
    int n_theta = 32;
};

struct QuadNode {
    Vec3 x;
    double w;
};

struct EllipsoidSurfaceNode {
    Vec3 x;
    double w;
    double phi;  // polar angle of the node, for the gradient-factor closed form
};

// Nodes/weights approximating \int_{|x|=r} f dS.
std::vector<QuadNode> sphere_surface_quadrature(double r, const AngularRule& rule);

// Nodes/weights approximating \int_{|x|+|x-e|=2tau} f dS.
std::vector<EllipsoidSurfaceNode> ellipsoid_surface_quadrature(double two_tau,
                                                               const AngularRule& rule);

// Nodes/weights approximating \int_{|x|+|x-e|<=2tau} f dx.
std::vector<QuadNode> ellipsoid_volume_quadrature(double two_tau,
                                                  const VolumeRule& rule);

// Nodes/weights approximating \int_{|x|<=R} f dx.
std::vector<QuadNode> ball_volume_quadrature(double radius, const VolumeRule& rule);

// |2 tau x - e |x|| for x on the surface 2tau at polar angle phi: the norm of
// the arrival-time level-set gradient scaled by |x||x-e|.  Closed form
// (1/2) sqrt((4 tau^2 - cos^2 phi)(4 tau^2 - 1)).
double grad_factor(double tau, double phi);

// Weighted nodes on the two-focus surface |y-fa| + |y-fb| = s such that
//   sum_i w_i f(x_i)  ~  \int f(y) / (|y-fa| |y-fb| |grad(|y-fa|+|y-fb|)|) dS,
// the shell integral produced by a pair of retarded kernels.  Valid for any
// focus separation below s, including the concentric limit fa == fb.
std::vector<QuadNode> retarded_shell_quadrature(const Vec3& fa, const Vec3& fb,
                                                double s, const AngularRule& rule);

// Component i equals (1/8pi) \int_0^1 (row i sum of P)(a + s(x-a)) ds: the
// wavefront boundary value for a source at a observed along the segment to x.
// Integration splits at profile knot crossings, then refines adaptively.
Vec2 segment_average(const MatrixPotential& p, const Vec3& a, const Vec3& x);

// Analytic prolate spheroid area / ellipsoid volume for the surface 2tau
// (semi-axes a = tau, b = sqrt(tau^2 - 1/4)); used as oracles by geomcheck.
double prolate_spheroid_area(double two_tau);
double prolate_spheroid_volume(double two_tau);

}  // namespace cwave::geom
