#pragma once

#include <functional>
#include <vector>

#include "cwave/potential.hpp"
#include "cwave/types.hpp"

namespace cwave::goursat {

enum class Receiver { Origin, E };

// Receiver time series: the wavefront delta coefficient plus the sampled
// regular part of both components.
struct Trace {
    Receiver receiver = Receiver::Origin;
    double arrival_time = 0.0;            // 0 at the origin, 1 at e
    Vec2 singular_coefficient{1.0, 1.0};  // coefficient of delta(t-|x-a|)/(4pi|x-a|)
    std::vector<double> times;            // strictly increasing, > arrival_time
    std::vector<Vec2> regular;
};

// Regular part of the fundamental solution for a radial potential on the
// characteristic triangle 0 <= xi <= eta <= eta_max, xi = t-r, eta = t+r,
// stored through the reduction v = r R.
class CausalField {
  public:
    CausalField(MatrixPotential p, double h, int n_eta)
        : potential_(std::move(p)), h_(h), n_(n_eta),
          v_((static_cast<std::size_t>(n_eta) + 1) * (n_eta + 2) / 2) {}

    const MatrixPotential& potential() const { return potential_; }
    double h() const { return h_; }
    int grid_count() const { return n_; }
    double eta_max() const { return h_ * n_; }

    Vec2& at(int m, int n) { return v_[index(m, n)]; }
    const Vec2& at(int m, int n) const { return v_[index(m, n)]; }

  private:
    std::size_t index(int m, int n) const {
        // row m holds entries n = m..n_; rows stacked from m = 0
        const std::size_t nn = n_;
        return static_cast<std::size_t>(m) * (nn + 1) -
               static_cast<std::size_t>(m) * (m - 1) / 2 + (n - m);
    }

    MatrixPotential potential_;
    double h_;
    int n_;
    std::vector<Vec2> v_;
};

// Wavefront data for the reduced unknown: g(r) = v(xi=0, eta=2r), i.e. r times
// the segment average of the row sums from the origin out to radius r.
std::function<Vec2(double)> boundary_data(const MatrixPotential& p);

// Marches the characteristic fixed-point relation
//   v(xi,eta) = v(0,eta) - v(0,xi) + (1/4) int_0^xi int_xi^eta B((eta'-xi')/2) v
// with trapezoidal kernel quadrature; the implicit corner is a 2x2 solve.
CausalField solve(const MatrixPotential& p, double eta_max, int n_grid);

// R(t, r): zero for t < r, v(t-r, t+r)/r for t >= r; the r -> 0 limit uses a
// Richardson-extrapolated one-sided difference at r = h, 2h.
Vec2 field_R(const CausalField& f, double t, double r);

// Coincident-receiver trace sampled at the requested times (each must satisfy
// t + 2h <= eta_max for the on-axis extraction stencil).
Trace trace_coincident(const CausalField& f, const std::vector<double>& times);

}  // namespace cwave::goursat
