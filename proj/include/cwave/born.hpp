#pragma once

#include <vector>

#include "cwave/geometry.hpp"
#include "cwave/goursat.hpp"
#include "cwave/potential.hpp"

namespace cwave::born {

using goursat::Receiver;
using goursat::Trace;

// Truncation order and quadrature sizes for the iterated retarded-kernel
// forward model.
struct BornConfig {
    int order = 2;  // 0, 1 or 2 scattering legs
    geom::AngularRule surface{24, 48};
    geom::VolumeRule volume{16, 12, 24};
};

// Single-scattering trace at the separated receiver e: component i at time
// 2tau is (1/16pi^2) times the shell integral of row sum i over the surface
// |x| + |x-e| = 2tau with the retarded kernel weight.
Trace born1_trace(const MatrixPotential& p, const std::vector<double>& times,
                  const geom::AngularRule& rule = {});

// Trace of the truncated scattering series at either receiver.  K = 0 has a
// vanishing regular part, K = 1 matches born1_trace (or its spherical
// analogue at the origin), K = 2 adds one nested retarded volume integral.
Trace picard_trace(const MatrixPotential& p, Receiver receiver,
                   const std::vector<double>& times, const BornConfig& cfg);

}  // namespace cwave::born
