#ifndef PDLAB_FLOWS_HPP
#define PDLAB_FLOWS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pdlab/fourier_field.hpp"

namespace pdlab {

// Flows, signs as printed:
//   KdV            dq/dt = -q''' + 6 q q'
//   NLS(+/-)    -i dq/dt = -q'' +/- 2 |q|^2 q
//   HmKdV(+/-)     dq/dt = -q''' +/- 6 |q|^2 q'
//   mKdV(+/-)      dq/dt = -q''' +/- 6 q^2 q'   (real field)
// The linear multiplier (i xi^3 for the third-order family, i xi^2 for NLS)
// is integrated exactly; nonlinearities use dealiased grid products.

enum class FlowFlavor {
    kdv,
    nls_plus,
    nls_minus,
    mkdv_real_plus,
    mkdv_real_minus,
    hirota_plus,
    hirota_minus,
};

enum class Scheme { etdrk4, integrating_factor_rk4 };

bool flavor_is_real(FlowFlavor flavor);
std::string flavor_name(FlowFlavor flavor);

struct FlowSpec {
    FlowFlavor flavor = FlowFlavor::kdv;
    double dt = 1e-4;
    double T = 0.0;
    Scheme scheme = Scheme::etdrk4;
    TorusGrid grid;
    int snapshot_count = 11;  // endpoints included
};

struct ClassicalInvariants {
    cplx mass{};                  // int q dx
    double l2 = 0.0;              // int |q|^2 dx
    std::optional<double> energy; // int (1/2) q'^2 + q^3 dx, real fields only
};

ClassicalInvariants classical_invariants(const FourierField& q);

struct Trajectory {
    std::vector<double> times;
    std::vector<FourierField> snapshots;
    std::vector<ClassicalInvariants> diagnostics;
};

/// Advances q0 under the flow; throws BlowupError on non-finite
/// coefficients and InternalError if a real flavor drifts off the real line.
Trajectory evolve(const FourierField& q0, const FlowSpec& spec);

} // namespace pdlab

#endif
