//==============================================================================
// evolve.hpp
// Time integration of  d_t rho + d_x[rho H rho] = -nu Lambda^alpha rho  on the
// periodic grid:
//   * step_direct: integrating-factor Heun (exact e^{-nu dt |xi|^alpha} factor,
//     explicit transport, second order in dt).
//   * step_splitting: one Trotter step  G_alpha(h) D(h)  — inviscid Dyson
//     substep followed by an exact fractional heat substep (first order in h).
//   * dyson_step: the inviscid substep, either pseudo-spectral RK4 or exact
//     complex-Burgers characteristics (strictly positive data only).
//   * rescale_gamma_to_zero: the space-time change of variables that maps a
//     gamma = 0 evolution onto the confined problem.
// gamma > 0 is not supported by the periodic transport path (x is not
// periodic); confined problems go through the rescaling or through the
// alpha = 1 characteristics solver.
//==============================================================================
#pragma once

#include "fracflux/grid.hpp"
#include "fracflux/operators.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fracflux {

enum class Scheme { direct, splitting };
enum class DysonVariant { spectral, characteristics };

struct SolverConfig {
    double dt = 1e-2;
    double t_end = 1.0;
    Scheme scheme = Scheme::direct;
    DysonVariant dyson_substep = DysonVariant::spectral;
    bool dealias = true;
    int record_every = 1;
    bool transport_enabled = true; // test hook: false reduces the direct step
                                   // to the exact heat flow
    double mollify_h = 0.0;        // splitting initial mollification width;
                                   // 0 means "use the time step"
};

SolverConfig make_solver_config(double dt, double t_end, Scheme scheme = Scheme::direct);

struct Trajectory {
    std::vector<double> times;     // strictly increasing, starts at 0
    std::vector<Profile> profiles; // aligned with times, one shared grid
};

struct BlowUpError : std::runtime_error {
    double time;
    explicit BlowUpError(double t)
        : std::runtime_error("solution lost finiteness at t = " + std::to_string(t)),
          time(t) {}
};

// d_x(rho * H rho), pseudo-spectral (physical product, spectral derivative,
// 2/3-rule dealiasing optional).  Integral of the output vanishes.
// gamma > 0 is rejected.
Profile nonlinear_flux(const Profile& p, const PhysicsParams& params, bool dealias = true);

// One integrating-factor Heun step of length dt.
Profile step_direct(const Profile& p, double dt, const PhysicsParams& params,
                    const SolverConfig& cfg);

// One Trotter step: Dyson substep then heat substep, each of length h.
// Input must be nonnegative (undershoot below -1e-10 rejected).
Profile step_splitting(const Profile& p, double h, const PhysicsParams& params,
                       const SolverConfig& cfg);

// Solve d_t w + d_x(w H w) = 0 over [0, h].  The characteristics variant
// requires strictly positive data (min > 1e-8 * max) and falls back to the
// spectral variant with a warning otherwise.
Profile dyson_step(const Profile& p, double h, const SolverConfig& cfg);

// Advance to t_end recording every record_every-th step (plus t = 0 and the
// final time).  Splitting runs mollify the initial data first.
Trajectory run(const Profile& p0, const PhysicsParams& params, const SolverConfig& cfg);

// Map a gamma = 0 snapshot at time tau onto the confined problem:
//   rho(x, t) = s * rho0(s x),  s = sqrt(1 + 2 gamma tau),
//   t = log(1 + 2 gamma tau) / (2 gamma).
// Resampled by cubic interpolation; out-of-range values are 0.
struct RescaledProfile {
    Profile profile;
    double t;
};
RescaledProfile rescale_gamma_to_zero(const Profile& p, double tau, double gamma);

} // namespace fracflux
