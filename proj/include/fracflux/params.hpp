//==============================================================================
// params.hpp
// Equation coefficients shared by all solvers:
//   d_t rho + d_x[rho (H rho - gamma x)] = -nu Lambda^alpha rho.
//==============================================================================
#pragma once

namespace fracflux {

struct PhysicsParams {
    double alpha = 2.0; // diffusion order, in [0, 2]
    double nu = 1.0;    // viscosity, > 0
    double gamma = 0.0; // confinement rate, >= 0
};

// Throws std::invalid_argument on out-of-range coefficients.
PhysicsParams make_params(double alpha, double nu, double gamma = 0.0);

} // namespace fracflux
