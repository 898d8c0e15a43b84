//==============================================================================
// operators.hpp
// The linear operators of the equation as Fourier multipliers on the torus,
// plus real-line quadrature oracles:
//   * Hilbert transform H: multiplier -i sgn(xi); p.v. quadrature oracle.
//   * fractional Laplacian Lambda^alpha: multiplier |xi|^alpha.
//   * fractional heat propagator G_alpha(t): multiplier e^{-nu t |xi|^alpha}.
//   * Poisson / conjugate-Poisson extension of a sampled density to the upper
//     half plane, and the Stieltjes transform f0 = R rho - i P rho.
//   * L^q norms of Lambda^l G_alpha(.,t) on a wide internal grid (the kernel
//     constants behind the smoothing estimates).
// Mean and Nyquist modes are annihilated by H and by the spectral derivative.
//==============================================================================
#pragma once

#include "fracflux/grid.hpp"
#include "fracflux/params.hpp"

namespace fracflux {

struct UpperHalfPoint {
    double re = 0.0;
    double im = 0.0; // > 0 in the open half plane; 0 only for boundary traces
};

//------------------------------ multiplier ops -------------------------------

// Periodic (conjugate-function) Hilbert transform; mean and Nyquist -> 0.
Profile hilbert_spectral(const Profile& p);

// Spectral derivative d/dx (multiplier i xi, Nyquist zeroed).
Profile derivative(const Profile& p);

// Lambda^alpha with |xi|^alpha, alpha in [0,2]; |0|^0 := 1 so alpha = 0 is the
// identity (all modes, mean included).
Profile fractional_laplacian(const Profile& p, double alpha);

// Fractional heat semigroup.  Mass is conserved exactly for alpha > 0; for
// alpha = 0 every mode (the mean too) decays by e^{-nu t}.
struct HeatPropagator {
    PhysicsParams params;
    Grid grid;
};

Profile heat_step(const Profile& p, double t, const HeatPropagator& prop);

//------------------------------ real-line oracles ----------------------------

// Principal-value quadrature of (1/pi) p.v. int rho(y)/(x-y) dy on the
// truncated line [-L, L).  Midpoint rule; if x coincides with a node the
// singular cell is skipped (pair-symmetric cancellation, O(dx^2) for smooth
// data).  This is the truth oracle for real-line semantics of H.
double hilbert_pv_quadrature(const Profile& p, double x);

// Poisson and conjugate-Poisson extension of the sampled density at
// z = x + i y, y > 0:
//   P rho(x,y) = int P_y(x-s) rho(s) ds,  R rho(x,y) = int R_y(x-s) rho(s) ds
// with P_y(x) = y/(pi(y^2+x^2)), R_y(x) = x/(pi(y^2+x^2)).  The integral is
// taken against the piecewise-linear interpolant of the samples (closed form
// per cell), which stays accurate for y well below the grid spacing.
struct HalfPlaneValues {
    double poisson = 0.0;   // P rho(x,y)
    double conjugate = 0.0; // R rho(x,y)
};

HalfPlaneValues poisson_extend(const Profile& p0, const UpperHalfPoint& pt);

// Stieltjes transform f0(z) = (1/pi) int rho0(s)/(z-s) ds = R rho0 - i P rho0.
complex stieltjes(const Profile& p0, const UpperHalfPoint& z);

// d/dz of the Stieltjes transform, -(1/pi) int rho0(s)/(z-s)^2 ds, evaluated
// against the same piecewise-linear interpolant.
complex stieltjes_derivative(const Profile& p0, const UpperHalfPoint& z);

//------------------------------ kernel constants -----------------------------

// || Lambda^l G_alpha(.,t) ||_{L^q} measured by inverse transform on a wide
// internal grid.  Scaling law: value(t) = t^{-(l+1)/alpha + 1/(alpha q)} *
// value(1).  alpha <= 0 is rejected; q >= 1 or lp_inf.
double kernel_constant(double l, double alpha, double q, double nu = 1.0, double t = 1.0);

} // namespace fracflux
