//==============================================================================
// grid.hpp
// Uniform periodic grid on [-L, L), density profiles sampled on it, and their
// Fourier-series representation.  Conventions used throughout the library:
//   * nodes x_j = -L + j*dx, dx = 2L/n, j = 0..n-1
//   * coeffs(k) = (1/2L) * integral rho(x) e^{-i xi_k x} dx,  xi_k = pi k / L
//     so coeffs(0) is the mean value; k runs over -n/2 .. n/2-1 (FFT order).
//   * to_physical is the exact inverse of to_spectral (round trip ~1e-15).
//==============================================================================
#pragma once

#include <complex>
#include <limits>
#include <vector>

namespace fracflux {

using complex = std::complex<double>;

struct Grid {
    int n = 0;              // number of nodes, even, >= 8
    double half_length = 0; // L

    double dx() const { return 2.0 * half_length / n; }
    double node(int j) const { return -half_length + j * dx(); }
    // integer wavenumber for FFT-ordered index i: 0..n/2-1, -n/2..-1
    int wavenumber(int i) const { return i < n / 2 ? i : i - n; }
    // physical frequency xi_k = pi k / L
    double xi(int i) const { return 3.14159265358979323846 * wavenumber(i) / half_length; }

    bool operator==(const Grid&) const = default;
};

// Throws std::invalid_argument unless n is even, n >= 8 and L > 0.
Grid make_grid(int n, double half_length);

struct Profile {
    Grid grid;
    std::vector<double> values;
};

struct SpectralField {
    Grid grid;
    std::vector<complex> coeffs; // FFT order, length n
};

// Construct a profile and check the invariants (size match, finite values).
Profile make_profile(const Grid& grid, std::vector<double> values);

// Sample f at the grid nodes.
template <class F>
Profile sample(const Grid& grid, F&& f) {
    std::vector<double> v(grid.n);
    for (int j = 0; j < grid.n; ++j) v[j] = f(grid.node(j));
    return Profile{grid, std::move(v)};
}

//--------------------------------- transforms --------------------------------

SpectralField to_spectral(const Profile& p);
Profile to_physical(const SpectralField& s);

// Apply a Fourier multiplier m(k, xi_k) and return the (real) result.
template <class M>
Profile apply_multiplier(const Profile& p, M&& m);

//--------------------------------- operations --------------------------------

// Friedrichs-type mollification: convolution with a discrete Gaussian of
// width h truncated at 6h and renormalized to unit mass.  Preserves mass
// and nonnegativity.  h <= 0 is rejected.
Profile mollify(const Profile& p, double h);

// Trapezoid quadrature of rho (signed).
double mass(const Profile& p);

// Trapezoid quadrature of |rho|^q, q-th root; q = inf gives max|rho|.
// q < 1 is rejected.  Use lp_inf for the sup norm.
inline constexpr double lp_inf = std::numeric_limits<double>::infinity();
double lp_norm(const Profile& p, double q);

//--------------------------------- initial data ------------------------------

// Wigner semicircle sqrt((4-x^2)_+)/(2 pi): unit mass, support [-2,2].
Profile make_semicircle(const Grid& grid);
// Unit-mass Gaussian of standard deviation sigma.
Profile make_gaussian(const Grid& grid, double sigma);
// Cauchy density mass/(pi) * eps/(eps^2+x^2).
Profile make_cauchy(const Grid& grid, double eps, double total_mass = 1.0);
// Rescale so the trapezoid mass is exactly m.
Profile normalize_mass(const Profile& p, double m = 1.0);

//------------------------------ template bodies ------------------------------

template <class M>
Profile apply_multiplier(const Profile& p, M&& m) {
    SpectralField s = to_spectral(p);
    for (int i = 0; i < s.grid.n; ++i)
        s.coeffs[i] *= m(s.grid.wavenumber(i), s.grid.xi(i));
    return to_physical(s);
}

} // namespace fracflux
