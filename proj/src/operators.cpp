//==============================================================================
// operators.cpp
//==============================================================================
#include "fracflux/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace fracflux {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

PhysicsParams make_params(double alpha, double nu, double gamma) {
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw std::invalid_argument("params: alpha must lie in [0, 2]");
    if (!(nu > 0.0)) throw std::invalid_argument("params: nu must be positive");
    if (!(gamma >= 0.0)) throw std::invalid_argument("params: gamma must be >= 0");
    return PhysicsParams{alpha, nu, gamma};
}

Profile hilbert_spectral(const Profile& p) {
    const int n = p.grid.n;
    return apply_multiplier(p, [n](int k, double) -> complex {
        if (k == 0 || k == -n / 2) return 0.0;
        return complex(0.0, k > 0 ? -1.0 : 1.0); // -i sgn(xi_k)
    });
}

Profile derivative(const Profile& p) {
    const int n = p.grid.n;
    return apply_multiplier(p, [n](int k, double xi) -> complex {
        if (k == -n / 2) return 0.0;
        return complex(0.0, xi);
    });
}

Profile fractional_laplacian(const Profile& p, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw std::invalid_argument("fractional_laplacian: alpha must lie in [0, 2]");
    return apply_multiplier(p, [alpha](int, double xi) -> complex {
        return std::pow(std::abs(xi), alpha); // pow(0,0) == 1: alpha=0 is identity
    });
}

Profile heat_step(const Profile& p, double t, const HeatPropagator& prop) {
    if (!(t >= 0.0)) throw std::invalid_argument("heat_step: t must be >= 0");
    if (p.grid != prop.grid) throw std::invalid_argument("heat_step: grid mismatch");
    const double alpha = prop.params.alpha;
    const double nu = prop.params.nu;
    return apply_multiplier(p, [=](int, double xi) -> complex {
        return std::exp(-nu * t * std::pow(std::abs(xi), alpha));
    });
}

double hilbert_pv_quadrature(const Profile& p, double x) {
    const Grid& g = p.grid;
    if (x < -g.half_length || x > g.half_length)
        throw std::invalid_argument("hilbert_pv_quadrature: x outside the grid");
    const double dx = g.dx();
    int j0 = static_cast<int>(std::lround((x + g.half_length) / dx));
    bool on_node = j0 >= 0 && j0 < g.n && std::abs(x - g.node(j0)) < 1e-9 * dx;
    double s = 0.0;
    for (int j = 0; j < g.n; ++j) {
        if (on_node && j == j0) continue; // singular cell, symmetric skip
        s += p.values[j] / (x - g.node(j));
    }
    return s * dx / kPi;
}

//------------------------------ half-plane values ----------------------------
//
// Integrals against the piecewise-linear interpolant l(u) of the samples.
// With v = u - x and l = c0 + c1 v on a cell [v0, v1]:
//   pi * P-contrib = c0 (atan(v1/y)-atan(v0/y)) + c1 (y/2) ln((y^2+v1^2)/(y^2+v0^2))
//   pi * R-contrib = -c0 (1/2) ln((y^2+v1^2)/(y^2+v0^2))
//                    - c1 [(v1-v0) - y (atan(v1/y)-atan(v0/y))]
// The samples are treated as a compactly supported function on [-L, L-dx]
// (zero outside), not periodically.

HalfPlaneValues poisson_extend(const Profile& p0, const UpperHalfPoint& pt) {
    if (!(pt.im > 0.0)) throw std::invalid_argument("poisson_extend: need Im z > 0");
    const Grid& g = p0.grid;
    const double y = pt.im;
    const double x = pt.re;
    const double dx = g.dx();
    double P = 0.0, R = 0.0;
    double v_left = g.node(0) - x;
    double at_left = std::atan2(v_left, y); // == atan(v/y) for y > 0
    double lg_left = std::log(y * y + v_left * v_left);
    for (int j = 0; j + 1 < g.n; ++j) {
        double v_right = v_left + dx;
        double at_right = std::atan2(v_right, y);
        double lg_right = std::log(y * y + v_right * v_right);
        double c1 = (p0.values[j + 1] - p0.values[j]) / dx;
        double c0 = p0.values[j] - c1 * v_left;
        double d_at = at_right - at_left;
        double d_lg = lg_right - lg_left;
        P += c0 * d_at + 0.5 * c1 * y * d_lg;
        R += -0.5 * c0 * d_lg - c1 * (dx - y * d_at);
        v_left = v_right;
        at_left = at_right;
        lg_left = lg_right;
    }
    return HalfPlaneValues{P / kPi, R / kPi};
}

complex stieltjes(const Profile& p0, const UpperHalfPoint& z) {
    HalfPlaneValues v = poisson_extend(p0, z);
    return complex(v.conjugate, -v.poisson);
}

complex stieltjes_derivative(const Profile& p0, const UpperHalfPoint& z) {
    if (!(z.im > 0.0)) throw std::invalid_argument("stieltjes_derivative: need Im z > 0");
    const Grid& g = p0.grid;
    const double dx = g.dx();
    const complex zc(z.re, z.im);
    // d/dz (1/pi) int l(s)/(z-s) ds = -(1/pi) int l(s)/(z-s)^2 ds.  Per cell
    // with l = a + b s:  int (a+bs)/(z-s)^2 ds
    //   = (a+bz)/(z-s) + b ln(z-s)  evaluated at the cell ends.
    complex acc = 0.0;
    for (int j = 0; j + 1 < g.n; ++j) {
        double s0 = g.node(j), s1 = g.node(j + 1);
        double b = (p0.values[j + 1] - p0.values[j]) / dx;
        double a = p0.values[j] - b * s0;
        complex t0 = (a + b * zc) / (zc - s0) + b * std::log(zc - s0);
        complex t1 = (a + b * zc) / (zc - s1) + b * std::log(zc - s1);
        acc += t1 - t0;
    }
    return -acc / kPi;
}

double kernel_constant(double l, double alpha, double q, double nu, double t) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("kernel_constant: alpha must lie in (0, 2]");
    if (!(l >= 0.0)) throw std::invalid_argument("kernel_constant: l must be >= 0");
    if (!(nu > 0.0 && t > 0.0))
        throw std::invalid_argument("kernel_constant: nu and t must be positive");
    // Wide grid sized to the kernel scale (nu t)^{1/alpha}.  Gaussian kernels
    // need little room; alpha < 2 kernels have |x|^{-1-alpha-l} tails.
    double scale = std::pow(nu * t, 1.0 / alpha);
    int n;
    double L;
    if (alpha == 2.0) {
        L = 50.0 * std::max(1.0, scale);
        n = 1 << 16;
    } else {
        L = 4000.0 * std::max(1.0, scale);
        n = 1 << 17;
    }
    Grid g = make_grid(n, L);
    SpectralField s{g, std::vector<complex>(n)};
    for (int i = 0; i < n; ++i) {
        double xi = std::abs(g.xi(i));
        s.coeffs[i] = std::pow(xi, l) * std::exp(-nu * t * std::pow(xi, alpha)) / (2.0 * L);
    }
    if (l > 0.0) s.coeffs[0] = 0.0; // |0|^l = 0 for l > 0
    Profile kernel = to_physical(s);
    return lp_norm(kernel, q);
}

} // namespace fracflux
