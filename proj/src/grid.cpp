//==============================================================================
// grid.cpp
// FFT-backed transforms (FFTW, complex-to-complex), mollifier, norms and the
// stock initial-data profiles.  Plan creation is serialized behind a mutex so
// all operations stay safe for concurrent use; execution uses the new-array
// interface on fftw_malloc'ed scratch buffers.
//==============================================================================
#include "fracflux/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fracflux {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::mutex planner_mutex;

fftw_plan plan_for(int n, int sign) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(planner_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    fftw_complex* buf = fftw_alloc_complex(n);
    fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
    fftw_free(buf);
    cache.emplace(key, p);
    return p;
}

struct FftwBuffer {
    fftw_complex* data;
    explicit FftwBuffer(int n) : data(fftw_alloc_complex(n)) {}
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
};

} // namespace

Grid make_grid(int n, double half_length) {
    if (n < 8 || n % 2 != 0)
        throw std::invalid_argument("grid: n_points must be even and >= 8");
    if (!(half_length > 0))
        throw std::invalid_argument("grid: half_length must be positive");
    return Grid{n, half_length};
}

Profile make_profile(const Grid& grid, std::vector<double> values) {
    if (static_cast<int>(values.size()) != grid.n)
        throw std::invalid_argument("profile: values length != n_points");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("profile: non-finite value");
    return Profile{grid, std::move(values)};
}

SpectralField to_spectral(const Profile& p) {
    const int n = p.grid.n;
    FftwBuffer buf(n);
    for (int j = 0; j < n; ++j) {
        buf.data[j][0] = p.values[j];
        buf.data[j][1] = 0.0;
    }
    fftw_execute_dft(plan_for(n, FFTW_FORWARD), buf.data, buf.data);
    // FFT computes sum_j v_j e^{-2 pi i k j / n}; nodes start at -L, so the
    // series coefficient picks up the phase (-1)^k, and 1/n normalizes.
    SpectralField s{p.grid, std::vector<complex>(n)};
    for (int i = 0; i < n; ++i) {
        double sign = (p.grid.wavenumber(i) % 2 == 0) ? 1.0 : -1.0;
        s.coeffs[i] = sign / n * complex(buf.data[i][0], buf.data[i][1]);
    }
    return s;
}

Profile to_physical(const SpectralField& s) {
    const int n = s.grid.n;
    FftwBuffer buf(n);
    for (int i = 0; i < n; ++i) {
        double sign = (s.grid.wavenumber(i) % 2 == 0) ? 1.0 : -1.0;
        complex c = sign * s.coeffs[i];
        buf.data[i][0] = c.real();
        buf.data[i][1] = c.imag();
    }
    fftw_execute_dft(plan_for(n, FFTW_BACKWARD), buf.data, buf.data);
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = buf.data[j][0];
    return Profile{s.grid, std::move(v)};
}

Profile mollify(const Profile& p, double h) {
    if (!(h > 0)) throw std::invalid_argument("mollify: width h must be positive");
    const int n = p.grid.n;
    const double dx = p.grid.dx();
    // Discrete Gaussian, truncated at 6h, renormalized to unit discrete mass.
    int m = std::min(n / 2, static_cast<int>(std::ceil(6.0 * h / dx)));
    std::vector<double> w(2 * m + 1);
    double sum = 0.0;
    for (int k = -m; k <= m; ++k) {
        double u = k * dx / h;
        w[k + m] = std::exp(-0.5 * u * u);
        sum += w[k + m];
    }
    for (double& x : w) x /= sum;
    std::vector<double> out(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int k = -m; k <= m; ++k) {
            int idx = j - k;
            idx %= n;
            if (idx < 0) idx += n;
            acc += w[k + m] * p.values[idx];
        }
        out[j] = acc;
    }
    return Profile{p.grid, std::move(out)};
}

double mass(const Profile& p) {
    // Periodic trapezoid rule = plain sum * dx.
    double s = 0.0;
    for (double v : p.values) s += v;
    return s * p.grid.dx();
}

double lp_norm(const Profile& p, double q) {
    if (q == lp_inf) {
        double m = 0.0;
        for (double v : p.values) m = std::max(m, std::abs(v));
        return m;
    }
    if (!(q >= 1)) throw std::invalid_argument("lp_norm: q must be >= 1 or inf");
    double s = 0.0;
    for (double v : p.values) s += std::pow(std::abs(v), q);
    return std::pow(s * p.grid.dx(), 1.0 / q);
}

Profile make_semicircle(const Grid& grid) {
    return sample(grid, [](double x) {
        double r = 4.0 - x * x;
        return r > 0 ? std::sqrt(r) / (2.0 * kPi) : 0.0;
    });
}

Profile make_gaussian(const Grid& grid, double sigma) {
    if (!(sigma > 0)) throw std::invalid_argument("gaussian: sigma must be positive");
    double a = 1.0 / (sigma * std::sqrt(2.0 * kPi));
    return sample(grid, [=](double x) { return a * std::exp(-0.5 * x * x / (sigma * sigma)); });
}

Profile make_cauchy(const Grid& grid, double eps, double total_mass) {
    if (!(eps > 0)) throw std::invalid_argument("cauchy: eps must be positive");
    return sample(grid, [=](double x) { return total_mass / kPi * eps / (eps * eps + x * x); });
}

Profile normalize_mass(const Profile& p, double m) {
    double cur = mass(p);
    if (cur == 0) throw std::invalid_argument("normalize_mass: zero-mass profile");
    Profile out = p;
    for (double& v : out.values) v *= m / cur;
    return out;
}

} // namespace fracflux
