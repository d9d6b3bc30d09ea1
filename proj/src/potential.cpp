#include "ljopt/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace ljopt {

namespace {
constexpr double kCoincidentDist2 = 1e-24;
}

double pair_energy(double r) {
    if (!(r > 0.0)) throw std::domain_error("pair_energy: separation must be positive");
    const double inv2 = 1.0 / (r * r);
    const double inv6 = inv2 * inv2 * inv2;
    return 4.0 * inv6 * (inv6 - 1.0);
}

double pair_energy_derivative(double r) {
    if (!(r > 0.0)) throw std::domain_error("pair_energy_derivative: separation must be positive");
    const double inv = 1.0 / r;
    const double inv2 = inv * inv;
    const double inv6 = inv2 * inv2 * inv2;
    // 4(-12 r^-13 + 6 r^-7)
    return 4.0 * inv6 * inv * (6.0 - 12.0 * inv6);
}

double total_energy(const Configuration& config) {
    const std::size_t n = config.size();
    if (n < 2) throw std::domain_error("total_energy: need at least two particles");
    double e = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double r2 = distance2(config[i], config[j]);
            if (r2 < kCoincidentDist2)
                throw std::domain_error("total_energy: coincident particles");
            const double inv2 = 1.0 / r2;
            const double inv6 = inv2 * inv2 * inv2;
            e += 4.0 * inv6 * (inv6 - 1.0);
        }
    }
    return e;
}

void gradient(const Configuration& config, std::vector<double>& out) {
    const std::size_t n = config.size();
    if (n < 2) throw std::domain_error("gradient: need at least two particles");
    out.assign(3 * n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec3 d = config[i] - config[j];
            const double r2 = d.norm2();
            if (r2 < kCoincidentDist2)
                throw std::domain_error("gradient: coincident particles");
            const double inv2 = 1.0 / r2;
            const double inv6 = inv2 * inv2 * inv2;
            // (dv/dr)/r = 24 r^-8 (1 - 2 r^-6)
            const double coef = 24.0 * inv2 * inv6 * (1.0 - 2.0 * inv6);
            out[3 * i] += coef * d.x;
            out[3 * i + 1] += coef * d.y;
            out[3 * i + 2] += coef * d.z;
            out[3 * j] -= coef * d.x;
            out[3 * j + 1] -= coef * d.y;
            out[3 * j + 2] -= coef * d.z;
        }
    }
}

std::vector<double> gradient(const Configuration& config) {
    std::vector<double> g;
    gradient(config, g);
    return g;
}

}  // namespace ljopt
