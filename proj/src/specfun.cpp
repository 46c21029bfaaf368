#include "dipolegas/specfun.hpp"

#include <array>
#include <cmath>

namespace dipolegas {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093454836;
// log of the Glaisher-Kinkelin constant, = 1/12 - zeta'(-1)
constexpr double kLogGlaisher = 0.24875447703378426255;

// Even Bernoulli numbers B_2, B_4, ..., B_20.
constexpr std::array<double, 10> kBernoulli2k = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0};

// |z| above which the Stirling-type expansions are used directly.
constexpr double kAsymptoticRadius = 12.0;

Complex ipow(Complex z, int n) {
    Complex r{1.0, 0.0};
    for (int k = 0; k < n; ++k) r *= z;
    return r;
}

void require_right_half_plane(Complex z, const char* who) {
    if (!(z.real() > 0.0))
        throw std::domain_error(std::string(who) + ": Re(z) > 0 required");
}

// Stirling series for lnGamma, |z| >= kAsymptoticRadius, Re(z) > 0.
Complex log_gamma_asym(Complex z) {
    const Complex lz = std::log(z);
    Complex sum = (z - 0.5) * lz - z + 0.5 * kLog2Pi;
    const Complex z2 = z * z;
    Complex zp = z;
    for (std::size_t k = 1; k <= kBernoulli2k.size(); ++k) {
        const double n = 2.0 * static_cast<double>(k);
        sum += kBernoulli2k[k - 1] / (n * (n - 1.0)) / zp;
        zp *= z2;
    }
    return sum;
}

// Asymptotic series for psi^(-2); constant fixed by the Glaisher constant.
Complex psi_m2_asym(Complex z) {
    const Complex lz = std::log(z);
    const Complex z2 = z * z;
    Complex sum = kLogGlaisher + lz / 12.0 + 0.5 * z * (1.0 + kLog2Pi) -
                  0.5 * z * lz + 0.5 * z2 * lz - 0.75 * z2;
    // - sum_{k>=2} B_2k / (2k (2k-1)(2k-2)) z^{-(2k-2)}
    Complex zp = z2;
    for (std::size_t k = 2; k <= kBernoulli2k.size(); ++k) {
        const double n = 2.0 * static_cast<double>(k);
        sum -= kBernoulli2k[k - 1] / (n * (n - 1.0) * (n - 2.0)) / zp;
        zp *= z2;
    }
    return sum;
}

// Digamma asymptotic.
Complex digamma_asym(Complex z) {
    const Complex z2 = z * z;
    Complex sum = std::log(z) - 0.5 / z;
    Complex zp = z2;
    for (std::size_t k = 1; k <= kBernoulli2k.size(); ++k) {
        sum -= kBernoulli2k[k - 1] / (2.0 * static_cast<double>(k)) / zp;
        zp *= z2;
    }
    return sum;
}

// psi^(j), j >= 1, asymptotic:
// (-1)^(j-1) [ (j-1)!/z^j + j!/(2 z^{j+1}) + sum_k B_2k (2k+j-1)!/((2k)! z^{2k+j}) ]
Complex polygamma_asym(int j, Complex z) {
    double fact_jm1 = 1.0;
    for (int i = 2; i <= j - 1; ++i) fact_jm1 *= i;
    const double fact_j = fact_jm1 * j;

    const Complex zj = ipow(z, j);
    Complex sum = fact_jm1 / zj + 0.5 * fact_j / (zj * z);
    const Complex z2 = z * z;
    Complex zp = zj * z2;
    for (std::size_t k = 1; k <= kBernoulli2k.size(); ++k) {
        // ratio = (2k+j-1)! / (2k)!
        double ratio = 1.0;
        for (int i = 1; i <= j - 1; ++i) ratio *= (2.0 * static_cast<double>(k) + i);
        sum += kBernoulli2k[k - 1] * ratio / zp;
        zp *= z2;
    }
    return (j % 2 == 0) ? -sum : sum;
}

} // namespace

Complex log_gamma(Complex z) {
    require_right_half_plane(z, "log_gamma");
    Complex shift{0.0, 0.0};
    while (std::abs(z) < kAsymptoticRadius || z.real() < 1.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return log_gamma_asym(z) - shift;
}

namespace {

Complex psi_m2(Complex z) {
    // Raabe shift: psi^(-2)(z+1) - psi^(-2)(z) = z ln z - z + ln(2 pi)/2
    Complex shift{0.0, 0.0};
    while (std::abs(z) < kAsymptoticRadius || z.real() < 1.0) {
        shift += z * std::log(z) - z + 0.5 * kLog2Pi;
        z += 1.0;
    }
    return psi_m2_asym(z) - shift;
}

Complex digamma(Complex z) {
    Complex shift{0.0, 0.0};
    while (std::abs(z) < kAsymptoticRadius || z.real() < 1.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    return digamma_asym(z) - shift;
}

Complex polygamma_pos(int j, Complex z) {
    // psi^(j)(z) = psi^(j)(z+1) - (-1)^j j! / z^{j+1}
    double fact_j = 1.0;
    for (int i = 2; i <= j; ++i) fact_j *= i;
    const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    Complex shift{0.0, 0.0};
    while (std::abs(z) < kAsymptoticRadius || z.real() < 1.0) {
        shift += sgn * fact_j / ipow(z, j + 1);
        z += 1.0;
    }
    return polygamma_asym(j, z) - shift;
}

} // namespace

Complex polygamma(PolygammaOrder order, Complex z) {
    require_right_half_plane(z, "polygamma");
    switch (order.j) {
        case -2: return psi_m2(z);
        case -1: return log_gamma(z);
        case 0: return digamma(z);
        default: return polygamma_pos(order.j, z);
    }
}

double csch(double x) { return 1.0 / std::sinh(x); }

double csch2(double x) {
    if (x > 20.0) {
        const double e = std::exp(-2.0 * x);
        const double d = 1.0 - e;
        return 4.0 * e / (d * d);
    }
    const double c = csch(x);
    return c * c;
}

double cosh2_csch4(double x) {
    if (x > 20.0) {
        const double e2 = std::exp(-2.0 * x);
        const double e4 = e2 * e2;
        const double e6 = e4 * e2;
        const double d = 1.0 - e2;
        const double d2 = d * d;
        // 16 e^{-4x} (2 + cosh 2x) = 32 e^{-4x} + 8 (e^{-2x} + e^{-6x})
        return (32.0 * e4 + 8.0 * (e2 + e6)) / (d2 * d2);
    }
    const double c2 = csch2(x);
    return (2.0 + std::cosh(2.0 * x)) * c2 * c2;
}

} // namespace dipolegas
