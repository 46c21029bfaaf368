#pragma once

#include <complex>
#include <stdexcept>

// Complex-argument log-gamma and polygamma functions on the right half-plane,
// including the antiderivative orders psi^(-1) = lnGamma and
// psi^(-2)(z) = int_0^z lnGamma(t) dt.

namespace dipolegas {

using Complex = std::complex<double>;

// Valid derivative order for polygamma(): j in [-2, 4].
struct PolygammaOrder {
    explicit PolygammaOrder(int order) : j(order) {
        if (j < -2 || j > 4)
            throw std::invalid_argument("PolygammaOrder: order must be in [-2, 4]");
    }
    int j;
};

// Principal branch of lnGamma(z), Re(z) > 0.
Complex log_gamma(Complex z);

// psi^(j)(z) for j in [-2, 4], Re(z) > 0.
//   j = -2 : int_0^z lnGamma(t) dt (straight path)
//   j = -1 : lnGamma(z)
//   j =  0 : digamma
//   j >= 1 : j-th derivative of digamma
Complex polygamma(PolygammaOrder j, Complex z);
inline Complex polygamma(int j, Complex z) { return polygamma(PolygammaOrder(j), z); }

// Overflow-safe hyperbolic helpers.
double csch(double x);
// (2 + cosh(2x)) * csch(x)^4, finite for all x > 0.
double cosh2_csch4(double x);
// csch(x)^2
double csch2(double x);

} // namespace dipolegas
