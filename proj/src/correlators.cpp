#include "dipolegas/correlators.hpp"

#include <cmath>

namespace dipolegas {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPi2 = kPi * kPi;
constexpr double kSeriesSwitch = 1e-3; // |b| below which s(a,b) uses its series
constexpr int kMaxImageTerms = 100000;

// Image-sum term N/D^3 for a given displaced time dtn and z-type separation.
// The x<->y exchange rule is encoded in the numerator signs.
Complex image_term(Axis axis, Complex dtn, double dx, double dy, double dzz) {
    const Complex t2 = dtn * dtn;
    const double x2 = dx * dx, y2 = dy * dy, z2 = dzz * dzz;
    const Complex den = t2 - x2 - y2 - z2;
    Complex num;
    switch (axis) {
        case Axis::X: num = t2 - x2 + y2 + z2; break;
        case Axis::Y: num = t2 + x2 - y2 + z2; break;
        case Axis::Z: num = t2 + x2 + y2 - z2; break;
    }
    return num / (den * den * den);
}

double image_sum(Axis axis, const Separation& sep, double dzz, double beta,
                 double tol, double sign) {
    if (!(beta > 0.0)) throw std::domain_error("image_sum: beta > 0 required");
    if (!(tol > 0.0)) throw std::domain_error("image_sum: tol > 0 required");
    double acc = 0.0;
    double prev_mag = 0.0;
    int rising = 0;
    for (int n = 1; n <= kMaxImageTerms; ++n) {
        const Complex dtn = sep.dt - Complex(0.0, n * beta);
        const double term = image_term(axis, dtn, sep.dx, sep.dy, dzz).real();
        acc += term;
        const double mag = std::abs(term);
        if (n > 1) {
            rising = (mag > prev_mag) ? rising + 1 : 0;
            if (rising >= 3)
                throw ConvergenceError("image_sum: terms not decreasing over 3 consecutive n");
        }
        prev_mag = mag;
        if (n >= 2 && mag < tol * std::abs(acc) && mag < tol)
            break;
    }
    return sign * 2.0 / kPi2 * acc;
}

} // namespace

Complex corr_vc(Axis axis, const Separation& sep) {
    const Complex t2 = sep.dt * sep.dt;
    const double x2 = sep.dx * sep.dx, y2 = sep.dy * sep.dy, h2 = sep.dzh * sep.dzh;
    const Complex den = t2 - x2 - y2 - h2;
    if (std::abs(den) == 0.0)
        throw PoleError("corr_vc: light-cone denominator vanishes");
    Complex num;
    double sign;
    switch (axis) {
        case Axis::X: num = t2 - x2 + y2 + h2; sign = -1.0; break;
        case Axis::Y: num = t2 + x2 - y2 + h2; sign = -1.0; break;
        default:      num = t2 + x2 + y2 - h2; sign = 1.0; break;
    }
    return sign / kPi2 * num / (den * den * den);
}

double corr_th(Axis axis, const Separation& sep, double beta, double tol) {
    return image_sum(axis, sep, sep.dz, beta, tol, 1.0);
}

double corr_mx(Axis axis, const Separation& sep, double beta, double tol) {
    const double sign = (axis == Axis::Z) ? 1.0 : -1.0;
    return image_sum(axis, sep, sep.dzh, beta, tol, sign);
}

double int2_vacuum(double b, double c, double tau) {
    if (!(c > 0.0)) throw std::domain_error("int2_vacuum: c > 0 required");
    if (!(tau >= 0.0)) throw std::domain_error("int2_vacuum: tau >= 0 required");
    if (std::abs(c - tau) < 1e-14 * (c + tau))
        throw PoleError("int2_vacuum: pole at tau = c");
    const double b2 = b * b, c2 = c * c, t2 = tau * tau;
    const double c4 = c2 * c2;
    const double log_sq = 2.0 * std::log(std::abs((c - tau) / (c + tau)));
    return t2 * (b2 - c2) / (4.0 * c4 * (c2 - t2)) -
           (c2 + 3.0 * b2) / (16.0 * c4 * c) * tau * log_sq;
}

Complex s_func(Complex a, Complex b) {
    if (!(a.real() > 0.0) || !((a + b).real() > 0.0))
        throw std::domain_error("s_func: Re(a) > 0 and Re(a+b) > 0 required");
    if (b == Complex(0.0, 0.0))
        throw std::domain_error("s_func: b = 0");
    if (std::abs(b) < kSeriesSwitch) {
        return 2.0 / 3.0 * polygamma(1, a) + 0.25 * polygamma(2, a) * b +
               1.0 / 15.0 * polygamma(3, a) * (b * b) +
               1.0 / 72.0 * polygamma(4, a) * (b * b * b);
    }
    const Complex b2 = b * b, b3 = b2 * b;
    return -polygamma(0, a) / b + 2.0 * polygamma(-1, a + b) / b2 -
           2.0 * (polygamma(-2, a + b) - polygamma(-2, a)) / b3;
}

Complex s_func_db(Complex a, Complex b) {
    if (!(a.real() > 0.0) || !((a + b).real() > 0.0))
        throw std::domain_error("s_func_db: Re(a) > 0 and Re(a+b) > 0 required");
    if (std::abs(b) < kSeriesSwitch) {
        return 0.25 * polygamma(2, a) + 2.0 / 15.0 * polygamma(3, a) * b +
               1.0 / 24.0 * polygamma(4, a) * (b * b);
    }
    const Complex b2 = b * b, b3 = b2 * b, b4 = b3 * b;
    return polygamma(0, a) / b2 + 2.0 * polygamma(0, a + b) / b2 -
           6.0 * polygamma(-1, a + b) / b3 +
           6.0 * (polygamma(-2, a + b) - polygamma(-2, a)) / b4;
}

double int2_thermal(double b, double c, double tau, double beta) {
    if (!(beta > 0.0)) throw std::domain_error("int2_thermal: beta > 0 required");
    if (!(c >= 0.0)) throw std::domain_error("int2_thermal: c >= 0 required");
    const Complex i{0.0, 1.0};
    const Complex a_args[3] = {1.0 + i * tau / beta, 1.0 - i * tau / beta,
                               Complex(1.0, 0.0)};
    const double weights[3] = {1.0, 1.0, -2.0};

    Complex result;
    if (c / beta < kSeriesSwitch) {
        // Small-c limit of the symmetrized bracket:
        // S(c) + S(-c) = (4/3) Psi1 - (2 c^2 / 15 beta^2) Psi3 + O(c^4),
        // with Psi_j the weighted psi^(j) combination over the a-arguments.
        Complex psi1{0.0, 0.0}, psi3{0.0, 0.0};
        for (int k = 0; k < 3; ++k) {
            psi1 += weights[k] * polygamma(1, a_args[k]);
            psi3 += weights[k] * polygamma(3, a_args[k]);
        }
        const double b2 = b * b, c2 = c * c, beta2 = beta * beta;
        const Complex bracket =
            4.0 / 3.0 * psi1 - 2.0 * c2 / (15.0 * beta2) * psi3 -
            (c2 - b2) / (15.0 * beta2) * psi3;
        result = -bracket / (8.0 * beta2);
    } else {
        auto S = [&](double cc) {
            Complex acc{0.0, 0.0};
            for (int k = 0; k < 3; ++k)
                acc += weights[k] * s_func(a_args[k], i * cc / beta);
            return acc;
        };
        auto dS = [&](double cc, double sgn) {
            // d/dc of S evaluated with b-argument sgn * i c / beta
            Complex acc{0.0, 0.0};
            for (int k = 0; k < 3; ++k)
                acc += weights[k] * (sgn * i / beta) *
                       s_func_db(a_args[k], sgn * i * cc / beta);
            return acc;
        };
        const Complex bracket = S(c) + S(-c);
        const Complex dbracket = dS(c, 1.0) + dS(c, -1.0);
        result = -(bracket + (c * c - b * b) / (4.0 * c) * dbracket) /
                 (8.0 * beta * beta);
    }
    return result.real();
}

} // namespace dipolegas
