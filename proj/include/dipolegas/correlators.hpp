#pragma once

#include <stdexcept>

#include "dipolegas/specfun.hpp"

// Renormalized electric-field two-point functions near a perfectly conducting
// wall at finite temperature, split into wall (vc), blackbody (th) and mixed
// (mx) pieces, plus the two closed-form double-time integrals they generate.

namespace dipolegas {

enum class Axis { X, Y, Z };

// Point separations entering the correlators. dt carries the +i*eps
// regularization of the time difference; dz = z - z', dzh = z + z'.
struct Separation {
    Complex dt{0.0, 0.0};
    double dx = 0.0;
    double dy = 0.0;
    double dz = 0.0;
    double dzh = 0.0;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Wall (image) part of <E_axis E_axis>. Pole on the light cone
// dt^2 = dx^2 + dy^2 + dzh^2 when eps = 0.
Complex corr_vc(Axis axis, const Separation& sep);

// Thermal image sum over n >= 1, truncated once the tail bound drops below
// tol (both relative and absolute). Uses dz, not dzh.
double corr_th(Axis axis, const Separation& sep, double beta, double tol = 1e-10);

// Mixed (wall x thermal) image sum; as corr_th with dz -> dzh and the
// wall reflection signs.
double corr_mx(Axis axis, const Separation& sep, double beta, double tol = 1e-10);

// int_0^tau int_0^tau dt dt' [(Dt)^2 - b^2] / [(Dt)^2 - c^2]^3, Dt = t - t'.
// Pole at tau = c.
double int2_vacuum(double b, double c, double tau);

// sum_{n>=1} int_0^tau int_0^tau dt dt' [(Dt - i n beta)^2 - b^2] /
// [(Dt - i n beta)^2 - c^2]^3, via s(a,b) combinations.
double int2_thermal(double b, double c, double tau, double beta);

// s(a,b) = -psi^(0)(a)/b + 2 psi^(-1)(a+b)/b^2 - 2[psi^(-2)(a+b)-psi^(-2)(a)]/b^3.
// Switches to a Taylor series in b for |b| < 1e-3 (removable singularity).
Complex s_func(Complex a, Complex b);

// d s(a,b) / db, same series switch.
Complex s_func_db(Complex a, Complex b);

} // namespace dipolegas
