#pragma once

#include <optional>
#include <vector>

#include "dipolegas/specfun.hpp"

// Closed-form velocity and angular-velocity dispersions of an electric dipole
// in a thermal photon gas near a conducting wall: thermal, wall (vacuum) and
// mixed contributions, per lab-frame velocity component and per body-frame
// angular component.

namespace dipolegas {

// Half-width of the excluded window around the light-crossing time eta = 1.
inline constexpr double kEtaSingularWindow = 1e-9;

class SingularTimeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DipoleParams {
    double p;      // dipole moment
    double m;      // mass
    double a;      // bond length; moment of inertia I = m a^2 / 4
    double theta;  // angle between p and the wall plane, in [0, pi/2]

    DipoleParams(double p_, double m_, double a_, double theta_)
        : p(p_), m(m_), a(a_), theta(theta_) {
        if (!(p > 0.0) || !(m > 0.0) || !(a > 0.0))
            throw std::invalid_argument("DipoleParams: p, m, a must be positive");
    }
    double inertia() const { return m * a * a / 4.0; }
};

struct Contributions {
    bool thermal = true;
    bool vacuum = true;
    bool mixed = true;
};

// beta/z use std::nullopt as the "infinite" sentinel (T = 0 / no wall).
struct Environment {
    std::optional<double> beta;
    std::optional<double> z;
    Contributions contrib;

    // Throws if an active contribution lacks its parameter.
    void validate() const;
};

struct ContributionSplit {
    double thermal = 0.0;
    double vacuum = 0.0;
    double mixed = 0.0;
    double total() const { return thermal + vacuum + mixed; }
};

struct DispersionBreakdown {
    ContributionSplit vx, vy, vz;  // lab-frame <v_i^2>
    ContributionSplit wx, wy;      // body-frame <w_x'^2>, <w_y'^2>
};

// Dimensionless thermal auxiliary functions of x = tau/beta.
double f_beta(double x);
double g_beta(double x);

// Shape functions (dimensionless, prefactors stripped).
struct VacuumShapes {
    double vx_par, vx_perp, vy_par, vz_par, vz_perp;  // translational
    double w_par, w_perp;                             // angular
};
VacuumShapes vacuum_shape_functions(double eta);

struct MixedShapes {
    double vx_par, vx_perp, vy_par, vz_par, vz_perp;
    double w_par, w_perp;
};
MixedShapes mixed_shape_functions(double z, double tau, double beta);

// f = 2 psi^(-2)(u0) - psi^(-2)(u-) - psi^(-2)(u+) with u0 = 1 + 2iz/beta,
// u-/+ = 1 + i(2z -/+ tau)/beta, and its z-derivatives
// d^n f/dz^n = (2i/beta)^n [2 psi^(n-2)(u0) - psi^(n-2)(u-) - psi^(n-2)(u+)].
// Returns {f, df/dz, ..., d^n f/dz^n}, n_z_derivs <= 4.
std::vector<Complex> mixed_f(double z, double tau, double beta, int n_z_derivs);

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};
struct AngularPair {
    double wx = 0.0, wy = 0.0;
};

// Thermal parts (lab frame; primed-frame diag(2,2,1) tensor rotated by theta).
DispersionBreakdown thermal_dispersions(const DipoleParams& dp, double beta, double tau);

Vec3 vacuum_velocity_dispersions(const DipoleParams& dp, double z, double tau);
AngularPair vacuum_angular_dispersions(const DipoleParams& dp, double z, double tau);

Vec3 mixed_velocity_dispersions(const DipoleParams& dp, double z, double tau, double beta);
AngularPair mixed_angular_dispersions(const DipoleParams& dp, double z, double tau, double beta);

// Sums the contributions enabled in env; inactive parts are exact zeros.
DispersionBreakdown total_dispersions(const DipoleParams& dp, const Environment& env,
                                      double tau);

} // namespace dipolegas
