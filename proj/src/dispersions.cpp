#include "dipolegas/dispersions.hpp"

#include <cmath>

namespace dipolegas {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPi2 = kPi * kPi;

// Taylor coefficients of f and g in u = pi tau/beta (powers u^2..u^12),
// used below u = 0.3 where the closed forms cancel catastrophically.
constexpr double kFSeries[] = {0.95238095238095238, -0.33333333333333333,
                               0.080808080808080808, -0.016070701784987499,
                               0.0028218694885361010, -0.00045484411497166542};
constexpr double kGSeries[] = {0.2, -0.031746031746031746,
                               0.0044444444444444444, -0.00057720057720057720,
                               0.000071425341266610801, -8.5511196622128074e-6};
constexpr double kSeriesSwitchU = 0.3;

double even_series(const double* c, int n, double u) {
    const double u2 = u * u;
    double acc = 0.0, p = u2;
    for (int k = 0; k < n; ++k) {
        acc += c[k] * p;
        p *= u2;
    }
    return acc;
}

void check_eta(double eta) {
    if (std::abs(eta - 1.0) < kEtaSingularWindow)
        throw SingularTimeError("dispersion singular at tau = 2z (eta = 1)");
}

double log_ratio(double eta) { return std::log(std::abs((eta + 1.0) / (eta - 1.0))); }

struct ThetaWeights {
    double cos2, sin2;
};
ThetaWeights theta_weights(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * c, s * s};
}

} // namespace

void Environment::validate() const {
    if (contrib.thermal && !beta)
        throw std::invalid_argument("Environment: thermal contribution requires finite beta");
    if (contrib.vacuum && !z)
        throw std::invalid_argument("Environment: vacuum contribution requires finite z");
    if (contrib.mixed && !(beta && z))
        throw std::invalid_argument("Environment: mixed contribution requires finite beta and z");
    if (beta && !(*beta > 0.0))
        throw std::invalid_argument("Environment: beta must be positive");
    if (z && !(*z > 0.0))
        throw std::invalid_argument("Environment: z must be positive");
}

double f_beta(double x) {
    if (!(x >= 0.0)) throw std::domain_error("f_beta: x >= 0 required");
    if (x == 0.0) return 0.0;
    const double u = kPi * x;
    if (u < kSeriesSwitchU) return even_series(kFSeries, 6, u);
    const double u2 = u * u;
    return 1.0 + 45.0 / (u2 * u2) - 15.0 * cosh2_csch4(u);
}

double g_beta(double x) {
    if (!(x >= 0.0)) throw std::domain_error("g_beta: x >= 0 required");
    if (x == 0.0) return 0.0;
    const double u = kPi * x;
    if (u < kSeriesSwitchU) return even_series(kGSeries, 6, u);
    return 1.0 - 3.0 / (u * u) + 3.0 * csch2(u);
}

VacuumShapes vacuum_shape_functions(double eta) {
    if (!(eta >= 0.0)) throw std::domain_error("vacuum_shape_functions: eta >= 0 required");
    check_eta(eta);
    if (eta == 0.0) return {0, 0, 0, 0, 0, 0, 0};
    const double e2 = eta * eta;
    const double L = log_ratio(eta);
    const double d = e2 - 1.0;
    VacuumShapes s;
    s.vx_par = 0.25 * (e2 * (7.0 - 5.0 * e2) / (d * d) + 4.5 * eta * L);
    s.vx_perp = -e2 / d + 1.5 * eta * L;
    s.vy_par = 0.25 * (e2 * (5.0 - 3.0 * e2) / (d * d) + 1.5 * eta * L);
    s.vz_par = e2 * (7.0 - 8.0 * e2 + 3.0 * e2 * e2) / (-d * d * d) + 1.5 * eta * L;
    s.vz_perp = e2 * (4.0 - 3.0 * e2) / (d * d) + 3.0 * eta * L;
    s.w_par = eta * L;
    s.w_perp = -e2 / d + 0.5 * eta * L;
    return s;
}

std::vector<Complex> mixed_f(double z, double tau, double beta, int n_z_derivs) {
    if (!(z > 0.0) || !(beta > 0.0))
        throw std::domain_error("mixed_f: z > 0 and beta > 0 required");
    if (n_z_derivs < 0 || n_z_derivs > 4)
        throw std::invalid_argument("mixed_f: n_z_derivs in [0, 4]");
    const Complex i{0.0, 1.0};
    const Complex u0 = 1.0 + 2.0 * i * z / beta;
    const Complex um = 1.0 + i * (2.0 * z - tau) / beta;
    const Complex up = 1.0 + i * (2.0 * z + tau) / beta;
    std::vector<Complex> out;
    out.reserve(n_z_derivs + 1);
    Complex ladder{1.0, 0.0};
    for (int n = 0; n <= n_z_derivs; ++n) {
        out.push_back(ladder * (2.0 * polygamma(n - 2, u0) - polygamma(n - 2, um) -
                                polygamma(n - 2, up)));
        ladder *= 2.0 * i / beta;
    }
    return out;
}

MixedShapes mixed_shape_functions(double z, double tau, double beta) {
    const auto f = mixed_f(z, tau, beta, 4);
    const double z2 = z * z, z3 = z2 * z, z4 = z3 * z;
    auto comb = [&](double c0, double c1, double c2, double c3, double c4) {
        return (c0 * f[0] + c1 * z * f[1] + c2 * z2 * f[2] + c3 * z3 * f[3] +
                c4 * z4 * f[4]).imag();
    };
    const double bz = beta / z;
    MixedShapes s;
    s.vx_par = 0.25 * bz * comb(9.0, -9.0, 4.0, -1.0, 0.0);
    s.vx_perp = bz * comb(3.0, -3.0, 1.0, 0.0, 0.0);
    s.vy_par = 0.25 * bz * comb(3.0, -3.0, 2.0, -1.0, 0.0);
    s.vz_par = bz * comb(3.0, -3.0, 1.75, -0.75, 0.25);
    s.vz_perp = 2.0 * bz * comb(3.0, -3.0, 1.25, -0.25, 0.0);
    s.w_par = 2.0 * bz * comb(1.0, -1.0, 0.0, 0.0, 0.0);
    s.w_perp = bz * comb(1.0, -1.0, 1.0, 0.0, 0.0);
    return s;
}

DispersionBreakdown thermal_dispersions(const DipoleParams& dp, double beta, double tau) {
    if (!(beta > 0.0) || !(tau >= 0.0))
        throw std::domain_error("thermal_dispersions: beta > 0, tau >= 0 required");
    const double p2 = dp.p * dp.p;
    const double I = dp.inertia();
    const double b2 = beta * beta, b4 = b2 * b2;
    // <v^2> = 5 <v_par^2>, transverse components twice the parallel one;
    // lab frame via rotation of diag(2,2,1) <v_par^2> about y by theta.
    const double v_par = 2.0 * kPi2 * p2 * f_beta(tau / beta) / (45.0 * dp.m * dp.m * b4) / 5.0;
    const double w_each = p2 * g_beta(tau / beta) / (9.0 * I * I * b2);
    const auto w = theta_weights(dp.theta);
    DispersionBreakdown out;
    out.vx.thermal = v_par * (1.0 + w.sin2);
    out.vy.thermal = 2.0 * v_par;
    out.vz.thermal = v_par * (1.0 + w.cos2);
    out.wx.thermal = w_each;
    out.wy.thermal = w_each;
    return out;
}

Vec3 vacuum_velocity_dispersions(const DipoleParams& dp, double z, double tau) {
    if (!(z > 0.0) || !(tau >= 0.0))
        throw std::domain_error("vacuum_velocity_dispersions: z > 0, tau >= 0 required");
    const auto s = vacuum_shape_functions(tau / (2.0 * z));
    const double z4 = z * z * z * z;
    const double pref = dp.p * dp.p / (8.0 * kPi2 * dp.m * dp.m * z4);
    const auto w = theta_weights(dp.theta);
    Vec3 v;
    v.x = pref * (s.vx_par * w.cos2 + s.vx_perp * w.sin2);
    // the perpendicular configuration is x<->y symmetric; v_y reuses vx_perp
    v.y = pref * (s.vy_par * w.cos2 + s.vx_perp * w.sin2);
    v.z = pref * (s.vz_par * w.cos2 + s.vz_perp * w.sin2);
    return v;
}

AngularPair vacuum_angular_dispersions(const DipoleParams& dp, double z, double tau) {
    if (!(z > 0.0) || !(tau >= 0.0))
        throw std::domain_error("vacuum_angular_dispersions: z > 0, tau >= 0 required");
    const auto s = vacuum_shape_functions(tau / (2.0 * z));
    const double I = dp.inertia();
    const double pref = dp.p * dp.p / (8.0 * I * I * kPi2 * z * z);
    const auto w = theta_weights(dp.theta);
    AngularPair a;
    a.wx = pref * (s.w_par * w.cos2 + s.w_perp * w.sin2);
    a.wy = pref * s.w_perp;
    return a;
}

Vec3 mixed_velocity_dispersions(const DipoleParams& dp, double z, double tau, double beta) {
    if (!(tau >= 0.0)) throw std::domain_error("mixed_velocity_dispersions: tau >= 0 required");
    const auto s = mixed_shape_functions(z, tau, beta);
    const double z4 = z * z * z * z;
    const double pref = dp.p * dp.p / (16.0 * kPi2 * dp.m * dp.m * z4);
    const auto w = theta_weights(dp.theta);
    Vec3 v;
    v.x = pref * (s.vx_par * w.cos2 + s.vx_perp * w.sin2);
    v.y = pref * (s.vy_par * w.cos2 + s.vx_perp * w.sin2);
    v.z = pref * (s.vz_par * w.cos2 + s.vz_perp * w.sin2);
    return v;
}

AngularPair mixed_angular_dispersions(const DipoleParams& dp, double z, double tau, double beta) {
    if (!(tau >= 0.0)) throw std::domain_error("mixed_angular_dispersions: tau >= 0 required");
    const auto s = mixed_shape_functions(z, tau, beta);
    const double I = dp.inertia();
    const double pref = dp.p * dp.p / (16.0 * I * I * kPi2 * z * z);
    const auto w = theta_weights(dp.theta);
    AngularPair a;
    a.wx = pref * (s.w_par * w.cos2 + s.w_perp * w.sin2);
    a.wy = pref * s.w_perp;
    return a;
}

DispersionBreakdown total_dispersions(const DipoleParams& dp, const Environment& env,
                                      double tau) {
    env.validate();
    DispersionBreakdown out;
    if (env.contrib.thermal) {
        out = thermal_dispersions(dp, *env.beta, tau);
    }
    if (env.contrib.vacuum) {
        const auto v = vacuum_velocity_dispersions(dp, *env.z, tau);
        const auto a = vacuum_angular_dispersions(dp, *env.z, tau);
        out.vx.vacuum = v.x;
        out.vy.vacuum = v.y;
        out.vz.vacuum = v.z;
        out.wx.vacuum = a.wx;
        out.wy.vacuum = a.wy;
    }
    if (env.contrib.mixed) {
        const auto v = mixed_velocity_dispersions(dp, *env.z, tau, *env.beta);
        const auto a = mixed_angular_dispersions(dp, *env.z, tau, *env.beta);
        out.vx.mixed = v.x;
        out.vy.mixed = v.y;
        out.vz.mixed = v.z;
        out.wx.mixed = a.wx;
        out.wy.mixed = a.wy;
    }
    return out;
}

} // namespace dipolegas
