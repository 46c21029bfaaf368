#include "dipolegas/energy.hpp"

#include <cmath>

namespace dipolegas {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPi2 = kPi * kPi;

EnergyBreakdown assemble(const DipoleParams& dp, const DispersionBreakdown& d) {
    const double I = dp.inertia();
    EnergyBreakdown e;
    e.translational.thermal = 0.5 * dp.m * (d.vx.thermal + d.vy.thermal + d.vz.thermal);
    e.translational.vacuum = 0.5 * dp.m * (d.vx.vacuum + d.vy.vacuum + d.vz.vacuum);
    e.translational.mixed = 0.5 * dp.m * (d.vx.mixed + d.vy.mixed + d.vz.mixed);
    e.rotational.thermal = 0.5 * I * (d.wx.thermal + d.wy.thermal);
    e.rotational.vacuum = 0.5 * I * (d.wx.vacuum + d.wy.vacuum);
    e.rotational.mixed = 0.5 * I * (d.wx.mixed + d.wy.mixed);
    return e;
}

double mixed_energy_at(const DipoleParams& dp, double z, double beta, double tau) {
    Environment env;
    env.beta = beta;
    env.z = z;
    env.contrib = {false, false, true};
    const auto e = assemble(dp, total_dispersions(dp, env, tau));
    return e.translational.mixed + e.rotational.mixed;
}

} // namespace

EnergyBreakdown kinetic_energy(const DipoleParams& dp, const Environment& env, double tau) {
    return assemble(dp, total_dispersions(dp, env, tau));
}

EnergyBreakdown residual_energy(const DipoleParams& dp, const Environment& env,
                                double tau_resid) {
    env.validate();
    const double p2 = dp.p * dp.p;
    EnergyBreakdown e;
    if (env.contrib.thermal) {
        const double beta = *env.beta;
        const double b4 = beta * beta * beta * beta;
        const double gamma = beta / dp.a;
        e.translational.thermal = p2 / (dp.m * b4) * kPi2 / 45.0;
        e.rotational.thermal = p2 / (dp.m * b4) * 4.0 * gamma * gamma / 9.0;
    }
    if (env.contrib.vacuum) {
        const double z = *env.z;
        const double z4 = z * z * z * z;
        const double cos2t = std::cos(2.0 * dp.theta);
        const double pref = p2 / (16.0 * kPi2 * dp.m * z4);
        e.translational.vacuum = pref * (4.0 - 3.0 * cos2t);
        e.rotational.vacuum = pref * 4.0 * z * z / (dp.a * dp.a) * (1.0 + cos2t);
    }
    if (env.contrib.mixed) {
        const double z = *env.z, beta = *env.beta;
        const double k_full = mixed_energy_at(dp, z, beta, 2.0 * z * tau_resid);
        const double k_half = mixed_energy_at(dp, z, beta, z * tau_resid);
        const double scale = std::max(std::abs(k_full), 1e-300);
        if (std::abs(k_full - k_half) > 1e-6 * scale)
            throw ResidualConvergenceError(
                "residual_energy: mixed residual not converged at tau_resid", k_full, k_half);
        // split: recompute parts at the converged time
        Environment menv;
        menv.beta = beta;
        menv.z = z;
        menv.contrib = {false, false, true};
        const auto em = assemble(dp, total_dispersions(dp, menv, 2.0 * z * tau_resid));
        e.translational.mixed = em.translational.mixed;
        e.rotational.mixed = em.rotational.mixed;
    }
    return e;
}

CoolingScanResult cooling_scan(const DipoleParams& dp, double theta,
                               const std::vector<double>& ratio_grid,
                               double tau_resid, BondConvention bond) {
    const double z = 1.0;
    auto delta_k = [&](double ratio) {
        const double beta = ratio * z;
        const double a = (bond == BondConvention::equal_beta) ? beta : dp.a;
        DipoleParams loc(dp.p, dp.m, a, theta);
        Environment env;
        env.beta = beta;
        env.z = z;
        env.contrib = {true, true, true};
        const auto e = residual_energy(loc, env, tau_resid);
        // <K> - <K>_th = vacuum + mixed residuals
        const double diff = e.translational.vacuum + e.rotational.vacuum +
                            e.translational.mixed + e.rotational.mixed;
        const double b2 = beta * beta;
        return diff * dp.m * b2 * b2 / (dp.p * dp.p);
    };

    CoolingScanResult res;
    res.points.reserve(ratio_grid.size());
    for (double r : ratio_grid) res.points.push_back({r, delta_k(r)});

    for (std::size_t k = 0; k + 1 < res.points.size(); ++k) {
        double lo = res.points[k].beta_over_z, hi = res.points[k + 1].beta_over_z;
        double flo = res.points[k].delta_k, fhi = res.points[k + 1].delta_k;
        if (flo == 0.0 || flo * fhi >= 0.0) continue;
        while (hi - lo > 1e-4) {
            const double mid = 0.5 * (lo + hi);
            const double fmid = delta_k(mid);
            if (fmid == 0.0) { lo = hi = mid; break; }
            if (flo * fmid < 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fmid;
            }
        }
        res.sign_changes.push_back(0.5 * (lo + hi));
    }
    return res;
}

} // namespace dipolegas
