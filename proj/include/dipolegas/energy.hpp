#pragma once

#include <utility>
#include <vector>

#include "dipolegas/dispersions.hpp"

// Kinetic energy <K> = m <v^2>/2 + I <w_x'^2 + w_y'^2>/2 per contribution,
// its tau -> infinity residuals, and the residual-energy cooling scan.

namespace dipolegas {

struct EnergyBreakdown {
    ContributionSplit translational;
    ContributionSplit rotational;
    ContributionSplit total() const {
        return {translational.thermal + rotational.thermal,
                translational.vacuum + rotational.vacuum,
                translational.mixed + rotational.mixed};
    }
    // (m beta^4 / p^2) <K>; requires the beta used to produce the breakdown.
    double dimensionless_total(const DipoleParams& dp, double beta) const {
        const double b2 = beta * beta;
        return total().total() * dp.m * b2 * b2 / (dp.p * dp.p);
    }
};

class ResidualConvergenceError : public std::runtime_error {
public:
    ResidualConvergenceError(const std::string& msg, double at_tmax, double at_half)
        : std::runtime_error(msg), value_at_tmax(at_tmax), value_at_half(at_half) {}
    double value_at_tmax;
    double value_at_half;
};

EnergyBreakdown kinetic_energy(const DipoleParams& dp, const Environment& env, double tau);

// Thermal and vacuum residuals are analytic; the mixed residual is evaluated
// at eta = tau_resid with a doubling certificate
// |K(tau_resid) - K(tau_resid/2)| < 1e-6 relative.
EnergyBreakdown residual_energy(const DipoleParams& dp, const Environment& env,
                                double tau_resid = 200.0);

// Whether the scan holds the dipole bond length fixed or ties it to beta
// (a = beta, i.e. gamma = 1) so the dimensionless energies depend on beta/z only.
enum class BondConvention { fixed, equal_beta };

struct CoolingPoint {
    double beta_over_z;
    double delta_k;  // (m beta^4/p^2) (<K> - <K>_th) residual difference
};

struct CoolingScanResult {
    std::vector<CoolingPoint> points;
    // Sign-change locations in beta/z, bisected to 1e-4.
    std::vector<double> sign_changes;
};

CoolingScanResult cooling_scan(const DipoleParams& dp, double theta,
                               const std::vector<double>& ratio_grid,
                               double tau_resid = 200.0,
                               BondConvention bond = BondConvention::fixed);

} // namespace dipolegas
