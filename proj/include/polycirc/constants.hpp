#pragma once

#include <numbers>

namespace polycirc {

// CODATA 2018 exact values; everything else is derived from these so that
// identities like Phi0 = h/(2e) hold to machine precision.
struct PhysicalConstants {
    double electron_charge;  // C
    double planck;           // J s
    double reduced_planck;   // J s
    double flux_quantum;     // Wb
    double light_speed;      // m/s
};

inline constexpr double kElectronCharge = 1.602176634e-19;
inline constexpr double kPlanck = 6.62607015e-34;
inline constexpr double kReducedPlanck = kPlanck / (2.0 * std::numbers::pi);
inline constexpr double kFluxQuantum = kPlanck / (2.0 * kElectronCharge);
inline constexpr double kLightSpeed = 299792458.0;

inline constexpr PhysicalConstants kConstants{
    kElectronCharge, kPlanck, kReducedPlanck, kFluxQuantum, kLightSpeed};

}  // namespace polycirc
