// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_TOLERANCE_HPP
#define MCFTTDL_TOLERANCE_HPP

#include <cstdint>
#include <vector>

#include "mcfttdl/fiber.hpp"

namespace mcfttdl {

// Fabrication tolerance study: every core radius takes an independent
// uniform draw in [-halfwidth, +halfwidth].
struct PerturbationSpec {
    double halfwidth_um = 0.1;
    std::uint64_t seed = 1;
    int trials = 1000;
};

// First-order response of one core's delay model to a radius error,
// obtained from the mode solver by central differences.
struct RadiusSensitivity {
    double dtau_per_um = 0.0;     // ps/km per um
    double dd_per_um = 0.0;       // ps/(km nm) per um
    double ds_per_um = 0.0;       // ps/(km nm^2) per um
    double dneff_per_um = 0.0;
};

RadiusSensitivity radius_sensitivity(const CoreProfile& profile,
                                     double anchor_nm, double step_um = 0.05);

struct LinkSensitivity {
    std::vector<RadiusSensitivity> per_core;   // in core order
};

LinkSensitivity link_radius_sensitivity(const McfLink& link,
                                        double step_um = 0.05);

// One realization of fabrication error: radii shifted by uniform draws,
// delay models and effective indices moved along the sensitivities.
// Deterministic in the seed.  Draws that would push a radius out of the
// physical range are redrawn.
McfLink perturb_link(const McfLink& link, const PerturbationSpec& spec,
                     const LinkSensitivity& sensitivity);
McfLink perturb_link(const McfLink& link, const PerturbationSpec& spec);

// External trim lines: reset every core's anchor delay to the given
// nominal value.  Wavelength-dependent terms are untouched.
McfLink compensate_delays(const McfLink& link, double nominal_tau_g0_ps_per_km);

// Convenience form trimming to the mean anchor delay (zero net trim).
McfLink compensate_delays(const McfLink& link);

struct ToleranceTrial {
    int index = 0;
    int resamples = 0;
    std::vector<double> delta_a1_um;                 // per core
    // Delay error against the nominal link, [wavelength][core], ps/km.
    std::vector<std::vector<double>> err_before;
    std::vector<std::vector<double>> err_after;      // after compensation
    double rms_before = 0.0, rms_after = 0.0;
    // Pairwise-increment error against the nominal increments.
    double inc_rms_before = 0.0, inc_rms_after = 0.0;
};

struct ToleranceReport {
    PerturbationSpec spec;
    std::vector<double> wavelengths_nm;
    std::vector<ToleranceTrial> trials;
    double rms_before = 0.0, rms_after = 0.0;        // aggregate
    // Trials whose increment-uniformity error got better: compensation
    // removes the anchor-delay scatter that dominates the raw increments.
    int trials_before_worse = 0;
};

// Monte Carlo over fabrication draws.  The link must be an equalized
// nominal (common anchor delay); compensation trims back to that value,
// so the post-compensation error at the anchor wavelength is exactly
// zero.  Per-trial RNG streams are derived from the seed, making the
// report independent of evaluation order.
ToleranceReport run_tolerance_study(const McfLink& link,
                                    const PerturbationSpec& spec,
                                    const std::vector<double>& wavelengths_nm);

}

#endif
