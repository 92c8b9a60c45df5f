// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_MODE_SOLVER_HPP
#define MCFTTDL_MODE_SOLVER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "mcfttdl/fiber.hpp"

namespace mcfttdl {

// Index of silica doped to a relative contrast delta (percent) above or
// below the pure-silica baseline: n = n_silica(lambda) * (1 + delta/100).
// The baseline is the standard three-term Sellmeier fit for fused silica,
// valid well beyond the operating window; wavelengths outside
// [1200, 1700] nm are rejected.
double material_index(double delta_pct, double wavelength_nm);

// Piecewise-constant radial index profile.  radii_um holds the outer
// radius of each finite layer, strictly increasing; indices has one more
// entry, the last being the unbounded outer layer.
struct LayeredProfile {
    std::vector<double> radii_um;
    std::vector<double> indices;
};

// Four-layer profile (core / inner cladding / trench / outer cladding)
// for one CoreProfile at the given wavelength.  Zero-thickness layers are
// dropped.
LayeredProfile make_trench_profile(const CoreProfile& core,
                                   double wavelength_nm);

struct ModeSolution {
    double n_eff = 0.0;
    double wavelength_nm = 0.0;
    double residual = 0.0;   // characteristic-function magnitude at the root
};

struct SolverOptions {
    int scan_points = 200;        // sign-change scan before refinement
    double residual_tol = 1e-10;
    double x_tol = 1e-15;         // abscissa tolerance of the refinement
};

// Value of the LP01 dispersion relation at a trial effective index.
// Fields are marched radially outward with a fundamental system of Bessel
// solutions per layer (J/Y oscillatory, I/K evanescent), matching value
// and derivative across each boundary; the returned value is the
// coefficient of the growing component in the outer cladding, which a
// guided mode must null.  Coefficients are rescaled by a positive factor
// after every interface, so sign changes are preserved.
double lp01_characteristic(const LayeredProfile& profile, double wavelength_nm,
                           double n_eff);

// Fundamental-mode effective index.  The characteristic function is
// scanned downward from just below the peak layer index so the first
// bracket found belongs to LP01, then refined by find_root.  Throws
// CutoffError when no guided solution exists and ConvergenceError when
// the residual stays above tolerance.
ModeSolution solve_lp01(const LayeredProfile& profile, double wavelength_nm,
                        const SolverOptions& opts = {});

struct DispersionSample {
    double n_eff = 0.0;
    double group_index = 0.0;
    double tau_g_ps_per_km = 0.0;
    double d_ps_per_km_nm = 0.0;
    double s_ps_per_km_nm2 = 0.0;
};

// Group delay, dispersion and slope from an effective-index curve via
// five-point central differences at the given step.  The curve is
// evaluated at center and center +- step, +- 2 step.
DispersionSample
dispersion_from_neff(const std::function<double(double)>& n_eff_of_nm,
                     double center_nm, double step_nm = 2.0);

// Same, with the curve produced by solve_lp01 on the core's profile
// rebuilt at every sample wavelength (material dispersion included).
DispersionSample core_dispersion(const CoreProfile& core, double center_nm,
                                 double step_nm = 2.0,
                                 const SolverOptions& opts = {});

// ---- profile design ----

struct DesignTarget {
    double d_ps_per_km_nm = 0.0;
    // Anchor delay to hit; empty leaves it free (reported only).
    std::optional<double> tau_g0_ps_per_km;
    // Preferred dispersion slope; the trench geometry is retuned until the
    // achieved slope matches (best effort).  Keeps the slope spread of a
    // designed core set tight so spatial increments stay near-linear
    // across the window.
    std::optional<double> s_ref_ps_per_km_nm2;
    // Pin the index contrast instead of using it as the delay knob.  Only
    // honoured when the anchor delay is left free.
    std::optional<double> delta1_pct;
};

struct DesignBounds {
    double a1_min_um = 2.4, a1_max_um = 6.0;
    double a2_min_um = 2.0, a2_max_um = 6.0;
    double w_min_um = 2.0, w_max_um = 6.0;
    double delta1_min_pct = 0.28, delta1_max_pct = 0.44;
    double delta2_pct = 1.0;
    double d_tol_ps_per_km_nm = 0.0125;       // internal; acceptance is 0.05
    double tau_tol_ps_per_km = 0.125;         // internal; acceptance is 0.5
};

struct DesignedCore {
    CoreProfile profile;
    DispersionSample achieved;
};

// Find a trench-assisted profile hitting the dispersion target (and, if
// given, the anchor delay) at the anchor wavelength.  Core radius is the
// primary dispersion knob; the index contrast tunes the anchor delay;
// trench geometry is varied as a fallback and to match s_ref.  Throws
// InfeasibleError when the bounds cannot reach the targets.
DesignedCore design_core(const DesignTarget& target, const DesignBounds& bounds,
                         double anchor_nm = 1550.0);

struct LinkDesign {
    // Cores in target order, ids 1..N, positions at the origin for the
    // caller to assign.  Each model carries the common nominal anchor
    // delay (trim lines equalize the real spans); the physically achieved
    // values are reported alongside.
    std::vector<FiberCore> cores;
    std::vector<DispersionSample> achieved;
    double common_tau_g0_ps_per_km = 0.0;
};

// Design one core per dispersion target with a common anchor delay.  The
// lowest-dispersion target needs the deepest contrast and the strongest
// trench pull, so it is designed first, high in the contrast range; its
// achieved delay becomes the shared anchor delay (an explicit value can be
// supplied instead).  The highest target is designed next to find the
// slope it can reach at that delay, and the interior cores follow a slope
// ladder interpolated between the two ends, keeping neighbouring slopes
// close enough for near-linear spatial increments.
LinkDesign design_link(const std::vector<double>& d_targets_ps_per_km_nm,
                       std::optional<double> tau_g0_ps_per_km,
                       const DesignBounds& bounds, double anchor_nm = 1550.0);

}

#endif
