// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_BEND_HPP
#define MCFTTDL_BEND_HPP

#include <vector>

#include "mcfttdl/fiber.hpp"

namespace mcfttdl {

struct BendState {
    double radius_mm = 0.0;          // bend radius, must be positive
    double orientation_rad = 0.0;    // azimuth of the bend plane
    double twist_rate_turns_per_m = 0.0;
};

// Conformal-mapping equivalent index of a point at polar position
// (r, theta) in a fiber bent to radius R_b, theta measured from the bend
// plane: n (1 + r cos(theta) / R_b).
double equivalent_index(double n, double r_um, double theta_rad,
                        double bend_radius_mm);

// Bend radius below which two cores at the pitch distance can be tilted
// into phase matching: pitch * max(n_a, n_b) / |n_a - n_b|.  Infinite for
// identical indices (always matched).
double pair_threshold_bend_radius(double n_eff_a, double n_eff_b,
                                  double pitch_um);

struct ThresholdResult {
    double radius_mm = 0.0;
    int core_a = 0, core_b = 0;      // the governing pair
};

// Largest pair threshold over the link's adjacency: operating above this
// radius keeps every neighbour pair away from phase matching.  Throws
// DegeneratePairError when an adjacent pair shares its effective index.
ThresholdResult threshold_bend_radius(const McfLink& link);

struct ArrangementResult {
    std::vector<int> slot_core_ids;          // core id placed in each slot
    double worst_pair_threshold_mm = 0.0;
};

// Exhaustive search over slot assignments minimizing the link threshold,
// i.e. placing the most similar cores away from each other.  Ties resolve
// to the lexicographically smallest slot-order id vector, so the result
// is deterministic.  Throws DegeneratePairError when every assignment
// leaves some identical pair adjacent.
ArrangementResult optimize_arrangement(const std::vector<FiberCore>& cores,
                                       const LinkLayout& layout);

// Build a link by placing cores into layout slots per the arrangement.
McfLink assemble_link(std::vector<FiberCore> cores, const LinkLayout& layout,
                      const ArrangementResult& arrangement, double length_km,
                      double pitch_um, double cladding_diameter_um);

// Group delay of a core in a bent fiber: the straight delay scaled by the
// equivalent-index path factor at the core's position.
double bent_group_delay(const FiberCore& core, double wavelength_nm,
                        const BendState& bend);

// Chromatic dispersion under the same scaling.  The path factor is flat
// in wavelength, so the relative change matches the delay's and stays
// negligible in absolute terms.
double bent_dispersion(const FiberCore& core, double wavelength_nm,
                       const BendState& bend);

// Mean bent delay over a uniformly twisted span covering the given number
// of turns (possibly fractional).  Trapezoid quadrature at 1024 samples
// per turn, cross-checked against the closed-form mean; for whole turns
// the cosine averages out and the straight delay is recovered.
double twist_averaged_delay(const FiberCore& core, double wavelength_nm,
                            double bend_radius_mm, double turns);

// Mean bent delay over an arbitrary orientation span [theta_a, theta_b].
double bend_orientation_average(const FiberCore& core, double wavelength_nm,
                                double bend_radius_mm, double theta_a_rad,
                                double theta_b_rad);

// Two-core coupled-power crosstalk model.  Each adjacent pair contributes
// a Lorentzian in the residual phase mismatch; bending scans the mismatch
// across orientations, and below the pair threshold some orientation
// crosses zero, pinning the pair at the resonant level.  The resonant
// level is calibrated so a straight fiber sits at straight_floor_db.
struct CrosstalkModel {
    double kappa_per_m = 1.0;        // coupling strength
    double straight_floor_db = -90.0;
    int phase_samples = 720;         // orientation sweep resolution
};

struct CrosstalkCurve {
    std::vector<double> radii_mm;
    std::vector<double> xtalk_db;    // worst adjacent pair, <= 0
    double peak_radius_mm = 0.0;     // +inf when a pair is degenerate
};

// Worst-pair crosstalk at each bend radius (sorted ascending).  The curve
// is flat at its maximum up to the link threshold radius and decays
// monotonically beyond it.
CrosstalkCurve crosstalk_curve(const McfLink& link,
                               const std::vector<double>& radii_mm,
                               const CrosstalkModel& model = {});

}

#endif
