// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_FIBER_HPP
#define MCFTTDL_FIBER_HPP

#include <utility>
#include <vector>

#include "mcfttdl/constants.hpp"

namespace mcfttdl {

// Refractive-index profile of one trench-assisted core.  Radially:
// core (radius a1, raised by delta1), inner cladding (thickness a2),
// trench (thickness w, depressed by delta2), outer cladding.
// Contrasts are in percent relative to the cladding index.
struct CoreProfile {
    double a1_um = 0.0;
    double a2_um = 0.0;
    double w_um = 0.0;
    double delta1_pct = 0.0;
    double delta2_pct = 0.0;
};

// Second-order Taylor model of the per-length group delay about the
// anchor wavelength:
//   tau(l) = tau_g0 + D (l - l0) + S/2 (l - l0)^2
struct DispersionModel {
    double anchor_nm = 1550.0;
    double tau_g0_ps_per_km = kDefaultTauG0PsPerKm;
    double d_ps_per_km_nm = 0.0;
    double s_ps_per_km_nm2 = 0.0;
};

struct FiberCore {
    int id = 0;                   // 1-based, unique within a link
    CoreProfile profile;
    DispersionModel model;
    double n_eff = 0.0;           // effective index at the anchor wavelength
    double r_um = 0.0;            // polar position in the cladding cross-section
    double theta_rad = 0.0;
};

// Geometric template for placing N cores: slot positions plus the pairs
// of slots close enough to couple.
struct LayoutSlot {
    double r_um = 0.0;
    double theta_rad = 0.0;
};

struct LinkLayout {
    std::vector<LayoutSlot> slots;
    std::vector<std::pair<int, int>> adjacency;   // 0-based slot indices
};

// Center core plus hexagonal ring at the pitch distance.  Every ring
// core couples to the center and to its two ring neighbours.
LinkLayout hex7_layout(double pitch_um);

// N cores on a ring, nearest neighbours spaced by the pitch.
LinkLayout ring_layout(int n, double pitch_um);

struct McfLink {
    std::vector<FiberCore> cores;                 // sorted by id
    double length_km = 0.0;
    double pitch_um = 0.0;
    double cladding_diameter_um = 0.0;
    std::vector<std::pair<int, int>> adjacency;   // core ids, normalized a < b
};

// Throws ValidationError listing every structural problem: unsorted or
// duplicate ids, non-positive dimensions, adjacency referencing unknown
// ids or self-pairs, cores disagreeing on the anchor wavelength.
void validate_link(const McfLink& link);

const FiberCore& find_core(const McfLink& link, int id);

// Per-km group delay of one core at the given wavelength.  Rejects
// wavelengths outside the operating window.
double group_delay(const FiberCore& core, double wavelength_nm);

// Spatial-diversity tap increment between cores n and n+1 (1-based n),
// per km.  Computed from the model differences directly, so the common
// anchor delay never enters:
//   dD (l - l0) + (S_{n+1} - S_n)/2 (l - l0)^2
// Requires both cores to share anchor wavelength and anchor delay.
double spatial_differential_delay(const McfLink& link, int n,
                                  double wavelength_nm);

// Wavelength-diversity tap increment within a single core: delay step
// between channels m-1 and m of an M-channel grid starting at lambda1
// with spacing delta_lambda (all nm), per km.  m runs 1..M-1.
double wavelength_differential_delay(const FiberCore& core, double lambda1_nm,
                                     double delta_lambda_nm, int m, int M);

// group_delay of every core, in core order (ps/km).
std::vector<double> delay_vector(const McfLink& link, double wavelength_nm);

// The reference seven-core link: heterogeneous trench-assisted cores with
// dispersion 14.75..20.75 ps/(km nm) in 1 ps steps, 35 um pitch, 125 um
// cladding, 10 km span, core positions chosen by the arrangement
// optimizer.  The anchor delay is configurable because external path
// trimming sets it in deployment.
McfLink load_table1_link(double tau_g0_ps_per_km = kDefaultTauG0PsPerKm);

}

#endif
