// SPDX-License-Identifier: Apache-2.0
#include "mcfttdl/bend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "mcfttdl/errors.hpp"

namespace mcfttdl {

namespace {

void check_bend_radius(double radius_mm) {
    if (!(radius_mm > 0.0))
        throw ValidationError("bend radius must be positive");
}

// r cos(theta) / R_b with r in um and R_b in mm.
double path_factor(double r_um, double theta_rad, double bend_radius_mm) {
    return 1e-3 * r_um * std::cos(theta_rad) / bend_radius_mm;
}

}

double equivalent_index(double n, double r_um, double theta_rad,
                        double bend_radius_mm) {
    if (!(n > 0.0))
        throw ValidationError("equivalent_index: index must be positive");
    if (r_um < 0.0)
        throw ValidationError("equivalent_index: radial position must be >= 0");
    check_bend_radius(bend_radius_mm);
    return n * (1.0 + path_factor(r_um, theta_rad, bend_radius_mm));
}

double pair_threshold_bend_radius(double n_eff_a, double n_eff_b,
                                  double pitch_um) {
    if (!(pitch_um > 0.0))
        throw ValidationError("pair_threshold_bend_radius: pitch must be positive");
    if (!(n_eff_a > 0.0) || !(n_eff_b > 0.0))
        throw ValidationError("pair_threshold_bend_radius: indices must be positive");
    const double dn = std::abs(n_eff_a - n_eff_b);
    if (dn == 0.0) return std::numeric_limits<double>::infinity();
    return 1e-3 * pitch_um * std::max(n_eff_a, n_eff_b) / dn;
}

ThresholdResult threshold_bend_radius(const McfLink& link) {
    validate_link(link);
    if (link.adjacency.empty())
        throw ValidationError("threshold_bend_radius: link has no adjacent pairs");
    ThresholdResult worst{0.0, 0, 0};
    for (const auto& [ida, idb] : link.adjacency) {
        const double na = find_core(link, ida).n_eff;
        const double nb = find_core(link, idb).n_eff;
        if (na == nb) {
            std::ostringstream os;
            os << "threshold_bend_radius: cores " << ida << " and " << idb
               << " are adjacent with identical effective index; the "
                  "phase-matching radius diverges";
            throw DegeneratePairError(os.str());
        }
        const double r = pair_threshold_bend_radius(na, nb, link.pitch_um);
        if (r > worst.radius_mm) worst = {r, ida, idb};
    }
    return worst;
}

ArrangementResult optimize_arrangement(const std::vector<FiberCore>& cores,
                                       const LinkLayout& layout) {
    const size_t n = cores.size();
    if (n != layout.slots.size())
        throw ValidationError("optimize_arrangement: core count does not match "
                              "the layout slot count");
    if (n == 0) throw ValidationError("optimize_arrangement: no cores");
    if (n > 10)
        throw ValidationError("optimize_arrangement: exhaustive search supports "
                              "at most 10 cores");
    for (const auto& [a, b] : layout.adjacency)
        if (a < 0 || b < 0 || static_cast<size_t>(a) >= n ||
            static_cast<size_t>(b) >= n || a == b)
            throw ValidationError("optimize_arrangement: layout adjacency is "
                                  "out of range");

    std::map<int, double> n_eff_by_id;
    std::vector<int> ids;
    for (const auto& c : cores) {
        if (!n_eff_by_id.emplace(c.id, c.n_eff).second)
            throw ValidationError("optimize_arrangement: duplicate core id");
        ids.push_back(c.id);
    }
    std::sort(ids.begin(), ids.end());

    // Pitch only scales every pair threshold, so any positive value ranks
    // assignments identically; slot distances are not needed beyond the
    // adjacency template.
    const double pitch = 1000.0;   // um, arbitrary positive scale
    ArrangementResult best;
    best.worst_pair_threshold_mm = std::numeric_limits<double>::infinity();

    std::vector<int> perm = ids;   // perm[slot] = core id
    do {
        double worst = 0.0;
        for (const auto& [sa, sb] : layout.adjacency) {
            const double r = pair_threshold_bend_radius(
                n_eff_by_id[perm[static_cast<size_t>(sa)]],
                n_eff_by_id[perm[static_cast<size_t>(sb)]], pitch);
            worst = std::max(worst, r);
            if (worst >= best.worst_pair_threshold_mm) break;
        }
        // Strict improvement keeps the first (lexicographically smallest)
        // assignment among ties.
        if (worst < best.worst_pair_threshold_mm) {
            best.worst_pair_threshold_mm = worst;
            best.slot_core_ids = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!std::isfinite(best.worst_pair_threshold_mm))
        throw DegeneratePairError(
            "optimize_arrangement: every assignment places cores with "
            "identical effective index next to each other");
    return best;
}

McfLink assemble_link(std::vector<FiberCore> cores, const LinkLayout& layout,
                      const ArrangementResult& arrangement, double length_km,
                      double pitch_um, double cladding_diameter_um) {
    if (arrangement.slot_core_ids.size() != cores.size() ||
        cores.size() != layout.slots.size())
        throw ValidationError("assemble_link: arrangement, cores and layout "
                              "sizes disagree");
    McfLink link;
    link.length_km = length_km;
    link.pitch_um = pitch_um;
    link.cladding_diameter_um = cladding_diameter_um;

    for (size_t slot = 0; slot < arrangement.slot_core_ids.size(); ++slot) {
        const int id = arrangement.slot_core_ids[slot];
        auto it = std::find_if(cores.begin(), cores.end(),
                               [id](const FiberCore& c) { return c.id == id; });
        if (it == cores.end())
            throw ValidationError("assemble_link: arrangement references core id " +
                                  std::to_string(id) + " not present");
        it->r_um = layout.slots[slot].r_um;
        it->theta_rad = layout.slots[slot].theta_rad;
    }
    for (const auto& [sa, sb] : layout.adjacency) {
        int a = arrangement.slot_core_ids[static_cast<size_t>(sa)];
        int b = arrangement.slot_core_ids[static_cast<size_t>(sb)];
        if (a > b) std::swap(a, b);
        link.adjacency.emplace_back(a, b);
    }
    std::sort(link.adjacency.begin(), link.adjacency.end());
    std::sort(cores.begin(), cores.end(),
              [](const FiberCore& x, const FiberCore& y) { return x.id < y.id; });
    link.cores = std::move(cores);
    validate_link(link);
    return link;
}

double bent_group_delay(const FiberCore& core, double wavelength_nm,
                        const BendState& bend) {
    check_bend_radius(bend.radius_mm);
    const double straight = group_delay(core, wavelength_nm);
    return straight * (1.0 + path_factor(core.r_um,
                                         core.theta_rad - bend.orientation_rad,
                                         bend.radius_mm));
}

double bent_dispersion(const FiberCore& core, double wavelength_nm,
                       const BendState& bend) {
    check_bend_radius(bend.radius_mm);
    if (!in_window(wavelength_nm))
        throw RangeError("bent_dispersion: wavelength outside the operating window");
    // The path factor is wavelength-independent, so it scales the whole
    // delay curve and with it the dispersion.
    const double l = wavelength_nm - core.model.anchor_nm;
    const double d = core.model.d_ps_per_km_nm + core.model.s_ps_per_km_nm2 * l;
    return d * (1.0 + path_factor(core.r_um,
                                  core.theta_rad - bend.orientation_rad,
                                  bend.radius_mm));
}

namespace {

// Trapezoid mean of the bent delay over bend orientations [a, b].
double orientation_mean(const FiberCore& core, double wavelength_nm,
                        double bend_radius_mm, double a, double b) {
    const double straight = group_delay(core, wavelength_nm);
    const double span = b - a;
    const int per_turn = 1024;
    const int n = std::max(16, static_cast<int>(
                                   std::ceil(per_turn * span / (2.0 * kPi))));
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double phi = a + span * k / n;
        const double v = 1.0 + path_factor(core.r_um, core.theta_rad - phi,
                                           bend_radius_mm);
        acc += (k == 0 || k == n) ? 0.5 * v : v;
    }
    const double mean = straight * acc / n;

    // The integral has a closed form; a quadrature this fine must agree.
    const double amp = 1e-3 * core.r_um / bend_radius_mm;
    const double closed =
        straight *
        (1.0 + amp * (std::sin(core.theta_rad - a) - std::sin(core.theta_rad - b)) /
                   span);
    if (std::abs(mean - closed) > 1e-6 * std::abs(straight))
        throw NumericalError("orientation average drifted from the closed form");
    return mean;
}

}

double twist_averaged_delay(const FiberCore& core, double wavelength_nm,
                            double bend_radius_mm, double turns) {
    check_bend_radius(bend_radius_mm);
    if (!(turns > 0.0))
        throw ValidationError("twist_averaged_delay: turn count must be positive");
    return orientation_mean(core, wavelength_nm, bend_radius_mm, 0.0,
                            2.0 * kPi * turns);
}

double bend_orientation_average(const FiberCore& core, double wavelength_nm,
                                double bend_radius_mm, double theta_a_rad,
                                double theta_b_rad) {
    check_bend_radius(bend_radius_mm);
    if (!(theta_b_rad > theta_a_rad))
        throw ValidationError("bend_orientation_average: need theta_b > theta_a");
    return orientation_mean(core, wavelength_nm, bend_radius_mm, theta_a_rad,
                            theta_b_rad);
}

CrosstalkCurve crosstalk_curve(const McfLink& link,
                               const std::vector<double>& radii_mm,
                               const CrosstalkModel& model) {
    validate_link(link);
    if (link.adjacency.empty())
        throw ValidationError("crosstalk_curve: link has no adjacent pairs");
    if (radii_mm.empty())
        throw ValidationError("crosstalk_curve: no bend radii given");
    for (size_t i = 0; i < radii_mm.size(); ++i) {
        if (!(radii_mm[i] > 0.0))
            throw ValidationError("crosstalk_curve: radii must be positive");
        if (i > 0 && !(radii_mm[i] > radii_mm[i - 1]))
            throw ValidationError("crosstalk_curve: radii must be strictly increasing");
    }
    if (!(model.kappa_per_m > 0.0) || model.phase_samples < 8 ||
        !(model.straight_floor_db <= 0.0))
        throw ValidationError("crosstalk_curve: invalid model parameters");

    const double anchor_nm = link.cores.front().model.anchor_nm;
    const double lambda_m = anchor_nm * 1e-9;
    const double pitch_m = link.pitch_um * 1e-6;
    const double k2 = model.kappa_per_m * model.kappa_per_m;

    struct Pair {
        double delta0;   // straight-fiber mismatch, 1/m
        double n_high;
        double threshold_mm;
    };
    std::vector<Pair> pairs;
    double delta0_min = std::numeric_limits<double>::infinity();
    double peak_radius = 0.0;
    for (const auto& [ida, idb] : link.adjacency) {
        const double na = find_core(link, ida).n_eff;
        const double nb = find_core(link, idb).n_eff;
        Pair p;
        p.delta0 = kPi * std::abs(na - nb) / lambda_m;
        p.n_high = std::max(na, nb);
        p.threshold_mm = pair_threshold_bend_radius(na, nb, link.pitch_um);
        pairs.push_back(p);
        delta0_min = std::min(delta0_min, p.delta0);
        peak_radius = std::max(peak_radius, p.threshold_mm);
    }

    // Resonant level: chosen so the straight fiber (mismatch delta0 of its
    // least separated pair) sits at the configured floor.
    const double floor_lin = std::pow(10.0, model.straight_floor_db / 10.0);
    const double level =
        std::min(1.0, floor_lin * (k2 + delta0_min * delta0_min) / k2);

    CrosstalkCurve curve;
    curve.radii_mm = radii_mm;
    curve.peak_radius_mm = peak_radius;
    curve.xtalk_db.reserve(radii_mm.size());
    for (const double r_mm : radii_mm) {
        const double r_m = r_mm * 1e-3;
        double worst = 0.0;
        for (const auto& p : pairs) {
            // Bending tilts the mismatch by up to +-b as the bend plane
            // rotates relative to the pair axis.
            const double b = kPi * p.n_high * pitch_m / (lambda_m * r_m);
            bool crossed = false;
            double prev = p.delta0 + b;   // phi = 0
            double dmin = std::abs(prev);
            for (int k = 1; k <= model.phase_samples; ++k) {
                const double phi = 2.0 * kPi * k / model.phase_samples;
                const double d = p.delta0 + b * std::cos(phi);
                if (d == 0.0 || prev == 0.0 || (d > 0.0) != (prev > 0.0))
                    crossed = true;
                dmin = std::min(dmin, std::abs(d));
                prev = d;
            }
            const double mismatch = crossed ? 0.0 : dmin;
            worst = std::max(worst, level * k2 / (k2 + mismatch * mismatch));
        }
        curve.xtalk_db.push_back(10.0 * std::log10(worst));
    }
    return curve;
}

}
