// SPDX-License-Identifier: Apache-2.0
#include "mcfttdl/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mcfttdl/errors.hpp"

namespace mcfttdl {

LinkLayout hex7_layout(double pitch_um) {
    if (!(pitch_um > 0.0))
        throw ValidationError("hex7_layout: pitch must be positive");
    LinkLayout lay;
    lay.slots.push_back({0.0, 0.0});
    for (int i = 0; i < 6; ++i)
        lay.slots.push_back({pitch_um, i * kPi / 3.0});
    for (int i = 1; i <= 6; ++i) {
        lay.adjacency.emplace_back(0, i);
        lay.adjacency.emplace_back(i, i == 6 ? 1 : i + 1);
    }
    return lay;
}

LinkLayout ring_layout(int n, double pitch_um) {
    if (n < 2)
        throw ValidationError("ring_layout: need at least two cores");
    if (!(pitch_um > 0.0))
        throw ValidationError("ring_layout: pitch must be positive");
    LinkLayout lay;
    // Circumradius making nearest neighbours sit one pitch apart.
    const double radius = pitch_um / (2.0 * std::sin(kPi / n));
    for (int i = 0; i < n; ++i)
        lay.slots.push_back({radius, 2.0 * kPi * i / n});
    for (int i = 0; i < n; ++i)
        lay.adjacency.emplace_back(i, (i + 1) % n);
    if (n == 2) lay.adjacency.resize(1);
    return lay;
}

void validate_link(const McfLink& link) {
    std::vector<std::string> issues;
    if (link.cores.empty()) issues.push_back("link has no cores");
    if (!(link.length_km > 0.0)) issues.push_back("length_km must be positive");
    if (!(link.pitch_um > 0.0)) issues.push_back("pitch_um must be positive");
    if (!(link.cladding_diameter_um > 0.0))
        issues.push_back("cladding_diameter_um must be positive");

    std::set<int> ids;
    int prev_id = 0;
    for (const auto& c : link.cores) {
        if (c.id < 1) issues.push_back("core ids are 1-based");
        if (c.id <= prev_id) issues.push_back("cores must be sorted by id, ascending");
        prev_id = c.id;
        ids.insert(c.id);
        if (!(c.profile.a1_um > 0.0))
            issues.push_back("core " + std::to_string(c.id) + ": a1_um must be positive");
        if (c.profile.a2_um < 0.0 || c.profile.w_um < 0.0)
            issues.push_back("core " + std::to_string(c.id) + ": layer thicknesses must be >= 0");
        if (!in_window(c.model.anchor_nm))
            issues.push_back("core " + std::to_string(c.id) + ": anchor outside the operating window");
        if (c.r_um < 0.0)
            issues.push_back("core " + std::to_string(c.id) + ": radial position must be >= 0");
    }
    if (!link.cores.empty()) {
        const double anchor = link.cores.front().model.anchor_nm;
        for (const auto& c : link.cores)
            if (c.model.anchor_nm != anchor) {
                issues.push_back("cores disagree on the anchor wavelength");
                break;
            }
    }
    for (const auto& [a, b] : link.adjacency) {
        if (a == b) issues.push_back("adjacency contains a self-pair");
        if (!ids.count(a) || !ids.count(b))
            issues.push_back("adjacency references a core id not in the link");
        if (a >= b) issues.push_back("adjacency pairs must be normalized (a < b)");
    }

    if (!issues.empty()) {
        std::ostringstream os;
        os << "invalid link:";
        for (const auto& s : issues) os << "\n  - " << s;
        throw ValidationError(os.str());
    }
}

const FiberCore& find_core(const McfLink& link, int id) {
    for (const auto& c : link.cores)
        if (c.id == id) return c;
    throw IndexError("no core with id " + std::to_string(id));
}

static void check_window(double wavelength_nm, const char* who) {
    if (!in_window(wavelength_nm)) {
        std::ostringstream os;
        os << who << ": wavelength " << wavelength_nm
           << " nm outside the operating window [" << kWindowMinNm << ", "
           << kWindowMaxNm << "] nm";
        throw RangeError(os.str());
    }
}

double group_delay(const FiberCore& core, double wavelength_nm) {
    check_window(wavelength_nm, "group_delay");
    const double dl = wavelength_nm - core.model.anchor_nm;
    return core.model.tau_g0_ps_per_km +
           core.model.d_ps_per_km_nm * dl +
           0.5 * core.model.s_ps_per_km_nm2 * dl * dl;
}

double spatial_differential_delay(const McfLink& link, int n,
                                  double wavelength_nm) {
    check_window(wavelength_nm, "spatial_differential_delay");
    const int count = static_cast<int>(link.cores.size());
    if (n < 1 || n >= count)
        throw IndexError("spatial_differential_delay: pair index " +
                         std::to_string(n) + " outside 1.." +
                         std::to_string(count - 1));
    const auto& lo = link.cores[static_cast<size_t>(n - 1)];
    const auto& hi = link.cores[static_cast<size_t>(n)];
    if (lo.model.anchor_nm != hi.model.anchor_nm ||
        lo.model.tau_g0_ps_per_km != hi.model.tau_g0_ps_per_km)
        throw ModelConsistencyError(
            "spatial_differential_delay: cores " + std::to_string(lo.id) +
            " and " + std::to_string(hi.id) +
            " do not share anchor wavelength and anchor delay");
    const double dl = wavelength_nm - lo.model.anchor_nm;
    const double dd = hi.model.d_ps_per_km_nm - lo.model.d_ps_per_km_nm;
    const double ds = hi.model.s_ps_per_km_nm2 - lo.model.s_ps_per_km_nm2;
    return dd * dl + 0.5 * ds * dl * dl;
}

double wavelength_differential_delay(const FiberCore& core, double lambda1_nm,
                                     double delta_lambda_nm, int m, int M) {
    if (!(delta_lambda_nm > 0.0))
        throw RangeError("wavelength_differential_delay: channel spacing must be positive");
    if (M < 2)
        throw ValidationError("wavelength_differential_delay: need at least two channels");
    if (m < 1 || m >= M)
        throw IndexError("wavelength_differential_delay: channel index " +
                         std::to_string(m) + " outside 1.." + std::to_string(M - 1));
    check_window(lambda1_nm, "wavelength_differential_delay");
    check_window(lambda1_nm + (M - 1) * delta_lambda_nm,
                 "wavelength_differential_delay");
    const double l0 = core.model.anchor_nm;
    const double d = core.model.d_ps_per_km_nm;
    const double s = core.model.s_ps_per_km_nm2;
    // Increment between channels m-1 and m of the grid lambda1 + k dl.
    return d * delta_lambda_nm + s * (lambda1_nm - l0) * delta_lambda_nm +
           0.5 * s * (2.0 * m - 1.0) * delta_lambda_nm * delta_lambda_nm;
}

std::vector<double> delay_vector(const McfLink& link, double wavelength_nm) {
    if (link.cores.empty())
        throw ValidationError("delay_vector: link has no cores");
    check_window(wavelength_nm, "delay_vector");
    std::vector<double> out;
    out.reserve(link.cores.size());
    for (const auto& c : link.cores) out.push_back(group_delay(c, wavelength_nm));
    return out;
}

}
