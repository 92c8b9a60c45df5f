// SPDX-License-Identifier: Apache-2.0
#include "mcfttdl/mode_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

#include "mcfttdl/errors.hpp"
#include "mcfttdl/root_find.hpp"

namespace mcfttdl {

double material_index(double delta_pct, double wavelength_nm) {
    if (wavelength_nm < 1200.0 || wavelength_nm > 1700.0)
        throw RangeError("material_index: wavelength outside the Sellmeier fit range "
                         "[1200, 1700] nm");
    if (std::abs(delta_pct) > 5.0)
        throw RangeError("material_index: contrast beyond +-5 percent is not a "
                         "weakly guiding glass");
    // Fused silica, three-term Sellmeier (resonances in um).
    static constexpr double B[3] = {0.6961663, 0.4079426, 0.8974794};
    static constexpr double C[3] = {0.0684043, 0.1162414, 9.896161};
    const double l = wavelength_nm * 1e-3;
    const double l2 = l * l;
    double n2 = 1.0;
    for (int i = 0; i < 3; ++i)
        n2 += B[i] * l2 / (l2 - C[i] * C[i]);
    return std::sqrt(n2) * (1.0 + delta_pct / 100.0);
}

LayeredProfile make_trench_profile(const CoreProfile& core,
                                   double wavelength_nm) {
    if (!(core.a1_um > 0.0))
        throw ValidationError("make_trench_profile: core radius must be positive");
    if (core.a2_um < 0.0 || core.w_um < 0.0)
        throw ValidationError("make_trench_profile: layer thicknesses must be >= 0");
    const double n_clad = material_index(0.0, wavelength_nm);
    const double n_core = material_index(core.delta1_pct, wavelength_nm);
    const double n_trench = material_index(-core.delta2_pct, wavelength_nm);

    LayeredProfile p;
    p.indices.push_back(n_core);
    p.radii_um.push_back(core.a1_um);
    double r = core.a1_um;
    if (core.a2_um > 0.0) {
        r += core.a2_um;
        p.indices.push_back(n_clad);
        p.radii_um.push_back(r);
    }
    if (core.w_um > 0.0) {
        r += core.w_um;
        p.indices.push_back(n_trench);
        p.radii_um.push_back(r);
    }
    p.indices.push_back(n_clad);
    return p;
}

namespace {

struct Basis {
    double f1, f2;     // two independent radial solutions at r
    double df1, df2;   // their radial derivatives
};

// Fundamental system of the scalar radial equation in one uniform layer.
// Oscillatory (J0/Y0) below the layer index, evanescent (I0/K0) above.
// The transverse parameter is floored so a trial index grazing a layer
// index stays finite.
Basis eval_basis(double n_layer, double n_eff, double k0_per_um, double r_um) {
    const double diff = (n_layer - n_eff) * (n_layer + n_eff);
    const double q = k0_per_um * std::sqrt(std::max(std::abs(diff), 1e-24));
    const double x = q * r_um;
    Basis b;
    if (diff > 0.0) {
        b.f1 = std::cyl_bessel_j(0, x);
        b.f2 = std::cyl_neumann(0, x);
        b.df1 = -q * std::cyl_bessel_j(1, x);
        b.df2 = -q * std::cyl_neumann(1, x);
    } else {
        b.f1 = std::cyl_bessel_i(0, x);
        b.f2 = std::cyl_bessel_k(0, x);
        b.df1 = q * std::cyl_bessel_i(1, x);
        b.df2 = -q * std::cyl_bessel_k(1, x);
    }
    return b;
}

void check_profile(const LayeredProfile& p) {
    std::ostringstream os;
    if (p.radii_um.empty())
        throw ValidationError("layered profile needs at least two layers");
    if (p.indices.size() != p.radii_um.size() + 1)
        throw ValidationError("layered profile needs one more index than boundary");
    double prev = 0.0;
    for (double r : p.radii_um) {
        if (!(r > prev))
            throw ValidationError("layer boundaries must be positive and strictly increasing");
        prev = r;
    }
    for (double n : p.indices)
        if (!(n > 1.0) || !(n < 3.0))
            throw ValidationError("layer indices must lie in (1, 3)");
}

}

double lp01_characteristic(const LayeredProfile& profile, double wavelength_nm,
                           double n_eff) {
    check_profile(profile);
    const double n_out = profile.indices.back();
    if (!(n_eff > n_out))
        throw RangeError("lp01_characteristic: trial index must exceed the outer "
                         "cladding index");
    const double k0 = 2.0 * kPi / (wavelength_nm * 1e-3);

    // Regular solution in the innermost layer (J0 or I0, both finite at 0).
    double a = 1.0, b = 0.0;
    const size_t nb = profile.radii_um.size();
    for (size_t i = 0; i < nb; ++i) {
        const double r = profile.radii_um[i];
        const Basis in = eval_basis(profile.indices[i], n_eff, k0, r);
        const double psi = a * in.f1 + b * in.f2;
        const double dpsi = a * in.df1 + b * in.df2;
        const Basis out = eval_basis(profile.indices[i + 1], n_eff, k0, r);
        // 2x2 solve; the determinant is the basis Wronskian, never zero.
        const double det = out.f1 * out.df2 - out.f2 * out.df1;
        a = (psi * out.df2 - dpsi * out.f2) / det;
        b = (out.f1 * dpsi - out.df1 * psi) / det;
        // Positive rescale keeps magnitudes tame without moving roots.
        const double s = std::max(std::abs(a), std::abs(b));
        if (s > 0.0) {
            a /= s;
            b /= s;
        }
    }
    // Outside the last boundary the basis is I0/K0; a guided mode carries
    // no growing component.
    return a;
}

ModeSolution solve_lp01(const LayeredProfile& profile, double wavelength_nm,
                        const SolverOptions& opts) {
    check_profile(profile);
    const double n_out = profile.indices.back();
    const double n_max = *std::max_element(profile.indices.begin(),
                                           profile.indices.end());
    if (!(n_max > n_out))
        throw CutoffError("solve_lp01: no layer rises above the outer cladding; "
                          "nothing is guided");
    const double lo = n_out + 1e-9;
    const double hi = n_max - 1e-12;
    if (!(hi > lo))
        throw CutoffError("solve_lp01: index contrast too small to search");

    auto chi = [&](double ne) {
        return lp01_characteristic(profile, wavelength_nm, ne);
    };
    // Downward scan: the first sign change below the peak index is the
    // fundamental mode, higher-order roots lie further down.
    const auto bracket = scan_bracket(chi, lo, hi, opts.scan_points, true);
    if (!bracket) {
        std::ostringstream os;
        os << "solve_lp01: no guided LP01 root in (" << lo << ", " << hi
           << ") at " << wavelength_nm << " nm (mode at or beyond cutoff)";
        throw CutoffError(os.str());
    }

    double root;
    if (bracket->first == bracket->second) {
        root = bracket->first;
    } else {
        RootOptions ro;
        ro.x_tol = opts.x_tol;
        root = find_root(chi, bracket->first, bracket->second, ro);
    }
    const double residual = std::abs(chi(root));
    if (residual > opts.residual_tol) {
        // Thick trenches make the characteristic cross so steeply that one
        // ulp of abscissa moves it by more than the tolerance; accept when
        // the leftover is explained by abscissa quantization.
        const double h = 1e-11;
        const double slope =
            std::abs(chi(root + h) - chi(root - h)) / (2.0 * h);
        const double quantization_floor =
            4.0 * slope * std::abs(root) * std::numeric_limits<double>::epsilon();
        if (residual > std::max(opts.residual_tol, quantization_floor)) {
            std::ostringstream os;
            os << "solve_lp01: characteristic residual " << residual
               << " above tolerance " << opts.residual_tol << " at "
               << wavelength_nm << " nm";
            throw ConvergenceError(os.str());
        }
    }
    return {root, wavelength_nm, residual};
}

DispersionSample
dispersion_from_neff(const std::function<double(double)>& n_eff_of_nm,
                     double center_nm, double step_nm) {
    if (!(step_nm > 0.0))
        throw ValidationError("dispersion_from_neff: step must be positive");
    const double h = step_nm;
    const double f0 = n_eff_of_nm(center_nm - 2.0 * h);
    const double f1 = n_eff_of_nm(center_nm - h);
    const double f2 = n_eff_of_nm(center_nm);
    const double f3 = n_eff_of_nm(center_nm + h);
    const double f4 = n_eff_of_nm(center_nm + 2.0 * h);

    const double d1 = (f0 - 8.0 * f1 + 8.0 * f3 - f4) / (12.0 * h);
    const double d2 = (-f0 + 16.0 * f1 - 30.0 * f2 + 16.0 * f3 - f4) /
                      (12.0 * h * h);
    const double d3 = (-f0 + 2.0 * f1 - 2.0 * f3 + f4) / (2.0 * h * h * h);

    DispersionSample s;
    s.n_eff = f2;
    s.group_index = f2 - center_nm * d1;
    s.tau_g_ps_per_km = kPsPerKmPerGroupIndex * s.group_index;
    s.d_ps_per_km_nm = -kPsPerKmPerGroupIndex * center_nm * d2;
    s.s_ps_per_km_nm2 = -kPsPerKmPerGroupIndex * (d2 + center_nm * d3);
    return s;
}

DispersionSample core_dispersion(const CoreProfile& core, double center_nm,
                                 double step_nm, const SolverOptions& opts) {
    auto curve = [&](double l_nm) {
        return solve_lp01(make_trench_profile(core, l_nm), l_nm, opts).n_eff;
    };
    return dispersion_from_neff(curve, center_nm, step_nm);
}

// ---- profile design ----

namespace {

struct TrenchGeom {
    double a2_um, w_um;
};

// Mid-range seed first, then the corners and edges of the trench box.
std::vector<TrenchGeom> trench_candidates(const DesignBounds& b) {
    const double a2m = 0.5 * (b.a2_min_um + b.a2_max_um);
    const double wm = 0.5 * (b.w_min_um + b.w_max_um);
    std::vector<TrenchGeom> cs;
    for (double a2 : {a2m, b.a2_min_um, b.a2_max_um})
        for (double w : {wm, b.w_min_um, b.w_max_um})
            cs.push_back({a2, w});
    return cs;
}

CoreProfile with_geometry(double a1, const TrenchGeom& g, double d1,
                          const DesignBounds& b) {
    return CoreProfile{a1, g.a2_um, g.w_um, d1, b.delta2_pct};
}

// Warm-start windows threaded through repeated solves at nearby geometries.
struct SolveHints {
    std::optional<double> a1_um;
    std::optional<double> delta1_pct;
};

// Root of D(a1) = d_target at fixed trench and contrast.  Small radii can
// sit below the fundamental-mode cutoff of a W-profile, so the radius
// range is first scanned for the feasible region; the bracket closest to
// the large-radius end wins (better confinement).  A hint narrows the scan
// to a window around the previous root before falling back to the full
// range.
std::optional<double> solve_radius_for_d(double d_target, const TrenchGeom& g,
                                         double d1, const DesignBounds& b,
                                         double anchor_nm,
                                         std::optional<double> a1_hint = {}) {
    auto resid = [&](double a1) -> std::optional<double> {
        try {
            return core_dispersion(with_geometry(a1, g, d1, b), anchor_nm)
                       .d_ps_per_km_nm -
                   d_target;
        } catch (const NumericalError&) {
            return std::nullopt;   // below cutoff at some stencil wavelength
        }
    };

    auto root_in = [&](double lo, double hi, int nodes) -> std::optional<double> {
        std::vector<double> xs(nodes);
        std::vector<std::optional<double>> fs(nodes);
        for (int i = 0; i < nodes; ++i) {
            xs[i] = lo + (hi - lo) * i / (nodes - 1);
            fs[i] = resid(xs[i]);
        }
        for (int i = nodes - 1; i > 0; --i) {
            if (!fs[i] || !fs[i - 1]) continue;
            if (*fs[i] == 0.0) return xs[i];
            if ((*fs[i] > 0.0) == (*fs[i - 1] > 0.0)) continue;
            RootOptions ro;
            ro.x_tol = 1e-6;   // um; the anchor delay is sensitive to a1 too
            auto f = [&](double a1) {
                const auto r = resid(a1);
                if (!r)
                    throw CutoffError("design radius search crossed the mode cutoff");
                return *r;
            };
            return find_root(f, xs[i - 1], xs[i], ro);
        }
        return std::nullopt;
    };

    if (a1_hint) {
        const double lo = std::max(b.a1_min_um, *a1_hint - 0.4);
        const double hi = std::min(b.a1_max_um, *a1_hint + 0.4);
        if (hi > lo)
            if (auto r = root_in(lo, hi, 5)) return r;
    }
    return root_in(b.a1_min_um, b.a1_max_um, 17);
}

std::optional<DesignedCore> solve_candidate(const DesignTarget& t,
                                            const TrenchGeom& g,
                                            const DesignBounds& b,
                                            double anchor_nm,
                                            const SolveHints& hints = {}) {
    if (!t.tau_g0_ps_per_km) {
        const double d1 = t.delta1_pct
                              ? *t.delta1_pct
                              : 0.5 * (b.delta1_min_pct + b.delta1_max_pct);
        if (d1 < b.delta1_min_pct || d1 > b.delta1_max_pct) return std::nullopt;
        const auto a1 =
            solve_radius_for_d(t.d_ps_per_km_nm, g, d1, b, anchor_nm, hints.a1_um);
        if (!a1) return std::nullopt;
        const CoreProfile p = with_geometry(*a1, g, d1, b);
        DesignedCore dc{p, core_dispersion(p, anchor_nm)};
        if (std::abs(dc.achieved.d_ps_per_km_nm - t.d_ps_per_km_nm) >
            b.d_tol_ps_per_km_nm)
            return std::nullopt;
        return dc;
    }

    // Anchor-delay residual once the radius has been retuned for the
    // dispersion target.  Infeasible contrasts are marked NaN.  The radius
    // root moves slowly along the contrast scan, so each root warms up the
    // next solve.
    std::optional<double> a1_near = hints.a1_um;
    auto tau_resid = [&](double d1) {
        const auto a1 =
            solve_radius_for_d(t.d_ps_per_km_nm, g, d1, b, anchor_nm, a1_near);
        if (!a1) return std::numeric_limits<double>::quiet_NaN();
        a1_near = *a1;
        return core_dispersion(with_geometry(*a1, g, d1, b), anchor_nm)
                   .tau_g_ps_per_km -
               *t.tau_g0_ps_per_km;
    };

    auto bracket_root = [&](double lo, double hi,
                            int nodes) -> std::optional<double> {
        std::vector<double> xs(nodes);
        std::vector<double> fs(nodes);
        for (int i = 0; i < nodes; ++i) {
            xs[i] = lo + (hi - lo) * i / (nodes - 1);
            fs[i] = tau_resid(xs[i]);
        }
        for (int i = 0; i + 1 < nodes; ++i) {
            if (std::isnan(fs[i]) || std::isnan(fs[i + 1])) continue;
            if (fs[i] == 0.0) return xs[i];
            if ((fs[i] > 0.0) == (fs[i + 1] > 0.0)) continue;
            RootOptions ro;
            ro.x_tol = 1e-6;   // percent
            return find_root(tau_resid, xs[i], xs[i + 1], ro);
        }
        return std::nullopt;
    };

    std::optional<double> d1_root;
    if (hints.delta1_pct) {
        const double lo = std::max(b.delta1_min_pct, *hints.delta1_pct - 0.02);
        const double hi = std::min(b.delta1_max_pct, *hints.delta1_pct + 0.02);
        if (hi > lo) d1_root = bracket_root(lo, hi, 5);
    }
    if (!d1_root)
        d1_root = bracket_root(b.delta1_min_pct, b.delta1_max_pct, 13);
    if (!d1_root) return std::nullopt;

    const auto a1 = solve_radius_for_d(t.d_ps_per_km_nm, g, *d1_root, b,
                                       anchor_nm, a1_near);
    if (!a1) return std::nullopt;
    const CoreProfile p = with_geometry(*a1, g, *d1_root, b);
    DesignedCore dc{p, core_dispersion(p, anchor_nm)};
    if (std::abs(dc.achieved.d_ps_per_km_nm - t.d_ps_per_km_nm) >
            b.d_tol_ps_per_km_nm ||
        std::abs(dc.achieved.tau_g_ps_per_km - *t.tau_g0_ps_per_km) >
            b.tau_tol_ps_per_km)
        return std::nullopt;
    return dc;
}

void check_bounds(const DesignBounds& b) {
    if (!(b.a1_min_um > 0.0) || !(b.a1_max_um > b.a1_min_um) ||
        !(b.a2_max_um >= b.a2_min_um) || !(b.a2_min_um >= 0.0) ||
        !(b.w_max_um >= b.w_min_um) || !(b.w_min_um >= 0.0) ||
        !(b.delta1_max_pct > b.delta1_min_pct) || !(b.delta1_min_pct > 0.0) ||
        !(b.d_tol_ps_per_km_nm > 0.0) || !(b.tau_tol_ps_per_km > 0.0))
        throw ValidationError("design bounds are not a valid box");
}

[[noreturn]] void throw_infeasible(const DesignTarget& target) {
    std::ostringstream os;
    os << "design_core: targets unreachable inside bounds (D = "
       << target.d_ps_per_km_nm << " ps/(km nm)";
    if (target.tau_g0_ps_per_km)
        os << ", anchor delay = " << *target.tau_g0_ps_per_km << " ps/km";
    os << ")";
    throw InfeasibleError(os.str());
}

}

DesignedCore design_core(const DesignTarget& target, const DesignBounds& bounds,
                         double anchor_nm) {
    check_bounds(bounds);
    if (!in_window(anchor_nm))
        throw RangeError("design_core: anchor outside the operating window");

    if (!target.s_ref_ps_per_km_nm2) {
        for (const auto& g : trench_candidates(bounds)) {
            std::optional<DesignedCore> dc;
            try {
                dc = solve_candidate(target, g, bounds, anchor_nm);
            } catch (const NumericalError&) {
                continue;   // this trench geometry hit cutoff or lost the root
            }
            if (dc) return *dc;
        }
        throw_infeasible(target);
    }

    // Slope-matched search.  The achieved slope falls as the trench moves
    // out or thins, so walk trench offset rows from the cladding side in,
    // sample the width range, and root-find the width where the slope
    // crosses the reference.  Rows without a crossing still contribute a
    // closest-slope fallback.
    const double s_ref = *target.s_ref_ps_per_km_nm2;
    std::optional<DesignedCore> best;
    double best_dist = std::numeric_limits<double>::infinity();
    constexpr double kMatched = 1e-4;   // close enough to stop searching

    std::vector<double> rows;
    for (double f : {1.0, 0.75, 0.5, 0.25, 0.0}) {
        const double a2 =
            bounds.a2_min_um + f * (bounds.a2_max_um - bounds.a2_min_um);
        if (rows.empty() || rows.back() != a2) rows.push_back(a2);
    }

    for (double a2 : rows) {
        const double before = best_dist;
        constexpr int kW = 5;
        std::array<double, kW> ws;
        std::array<std::optional<DesignedCore>, kW> cores;
        SolveHints hints;
        for (int i = 0; i < kW; ++i) {
            ws[i] = bounds.w_min_um +
                    (bounds.w_max_um - bounds.w_min_um) * i / (kW - 1);
            try {
                cores[i] =
                    solve_candidate(target, {a2, ws[i]}, bounds, anchor_nm, hints);
            } catch (const NumericalError&) {
                cores[i].reset();
            }
            if (!cores[i]) continue;
            hints = {cores[i]->profile.a1_um, cores[i]->profile.delta1_pct};
            const double dist =
                std::abs(cores[i]->achieved.s_ps_per_km_nm2 - s_ref);
            if (dist < best_dist) {
                best = cores[i];
                best_dist = dist;
            }
        }
        if (best_dist <= kMatched) return *best;

        for (int i = 0; i + 1 < kW; ++i) {
            if (!cores[i] || !cores[i + 1]) continue;
            const double e0 = cores[i]->achieved.s_ps_per_km_nm2 - s_ref;
            const double e1 = cores[i + 1]->achieved.s_ps_per_km_nm2 - s_ref;
            if ((e0 > 0.0) == (e1 > 0.0)) continue;
            std::optional<DesignedCore> at_w;
            SolveHints rh{cores[i]->profile.a1_um, cores[i]->profile.delta1_pct};
            auto slope_err = [&](double w) {
                auto dc = solve_candidate(target, {a2, w}, bounds, anchor_nm, rh);
                if (!dc)
                    throw CutoffError("slope search lost trench feasibility");
                rh = {dc->profile.a1_um, dc->profile.delta1_pct};
                at_w = dc;
                return dc->achieved.s_ps_per_km_nm2 - s_ref;
            };
            RootOptions ro;
            ro.x_tol = 1e-3;   // um of trench width
            try {
                find_root(slope_err, ws[i], ws[i + 1], ro);
            } catch (const NumericalError&) {
                continue;   // feasibility hole inside the interval
            }
            if (at_w) {
                const double dist =
                    std::abs(at_w->achieved.s_ps_per_km_nm2 - s_ref);
                if (dist < best_dist) {
                    best = at_w;
                    best_dist = dist;
                }
            }
            break;   // one crossing per row is enough
        }
        if (best_dist <= kMatched) return *best;
        // Rows deeper in rarely recover once the match stops improving.
        if (std::isfinite(best_dist) && best_dist >= before - 1e-4) break;
    }
    if (best) return *best;
    throw_infeasible(target);
}

LinkDesign design_link(const std::vector<double>& d_targets_ps_per_km_nm,
                       std::optional<double> tau_g0_ps_per_km,
                       const DesignBounds& bounds, double anchor_nm) {
    const std::vector<double>& targets = d_targets_ps_per_km_nm;
    if (targets.empty())
        throw ValidationError("design_link: no dispersion targets");
    check_bounds(bounds);

    const size_t n = targets.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t i, size_t j) { return targets[i] < targets[j]; });

    std::vector<std::optional<DesignedCore>> designed(n);

    // The lowest dispersion target needs the deepest contrast and the
    // strongest trench pull, so it goes first, anchored high in the
    // contrast range: the rest of the ladder sits at progressively lower
    // contrast for the same anchor delay and stays inside the bounds.
    // Aiming its slope reference above anything the family reaches lands
    // the anchor on the far-trench branch, whose slope the other targets
    // can track; close-trench solutions sit on a steep flank the rest of
    // the ladder cannot follow.
    DesignTarget low_t;
    low_t.d_ps_per_km_nm = targets[order[0]];
    low_t.tau_g0_ps_per_km = tau_g0_ps_per_km;
    low_t.s_ref_ps_per_km_nm2 = 0.1;
    if (!tau_g0_ps_per_km)
        low_t.delta1_pct =
            bounds.delta1_min_pct +
            0.75 * (bounds.delta1_max_pct - bounds.delta1_min_pct);
    const DesignedCore low_end = design_core(low_t, bounds, anchor_nm);
    const double common_tau =
        tau_g0_ps_per_km.value_or(low_end.achieved.tau_g_ps_per_km);
    designed[order[0]] = low_end;

    if (n > 1) {
        // A single common slope is usually out of reach: the achievable
        // slope shrinks as the dispersion target grows.  Let the highest
        // target find the slope it can reach, then walk the interior
        // targets down toward it, re-splitting the remaining slope gap
        // evenly so neighbouring cores stay close even when one falls
        // short of its reference.
        DesignTarget high_t;
        high_t.d_ps_per_km_nm = targets[order[n - 1]];
        high_t.tau_g0_ps_per_km = common_tau;
        high_t.s_ref_ps_per_km_nm2 = low_end.achieved.s_ps_per_km_nm2;
        const DesignedCore high_end = design_core(high_t, bounds, anchor_nm);
        const double s_hi = high_end.achieved.s_ps_per_km_nm2;
        designed[order[n - 1]] = high_end;

        double s_prev = low_end.achieved.s_ps_per_km_nm2;
        for (size_t k = 1; k + 1 < n; ++k) {
            DesignTarget t;
            t.d_ps_per_km_nm = targets[order[k]];
            t.tau_g0_ps_per_km = common_tau;
            t.s_ref_ps_per_km_nm2 =
                s_prev + (s_hi - s_prev) / static_cast<double>(n - k);
            designed[order[k]] = design_core(t, bounds, anchor_nm);
            s_prev = designed[order[k]]->achieved.s_ps_per_km_nm2;
        }
    }

    LinkDesign out;
    out.common_tau_g0_ps_per_km = common_tau;
    for (size_t i = 0; i < n; ++i) {
        const DesignedCore& dc = *designed[i];
        FiberCore core;
        core.id = static_cast<int>(i) + 1;
        core.profile = dc.profile;
        core.model.anchor_nm = anchor_nm;
        core.model.tau_g0_ps_per_km = common_tau;   // trims equalize anchors
        core.model.d_ps_per_km_nm = dc.achieved.d_ps_per_km_nm;
        core.model.s_ps_per_km_nm2 = dc.achieved.s_ps_per_km_nm2;
        core.n_eff = dc.achieved.n_eff;
        out.cores.push_back(core);
        out.achieved.push_back(dc.achieved);
    }
    return out;
}

}
