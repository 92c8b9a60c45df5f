// SPDX-License-Identifier: Apache-2.0
#include "mcfttdl/tolerance.hpp"

#include <cmath>
#include <random>

#include "mcfttdl/errors.hpp"
#include "mcfttdl/mode_solver.hpp"

namespace mcfttdl {

namespace {

// 53-bit uniform in [0, 1).  Explicit mapping instead of
// std::uniform_real_distribution, whose output is not pinned by the
// standard; reports must be bit-identical across platforms.
double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return splitmix64(seed + 0x9e3779b97f4a7c15ULL *
                                 (static_cast<std::uint64_t>(trial) + 1));
}

void check_spec(const PerturbationSpec& spec) {
    if (spec.halfwidth_um < 0.0)
        throw ValidationError("perturbation halfwidth must be >= 0");
    if (spec.trials < 1)
        throw ValidationError("perturbation trials must be >= 1");
}

constexpr double kMinRadiusUm = 0.2;   // physical floor for a drawn radius

McfLink perturb_with_engine(const McfLink& link, const PerturbationSpec& spec,
                            const LinkSensitivity& sens,
                            std::mt19937_64& eng, int* resamples,
                            std::vector<double>* deltas) {
    McfLink out = link;
    for (size_t i = 0; i < out.cores.size(); ++i) {
        auto& core = out.cores[i];
        double delta;
        for (;;) {
            delta = spec.halfwidth_um * (2.0 * uniform01(eng) - 1.0);
            if (core.profile.a1_um + delta > kMinRadiusUm) break;
            if (resamples) ++*resamples;
        }
        const auto& s = sens.per_core[i];
        core.profile.a1_um += delta;
        core.model.tau_g0_ps_per_km += s.dtau_per_um * delta;
        core.model.d_ps_per_km_nm += s.dd_per_um * delta;
        core.model.s_ps_per_km_nm2 += s.ds_per_um * delta;
        core.n_eff += s.dneff_per_um * delta;
        if (deltas) deltas->push_back(delta);
    }
    return out;
}

}

RadiusSensitivity radius_sensitivity(const CoreProfile& profile,
                                     double anchor_nm, double step_um) {
    if (!(step_um > 0.0))
        throw ValidationError("radius_sensitivity: step must be positive");
    CoreProfile lo = profile, hi = profile;
    lo.a1_um -= step_um;
    hi.a1_um += step_um;
    if (!(lo.a1_um > 0.0))
        throw ValidationError("radius_sensitivity: step exceeds the core radius");
    const DispersionSample a = core_dispersion(lo, anchor_nm);
    const DispersionSample b = core_dispersion(hi, anchor_nm);
    const double inv = 1.0 / (2.0 * step_um);
    RadiusSensitivity s;
    s.dtau_per_um = (b.tau_g_ps_per_km - a.tau_g_ps_per_km) * inv;
    s.dd_per_um = (b.d_ps_per_km_nm - a.d_ps_per_km_nm) * inv;
    s.ds_per_um = (b.s_ps_per_km_nm2 - a.s_ps_per_km_nm2) * inv;
    s.dneff_per_um = (b.n_eff - a.n_eff) * inv;
    return s;
}

LinkSensitivity link_radius_sensitivity(const McfLink& link, double step_um) {
    validate_link(link);
    LinkSensitivity out;
    const double anchor = link.cores.front().model.anchor_nm;
    for (const auto& c : link.cores)
        out.per_core.push_back(radius_sensitivity(c.profile, anchor, step_um));
    return out;
}

McfLink perturb_link(const McfLink& link, const PerturbationSpec& spec,
                     const LinkSensitivity& sensitivity) {
    validate_link(link);
    check_spec(spec);
    if (sensitivity.per_core.size() != link.cores.size())
        throw ValidationError("perturb_link: sensitivity table size mismatch");
    std::mt19937_64 eng(spec.seed);
    return perturb_with_engine(link, spec, sensitivity, eng, nullptr, nullptr);
}

McfLink perturb_link(const McfLink& link, const PerturbationSpec& spec) {
    return perturb_link(link, spec, link_radius_sensitivity(link));
}

McfLink compensate_delays(const McfLink& link,
                          double nominal_tau_g0_ps_per_km) {
    validate_link(link);
    McfLink out = link;
    for (auto& c : out.cores)
        c.model.tau_g0_ps_per_km = nominal_tau_g0_ps_per_km;
    return out;
}

McfLink compensate_delays(const McfLink& link) {
    validate_link(link);
    double mean = 0.0;
    for (const auto& c : link.cores) mean += c.model.tau_g0_ps_per_km;
    return compensate_delays(link, mean / link.cores.size());
}

ToleranceReport run_tolerance_study(const McfLink& link,
                                    const PerturbationSpec& spec,
                                    const std::vector<double>& wavelengths_nm) {
    validate_link(link);
    check_spec(spec);
    if (wavelengths_nm.empty())
        throw ValidationError("run_tolerance_study: no wavelengths given");
    for (double l : wavelengths_nm)
        if (!in_window(l))
            throw RangeError("run_tolerance_study: wavelength outside the "
                             "operating window");
    const double nominal_tau = link.cores.front().model.tau_g0_ps_per_km;
    for (const auto& c : link.cores)
        if (c.model.tau_g0_ps_per_km != nominal_tau)
            throw ModelConsistencyError(
                "run_tolerance_study: the nominal link must carry one common "
                "anchor delay");

    const LinkSensitivity sens = link_radius_sensitivity(link);
    const size_t n_cores = link.cores.size();
    const size_t n_l = wavelengths_nm.size();

    // Nominal delays and increments once.
    std::vector<std::vector<double>> nominal(n_l);
    for (size_t li = 0; li < n_l; ++li)
        nominal[li] = delay_vector(link, wavelengths_nm[li]);

    ToleranceReport report;
    report.spec = spec;
    report.wavelengths_nm = wavelengths_nm;
    report.trials.reserve(static_cast<size_t>(spec.trials));

    double sq_before = 0.0, sq_after = 0.0;
    for (int t = 0; t < spec.trials; ++t) {
        ToleranceTrial trial;
        trial.index = t;
        std::mt19937_64 eng(trial_seed(spec.seed, t));
        const McfLink pert = perturb_with_engine(link, spec, sens, eng,
                                                 &trial.resamples,
                                                 &trial.delta_a1_um);
        const McfLink comp = compensate_delays(pert, nominal_tau);

        trial.err_before.resize(n_l);
        trial.err_after.resize(n_l);
        double tb = 0.0, ta = 0.0, ib = 0.0, ia = 0.0;
        for (size_t li = 0; li < n_l; ++li) {
            const auto before = delay_vector(pert, wavelengths_nm[li]);
            const auto after = delay_vector(comp, wavelengths_nm[li]);
            trial.err_before[li].resize(n_cores);
            trial.err_after[li].resize(n_cores);
            for (size_t c = 0; c < n_cores; ++c) {
                const double eb = before[c] - nominal[li][c];
                const double ea = after[c] - nominal[li][c];
                trial.err_before[li][c] = eb;
                trial.err_after[li][c] = ea;
                tb += eb * eb;
                ta += ea * ea;
            }
            for (size_t c = 0; c + 1 < n_cores; ++c) {
                const double ninc = nominal[li][c + 1] - nominal[li][c];
                const double db = (before[c + 1] - before[c]) - ninc;
                const double da = (after[c + 1] - after[c]) - ninc;
                ib += db * db;
                ia += da * da;
            }
        }
        const double n_delay = static_cast<double>(n_l * n_cores);
        const double n_inc = static_cast<double>(n_l * (n_cores - 1));
        trial.rms_before = std::sqrt(tb / n_delay);
        trial.rms_after = std::sqrt(ta / n_delay);
        trial.inc_rms_before = n_inc > 0 ? std::sqrt(ib / n_inc) : 0.0;
        trial.inc_rms_after = n_inc > 0 ? std::sqrt(ia / n_inc) : 0.0;
        sq_before += tb / n_delay;
        sq_after += ta / n_delay;
        if (trial.inc_rms_before > trial.inc_rms_after)
            ++report.trials_before_worse;
        report.trials.push_back(std::move(trial));
    }
    report.rms_before = std::sqrt(sq_before / spec.trials);
    report.rms_after = std::sqrt(sq_after / spec.trials);
    return report;
}

}
