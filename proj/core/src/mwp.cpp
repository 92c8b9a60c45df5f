// SPDX-License-Identifier: Apache-2.0
#include "mcfttdl/mwp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mcfttdl/errors.hpp"

namespace mcfttdl {

namespace {

void check_weights(const std::vector<std::complex<double>>& w) {
    if (w.size() < 2)
        throw ValidationError("tap bank needs at least two weights");
    double total = 0.0;
    for (const auto& a : w) total += std::abs(a);
    if (!(total > 0.0))
        throw ValidationError("tap bank is all zeros");
}

double weight_norm(const std::vector<std::complex<double>>& w) {
    double total = 0.0;
    for (const auto& a : w) total += std::abs(a);
    return total;
}

std::vector<double> to_db_normalized(const std::vector<double>& mag,
                                     double peak) {
    std::vector<double> db;
    db.reserve(mag.size());
    for (double m : mag)
        db.push_back(20.0 * std::log10(
                         std::max(m / peak, 1e-300)));   // floor, not -inf
    return db;
}

}

std::vector<std::complex<double>> uniform_taps(int n) {
    if (n < 2) throw ValidationError("uniform_taps: need at least two taps");
    return std::vector<std::complex<double>>(static_cast<size_t>(n),
                                             {1.0, 0.0});
}

std::complex<double> filter_point(const std::vector<std::complex<double>>& weights,
                                  double delay_increment_s, double f_hz) {
    std::complex<double> acc{0.0, 0.0};
    for (size_t n = 0; n < weights.size(); ++n) {
        const double phase = -2.0 * kPi * f_hz * static_cast<double>(n) *
                             delay_increment_s;
        acc += weights[n] * std::polar(1.0, phase);
    }
    return acc;
}

std::complex<double>
filter_point_delays(const std::vector<std::complex<double>>& weights,
                    const std::vector<double>& delays_s, double f_hz) {
    if (weights.size() != delays_s.size())
        throw ValidationError("filter_point_delays: one delay per weight required");
    std::complex<double> acc{0.0, 0.0};
    for (size_t n = 0; n < weights.size(); ++n)
        acc += weights[n] * std::polar(1.0, -2.0 * kPi * f_hz * delays_s[n]);
    return acc;
}

std::complex<double>
array_factor_point(const std::vector<std::complex<double>>& weights,
                   double delay_increment_s, double element_spacing_m,
                   double carrier_hz, double theta_deg) {
    const double st = std::sin(theta_deg * kPi / 180.0);
    const double step = delay_increment_s - element_spacing_m * st / kSpeedOfLightMps;
    std::complex<double> acc{0.0, 0.0};
    for (size_t n = 0; n < weights.size(); ++n) {
        const double phase = -2.0 * kPi * carrier_hz * static_cast<double>(n) * step;
        acc += weights[n] * std::polar(1.0, phase);
    }
    return acc;
}

FrequencyResponse filter_response(const std::vector<std::complex<double>>& weights,
                                  double delay_increment_s,
                                  const std::vector<double>& freq_hz) {
    check_weights(weights);
    if (!(delay_increment_s > 0.0))
        throw ValidationError("filter_response: tap increment must be positive");
    if (freq_hz.empty())
        throw ValidationError("filter_response: empty frequency grid");

    std::vector<double> mag;
    mag.reserve(freq_hz.size());
    double peak = 0.0;
    for (double f : freq_hz) {
        const double m = std::abs(filter_point(weights, delay_increment_s, f));
        mag.push_back(m);
        peak = std::max(peak, m);
    }
    if (!(peak > 0.0))
        throw ValidationError("filter_response: response vanished on the grid");

    FrequencyResponse out;
    out.freq_hz = freq_hz;
    out.mag_db = to_db_normalized(mag, peak);
    out.fsr_hz = 1.0 / delay_increment_s;
    return out;
}

ExactFilterResult
filter_response_from_delays(const std::vector<std::complex<double>>& weights,
                            const std::vector<double>& delays_s,
                            const std::vector<double>& freq_hz) {
    check_weights(weights);
    if (weights.size() != delays_s.size())
        throw ValidationError("filter_response_from_delays: one delay per weight "
                              "required");
    if (freq_hz.empty())
        throw ValidationError("filter_response_from_delays: empty frequency grid");

    // The common delay is pure phase; strip it to keep the phases small.
    std::vector<double> rel(delays_s);
    const double base = rel.front();
    for (double& d : rel) d -= base;

    std::vector<double> mag;
    mag.reserve(freq_hz.size());
    double peak = 0.0;
    for (double f : freq_hz) {
        const double m = std::abs(filter_point_delays(weights, rel, f));
        mag.push_back(m);
        peak = std::max(peak, m);
    }
    if (!(peak > 0.0))
        throw ValidationError("filter_response_from_delays: response vanished");

    ExactFilterResult out;
    out.response.freq_hz = freq_hz;
    out.response.mag_db = to_db_normalized(mag, peak);
    out.mean_increment_s = (delays_s.back() - delays_s.front()) /
                           static_cast<double>(delays_s.size() - 1);
    out.response.fsr_hz = out.mean_increment_s != 0.0
                              ? 1.0 / std::abs(out.mean_increment_s)
                              : std::numeric_limits<double>::infinity();
    out.peak_degradation_db =
        20.0 * std::log10(weight_norm(weights) / peak);
    return out;
}

ExactFilterResult
spatial_filter_response(const McfLink& link, double wavelength_nm,
                        const std::vector<std::complex<double>>& weights,
                        const std::vector<double>& freq_hz) {
    if (weights.size() != link.cores.size())
        throw ValidationError("spatial_filter_response: one weight per core "
                              "required");
    const auto per_km = delay_vector(link, wavelength_nm);
    std::vector<double> delays_s;
    delays_s.reserve(per_km.size());
    for (double d : per_km) delays_s.push_back(d * link.length_km * 1e-12);
    return filter_response_from_delays(weights, delays_s, freq_hz);
}

ExactFilterResult
wavelength_filter_response(const FiberCore& core, double length_km,
                           const TapConfig& taps,
                           const std::vector<double>& freq_hz) {
    if (taps.regime != TapRegime::wavelength)
        throw ValidationError("wavelength_filter_response: tap config is not "
                              "wavelength-diversity");
    if (taps.channels < 2)
        throw ValidationError("wavelength_filter_response: need at least two "
                              "channels");
    if (!(taps.delta_lambda_nm > 0.0))
        throw ValidationError("wavelength_filter_response: channel spacing must "
                              "be positive");
    if (taps.weights.size() != static_cast<size_t>(taps.channels))
        throw ValidationError("wavelength_filter_response: one weight per "
                              "channel required");
    if (!(length_km > 0.0))
        throw ValidationError("wavelength_filter_response: length must be positive");

    std::vector<double> delays_s;
    delays_s.reserve(static_cast<size_t>(taps.channels));
    for (int m = 0; m < taps.channels; ++m) {
        const double l = taps.lambda1_nm + m * taps.delta_lambda_nm;
        delays_s.push_back(group_delay(core, l) * length_km * 1e-12);
    }
    return filter_response_from_delays(taps.weights, delays_s, freq_hz);
}

RadiationPattern array_factor(const std::vector<std::complex<double>>& weights,
                              double delay_increment_s, double element_spacing_m,
                              double carrier_hz,
                              const std::vector<double>& angles_deg) {
    check_weights(weights);
    if (!(element_spacing_m > 0.0))
        throw ValidationError("array_factor: element spacing must be positive");
    if (!(carrier_hz > 0.0))
        throw ValidationError("array_factor: carrier must be positive");
    if (angles_deg.empty())
        throw ValidationError("array_factor: empty angle grid");
    for (double a : angles_deg)
        if (a < -90.0 || a > 90.0)
            throw RangeError("array_factor: angles must lie in [-90, 90] deg");

    std::vector<double> mag;
    mag.reserve(angles_deg.size());
    double peak = 0.0;
    size_t best = 0;
    for (size_t i = 0; i < angles_deg.size(); ++i) {
        const double m = std::abs(array_factor_point(
            weights, delay_increment_s, element_spacing_m, carrier_hz,
            angles_deg[i]));
        mag.push_back(m);
        peak = std::max(peak, m);
        // Argmax with deterministic ties: prefer the smaller |angle|, then
        // the positive one.  Symmetric patterns tie bit-exactly.
        const double cur = angles_deg[i], win = angles_deg[best];
        const bool better =
            m > mag[best] ||
            (m == mag[best] && (std::abs(cur) < std::abs(win) ||
                                (std::abs(cur) == std::abs(win) && cur > win)));
        if (i > 0 && better) best = i;
    }
    if (!(peak > 0.0))
        throw ValidationError("array_factor: pattern vanished on the grid");

    RadiationPattern out;
    out.angle_deg = angles_deg;
    out.af_db = to_db_normalized(mag, peak);
    out.main_lobe_angle_deg = angles_deg[best];
    return out;
}

SteeringResult steering_angle(double delay_increment_s,
                              double element_spacing_m, double carrier_hz) {
    if (!(element_spacing_m > 0.0))
        throw ValidationError("steering_angle: element spacing must be positive");
    const double s = kSpeedOfLightMps * delay_increment_s / element_spacing_m;
    if (std::abs(s) <= 1.0)
        return {std::asin(s) * 180.0 / kPi, false, 0};

    if (!(carrier_hz > 0.0))
        throw ValidationError("steering_angle: aliased steering needs a positive "
                              "carrier");
    // Grating lobes repeat every c / (nu d_x) in sin(theta).
    const double g = kSpeedOfLightMps / (carrier_hz * element_spacing_m);
    const int k_max = static_cast<int>(std::ceil((std::abs(s) + 1.0) / g)) + 1;
    const double sign = s > 0.0 ? 1.0 : -1.0;
    for (int k = 1; k <= k_max; ++k) {
        const double folded = s - sign * k * g;
        if (std::abs(folded) <= 1.0)
            return {std::asin(folded) * 180.0 / kPi, true,
                    static_cast<int>(sign) * k};
    }
    std::ostringstream os;
    os << "steering_angle: no visible lobe (sin = " << s
       << ", grating period " << g << ")";
    throw NoVisibleLobeError(os.str());
}

double spatial_delay_increment_s(const McfLink& link, double wavelength_nm) {
    const auto per_km = delay_vector(link, wavelength_nm);
    if (per_km.size() < 2)
        throw ValidationError("spatial_delay_increment_s: need at least two cores");
    return (per_km.back() - per_km.front()) /
           static_cast<double>(per_km.size() - 1) * link.length_km * 1e-12;
}

std::vector<double> default_frequency_grid() {
    std::vector<double> f;
    f.reserve(2001);
    for (int i = 0; i <= 2000; ++i) f.push_back(i * 1e7);
    return f;
}

std::vector<double> default_angle_grid() {
    std::vector<double> a;
    a.reserve(1801);
    for (int i = 0; i <= 1800; ++i) a.push_back(-90.0 + 0.1 * i);
    return a;
}

}
