// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_MWP_HPP
#define MCFTTDL_MWP_HPP

#include <complex>
#include <vector>

#include "mcfttdl/fiber.hpp"

namespace mcfttdl {

enum class TapRegime { spatial, wavelength };

// One microwave-photonics tap bank: complex weights feeding either the
// cores of a link (spatial diversity) or a wavelength comb launched into
// one core (wavelength diversity).
struct TapConfig {
    std::vector<std::complex<double>> weights;
    TapRegime regime = TapRegime::spatial;
    double lambda1_nm = 1550.0;      // first channel (wavelength regime)
    double delta_lambda_nm = 0.0;    // channel spacing
    int channels = 0;                // M
    double element_spacing_m = 0.03; // radiating element pitch d_x
    double carrier_hz = 5e9;         // RF carrier
};

std::vector<std::complex<double>> uniform_taps(int n);

// ---- point evaluators (unnormalized transfer values) ----

// FIR response of uniformly spaced taps: sum_n a_n exp(-j 2 pi f n dt).
std::complex<double> filter_point(const std::vector<std::complex<double>>& weights,
                                  double delay_increment_s, double f_hz);

// Same sum from explicit per-tap delays.
std::complex<double>
filter_point_delays(const std::vector<std::complex<double>>& weights,
                    const std::vector<double>& delays_s, double f_hz);

// Array factor of a linear array fed through the delay line, at the RF
// carrier: sum_n a_n exp(-j 2 pi nu n (dt - d_x sin(theta)/c)).
std::complex<double>
array_factor_point(const std::vector<std::complex<double>>& weights,
                   double delay_increment_s, double element_spacing_m,
                   double carrier_hz, double theta_deg);

// ---- grid responses ----

struct FrequencyResponse {
    std::vector<double> freq_hz;
    std::vector<double> mag_db;   // normalized, peak at 0 dB
    double fsr_hz = 0.0;
};

// Ideal uniform-increment FIR comb.  The free spectral range is exactly
// 1/dt.
FrequencyResponse filter_response(const std::vector<std::complex<double>>& weights,
                                  double delay_increment_s,
                                  const std::vector<double>& freq_hz);

struct ExactFilterResult {
    FrequencyResponse response;
    // Peak shortfall against the perfectly coherent comb, in dB >= 0.
    // Nonzero increment spread decorrelates the taps at the peak.
    double peak_degradation_db = 0.0;
    double mean_increment_s = 0.0;
};

// Response from explicit per-tap delays (common delay removed; it cannot
// move the magnitude).  FSR is measured from the mean tap increment.
ExactFilterResult
filter_response_from_delays(const std::vector<std::complex<double>>& weights,
                            const std::vector<double>& delays_s,
                            const std::vector<double>& freq_hz);

// Spatial diversity over a link: tap n rides core n; one weight per core.
ExactFilterResult
spatial_filter_response(const McfLink& link, double wavelength_nm,
                        const std::vector<std::complex<double>>& weights,
                        const std::vector<double>& freq_hz);

// Wavelength diversity in one core: taps ride an M-channel comb from
// lambda1 at spacing delta_lambda; one weight per channel.
ExactFilterResult
wavelength_filter_response(const FiberCore& core, double length_km,
                           const TapConfig& taps,
                           const std::vector<double>& freq_hz);

struct RadiationPattern {
    std::vector<double> angle_deg;   // within [-90, 90]
    std::vector<double> af_db;       // normalized, peak at 0 dB
    double main_lobe_angle_deg = 0.0;
};

// Array factor across the angle grid.  The main lobe is the grid argmax;
// magnitude ties resolve toward broadside, then to the positive angle.
RadiationPattern array_factor(const std::vector<std::complex<double>>& weights,
                              double delay_increment_s, double element_spacing_m,
                              double carrier_hz,
                              const std::vector<double>& angles_deg);

struct SteeringResult {
    double angle_deg = 0.0;
    bool aliased = false;
    int lobe_order = 0;   // grating-lobe index used when aliased
};

// Beam direction for a given tap increment: sin(theta) = c dt / d_x.
// When that exceeds unity the carrier's grating-lobe comb is folded back
// until a visible direction appears.
SteeringResult steering_angle(double delay_increment_s,
                              double element_spacing_m, double carrier_hz);

// Mean spatial tap increment of a link in seconds (over the full span).
double spatial_delay_increment_s(const McfLink& link, double wavelength_nm);

// Default report grids: 0..20 GHz every 10 MHz, -90..90 deg every 0.1 deg.
std::vector<double> default_frequency_grid();
std::vector<double> default_angle_grid();

}

#endif
