// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_CONSTANTS_HPP
#define MCFTTDL_CONSTANTS_HPP

namespace mcfttdl {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Exact by SI definition.
inline constexpr double kSpeedOfLightMps = 299792458.0;

// Group delay accumulated over 1 km by a medium of unit group index,
// expressed in ps:  1e3 m / c * 1e12 ps/s.
inline constexpr double kPsPerKmPerGroupIndex = 1.0e15 / kSpeedOfLightMps;

// Nominal anchor delay for the reference link, 4900 ns/km in ps/km.
inline constexpr double kDefaultTauG0PsPerKm = 4.9e6;

// Operating window of the delay model.  Group-delay evaluations outside
// this band are rejected rather than extrapolated.
inline constexpr double kWindowMinNm = 1500.0;
inline constexpr double kWindowMaxNm = 1600.0;

inline constexpr bool in_window(double wavelength_nm) {
    return wavelength_nm >= kWindowMinNm && wavelength_nm <= kWindowMaxNm;
}

}

#endif
