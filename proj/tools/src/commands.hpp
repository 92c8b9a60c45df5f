// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_TOOLS_COMMANDS_HPP
#define MCFTTDL_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "runctx.hpp"

namespace mcfttdl::tools {

// One struct per subcommand; every field round-trips through the run
// manifest, so a manifest alone can replay the run.

struct DelaysOpts {
    double lambda_min_nm = 1530.0;
    double lambda_max_nm = 1570.0;
    double step_nm = 5.0;
};

struct FilterOpts {
    std::string regime = "spatial";      // or "wavelength"
    std::vector<double> lambda1_nm = {1560.0, 1575.0};
    double delta_lambda_nm = 0.8;        // wavelength-regime channel spacing
    int channels = 7;                    // wavelength-regime comb size
    int core_id = 1;                     // wavelength-regime carrier core
    double freq_max_hz = 2.0e10;
    double freq_step_hz = 1.0e7;
};

struct BeamformOpts {
    std::vector<double> lambda1_nm = {1560.0, 1575.0};
    double element_spacing_m = 0.03;
    double carrier_hz = 5.0e9;
    double angle_step_deg = 0.1;
    // Presentation-only shift of the angle axis so broadside reads 90 deg
    // on a polar plot; the physics stays in the broadside convention.
    bool polar_convention = false;
};

struct BendOpts {
    double radius_min_mm = 50.0;
    double radius_max_mm = 1000.0;
    double radius_step_mm = 10.0;
    double orientation_deg = 0.0;
    double wavelength_nm = 1550.0;
    // Rotate each core into the bend plane, the worst orientation.
    bool worst_case = false;
};

struct TwistOpts {
    double radius_mm = 500.0;
    double step_deg = 1.0;
    double wavelength_nm = 1550.0;
};

struct XtalkOpts {
    double radius_min_mm = 20.0;
    double radius_max_mm = 500.0;
    double radius_step_mm = 1.0;
    double kappa_per_m = 1.0;
    double floor_db = -90.0;
};

struct ToleranceOpts {
    int trials = 1000;
    std::uint64_t seed = 1;
    double halfwidth_um = 0.1;
    std::vector<double> wavelengths_nm = {1530.0, 1550.0, 1570.0};
};

struct DesignOpts {
    nlohmann::json request;              // design-request document
};

struct ReproduceOpts {
    std::vector<std::string> figures = {"fig5b", "fig6",  "fig7", "fig8",
                                        "fig9",  "fig10", "fig11"};
};

void to_json(nlohmann::json& j, const DelaysOpts& o);
void from_json(const nlohmann::json& j, DelaysOpts& o);
void to_json(nlohmann::json& j, const FilterOpts& o);
void from_json(const nlohmann::json& j, FilterOpts& o);
void to_json(nlohmann::json& j, const BeamformOpts& o);
void from_json(const nlohmann::json& j, BeamformOpts& o);
void to_json(nlohmann::json& j, const BendOpts& o);
void from_json(const nlohmann::json& j, BendOpts& o);
void to_json(nlohmann::json& j, const TwistOpts& o);
void from_json(const nlohmann::json& j, TwistOpts& o);
void to_json(nlohmann::json& j, const XtalkOpts& o);
void from_json(const nlohmann::json& j, XtalkOpts& o);
void to_json(nlohmann::json& j, const ToleranceOpts& o);
void from_json(const nlohmann::json& j, ToleranceOpts& o);
void to_json(nlohmann::json& j, const DesignOpts& o);
void from_json(const nlohmann::json& j, DesignOpts& o);
void to_json(nlohmann::json& j, const ReproduceOpts& o);
void from_json(const nlohmann::json& j, ReproduceOpts& o);

// Each command writes its artifacts into the context and returns the
// summary values recorded under "results" in the manifest.
nlohmann::json run_delays(const DelaysOpts& o, RunContext& ctx);
nlohmann::json run_filter(const FilterOpts& o, RunContext& ctx);
nlohmann::json run_beamform(const BeamformOpts& o, RunContext& ctx);
nlohmann::json run_bend(const BendOpts& o, RunContext& ctx);
nlohmann::json run_twist(const TwistOpts& o, RunContext& ctx);
nlohmann::json run_xtalk(const XtalkOpts& o, RunContext& ctx);
nlohmann::json run_tolerance(const ToleranceOpts& o, RunContext& ctx);
nlohmann::json run_design(const DesignOpts& o, RunContext& ctx);
nlohmann::json run_reproduce(const ReproduceOpts& o, RunContext& ctx);

}

#endif
