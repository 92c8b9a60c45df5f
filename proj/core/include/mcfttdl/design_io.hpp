// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_DESIGN_IO_HPP
#define MCFTTDL_DESIGN_IO_HPP

#include <optional>
#include <string>

#include "mcfttdl/fiber.hpp"
#include "mcfttdl/mode_solver.hpp"

namespace mcfttdl {

// Fiber designs travel as JSON documents with units spelled out in the
// key names.  Layout is either a named template ("hex7", "ring") whose
// slots are filled by the arrangement optimizer or an explicit id list,
// or fully explicit per-core positions plus an adjacency list.  Loading
// reports every problem found in one ConfigError; unknown keys are
// rejected (typos must not silently change physics).

McfLink load_design_text(const std::string& json_text);
McfLink load_design_file(const std::string& path);

// Serialize as an explicit-layout document (positions and adjacency
// resolved).  Requires an equalized link: one anchor wavelength and one
// anchor delay across cores.
std::string save_design_text(const McfLink& link);
void save_design_file(const McfLink& link, const std::string& path);

// The bundled reference design (seven heterogeneous trench-assisted
// cores).  Shipped as designs/table1_mcf.json and embedded here so the
// library needs no install-time file lookup.
const char* table1_design_text();

// Input document for the design search.
struct DesignRequest {
    std::vector<double> d_targets_ps_per_km_nm;
    std::optional<double> tau_g0_ps_per_km;   // empty: common value chosen
    DesignBounds bounds;
    double length_km = 10.0;
    double pitch_um = 35.0;
    double cladding_diameter_um = 125.0;
    double anchor_nm = 1550.0;
};

DesignRequest load_design_request_text(const std::string& json_text);
DesignRequest load_design_request_file(const std::string& path);

}

#endif
