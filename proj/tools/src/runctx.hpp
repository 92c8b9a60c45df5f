// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_TOOLS_RUNCTX_HPP
#define MCFTTDL_TOOLS_RUNCTX_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "mcfttdl/fiber.hpp"

namespace mcfttdl::tools {

// Everything one command invocation needs: where to write, which fiber
// design to run against, and the artifact list the manifest will record.
struct RunContext {
    std::filesystem::path out_dir;
    nlohmann::json design;        // resolved design document; null for `design`
    std::string design_path;      // provenance: "builtin", file path, "embedded"
    std::vector<std::string> artifacts;

    // Write one artifact (path relative to out_dir) and record it.
    void write_text(const std::string& rel_path, const std::string& content);

    McfLink link() const;
};

// Resolve the design document: empty or "builtin" loads the bundled one.
nlohmann::json resolve_design(const std::string& path);

// Flag > environment (MCFTTDL_OUT_DIR) > "out".
std::filesystem::path resolve_out_dir(const std::string& flag_value);

// The run manifest records inputs and outputs so the run can be replayed
// from the manifest alone; no timestamps, so replays are byte-identical.
void write_manifest(const RunContext& ctx, const std::string& subcommand,
                    nlohmann::json config, const nlohmann::json& results);

}

#endif
