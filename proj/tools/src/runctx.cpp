// SPDX-License-Identifier: Apache-2.0
#include "runctx.hpp"

#include <cstdlib>

#include "csvio.hpp"
#include "mcfttdl/design_io.hpp"
#include "mcfttdl/errors.hpp"
#include "mcfttdl/version.hpp"

namespace mcfttdl::tools {

using nlohmann::json;

void RunContext::write_text(const std::string& rel_path,
                            const std::string& content) {
    write_file_atomic((out_dir / rel_path).string(), content);
    artifacts.push_back(rel_path);
}

McfLink RunContext::link() const {
    if (design.is_null())
        throw ConfigError("no fiber design resolved for this command");
    return load_design_text(design.dump());
}

json resolve_design(const std::string& path) {
    std::string text;
    if (path.empty() || path == "builtin") {
        text = table1_design_text();
    } else {
        text = read_file(path);
    }
    // Parse errors surface as config errors with the source named.
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ConfigError("design file is not valid JSON: " +
                          (path.empty() ? std::string("builtin") : path));
    return doc;
}

std::filesystem::path resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("MCFTTDL_OUT_DIR"); env && *env)
        return env;
    return "out";
}

void write_manifest(const RunContext& ctx, const std::string& subcommand,
                    json config, const json& results) {
    if (!ctx.design.is_null()) config["design"] = ctx.design;
    json m;
    m["format"] = "mcfttdl-run/1";
    m["tool_version"] = kVersion;
    m["subcommand"] = subcommand;
    m["config"] = std::move(config);
    if (!results.is_null()) m["results"] = results;
    m["artifacts"] = ctx.artifacts;
    write_file_atomic((ctx.out_dir / "manifest.json").string(),
                      m.dump(2) + "\n");
}

}
