// SPDX-License-Identifier: Apache-2.0
#include "mcfttdl/design_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mcfttdl/bend.hpp"
#include "mcfttdl/errors.hpp"

namespace mcfttdl {

namespace {

using json = nlohmann::json;

struct IssueList {
    std::vector<std::string> v;
    void add(std::string s) { v.push_back(std::move(s)); }
    bool ok() const { return v.empty(); }
    [[noreturn]] void raise(const std::string& what) const {
        std::ostringstream os;
        os << what << ":";
        for (const auto& s : v) os << "\n  - " << s;
        throw ConfigError(os.str(), v);
    }
};

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where, IssueList& issues) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            issues.add(where + ": unknown key '" + it.key() + "'");
}

const json* require_object(const json& parent, const char* key,
                           const std::string& where, IssueList& issues) {
    if (!parent.contains(key)) {
        issues.add(where + ": missing '" + std::string(key) + "'");
        return nullptr;
    }
    const json& v = parent.at(key);
    if (!v.is_object()) {
        issues.add(where + ": '" + std::string(key) + "' must be an object");
        return nullptr;
    }
    return &v;
}

double require_number(const json& obj, const char* key,
                      const std::string& where, IssueList& issues) {
    if (!obj.contains(key)) {
        issues.add(where + ": missing '" + std::string(key) + "'");
        return 0.0;
    }
    const json& v = obj.at(key);
    if (!v.is_number()) {
        issues.add(where + ": '" + std::string(key) + "' must be a number");
        return 0.0;
    }
    return v.get<double>();
}

int require_int(const json& obj, const char* key, const std::string& where,
                IssueList& issues) {
    if (!obj.contains(key)) {
        issues.add(where + ": missing '" + std::string(key) + "'");
        return 0;
    }
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
        issues.add(where + ": '" + std::string(key) + "' must be an integer");
        return 0;
    }
    return v.get<int>();
}

std::string require_string(const json& obj, const char* key,
                           const std::string& where, IssueList& issues) {
    if (!obj.contains(key)) {
        issues.add(where + ": missing '" + std::string(key) + "'");
        return {};
    }
    const json& v = obj.at(key);
    if (!v.is_string()) {
        issues.add(where + ": '" + std::string(key) + "' must be a string");
        return {};
    }
    return v.get<std::string>();
}

json parse_or_raise(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string(what) + " is not valid JSON: " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}

McfLink load_design_text(const std::string& json_text) {
    const json j = parse_or_raise(json_text, "design document");
    IssueList issues;
    if (!j.is_object()) throw ConfigError("design document must be a JSON object");

    check_keys(j, {"format", "link", "layout", "cores", "adjacency"},
               "top level", issues);
    const std::string format = require_string(j, "format", "top level", issues);
    if (!format.empty() && format != "mcfttdl-design/1")
        issues.add("top level: unsupported format '" + format + "'");

    double length_km = 0, pitch_um = 0, clad_um = 0, anchor_nm = 0, tau = 0;
    if (const json* link = require_object(j, "link", "top level", issues)) {
        check_keys(*link,
                   {"length_km", "core_pitch_um", "cladding_diameter_um",
                    "anchor_wavelength_nm", "tau_g0_ps_per_km"},
                   "link", issues);
        length_km = require_number(*link, "length_km", "link", issues);
        pitch_um = require_number(*link, "core_pitch_um", "link", issues);
        clad_um = require_number(*link, "cladding_diameter_um", "link", issues);
        anchor_nm = require_number(*link, "anchor_wavelength_nm", "link", issues);
        tau = require_number(*link, "tau_g0_ps_per_km", "link", issues);
        if (link->contains("tau_g0_ps_per_km") && !(tau > 0.0))
            issues.add("link: tau_g0_ps_per_km must be positive");
        if (link->contains("anchor_wavelength_nm") && !in_window(anchor_nm))
            issues.add("link: anchor_wavelength_nm outside the operating window");
    }

    std::string layout_type, arrangement_kind;
    std::vector<int> arrangement_ids;
    if (const json* layout = require_object(j, "layout", "top level", issues)) {
        check_keys(*layout, {"type", "arrangement"}, "layout", issues);
        layout_type = require_string(*layout, "type", "layout", issues);
        if (layout_type != "hex7" && layout_type != "ring" &&
            layout_type != "explicit")
            issues.add("layout: type must be one of hex7, ring, explicit");
        if (layout_type == "explicit") {
            if (layout->contains("arrangement"))
                issues.add("layout: explicit layouts take no arrangement");
        } else if (layout->contains("arrangement")) {
            const json& arr = layout->at("arrangement");
            if (arr.is_string()) {
                arrangement_kind = arr.get<std::string>();
                if (arrangement_kind != "optimized" && arrangement_kind != "by_id")
                    issues.add("layout: arrangement must be 'optimized', 'by_id' "
                               "or a core-id list");
            } else if (arr.is_array()) {
                arrangement_kind = "list";
                for (const auto& e : arr) {
                    if (!e.is_number_integer()) {
                        issues.add("layout: arrangement list entries must be core ids");
                        break;
                    }
                    arrangement_ids.push_back(e.get<int>());
                }
            } else {
                issues.add("layout: arrangement must be a string or an id list");
            }
        } else {
            issues.add("layout: missing 'arrangement'");
        }
    }

    const bool explicit_layout = layout_type == "explicit";
    std::vector<FiberCore> cores;
    if (!j.contains("cores") || !j.at("cores").is_array() ||
        j.at("cores").empty()) {
        issues.add("top level: 'cores' must be a non-empty array");
    } else {
        std::set<std::string> allowed = {
            "id", "a1_um", "a2_um", "w_um", "delta1_pct", "delta2_pct",
            "dispersion_ps_per_km_nm", "slope_ps_per_km_nm2", "n_eff"};
        if (explicit_layout) {
            allowed.insert("position_r_um");
            allowed.insert("position_theta_rad");
        }
        int idx = 0;
        for (const auto& cj : j.at("cores")) {
            const std::string where = "cores[" + std::to_string(idx++) + "]";
            if (!cj.is_object()) {
                issues.add(where + ": must be an object");
                continue;
            }
            check_keys(cj, allowed, where, issues);
            FiberCore c;
            c.id = require_int(cj, "id", where, issues);
            c.profile.a1_um = require_number(cj, "a1_um", where, issues);
            c.profile.a2_um = require_number(cj, "a2_um", where, issues);
            c.profile.w_um = require_number(cj, "w_um", where, issues);
            c.profile.delta1_pct = require_number(cj, "delta1_pct", where, issues);
            c.profile.delta2_pct = require_number(cj, "delta2_pct", where, issues);
            c.model.anchor_nm = anchor_nm;
            c.model.tau_g0_ps_per_km = tau;
            c.model.d_ps_per_km_nm =
                require_number(cj, "dispersion_ps_per_km_nm", where, issues);
            c.model.s_ps_per_km_nm2 =
                require_number(cj, "slope_ps_per_km_nm2", where, issues);
            c.n_eff = require_number(cj, "n_eff", where, issues);
            if (cj.contains("n_eff") && !(c.n_eff > 1.0 && c.n_eff < 2.0))
                issues.add(where + ": n_eff must lie in (1, 2)");
            if (explicit_layout) {
                c.r_um = require_number(cj, "position_r_um", where, issues);
                c.theta_rad = require_number(cj, "position_theta_rad", where, issues);
            }
            cores.push_back(c);
        }
    }

    std::vector<std::pair<int, int>> adjacency;
    if (explicit_layout) {
        if (!j.contains("adjacency") || !j.at("adjacency").is_array()) {
            issues.add("top level: explicit layouts require an 'adjacency' array");
        } else {
            int idx = 0;
            for (const auto& pj : j.at("adjacency")) {
                const std::string where = "adjacency[" + std::to_string(idx++) + "]";
                if (!pj.is_array() || pj.size() != 2 ||
                    !pj[0].is_number_integer() || !pj[1].is_number_integer()) {
                    issues.add(where + ": must be a pair of core ids");
                    continue;
                }
                int a = pj[0].get<int>(), b = pj[1].get<int>();
                if (a > b) std::swap(a, b);
                adjacency.emplace_back(a, b);
            }
        }
    } else if (j.contains("adjacency")) {
        issues.add("top level: adjacency comes from the layout template; remove it");
    }

    if (!issues.ok()) issues.raise("invalid design document");

    if (explicit_layout) {
        McfLink link;
        link.cores = std::move(cores);
        std::sort(link.cores.begin(), link.cores.end(),
                  [](const FiberCore& a, const FiberCore& b) { return a.id < b.id; });
        link.length_km = length_km;
        link.pitch_um = pitch_um;
        link.cladding_diameter_um = clad_um;
        std::sort(adjacency.begin(), adjacency.end());
        link.adjacency = std::move(adjacency);
        try {
            validate_link(link);
        } catch (const ValidationError& e) {
            throw ConfigError(std::string("invalid design document: ") + e.what());
        }
        return link;
    }

    LinkLayout layout;
    if (layout_type == "hex7") {
        if (cores.size() != 7)
            throw ConfigError("invalid design document: hex7 layout needs "
                              "exactly 7 cores");
        layout = hex7_layout(pitch_um);
    } else {
        if (cores.size() < 2)
            throw ConfigError("invalid design document: ring layout needs at "
                              "least 2 cores");
        layout = ring_layout(static_cast<int>(cores.size()), pitch_um);
    }

    ArrangementResult arrangement;
    if (arrangement_kind == "optimized") {
        arrangement = optimize_arrangement(cores, layout);
    } else if (arrangement_kind == "by_id") {
        for (const auto& c : cores) arrangement.slot_core_ids.push_back(c.id);
        std::sort(arrangement.slot_core_ids.begin(),
                  arrangement.slot_core_ids.end());
    } else {   // explicit id list
        if (arrangement_ids.size() != cores.size())
            throw ConfigError("invalid design document: arrangement list must "
                              "name every core exactly once");
        arrangement.slot_core_ids = arrangement_ids;
    }

    McfLink link;
    try {
        link = assemble_link(std::move(cores), layout, arrangement, length_km,
                             pitch_um, clad_um);
    } catch (const ValidationError& e) {
        throw ConfigError(std::string("invalid design document: ") + e.what());
    }
    return link;
}

McfLink load_design_file(const std::string& path) {
    return load_design_text(read_file(path));
}

std::string save_design_text(const McfLink& link) {
    validate_link(link);
    const double anchor = link.cores.front().model.anchor_nm;
    const double tau = link.cores.front().model.tau_g0_ps_per_km;
    for (const auto& c : link.cores)
        if (c.model.anchor_nm != anchor || c.model.tau_g0_ps_per_km != tau)
            throw ValidationError("save_design_text: only equalized links can be "
                                  "written as designs");

    json j;
    j["format"] = "mcfttdl-design/1";
    j["link"] = {{"length_km", link.length_km},
                 {"core_pitch_um", link.pitch_um},
                 {"cladding_diameter_um", link.cladding_diameter_um},
                 {"anchor_wavelength_nm", anchor},
                 {"tau_g0_ps_per_km", tau}};
    j["layout"] = {{"type", "explicit"}};
    json cores = json::array();
    for (const auto& c : link.cores) {
        cores.push_back({{"id", c.id},
                         {"a1_um", c.profile.a1_um},
                         {"a2_um", c.profile.a2_um},
                         {"w_um", c.profile.w_um},
                         {"delta1_pct", c.profile.delta1_pct},
                         {"delta2_pct", c.profile.delta2_pct},
                         {"dispersion_ps_per_km_nm", c.model.d_ps_per_km_nm},
                         {"slope_ps_per_km_nm2", c.model.s_ps_per_km_nm2},
                         {"n_eff", c.n_eff},
                         {"position_r_um", c.r_um},
                         {"position_theta_rad", c.theta_rad}});
    }
    j["cores"] = std::move(cores);
    json adj = json::array();
    for (const auto& [a, b] : link.adjacency) adj.push_back({a, b});
    j["adjacency"] = std::move(adj);
    return j.dump(2) + "\n";
}

void save_design_file(const McfLink& link, const std::string& path) {
    const std::string text = save_design_text(link);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write design file: " + path);
    out << text;
    if (!out.good())
        throw ValidationError("short write on design file: " + path);
}

namespace {

std::pair<double, double> read_range(const json& obj, const char* key,
                                     std::pair<double, double> fallback,
                                     const std::string& where,
                                     IssueList& issues) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number()) {
        issues.add(where + ": '" + std::string(key) + "' must be [min, max]");
        return fallback;
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

}

DesignRequest load_design_request_text(const std::string& json_text) {
    const json j = parse_or_raise(json_text, "design request");
    IssueList issues;
    if (!j.is_object()) throw ConfigError("design request must be a JSON object");
    check_keys(j, {"format", "targets", "bounds", "link"}, "top level", issues);
    const std::string format = require_string(j, "format", "top level", issues);
    if (!format.empty() && format != "mcfttdl-design-request/1")
        issues.add("top level: unsupported format '" + format + "'");

    DesignRequest req;
    if (const json* targets = require_object(j, "targets", "top level", issues)) {
        check_keys(*targets, {"dispersion_ps_per_km_nm", "tau_g0_ps_per_km"},
                   "targets", issues);
        if (!targets->contains("dispersion_ps_per_km_nm") ||
            !targets->at("dispersion_ps_per_km_nm").is_array() ||
            targets->at("dispersion_ps_per_km_nm").empty()) {
            issues.add("targets: 'dispersion_ps_per_km_nm' must be a non-empty "
                       "array");
        } else {
            for (const auto& e : targets->at("dispersion_ps_per_km_nm")) {
                if (!e.is_number()) {
                    issues.add("targets: dispersion entries must be numbers");
                    break;
                }
                req.d_targets_ps_per_km_nm.push_back(e.get<double>());
            }
        }
        if (targets->contains("tau_g0_ps_per_km")) {
            const json& t = targets->at("tau_g0_ps_per_km");
            if (t.is_number())
                req.tau_g0_ps_per_km = t.get<double>();
            else
                issues.add("targets: 'tau_g0_ps_per_km' must be a number");
        }
    }

    if (j.contains("bounds")) {
        const json& b = j.at("bounds");
        if (!b.is_object()) {
            issues.add("top level: 'bounds' must be an object");
        } else {
            check_keys(b,
                       {"a1_um", "a2_um", "w_um", "delta1_pct", "delta2_pct",
                        "d_tol_ps_per_km_nm", "tau_tol_ps_per_km"},
                       "bounds", issues);
            auto& bb = req.bounds;
            std::tie(bb.a1_min_um, bb.a1_max_um) = read_range(
                b, "a1_um", {bb.a1_min_um, bb.a1_max_um}, "bounds", issues);
            std::tie(bb.a2_min_um, bb.a2_max_um) = read_range(
                b, "a2_um", {bb.a2_min_um, bb.a2_max_um}, "bounds", issues);
            std::tie(bb.w_min_um, bb.w_max_um) = read_range(
                b, "w_um", {bb.w_min_um, bb.w_max_um}, "bounds", issues);
            std::tie(bb.delta1_min_pct, bb.delta1_max_pct) =
                read_range(b, "delta1_pct", {bb.delta1_min_pct, bb.delta1_max_pct},
                           "bounds", issues);
            if (b.contains("delta2_pct")) {
                if (b.at("delta2_pct").is_number())
                    bb.delta2_pct = b.at("delta2_pct").get<double>();
                else
                    issues.add("bounds: 'delta2_pct' must be a number");
            }
            if (b.contains("d_tol_ps_per_km_nm")) {
                if (b.at("d_tol_ps_per_km_nm").is_number())
                    bb.d_tol_ps_per_km_nm = b.at("d_tol_ps_per_km_nm").get<double>();
                else
                    issues.add("bounds: 'd_tol_ps_per_km_nm' must be a number");
            }
            if (b.contains("tau_tol_ps_per_km")) {
                if (b.at("tau_tol_ps_per_km").is_number())
                    bb.tau_tol_ps_per_km = b.at("tau_tol_ps_per_km").get<double>();
                else
                    issues.add("bounds: 'tau_tol_ps_per_km' must be a number");
            }
        }
    }

    if (j.contains("link")) {
        const json& l = j.at("link");
        if (!l.is_object()) {
            issues.add("top level: 'link' must be an object");
        } else {
            check_keys(l,
                       {"length_km", "core_pitch_um", "cladding_diameter_um",
                        "anchor_wavelength_nm"},
                       "link", issues);
            auto opt = [&](const char* key, double& slot) {
                if (!l.contains(key)) return;
                if (l.at(key).is_number())
                    slot = l.at(key).get<double>();
                else
                    issues.add("link: '" + std::string(key) + "' must be a number");
            };
            opt("length_km", req.length_km);
            opt("core_pitch_um", req.pitch_um);
            opt("cladding_diameter_um", req.cladding_diameter_um);
            opt("anchor_wavelength_nm", req.anchor_nm);
        }
    }

    if (!issues.ok()) issues.raise("invalid design request");
    return req;
}

DesignRequest load_design_request_file(const std::string& path) {
    return load_design_request_text(read_file(path));
}

McfLink load_table1_link(double tau_g0_ps_per_km) {
    McfLink link = load_design_text(table1_design_text());
    for (auto& c : link.cores) c.model.tau_g0_ps_per_km = tau_g0_ps_per_km;
    return link;
}

}
