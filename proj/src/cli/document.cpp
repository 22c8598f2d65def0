#include "projgeom/document.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>

#include <json.hpp>

#include "projgeom/error.hpp"
#include "projgeom/parallelogram.hpp"
#include "projgeom/parallelogram_general.hpp"
#include "projgeom/projection_general.hpp"
#include "projgeom/projection_one.hpp"
#include "projgeom/text.hpp"
#include "scene_access.hpp"

namespace projgeom {

namespace {

using nlohmann::json;

constexpr std::array kLineNames{"g_s", "g_t", "l", "axis", "g", "p"};

struct Names {
    Construction which;
    std::string_view name;
    std::string_view alias;
};

constexpr std::array kConstructions{
    Names{Construction::phor, "PHOR", "phor"},
    Names{Construction::pver, "PVER", "pver"},
    Names{Construction::p2, "P2", "construct-p"},
    Names{Construction::nu, "NU", "nu"},
    Names{Construction::mu, "MU", "mu"},
    Names{Construction::nu_general, "NU_GENERAL", "nu-general"},
};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

// Echo of the scene in canonical form.
std::map<std::string, std::string> echo_inputs(const Scene& scene) {
    std::map<std::string, std::string> out;
    for (const auto& [name, line] : scene.lines) {
        out[name] = format_line(line);
    }
    if (scene.origin) {
        out["origin"] = format_point(*scene.origin);
    }
    if (scene.epsilon) {
        out["epsilon"] = scene.epsilon->to_string();
    }
    if (scene.offset) {
        out["offset"] = scene.offset->to_string();
    }
    if (scene.sample) {
        out["sample"] = format_point(*scene.sample);
    }
    return out;
}

void fill_projection_one(ResultDocument& doc, const Scene& scene, ProjectionCase c) {
    const PropOneInput in{need_line(scene, "g_s"), need_line(scene, "g_t"), need_line(scene, "l")};
    const bool hor = c == ProjectionCase::horizontal_a;
    const PropOneWitness w = hor ? p_hor(in) : p_ver(in);
    doc.outputs[hor ? "p_hor" : "p_ver"] = format_point(w.point);
    doc.case_tag = std::string(case_name(w.case_tag));
    auto& wit = doc.witnesses;
    wit["s"] = format_point(w.s);
    wit["t"] = format_point(w.t);
    wit[hor ? "a_s" : "b_s"] = w.intercept_s.to_string();
    wit[hor ? "a_t" : "b_t"] = w.intercept_t.to_string();
    wit[hor ? "rho" : "rho_tilde"] = w.rho.to_string();
    wit["alpha"] = w.alpha.to_string();
    wit["beta"] = w.beta.to_string();
    wit["z_s"] = format_line(z_s(in));
    wit["z_t"] = format_line(z_t(in));
    wit["closed_form_branch"] = std::string(branch_name(closed_form_branch(in, c)));
    wit["closed_form"] = format_point(hor ? p_hor_closed_form(in) : p_ver_closed_form(in));
    wit["oracle"] = format_point(oracle_point(in, c));
}

void fill_projection_general(ResultDocument& doc, const Scene& scene) {
    const PropTwoInput in{need_line(scene, "g_s"), need_line(scene, "g_t"), need_line(scene, "l"),
                          need_line(scene, "axis"), need(scene.origin, "origin")};
    const PropTwoResult r = construct_p(in);
    doc.outputs["p"] = format_point(r.p);
    doc.case_tag = std::string(case_name(r.case_tag));
    auto& wit = doc.witnesses;
    wit["axis_p"] = format_line(r.axis_p);
    if (r.s_p) {
        wit["s_p"] = format_point(*r.s_p);
    }
    if (r.t_p) {
        wit["t_p"] = format_point(*r.t_p);
    }
    wit["s_axis"] = format_point(r.s_axis);
    wit["t_axis"] = format_point(r.t_axis);
    wit["s"] = format_point(r.s);
    wit["t"] = format_point(r.t);
    wit["z_s"] = format_line(r.z_s);
    wit["z_t"] = format_line(r.z_t);
}

void fill_corners(ResultDocument& doc, const ParallelogramWitness& w) {
    auto& wit = doc.witnesses;
    wit["s"] = format_point(w.s);
    wit["t"] = format_point(w.t);
    wit["s_bar"] = format_point(w.s_bar);
    wit["t_bar"] = format_point(w.t_bar);
    wit["neg_s_bar"] = format_point(w.neg_s_bar);
    wit["neg_t_bar"] = format_point(w.neg_t_bar);
    if (w.connecting_line) {
        wit["connecting_line"] = format_line(*w.connecting_line);
    }
}

void fill_parallelogram(ResultDocument& doc, const Scene& scene, bool vertical_offsets) {
    const PropThreeInput in{need_line(scene, "g"), need_line(scene, "p"), need(scene.epsilon, "epsilon"),
                            need(scene.sample, "sample")};
    if (vertical_offsets) {
        const ParallelogramWitness w = mu_parallelogram(in);
        doc.outputs["mu"] = w.nu.to_string();
        fill_corners(doc, w);
        return;
    }
    const ParallelogramWitness w = parallelogram(in);
    doc.outputs["nu"] = w.nu.to_string();
    fill_corners(doc, w);
    doc.witnesses["minus_nu"] = minus_nu_check(in).to_string();
    doc.witnesses["nu_closed_form"] = nu_closed_form(in.g, in.p, in.epsilon).to_string();
}

void fill_parallelogram_general(ResultDocument& doc, const Scene& scene) {
    const PropFourInput in{need_line(scene, "g"),         need_line(scene, "p"),
                           need_line(scene, "axis"),      need(scene.origin, "origin"),
                           need(scene.offset, "offset"), need(scene.sample, "sample")};
    const PropFourResult r = nu_general(in);
    doc.outputs["nu_point"] = format_point(r.nu_point);
    auto& wit = doc.witnesses;
    wit["s"] = format_point(r.s);
    wit["t"] = format_point(r.t);
    wit["s_bar"] = format_point(r.s_bar);
    wit["t_bar"] = format_point(r.t_bar);
    wit["neg_s_bar"] = format_point(r.neg_s_bar);
    wit["neg_t_bar"] = format_point(r.neg_t_bar);
}

std::map<std::string, std::string> string_map(const json& j, const char* key) {
    if (!j.contains(key)) {
        return {};
    }
    return j.at(key).get<std::map<std::string, std::string>>();
}

}  // namespace

std::string_view construction_name(Construction c) noexcept {
    for (const Names& n : kConstructions) {
        if (n.which == c) {
            return n.name;
        }
    }
    return "UNKNOWN";
}

std::optional<Construction> parse_construction(std::string_view text) {
    const std::string key = lower(text);
    for (const Names& n : kConstructions) {
        if (key == lower(n.name) || key == n.alias) {
            return n.which;
        }
    }
    return std::nullopt;
}

Scene scene_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
        if (j.is_object() && j.contains("inputs")) {
            j = j.at("inputs");
        }
        if (!j.is_object()) {
            fail(ErrorCode::parse, "scene must be a JSON object");
        }
        Scene scene;
        for (const auto& [key, value] : j.items()) {
            const std::string s = value.get<std::string>();
            if (std::find(kLineNames.begin(), kLineNames.end(), key) != kLineNames.end()) {
                scene.lines.insert_or_assign(key, parse_line_spec(s));
            } else if (key == "origin") {
                scene.origin = parse_point(s);
            } else if (key == "sample") {
                scene.sample = parse_point(s);
            } else if (key == "epsilon") {
                scene.epsilon = parse_scalar(s);
            } else if (key == "offset") {
                scene.offset = parse_scalar(s);
            } else {
                fail(ErrorCode::parse, "unknown scene key '" + key + "'");
            }
        }
        return scene;
    } catch (const json::exception& e) {
        fail(ErrorCode::parse, std::string("invalid scene JSON: ") + e.what());
    }
}

std::string scene_to_json(const Scene& scene) {
    return json(echo_inputs(scene)).dump(2);
}

ResultDocument run_construction(const Scene& scene, Construction which) {
    ResultDocument doc;
    doc.construction = std::string(construction_name(which));
    doc.inputs = echo_inputs(scene);
    try {
        switch (which) {
            case Construction::phor: fill_projection_one(doc, scene, ProjectionCase::horizontal_a); break;
            case Construction::pver: fill_projection_one(doc, scene, ProjectionCase::vertical_b); break;
            case Construction::p2: fill_projection_general(doc, scene); break;
            case Construction::nu: fill_parallelogram(doc, scene, false); break;
            case Construction::mu: fill_parallelogram(doc, scene, true); break;
            case Construction::nu_general: fill_parallelogram_general(doc, scene); break;
        }
    } catch (const GeometryError& e) {
        doc.outputs.clear();
        doc.witnesses.clear();
        doc.case_tag.reset();
        doc.error = DocumentError{std::string(code_name(e.code())), e.what()};
    }
    return doc;
}

int exit_status(const ResultDocument& doc) {
    if (!doc.error) {
        return 0;
    }
    for (int c = 0; c <= static_cast<int>(ErrorCode::parse); ++c) {
        if (code_name(static_cast<ErrorCode>(c)) == doc.error->code) {
            return exit_status(static_cast<ErrorCode>(c));
        }
    }
    return exit_status(ErrorCode::inconsistent);
}

std::string to_json(const ResultDocument& doc) {
    json j;
    j["construction"] = doc.construction;
    j["inputs"] = doc.inputs;
    j["outputs"] = doc.outputs;
    j["case"] = doc.case_tag ? json(*doc.case_tag) : json(nullptr);
    j["witnesses"] = doc.witnesses;
    if (doc.error) {
        j["error"] = {{"code", doc.error->code}, {"message", doc.error->message}};
    }
    return j.dump(2);
}

ResultDocument document_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        ResultDocument doc;
        doc.construction = j.at("construction").get<std::string>();
        doc.inputs = string_map(j, "inputs");
        doc.outputs = string_map(j, "outputs");
        if (j.contains("case") && !j.at("case").is_null()) {
            doc.case_tag = j.at("case").get<std::string>();
        }
        doc.witnesses = string_map(j, "witnesses");
        if (j.contains("error")) {
            const json& e = j.at("error");
            doc.error = DocumentError{e.at("code").get<std::string>(), e.at("message").get<std::string>()};
        }
        return doc;
    } catch (const json::exception& e) {
        fail(ErrorCode::parse, std::string("invalid result document: ") + e.what());
    }
}

std::string to_text(const ResultDocument& doc) {
    std::string out = "construction " + doc.construction + "\n";
    if (doc.error) {
        return out + "error " + doc.error->code + ": " + doc.error->message + "\n";
    }
    if (doc.case_tag) {
        out += "case " + *doc.case_tag + "\n";
    }
    for (const auto& [key, value] : doc.outputs) {
        out += key + " = " + value + "\n";
    }
    for (const auto& [key, value] : doc.witnesses) {
        out += "  " + key + " = " + value + "\n";
    }
    return out;
}

}  // namespace projgeom
