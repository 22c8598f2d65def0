#include "projgeom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "projgeom/check_suite.hpp"
#include "projgeom/document.hpp"
#include "projgeom/error.hpp"
#include "projgeom/figure.hpp"
#include "projgeom/text.hpp"

namespace projgeom {

namespace {

// Raw flag values; parsing is ours so that errors carry a column.
struct SceneFlags {
    std::map<std::string, std::string> lines;
    std::string scene_file;
    std::optional<std::string> origin;
    std::optional<std::string> epsilon;
    std::optional<std::string> offset;
    std::optional<std::string> sample;
};

struct ViewportFlags {
    std::optional<std::string> xmin, xmax, ymin, ymax;
    std::optional<int> width, height;
    std::string svg_out;
};

struct Needs {
    std::vector<const char*> lines;
    bool origin = false;
    bool epsilon = false;
    bool offset = false;
    bool sample = false;
};

Needs needs_of(Construction c) {
    switch (c) {
        case Construction::phor:
        case Construction::pver: return {{"g_s", "g_t", "l"}};
        case Construction::p2: return {{"g_s", "g_t", "l", "axis"}, true};
        case Construction::nu:
        case Construction::mu: return {{"g", "p"}, false, true, false, true};
        case Construction::nu_general: return {{"g", "p", "axis"}, true, false, true, true};
    }
    return {};
}

void add_scene_flags(CLI::App* app, SceneFlags& f, const Needs& needs) {
    for (const char* name : needs.lines) {
        app->add_option(std::string("--line-") + name, f.lines[name], std::string("line ") + name + ", e.g. y=2x+4");
    }
    if (needs.origin) {
        app->add_option("--origin", f.origin, "origin point on the axis, e.g. \"(0, 0)\"");
    }
    if (needs.epsilon) {
        app->add_option("--epsilon", f.epsilon, "offset of S and T from the sample");
    }
    if (needs.offset) {
        app->add_option("--offset", f.offset, "signed offset along the axis direction");
    }
    if (needs.sample) {
        app->add_option("--sample", f.sample, "sample point on g");
    }
    app->add_option("--scene", f.scene_file, "JSON scene file; flags override its entries");
}

void add_viewport_flags(CLI::App* app, ViewportFlags& v) {
    app->add_option("--xmin", v.xmin);
    app->add_option("--xmax", v.xmax);
    app->add_option("--ymin", v.ymin);
    app->add_option("--ymax", v.ymax);
    app->add_option("--width", v.width)->check(CLI::PositiveNumber);
    app->add_option("--height", v.height)->check(CLI::PositiveNumber);
    app->add_option("--svg-out", v.svg_out, "write an SVG figure to this file");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::parse, "cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        fail(ErrorCode::precondition, "cannot write '" + path + "'");
    }
}

Scene build_scene(const SceneFlags& f) {
    Scene scene = f.scene_file.empty() ? Scene{} : scene_from_json(read_file(f.scene_file));
    for (const auto& [name, spec] : f.lines) {
        if (!spec.empty()) {
            scene.lines.insert_or_assign(name, parse_line_spec(spec));
        }
    }
    if (f.origin) scene.origin = parse_point(*f.origin);
    if (f.epsilon) scene.epsilon = parse_scalar(*f.epsilon);
    if (f.offset) scene.offset = parse_scalar(*f.offset);
    if (f.sample) scene.sample = parse_point(*f.sample);
    return scene;
}

Viewport build_viewport(const ViewportFlags& f, Viewport v) {
    if (f.xmin) v.xmin = parse_scalar(*f.xmin);
    if (f.xmax) v.xmax = parse_scalar(*f.xmax);
    if (f.ymin) v.ymin = parse_scalar(*f.ymin);
    if (f.ymax) v.ymax = parse_scalar(*f.ymax);
    if (f.width) v.width = *f.width;
    if (f.height) v.height = *f.height;
    return v;
}

int report(const GeometryError& e, std::ostream& err) {
    err << "error: " << code_name(e.code()) << ": " << e.what() << "\n";
    return exit_status(e.code());
}

int run_construction_command(Construction which, const SceneFlags& flags, const ViewportFlags& view, bool json,
                             std::ostream& out, std::ostream& err) {
    ResultDocument doc;
    Scene scene;
    try {
        scene = build_scene(flags);
        doc = run_construction(scene, which);
    } catch (const GeometryError& e) {
        if (!json) {
            return report(e, err);
        }
        doc.construction = std::string(construction_name(which));
        doc.error = DocumentError{std::string(code_name(e.code())), e.what()};
    }
    if (json) {
        out << to_json(doc) << "\n";
    } else if (doc.error) {
        err << "error: " << doc.error->code << ": " << doc.error->message << "\n";
    } else {
        out << to_text(doc);
    }
    if (doc.error || view.svg_out.empty()) {
        return exit_status(doc);
    }
    try {
        write_file(view.svg_out, render_figure(which, scene, build_viewport(view, Viewport{})));
    } catch (const GeometryError& e) {
        return report(e, err);
    }
    return 0;
}

int run_figure_command(const std::string& builtin, const std::string& construction, const SceneFlags& flags,
                       const ViewportFlags& view, std::ostream& out, std::ostream& err) {
    try {
        FigureSpec spec;
        if (!builtin.empty()) {
            const auto which = parse_builtin_figure(builtin);
            if (!which) {
                fail(ErrorCode::parse, "unknown figure '" + builtin + "' (expected PIC1, PIC2, PIC3 or PIC4)");
            }
            spec = builtin_figure(*which);
        } else {
            const auto which = parse_construction(construction);
            if (!which) {
                fail(ErrorCode::parse, "figure needs PIC1..PIC4 or --construction <phor|pver|construct-p|nu|mu|nu-general>");
            }
            spec = {*which, build_scene(flags), Viewport{}};
        }
        const std::string svg = render_figure(spec.construction, spec.scene, build_viewport(view, spec.viewport));
        if (view.svg_out.empty()) {
            out << svg;
        } else {
            write_file(view.svg_out, svg);
        }
        return 0;
    } catch (const GeometryError& e) {
        return report(e, err);
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact constructions with parallel lines and central projections", "projgeom"};
    app.require_subcommand(1);

    struct CommandState {
        Construction which;
        SceneFlags scene;
        ViewportFlags view;
        bool json = false;
        CLI::App* app = nullptr;
    };
    const std::pair<const char*, const char*> commands[] = {
        {"phor", "point P_hor on l (horizontal shifts by the x-axis intercepts)"},
        {"pver", "point P_ver on l (vertical shifts by the y-axis intercepts)"},
        {"construct-p", "point P on l for an arbitrary axis and origin"},
        {"nu", "x-axis value nu of the parallelogram construction"},
        {"mu", "y-axis value mu of the vertically shifted construction"},
        {"nu-general", "point nu on an arbitrary axis"},
    };
    std::vector<CommandState> states;
    states.reserve(std::size(commands));
    for (const auto& [name, help] : commands) {
        CommandState& s = states.emplace_back();
        s.which = *parse_construction(name);
        s.app = app.add_subcommand(name, help);
        add_scene_flags(s.app, s.scene, needs_of(s.which));
        add_viewport_flags(s.app, s.view);
        s.app->add_flag("--json", s.json, "print the result document as JSON");
    }

    std::uint64_t seed = 1;
    std::size_t trials = 100;
    bool serial = false;
    CLI::App* check = app.add_subcommand("check", "run the randomized property suite");
    check->add_option("--seed", seed, "run seed")->capture_default_str();
    check->add_option("--trials", trials, "trials per property")->check(CLI::PositiveNumber)->capture_default_str();
    check->add_flag("--serial", serial, "run on one thread");

    std::string builtin;
    std::string construction;
    SceneFlags figure_scene;
    ViewportFlags figure_view;
    CLI::App* figure = app.add_subcommand("figure", "render an SVG figure");
    figure->add_option("name", builtin, "built-in scene: PIC1, PIC2, PIC3 or PIC4");
    figure->add_option("--construction", construction, "construction for a custom scene");
    add_scene_flags(figure, figure_scene, {{"g_s", "g_t", "l", "axis", "g", "p"}, true, true, true, true});
    add_viewport_flags(figure, figure_view);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    for (const CommandState& s : states) {
        if (s.app->parsed()) {
            return run_construction_command(s.which, s.scene, s.view, s.json, out, err);
        }
    }
    if (check->parsed()) {
        const auto& properties = check::standard_properties();
        const check::Summary summary =
            serial ? check::run_serial(properties, seed, trials) : check::run_parallel(properties, seed, trials);
        check::print_summary(summary, out);
        return summary.all_passed() ? 0 : exit_status(ErrorCode::inconsistent);
    }
    return run_figure_command(builtin, construction, figure_scene, figure_view, out, err);
}

}  // namespace projgeom
