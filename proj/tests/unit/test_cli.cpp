#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "projgeom/cli.hpp"
#include "projgeom/document.hpp"
#include "projgeom/error.hpp"
#include "projgeom/figure.hpp"
#include "projgeom/text.hpp"

using namespace projgeom;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

Scene reference_projection_scene() {
    Scene s;
    s.lines.insert_or_assign("g_s", parse_line_spec("y=2x+4"));
    s.lines.insert_or_assign("g_t", parse_line_spec("y=2x+2"));
    s.lines.insert_or_assign("l", parse_line_spec("y=1"));
    return s;
}

Scene reference_parallelogram_scene() {
    Scene s;
    s.lines.insert_or_assign("g", parse_line_spec("y=2x+4"));
    s.lines.insert_or_assign("p", parse_line_spec("y=2x+2"));
    s.epsilon = Scalar(4);
    s.sample = Point{0, 4};
    return s;
}

bool has_marker(const std::string& svg, const std::string& label, const std::string& x, const std::string& y) {
    return svg.find("data-label=\"" + label + "\" data-x=\"" + x + "\" data-y=\"" + y + "\"") != std::string::npos;
}

std::string temp_path(const char* name) {
    return std::string(TEST_SCRATCH_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("construction names round-trip") {
    for (Construction c : {Construction::phor, Construction::pver, Construction::p2, Construction::nu,
                           Construction::mu, Construction::nu_general}) {
        CHECK(parse_construction(construction_name(c)) == c);
    }
    CHECK(parse_construction("construct-p") == Construction::p2);
    CHECK(parse_construction("nu-general") == Construction::nu_general);
    CHECK(parse_construction("NU_general") == Construction::nu_general);
    CHECK_FALSE(parse_construction("rho"));
}

TEST_CASE("scene JSON round-trip") {
    Scene s = reference_parallelogram_scene();
    s.lines.insert_or_assign("axis", parse_line_spec("y=1/2x-1"));
    s.origin = Point{2, 0};
    s.offset = Scalar(-3, 2);
    CHECK(scene_from_json(scene_to_json(s)) == s);

    CHECK(scene_from_json(R"({"g": "y=2x+4", "epsilon": "4"})").epsilon == Scalar(4));
    CHECK_THROWS_AS(scene_from_json(R"({"q": "y=1"})"), GeometryError);
    CHECK_THROWS_AS(scene_from_json("[1, 2]"), GeometryError);
    CHECK_THROWS_AS(scene_from_json("{"), GeometryError);
}

TEST_CASE("projection scene through the document layer") {
    const ResultDocument hor = run_construction(reference_projection_scene(), Construction::phor);
    REQUIRE_FALSE(hor.error);
    CHECK(hor.outputs.at("p_hor") == "(-5/2, 1)");
    CHECK(hor.witnesses.at("s") == "(-3/2, 1)");
    CHECK(hor.witnesses.at("t") == "(-1/2, 1)");
    CHECK(hor.witnesses.at("a_s") == "-2");
    CHECK(hor.witnesses.at("a_t") == "-1");
    CHECK(hor.witnesses.at("closed_form") == hor.outputs.at("p_hor"));
    CHECK(hor.witnesses.at("oracle") == hor.outputs.at("p_hor"));

    const ResultDocument ver = run_construction(reference_projection_scene(), Construction::pver);
    CHECK(ver.outputs.at("p_ver") == "(3/2, 1)");
    CHECK(ver.witnesses.at("b_s") == "4");
    CHECK(ver.witnesses.at("b_t") == "2");
}

TEST_CASE("parallelogram scene through the document layer") {
    const ResultDocument doc = run_construction(reference_parallelogram_scene(), Construction::nu);
    REQUIRE_FALSE(doc.error);
    CHECK(doc.outputs.at("nu") == "2");
    CHECK(doc.witnesses.at("s_bar") == "(-2/3, 2/3)");
    CHECK(doc.witnesses.at("t_bar") == "(-2, -2)");
    CHECK(doc.witnesses.at("minus_nu") == "-2");
    CHECK(doc.witnesses.at("nu_closed_form") == "2");
    CHECK(doc.witnesses.at("connecting_line") == "y=1/2*x-1");
}

TEST_CASE("errors are recorded, not thrown") {
    Scene s = reference_projection_scene();
    s.lines.insert_or_assign("l", parse_line_spec("y=-x"));
    const ResultDocument doc = run_construction(s, Construction::phor);
    REQUIRE(doc.error);
    CHECK(doc.error->code == "E_ORIGIN_ON_L");
    CHECK(doc.outputs.empty());
    CHECK(exit_status(doc) == 3);

    Scene missing = reference_projection_scene();
    missing.lines.erase("l");
    const ResultDocument parse = run_construction(missing, Construction::phor);
    REQUIRE(parse.error);
    CHECK(parse.error->code == "E_PARSE");
    CHECK(exit_status(parse) == 2);
}

TEST_CASE("result documents round-trip through JSON") {
    for (Construction c : {Construction::phor, Construction::pver}) {
        const ResultDocument doc = run_construction(reference_projection_scene(), c);
        CHECK(document_from_json(to_json(doc)) == doc);
    }
    const ResultDocument nu = run_construction(reference_parallelogram_scene(), Construction::nu);
    CHECK(document_from_json(to_json(nu)) == nu);
    CHECK_FALSE(nu.case_tag);
    CHECK(to_json(nu).find("\"case\": null") != std::string::npos);

    Scene bad = reference_parallelogram_scene();
    bad.epsilon.reset();
    const ResultDocument err = run_construction(bad, Construction::nu);
    CHECK(document_from_json(to_json(err)) == err);

    // A whole document can serve as a scene.
    CHECK(scene_from_json(to_json(nu)) == reference_parallelogram_scene());
    CHECK_THROWS_AS(document_from_json("{}"), GeometryError);
}

TEST_CASE("to_text lists outputs before witnesses") {
    const std::string text = to_text(run_construction(reference_parallelogram_scene(), Construction::nu));
    CHECK(text.rfind("construction NU\n", 0) == 0);
    CHECK(text.find("nu = 2\n") < text.find("  s_bar = "));
}

TEST_CASE("format_decimal") {
    CHECK(format_decimal(Scalar(0)) == "0");
    CHECK(format_decimal(Scalar(-5, 2)) == "-2.5");
    CHECK(format_decimal(Scalar(800, 3)) == "266.666666667");
    CHECK(format_decimal(Scalar(-1, 1000000000000)) == "-1e-12");
    CHECK(format_decimal(Scalar(600)) == "600");
}

TEST_CASE("built-in figures carry exact markers") {
    const FigureSpec one = builtin_figure(BuiltinFigure::pic1);
    const std::string svg1 = render_figure(one.construction, one.scene, one.viewport);
    CHECK(svg1.rfind("<?xml", 0) == 0);
    CHECK(svg1.find("</svg>") != std::string::npos);
    CHECK(has_marker(svg1, "S", "-3/2", "1"));
    CHECK(has_marker(svg1, "T", "-1/2", "1"));
    CHECK(has_marker(svg1, "a_S", "-2", "0"));
    CHECK(has_marker(svg1, "a_T", "-1", "0"));
    CHECK(has_marker(svg1, "b_S", "0", "4"));
    CHECK(has_marker(svg1, "b_T", "0", "2"));
    CHECK(has_marker(svg1, "P_hor", "-5/2", "1"));
    CHECK(has_marker(svg1, "P_ver", "3/2", "1"));

    const FigureSpec three = builtin_figure(BuiltinFigure::pic3);
    const std::string svg3 = render_figure(three.construction, three.scene, three.viewport);
    CHECK(has_marker(svg3, "S_bar", "-2/3", "2/3"));
    CHECK(has_marker(svg3, "T_bar", "-2", "-2"));
    CHECK(has_marker(svg3, "neg_S_bar", "2/3", "-2/3"));
    CHECK(has_marker(svg3, "neg_T_bar", "2", "2"));
    CHECK(has_marker(svg3, "nu", "2", "0"));

    const FigureSpec four = builtin_figure(BuiltinFigure::pic4);
    CHECK(has_marker(render_figure(four.construction, four.scene, four.viewport), "nu", "2", "0"));
    const FigureSpec two = builtin_figure(BuiltinFigure::pic2);
    CHECK(has_marker(render_figure(two.construction, two.scene, two.viewport), "P", "3/2", "15/4"));
}

TEST_CASE("figures are byte-deterministic") {
    for (BuiltinFigure b : {BuiltinFigure::pic1, BuiltinFigure::pic2, BuiltinFigure::pic3, BuiltinFigure::pic4}) {
        const FigureSpec f = builtin_figure(b);
        CHECK(render_figure(f.construction, f.scene, f.viewport) == render_figure(f.construction, f.scene, f.viewport));
    }
    CHECK(cli({"figure", "PIC3"}).out == cli({"figure", "pic3"}).out);
}

TEST_CASE("degenerate parallelogram draws a segment") {
    Scene s = reference_parallelogram_scene();
    s.epsilon = Scalar(0);
    const std::string svg = render_figure(Construction::nu, s, Viewport{});
    CHECK(svg.find("<polygon") == std::string::npos);
    CHECK(has_marker(svg, "nu", "0", "0"));

    Scene through = reference_parallelogram_scene();
    through.lines.insert_or_assign("p", parse_line_spec("y=2x"));
    const std::string point = render_figure(Construction::nu, through, Viewport{});
    CHECK(has_marker(point, "S_bar", "0", "0"));
    CHECK(has_marker(point, "nu", "0", "0"));
}

TEST_CASE("figure rejects bad windows and scenes") {
    Viewport v;
    v.xmax = v.xmin;
    const FigureSpec one = builtin_figure(BuiltinFigure::pic1);
    CHECK_THROWS_AS(render_figure(one.construction, one.scene, v), GeometryError);
    Scene s = reference_projection_scene();
    s.lines.insert_or_assign("l", parse_line_spec("y=-x"));
    CHECK_THROWS_AS(render_figure(Construction::phor, s, Viewport{}), GeometryError);
}

TEST_CASE("cli exit codes") {
    const Run ok = cli({"phor", "--line-g_s", "y=2x+4", "--line-g_t", "y=2x+2", "--line-l", "y=1"});
    CHECK(ok.status == 0);
    CHECK(ok.out.find("p_hor = (-5/2, 1)") != std::string::npos);

    const Run origin = cli({"phor", "--line-g_s", "y=2x+4", "--line-g_t", "y=2x+2", "--line-l", "y=-x"});
    CHECK(origin.status == 3);
    CHECK(origin.err.find("E_ORIGIN_ON_L") != std::string::npos);

    CHECK(cli({"phor", "--line-g_s", "y=2x+", "--line-g_t", "y=2x+2", "--line-l", "y=1"}).status == 2);
    CHECK(cli({"phor", "--bogus"}).status == 2);
    CHECK(cli({}).status == 2);
    CHECK(cli({"nu", "--line-g", "y=2x+4", "--line-p", "y=2x+2"}).status == 2);
    CHECK(cli({"--help"}).status == 0);
    CHECK(cli({"figure", "PIC9"}).status == 2);
    CHECK(cli({"check", "--trials", "0"}).status == 2);
}

TEST_CASE("cli json mode prints error documents") {
    const Run r = cli({"nu", "--json", "--line-g", "y=2x+4", "--line-p", "y=2x+2", "--epsilon", "1", "--sample",
                       "(1, 1)"});
    CHECK(r.status == 3);
    const ResultDocument doc = document_from_json(r.out);
    REQUIRE(doc.error);
    CHECK(doc.construction == "NU");

    const Run good = cli({"nu-general", "--json", "--line-g", "y=2x+4", "--line-p", "y=2x+2", "--line-axis", "y=0",
                          "--origin", "(0, 0)", "--offset", "4", "--sample", "(0, 4)"});
    CHECK(good.status == 0);
    CHECK(document_from_json(good.out).outputs.at("nu_point") == "(2, 0)");
}

TEST_CASE("cli reads scene files and writes svg files") {
    const std::string scene = temp_path("cli_scene.json");
    {
        std::ofstream f(scene);
        f << scene_to_json(reference_parallelogram_scene());
    }
    const Run r = cli({"nu", "--scene", scene, "--epsilon", "1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("nu = 1/2\n") != std::string::npos);

    const std::string svg = temp_path("cli_figure.svg");
    CHECK(cli({"nu", "--scene", scene, "--svg-out", svg}).status == 0);
    std::ifstream in(svg);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(has_marker(buf.str(), "nu", "2", "0"));

    CHECK(cli({"figure", "--construction", "nu", "--scene", scene}).out.find("data-label=\"nu\"") !=
          std::string::npos);
    CHECK(cli({"nu", "--scene", temp_path("missing.json")}).status == 2);
    std::remove(scene.c_str());
    std::remove(svg.c_str());
}

TEST_CASE("cli check subcommand") {
    const Run r = cli({"check", "--seed", "3", "--trials", "5"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("check: seed 3, 5 trials per property\n", 0) == 0);
    CHECK(r.out.find("all 11 properties passed") != std::string::npos);
    CHECK(cli({"check", "--seed", "3", "--trials", "5", "--serial"}).out == r.out);
}
