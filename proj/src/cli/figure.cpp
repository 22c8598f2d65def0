#include "projgeom/figure.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "projgeom/error.hpp"
#include "projgeom/parallelogram.hpp"
#include "projgeom/parallelogram_general.hpp"
#include "projgeom/projection_general.hpp"
#include "projgeom/projection_one.hpp"
#include "projgeom/text.hpp"
#include "scene_access.hpp"

namespace projgeom {

namespace {

const Point kOrigin{0, 0};

// Combining macron (S + kBar renders as S with a bar), the minus sign and
// the hatted sample coordinates.
constexpr const char* kBar = "\xCC\x84";
constexpr const char* kMinus = "\xE2\x88\x92";
constexpr const char* kSample = "(x\xCC\x82|y\xCC\x82)";

// Display name: base text plus an optional subscript.
struct Label {
    std::string base;
    std::string sub;
};

std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string label_markup(const Label& label) {
    std::string out = escape(label.base);
    if (!label.sub.empty()) {
        out += "<tspan baseline-shift=\"sub\" font-size=\"75%\">" + escape(label.sub) + "</tspan>";
    }
    return out;
}

struct Segment {
    Point a;
    Point b;
};

// Liang-Barsky in exact arithmetic on a + t*d. Unset bounds mean the
// parameter is unbounded on that side.
std::optional<Segment> clip(const Point& a, const Point& d, std::optional<Scalar> lo, std::optional<Scalar> hi,
                            const Viewport& v) {
    const Scalar p[4] = {-d.x, d.x, -d.y, d.y};
    const Scalar q[4] = {a.x - v.xmin, v.xmax - a.x, a.y - v.ymin, v.ymax - a.y};
    for (int k = 0; k < 4; ++k) {
        if (p[k].is_zero()) {
            if (q[k].sign() < 0) {
                return std::nullopt;
            }
            continue;
        }
        const Scalar r = q[k] / p[k];
        if (p[k].sign() < 0) {
            if (!lo || *lo < r) {
                lo = r;
            }
        } else if (!hi || r < *hi) {
            hi = r;
        }
    }
    if (!lo || !hi || !(*lo < *hi)) {
        return std::nullopt;
    }
    return Segment{a + *lo * d, a + *hi * d};
}

Point base_point(const Line& l) {
    return l.is_vertical() ? Point{l.c() / l.a(), 0} : Point{0, l.c() / l.b()};
}

std::optional<Segment> clip_line(const Line& l, const Viewport& v) {
    const Direction d = l.direction();
    return clip(base_point(l), {d.dx(), d.dy()}, std::nullopt, std::nullopt, v);
}

std::optional<Segment> clip_segment(const Point& a, const Point& b, const Viewport& v) {
    if (a == b) {
        return std::nullopt;
    }
    return clip(a, b - a, Scalar(0), Scalar(1), v);
}

class Svg {
public:
    explicit Svg(const Viewport& v) : v_(v) {
        if (!(v.xmin < v.xmax) || !(v.ymin < v.ymax) || v.width <= 0 || v.height <= 0) {
            fail(ErrorCode::precondition, "viewport needs xmin < xmax, ymin < ymax and a positive size");
        }
    }

    void begin(std::string_view title) {
        const std::string w = std::to_string(v_.width);
        const std::string h = std::to_string(v_.height);
        body_ += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
                 "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
        body_ += "  <title>" + escape(title) + "</title>\n";
        body_ += "  <rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"white\"/>\n";
    }

    void group(std::string_view cls) { body_ += "  <g class=\"" + std::string(cls) + "\">\n"; }
    void end_group() { body_ += "  </g>\n"; }

    void coordinate_axes() {
        group("coordinate-axes");
        const std::string style = "stroke=\"#999999\" stroke-width=\"1\"";
        if (auto s = clip_line(Line::x_axis(), v_)) {
            segment_element(*s, "axis", style);
        }
        if (auto s = clip_line(Line::y_axis(), v_)) {
            segment_element(*s, "axis", style);
        }
        end_group();
    }

    // A scene line with its name and equation, labelled near its right end.
    void scene_line(const Line& l, const Label& label, const std::string& color) {
        const auto s = clip_line(l, v_);
        if (!s) {
            return;
        }
        body_ += "    <line class=\"scene-line\" data-name=\"" + escape(label.base + label.sub) +
                 "\" data-equation=\"" + escape(format_line(l)) + "\"" + coords(*s) + " stroke=\"" + color +
                 "\" stroke-width=\"1.5\"/>\n";
        const Point& end = s->b.x < s->a.x || (s->b.x == s->a.x && s->b.y < s->a.y) ? s->a : s->b;
        text(end, label, color, -28, -6);
    }

    void helper_line(const Line& l, const Label& label) {
        if (const auto s = clip_line(l, v_)) {
            segment_element(*s, "helper-line", "stroke=\"#777777\" stroke-width=\"1\" stroke-dasharray=\"6 4\"",
                            label.base + label.sub);
            const Point& end = s->b.x < s->a.x || (s->b.x == s->a.x && s->b.y < s->a.y) ? s->a : s->b;
            text(end, label, "#555555", -28, 14);
        }
    }

    void helper_segment(const Point& a, const Point& b) {
        if (const auto s = clip_segment(a, b, v_)) {
            segment_element(*s, "helper-segment", "stroke=\"#777777\" stroke-width=\"1\" stroke-dasharray=\"2 3\"");
        }
    }

    // Thick segment through the corners; used when the parallelogram collapses.
    void shape_segment(const Point& a, const Point& b) {
        if (const auto s = clip_segment(a, b, v_)) {
            segment_element(*s, "parallelogram", "stroke=\"#1f77b4\" stroke-width=\"3\"");
        }
    }

    void polygon(const std::vector<Point>& corners) {
        std::string pts;
        for (const Point& c : corners) {
            pts += (pts.empty() ? "" : " ") + sx(c.x) + "," + sy(c.y);
        }
        body_ += "    <polygon class=\"parallelogram\" points=\"" + pts +
                 "\" fill=\"#1f77b4\" fill-opacity=\"0.15\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
    }

    void marker(const std::string& id, const Point& p, const Label& label, bool result = false) {
        const std::string color = result ? "#d62728" : "#000000";
        body_ += "    <circle class=\"marker" + std::string(result ? " result" : "") + "\" data-label=\"" +
                 escape(id) + "\" data-x=\"" + p.x.to_string() + "\" data-y=\"" + p.y.to_string() + "\" cx=\"" +
                 sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"" + (result ? "5" : "3.5") + "\" fill=\"" + color +
                 "\"/>\n";
        text(p, label, color, 6, -6);
    }

    std::string finish() {
        body_ += "</svg>\n";
        return std::move(body_);
    }

private:
    std::string sx(const Scalar& x) const {
        return format_decimal((x - v_.xmin) * Scalar(v_.width) / (v_.xmax - v_.xmin));
    }
    std::string sy(const Scalar& y) const {
        return format_decimal((v_.ymax - y) * Scalar(v_.height) / (v_.ymax - v_.ymin));
    }

    std::string coords(const Segment& s) const {
        return " x1=\"" + sx(s.a.x) + "\" y1=\"" + sy(s.a.y) + "\" x2=\"" + sx(s.b.x) + "\" y2=\"" + sy(s.b.y) +
               "\"";
    }

    void segment_element(const Segment& s, std::string_view cls, const std::string& style,
                         const std::string& name = "") {
        body_ += "    <line class=\"" + std::string(cls) + "\"";
        if (!name.empty()) {
            body_ += " data-name=\"" + escape(name) + "\"";
        }
        body_ += coords(s) + " " + style + "/>\n";
    }

    void text(const Point& at, const Label& label, const std::string& color, int dx, int dy) {
        if (label.base.empty()) {
            return;
        }
        body_ += "    <text x=\"" + sx(at.x) + "\" y=\"" + sy(at.y) + "\" dx=\"" + std::to_string(dx) + "\" dy=\"" +
                 std::to_string(dy) + "\" font-family=\"serif\" font-size=\"14\" fill=\"" + color + "\">" +
                 label_markup(label) + "</text>\n";
    }

    Viewport v_;
    std::string body_;
};

Label bar(const char* base, bool negated = false) {
    return {std::string(negated ? kMinus : "") + base + kBar, ""};
}

void draw_parallelogram(Svg& svg, const Point& s_bar, const Point& t_bar, const Point& neg_s_bar,
                        const Point& neg_t_bar) {
    svg.group("parallelogram");
    if (s_bar == t_bar || t_bar == neg_s_bar) {
        // Degenerate: a segment through the centre, or nothing at all when
        // every corner is the centre.
        svg.shape_segment(s_bar, neg_s_bar);
    } else {
        svg.polygon({s_bar, t_bar, neg_s_bar, neg_t_bar});
    }
    svg.end_group();
}

void draw_corner_markers(Svg& svg, const Point& s, const Point& t, const Point& s_bar, const Point& t_bar,
                         const Point& neg_s_bar, const Point& neg_t_bar) {
    svg.marker("S", s, {"S", ""});
    svg.marker("T", t, {"T", ""});
    svg.marker("S_bar", s_bar, bar("S"));
    svg.marker("T_bar", t_bar, bar("T"));
    svg.marker("neg_S_bar", neg_s_bar, bar("S", true));
    svg.marker("neg_T_bar", neg_t_bar, bar("T", true));
}

void draw_projection_one(Svg& svg, const Scene& scene) {
    const PropOneInput in{need_line(scene, "g_s"), need_line(scene, "g_t"), need_line(scene, "l")};
    validate(in);
    svg.group("helper-lines");
    svg.helper_line(z_s(in), {"Z", "S"});
    svg.helper_line(z_t(in), {"Z", "T"});
    svg.end_group();
    svg.group("scene-lines");
    svg.scene_line(in.g_s, {"G", "S"}, "#2ca02c");
    svg.scene_line(in.g_t, {"G", "T"}, "#9467bd");
    svg.scene_line(in.l, {"L", ""}, "#1f77b4");
    svg.end_group();
    svg.group("markers");
    svg.marker("S", intersect(in.l, in.g_s), {"S", ""});
    svg.marker("T", intersect(in.l, in.g_t), {"T", ""});
    if (case_applies(in, ProjectionCase::horizontal_a)) {
        svg.marker("a_S", {axis_intercept(in.g_s, CoordinateAxis::x), 0}, {"a", "S"});
        svg.marker("a_T", {axis_intercept(in.g_t, CoordinateAxis::x), 0}, {"a", "T"});
        svg.marker("P_hor", p_hor(in).point, {"P", "hor"}, true);
    }
    if (case_applies(in, ProjectionCase::vertical_b)) {
        svg.marker("b_S", {0, axis_intercept(in.g_s, CoordinateAxis::y)}, {"b", "S"});
        svg.marker("b_T", {0, axis_intercept(in.g_t, CoordinateAxis::y)}, {"b", "T"});
        svg.marker("P_ver", p_ver(in).point, {"P", "ver"}, true);
    }
    svg.end_group();
}

void draw_projection_general(Svg& svg, const Scene& scene) {
    const PropTwoInput in{need_line(scene, "g_s"), need_line(scene, "g_t"), need_line(scene, "l"),
                          need_line(scene, "axis"), need(scene.origin, "origin")};
    const PropTwoResult r = construct_p(in);
    svg.group("helper-lines");
    svg.helper_line(r.z_s, {"Z", "S"});
    svg.helper_line(r.z_t, {"Z", "T"});
    if (r.axis_p != r.axis) {
        svg.helper_line(r.axis_p, {"Axis", "P"});
    }
    svg.end_group();
    svg.group("scene-lines");
    svg.scene_line(in.g_s, {"G", "S"}, "#2ca02c");
    svg.scene_line(in.g_t, {"G", "T"}, "#9467bd");
    svg.scene_line(in.l, {"L", ""}, "#1f77b4");
    svg.scene_line(in.axis, {"Axis", ""}, "#ff7f0e");
    svg.end_group();
    svg.group("markers");
    svg.marker("Origin", in.origin, {"Origin", ""});
    svg.marker("S", r.s, {"S", ""});
    svg.marker("T", r.t, {"T", ""});
    svg.marker("S_Axis", r.s_axis, {"S", "Axis"});
    svg.marker("T_Axis", r.t_axis, {"T", "Axis"});
    if (r.s_p) {
        svg.marker("S_P", *r.s_p, {"S", "P"});
    }
    if (r.t_p) {
        svg.marker("T_P", *r.t_p, {"T", "P"});
    }
    svg.marker("P", r.p, {"P", ""}, true);
    svg.end_group();
}

void draw_parallelogram_scene(Svg& svg, const Scene& scene, bool vertical_offsets) {
    const PropThreeInput in{need_line(scene, "g"), need_line(scene, "p"), need(scene.epsilon, "epsilon"),
                            need(scene.sample, "sample")};
    const ParallelogramWitness w = vertical_offsets ? mu_parallelogram(in) : parallelogram(in);
    svg.group("helper-lines");
    svg.helper_segment(w.s, w.t);
    svg.helper_segment(kOrigin, w.s);
    svg.helper_segment(kOrigin, w.t);
    if (w.connecting_line) {
        svg.helper_line(*w.connecting_line, {"", ""});
    }
    svg.end_group();
    draw_parallelogram(svg, w.s_bar, w.t_bar, w.neg_s_bar, w.neg_t_bar);
    svg.group("scene-lines");
    svg.scene_line(in.g, {"G", ""}, "#2ca02c");
    svg.scene_line(in.p, {"P", ""}, "#9467bd");
    svg.end_group();
    svg.group("markers");
    svg.marker("sample", in.sample, {kSample, ""});
    draw_corner_markers(svg, w.s, w.t, w.s_bar, w.t_bar, w.neg_s_bar, w.neg_t_bar);
    if (vertical_offsets) {
        svg.marker("mu", {0, w.nu}, {"\xCE\xBC", ""}, true);
    } else {
        svg.marker("nu", {w.nu, 0}, {"\xCE\xBD", ""}, true);
    }
    svg.end_group();
}

void draw_parallelogram_general(Svg& svg, const Scene& scene) {
    const PropFourInput in{need_line(scene, "g"),         need_line(scene, "p"),
                           need_line(scene, "axis"),      need(scene.origin, "origin"),
                           need(scene.offset, "offset"), need(scene.sample, "sample")};
    const PropFourResult r = nu_general(in);
    svg.group("helper-lines");
    svg.helper_line(parallel_through(in.axis, in.sample), {"A\xCC\x82xis", ""});
    svg.helper_segment(in.origin, r.s);
    svg.helper_segment(in.origin, r.t);
    if (r.t_bar != r.neg_s_bar) {
        svg.helper_line(line_from_points(r.t_bar, r.neg_s_bar), {"", ""});
    }
    svg.end_group();
    draw_parallelogram(svg, r.s_bar, r.t_bar, r.neg_s_bar, r.neg_t_bar);
    svg.group("scene-lines");
    svg.scene_line(in.g, {"G", ""}, "#2ca02c");
    svg.scene_line(in.p, {"P", ""}, "#9467bd");
    svg.scene_line(in.axis, {"Axis", ""}, "#ff7f0e");
    svg.end_group();
    svg.group("markers");
    svg.marker("Origin", in.origin, {"Origin", ""});
    svg.marker("sample", in.sample, {kSample, ""});
    draw_corner_markers(svg, r.s, r.t, r.s_bar, r.t_bar, r.neg_s_bar, r.neg_t_bar);
    svg.marker("nu", r.nu_point, {"\xCE\xBD", ""}, true);
    svg.end_group();
}

Scene scene_of(std::initializer_list<std::pair<const char*, const char*>> lines) {
    Scene scene;
    for (const auto& [name, spec] : lines) {
        scene.lines.insert_or_assign(name, parse_line_spec(spec));
    }
    return scene;
}

}  // namespace

std::optional<BuiltinFigure> parse_builtin_figure(std::string_view text) {
    std::string key(text);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::toupper(c); });
    if (key == "PIC1") return BuiltinFigure::pic1;
    if (key == "PIC2") return BuiltinFigure::pic2;
    if (key == "PIC3") return BuiltinFigure::pic3;
    if (key == "PIC4") return BuiltinFigure::pic4;
    return std::nullopt;
}

FigureSpec builtin_figure(BuiltinFigure which) {
    switch (which) {
        case BuiltinFigure::pic1:
            return {Construction::phor, scene_of({{"g_s", "y=2x+4"}, {"g_t", "y=2x+2"}, {"l", "y=1"}}),
                    {-6, 6, -3, 6, 640, 480}};
        case BuiltinFigure::pic2: {
            Scene scene = scene_of(
                {{"g_s", "y=1/3x+1"}, {"g_t", "y=1/3x+2"}, {"l", "y=-1/6x+4"}, {"axis", "y=0"}});
            scene.origin = Point{0, 0};
            return {Construction::p2, std::move(scene), {-8, 12, -4, 7, 800, 440}};
        }
        case BuiltinFigure::pic3: {
            Scene scene = scene_of({{"g", "y=2x+4"}, {"p", "y=2x+2"}});
            scene.epsilon = Scalar(4);
            scene.sample = Point{0, 4};
            return {Construction::nu, std::move(scene), {-6, 6, -4, 6, 600, 500}};
        }
        case BuiltinFigure::pic4: {
            Scene scene = scene_of({{"g", "y=2x+4"}, {"p", "y=2x+2"}, {"axis", "y=0"}});
            scene.origin = Point{0, 0};
            scene.offset = Scalar(4);
            scene.sample = Point{0, 4};
            return {Construction::nu_general, std::move(scene), {-6, 7, -4, 6, 650, 500}};
        }
    }
    fail(ErrorCode::precondition, "unknown built-in figure");
}

std::string render_figure(Construction construction, const Scene& scene, const Viewport& viewport) {
    Svg svg(viewport);
    svg.begin(std::string(construction_name(construction)) + " figure");
    if (construction != Construction::p2 && construction != Construction::nu_general) {
        svg.coordinate_axes();
    }
    switch (construction) {
        case Construction::phor:
        case Construction::pver: draw_projection_one(svg, scene); break;
        case Construction::p2: draw_projection_general(svg, scene); break;
        case Construction::nu: draw_parallelogram_scene(svg, scene, false); break;
        case Construction::mu: draw_parallelogram_scene(svg, scene, true); break;
        case Construction::nu_general: draw_parallelogram_general(svg, scene); break;
    }
    return svg.finish();
}

std::string format_decimal(const Scalar& value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value.to_double(), std::chars_format::general, 12);
    std::string out(buf, res.ptr);
    return out == "-0" ? "0" : out;
}

}  // namespace projgeom
