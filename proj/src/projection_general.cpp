#include "projgeom/projection_general.hpp"

#include <algorithm>

#include "projgeom/error.hpp"
#include "projgeom/frame.hpp"
#include "projgeom/projection_one.hpp"

namespace projgeom {

namespace {

// Same side of the line, and strictly off it unless the reference point is
// the origin itself (which happens when the origin lies on g_s or g_t).
bool same_side(const Line& line, const Point& reference, const Point& p, const Point& origin) {
    const int ref_side = side_of(line, reference);
    if (ref_side != side_of(line, p)) {
        return false;
    }
    return ref_side != 0 || reference == origin;
}

}  // namespace

std::string_view case_name(PropTwoCase c) noexcept {
    switch (c) {
        case PropTwoCase::main: return "MAIN";
        case PropTwoCase::s_coincides: return "S_COINCIDES";
        case PropTwoCase::t_coincides: return "T_COINCIDES";
    }
    return "UNKNOWN";
}

void validate(const PropTwoInput& input) {
    if (!is_parallel(input.g_s, input.g_t)) {
        fail(ErrorCode::precondition, "g_s and g_t must be parallel");
    }
    if (is_parallel(input.l, input.g_s)) {
        fail(ErrorCode::precondition, "l must not be parallel to g_s and g_t");
    }
    if (is_parallel(input.axis, input.g_s)) {
        fail(ErrorCode::precondition, "axis must not be parallel to g_s and g_t");
    }
    if (input.axis == input.l) {
        fail(ErrorCode::precondition, "axis must differ from l");
    }
    if (!contains(input.axis, input.origin)) {
        fail(ErrorCode::precondition, "origin must lie on the axis");
    }
    if (contains(input.l, input.origin)) {
        fail(ErrorCode::precondition, "origin must not lie on l");
    }
}

PropTwoResult construct_p(const PropTwoInput& input) {
    return construct_p(input, input.g_s.direction());
}

PropTwoResult construct_p(const PropTwoInput& input, const Direction& transversal) {
    validate(input);
    const Point s = intersect(input.l, input.g_s);
    const Point t = intersect(input.l, input.g_t);
    const Point s_axis = intersect(input.axis, input.g_s);
    const Point t_axis = intersect(input.axis, input.g_t);
    const Line z_s = line_from_points(input.origin, s);
    const Line z_t = line_from_points(input.origin, t);

    auto result = [&](Point p, Line axis_p, std::optional<Point> s_p, std::optional<Point> t_p,
                      PropTwoCase tag) {
        return PropTwoResult{std::move(p), std::move(axis_p), std::move(s_p), std::move(t_p), tag, s_axis,
                             t_axis, s, t, input.origin, input.l, input.axis, z_s, z_t};
    };

    PropTwoResult out = [&] {
        if (s_axis == s) {
            return result(s, input.axis, std::nullopt, input.origin, PropTwoCase::s_coincides);
        }
        if (t_axis == t) {
            return result(t, input.axis, input.origin, std::nullopt, PropTwoCase::t_coincides);
        }
        const Frame frame = frame_to_standard(input.origin, input.axis, transversal);
        const PropOneInput reduced{frame.apply(input.g_s), frame.apply(input.g_t), frame.apply(input.l)};
        const Point p = frame.inverse().apply(p_hor(reduced).point);
        const Line axis_p = parallel_through(input.axis, p);
        return result(p, axis_p, intersect(axis_p, z_s), intersect(axis_p, z_t), PropTwoCase::main);
    }();

    const PropTwoReport report = verify_p2(out);
    if (!report.all()) {
        std::string failed;
        for (const auto& [name, ok] : report.checks) {
            if (!ok) {
                failed += (failed.empty() ? "" : ", ") + name;
            }
        }
        fail(ErrorCode::inconsistent, "constructed point violates: " + failed);
    }
    return out;
}

bool PropTwoReport::all() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

PropTwoReport verify_p2(const PropTwoResult& r) {
    PropTwoReport report;
    auto check = [&](std::string name, bool ok) { report.checks.emplace_back(std::move(name), ok); };

    check("p_on_l", contains(r.l, r.p));
    check("axis_p_parallel_to_axis", is_parallel(r.axis_p, r.axis));
    check("p_on_axis_p", contains(r.axis_p, r.p));

    switch (r.case_tag) {
        case PropTwoCase::main:
            check("axis_p_differs_from_axis", r.axis_p != r.axis);
            check("s_p_present", r.s_p.has_value());
            check("t_p_present", r.t_p.has_value());
            if (!r.s_p || !r.t_p) {
                break;
            }
            check("s_p_on_axis_p_and_z_s", contains(r.axis_p, *r.s_p) && contains(r.z_s, *r.s_p));
            check("t_p_on_axis_p_and_z_t", contains(r.axis_p, *r.t_p) && contains(r.z_t, *r.t_p));
            check("dist_s_axis_origin_eq_dist_p_t_p", dist_sq(r.s_axis, r.origin) == dist_sq(r.p, *r.t_p));
            check("dist_t_axis_origin_eq_dist_p_s_p", dist_sq(r.t_axis, r.origin) == dist_sq(r.p, *r.s_p));
            check("s_axis_and_p_same_side_of_z_t", same_side(r.z_t, r.s_axis, r.p, r.origin));
            check("t_axis_and_p_same_side_of_z_s", same_side(r.z_s, r.t_axis, r.p, r.origin));
            break;
        case PropTwoCase::s_coincides:
            check("p_is_s_axis_and_s", r.p == r.s_axis && r.p == r.s);
            check("axis_p_is_axis_and_z_s", r.axis_p == r.axis && r.axis == r.z_s);
            check("t_p_is_origin", r.t_p == r.origin);
            check("dist_s_axis_origin_eq_dist_p_t_p",
                  r.t_p && dist_sq(r.s_axis, r.origin) == dist_sq(r.p, *r.t_p));
            check("s_axis_and_p_same_side_of_z_t", side_of(r.z_t, r.s_axis) == side_of(r.z_t, r.p));
            break;
        case PropTwoCase::t_coincides:
            check("p_is_t_axis_and_t", r.p == r.t_axis && r.p == r.t);
            check("axis_p_is_axis_and_z_t", r.axis_p == r.axis && r.axis == r.z_t);
            check("s_p_is_origin", r.s_p == r.origin);
            check("dist_t_axis_origin_eq_dist_p_s_p",
                  r.s_p && dist_sq(r.t_axis, r.origin) == dist_sq(r.p, *r.s_p));
            check("t_axis_and_p_same_side_of_z_s", side_of(r.z_s, r.t_axis) == side_of(r.z_s, r.p));
            break;
    }
    return report;
}

}  // namespace projgeom
