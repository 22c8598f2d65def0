#include "projgeom/projection_one.hpp"

#include "projgeom/error.hpp"

namespace projgeom {

namespace {

const Point kOrigin{0, 0};

struct Crossings {
    Point s;
    Point t;
};

Crossings crossings(const PropOneInput& input) {
    return {intersect(input.l, input.g_s), intersect(input.l, input.g_t)};
}

void require_case(const PropOneInput& input, ProjectionCase c) {
    if (!case_applies(input, c)) {
        fail(ErrorCode::case_unavailable,
             c == ProjectionCase::horizontal_a
                 ? "case A needs g_s, g_t not parallel to the x-axis (no P_hor)"
                 : "case B needs g_s, g_t not parallel to the y-axis (no P_ver)");
    }
}

Point shift_for(const Line& g, ProjectionCase c) {
    if (c == ProjectionCase::horizontal_a) {
        return {axis_intercept(g, CoordinateAxis::x), 0};
    }
    return {0, axis_intercept(g, CoordinateAxis::y)};
}

// Solves base + t*w - shift = k * anchor for t (k is eliminated).
Scalar solve_parameter(const Point& base, const Direction& w, const Point& shift, const Point& anchor) {
    const Point rhs = shift - base;
    const Scalar det = cross(anchor.x, anchor.y, w.dx(), w.dy());
    if (det.is_zero()) {
        fail(ErrorCode::singular, "membership system is degenerate");
    }
    return cross(anchor.x, anchor.y, rhs.x, rhs.y) / det;
}

// Factor k with v == k * anchor, read off a nonzero coordinate of anchor.
Scalar ratio_along(const Point& v, const Point& anchor) {
    return anchor.y.is_zero() ? v.x / anchor.x : v.y / anchor.y;
}

PropOneWitness build_witness(const PropOneInput& input, ProjectionCase c, const Scalar& rho,
                             const Crossings& st) {
    const Direction w = input.l.direction();
    const Point point = st.s + rho * w;
    const Point shift_s = shift_for(input.g_s, c);
    const Point shift_t = shift_for(input.g_t, c);
    const Scalar alpha = ratio_along(point - shift_s, st.t);
    const Scalar beta = ratio_along(point - shift_t, st.s);
    if (point - shift_s != alpha * st.t || point - shift_t != beta * st.s) {
        fail(ErrorCode::inconsistent, "linear system has no common solution");
    }
    const bool hor = c == ProjectionCase::horizontal_a;
    return {point,
            rho,
            alpha,
            beta,
            st.s,
            st.t,
            hor ? shift_s.x : shift_s.y,
            hor ? shift_t.x : shift_t.y,
            c};
}

struct GParams {
    Scalar m;    // slope when not vertical
    Scalar b_s;  // y-intercepts when not vertical
    Scalar b_t;
    Scalar a_s;  // x-intercepts when not horizontal
    Scalar a_t;
};

GParams g_params(const PropOneInput& input) {
    GParams g;
    if (!input.g_s.is_vertical()) {
        g.m = *input.g_s.slope();
        g.b_s = *input.g_s.y_intercept();
        g.b_t = *input.g_t.y_intercept();
    }
    if (!input.g_s.is_horizontal()) {
        g.a_s = *input.g_s.x_intercept();
        g.a_t = *input.g_t.x_intercept();
    }
    return g;
}

struct LParams {
    Scalar m_l;  // when not vertical
    Scalar b_l;
    Scalar a_l;  // when vertical
};

LParams l_params(const Line& l) {
    if (l.is_vertical()) {
        return {0, 0, l.c()};
    }
    return {*l.slope(), *l.y_intercept(), 0};
}

}  // namespace

std::string_view case_name(ProjectionCase c) noexcept {
    return c == ProjectionCase::horizontal_a ? "HORIZONTAL_A" : "VERTICAL_B";
}

std::string_view branch_name(ClosedFormBranch b) noexcept {
    switch (b) {
        case ClosedFormBranch::general: return "general";
        case ClosedFormBranch::l_horizontal: return "l_horizontal";
        case ClosedFormBranch::l_vertical: return "l_vertical";
        case ClosedFormBranch::g_horizontal: return "g_horizontal";
        case ClosedFormBranch::g_horizontal_l_vertical: return "g_horizontal_l_vertical";
        case ClosedFormBranch::g_vertical: return "g_vertical";
        case ClosedFormBranch::g_vertical_l_horizontal: return "g_vertical_l_horizontal";
    }
    return "unknown";
}

void validate(const PropOneInput& input) {
    if (!is_parallel(input.g_s, input.g_t)) {
        fail(ErrorCode::precondition, "g_s and g_t must be parallel");
    }
    if (is_parallel(input.l, input.g_s)) {
        fail(ErrorCode::parallel, "l must not be parallel to g_s and g_t");
    }
    if (contains(input.l, kOrigin)) {
        fail(ErrorCode::origin_on_l, "l must not pass through the origin (0|0)");
    }
}

bool case_applies(const PropOneInput& input, ProjectionCase c) {
    return c == ProjectionCase::horizontal_a ? !input.g_s.is_horizontal() : !input.g_s.is_vertical();
}

Scalar axis_intercept(const Line& g, CoordinateAxis axis) {
    const auto value = axis == CoordinateAxis::x ? g.x_intercept() : g.y_intercept();
    if (!value) {
        fail(ErrorCode::case_unavailable,
             axis == CoordinateAxis::x ? "line is parallel to the x-axis" : "line is parallel to the y-axis");
    }
    return *value;
}

std::pair<Scalar, Scalar> rho_pair(const PropOneInput& input) {
    validate(input);
    require_case(input, ProjectionCase::horizontal_a);
    const auto [s, t] = crossings(input);
    const Direction w = input.l.direction();
    const Scalar a_s = axis_intercept(input.g_s, CoordinateAxis::x);
    const Scalar a_t = axis_intercept(input.g_t, CoordinateAxis::x);
    const Scalar den_t = w.dx() * t.y - w.dy() * t.x;
    const Scalar den_s = w.dx() * s.y - w.dy() * s.x;
    if (den_t.is_zero() || den_s.is_zero()) {
        fail(ErrorCode::origin_on_l, "l passes through the origin");
    }
    return {(s.y * t.x - s.x * t.y + a_s * t.y) / den_t, s.y * a_t / den_s};
}

std::pair<Scalar, Scalar> rho_tilde_pair(const PropOneInput& input) {
    validate(input);
    require_case(input, ProjectionCase::vertical_b);
    const auto [s, t] = crossings(input);
    const Direction w = input.l.direction();
    const Scalar b_s = axis_intercept(input.g_s, CoordinateAxis::y);
    const Scalar b_t = axis_intercept(input.g_t, CoordinateAxis::y);
    const Scalar den_t = w.dy() * t.x - w.dx() * t.y;
    const Scalar den_s = w.dy() * s.x - w.dx() * s.y;
    if (den_t.is_zero() || den_s.is_zero()) {
        fail(ErrorCode::origin_on_l, "l passes through the origin");
    }
    return {(t.y * s.x - t.x * s.y + b_s * t.x) / den_t, s.x * b_t / den_s};
}

PropOneWitness p_hor(const PropOneInput& input) {
    const auto [rho1, rho2] = rho_pair(input);
    if (rho1 != rho2) {
        fail(ErrorCode::inconsistent, "rho[1] != rho[2]");
    }
    return build_witness(input, ProjectionCase::horizontal_a, rho1, crossings(input));
}

PropOneWitness p_ver(const PropOneInput& input) {
    const auto [rho1, rho2] = rho_tilde_pair(input);
    if (rho1 != rho2) {
        fail(ErrorCode::inconsistent, "rho~[1] != rho~[2]");
    }
    return build_witness(input, ProjectionCase::vertical_b, rho1, crossings(input));
}

ClosedFormBranch closed_form_branch(const PropOneInput& input, ProjectionCase c) {
    validate(input);
    require_case(input, c);
    const Line& g = input.g_s;
    const Line& l = input.l;
    if (g.is_vertical()) {
        return l.is_horizontal() ? ClosedFormBranch::g_vertical_l_horizontal : ClosedFormBranch::g_vertical;
    }
    if (g.is_horizontal()) {
        return l.is_vertical() ? ClosedFormBranch::g_horizontal_l_vertical : ClosedFormBranch::g_horizontal;
    }
    if (l.is_horizontal()) {
        return ClosedFormBranch::l_horizontal;
    }
    if (l.is_vertical()) {
        return ClosedFormBranch::l_vertical;
    }
    return ClosedFormBranch::general;
}

Point p_hor_closed_form(const PropOneInput& input) {
    const ClosedFormBranch branch = closed_form_branch(input, ProjectionCase::horizontal_a);
    const GParams g = g_params(input);
    const auto [m_l, b_l, a_l] = l_params(input.l);
    switch (branch) {
        case ClosedFormBranch::g_vertical_l_horizontal:
            return {g.a_s + g.a_t, b_l};
        case ClosedFormBranch::g_vertical: {
            const Scalar x = (b_l * (g.a_s + g.a_t) + m_l * g.a_s * g.a_t) / b_l;
            return {x, m_l * x + b_l};
        }
        case ClosedFormBranch::l_horizontal:
            return {(b_l - g.b_s - g.b_t) / g.m, b_l};
        case ClosedFormBranch::l_vertical:
            return {a_l, g.m * a_l + g.b_s + g.b_t + g.b_s * g.b_t / (a_l * g.m)};
        case ClosedFormBranch::general: {
            const Scalar den = b_l * g.m * (g.m - m_l);
            const Scalar sum = g.b_s + g.b_t;
            const Scalar prod = g.b_s * g.b_t;
            return {(b_l * b_l * g.m + prod * m_l - g.m * b_l * sum) / den,
                    (b_l * b_l * g.m * g.m + prod * m_l * m_l - g.m * m_l * b_l * sum) / den};
        }
        default:
            break;
    }
    fail(ErrorCode::case_unavailable, "no P_hor formula for this configuration");
}

Point p_ver_closed_form(const PropOneInput& input) {
    const ClosedFormBranch branch = closed_form_branch(input, ProjectionCase::vertical_b);
    const GParams g = g_params(input);
    const auto [m_l, b_l, a_l] = l_params(input.l);
    switch (branch) {
        case ClosedFormBranch::g_horizontal_l_vertical:
            return {a_l, g.b_s + g.b_t};
        case ClosedFormBranch::g_horizontal:
            return {(g.b_t - b_l) * (b_l - g.b_s) / (b_l * m_l),
                    (b_l * g.b_s + b_l * g.b_t - g.b_s * g.b_t) / b_l};
        case ClosedFormBranch::l_horizontal:
            return {(b_l - g.b_s) * (b_l - g.b_t) / (b_l * g.m), b_l};
        case ClosedFormBranch::l_vertical:
            return {a_l, g.m * a_l + g.b_t + g.b_s};
        case ClosedFormBranch::general: {
            const Scalar den = b_l * (g.m - m_l);
            return {(b_l - g.b_t) * (b_l - g.b_s) / den,
                    (m_l * (g.b_s * g.b_t - b_l * g.b_s - b_l * g.b_t) + b_l * b_l * g.m) / den};
        }
        default:
            break;
    }
    fail(ErrorCode::case_unavailable, "no P_ver formula for this configuration");
}

Point oracle_point(const PropOneInput& input, ProjectionCase c) {
    validate(input);
    require_case(input, c);
    const auto [s, t] = crossings(input);
    const Line& l = input.l;
    const Point base = l.is_vertical() ? Point{l.c() / l.a(), 0} : Point{0, l.c() / l.b()};
    const Direction w(l.b(), -l.a());
    const Scalar t1 = solve_parameter(base, w, shift_for(input.g_s, c), t);
    const Scalar t2 = solve_parameter(base, w, shift_for(input.g_t, c), s);
    if (t1 != t2) {
        fail(ErrorCode::inconsistent, "membership conditions select different points on l");
    }
    return base + t1 * w;
}

Line z_s(const PropOneInput& input) {
    return line_from_points(kOrigin, intersect(input.l, input.g_s));
}

Line z_t(const PropOneInput& input) {
    return line_from_points(kOrigin, intersect(input.l, input.g_t));
}

bool satisfies_membership(const PropOneInput& input, ProjectionCase c, const Point& candidate) {
    return contains(input.l, candidate) && contains(z_t(input), candidate - shift_for(input.g_s, c)) &&
           contains(z_s(input), candidate - shift_for(input.g_t, c));
}

}  // namespace projgeom
