#include "projgeom/parallelogram.hpp"

#include "projgeom/error.hpp"
#include "projgeom/frame.hpp"

namespace projgeom {

namespace {

const Point kOrigin{0, 0};

struct Offsets {
    Point s;
    Point t;
};

Offsets horizontal_offsets(const PropThreeInput& input) {
    const Scalar eps = input.epsilon.abs();
    return {{input.sample.x - eps, input.sample.y}, {input.sample.x + eps, input.sample.y}};
}

Scalar x_axis_crossing(const Line& line) {
    if (line.is_horizontal()) {
        fail(ErrorCode::inconsistent, "connecting line never meets the x-axis");
    }
    return *line.x_intercept();
}

void require_not_vertical(const PropThreeInput& input) {
    if (input.g.is_vertical()) {
        fail(ErrorCode::case_unavailable, "slope formulas need non-vertical g and p");
    }
}

}  // namespace

Point project_through(const Point& center, const Point& q, const Line& p) {
    if (q == center) {
        fail(ErrorCode::origin_sample, "cannot project the projection centre itself");
    }
    const Line ray = line_from_points(center, q);
    if (is_parallel(ray, p)) {
        fail(ErrorCode::parallel_projection, "line through the centre and the point is parallel to the projection line");
    }
    return intersect(ray, p);
}

Point project_through_origin(const Point& q, const Line& p) {
    return project_through(kOrigin, q, p);
}

void validate(const PropThreeInput& input) {
    if (!is_parallel(input.g, input.p)) {
        fail(ErrorCode::precondition, "g and p must be parallel");
    }
    if (contains(input.g, kOrigin)) {
        fail(ErrorCode::precondition, "g must not pass through the origin (0|0)");
    }
    if (!contains(input.g, input.sample)) {
        fail(ErrorCode::precondition, "the sample point must lie on g");
    }
    if (input.sample.y.is_zero()) {
        fail(ErrorCode::precondition, "the sample point needs a nonzero y-coordinate");
    }
    const auto [s, t] = horizontal_offsets(input);
    for (const Point& q : {s, t}) {
        if (is_parallel(line_from_points(kOrigin, q), input.g)) {
            fail(ErrorCode::parallel_projection, "the line through (0|0) and S or T is parallel to g and p");
        }
    }
}

ParallelogramWitness parallelogram(const PropThreeInput& input) {
    validate(input);
    const auto [s, t] = horizontal_offsets(input);
    ParallelogramWitness w{s, t, {}, {}, {}, {}, 0, std::nullopt};
    w.s_bar = project_through_origin(s, input.p);
    w.t_bar = project_through_origin(t, input.p);
    w.neg_s_bar = reflect_through(w.s_bar, kOrigin);
    w.neg_t_bar = reflect_through(w.t_bar, kOrigin);
    if (w.t_bar == w.neg_s_bar) {
        if (w.t_bar != kOrigin) {
            fail(ErrorCode::inconsistent, "parallelogram corners coincide away from the origin");
        }
        // p passes through the origin: everything collapses to (0|0).
        return w;
    }
    w.connecting_line = line_from_points(w.t_bar, w.neg_s_bar);
    w.nu = x_axis_crossing(*w.connecting_line);
    return w;
}

std::pair<Point, Point> s_bar_t_bar_closed_form(const PropThreeInput& input) {
    validate(input);
    require_not_vertical(input);
    const Scalar m = *input.g.slope();
    const Scalar b_g = *input.g.y_intercept();
    const Scalar b_p = *input.p.y_intercept();
    const Scalar eps = input.epsilon.abs();
    const auto [s, t] = horizontal_offsets(input);
    return {(b_p / (b_g + m * eps)) * s, (b_p / (b_g - m * eps)) * t};
}

Line connecting_line(const PropThreeInput& input) {
    validate(input);
    require_not_vertical(input);
    const Scalar m = *input.g.slope();
    const Scalar b_g = *input.g.y_intercept();
    const Scalar b_p = *input.p.y_intercept();
    const Scalar eps = input.epsilon.abs();
    const Scalar& x = input.sample.x;
    const Scalar gain_num = m * x + b_g;
    const Scalar gain_den = x * b_g + m * eps * eps;
    return Line(-gain_num * b_g, gain_den, -gain_num * b_p * eps);
}

Scalar nu(const PropThreeInput& input) {
    return parallelogram(input).nu;
}

Scalar nu_closed_form(const Line& g, const Line& p, const Scalar& epsilon) {
    if (!is_parallel(g, p)) {
        fail(ErrorCode::precondition, "g and p must be parallel");
    }
    if (contains(g, kOrigin)) {
        fail(ErrorCode::precondition, "g must not pass through the origin (0|0)");
    }
    const Scalar eps = epsilon.abs();
    if (g.is_vertical()) {
        return p.c() * eps / g.c();
    }
    return *p.y_intercept() * eps / *g.y_intercept();
}

Scalar minus_nu_check(const PropThreeInput& input) {
    const ParallelogramWitness w = parallelogram(input);
    if (!w.connecting_line) {
        return 0;
    }
    return x_axis_crossing(line_from_points(w.s_bar, w.neg_t_bar));
}

Scalar mu(const PropThreeInput& input) {
    return mu_parallelogram(input).nu;
}

ParallelogramWitness mu_parallelogram(const PropThreeInput& input) {
    if (input.sample.x.is_zero()) {
        fail(ErrorCode::precondition, "the sample point needs a nonzero x-coordinate for mu");
    }
    const Frame swap = swap_axes();
    ParallelogramWitness w =
        parallelogram({swap.apply(input.g), swap.apply(input.p), input.epsilon, swap.apply(input.sample)});
    // The swap is its own inverse.
    for (Point* q : {&w.s, &w.t, &w.s_bar, &w.t_bar, &w.neg_s_bar, &w.neg_t_bar}) {
        *q = swap.apply(*q);
    }
    if (w.connecting_line) {
        w.connecting_line = swap.apply(*w.connecting_line);
    }
    return w;
}

}  // namespace projgeom
