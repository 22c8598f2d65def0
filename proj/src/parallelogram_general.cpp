#include "projgeom/parallelogram_general.hpp"

#include <optional>

#include "projgeom/error.hpp"
#include "projgeom/parallelogram.hpp"
#include "projgeom/text.hpp"

namespace projgeom {

void validate(const PropFourInput& input) {
    if (!is_parallel(input.g, input.p)) {
        fail(ErrorCode::precondition, "g and p must be parallel");
    }
    if (input.axis == input.g || is_parallel(input.axis, input.g)) {
        fail(ErrorCode::precondition, "axis must not be parallel to g and p");
    }
    if (!contains(input.axis, input.origin)) {
        fail(ErrorCode::precondition, "origin must lie on the axis");
    }
    if (contains(input.g, input.origin)) {
        fail(ErrorCode::precondition, "origin must not lie on g");
    }
    if (!contains(input.g, input.sample)) {
        fail(ErrorCode::precondition, "the sample point must lie on g");
    }
    if (contains(input.axis, input.sample)) {
        fail(ErrorCode::precondition, "the sample point must not lie on the axis");
    }
}

PropFourResult nu_general(const PropFourInput& input) {
    validate(input);
    const Direction d = input.axis.direction();
    PropFourResult r;
    r.s = input.sample - input.offset * d;
    r.t = input.sample + input.offset * d;
    for (const Point& q : {r.s, r.t}) {
        if (q == input.origin || is_parallel(line_from_points(input.origin, q), input.g)) {
            fail(ErrorCode::parallel_projection, "the line through origin and S or T is parallel to g and p");
        }
    }
    r.s_bar = project_through(input.origin, r.s, input.p);
    r.t_bar = project_through(input.origin, r.t, input.p);
    r.neg_s_bar = reflect_through(r.s_bar, input.origin);
    r.neg_t_bar = reflect_through(r.t_bar, input.origin);
    if (r.t_bar == r.neg_s_bar) {
        if (r.t_bar != input.origin) {
            fail(ErrorCode::inconsistent, "parallelogram corners coincide away from the centre");
        }
        r.nu_point = input.origin;
        return r;
    }
    const Line connecting = line_from_points(r.t_bar, r.neg_s_bar);
    if (is_parallel(connecting, input.axis)) {
        fail(ErrorCode::inconsistent, "connecting line never meets the axis");
    }
    r.nu_point = intersect(connecting, input.axis);
    return r;
}

bool nu_general_invariance(const Line& g, const Line& p, const Line& axis, const Point& origin,
                           const Scalar& offset, std::span<const Point> samples) {
    std::optional<Point> common;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        Point nu_point;
        try {
            nu_point = nu_general({g, p, axis, origin, offset, samples[i]}).nu_point;
        } catch (const GeometryError& e) {
            throw GeometryError(e.code(), "sample #" + std::to_string(i) + " " + format_point(samples[i]) +
                                              ": " + e.what());
        }
        if (!common) {
            common = nu_point;
        } else if (*common != nu_point) {
            return false;
        }
    }
    return true;
}

}  // namespace projgeom
