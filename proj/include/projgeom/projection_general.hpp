#ifndef PROJGEOM_PROJECTION_GENERAL_HPP
#define PROJGEOM_PROJECTION_GENERAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projgeom/kernel.hpp"

namespace projgeom {

/// The projection configuration with an arbitrary axis line and an origin on it.
struct PropTwoInput {
    Line g_s;
    Line g_t;
    Line l;
    Line axis;
    Point origin;
};

enum class PropTwoCase { main, s_coincides, t_coincides };

std::string_view case_name(PropTwoCase c) noexcept;

struct PropTwoResult {
    Point p;
    Line axis_p;
    /// Absent when axis_p coincides with z_s (the S_COINCIDES case).
    std::optional<Point> s_p;
    /// Absent when axis_p coincides with z_t (the T_COINCIDES case).
    std::optional<Point> t_p;
    PropTwoCase case_tag;
    Point s_axis;
    Point t_axis;

    // Context needed to re-check the result on its own.
    Point s;
    Point t;
    Point origin;
    Line l;
    Line axis;
    Line z_s;
    Line z_t;
};

/// Throws E_PRECONDITION naming the first broken input condition.
void validate(const PropTwoInput& input);

/// The unique point P on l. In the main case P is found by mapping the
/// scene to the standard frame (origin to (0,0), axis to the x-axis, the
/// direction of g_s to (0,1)), taking P_hor there and mapping back.
PropTwoResult construct_p(const PropTwoInput& input);

/// Same, reducing with a caller-chosen transversal direction instead of the
/// direction of g_s. The transversal must not be parallel to the axis.
PropTwoResult construct_p(const PropTwoInput& input, const Direction& transversal);

struct PropTwoReport {
    std::vector<std::pair<std::string, bool>> checks;

    bool all() const;
};

/// Evaluates every property the result is supposed to have, by name.
PropTwoReport verify_p2(const PropTwoResult& result);

}  // namespace projgeom

#endif  // PROJGEOM_PROJECTION_GENERAL_HPP
