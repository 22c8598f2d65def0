#ifndef PROJGEOM_PROJECTION_ONE_HPP
#define PROJGEOM_PROJECTION_ONE_HPP

#include <string_view>
#include <utility>

#include "projgeom/kernel.hpp"

namespace projgeom {

/// Two parallel lines g_s, g_t and a transversal l that misses the origin.
struct PropOneInput {
    Line g_s;
    Line g_t;
    Line l;
};

enum class CoordinateAxis { x, y };

/// Case A shifts horizontally by the x-axis intercepts a_S, a_T and yields
/// P_hor; case B shifts vertically by the y-axis intercepts b_S, b_T and
/// yields P_ver.
enum class ProjectionCase { horizontal_a, vertical_b };

std::string_view case_name(ProjectionCase c) noexcept;

struct PropOneWitness {
    Point point;
    /// Parameter along l from s, in units of l.direction().
    Scalar rho;
    /// point - shift_s = alpha * t, with shift_s = (a_S, 0) or (0, b_S).
    Scalar alpha;
    /// point - shift_t = beta * s.
    Scalar beta;
    Point s;
    Point t;
    Scalar intercept_s;
    Scalar intercept_t;
    ProjectionCase case_tag;
};

/// Validates the input. Errors: E_PRECONDITION if g_s and g_t are not
/// parallel, E_PARALLEL if l is parallel to them, E_ORIGIN_ON_L.
void validate(const PropOneInput& input);

/// Whether the lines g_s, g_t admit the given case: A needs them to meet
/// the x-axis, B needs them to meet the y-axis.
bool case_applies(const PropOneInput& input, ProjectionCase c);

/// a_S / a_T for the x-axis, b_S / b_T for the y-axis.
/// Throws E_CASE_UNAVAILABLE when g is parallel to that axis.
Scalar axis_intercept(const Line& g, CoordinateAxis axis);

/// (rho[1], rho[2]) from the two quotient formulas: equations (1),(2) and
/// (3),(4) of the linear system. They always agree on valid input.
std::pair<Scalar, Scalar> rho_pair(const PropOneInput& input);
/// Same for the vertical system of case B.
std::pair<Scalar, Scalar> rho_tilde_pair(const PropOneInput& input);

PropOneWitness p_hor(const PropOneInput& input);
PropOneWitness p_ver(const PropOneInput& input);

/// Which explicit formula a closed form evaluation uses. Dispatch looks at
/// g_s, g_t first, then at l.
enum class ClosedFormBranch {
    general,
    l_horizontal,
    l_vertical,
    g_horizontal,              // P_ver only
    g_horizontal_l_vertical,   // P_ver only
    g_vertical,                // P_hor only
    g_vertical_l_horizontal,   // P_hor only
};

std::string_view branch_name(ClosedFormBranch b) noexcept;

/// Throws E_CASE_UNAVAILABLE if the case does not apply.
ClosedFormBranch closed_form_branch(const PropOneInput& input, ProjectionCase c);

/// The explicit slope/intercept formulas. Throws E_CASE_UNAVAILABLE for
/// horizontal g_s, g_t and E_SINGULAR if a denominator vanishes (which
/// only happens when the caller broke the preconditions).
Point p_hor_closed_form(const PropOneInput& input);
/// As p_hor_closed_form; unavailable for vertical g_s, g_t.
Point p_ver_closed_form(const PropOneInput& input);

/// Definitional solver: walks along l and imposes the two membership
/// conditions of the chosen case as separate 2x2 systems, independent of
/// the solved quotient formulas. E_INCONSISTENT if the two systems pick
/// different points, E_SINGULAR if one is degenerate.
Point oracle_point(const PropOneInput& input, ProjectionCase c);

/// Lines through the origin and S, T respectively.
Line z_s(const PropOneInput& input);
Line z_t(const PropOneInput& input);

/// Both membership conditions of the case for the candidate point.
bool satisfies_membership(const PropOneInput& input, ProjectionCase c, const Point& candidate);

}  // namespace projgeom

#endif  // PROJGEOM_PROJECTION_ONE_HPP
