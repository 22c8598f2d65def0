#ifndef PROJGEOM_PARALLELOGRAM_HPP
#define PROJGEOM_PARALLELOGRAM_HPP

#include <optional>
#include <utility>

#include "projgeom/kernel.hpp"

namespace projgeom {

/// Parallel lines g and p (the projection line), a horizontal offset
/// epsilon and a sample point on g. S and T sit at sample -/+ (epsilon, 0).
/// A negative epsilon is replaced by its absolute value.
struct PropThreeInput {
    Line g;
    Line p;
    Scalar epsilon;
    Point sample;
};

struct ParallelogramWitness {
    Point s;
    Point t;
    Point s_bar;
    Point t_bar;
    Point neg_s_bar;
    Point neg_t_bar;
    Scalar nu;
    /// Line through t_bar and neg_s_bar; absent when p passes through the
    /// origin and all four corners collapse onto it.
    std::optional<Line> connecting_line;
};

/// Intersection of the line through center and q with p.
/// Errors: E_ORIGIN_SAMPLE if q == center, E_PARALLEL_PROJECTION if that
/// line is parallel to p.
Point project_through(const Point& center, const Point& q, const Line& p);
Point project_through_origin(const Point& q, const Line& p);

/// Throws E_PRECONDITION / E_PARALLEL_PROJECTION for an invalid input.
void validate(const PropThreeInput& input);

/// Runs the whole construction: project S and T onto p, reflect through
/// the origin, join t_bar with neg_s_bar and cut the x-axis.
ParallelogramWitness parallelogram(const PropThreeInput& input);

/// S_bar = b_P/(b_G + m*eps) * S and T_bar = b_P/(b_G - m*eps) * T.
/// E_CASE_UNAVAILABLE for vertical g, p.
std::pair<Point, Point> s_bar_t_bar_closed_form(const PropThreeInput& input);

/// The explicit line (x*b_G + m*eps^2) * y = (m*x + b_G) * (b_G*x - b_P*eps)
/// with (x, y) the sample, in implicit form so a vertical result needs no
/// special case. E_CASE_UNAVAILABLE for vertical g, p.
Line connecting_line(const PropThreeInput& input);

/// x-intercept of the line through t_bar and neg_s_bar.
Scalar nu(const PropThreeInput& input);

/// b_P*eps/b_G, or p*eps/r for vertical g: x=r, p: x=p.
Scalar nu_closed_form(const Line& g, const Line& p, const Scalar& epsilon);

/// x-intercept of the line through s_bar and neg_t_bar (equal to -nu).
Scalar minus_nu_check(const PropThreeInput& input);

/// Vertical-offset counterpart: S_v, T_v = sample -/+ (0, epsilon), and the
/// y-intercept of the line through t_v_bar and neg_s_v_bar. Computed by
/// swapping the roles of x and y and reusing the nu construction.
Scalar mu(const PropThreeInput& input);

/// The witness behind mu, in the original coordinates: s and t are the
/// vertically shifted points, `nu` holds mu and the connecting line is the
/// one through t_bar and neg_s_bar.
ParallelogramWitness mu_parallelogram(const PropThreeInput& input);

}  // namespace projgeom

#endif  // PROJGEOM_PARALLELOGRAM_HPP
