#ifndef PROJGEOM_PARALLELOGRAM_GENERAL_HPP
#define PROJGEOM_PARALLELOGRAM_GENERAL_HPP

#include <span>

#include "projgeom/kernel.hpp"

namespace projgeom {

/// The parallelogram construction relative to an arbitrary axis line and a
/// centre `origin` on it. S and T are sample -/+ offset * d, where d is the
/// canonical direction of the axis (first nonzero component 1). The offset
/// is a signed rational multiple of d rather than a Euclidean length; a
/// negative offset swaps S and T.
struct PropFourInput {
    Line g;
    Line p;
    Line axis;
    Point origin;
    Scalar offset;
    Point sample;
};

struct PropFourResult {
    Point s;
    Point t;
    Point s_bar;
    Point t_bar;
    Point neg_s_bar;
    Point neg_t_bar;
    /// Where the line through t_bar and neg_s_bar meets the axis.
    Point nu_point;
};

/// Throws E_PRECONDITION / E_PARALLEL_PROJECTION for an invalid input.
void validate(const PropFourInput& input);

PropFourResult nu_general(const PropFourInput& input);

/// True iff every sample yields the same nu_point. A failing sample is
/// rethrown with its index and coordinates in the message.
bool nu_general_invariance(const Line& g, const Line& p, const Line& axis, const Point& origin,
                           const Scalar& offset, std::span<const Point> samples);

}  // namespace projgeom

#endif  // PROJGEOM_PARALLELOGRAM_GENERAL_HPP
