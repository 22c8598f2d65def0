#ifndef PROJGEOM_RANDOM_SCENES_HPP
#define PROJGEOM_RANDOM_SCENES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "projgeom/frame.hpp"
#include "projgeom/parallelogram.hpp"
#include "projgeom/parallelogram_general.hpp"
#include "projgeom/projection_general.hpp"
#include "projgeom/projection_one.hpp"

namespace projgeom::random {

using Rng = std::mt19937_64;

/// Independent stream seed for (seed, stream, index); the same triple always
/// gives the same generator regardless of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// p/q with |p| <= 9 and 1 <= q <= 5.
Scalar scalar(Rng& rng);
Scalar nonzero_scalar(Rng& rng);
Point point(Rng& rng);

enum class LineKind { general, horizontal, vertical };

/// A line of the given kind; general lines have a nonzero finite slope.
Line line(Rng& rng, LineKind kind);
/// A line parallel to l (possibly equal to it when allow_equal is set).
Line parallel_line(Rng& rng, const Line& l, bool allow_equal);
Point point_on(Rng& rng, const Line& l);

/// Every one of the seven line-orientation classes used to stratify the
/// closed forms, in declaration order of ClosedFormBranch.
const std::vector<ClosedFormBranch>& configuration_classes();

/// A valid projection input whose line orientations fall in the given class.
/// The class names the orientation of g_s, g_t and l, independently of
/// whether P_hor or P_ver is evaluated. Roughly one input in sixteen has
/// g_s == g_t.
PropOneInput prop_one(Rng& rng, ClosedFormBranch config);

/// Valid main-case axis input (S != S_axis and T != T_axis).
PropTwoInput prop_two_main(Rng& rng);
/// Valid input where l passes through S_axis (or T_axis) with g_s != g_t.
PropTwoInput prop_two_coinciding(Rng& rng, PropTwoCase which);

struct ParallelScene {
    Line g;
    Line p;
    Scalar epsilon;
};

/// g and p parallel (vertical or not), g off the origin, epsilon >= 0.
ParallelScene parallel_scene(Rng& rng, bool vertical);
/// A scene whose vertical-offset (mu) construction admits samples.
ParallelScene mu_scene(Rng& rng);
/// A non-vertical scene with fixed intercepts and the given slope.
ParallelScene parallel_scene_with_slope(const Scalar& b_g, const Scalar& b_p, const Scalar& epsilon,
                                        const Scalar& slope);
/// Valid nu samples on g (nonzero y, non-parallel projection rays).
std::vector<Point> nu_samples(Rng& rng, const ParallelScene& scene, std::size_t count);
/// Valid mu samples on g (nonzero x, non-parallel vertical-offset rays).
std::vector<Point> mu_samples(Rng& rng, const ParallelScene& scene, std::size_t count);

struct GeneralParallelScene {
    Line g;
    Line p;
    Line axis;
    Point origin;
    Scalar offset;
};

GeneralParallelScene general_parallel_scene(Rng& rng);
std::vector<Point> nu_general_samples(Rng& rng, const GeneralParallelScene& scene, std::size_t count);

/// A random invertible affine map.
Frame frame(Rng& rng);

}  // namespace projgeom::random

#endif  // PROJGEOM_RANDOM_SCENES_HPP
