#include "projgeom/random_scenes.hpp"

#include <array>

#include "projgeom/error.hpp"

namespace projgeom::random {

namespace {

constexpr int kMaxAttempts = 10000;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

bool one_in(Rng& rng, long n) {
    return uniform(rng, 0, n - 1) == 0;
}

LineKind any_kind(Rng& rng) {
    static constexpr std::array kinds{LineKind::general, LineKind::horizontal, LineKind::vertical};
    return kinds[static_cast<std::size_t>(uniform(rng, 0, 2))];
}

[[noreturn]] void exhausted(const char* what) {
    fail(ErrorCode::precondition, std::string("could not generate a valid ") + what);
}

// Whether S and T project from the origin onto p for every sample on g.
bool admits_samples(const ParallelScene& scene) {
    const Scalar eps = scene.epsilon.abs();
    if (scene.g.is_vertical()) {
        return scene.g.c() != eps && scene.g.c() != -eps;
    }
    const Scalar m = *scene.g.slope();
    const Scalar b_g = *scene.g.y_intercept();
    return !(b_g + m * eps).is_zero() && !(b_g - m * eps).is_zero();
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

Scalar scalar(Rng& rng) {
    const long num = uniform(rng, -9, 9);
    const long den = uniform(rng, 1, 5);
    return Scalar(num, den);
}

Scalar nonzero_scalar(Rng& rng) {
    while (true) {
        Scalar s = scalar(rng);
        if (!s.is_zero()) {
            return s;
        }
    }
}

Point point(Rng& rng) {
    Scalar x = scalar(rng);
    return {std::move(x), scalar(rng)};
}

Line line(Rng& rng, LineKind kind) {
    switch (kind) {
        case LineKind::horizontal: return Line::horizontal(scalar(rng));
        case LineKind::vertical: return Line::vertical(scalar(rng));
        case LineKind::general: break;
    }
    Scalar slope = nonzero_scalar(rng);
    return Line::slope_intercept(std::move(slope), scalar(rng));
}

Line parallel_line(Rng& rng, const Line& l, bool allow_equal) {
    while (true) {
        Line candidate(l.a(), l.b(), scalar(rng));
        if (allow_equal || candidate != l) {
            return candidate;
        }
    }
}

Point point_on(Rng& rng, const Line& l) {
    if (l.is_vertical()) {
        return {l.c(), scalar(rng)};
    }
    Scalar x = scalar(rng);
    Scalar y = (l.c() - l.a() * x) / l.b();
    return {std::move(x), std::move(y)};
}

const std::vector<ClosedFormBranch>& configuration_classes() {
    static const std::vector<ClosedFormBranch> classes{
        ClosedFormBranch::general,      ClosedFormBranch::l_horizontal,
        ClosedFormBranch::l_vertical,   ClosedFormBranch::g_horizontal,
        ClosedFormBranch::g_horizontal_l_vertical, ClosedFormBranch::g_vertical,
        ClosedFormBranch::g_vertical_l_horizontal,
    };
    return classes;
}

PropOneInput prop_one(Rng& rng, ClosedFormBranch config) {
    LineKind g_kind = LineKind::general;
    LineKind l_kind = LineKind::general;
    switch (config) {
        case ClosedFormBranch::general: break;
        case ClosedFormBranch::l_horizontal: l_kind = LineKind::horizontal; break;
        case ClosedFormBranch::l_vertical: l_kind = LineKind::vertical; break;
        case ClosedFormBranch::g_horizontal: g_kind = LineKind::horizontal; break;
        case ClosedFormBranch::g_horizontal_l_vertical:
            g_kind = LineKind::horizontal;
            l_kind = LineKind::vertical;
            break;
        case ClosedFormBranch::g_vertical: g_kind = LineKind::vertical; break;
        case ClosedFormBranch::g_vertical_l_horizontal:
            g_kind = LineKind::vertical;
            l_kind = LineKind::horizontal;
            break;
    }
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Line g_s = line(rng, g_kind);
        Line g_t = parallel_line(rng, g_s, one_in(rng, 16));
        PropOneInput input{std::move(g_s), std::move(g_t), line(rng, l_kind)};
        try {
            validate(input);
            return input;
        } catch (const GeometryError&) {
        }
    }
    exhausted("projection input");
}

PropTwoInput prop_two_main(Rng& rng) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Line axis = line(rng, any_kind(rng));
        Point origin = point_on(rng, axis);
        Line g_s = line(rng, any_kind(rng));
        Line g_t = parallel_line(rng, g_s, false);
        PropTwoInput input{std::move(g_s), std::move(g_t), line(rng, any_kind(rng)), std::move(axis),
                           std::move(origin)};
        try {
            validate(input);
        } catch (const GeometryError&) {
            continue;
        }
        if (intersect(input.axis, input.g_s) != intersect(input.l, input.g_s) &&
            intersect(input.axis, input.g_t) != intersect(input.l, input.g_t)) {
            return input;
        }
    }
    exhausted("main-case axis input");
}

PropTwoInput prop_two_coinciding(Rng& rng, PropTwoCase which) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Line axis = line(rng, any_kind(rng));
        Point origin = point_on(rng, axis);
        Line g_s = line(rng, any_kind(rng));
        Line g_t = parallel_line(rng, g_s, false);
        if (is_parallel(axis, g_s)) {
            continue;
        }
        const Point anchor = intersect(axis, which == PropTwoCase::t_coincides ? g_t : g_s);
        const Point other = point(rng);
        if (other == anchor) {
            continue;
        }
        PropTwoInput input{std::move(g_s), std::move(g_t), line_from_points(anchor, other), std::move(axis),
                           std::move(origin)};
        try {
            validate(input);
            return input;
        } catch (const GeometryError&) {
        }
    }
    exhausted("degenerate axis input");
}

ParallelScene parallel_scene(Rng& rng, bool vertical) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        ParallelScene scene{vertical ? Line::vertical(nonzero_scalar(rng)) : line(rng, LineKind::general),
                            Line::x_axis(), scalar(rng).abs()};
        if (!vertical && one_in(rng, 5)) {
            scene.g = line(rng, LineKind::horizontal);
        }
        if (contains(scene.g, {0, 0})) {
            continue;
        }
        scene.p = one_in(rng, 8) ? parallel_through(scene.g, {0, 0}) : parallel_line(rng, scene.g, true);
        if (admits_samples(scene)) {
            return scene;
        }
    }
    exhausted("parallel scene");
}

ParallelScene mu_scene(Rng& rng) {
    const Frame swap = swap_axes();
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        ParallelScene scene = parallel_scene(rng, one_in(rng, 3));
        if (admits_samples({swap.apply(scene.g), swap.apply(scene.p), scene.epsilon})) {
            return scene;
        }
    }
    exhausted("mu scene");
}

ParallelScene parallel_scene_with_slope(const Scalar& b_g, const Scalar& b_p, const Scalar& epsilon,
                                        const Scalar& slope) {
    return {Line::slope_intercept(slope, b_g), Line::slope_intercept(slope, b_p), epsilon};
}

std::vector<Point> nu_samples(Rng& rng, const ParallelScene& scene, std::size_t count) {
    std::vector<Point> out;
    for (int attempt = 0; attempt < kMaxAttempts && out.size() < count; ++attempt) {
        Point sample = point_on(rng, scene.g);
        try {
            validate(PropThreeInput{scene.g, scene.p, scene.epsilon, sample});
            out.push_back(std::move(sample));
        } catch (const GeometryError&) {
        }
    }
    if (out.size() < count) {
        exhausted("nu sample");
    }
    return out;
}

std::vector<Point> mu_samples(Rng& rng, const ParallelScene& scene, std::size_t count) {
    std::vector<Point> out;
    for (int attempt = 0; attempt < kMaxAttempts && out.size() < count; ++attempt) {
        Point sample = point_on(rng, scene.g);
        try {
            mu(PropThreeInput{scene.g, scene.p, scene.epsilon, sample});
            out.push_back(std::move(sample));
        } catch (const GeometryError&) {
        }
    }
    if (out.size() < count) {
        exhausted("mu sample");
    }
    return out;
}

GeneralParallelScene general_parallel_scene(Rng& rng) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Line axis = line(rng, any_kind(rng));
        Point origin = point_on(rng, axis);
        Line g = line(rng, any_kind(rng));
        if (is_parallel(axis, g) || contains(g, origin)) {
            continue;
        }
        Line p = one_in(rng, 8) ? parallel_through(g, origin) : parallel_line(rng, g, true);
        GeneralParallelScene scene{std::move(g), std::move(p), std::move(axis), std::move(origin),
                                   scalar(rng).abs()};
        // Projection parallelism does not depend on the sample, so one
        // probe decides whether the scene is usable.
        try {
            nu_general_samples(rng, scene, 1);
            return scene;
        } catch (const GeometryError&) {
        }
    }
    exhausted("general parallel scene");
}

std::vector<Point> nu_general_samples(Rng& rng, const GeneralParallelScene& scene, std::size_t count) {
    std::vector<Point> out;
    for (int attempt = 0; attempt < 200 && out.size() < count; ++attempt) {
        Point sample = point_on(rng, scene.g);
        try {
            nu_general({scene.g, scene.p, scene.axis, scene.origin, scene.offset, sample});
            out.push_back(std::move(sample));
        } catch (const GeometryError&) {
        }
    }
    if (out.size() < count) {
        exhausted("nu_general sample");
    }
    return out;
}

Frame frame(Rng& rng) {
    while (true) {
        Matrix2 m{scalar(rng), scalar(rng), scalar(rng), scalar(rng)};
        if (!m.determinant().is_zero()) {
            return Frame(std::move(m), point(rng));
        }
    }
}

}  // namespace projgeom::random
