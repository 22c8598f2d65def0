// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "projgeom/cli.hpp"
#include "projgeom/error.hpp"
#include "projgeom/frame.hpp"
#include "projgeom/parallelogram.hpp"
#include "projgeom/parallelogram_general.hpp"
#include "projgeom/projection_general.hpp"
#include "projgeom/projection_one.hpp"
#include "projgeom/random_scenes.hpp"
#include "projgeom/text.hpp"

using namespace projgeom;
namespace rnd = projgeom::random;

namespace {

constexpr std::uint64_t kSeed = 1;

Line L(const char* spec) { return parse_line_spec(spec); }

// Accumulates the first failure and a short tally for the report line.
struct Criterion {
    std::string first_failure;
    std::string tally;

    void require(bool ok, const std::string& what) {
        if (!ok && first_failure.empty()) {
            first_failure = what;
        }
    }
};

template <typename F>
bool raises(ErrorCode expected, F&& f) {
    try {
        f();
    } catch (const GeometryError& e) {
        return e.code() == expected;
    }
    return false;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

rnd::Rng rng_for(std::uint64_t stream, std::uint64_t trial) {
    return rnd::Rng(rnd::derive_seed(kSeed, stream, trial));
}

constexpr ProjectionCase kCases[] = {ProjectionCase::horizontal_a, ProjectionCase::vertical_b};

void reference_projection(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    const PropOneInput in{L("y=2x+4"), L("y=2x+2"), L("y=1")};
    const PropOneWitness hor = p_hor(in);
    const PropOneWitness ver = p_ver(in);
    c.require(hor.s == Point{Scalar(-3, 2), 1}, "S = " + format_point(hor.s));
    c.require(hor.t == Point{Scalar(-1, 2), 1}, "T = " + format_point(hor.t));
    c.require(hor.intercept_s == -2, "a_S = " + hor.intercept_s.to_string());
    c.require(hor.intercept_t == -1, "a_T = " + hor.intercept_t.to_string());
    c.require(ver.intercept_s == 4, "b_S = " + ver.intercept_s.to_string());
    c.require(ver.intercept_t == 2, "b_T = " + ver.intercept_t.to_string());
    c.require(hor.point == Point{Scalar(-5, 2), 1}, "P_hor = " + format_point(hor.point));
    c.require(ver.point == Point{Scalar(3, 2), 1}, "P_ver = " + format_point(ver.point));
    const double t = seconds_since(start);
    c.require(t < 1.0, "runtime " + std::to_string(t) + " s");
    c.tally = "P_hor " + format_point(hor.point) + ", P_ver " + format_point(ver.point) + ", " +
              std::to_string(t) + " s";
}

void reference_parallelogram(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    const PropThreeInput in{L("y=2x+4"), L("y=2x+2"), 4, {0, 4}};
    const ParallelogramWitness w = parallelogram(in);
    const Scalar minus = minus_nu_check(in);
    c.require(w.s_bar == Point{Scalar(-2, 3), Scalar(2, 3)}, "S_bar = " + format_point(w.s_bar));
    c.require(w.t_bar == Point{-2, -2}, "T_bar = " + format_point(w.t_bar));
    c.require(w.nu == 2, "nu = " + w.nu.to_string());
    c.require(minus == -2, "other diagonal gives " + minus.to_string());
    const double t = seconds_since(start);
    c.require(t < 1.0, "runtime " + std::to_string(t) + " s");
    c.tally = "nu " + w.nu.to_string() + ", other diagonal " + minus.to_string() + ", " + std::to_string(t) + " s";
}

void rho_identity(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto& classes = rnd::configuration_classes();
    std::size_t rho = 0;
    std::size_t rho_tilde = 0;
    for (std::size_t k = 0; k < 2100; ++k) {
        auto rng = rng_for(103, k);
        const PropOneInput in = rnd::prop_one(rng, classes[k % classes.size()]);
        validate(in);
        if (case_applies(in, ProjectionCase::horizontal_a)) {
            const auto [r1, r2] = rho_pair(in);
            c.require(r1 == r2, "rho pair differs at trial " + std::to_string(k));
            ++rho;
        }
        if (case_applies(in, ProjectionCase::vertical_b)) {
            const auto [r1, r2] = rho_tilde_pair(in);
            c.require(r1 == r2, "rho~ pair differs at trial " + std::to_string(k));
            ++rho_tilde;
        }
    }
    const double t = seconds_since(start);
    c.require(rho >= 1000 && rho_tilde >= 1000, "too few applicable trials");
    c.require(t < 30.0, "runtime " + std::to_string(t) + " s");
    c.tally = std::to_string(rho) + " rho, " + std::to_string(rho_tilde) + " rho~ trials, " + std::to_string(t) +
              " s";
}

void closed_forms(Criterion& c) {
    const auto& classes = rnd::configuration_classes();
    std::vector<std::size_t> hits(classes.size(), 0);
    std::size_t compared = 0;
    const std::size_t trials = 150 * classes.size();
    for (std::size_t k = 0; k < trials; ++k) {
        auto rng = rng_for(104, k);
        const PropOneInput in = rnd::prop_one(rng, classes[k % classes.size()]);
        for (ProjectionCase pc : kCases) {
            if (!case_applies(in, pc)) {
                continue;
            }
            const bool hor = pc == ProjectionCase::horizontal_a;
            const Point p = (hor ? p_hor(in) : p_ver(in)).point;
            const Point closed = hor ? p_hor_closed_form(in) : p_ver_closed_form(in);
            c.require(p == closed && p == oracle_point(in, pc),
                      "disagreement at trial " + std::to_string(k) + " (" +
                          std::string(branch_name(classes[k % classes.size()])) + ")");
            ++compared;
        }
        ++hits[k % classes.size()];
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        c.require(hits[i] >= 100, "class " + std::string(branch_name(classes[i])) + " under-sampled");
    }
    c.tally = std::to_string(trials) + " configurations over " + std::to_string(classes.size()) + " classes, " +
              std::to_string(compared) + " comparisons";
}

void axis_contract(Criterion& c) {
    constexpr std::size_t kMain = 500;
    constexpr std::size_t kEach = 50;
    for (std::size_t k = 0; k < kMain; ++k) {
        auto rng = rng_for(105, k);
        const PropTwoResult r = construct_p(rnd::prop_two_main(rng));
        c.require(r.case_tag == PropTwoCase::main, "main case not selected at trial " + std::to_string(k));
        for (const auto& [name, ok] : verify_p2(r).checks) {
            c.require(ok, name + " fails at trial " + std::to_string(k));
        }
    }
    for (PropTwoCase which : {PropTwoCase::s_coincides, PropTwoCase::t_coincides}) {
        for (std::size_t k = 0; k < kEach; ++k) {
            auto rng = rng_for(which == PropTwoCase::s_coincides ? 1051 : 1052, k);
            const PropTwoResult r = construct_p(rnd::prop_two_coinciding(rng, which));
            c.require(r.case_tag == which, std::string(case_name(which)) + " not selected");
            const Point& shared = which == PropTwoCase::s_coincides ? r.s : r.t;
            c.require(r.p == shared && r.p == (which == PropTwoCase::s_coincides ? r.s_axis : r.t_axis),
                      std::string(case_name(which)) + ": P is not the shared point");
            for (const auto& [name, ok] : verify_p2(r).checks) {
                c.require(ok, name + " fails in " + std::string(case_name(which)));
            }
        }
    }
    c.tally = std::to_string(kMain) + " main, " + std::to_string(kEach) + " + " + std::to_string(kEach) +
              " coinciding";
}

// b_P * eps / b_G, or p * eps / r for vertical lines x = r, x = p.
Scalar expected_nu(const Line& g, const Line& p, const Scalar& eps) {
    if (g.is_vertical()) {
        return *p.x_intercept() * eps / *g.x_intercept();
    }
    return *p.y_intercept() * eps / *g.y_intercept();
}

void nu_invariance(Criterion& c) {
    std::size_t vertical = 0;
    for (std::size_t k = 0; k < 100; ++k) {
        auto rng = rng_for(106, k);
        const bool vert = k % 4 == 0;
        vertical += vert ? 1 : 0;
        const rnd::ParallelScene scene = rnd::parallel_scene(rng, vert);
        const Scalar expected = expected_nu(scene.g, scene.p, scene.epsilon);
        for (const Point& sample : rnd::nu_samples(rng, scene, 10)) {
            c.require(nu({scene.g, scene.p, scene.epsilon, sample}) == expected,
                      "nu not constant for triple " + std::to_string(k));
        }
    }
    std::size_t slopes_total = 0;
    for (std::size_t k = 0; k < 20; ++k) {
        auto rng = rng_for(1061, k);
        const Scalar b_g = rnd::nonzero_scalar(rng);
        const Scalar b_p = rnd::scalar(rng);
        const Scalar eps = rnd::nonzero_scalar(rng).abs();
        std::size_t slopes = 0;
        for (int attempt = 0; attempt < 500 && slopes < 10; ++attempt) {
            const Scalar m = rnd::scalar(rng);
            if ((b_g + m * eps).is_zero() || (b_g - m * eps).is_zero()) {
                continue;
            }
            const rnd::ParallelScene scene = rnd::parallel_scene_with_slope(b_g, b_p, eps, m);
            const Point sample = rnd::nu_samples(rng, scene, 1).front();
            c.require(nu({scene.g, scene.p, eps, sample}) == b_p * eps / b_g,
                      "nu depends on the slope for triple " + std::to_string(k));
            ++slopes;
        }
        c.require(slopes == 10, "fewer than ten slopes for triple " + std::to_string(k));
        slopes_total += slopes;
    }
    c.tally = "100 triples x 10 samples (" + std::to_string(vertical) + " vertical), 20 triples, " +
              std::to_string(slopes_total) + " slopes";
}

void nu_general_properties(Criterion& c) {
    for (std::size_t k = 0; k < 100; ++k) {
        auto rng = rng_for(107, k);
        const rnd::GeneralParallelScene scene = rnd::general_parallel_scene(rng);
        const auto samples = rnd::nu_general_samples(rng, scene, 10);
        const Point first =
            nu_general({scene.g, scene.p, scene.axis, scene.origin, scene.offset, samples.front()}).nu_point;
        for (const Point& sample : samples) {
            c.require(nu_general({scene.g, scene.p, scene.axis, scene.origin, scene.offset, sample}).nu_point == first,
                      "nu_point not constant for scene " + std::to_string(k));
        }

        // The offset is measured in units of the canonical axis direction, so
        // it rescales with the image of that direction.
        const Frame f = rnd::frame(rng);
        const Line axis = f.apply(scene.axis);
        const Direction image = f.apply(scene.axis.direction());
        const Direction d = axis.direction();
        const Scalar k_scale = d.dx().is_zero() ? image.dy() / d.dy() : image.dx() / d.dx();
        const PropFourInput moved{f.apply(scene.g),      f.apply(scene.p),          axis,
                                  f.apply(scene.origin), scene.offset * k_scale, f.apply(samples.front())};
        c.require(nu_general(moved).nu_point == f.apply(first), "frame image mismatch for scene " + std::to_string(k));
    }
    c.tally = "100 scenes x 10 samples, 100 frames";
}

void degenerate_cases(Criterion& c) {
    std::size_t checked = 0;
    for (std::size_t k = 0; k < 50; ++k) {
        auto rng = rng_for(108, k);
        rnd::ParallelScene scene = rnd::parallel_scene(rng, k % 4 == 0);
        scene.epsilon = 0;
        const Point sample = rnd::nu_samples(rng, scene, 1).front();
        c.require(nu({scene.g, scene.p, 0, sample}) == 0, "eps = 0 with nonzero nu");
        ++checked;

        rnd::ParallelScene flat = rnd::parallel_scene(rng, k % 4 == 0);
        flat.p = parallel_through(flat.g, {0, 0});
        const ParallelogramWitness w = parallelogram({flat.g, flat.p, flat.epsilon, rnd::nu_samples(rng, flat, 1).front()});
        for (const Point& corner : {w.s_bar, w.t_bar, w.neg_s_bar, w.neg_t_bar}) {
            c.require(corner == Point{0, 0}, "p through the origin but a corner is elsewhere");
        }
        c.require(w.nu == 0, "p through the origin with nonzero nu");
        ++checked;
    }

    // Trivial projection cases: l through an axis intercept of g_s or g_t.
    const Line g_s = L("y=2x+4");
    const Line g_t = L("y=2x+2");
    c.require(p_hor({g_s, g_t, L("y=-x-2")}).point == Point{-2, 0}, "l through a_S");
    c.require(p_hor({g_s, g_t, L("y=x+1")}).point == Point{-1, 0}, "l through a_T");
    c.require(p_ver({g_s, g_t, L("y=-x+4")}).point == Point{0, 4}, "l through b_S");
    c.require(p_ver({g_s, g_t, L("y=-x+2")}).point == Point{0, 2}, "l through b_T");
    checked += 4;

    // Preconditions raise their own codes.
    c.require(raises(ErrorCode::origin_on_l, [&] { p_hor({g_s, g_t, L("y=-x")}); }), "origin on l (p_hor)");
    c.require(raises(ErrorCode::origin_on_l, [&] { p_ver({g_s, g_t, L("y=3x")}); }), "origin on l (p_ver)");
    c.require(raises(ErrorCode::parallel, [&] { p_hor({g_s, g_t, L("y=2x+1")}); }), "l parallel to g_s");
    const Point o{0, 0};
    c.require(raises(ErrorCode::precondition, [&] { construct_p({g_s, g_t, L("y=x"), L("y=0"), o}); }),
              "origin on l (construct_p)");
    c.require(raises(ErrorCode::precondition, [&] { construct_p({g_s, g_t, L("y=2x+1"), L("y=0"), o}); }),
              "l parallel to g_s (construct_p)");
    c.require(raises(ErrorCode::precondition, [&] { construct_p({g_s, g_t, L("y=1"), L("y=2x"), o}); }),
              "axis parallel to g_s");
    // eps = 2 puts T at (2, 4); the ray y = 2x never meets p.
    c.require(raises(ErrorCode::parallel_projection, [&] { parallelogram({g_s, g_t, 2, {0, 4}}); }),
              "projection ray parallel to p");
    checked += 7;
    c.tally = std::to_string(checked) + " checks";
}

bool has_marker(const std::string& svg, const std::string& label, const std::string& x, const std::string& y) {
    return svg.find("data-label=\"" + label + "\" data-x=\"" + x + "\" data-y=\"" + y + "\"") != std::string::npos;
}

int cli(const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o, e;
    const int status = run_cli(args, o, e);
    out = o.str();
    return status;
}

void cli_and_figures(Criterion& c) {
    std::string first, second;
    c.require(cli({"figure", "PIC1"}, first) == 0 && cli({"figure", "PIC1"}, second) == 0, "figure PIC1 failed");
    c.require(!first.empty() && first == second, "PIC1 output not byte-identical");
    for (const auto& [label, x, y] : {std::tuple{"S", "-3/2", "1"}, {"T", "-1/2", "1"}, {"a_S", "-2", "0"},
                                      {"a_T", "-1", "0"}, {"b_S", "0", "4"}, {"b_T", "0", "2"},
                                      {"P_hor", "-5/2", "1"}, {"P_ver", "3/2", "1"}}) {
        c.require(has_marker(first, label, x, y), std::string("PIC1 marker ") + label);
    }
    c.require(cli({"figure", "PIC3"}, first) == 0 && cli({"figure", "PIC3"}, second) == 0, "figure PIC3 failed");
    c.require(!first.empty() && first == second, "PIC3 output not byte-identical");
    for (const auto& [label, x, y] : {std::tuple{"S_bar", "-2/3", "2/3"}, {"T_bar", "-2", "-2"},
                                      {"neg_S_bar", "2/3", "-2/3"}, {"neg_T_bar", "2", "2"}, {"nu", "2", "0"}}) {
        c.require(has_marker(first, label, x, y), std::string("PIC3 marker ") + label);
    }
    std::string summary;
    const int status = cli({"check", "--seed", "1", "--trials", "1000"}, summary);
    c.require(status == 0, "check exited " + std::to_string(status));
    c.tally = "check --seed 1 --trials 1000 exit " + std::to_string(status);
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria{
        {"AC1 reference projection values", reference_projection},
        {"AC2 reference parallelogram values", reference_parallelogram},
        {"AC3 rho pairs equal", rho_identity},
        {"AC4 closed forms vs oracle", closed_forms},
        {"AC5 axis construction contract", axis_contract},
        {"AC6 nu invariances", nu_invariance},
        {"AC7 general nu invariance and equivariance", nu_general_properties},
        {"AC8 degenerate cases and error codes", degenerate_cases},
        {"AC9 cli and figures", cli_and_figures},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Criterion c;
        try {
            run(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("threw: ") + e.what());
        }
        const bool ok = c.first_failure.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << (ok ? c.tally : c.first_failure) << "\n";
    }
    std::cout << (failed == 0 ? "all criteria passed\n" : std::to_string(failed) + " criteria failed\n");
    return failed == 0 ? 0 : 1;
}
