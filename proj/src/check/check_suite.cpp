#include "projgeom/check_suite.hpp"

#include <exception>
#include <ostream>

#include "projgeom/error.hpp"
#include "projgeom/frame.hpp"
#include "projgeom/parallelogram.hpp"
#include "projgeom/parallelogram_general.hpp"
#include "projgeom/projection_general.hpp"
#include "projgeom/projection_one.hpp"
#include "projgeom/random_scenes.hpp"
#include "projgeom/text.hpp"

namespace projgeom::check {

namespace {

constexpr std::size_t kKeptCounterexamples = 3;

class Command {
public:
    explicit Command(std::string subcommand) : text_("projgeom " + std::move(subcommand)) {}

    Command& line(const std::string& name, const Line& l) { return flag("--line-" + name, format_line(l)); }
    Command& point(const std::string& name, const Point& p) { return flag("--" + name, format_point(p)); }
    Command& scalar(const std::string& name, const Scalar& s) { return flag("--" + name, s.to_string()); }

    const std::string& str() const { return text_; }

private:
    Command& flag(const std::string& name, const std::string& value) {
        text_ += " " + name + " " + shell_quote(value);
        return *this;
    }

    std::string text_;
};

// Collects the first failed requirement of a trial.
struct Trial {
    std::string scene = "(scene generation failed)";
    TrialOutcome outcome;

    void require(bool ok, std::string_view what) {
        if (!ok && outcome.passed) {
            outcome = {false, scene, std::string(what)};
        }
    }
};

template <typename Body>
TrialOutcome guarded(Body&& body) {
    Trial t;
    try {
        body(t);
    } catch (const std::exception& e) {
        t.require(false, std::string("unexpected error: ") + e.what());
    }
    return t.outcome;
}

Command prop_one_command(const PropOneInput& in, ProjectionCase c) {
    Command cmd(c == ProjectionCase::horizontal_a ? "phor" : "pver");
    cmd.line("g_s", in.g_s).line("g_t", in.g_t).line("l", in.l);
    return cmd;
}

Command prop_two_command(const PropTwoInput& in) {
    Command cmd("construct-p");
    cmd.line("g_s", in.g_s).line("g_t", in.g_t).line("l", in.l).line("axis", in.axis).point("origin", in.origin);
    return cmd;
}

Command nu_command(const char* sub, const Line& g, const Line& p, const Scalar& eps, const Point& sample) {
    Command cmd(sub);
    cmd.line("g", g).line("p", p).scalar("epsilon", eps).point("sample", sample);
    return cmd;
}

Command nu_general_command(const PropFourInput& in) {
    Command cmd("nu-general");
    cmd.line("g", in.g).line("p", in.p).line("axis", in.axis).point("origin", in.origin);
    cmd.scalar("offset", in.offset).point("sample", in.sample);
    return cmd;
}

constexpr ProjectionCase kCases[] = {ProjectionCase::horizontal_a, ProjectionCase::vertical_b};

TrialOutcome rho_pairs_equal(std::uint64_t seed, std::size_t index) {
    return guarded([&](Trial& t) {
        random::Rng rng(seed);
        const auto& classes = random::configuration_classes();
        const PropOneInput in = random::prop_one(rng, classes[index % classes.size()]);
        for (ProjectionCase c : kCases) {
            if (!case_applies(in, c)) {
                continue;
            }
            t.scene = prop_one_command(in, c).str();
            const auto [r1, r2] = c == ProjectionCase::horizontal_a ? rho_pair(in) : rho_tilde_pair(in);
            t.require(r1 == r2, "the two rho quotients differ");
        }
    });
}

TrialOutcome closed_forms_match_oracle(std::uint64_t seed, std::size_t index) {
    return guarded([&](Trial& t) {
        random::Rng rng(seed);
        const auto& classes = random::configuration_classes();
        const PropOneInput in = random::prop_one(rng, classes[index % classes.size()]);
        for (ProjectionCase c : kCases) {
            if (!case_applies(in, c)) {
                continue;
            }
            t.scene = prop_one_command(in, c).str();
            const bool hor = c == ProjectionCase::horizontal_a;
            const Point p = (hor ? p_hor(in) : p_ver(in)).point;
            t.require(p == (hor ? p_hor_closed_form(in) : p_ver_closed_form(in)),
                      "closed form disagrees with the construction");
            t.require(p == oracle_point(in, c), "linear-system oracle disagrees with the construction");
        }
    });
}

TrialOutcome projection_uniqueness(std::uint64_t seed, std::size_t index) {
    return guarded([&](Trial& t) {
        random::Rng rng(seed);
        const auto& classes = random::configuration_classes();
        const PropOneInput in = random::prop_one(rng, classes[index % classes.size()]);
        for (ProjectionCase c : kCases) {
            if (!case_applies(in, c)) {
                continue;
            }
            t.scene = prop_one_command(in, c).str();
            const Point p = oracle_point(in, c);
            t.require(satisfies_membership(in, c, p), "constructed point fails the membership conditions");
            const Point moved = p + random::nonzero_scalar(rng) * in.l.direction();
            t.require(!satisfies_membership(in, c, moved), "a second point on l satisfies the conditions");
        }
    });
}

TrialOutcome axis_construction_contract(std::uint64_t seed, std::size_t) {
    return guarded([&](Trial& t) {
        random::Rng rng(seed);
        const PropTwoInput in = random::prop_two_main(rng);
        t.scene = prop_two_command(in).str();
        const PropTwoResult r = construct_p(in);
        t.require(r.case_tag == PropTwoCase::main, "expected the main case");
        for (const auto& [name, ok] : verify_p2(r).checks) {
            t.require(ok, name);
        }
        // A second transversal must give the same point.
        const Direction d = in.axis.direction();
        const Scalar u = random::scalar(rng);
        const Scalar v = random::nonzero_scalar(rng);
        const Direction transversal(u * d.dx() - v * d.dy(), u * d.dy() + v * d.dx());
        t.require(construct_p(in, transversal).p == r.p, "point depends on the reduction frame");
    });
}

TrialOutcome axis_construction_coinciding(std::uint64_t seed, std::size_t index) {
    return guarded([&](Trial& t) {
        random::Rng rng(seed);
        const PropTwoCase which = index % 2 == 0 ? PropTwoCase::s_coincides : PropTwoCase::t_coincides;
        const PropTwoInput in = random::prop_two_coinciding(rng, which);
        t.scene = prop_two_command(in).str();
        const PropTwoResult r = construct_p(in);
        t.require(r.case_tag == which, "wrong case selected");
        for (const auto& [name, ok] : verify_p2(r).checks) {
            t.require(ok, name);
        }
    });
}

TrialOutcome nu_sample_invariance(std::uint64_t seed, std::size_t index) {
    return guarded([&](Trial& t) {
        random::Rng rng(seed);
        const random::ParallelScene scene = random::parallel_scene(rng, index % 4 == 0);
        const Scalar expected = nu_closed_form(scene.g, scene.p, scene.epsilon);
        for (const Point& sample : random::nu_samples(rng, scene, 10)) {
            t.scene = nu_command("nu", scene.g, scene.p, scene.epsilon, sample).str();
            const PropThreeInput in{scene.g, scene.p, scene.epsilon, sample};
            const ParallelogramWitness w = parallelogram(in);
            t.require(w.nu == expected, "nu differs from the closed form");
            t.require(minus_nu_check(in) == -w.nu, "other diagonal does not meet the axis at -nu");
            t.require(w.s_bar + w.neg_s_bar == Point{0, 0} && w.t_bar + w.neg_t_bar == Point{0, 0},
                      "parallelogram is not centred at the origin");
            if (!scene.g.is_vertical()) {
                t.require(s_bar_t_bar_closed_form(in) == std::pair{w.s_bar, w.t_bar},
                          "projected corners differ from their closed form");
            }
        }
    });
}

TrialOutcome nu_slope_invariance(std::uint64_t seed, std::size_t) {
    return guarded([&](Trial& t) {
        random::Rng rng(seed);
        const Scalar b_g = random::nonzero_scalar(rng);
        const Scalar b_p = random::scalar(rng);
        const Scalar eps = random::scalar(rng).abs();
        int slopes = 0;
        for (int attempt = 0; attempt < 200 && slopes < 10; ++attempt) {
            const Scalar m = random::scalar(rng);
            if ((b_g + m * eps).is_zero() || (b_g - m * eps).is_zero()) {
                continue;
            }
            const random::ParallelScene scene = random::parallel_scene_with_slope(b_g, b_p, eps, m);
            const Point sample = random::nu_samples(rng, scene, 1).front();
            t.scene = nu_command("nu", scene.g, scene.p, eps, sample).str();
            t.require(nu({scene.g, scene.p, eps, sample}) == b_p * eps / b_g, "nu depends on the slope");
            ++slopes;
        }
        t.require(slopes == 10, "could not draw ten admissible slopes");
    });
}

TrialOutcome mu_sample_invariance(std::uint64_t seed, std::size_t) {
    return guarded([&](Trial& t) {
        random::Rng rng(seed);
        const random::ParallelScene scene = random::mu_scene(rng);
        const auto samples = random::mu_samples(rng, scene, 10);
        t.scene = nu_command("mu", scene.g, scene.p, scene.epsilon, samples.front()).str();
        const Scalar first = mu({scene.g, scene.p, scene.epsilon, samples.front()});
        for (const Point& sample : samples) {
            t.scene = nu_command("mu", scene.g, scene.p, scene.epsilon, sample).str();
            t.require(mu({scene.g, scene.p, scene.epsilon, sample}) == first, "mu depends on the sample");
        }
    });
}

TrialOutcome nu_general_invariance_and_equivariance(std::uint64_t seed, std::size_t) {
    return guarded([&](Trial& t) {
        random::Rng rng(seed);
        const random::GeneralParallelScene scene = random::general_parallel_scene(rng);
        const auto samples = random::nu_general_samples(rng, scene, 10);
        const PropFourInput in{scene.g, scene.p, scene.axis, scene.origin, scene.offset, samples.front()};
        t.scene = nu_general_command(in).str();
        t.require(nu_general_invariance(scene.g, scene.p, scene.axis, scene.origin, scene.offset, samples),
                  "nu_point depends on the sample");
        const Point nu_point = nu_general(in).nu_point;

        // Transport the scene; the offset follows the image of the axis direction.
        const Frame f = random::frame(rng);
        const Line axis = f.apply(scene.axis);
        const Direction image = f.apply(scene.axis.direction());
        const Direction d = axis.direction();
        const Scalar k = d.dx().is_zero() ? image.dy() / d.dy() : image.dx() / d.dx();
        const PropFourInput moved{f.apply(scene.g), f.apply(scene.p), axis,
                                  f.apply(scene.origin), scene.offset * k, f.apply(in.sample)};
        t.scene = nu_general_command(moved).str();
        t.require(nu_general(moved).nu_point == f.apply(nu_point), "nu_point is not carried along by the map");
    });
}

TrialOutcome trivial_projection_cases(std::uint64_t seed, std::size_t index) {
    return guarded([&](Trial& t) {
        random::Rng rng(seed);
        Line g_s = random::line(rng, random::LineKind::general);
        Line g_t = random::parallel_line(rng, g_s, false);
        // A line through the origin has the origin as its intercept, and
        // then every candidate l would contain the origin.
        while (contains(g_s, {0, 0}) || contains(g_t, {0, 0})) {
            g_s = random::line(rng, random::LineKind::general);
            g_t = random::parallel_line(rng, g_s, false);
        }
        const bool hor = index % 2 == 0;
        const Line& g = index % 4 < 2 ? g_s : g_t;
        const Point anchor = hor ? Point{*g.x_intercept(), 0} : Point{0, *g.y_intercept()};
        for (int attempt = 0; attempt < 100; ++attempt) {
            const Point other = random::point(rng);
            if (other == anchor) {
                continue;
            }
            const PropOneInput in{g_s, g_t, line_from_points(anchor, other)};
            try {
                validate(in);
            } catch (const GeometryError&) {
                continue;
            }
            const ProjectionCase c = hor ? ProjectionCase::horizontal_a : ProjectionCase::vertical_b;
            t.scene = prop_one_command(in, c).str();
            t.require((hor ? p_hor(in) : p_ver(in)).point == anchor, "point is not the shared intercept");
            return;
        }
        t.require(false, "no valid line through the intercept");
    });
}

TrialOutcome degenerate_parallelograms(std::uint64_t seed, std::size_t index) {
    return guarded([&](Trial& t) {
        random::Rng rng(seed);
        random::ParallelScene scene = random::parallel_scene(rng, index % 4 == 0);
        if (index % 2 == 0) {
            scene.epsilon = 0;
        } else {
            scene.p = parallel_through(scene.g, {0, 0});
        }
        const Point sample = random::nu_samples(rng, scene, 1).front();
        t.scene = nu_command("nu", scene.g, scene.p, scene.epsilon, sample).str();
        const ParallelogramWitness w = parallelogram({scene.g, scene.p, scene.epsilon, sample});
        t.require(w.nu == 0, "degenerate scene with nonzero nu");
        if (index % 2 == 0) {
            t.require(w.s_bar == w.t_bar, "epsilon zero but the projected corners differ");
        } else {
            for (const Point& corner : {w.s_bar, w.t_bar, w.neg_s_bar, w.neg_t_bar}) {
                t.require(corner == Point{0, 0}, "p through the origin but a corner is elsewhere");
            }
        }
    });
}

}  // namespace

bool operator==(const Counterexample& a, const Counterexample& b) {
    return a.trial == b.trial && a.command == b.command && a.detail == b.detail;
}

bool Summary::all_passed() const {
    for (const PropertySummary& p : properties) {
        if (p.failed != 0) {
            return false;
        }
    }
    return true;
}

const std::vector<Property>& standard_properties() {
    static const std::vector<Property> properties{
        {"rho_pairs_equal", rho_pairs_equal},
        {"closed_forms_match_oracle", closed_forms_match_oracle},
        {"projection_uniqueness", projection_uniqueness},
        {"trivial_projection_cases", trivial_projection_cases},
        {"axis_construction_contract", axis_construction_contract},
        {"axis_construction_coinciding", axis_construction_coinciding},
        {"nu_sample_invariance", nu_sample_invariance},
        {"nu_slope_invariance", nu_slope_invariance},
        {"degenerate_parallelograms", degenerate_parallelograms},
        {"mu_sample_invariance", mu_sample_invariance},
        {"nu_general_invariance_and_equivariance", nu_general_invariance_and_equivariance},
    };
    return properties;
}

namespace {

TrialOutcome run_one(const Property& property, std::uint64_t seed, std::size_t property_index,
                     std::size_t trial) {
    try {
        return property.trial(random::derive_seed(seed, property_index, trial), trial);
    } catch (const std::exception& e) {
        return {false, "(no scene)", std::string("trial threw: ") + e.what()};
    }
}

Summary aggregate(const std::vector<Property>& properties, std::uint64_t seed, std::size_t trials,
                  const std::vector<TrialOutcome>& outcomes) {
    Summary summary{seed, trials, {}};
    for (std::size_t i = 0; i < properties.size(); ++i) {
        PropertySummary ps{properties[i].name, 0, 0, {}};
        for (std::size_t k = 0; k < trials; ++k) {
            const TrialOutcome& o = outcomes[i * trials + k];
            if (o.passed) {
                ++ps.passed;
                continue;
            }
            ++ps.failed;
            if (ps.counterexamples.size() < kKeptCounterexamples) {
                ps.counterexamples.push_back({k, o.counterexample, o.detail});
            }
        }
        summary.properties.push_back(std::move(ps));
    }
    return summary;
}

}  // namespace

Summary run_serial(const std::vector<Property>& properties, std::uint64_t seed, std::size_t trials) {
    std::vector<TrialOutcome> outcomes(properties.size() * trials);
    for (std::size_t i = 0; i < properties.size(); ++i) {
        for (std::size_t k = 0; k < trials; ++k) {
            outcomes[i * trials + k] = run_one(properties[i], seed, i, k);
        }
    }
    return aggregate(properties, seed, trials, outcomes);
}

Summary run_parallel(const std::vector<Property>& properties, std::uint64_t seed, std::size_t trials) {
    const std::size_t total = properties.size() * trials;
    std::vector<TrialOutcome> outcomes(total);
    // Each slot is written by exactly one iteration; aggregation afterwards
    // is serial, so the summary does not depend on scheduling.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t n = 0; n < total; ++n) {
        outcomes[n] = run_one(properties[n / trials], seed, n / trials, n % trials);
    }
    return aggregate(properties, seed, trials, outcomes);
}

void print_summary(const Summary& summary, std::ostream& out) {
    out << "check: seed " << summary.seed << ", " << summary.trials << " trials per property\n";
    std::size_t failing = 0;
    for (const PropertySummary& p : summary.properties) {
        out << (p.failed == 0 ? "PASS " : "FAIL ") << p.name << " " << p.passed << "/" << (p.passed + p.failed)
            << "\n";
        for (const Counterexample& c : p.counterexamples) {
            out << "  trial " << c.trial << ": " << c.detail << "\n    " << c.command << "\n";
        }
        failing += p.failed == 0 ? 0 : 1;
    }
    if (failing == 0) {
        out << "all " << summary.properties.size() << " properties passed\n";
    } else {
        out << failing << " of " << summary.properties.size() << " properties failed\n";
    }
}

std::string shell_quote(const std::string& value) {
    std::string out = "'";
    for (char ch : value) {
        if (ch == '\'') {
            out += "'\\''";
        } else {
            out += ch;
        }
    }
    return out + "'";
}

}  // namespace projgeom::check
