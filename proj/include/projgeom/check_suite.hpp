#ifndef PROJGEOM_CHECK_SUITE_HPP
#define PROJGEOM_CHECK_SUITE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace projgeom::check {

struct TrialOutcome {
    bool passed = true;
    /// Replayable CLI command for the failing scene.
    std::string counterexample;
    std::string detail;
};

/// A named randomized property. `trial` receives a seed derived from the
/// run seed, the property index and the trial index, plus the trial index
/// itself for stratification. It must be pure.
struct Property {
    std::string name;
    std::function<TrialOutcome(std::uint64_t seed, std::size_t index)> trial;
};

struct Counterexample {
    std::size_t trial;
    std::string command;
    std::string detail;
};

struct PropertySummary {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// The first few failures, in trial order.
    std::vector<Counterexample> counterexamples;

    bool operator==(const PropertySummary&) const = default;
};

bool operator==(const Counterexample& a, const Counterexample& b);

struct Summary {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<PropertySummary> properties;

    bool all_passed() const;
    bool operator==(const Summary&) const = default;
};

/// Every property of the library, covering all four constructions.
const std::vector<Property>& standard_properties();

/// Runs `trials` trials of every property one after another. An exception
/// escaping a trial counts as a failure.
Summary run_serial(const std::vector<Property>& properties, std::uint64_t seed, std::size_t trials);

/// Same trials spread over OpenMP threads; the result is identical to
/// run_serial for the same arguments.
Summary run_parallel(const std::vector<Property>& properties, std::uint64_t seed, std::size_t trials);

/// One line per property, followed by its counterexamples.
void print_summary(const Summary& summary, std::ostream& out);

/// Quotes a value for a POSIX shell.
std::string shell_quote(const std::string& value);

}  // namespace projgeom::check

#endif  // PROJGEOM_CHECK_SUITE_HPP
