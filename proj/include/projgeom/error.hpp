#ifndef PROJGEOM_ERROR_HPP
#define PROJGEOM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace projgeom {

enum class ErrorCode {
    coincident,
    parallel,
    origin_off_axis,
    degenerate_transversal,
    case_unavailable,
    origin_on_l,
    inconsistent,
    singular,
    precondition,
    parallel_projection,
    origin_sample,
    parse,
};

/// Stable identifier such as "E_PARALLEL", used in JSON documents and messages.
std::string_view code_name(ErrorCode code) noexcept;

/// Process exit status for a failure with this code: 2 parse, 4 internal
/// inconsistency, 3 for every precondition-type failure.
int exit_status(ErrorCode code) noexcept;

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw GeometryError(code, message);
}

}  // namespace projgeom

#endif  // PROJGEOM_ERROR_HPP
