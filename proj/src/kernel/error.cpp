#include "projgeom/error.hpp"

namespace projgeom {

std::string_view code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::coincident: return "E_COINCIDENT";
        case ErrorCode::parallel: return "E_PARALLEL";
        case ErrorCode::origin_off_axis: return "E_ORIGIN_OFF_AXIS";
        case ErrorCode::degenerate_transversal: return "E_DEGENERATE_TRANSVERSAL";
        case ErrorCode::case_unavailable: return "E_CASE_UNAVAILABLE";
        case ErrorCode::origin_on_l: return "E_ORIGIN_ON_L";
        case ErrorCode::inconsistent: return "E_INCONSISTENT";
        case ErrorCode::singular: return "E_SINGULAR";
        case ErrorCode::precondition: return "E_PRECONDITION";
        case ErrorCode::parallel_projection: return "E_PARALLEL_PROJECTION";
        case ErrorCode::origin_sample: return "E_ORIGIN_SAMPLE";
        case ErrorCode::parse: return "E_PARSE";
    }
    return "E_UNKNOWN";
}

int exit_status(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::parse: return 2;
        case ErrorCode::inconsistent: return 4;
        default: return 3;
    }
}

}  // namespace projgeom
