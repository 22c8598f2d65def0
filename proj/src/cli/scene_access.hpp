#ifndef PROJGEOM_CLI_SCENE_ACCESS_HPP
#define PROJGEOM_CLI_SCENE_ACCESS_HPP

#include <optional>
#include <string>

#include "projgeom/document.hpp"
#include "projgeom/error.hpp"

namespace projgeom {

// Scene lookups for the dispatchers; a missing entry is a command-line
// mistake, so it is reported as E_PARSE.
inline const Line& need_line(const Scene& scene, const char* name) {
    const auto it = scene.lines.find(name);
    if (it == scene.lines.end()) {
        fail(ErrorCode::parse, std::string("missing line '") + name + "' (--line-" + name + ")");
    }
    return it->second;
}

template <typename T>
const T& need(const std::optional<T>& value, const char* name) {
    if (!value) {
        fail(ErrorCode::parse, std::string("missing input '") + name + "' (--" + name + ")");
    }
    return *value;
}

}  // namespace projgeom

#endif  // PROJGEOM_CLI_SCENE_ACCESS_HPP
