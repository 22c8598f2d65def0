#ifndef PROJGEOM_DOCUMENT_HPP
#define PROJGEOM_DOCUMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "projgeom/kernel.hpp"

namespace projgeom {

enum class Construction { phor, pver, p2, nu, mu, nu_general };

/// "PHOR", "PVER", "P2", "NU", "MU", "NU_GENERAL".
std::string_view construction_name(Construction c) noexcept;
/// Accepts the names above in any case, and the subcommand spellings
/// ("construct-p", "nu-general").
std::optional<Construction> parse_construction(std::string_view text);

/// Named inputs of any construction. Lines are keyed by g_s, g_t, l, axis,
/// g and p; which ones are needed depends on the construction.
struct Scene {
    std::map<std::string, Line> lines;
    std::optional<Point> origin;
    std::optional<Scalar> epsilon;
    std::optional<Scalar> offset;
    std::optional<Point> sample;

    bool operator==(const Scene&) const = default;
};

/// A flat JSON object with the scene fields as strings, for example
/// {"g": "y=2x+4", "p": "y=2x+2", "epsilon": "4", "sample": "(0, 4)"}.
/// A whole result document is accepted too; its "inputs" are used.
/// Throws E_PARSE.
Scene scene_from_json(std::string_view text);
std::string scene_to_json(const Scene& scene);

struct DocumentError {
    std::string code;
    std::string message;

    bool operator==(const DocumentError&) const = default;
};

/// Everything a construction produced, as exact strings.
struct ResultDocument {
    std::string construction;
    std::map<std::string, std::string> inputs;
    std::map<std::string, std::string> outputs;
    std::optional<std::string> case_tag;
    std::map<std::string, std::string> witnesses;
    /// Absent on success.
    std::optional<DocumentError> error;

    bool operator==(const ResultDocument&) const = default;
};

/// Runs one construction. Geometry errors do not escape; they are recorded
/// in the document's error field.
ResultDocument run_construction(const Scene& scene, Construction which);

/// 0 on success, otherwise the exit status of the recorded error code.
int exit_status(const ResultDocument& doc);

/// Pretty-printed JSON with sorted keys; `error` is omitted on success.
std::string to_json(const ResultDocument& doc);
/// Inverse of to_json. Throws E_PARSE.
ResultDocument document_from_json(std::string_view text);

/// Plain "key = value" lines for terminals.
std::string to_text(const ResultDocument& doc);

}  // namespace projgeom

#endif  // PROJGEOM_DOCUMENT_HPP
