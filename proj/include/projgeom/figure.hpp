#ifndef PROJGEOM_FIGURE_HPP
#define PROJGEOM_FIGURE_HPP

#include <optional>
#include <string>
#include <string_view>

#include "projgeom/document.hpp"

namespace projgeom {

/// World window shown by a figure and the pixel size of the picture.
struct Viewport {
    Scalar xmin{-10};
    Scalar xmax{10};
    Scalar ymin{-10};
    Scalar ymax{10};
    int width = 600;
    int height = 600;
};

enum class BuiltinFigure { pic1, pic2, pic3, pic4 };

/// "PIC1" ... "PIC4", case-insensitive.
std::optional<BuiltinFigure> parse_builtin_figure(std::string_view text);

struct FigureSpec {
    Construction construction;
    Scene scene;
    Viewport viewport;
};

/// The four reference scenes with a window that shows all labelled points.
FigureSpec builtin_figure(BuiltinFigure which);

/// A standalone SVG 1.1 document showing the scene lines, helper lines and a
/// marker for every constructed point. Each marker carries its exact
/// coordinates in data-x / data-y. Equal inputs give byte-equal output.
/// The phor and pver constructions both draw P_hor and P_ver where defined.
/// Throws GeometryError when the scene is not valid for the construction,
/// and E_PRECONDITION for an empty window.
std::string render_figure(Construction construction, const Scene& scene, const Viewport& viewport);

/// Decimal with 12 significant digits, as used for SVG coordinates.
std::string format_decimal(const Scalar& value);

}  // namespace projgeom

#endif  // PROJGEOM_FIGURE_HPP
