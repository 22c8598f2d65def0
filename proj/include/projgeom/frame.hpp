#ifndef PROJGEOM_FRAME_HPP
#define PROJGEOM_FRAME_HPP

#include "projgeom/kernel.hpp"

namespace projgeom {

struct Matrix2 {
    Scalar m00, m01;
    Scalar m10, m11;

    Scalar determinant() const { return m00 * m11 - m01 * m10; }

    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Invertible affine map x -> linear * x + translation with rational
/// coefficients.
class Frame {
public:
    /// Throws E_SINGULAR when the linear part is not invertible.
    Frame(Matrix2 linear, Point translation);

    static Frame identity();

    const Matrix2& linear() const noexcept { return linear_; }
    const Point& translation() const noexcept { return translation_; }

    Point apply(const Point& p) const;
    /// Linear part only.
    Direction apply(const Direction& d) const;
    Line apply(const Line& l) const;

    Frame inverse() const;
    /// (this ∘ inner)(x) = this(inner(x)).
    Frame compose(const Frame& inner) const;

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    Matrix2 linear_;
    Point translation_;
};

/// Affine map sending origin to (0,0), axis onto the x-axis (its canonical
/// direction to (1,0)) and the transversal direction to (0,1).
///
/// Errors: E_ORIGIN_OFF_AXIS if origin is not on axis,
/// E_DEGENERATE_TRANSVERSAL if transversal is parallel to axis.
Frame frame_to_standard(const Point& origin, const Line& axis, const Direction& transversal);

/// The reflection (x|y) -> (y|x).
Frame swap_axes();

}  // namespace projgeom

#endif  // PROJGEOM_FRAME_HPP
