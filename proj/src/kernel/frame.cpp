#include "projgeom/frame.hpp"

#include "projgeom/error.hpp"

namespace projgeom {

namespace {

Matrix2 invert(const Matrix2& m) {
    const Scalar det = m.determinant();
    return {m.m11 / det, -m.m01 / det, -m.m10 / det, m.m00 / det};
}

Matrix2 multiply(const Matrix2& l, const Matrix2& r) {
    return {l.m00 * r.m00 + l.m01 * r.m10, l.m00 * r.m01 + l.m01 * r.m11,
            l.m10 * r.m00 + l.m11 * r.m10, l.m10 * r.m01 + l.m11 * r.m11};
}

Point times(const Matrix2& m, const Point& p) {
    return {m.m00 * p.x + m.m01 * p.y, m.m10 * p.x + m.m11 * p.y};
}

}  // namespace

Frame::Frame(Matrix2 linear, Point translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
    if (linear_.determinant().is_zero()) {
        fail(ErrorCode::singular, "frame has a singular linear part");
    }
}

Frame Frame::identity() {
    return Frame({1, 0, 0, 1}, {0, 0});
}

Point Frame::apply(const Point& p) const {
    return times(linear_, p) + translation_;
}

Direction Frame::apply(const Direction& d) const {
    const Point v = times(linear_, {d.dx(), d.dy()});
    return Direction(v.x, v.y);
}

Line Frame::apply(const Line& l) const {
    // Points y of the image satisfy n . M^-1 (y - t) = c, so the image normal
    // is M^-T n and the constant picks up n . M^-1 t.
    const Matrix2 inv = invert(linear_);
    const Scalar a = l.a() * inv.m00 + l.b() * inv.m10;
    const Scalar b = l.a() * inv.m01 + l.b() * inv.m11;
    return Line(a, b, l.c() + a * translation_.x + b * translation_.y);
}

Frame Frame::inverse() const {
    const Matrix2 inv = invert(linear_);
    const Point t = times(inv, translation_);
    return Frame(inv, {-t.x, -t.y});
}

Frame Frame::compose(const Frame& inner) const {
    return Frame(multiply(linear_, inner.linear_), apply(inner.translation_));
}

Frame frame_to_standard(const Point& origin, const Line& axis, const Direction& transversal) {
    if (!contains(axis, origin)) {
        fail(ErrorCode::origin_off_axis, "frame origin does not lie on the axis");
    }
    const Direction along = axis.direction();
    if (cross(along.dx(), along.dy(), transversal.dx(), transversal.dy()).is_zero()) {
        fail(ErrorCode::degenerate_transversal, "transversal direction is parallel to the axis");
    }
    // Columns (along, transversal) form the basis; the frame is its inverse.
    const Matrix2 basis{along.dx(), transversal.dx(), along.dy(), transversal.dy()};
    const Matrix2 linear = invert(basis);
    const Point t = times(linear, origin);
    return Frame(linear, {-t.x, -t.y});
}

Frame swap_axes() {
    return Frame({0, 1, 1, 0}, {0, 0});
}

}  // namespace projgeom
