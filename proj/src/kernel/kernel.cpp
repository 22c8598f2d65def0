#include "projgeom/kernel.hpp"

#include "projgeom/error.hpp"

namespace projgeom {

Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
Point operator*(const Scalar& k, const Point& p) { return {k * p.x, k * p.y}; }

Direction::Direction(Scalar dx, Scalar dy) : dx_(std::move(dx)), dy_(std::move(dy)) {
    if (dx_.is_zero() && dy_.is_zero()) {
        fail(ErrorCode::precondition, "direction must be nonzero");
    }
}

Direction Direction::canonical() const {
    const Scalar& lead = dx_.is_zero() ? dy_ : dx_;
    return Direction(dx_ / lead, dy_ / lead);
}

Point operator+(const Point& p, const Direction& d) { return {p.x + d.dx(), p.y + d.dy()}; }
Point operator-(const Point& p, const Direction& d) { return {p.x - d.dx(), p.y - d.dy()}; }
Point operator*(const Scalar& k, const Direction& d) { return {k * d.dx(), k * d.dy()}; }

Line::Line(Scalar a, Scalar b, Scalar c) {
    if (a.is_zero() && b.is_zero()) {
        fail(ErrorCode::precondition, "line needs (a, b) != (0, 0)");
    }
    const Scalar lead = a.is_zero() ? b : a;
    a_ = a / lead;
    b_ = b / lead;
    c_ = c / lead;
}

Line Line::horizontal(Scalar y) { return Line(0, 1, std::move(y)); }
Line Line::vertical(Scalar x) { return Line(1, 0, std::move(x)); }

Line Line::slope_intercept(Scalar slope, Scalar intercept) {
    return Line(-slope, 1, std::move(intercept));
}

std::optional<Scalar> Line::slope() const {
    if (is_vertical()) {
        return std::nullopt;
    }
    return -a_ / b_;
}

std::optional<Scalar> Line::y_intercept() const {
    if (is_vertical()) {
        return std::nullopt;
    }
    return c_ / b_;
}

std::optional<Scalar> Line::x_intercept() const {
    if (is_horizontal()) {
        return std::nullopt;
    }
    return c_ / a_;
}

Direction Line::direction() const {
    return Direction(b_, -a_).canonical();
}

Scalar Line::evaluate(const Point& p) const {
    return a_ * p.x + b_ * p.y - c_;
}

Line line_from_points(const Point& p, const Point& q) {
    if (p == q) {
        fail(ErrorCode::coincident, "a line needs two distinct points");
    }
    const Scalar a = p.y - q.y;
    const Scalar b = q.x - p.x;
    return Line(a, b, a * p.x + b * p.y);
}

Line line_through(const Point& p, const Direction& d) {
    return line_from_points(p, p + d);
}

Line parallel_through(const Line& l, const Point& p) {
    return Line(l.a(), l.b(), l.a() * p.x + l.b() * p.y);
}

bool is_parallel(const Line& l1, const Line& l2) {
    return l1.a() * l2.b() == l2.a() * l1.b();
}

Point intersect(const Line& l1, const Line& l2) {
    const Scalar det = l1.a() * l2.b() - l2.a() * l1.b();
    if (det.is_zero()) {
        fail(ErrorCode::parallel, "lines are parallel and have no unique intersection");
    }
    return {(l1.c() * l2.b() - l2.c() * l1.b()) / det, (l1.a() * l2.c() - l2.a() * l1.c()) / det};
}

bool contains(const Line& l, const Point& p) {
    return l.evaluate(p).is_zero();
}

int side_of(const Line& l, const Point& p) {
    return l.evaluate(p).sign();
}

Point reflect_through(const Point& p, const Point& center) {
    return {center.x + center.x - p.x, center.y + center.y - p.y};
}

Scalar dist_sq(const Point& p, const Point& q) {
    const Scalar dx = p.x - q.x;
    const Scalar dy = p.y - q.y;
    return dx * dx + dy * dy;
}

Scalar cross(const Scalar& dx1, const Scalar& dy1, const Scalar& dx2, const Scalar& dy2) {
    return dx1 * dy2 - dy1 * dx2;
}

bool collinear(const Point& p, const Point& q, const Point& r) {
    return cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y).is_zero();
}

}  // namespace projgeom
