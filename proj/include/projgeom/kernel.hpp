#ifndef PROJGEOM_KERNEL_HPP
#define PROJGEOM_KERNEL_HPP

#include <optional>

#include "projgeom/scalar.hpp"

namespace projgeom {

struct Point {
    Scalar x;
    Scalar y;

    friend bool operator==(const Point&, const Point&) = default;
};

Point operator+(const Point& p, const Point& q);
Point operator-(const Point& p, const Point& q);
Point operator*(const Scalar& k, const Point& p);

/// Nonzero direction vector. Construction with (0, 0) throws E_PRECONDITION.
class Direction {
public:
    Direction(Scalar dx, Scalar dy);

    const Scalar& dx() const noexcept { return dx_; }
    const Scalar& dy() const noexcept { return dy_; }

    /// Scaled so the first nonzero component equals 1.
    Direction canonical() const;

    friend bool operator==(const Direction&, const Direction&) = default;

private:
    Scalar dx_;
    Scalar dy_;
};

Point operator+(const Point& p, const Direction& d);
Point operator-(const Point& p, const Direction& d);
/// Displacement k*d; may be the zero vector.
Point operator*(const Scalar& k, const Direction& d);

/// The locus a*x + b*y = c, kept in canonical form: the first nonzero of
/// (a, b) is 1. Equal lines therefore have equal coefficient triples.
class Line {
public:
    /// Throws E_PRECONDITION when a = b = 0.
    Line(Scalar a, Scalar b, Scalar c);

    static Line horizontal(Scalar y);
    static Line vertical(Scalar x);
    /// y = slope * x + intercept.
    static Line slope_intercept(Scalar slope, Scalar intercept);
    static Line x_axis() { return horizontal(0); }
    static Line y_axis() { return vertical(0); }

    const Scalar& a() const noexcept { return a_; }
    const Scalar& b() const noexcept { return b_; }
    const Scalar& c() const noexcept { return c_; }

    bool is_vertical() const noexcept { return b_.is_zero(); }
    bool is_horizontal() const noexcept { return a_.is_zero(); }

    /// Absent for vertical lines.
    std::optional<Scalar> slope() const;
    /// Intersection with the y-axis; absent for vertical lines.
    std::optional<Scalar> y_intercept() const;
    /// Intersection with the x-axis; absent for horizontal lines.
    std::optional<Scalar> x_intercept() const;

    /// Direction (b, -a) scaled so its first nonzero component is 1.
    Direction direction() const;

    /// a*x + b*y - c.
    Scalar evaluate(const Point& p) const;

    friend bool operator==(const Line&, const Line&) = default;

private:
    Scalar a_;
    Scalar b_;
    Scalar c_;
};

/// Throws E_COINCIDENT if p == q.
Line line_from_points(const Point& p, const Point& q);
Line line_through(const Point& p, const Direction& d);
/// The line through p parallel to l.
Line parallel_through(const Line& l, const Point& p);

bool is_parallel(const Line& l1, const Line& l2);
/// Throws E_PARALLEL when the lines are parallel (or equal).
Point intersect(const Line& l1, const Line& l2);
bool contains(const Line& l, const Point& p);

/// Sign of a*x + b*y - c for the canonical triple of l.
int side_of(const Line& l, const Point& p);

Point reflect_through(const Point& p, const Point& center);
Scalar dist_sq(const Point& p, const Point& q);

/// Cross product dx1*dy2 - dy1*dx2.
Scalar cross(const Scalar& dx1, const Scalar& dy1, const Scalar& dx2, const Scalar& dy2);
bool collinear(const Point& p, const Point& q, const Point& r);

}  // namespace projgeom

#endif  // PROJGEOM_KERNEL_HPP
