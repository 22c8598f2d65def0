#ifndef PROJGEOM_SCALAR_HPP
#define PROJGEOM_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace projgeom {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator, so equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {}  // NOLINT: implicit by intent
    Scalar(long numerator, long denominator);
    explicit Scalar(mpq_class value);

    /// Accepts "n", "-n", "+n" or "p/q" with a nonzero q.
    static Scalar parse(std::string_view text);

    const mpq_class& raw() const noexcept { return value_; }

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    Scalar abs() const;
    double to_double() const;

    /// "p/q", or just "p" for integers.
    std::string to_string() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    /// Throws GeometryError(E_SINGULAR) on a zero divisor.
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

private:
    mpq_class value_;
};

}  // namespace projgeom

#endif  // PROJGEOM_SCALAR_HPP
