#include "projgeom/scalar.hpp"

#include <cctype>

#include "projgeom/error.hpp"

namespace projgeom {

namespace {

bool is_integer_literal(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        ++i;
    }
    if (i == text.size()) {
        return false;
    }
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            return false;
        }
    }
    return true;
}

std::string strip_plus(std::string_view text) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    return std::string(text);
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
    if (denominator == 0) {
        fail(ErrorCode::singular, "rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        fail(ErrorCode::parse, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class num(strip_plus(num_text), 10);
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
            fail(ErrorCode::parse, "malformed denominator in '" + std::string(text) + "'");
        }
        den = mpz_class(std::string(den_text), 10);
        if (den == 0) {
            fail(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
        }
    }
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::abs() const {
    return Scalar(mpq_class(::abs(value_)));
}

double Scalar::to_double() const {
    return value_.get_d();
}

std::string Scalar::to_string() const {
    return value_.get_str(10);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    value_ += rhs.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) {
        fail(ErrorCode::singular, "division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Scalar Scalar::operator-() const {
    return Scalar(mpq_class(-value_));
}

}  // namespace projgeom
