#include "projgeom/text.hpp"

#include <cctype>

#include "projgeom/error.hpp"

namespace projgeom {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_end() { return peek() == '\0'; }

    [[noreturn]] void error(std::string_view expected) {
        skip_space();
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        fail(ErrorCode::parse, "parse error in '" + std::string(text_) + "' at column " +
                                   std::to_string(pos_ + 1) + ": expected " + std::string(expected) +
                                   ", found " + found);
    }

    void expect(char c) {
        if (!accept(c)) {
            error(std::string("'") + c + "'");
        }
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    /// digits ['/' digits]
    Scalar unsigned_rational() {
        if (!at_digit()) {
            error("a number");
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                error("a denominator");
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
        }
        const auto token = text_.substr(start, pos_ - start);
        try {
            return Scalar::parse(token);
        } catch (const GeometryError&) {
            pos_ = start;
            error("a nonzero denominator");
        }
    }

    Scalar signed_rational() {
        bool negative = false;
        if (accept('-')) {
            negative = true;
        } else {
            accept('+');
        }
        Scalar value = unsigned_rational();
        return negative ? -value : value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

struct Linear {
    Scalar x;
    Scalar y;
    Scalar constant;
};

// term := ['+'|'-'] ([coefficient ['*']] ('x' | 'y') | coefficient)
void parse_term(Cursor& in, Scalar sign, Linear& acc) {
    if (in.accept('-')) {
        sign = -sign;
    } else {
        in.accept('+');
    }
    Scalar coefficient = 1;
    bool has_number = false;
    if (in.at_digit()) {
        coefficient = in.unsigned_rational();
        has_number = true;
        in.accept('*');
    }
    const char c = in.peek();
    if (c == 'x' || c == 'X') {
        in.accept(c);
        acc.x += sign * coefficient;
    } else if (c == 'y' || c == 'Y') {
        in.accept(c);
        acc.y += sign * coefficient;
    } else if (has_number) {
        acc.constant += sign * coefficient;
    } else {
        in.error("a number, 'x' or 'y'");
    }
}

// side := term (('+'|'-') term)*
Linear parse_side(Cursor& in) {
    Linear acc;
    parse_term(in, 1, acc);
    while (true) {
        if (in.accept('-')) {
            parse_term(in, -1, acc);
        } else if (in.accept('+')) {
            parse_term(in, 1, acc);
        } else {
            return acc;
        }
    }
}

std::string signed_term(const Scalar& value) {
    return value.sign() < 0 ? "-" + value.abs().to_string() : "+" + value.to_string();
}

}  // namespace

Line parse_line_spec(std::string_view text) {
    Cursor in(text);
    const Linear lhs = parse_side(in);
    in.expect('=');
    const Linear rhs = parse_side(in);
    if (!in.at_end()) {
        in.error("'+', '-' or end of input");
    }
    const Scalar a = lhs.x - rhs.x;
    const Scalar b = lhs.y - rhs.y;
    if (a.is_zero() && b.is_zero()) {
        fail(ErrorCode::parse, "'" + std::string(text) + "' has no x or y term");
    }
    return Line(a, b, rhs.constant - lhs.constant);
}

Point parse_point(std::string_view text) {
    Cursor in(text);
    in.expect('(');
    Scalar x = in.signed_rational();
    if (!in.accept(',') && !in.accept('|')) {
        in.error("',' or '|'");
    }
    Scalar y = in.signed_rational();
    in.expect(')');
    if (!in.at_end()) {
        in.error("end of input");
    }
    return {std::move(x), std::move(y)};
}

Scalar parse_scalar(std::string_view text) {
    Cursor in(text);
    Scalar value = in.signed_rational();
    if (!in.at_end()) {
        in.error("end of input");
    }
    return value;
}

std::string format_line(const Line& l) {
    if (l.is_vertical()) {
        return "x=" + l.c().to_string();
    }
    if (l.is_horizontal()) {
        return "y=" + l.c().to_string();
    }
    const Scalar slope = *l.slope();
    const Scalar intercept = *l.y_intercept();
    std::string out = "y=";
    if (slope == Scalar(1)) {
        out += "x";
    } else if (slope == Scalar(-1)) {
        out += "-x";
    } else {
        out += slope.to_string() + "*x";
    }
    if (!intercept.is_zero()) {
        out += signed_term(intercept);
    }
    return out;
}

std::string format_point(const Point& p) {
    return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

}  // namespace projgeom
