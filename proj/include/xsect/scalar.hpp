#ifndef XSECT_SCALAR_HPP
#define XSECT_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <xsect/error.hpp>

namespace xsect {

// Arbitrary-precision rational. GMP keeps every mpq_class result canonical
// (positive denominator, reduced, zero as 0/1) as long as values built from
// raw parts go through canonicalize().
using Rational = mpq_class;

namespace detail {

inline std::size_t scan_digits(std::string_view text, std::size_t pos) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    return pos;
}

} // namespace detail

/// Parses `-?digits(/digits)?`. `offset` is added to reported positions so
/// callers embedding a rational in a larger literal get useful diagnostics.
inline Rational parse_rational(std::string_view text, std::size_t offset = 0) {
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-')
        ++pos;
    std::size_t num_end = detail::scan_digits(text, pos);
    if (num_end == pos)
        throw ParseError("expected digits in rational '" + std::string(text) + "'", offset + pos);
    std::string num(text.substr(0, num_end));
    std::string den = "1";
    pos = num_end;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t den_end = detail::scan_digits(text, pos);
        if (den_end == pos)
            throw ParseError("expected denominator digits in rational '" + std::string(text) + "'",
                             offset + pos);
        den = std::string(text.substr(pos, den_end - pos));
        if (den.find_first_not_of('0') == std::string::npos)
            throw ParseError("zero denominator in rational '" + std::string(text) + "'", offset + pos);
        pos = den_end;
    }
    if (pos != text.size())
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in rational", offset + pos);

    Rational r;
    r.get_num() = mpz_class(num, 10);
    r.get_den() = mpz_class(den, 10);
    r.canonicalize();
    return r;
}

inline std::string format_rational(const Rational& r) { return r.get_str(10); }

/// Gaussian rational: a complex number with exact rational coordinates.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {} // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    /// num/den as a real scalar.
    static Scalar ratio(long num, long den) {
        if (den == 0)
            throw DomainError("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return Scalar(r);
    }

    static Scalar i() { return Scalar(0, 1); }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |a|^2, always real.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar inverse() const {
        if (is_zero())
            throw DomainError("inverse of zero scalar");
        Rational n = norm();
        return Scalar(re_ / n, -im_ / n);
    }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& b) {
        re_ += b.re_;
        im_ += b.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& b) {
        re_ -= b.re_;
        im_ -= b.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& b) {
        Rational re = re_ * b.re_ - im_ * b.im_;
        Rational im = re_ * b.im_ + im_ * b.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    Scalar& operator/=(const Scalar& b) {
        if (b.is_zero())
            throw DomainError("division by zero scalar");
        if (b.is_real()) {
            re_ /= b.re_;
            im_ /= b.re_;
            return *this;
        }
        return *this *= b.inverse();
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    Rational re_{0};
    Rational im_{0};
};

enum class ArithOp { add, sub, mul, div };

inline Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw DomainError("unknown arithmetic operation");
}

inline Scalar invert(const Scalar& a) { return a.inverse(); }

/// Parses `(<rational>,<rational>)`; no whitespace is permitted inside.
inline Scalar parse_scalar(std::string_view text) {
    if (text.empty() || text.front() != '(')
        throw ParseError("scalar must start with '('", 0);
    std::size_t comma = text.find(',');
    if (comma == std::string_view::npos)
        throw ParseError("scalar is missing ','", text.size());
    if (text.back() != ')')
        throw ParseError("scalar must end with ')'", text.size() - 1);
    if (text.size() < comma + 2)
        throw ParseError("scalar is missing imaginary part", comma + 1);
    Rational re = parse_rational(text.substr(1, comma - 1), 1);
    Rational im = parse_rational(text.substr(comma + 1, text.size() - comma - 2), comma + 1);
    return Scalar(std::move(re), std::move(im));
}

inline std::string format_scalar(const Scalar& a) {
    return "(" + format_rational(a.re()) + "," + format_rational(a.im()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << format_scalar(a); }

} // namespace xsect

#endif // XSECT_SCALAR_HPP
