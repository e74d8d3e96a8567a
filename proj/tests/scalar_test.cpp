#include <gtest/gtest.h>

#include <xsect/random.hpp>
#include <xsect/scalar.hpp>

namespace {

using xsect::ArithOp;
using xsect::DomainError;
using xsect::ParseError;
using xsect::Rational;
using xsect::Scalar;

Scalar q(long n, long d) { return Scalar::ratio(n, d); }

TEST(ParseScalar, Literals) {
    EXPECT_EQ(xsect::parse_scalar("(1/2,0)"), q(1, 2));
    EXPECT_EQ(xsect::parse_scalar("(-3,2/5)"), Scalar(-3, Rational(2, 5)));
    EXPECT_EQ(xsect::parse_scalar("(6/4,-0)"), q(3, 2));
}

TEST(ParseScalar, ZeroDenominatorNamesPosition) {
    try {
        xsect::parse_scalar("(1/0,0)");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
}

TEST(ParseScalar, MalformedInputs) {
    for (const char* bad : {"", "1/2", "(1/2)", "(1/2,0", "(1/2, 0)", "(a,0)", "(1/,0)", "(1,-)", "(--1,0)", "(1,2)x"})
        EXPECT_THROW(xsect::parse_scalar(bad), ParseError) << bad;
}

TEST(Arith, Examples) {
    EXPECT_EQ(arith(q(1, 2), Scalar::i(), ArithOp::mul), Scalar(0, Rational(1, 2)));
    EXPECT_EQ(arith(Scalar(2, 3), Scalar(-2, -3), ArithOp::add), Scalar(0));
    EXPECT_TRUE(arith(Scalar(2, 3), Scalar(-2, -3), ArithOp::add).is_zero());
    EXPECT_THROW(arith(Scalar(1), Scalar(0), ArithOp::div), DomainError);
}

TEST(Invert, Examples) {
    EXPECT_EQ(invert(Scalar(2)), q(1, 2));
    EXPECT_EQ(invert(Scalar::i()), Scalar(0, -1));
    EXPECT_EQ(invert(Scalar(1, 1)), Scalar(Rational(1, 2), Rational(-1, 2)));
    EXPECT_THROW(invert(Scalar()), DomainError);
}

TEST(Scalar, ZeroIsCanonical) {
    const Scalar z = Scalar(q(3, 7)) - Scalar(q(6, 14));
    EXPECT_EQ(z.re().get_num(), 0);
    EXPECT_EQ(z.re().get_den(), 1);
    EXPECT_EQ(xsect::format_scalar(z), "(0,0)");
}

TEST(Scalar, FieldAxiomsOnSamples) {
    xsect::Sampler rng(1);
    for (int t = 0; t < 300; ++t) {
        const Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a + (-a)).is_zero());
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Scalar(1));
            EXPECT_EQ((b / a) * a, b);
        }
    }
}

TEST(Scalar, FormatParseRoundTrip) {
    xsect::Sampler rng(2, 1000);
    for (int t = 0; t < 300; ++t) {
        const Scalar a = rng.scalar();
        const std::string text = xsect::format_scalar(a);
        EXPECT_EQ(xsect::parse_scalar(text), a);
        EXPECT_EQ(xsect::format_scalar(xsect::parse_scalar(text)), text);
    }
}

TEST(Scalar, RenormalizationIsIdempotent) {
    xsect::Sampler rng(3, 50);
    for (int t = 0; t < 100; ++t) {
        Rational r = rng.rational() * rng.rational();
        Rational again = r;
        again.canonicalize();
        EXPECT_EQ(again.get_num(), r.get_num());
        EXPECT_EQ(again.get_den(), r.get_den());
    }
}

TEST(Scalar, LargeValuesStayExact) {
    Scalar x = q(3, 7);
    for (int k = 0; k < 200; ++k)
        x *= q(10007, 10009);
    for (int k = 0; k < 200; ++k)
        x /= q(10007, 10009);
    EXPECT_EQ(x, q(3, 7));
}

} // namespace
