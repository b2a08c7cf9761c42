#include <gtest/gtest.h>

#include <limits>

#include "ostar/error.hpp"
#include "ostar/rational.hpp"

using namespace ostar;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no ostar::Error thrown";
    return ErrorKind::DomainError;
}

}  // namespace

TEST(Rational, CheckedArithmeticThrowsOnOverflow) {
    const Count max = std::numeric_limits<Count>::max();
    EXPECT_EQ(checked_add(2, 3), 5u);
    EXPECT_EQ(checked_mul(1u << 20, 1u << 20), Count{1} << 40);
    EXPECT_EQ(kind_of([&] { checked_add(max, 1); }), ErrorKind::Overflow);
    EXPECT_EQ(kind_of([&] { checked_mul(max / 2 + 1, 2); }), ErrorKind::Overflow);
}

TEST(Rational, Binomials) {
    EXPECT_EQ(binomial_u64(10, 3), 120u);
    EXPECT_EQ(binomial_u64(5, 7), 0u);
    EXPECT_EQ(binomial_u64(67, 33), 14226520737620288370ull);
    EXPECT_EQ(kind_of([] { binomial_u64(68, 34); }), ErrorKind::Overflow);
    EXPECT_EQ(binomial(68, 34), BigInt("28453041475240576740"));
    EXPECT_EQ(factorial(10), BigInt(3628800));
}

TEST(Rational, ZeroToTheZeroIsOne) {
    EXPECT_EQ(rpow(Rational(0), 0), Rational(1));
    EXPECT_EQ(ipow(BigInt(0), 0), BigInt(1));
    EXPECT_EQ(rpow(Rational(2, 3), 3), Rational(8, 27));
}

TEST(Rational, DecimalRendering) {
    EXPECT_EQ(to_decimal(Rational(1, 3), 5), "0.33333");
    EXPECT_EQ(to_decimal(Rational(2, 3), 5), "0.66667");
    EXPECT_EQ(to_decimal(Rational(-1, 8), 2), "-0.13");
    EXPECT_EQ(to_decimal(Rational(81, 400), 4), "0.2025");
    EXPECT_EQ(to_decimal(Rational(7), 0), "7");
    EXPECT_EQ(to_decimal(Rational(1, 128)).size(), 52u);
    EXPECT_EQ(to_fraction(Rational(81, 400)), "81/400");
    EXPECT_EQ(to_fraction(Rational(3)), "3/1");
}

TEST(Rational, Parsing) {
    EXPECT_EQ(parse_rational("3/10"), Rational(3, 10));
    EXPECT_EQ(parse_rational("0.3"), Rational(3, 10));
    EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("12"), Rational(12));
    EXPECT_EQ(kind_of([] { parse_rational("1/0"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_rational("abc"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_rational(""); }), ErrorKind::ParseError);
}

TEST(Rational, MakeRationalRejectsZeroDenominator) {
    EXPECT_EQ(kind_of([] { make_rational(1, 0); }), ErrorKind::DomainError);
    EXPECT_EQ(make_rational(6, -4), Rational(-3, 2));
}
