#include "ostar/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "ostar/error.hpp"

namespace ostar {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::LoopArc: return "LoopArc";
        case ErrorKind::Digon: return "Digon";
        case ErrorKind::DuplicateArc: return "DuplicateArc";
        case ErrorKind::IdOutOfRange: return "IdOutOfRange";
        case ErrorKind::SameVertex: return "SameVertex";
        case ErrorKind::WrongCardinality: return "WrongCardinality";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::WrongBranch: return "WrongBranch";
        case ErrorKind::EllZero: return "EllZero";
        case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
        case ErrorKind::InfeasibleSizes: return "InfeasibleSizes";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::RangeError: return "RangeError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

Count checked_add(Count a, Count b) {
    Count out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, "count addition exceeds 64 bits");
    }
    return out;
}

Count checked_mul(Count a, Count b) {
    Count out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, "count product exceeds 64 bits");
    }
    return out;
}

Count binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    // Multiplicative form in 128 bits; each partial product is an exact binomial.
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<Count>::max()) {
            throw Error(ErrorKind::Overflow, "binomial exceeds 64 bits");
        }
    }
    return static_cast<Count>(acc);
}

BigInt factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

BigInt ipow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

Rational rpow(const Rational& base, unsigned exp) {
    // 0^0 = 1 by convention.
    return make_rational(ipow(boost::multiprecision::numerator(base), exp),
                         ipow(boost::multiprecision::denominator(base), exp));
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorKind::DomainError, "zero denominator");
    // The two-argument constructor rejects negative denominators.
    return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_decimal(const Rational& q, int digits) {
    BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    const bool negative = num < 0;
    if (negative) num = -num;

    BigInt scale = ipow(BigInt(10), static_cast<unsigned>(digits));
    BigInt scaled = num * scale;
    BigInt quotient = scaled / den;
    BigInt remainder = scaled % den;
    if (remainder * 2 >= den) quotient += 1;

    BigInt int_part = quotient / scale;
    BigInt frac_part = quotient % scale;
    std::string frac = frac_part.str();
    if (static_cast<int>(frac.size()) < digits) {
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    }
    std::string out = (negative && quotient != 0) ? "-" : "";
    out += int_part.str();
    if (digits > 0) out += "." + frac;
    return out;
}

std::string to_fraction(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'"); };
    if (text.empty()) fail();
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(BigInt(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const std::string frac = text.substr(dot + 1);
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        }
        if (digits.empty() || digits == "-" || digits == "+") fail();
        return make_rational(BigInt(digits), ipow(BigInt(10), static_cast<unsigned>(frac.size())));
    } catch (const std::runtime_error&) {
        fail();
    }
    return {};
}

}  // namespace ostar
