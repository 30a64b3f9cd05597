#ifndef TERW_RATIONAL_HPP
#define TERW_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <string_view>

namespace terw {

/// Exact arbitrary-precision rational scalar. Arithmetic never rounds and
/// every value is kept canonical: positive denominator, coprime with the
/// numerator. GMP maintains this through all operator arithmetic; the
/// factory functions below canonicalize raw numerator/denominator input.
using Rational = mpq_class;

/// Exact arbitrary-precision integer.
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws DomainError if den == 0.
Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

/// Parses "num" or "num/den" (optional leading '-'). Throws DomainError on
/// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Renders canonical form: "num" when the denominator is 1, else "num/den".
std::string to_string(const Rational& x);

bool is_integer(const Rational& x);

/// Binomial coefficient C(n, k); zero when k is out of range.
Integer binomial(long n, long k);

/// Exact integer power base^exp, exp >= 0.
Integer ipow(const Integer& base, unsigned long exp);

}  // namespace terw

namespace Eigen {

/// Scalar traits so dense types can be instantiated over exact rationals.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen

#endif
