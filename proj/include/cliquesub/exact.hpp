#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace cliquesub {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 100 significant decimal digits and an effectively unbounded exponent range.
using Real = boost::multiprecision::cpp_bin_float_100;

inline BigInt floor_of(const Rational & q)
{
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt quot = num / den;
    if (num % den != 0 && num < 0)
        --quot;
    return quot;
}

inline BigInt ceil_of(const Rational & q)
{
    BigInt f = floor_of(q);
    return Rational(f) == q ? f : f + 1;
}

inline Rational pow_of(const Rational & q, unsigned e)
{
    return Rational(boost::multiprecision::pow(boost::multiprecision::numerator(q), e),
                    boost::multiprecision::pow(boost::multiprecision::denominator(q), e));
}

inline std::int64_t to_i64(const BigInt & v) { return v.convert_to<std::int64_t>(); }
inline double to_double(const Rational & q) { return q.convert_to<double>(); }

} // namespace cliquesub
