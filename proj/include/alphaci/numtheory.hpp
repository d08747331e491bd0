#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace alphaci {

/// Arbitrary-precision signed integer used throughout the library.
using Integer = boost::multiprecision::cpp_int;

/// Thrown when two routes that must agree disagree (backend cross-checks,
/// 2-adic divisibility that a hypothesis-satisfying pair must obey).
/// Indicates an implementation bug or a falsified hypothesis, never a
/// recoverable input error.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// p-adic valuation of a nonzero integer: the number of times p divides m.
/// m = 0 is rejected (the valuation would be infinite).
inline unsigned nu_p(unsigned p, const Integer& m)
{
    if (p < 2)
        throw std::invalid_argument("nu_p: p must be at least 2");
    if (m == 0)
        throw std::domain_error("nu_p: valuation of 0 is infinite");
    Integer a = abs(m);
    if (p == 2)
        return static_cast<unsigned>(lsb(a));
    unsigned v = 0;
    Integer q, r;
    for (;;) {
        divide_qr(a, Integer(p), q, r);
        if (r != 0)
            return v;
        a = q;
        ++v;
    }
}

inline unsigned nu_p(unsigned p, long long m) { return nu_p(p, Integer(m)); }

/// nu_2(m!) by Legendre's floor sum, without forming the factorial.
inline unsigned long long nu2_factorial(unsigned long long m)
{
    unsigned long long v = 0;
    while (m > 0) {
        m >>= 1;
        v += m;
    }
    return v;
}

/// Generalized binomial coefficient a(a-1)...(a-b+1) / b!, exact.
/// Defined for any integer a, including negatives; 0 <= a < b gives 0.
inline Integer binomial(long long a, long long b)
{
    if (b < 0)
        throw std::invalid_argument("binomial: lower index must be nonnegative");
    Integer r = 1;
    for (long long i = 0; i < b; ++i) {
        r *= Integer(a - i);
        r /= (i + 1); // exact: r holds binomial(a, i+1) * (i+1) before dividing
    }
    return r;
}

/// binomial(a, b) mod 2 without materializing the value.
/// For a >= 0 this is Lucas' theorem: 1 iff the binary digits of b are a
/// submask of those of a. For a < 0 the identity
/// binomial(a, b) = (-1)^b binomial(b-a-1, b) reduces to the nonnegative case.
inline int binomial_mod2(long long a, long long b)
{
    if (b < 0)
        throw std::invalid_argument("binomial_mod2: lower index must be nonnegative");
    const auto bb = static_cast<unsigned long long>(b);
    unsigned long long aa;
    if (a >= 0)
        aa = static_cast<unsigned long long>(a);
    else
        aa = bb + static_cast<unsigned long long>(-(a + 1)); // b - a - 1, no overflow
    return (bb & ~aa) == 0 ? 1 : 0;
}

} // namespace alphaci
