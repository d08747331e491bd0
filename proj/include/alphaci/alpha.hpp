#pragma once

#include "gf2poly.hpp"
#include "numtheory.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace alphaci {

enum class AlphaBackend {
    sign_sum,       // signed binomial sum over the 2^k sign patterns
    hilbert,        // mod-2 Hilbert series coefficient, bit-packed
    partition_sum,  // composition sum of binomial products
    fr,             // T^{n+1}-coefficient of prod f_{d_i}(T)
    closed_form,    // n = 1 closed form by nu_2(d_tot) and d_tot mod 8
    abstract_series,// generalized series definition, any integer inputs
    consensus,      // dispatcher agreement over several backends
};

inline const char* to_string(AlphaBackend b)
{
    switch (b) {
    case AlphaBackend::sign_sum: return "sign_sum";
    case AlphaBackend::hilbert: return "hilbert";
    case AlphaBackend::partition_sum: return "partition_sum";
    case AlphaBackend::fr: return "fr";
    case AlphaBackend::closed_form: return "closed_form";
    case AlphaBackend::abstract_series: return "abstract_series";
    case AlphaBackend::consensus: return "consensus";
    }
    return "?";
}

/// An element of Z_2 tagged with the formula that produced it.
struct AlphaValue {
    int value = 0; // 0 or 1
    AlphaBackend backend = AlphaBackend::consensus;

    friend bool operator==(const AlphaValue&, const AlphaValue&) = default;
};

/// Polynomial over Z_2 in the dimension-shift variable T. f_r has only
/// even-power terms for odd r and only odd-power terms for even r.
using FrPolynomial = Gf2Poly;

/// f_0 = 0, f_1 = 1, f_r = T f_{r-1} + f_{r-2}; degree of f_r is r-1.
/// Equivalently the T^j-coefficient is binomial(r+j, 2j+1) mod 2.
inline FrPolynomial fr_polynomial(unsigned r)
{
    FrPolynomial prev; // f_0
    if (r == 0)
        return prev;
    FrPolynomial cur = FrPolynomial::one(); // f_1
    for (unsigned i = 2; i <= r; ++i) {
        FrPolynomial next = cur.shifted(1) ^ prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace detail {

// bit j of the result is the XOR of bits 0..j of x
inline std::uint64_t prefix_xor64(std::uint64_t x)
{
    x ^= x << 1;
    x ^= x << 2;
    x ^= x << 4;
    x ^= x << 8;
    x ^= x << 16;
    x ^= x << 32;
    return x;
}

/// Coefficient of t^m in (1-t)^{-e} (1+t^{d_1}) ... (1+t^{d_k}) over Z_2,
/// the kernel shared by the Hilbert backend and the abstract invariant.
/// Multiplying by (1+t^d) is a shifted XOR; each 1/(1-t) factor is one
/// running prefix XOR over the bit buffer. Nothing above bit m ever feeds
/// back down, so the buffer is exactly m+1 bits.
inline int k_coeff_mod2(long long e, const std::vector<long long>& degrees, long long m)
{
    if (e < 0)
        throw std::invalid_argument("k_coeff_mod2: negative geometric power");
    if (m < 0)
        return 0;
    std::vector<std::uint64_t> f(static_cast<std::size_t>(m / 64) + 1, 0);
    f[0] = 1;
    for (long long d : degrees) {
        if (d < 1)
            throw std::invalid_argument("k_coeff_mod2: degrees must be positive");
        if (d > m)
            continue; // the shifted copy lands entirely above bit m
        const std::size_t ws = static_cast<std::size_t>(d / 64);
        const unsigned bs = static_cast<unsigned>(d % 64);
        for (std::size_t i = f.size(); i-- > 0;) {
            std::uint64_t v = 0;
            if (i >= ws)
                v = f[i - ws] << bs;
            if (bs != 0 && i >= ws + 1)
                v |= f[i - ws - 1] >> (64 - bs);
            f[i] ^= v;
        }
    }
    for (long long r = 0; r < e; ++r) {
        std::uint64_t carry = 0;
        for (auto& w : f) {
            const std::uint64_t y = prefix_xor64(w) ^ carry;
            carry = (y >> 63) ? ~std::uint64_t{0} : 0;
            w = y;
        }
    }
    return static_cast<int>((f[static_cast<std::size_t>(m / 64)] >> (m % 64)) & 1u);
}

inline void require_positive_degrees(const std::vector<int>& d, const char* who)
{
    for (int x : d)
        if (x < 1)
            throw std::invalid_argument(std::string(who) + ": degrees must be positive");
}

inline long long degree_total(const std::vector<int>& d)
{
    long long s = 0;
    for (int x : d)
        s += x;
    return s;
}

// One factor of the composition sum, both printed forms:
// binomial(d+j, 2j+1) mod 2, which must equal binomial((d+j-1)/2, j) mod 2
// when d+j is odd and 0 when d+j is even.
inline int partition_factor(int d, int j)
{
    const int unrestricted = binomial_mod2(static_cast<long long>(d) + j, 2LL * j + 1);
    const int restricted = ((d + j) % 2 != 0)
        ? binomial_mod2((static_cast<long long>(d) + j - 1) / 2, j)
        : 0;
    if (unrestricted != restricted)
        throw consistency_error("alpha_partition_sum: the two factor forms disagree");
    return unrestricted;
}

inline int partition_rec(const std::vector<int>& d, std::size_t idx, int remaining)
{
    if (idx + 1 == d.size())
        return partition_factor(d[idx], remaining);
    int acc = 0;
    for (int j = 0; j <= remaining; ++j)
        acc ^= partition_factor(d[idx], j) & partition_rec(d, idx + 1, remaining - j);
    return acc;
}

/// Half-size sign sum with the first sign pinned to +1: the sum of
/// binomial((n+k-1+eps.d)/2, n+k) over the 2^{k-1} remaining patterns.
/// Agrees mod 2 with the symmetric 2^k form; kept as a cross-check.
inline int sign_sum_half(int n, const std::vector<int>& d)
{
    const int k = static_cast<int>(d.size());
    if (k == 0)
        return ((n + 1) & 1) == 0 && n + 1 >= 0 ? binomial_mod2((n + 1) / 2, n + 1) : 0;
    if (k > 63)
        throw std::invalid_argument("sign_sum_half: too many degrees to enumerate");
    const long long N = static_cast<long long>(n) + k;
    long long dot = degree_total(d);
    if ((N - 1 + dot) & 1)
        return 0;
    int acc = binomial_mod2((N - 1 + dot) / 2, N);
    unsigned long long neg = 0;
    const unsigned long long patterns = 1ull << (k - 1);
    for (unsigned long long i = 1; i < patterns; ++i) {
        const int j = std::countr_zero(i) + 1; // signs of d[1..k-1] vary
        const unsigned long long bit = 1ull << j;
        neg ^= bit;
        dot += (neg & bit) ? -2LL * d[static_cast<std::size_t>(j)]
                           : 2LL * d[static_cast<std::size_t>(j)];
        acc ^= binomial_mod2((N - 1 + dot) / 2, N);
    }
    return acc;
}

} // namespace detail

/// alpha as the symmetric sign sum: the mod-2 sum over all 2^k sign
/// patterns eps of binomial((n+k+1+eps.d)/2, n+k+1), with the generalized
/// negative-upper binomial so the formula survives eps.d driving the upper
/// argument negative. The walk is a Gray code, so each pattern updates
/// eps.d by a single +-2 d_j step.
inline AlphaValue alpha_sign_sum(int n, const std::vector<int>& d)
{
    detail::require_positive_degrees(d, "alpha_sign_sum");
    const int k = static_cast<int>(d.size());
    if (k > 62)
        throw std::invalid_argument("alpha_sign_sum: sign enumeration supports at most 62 degrees");
    const long long N = static_cast<long long>(n) + k + 1;
    long long dot = detail::degree_total(d);
    if ((N + dot) & 1)
        return {0, AlphaBackend::sign_sum};
    int acc = binomial_mod2((N + dot) / 2, N);
    unsigned long long neg = 0;
    const unsigned long long patterns = 1ull << k;
    for (unsigned long long i = 1; i < patterns; ++i) {
        const int j = std::countr_zero(i);
        const unsigned long long bit = 1ull << j;
        neg ^= bit;
        dot += (neg & bit) ? -2LL * d[static_cast<std::size_t>(j)]
                           : 2LL * d[static_cast<std::size_t>(j)];
        acc ^= binomial_mod2((N + dot) / 2, N);
    }
    return {acc, AlphaBackend::sign_sum};
}

/// alpha as the mod-2 reduction of the t^m Hilbert series coefficient,
/// 2m = -n-k-1 + sum d_i. Works over Z_2 bits directly; a negative or
/// fractional twist gives 0. The symmetric Laurent presentation of the
/// same number (the t^0-coefficient after multiplying through by t^{-m})
/// is equivalent to reading t^{2m} off the doubled-variable series;
/// genuinely negative exponents are deliberately not modeled.
inline AlphaValue alpha_hilbert(int n, const std::vector<int>& d)
{
    detail::require_positive_degrees(d, "alpha_hilbert");
    const int k = static_cast<int>(d.size());
    const long long two_m = -static_cast<long long>(n) - k - 1 + detail::degree_total(d);
    if (two_m & 1)
        return {0, AlphaBackend::hilbert};
    const long long m = two_m / 2;
    if (m < 0)
        return {0, AlphaBackend::hilbert};
    const std::vector<long long> dd(d.begin(), d.end());
    return {detail::k_coeff_mod2(static_cast<long long>(n) + k + 1, dd, m),
            AlphaBackend::hilbert};
}

/// alpha as the composition sum over j_1 + ... + j_k = n+1 of products
/// binomial(d_i+j_i, 2j_i+1). Every factor is also evaluated in its
/// restricted half-argument form and the two are asserted equal.
inline AlphaValue alpha_partition_sum(int n, const std::vector<int>& d)
{
    detail::require_positive_degrees(d, "alpha_partition_sum");
    if (n + 1 < 0)
        return {0, AlphaBackend::partition_sum};
    if (d.empty()) // empty composition: only n+1 = 0 has one (empty) term
        return {n + 1 == 0 ? 1 : 0, AlphaBackend::partition_sum};
    return {detail::partition_rec(d, 0, n + 1), AlphaBackend::partition_sum};
}

/// alpha as the T^{n+1}-coefficient of f_{d_1}(T) ... f_{d_k}(T) over Z_2.
inline AlphaValue alpha_fr(int n, const std::vector<int>& d)
{
    detail::require_positive_degrees(d, "alpha_fr");
    if (n + 1 < 0)
        return {0, AlphaBackend::fr};
    const auto target = static_cast<std::size_t>(n + 1);
    Gf2Poly prod = Gf2Poly::one();
    for (int x : d) {
        prod = mul_truncated(prod, fr_polynomial(static_cast<unsigned>(x)), target);
        if (prod.is_zero())
            break;
    }
    return {prod.coeff(target) ? 1 : 0, AlphaBackend::fr};
}

/// The abstract invariant: defined for every integer n and arbitrary
/// integer d_i. Zero if some d_i = 0, if n < -1, or if the twist is not
/// integral; otherwise the mod-2 t^m-coefficient of
/// (1-t)^{-(n+k+1)} (1+t^{|d_1|}) ... (1+t^{|d_k|}), using that the value
/// is invariant under d_i -> -d_i.
inline AlphaValue alpha_abstract(int n, const std::vector<long long>& d)
{
    for (long long x : d)
        if (x == 0)
            return {0, AlphaBackend::abstract_series};
    if (n < -1)
        return {0, AlphaBackend::abstract_series};
    std::vector<long long> a;
    a.reserve(d.size());
    long long total = 0;
    for (long long x : d) {
        const long long v = x < 0 ? -x : x;
        a.push_back(v);
        total += v;
    }
    const long long k = static_cast<long long>(d.size());
    const long long two_m = -static_cast<long long>(n) - k - 1 + total;
    if (two_m & 1)
        return {0, AlphaBackend::abstract_series};
    return {detail::k_coeff_mod2(n + k + 1, a, two_m / 2), AlphaBackend::abstract_series};
}

/// Closed form for one-dimensional complete intersections carrying the
/// distinguished spin structure: 0 for nu_2(d_tot) >= 3, 1 for nu_2 = 2,
/// and for odd d_tot 0 exactly when d_tot = +-1 (mod 8).
inline AlphaValue alpha_n1_closed(const std::vector<int>& d)
{
    detail::require_positive_degrees(d, "alpha_n1_closed");
    int evens = 0;
    for (int x : d)
        evens += (x % 2 == 0);
    if (evens % 2 != 0)
        throw std::invalid_argument(
            "alpha_n1_closed: the distinguished spin structure needs an even number of even degrees");
    Integer d_tot = 1;
    for (int x : d)
        d_tot *= x;
    const unsigned v = nu_p(2, d_tot);
    if (v == 1)
        throw std::invalid_argument("alpha_n1_closed: nu_2(d_tot) = 1 admits no distinguished spin structure");
    int value;
    if (v >= 2)
        value = v == 2 ? 1 : 0;
    else {
        const int r8 = static_cast<int>(d_tot % 8);
        value = (r8 == 1 || r8 == 7) ? 0 : 1;
    }
    return {value, AlphaBackend::closed_form};
}

namespace detail {

inline void require_alpha_domain(int n, const std::vector<int>& d)
{
    if (n < 1 || n % 4 != 1)
        throw std::invalid_argument("alpha: Z_2-valued only in dimensions n = 1 (mod 4)");
    require_positive_degrees(d, "alpha");
    int evens = 0;
    for (int x : d)
        evens += (x % 2 == 0);
    if (evens % 2 != 0)
        throw std::invalid_argument("alpha: not spin (odd number of even degrees)");
}

} // namespace detail

/// Every backend's verdict for a geometric input; the n = 1 closed form
/// rides along as a fifth check when applicable.
inline std::vector<AlphaValue> alpha_all_backends(int n, const std::vector<int>& d)
{
    detail::require_alpha_domain(n, d);
    std::vector<AlphaValue> out{alpha_sign_sum(n, d), alpha_hilbert(n, d),
                                alpha_partition_sum(n, d), alpha_fr(n, d)};
    if (n == 1)
        out.push_back(alpha_n1_closed(d));
    return out;
}

/// Dispatcher: runs all backends and requires unanimity. A disagreement is
/// an implementation bug, never a valid state, and surfaces as
/// consistency_error.
inline AlphaValue alpha(int n, const std::vector<int>& d)
{
    const auto vals = alpha_all_backends(n, d);
    for (std::size_t i = 1; i < vals.size(); ++i) {
        if (vals[i].value != vals[0].value) {
            std::string msg = "alpha backends disagree:";
            for (const auto& v : vals)
                msg += std::string(" ") + to_string(v.backend) + "=" + std::to_string(v.value);
            throw consistency_error(msg);
        }
    }
    return {vals[0].value, AlphaBackend::consensus};
}

} // namespace alphaci
