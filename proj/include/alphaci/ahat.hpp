#pragma once

#include "numtheory.hpp"
#include "series.hpp"
#include "topology.hpp"

#include <bit>
#include <string>
#include <vector>

namespace alphaci {

enum class AhatBackend { sign_sum, hilbert, consensus };

inline const char* to_string(AhatBackend b)
{
    switch (b) {
    case AhatBackend::sign_sum: return "sign_sum";
    case AhatBackend::hilbert: return "hilbert";
    case AhatBackend::consensus: return "consensus";
    }
    return "?";
}

/// Exact A-hat genus of an even-dimensional spin complete intersection.
/// Always even: it equals twice the dimension of the space of sections of
/// the square root O(m) of the canonical bundle.
struct AhatValue {
    Integer value;
    AhatBackend backend = AhatBackend::consensus;

    friend bool operator==(const AhatValue&, const AhatValue&) = default;
};

namespace detail {

inline void require_ahat_domain(int n, const std::vector<int>& d, const char* who)
{
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": dimension must be even and at least 2");
    int evens = 0;
    for (int x : d) {
        if (x < 1)
            throw std::invalid_argument(std::string(who) + ": degrees must be positive");
        evens += (x % 2 == 0);
    }
    // for even n, spin means an odd number of even degrees
    if (evens % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": not spin (even number of even degrees)");
}

} // namespace detail

/// Signed sum over all 2^k sign patterns of
/// sgn(eps) binomial((n+k-1+eps.d)/2, n+k), exact over Z. No mod-2
/// shortcut exists here, so every term is a full big-integer binomial.
inline AhatValue ahat_sign_sum(int n, const std::vector<int>& d)
{
    detail::require_ahat_domain(n, d, "ahat_sign_sum");
    const int k = static_cast<int>(d.size());
    if (k > 62)
        throw std::invalid_argument("ahat_sign_sum: sign enumeration supports at most 62 degrees");
    const long long N = static_cast<long long>(n) + k;
    long long dot = 0;
    for (int x : d)
        dot += x;
    Integer acc = binomial((N - 1 + dot) / 2, N);
    unsigned long long neg = 0;
    const unsigned long long patterns = 1ull << k;
    for (unsigned long long i = 1; i < patterns; ++i) {
        const int j = std::countr_zero(i);
        const unsigned long long bit = 1ull << j;
        neg ^= bit;
        dot += (neg & bit) ? -2LL * d[static_cast<std::size_t>(j)]
                           : 2LL * d[static_cast<std::size_t>(j)];
        const Integer term = binomial((N - 1 + dot) / 2, N);
        if (std::popcount(neg) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return {std::move(acc), AhatBackend::sign_sum};
}

/// Twice the t^m Hilbert series coefficient, 2m = -n-k-1 + sum d_i;
/// a negative twist gives 0.
inline AhatValue ahat_hilbert(int n, const std::vector<int>& d)
{
    detail::require_ahat_domain(n, d, "ahat_hilbert");
    const int k = static_cast<int>(d.size());
    long long two_m = -static_cast<long long>(n) - k - 1;
    for (int x : d)
        two_m += x;
    if (two_m % 2 != 0) // unreachable once the spin parity holds
        throw std::invalid_argument("ahat_hilbert: twist is not integral");
    const long long m = two_m / 2;
    if (m < 0)
        return {Integer(0), AhatBackend::hilbert};
    const auto series = hilbert_series(n, d, static_cast<int>(m));
    return {2 * series.coefficient(static_cast<int>(m)), AhatBackend::hilbert};
}

/// Dispatcher: both backends must agree and the value must be even.
inline AhatValue ahat(int n, const std::vector<int>& d)
{
    AhatValue a = ahat_sign_sum(n, d);
    const AhatValue b = ahat_hilbert(n, d);
    if (a.value != b.value)
        throw consistency_error("ahat backends disagree: sign_sum=" + a.value.str() +
                                " hilbert=" + b.value.str());
    if (a.value % 2 != 0)
        throw consistency_error("ahat value is odd: " + a.value.str());
    return {std::move(a.value), AhatBackend::consensus};
}

} // namespace alphaci
