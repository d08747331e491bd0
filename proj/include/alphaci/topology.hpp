#pragma once

#include "numtheory.hpp"
#include "series.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace alphaci {

/// A smooth complete intersection X_n(d_1, ..., d_k) in CP^{n+k}: complex
/// dimension n >= 1 and a multiset of hypersurface degrees d_i >= 1, stored
/// sorted ascending. Degree-1 entries are kept; normalization is always a
/// separate, explicit operation.
class CompleteIntersection {
public:
    CompleteIntersection(int n, std::vector<int> degrees)
        : n_(n), degrees_(std::move(degrees))
    {
        if (n_ < 1)
            throw std::invalid_argument("CompleteIntersection: dimension must be at least 1");
        for (int d : degrees_)
            if (d < 1)
                throw std::invalid_argument("CompleteIntersection: degrees must be at least 1");
        std::sort(degrees_.begin(), degrees_.end());
    }

    int n() const { return n_; }
    int k() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }

    friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;

private:
    int n_;
    std::vector<int> degrees_;
};

/// X is spin iff -n-k-1 + sum d_i is even. When spin, returns the twist m
/// with 2m = -n-k-1 + sum d_i; O(m) restricted to X is the square root of
/// the canonical bundle. m may be negative (Fano range).
inline std::optional<long long> spin_twist(const CompleteIntersection& X)
{
    long long s = -static_cast<long long>(X.n()) - X.k() - 1;
    for (int d : X.degrees())
        s += d;
    if (s % 2 != 0)
        return std::nullopt;
    return s / 2;
}

inline bool is_spin(const CompleteIntersection& X) { return spin_twist(X).has_value(); }

/// d_tot = d_1 d_2 ... d_k (empty product is 1).
inline Integer total_degree(const CompleteIntersection& X)
{
    Integer p = 1;
    for (int d : X.degrees())
        p *= d;
    return p;
}

/// sigma_j = sum_i d_i^j for j >= 1.
inline Integer power_sum(const CompleteIntersection& X, int j)
{
    if (j < 1)
        throw std::invalid_argument("power_sum: exponent must be at least 1");
    Integer s = 0;
    for (int d : X.degrees())
        s += pow(Integer(d), static_cast<unsigned>(j));
    return s;
}

namespace detail {

// (1 + c x^step)^{-1} applied in place to an x-truncated coefficient vector:
// g_j = f_j - c g_{j-step}. Stays in Z because the full expansion does.
inline void divide_by_linear(std::vector<Integer>& c, const Integer& coef, int step)
{
    for (std::size_t j = static_cast<std::size_t>(step); j < c.size(); ++j)
        c[j] -= coef * c[j - static_cast<std::size_t>(step)];
}

} // namespace detail

/// Total Chern class c(TX) = (1+x)^{n+k+1} (1+d_1 x)^{-1} ... (1+d_k x)^{-1}
/// expanded in Z[x]/(x^{n+1}).
inline TruncatedIntSeries chern_series(const CompleteIntersection& X)
{
    const int n = X.n();
    const int e = n + X.k() + 1;
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        c[static_cast<std::size_t>(j)] = binomial(e, j);
    for (int d : X.degrees())
        detail::divide_by_linear(c, Integer(d), 1);
    return {n, std::move(c)};
}

/// Total Pontryagin class p(TX) = (1+x^2)^{n+k+1} (1+d_1^2 x^2)^{-1} ...,
/// expanded in Z[x]/(x^{n+1}); only even exponents carry nonzero terms.
inline TruncatedIntSeries pontryagin_series(const CompleteIntersection& X)
{
    const int n = X.n();
    const int e = n + X.k() + 1;
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; 2 * j <= n; ++j)
        c[static_cast<std::size_t>(2 * j)] = binomial(e, j);
    for (int d : X.degrees())
        detail::divide_by_linear(c, Integer(d) * d, 2);
    return {n, std::move(c)};
}

/// chi(X) = d_tot times the x^n-coefficient of c(TX), since x^n is d_tot
/// times a generator of the top cohomology.
inline Integer euler_characteristic(const CompleteIntersection& X)
{
    return total_degree(X) * chern_series(X).coefficient(X.n());
}

/// The data that pins down total degree and Pontryagin classes of X_n(d):
/// n, d_tot, and the normalized even power sums sigma_{2j} - k for
/// j = 1..floor(n/2). Storing sigma_{2j} - k makes padding by degree-1
/// entries a strict no-op, so profiles compare across different k.
/// A diffeomorphism invariant only for n >= 3.
struct InvariantProfile {
    int n = 0;
    Integer d_tot;
    std::vector<Integer> normalized_power_sums;

    bool diffeomorphism_invariant() const { return n >= 3; }

    /// Canonical text form, used as a grouping key and in JSON output.
    std::string key() const
    {
        std::string s = "n=" + std::to_string(n) + ";dtot=" + d_tot.str() + ";sums=";
        for (std::size_t j = 0; j < normalized_power_sums.size(); ++j) {
            if (j)
                s += ',';
            s += normalized_power_sums[j].str();
        }
        return s;
    }

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;

    friend bool operator<(const InvariantProfile& a, const InvariantProfile& b)
    {
        if (a.n != b.n)
            return a.n < b.n;
        if (a.d_tot != b.d_tot)
            return a.d_tot < b.d_tot;
        return std::lexicographical_compare(
            a.normalized_power_sums.begin(), a.normalized_power_sums.end(),
            b.normalized_power_sums.begin(), b.normalized_power_sums.end());
    }
};

inline InvariantProfile invariant_profile(const CompleteIntersection& X)
{
    InvariantProfile p;
    p.n = X.n();
    p.d_tot = total_degree(X);
    for (int j = 1; 2 * j <= X.n(); ++j)
        p.normalized_power_sums.push_back(power_sum(X, 2 * j) - X.k());
    return p;
}

} // namespace alphaci
