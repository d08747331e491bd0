#pragma once

#include "numtheory.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace alphaci {

/// Polynomial truncated at a fixed order N: coefficients are kept for
/// exponents 0..N and every operation discards exponents above N.
/// Immutable after construction. The formal variable is documentation
/// only; the same record serves t-series (Hilbert) and x-series
/// (characteristic classes).
class TruncatedIntSeries {
public:
    explicit TruncatedIntSeries(int order)
        : order_(check_order(order)), coeffs_(static_cast<std::size_t>(order) + 1)
    {
    }

    TruncatedIntSeries(int order, std::vector<Integer> coeffs)
        : order_(check_order(order)), coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() != static_cast<std::size_t>(order_) + 1)
            throw std::invalid_argument("TruncatedIntSeries: need exactly order+1 coefficients");
    }

    int order() const { return order_; }

    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Coefficient of t^j. Negative exponents are 0 by convention;
    /// j > order means the caller truncated too early and is a bug.
    const Integer& coefficient(int j) const
    {
        static const Integer zero{};
        if (j < 0)
            return zero;
        if (j > order_)
            throw std::out_of_range("coefficient: exponent beyond truncation order");
        return coeffs_[static_cast<std::size_t>(j)];
    }

    friend bool operator==(const TruncatedIntSeries& a, const TruncatedIntSeries& b) = default;

private:
    static int check_order(int order)
    {
        if (order < 0)
            throw std::invalid_argument("TruncatedIntSeries: order must be nonnegative");
        return order;
    }

    int order_;
    std::vector<Integer> coeffs_;
};

/// (1-t)^{-e} truncated at `order`; the coefficient of t^j is
/// binomial(j+e-1, j), built incrementally so no factorials are formed.
inline TruncatedIntSeries geom_inverse_pow(int e, int order)
{
    if (e < 0)
        throw std::invalid_argument("geom_inverse_pow: exponent must be nonnegative");
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (int j = 1; j <= order; ++j) {
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j) - 1] * (e + j - 1);
        c[static_cast<std::size_t>(j)] /= j; // exact
    }
    return {order, std::move(c)};
}

/// Cauchy product truncated at the common order. Mixed orders are rejected:
/// the caller must decide a single truncation order up front.
inline TruncatedIntSeries mul(const TruncatedIntSeries& a, const TruncatedIntSeries& b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("mul: series orders differ");
    const int n = a.order();
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs()[static_cast<std::size_t>(i)] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<std::size_t>(i + j)] +=
                a.coeffs()[static_cast<std::size_t>(i)] * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {n, std::move(c)};
}

/// Hilbert series of an n-dimensional complete intersection of multi-degree
/// d, truncated at `order`:
///
///   (1-t)^{-(n+k+1)} (1-t^{d_1}) ... (1-t^{d_k}).
///
/// The coefficient of t^j is dim H^0(X; O(j)), so every coefficient is a
/// nonnegative integer.
inline TruncatedIntSeries hilbert_series(int n, const std::vector<int>& degrees, int order)
{
    if (n < 1)
        throw std::invalid_argument("hilbert_series: dimension must be positive");
    for (int d : degrees)
        if (d < 1)
            throw std::invalid_argument("hilbert_series: degrees must be positive");
    const int k = static_cast<int>(degrees.size());
    TruncatedIntSeries base = geom_inverse_pow(n + k + 1, order);
    std::vector<Integer> c = base.coeffs();
    for (int d : degrees) {
        // multiply by (1 - t^d) in place; descending j reads pre-update values
        for (int j = order; j >= d; --j)
            c[static_cast<std::size_t>(j)] -= c[static_cast<std::size_t>(j - d)];
    }
    return {order, std::move(c)};
}

} // namespace alphaci
