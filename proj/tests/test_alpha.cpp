#include <alphaci/alpha.hpp>
#include <alphaci/series.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <vector>

using alphaci::alpha;
using alphaci::alpha_abstract;
using alphaci::alpha_all_backends;
using alphaci::alpha_fr;
using alphaci::alpha_hilbert;
using alphaci::alpha_n1_closed;
using alphaci::alpha_partition_sum;
using alphaci::alpha_sign_sum;
using alphaci::AlphaBackend;
using alphaci::binomial_mod2;
using alphaci::fr_polynomial;
using alphaci::FrPolynomial;
using alphaci::Gf2Poly;

namespace {

// all sorted tuples with k entries in [lo, hi], ascending
void for_each_sorted_tuple(int k, int lo, int hi, std::vector<int>& cur,
                           const std::function<void(const std::vector<int>&)>& fn)
{
    if (k == 0) {
        fn(cur);
        return;
    }
    const int start = cur.empty() ? lo : std::max(lo, cur.back());
    for (int d = start; d <= hi; ++d) {
        cur.push_back(d);
        for_each_sorted_tuple(k - 1, lo, hi, cur, fn);
        cur.pop_back();
    }
}

void for_each_multiset(int max_k, int lo, int hi,
                       const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> cur;
    for (int k = 0; k <= max_k; ++k)
        for_each_sorted_tuple(k, lo, hi, cur, fn);
}

bool even_evens(const std::vector<int>& d)
{
    int evens = 0;
    for (int x : d)
        evens += (x % 2 == 0);
    return evens % 2 == 0;
}

FrPolynomial fr_closed_form(int r)
{
    FrPolynomial f;
    for (int j = 0; j <= r; ++j)
        if (binomial_mod2(r + j, 2LL * j + 1))
            f.set_coeff(static_cast<std::size_t>(j), true);
    return f;
}

} // namespace

TEST_CASE("f_r polynomials")
{
    CHECK(fr_polynomial(0).is_zero());
    CHECK(fr_polynomial(1) == Gf2Poly::one());
    CHECK(fr_polynomial(2) == Gf2Poly::monomial(1));
    CHECK(fr_polynomial(4) == Gf2Poly::monomial(3));
    CHECK(fr_polynomial(5).to_string() == "T^4 + T^2 + 1");

    for (int r = 1; r <= 200; ++r) {
        const auto f = fr_polynomial(static_cast<unsigned>(r));
        CHECK(f == fr_closed_form(r));
        CHECK(f.degree() == r - 1);
        // odd r: only even powers; even r: only odd powers
        for (long long j = 0; j <= f.degree(); ++j)
            if (f.coeff(static_cast<std::size_t>(j)))
                CHECK((j + r) % 2 == 1);
    }
}

TEST_CASE("alpha_sign_sum examples")
{
    CHECK(alpha_sign_sum(1, {2, 2}).value == 1);
    CHECK(alpha_sign_sum(5, {1, 1, 1, 1}).value == 0);
    CHECK(alpha_sign_sum(5, {3, 3}).value == 0);
    CHECK(alpha_sign_sum(5, {7}).value == 1);
    CHECK(alpha_sign_sum(5, {2}).value == 0); // odd parity falls back to 0
    CHECK(alpha_sign_sum(1, {2, 2}).backend == AlphaBackend::sign_sum);
    CHECK_THROWS_AS(alpha_sign_sum(5, {0}), std::invalid_argument);
}

TEST_CASE("alpha_hilbert examples")
{
    CHECK(alpha_hilbert(1, {3}).value == 1);
    CHECK(alpha_hilbert(1, {1}).value == 0); // m < 0: the 2-sphere
    CHECK(alpha_hilbert(5, {1, 1}).value == 0);
    CHECK(alpha_hilbert(9, {2, 2, 1}).value == alpha_sign_sum(9, {2, 2, 1}).value);
    CHECK(alpha_hilbert(5, {7}).value == 1);
}

TEST_CASE("alpha_hilbert equals the integer Hilbert series reduced mod 2")
{
    // independent route: exact integer coefficients, reduced afterwards
    for (int n : {1, 5, 9}) {
        for_each_multiset(3, 1, 9, [&](const std::vector<int>& d) {
            const int k = static_cast<int>(d.size());
            long long two_m = -n - k - 1;
            for (int x : d)
                two_m += x;
            if (two_m % 2 != 0 || two_m < 0)
                return;
            const int m = static_cast<int>(two_m / 2);
            const auto h = alphaci::hilbert_series(n, d, m);
            CHECK(alpha_hilbert(n, d).value == static_cast<int>(h.coefficient(m) % 2));
        });
    }
}

TEST_CASE("alpha_hilbert doubled-variable form")
{
    // The symmetric Laurent presentation of the same coefficient: after
    // clearing denominators, alpha is the t^{2m}-coefficient of
    // (1-t^2)^{-(n+k+1)} (1+t^{2 d_1}) ... (1+t^{2 d_k}). Built here over
    // exact integers in the doubled variable and reduced mod 2.
    for (int n : {1, 5, 9}) {
        for_each_multiset(3, 1, 7, [&](const std::vector<int>& d) {
            const int k = static_cast<int>(d.size());
            long long two_m = -n - k - 1;
            for (int x : d)
                two_m += x;
            if (two_m % 2 != 0 || two_m < 0)
                return;
            const int order = static_cast<int>(two_m);
            std::vector<alphaci::Integer> c(static_cast<std::size_t>(order) + 1);
            const auto base = alphaci::geom_inverse_pow(n + k + 1, order / 2);
            for (int j = 0; 2 * j <= order; ++j)
                c[static_cast<std::size_t>(2 * j)] = base.coefficient(j);
            for (int x : d) {
                for (int j = order; j >= 2 * x; --j)
                    c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - 2 * x)];
            }
            CHECK(static_cast<int>(c[static_cast<std::size_t>(order)] % 2) ==
                  alpha_hilbert(n, d).value);
        });
    }
}

TEST_CASE("alpha_partition_sum examples")
{
    CHECK(alpha_partition_sum(1, {2, 2}).value == 1);
    CHECK(alpha_partition_sum(5, {3, 3}).value == 0);

    // k = 1 collapses to the single binomial C((n+d)/2, n+1) when n+d is even
    for (int n : {1, 5, 9, 13}) {
        for (int d = 1; d <= 12; ++d) {
            const int expect = (n + d) % 2 == 0 ? binomial_mod2((n + d) / 2, n + 1) : 0;
            CHECK(alpha_partition_sum(n, {d}).value == expect);
        }
    }
}

TEST_CASE("alpha_fr examples")
{
    CHECK(alpha_fr(1, {2, 2}).value == 1);
    CHECK(alpha_fr(5, {1, 1, 1, 1}).value == 0);

    // T^0-coefficient of prod f_{d_i} is d_tot mod 2
    for_each_multiset(3, 1, 8, [&](const std::vector<int>& d) {
        long long d_tot = 1;
        for (int x : d)
            d_tot *= x;
        CHECK(alpha_fr(-1, d).value == static_cast<int>(d_tot % 2));
    });
}

TEST_CASE("dispatcher")
{
    const auto a = alpha(5, {3, 3});
    CHECK(a.value == 0);
    CHECK(a.backend == AlphaBackend::consensus);
    CHECK(alpha(1, {2, 2}).value == 1);
    CHECK(alpha(5, {1, 1}).value == 0);
    CHECK(alpha(5, {}).value == 0); // CP^5
    CHECK(alpha_all_backends(1, {2, 2}).size() == 5);
    CHECK(alpha_all_backends(5, {3, 3}).size() == 4);

    CHECK_THROWS_AS(alpha(3, {2, 2}), std::invalid_argument);  // n = 3 (mod 4)
    CHECK_THROWS_AS(alpha(2, {4}), std::invalid_argument);     // even n
    CHECK_THROWS_AS(alpha(5, {2}), std::invalid_argument);     // not spin
    CHECK_THROWS_AS(alpha(5, {0, 2}), std::invalid_argument);  // nonpositive degree
}

TEST_CASE("backend agreement, padding and the half-size form across the box")
{
    for (int n : {1, 5, 9, 13}) {
        for_each_multiset(4, 1, 12, [&](const std::vector<int>& d) {
            if (!even_evens(d))
                return;
            const int s = alpha_sign_sum(n, d).value;
            CHECK(s == alpha_hilbert(n, d).value);
            CHECK(s == alpha_partition_sum(n, d).value);
            CHECK(s == alpha_fr(n, d).value);
            CHECK(s == alphaci::detail::sign_sum_half(n, d));
            std::vector<int> padded = d;
            padded.push_back(1);
            CHECK(s == alpha_sign_sum(n, padded).value);
            CHECK(s == alpha_fr(n, padded).value);
        });
    }
}

TEST_CASE("alpha_abstract lemma values")
{
    CHECK(alpha_abstract(-1, {2, 3}).value == 0);
    CHECK(alpha_abstract(-1, {3, 5}).value == 1);
    CHECK(alpha_abstract(7, {0, 4}).value == 0);
    CHECK(alpha_abstract(-5, {3, 3}).value == 0); // n < -1
    CHECK(alpha_abstract(1, {2, 2}).value == 1);  // matches the geometric value

    // alpha_n(empty) = 1 iff n = -1
    for (int n = -6; n <= 14; ++n)
        CHECK(alpha_abstract(n, {}).value == (n == -1 ? 1 : 0));
}

TEST_CASE("alpha_abstract sign flips and the recursion identity")
{
    for (int n = -3; n <= 9; ++n) {
        for (long long d1 = -5; d1 <= 5; ++d1) {
            for (long long d2 = d1; d2 <= 5; ++d2) {
                for (const auto& rest : {std::vector<long long>{}, {3}, {2, 4}}) {
                    std::vector<long long> d{d1, d2};
                    d.insert(d.end(), rest.begin(), rest.end());

                    std::vector<long long> flipped{-d1, d2};
                    flipped.insert(flipped.end(), rest.begin(), rest.end());
                    CHECK(alpha_abstract(n, d).value == alpha_abstract(n, flipped).value);

                    std::vector<long long> plus{d1 + d2};
                    plus.insert(plus.end(), rest.begin(), rest.end());
                    std::vector<long long> minus{d1 - d2};
                    minus.insert(minus.end(), rest.begin(), rest.end());
                    const int rhs =
                        alpha_abstract(n + 1, plus).value ^ alpha_abstract(n + 1, minus).value;
                    CHECK(alpha_abstract(n, d).value == rhs);
                }
            }
        }
    }
}

TEST_CASE("n = 1 closed form")
{
    CHECK(alpha_n1_closed({3}).value == 1);
    CHECK(alpha_n1_closed({1}).value == 0);
    CHECK(alpha_n1_closed({2, 2}).value == 1);
    CHECK(alpha_n1_closed({2, 4}).value == 0);  // nu_2 = 3
    CHECK(alpha_n1_closed({3, 5}).value == 0);  // 15 = -1 (mod 8)
    CHECK(alpha_n1_closed({5}).value == 1);     // 5 = -3 (mod 8)
    CHECK_THROWS_AS(alpha_n1_closed({2}), std::invalid_argument);
    CHECK_THROWS_AS(alpha_n1_closed({2, 3}), std::invalid_argument);

    // against all four general backends
    for_each_multiset(3, 1, 10, [&](const std::vector<int>& d) {
        if (!even_evens(d))
            return;
        CHECK(alpha_n1_closed(d).value == alpha(1, d).value);
    });
}
