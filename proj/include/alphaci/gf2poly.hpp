#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace alphaci {

/// Dense bit-packed polynomial over Z_2. Bit j of word j/64 is the
/// coefficient of T^j. Trailing zero words are trimmed so that equal
/// polynomials compare equal.
class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return {}; }

    static Gf2Poly one() { return monomial(0); }

    static Gf2Poly monomial(std::size_t j)
    {
        Gf2Poly p;
        p.set_coeff(j, true);
        return p;
    }

    bool coeff(std::size_t j) const
    {
        const std::size_t w = j / 64;
        if (w >= words_.size())
            return false;
        return (words_[w] >> (j % 64)) & 1u;
    }

    void set_coeff(std::size_t j, bool v)
    {
        const std::size_t w = j / 64;
        if (w >= words_.size()) {
            if (!v)
                return;
            words_.resize(w + 1, 0);
        }
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        if (v)
            words_[w] |= bit;
        else
            words_[w] &= ~bit;
        if (!v)
            trim();
    }

    bool is_zero() const { return words_.empty(); }

    /// Degree of the polynomial, -1 for the zero polynomial.
    long long degree() const
    {
        if (words_.empty())
            return -1;
        const std::uint64_t top = words_.back();
        int bit = 63;
        while (((top >> bit) & 1u) == 0)
            --bit;
        return static_cast<long long>((words_.size() - 1) * 64 + bit);
    }

    Gf2Poly& operator^=(const Gf2Poly& other)
    {
        if (other.words_.size() > words_.size())
            words_.resize(other.words_.size(), 0);
        for (std::size_t i = 0; i < other.words_.size(); ++i)
            words_[i] ^= other.words_[i];
        trim();
        return *this;
    }

    friend Gf2Poly operator^(Gf2Poly a, const Gf2Poly& b)
    {
        a ^= b;
        return a;
    }

    /// Multiplication by T^s.
    Gf2Poly shifted(std::size_t s) const
    {
        if (words_.empty())
            return {};
        Gf2Poly r;
        const std::size_t word_shift = s / 64;
        const unsigned bit_shift = s % 64;
        r.words_.assign(words_.size() + word_shift + 1, 0);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            r.words_[i + word_shift] |= words_[i] << bit_shift;
            if (bit_shift != 0)
                r.words_[i + word_shift + 1] |= words_[i] >> (64 - bit_shift);
        }
        r.trim();
        return r;
    }

    friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) = default;

    friend Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b)
    {
        Gf2Poly r;
        const long long db = b.degree();
        for (long long j = 0; j <= db; ++j)
            if (b.coeff(static_cast<std::size_t>(j)))
                r ^= a.shifted(static_cast<std::size_t>(j));
        return r;
    }

    /// Product with all terms of exponent > max_deg dropped.
    friend Gf2Poly mul_truncated(const Gf2Poly& a, const Gf2Poly& b, std::size_t max_deg)
    {
        Gf2Poly r = mul(a, b);
        r.truncate(max_deg);
        return r;
    }

    /// Drop every term of exponent > max_deg.
    void truncate(std::size_t max_deg)
    {
        const std::size_t w = max_deg / 64;
        if (w + 1 < words_.size())
            words_.resize(w + 1);
        if (w < words_.size()) {
            const unsigned keep = max_deg % 64 + 1;
            if (keep < 64)
                words_[w] &= (std::uint64_t{1} << keep) - 1;
        }
        trim();
    }

    /// "T^4 + T^2 + 1" style rendering, highest power first; "0" when zero.
    std::string to_string(const std::string& var = "T") const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (long long j = degree(); j >= 0; --j) {
            if (!coeff(static_cast<std::size_t>(j)))
                continue;
            if (!s.empty())
                s += " + ";
            if (j == 0)
                s += "1";
            else if (j == 1)
                s += var;
            else
                s += var + "^" + std::to_string(j);
        }
        return s;
    }

private:
    void trim()
    {
        while (!words_.empty() && words_.back() == 0)
            words_.pop_back();
    }

    std::vector<std::uint64_t> words_;
};

} // namespace alphaci
