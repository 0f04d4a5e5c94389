#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "scae/errors.hpp"

namespace scae {

/**
 * @brief A root of unity e^{2 pi i num/den}, stored exactly as a reduced
 * fraction of a turn in [0, 1).
 *
 * Braiding eigenvalues, twists, monodromies and the grading roots are all
 * single roots of unity, so this type never needs floating point. Equality is
 * structural because the representative is canonical.
 */
class RationalAngle {
public:
    constexpr RationalAngle() = default;

    /// Throws InputError when den == 0. Negative denominators are folded into
    /// the numerator.
    RationalAngle(std::int64_t num, std::int64_t den)
    {
        if (den == 0) {
            throw InputError("RationalAngle: invalid denominator 0");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        num %= den;
        if (num < 0) {
            num += den;
        }
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    static RationalAngle zero() { return {}; }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    /// Multiplicative order of the root of unity.
    std::int64_t order() const { return den_; }

    /// Product of roots of unity.
    friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b)
    {
        const std::int64_t l = std::lcm(a.den_, b.den_);
        return RationalAngle(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
    }

    /// Inverse root of unity.
    RationalAngle operator-() const { return RationalAngle(-num_, den_); }

    friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b)
    {
        return a + (-b);
    }

    /// Integer power of the root of unity.
    friend RationalAngle operator*(std::int64_t n, const RationalAngle& a)
    {
        // reduce n first so the product stays small
        const std::int64_t r = ((n % a.den_) + a.den_) % a.den_;
        return RationalAngle(r * a.num_, a.den_);
    }

    friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
    friend auto operator<=>(const RationalAngle& a, const RationalAngle& b)
    {
        // numerical order on [0, 1)
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    /// "p/q" form; the unit angle prints as "0/1".
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// Symbolic form: 1, -1, i, -i, otherwise exp(2 pi i p/q).
    std::string symbol() const
    {
        if (den_ == 1) return "1";
        if (den_ == 2) return "-1";
        if (den_ == 4) return num_ == 1 ? "i" : "-i";
        return "exp(2 pi i " + str() + ")";
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const RationalAngle& a) { return os << a.str(); }

inline std::int64_t angle_order(const RationalAngle& a) { return a.order(); }

inline bool is_primitive_root(const RationalAngle& a, std::int64_t m) { return a.order() == m; }

namespace detail {
inline std::int64_t parse_int(const std::string& text, const std::string& context)
{
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::logic_error&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw InputError("cannot parse angle '" + context + "'");
    }
    return value;
}
} // namespace detail

/// Parses "p/q" (turns), a bare integer, or one of the symbols 1, -1, i, -i.
inline RationalAngle parse_angle(const std::string& text)
{
    if (text == "1") return RationalAngle(0, 1);
    if (text == "-1") return RationalAngle(1, 2);
    if (text == "i") return RationalAngle(1, 4);
    if (text == "-i") return RationalAngle(3, 4);
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return RationalAngle(detail::parse_int(text, text), 1);
    }
    return RationalAngle(detail::parse_int(text.substr(0, slash), text),
                         detail::parse_int(text.substr(slash + 1), text));
}

} // namespace scae
