#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace fatcolor {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

template <typename Int>
Int abs_value(const Int& x)
{
    return x < 0 ? Int(-x) : x;
}

template <typename Int>
Int gcd_abs(Int a, Int b)
{
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("rational arithmetic overflow");
    return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("rational arithmetic overflow");
    return out;
}

inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }

} // namespace detail

/// Exact fraction kept in lowest terms with a positive denominator.
///
/// Instantiated twice: `Rational` (64-bit, overflow-checked) carries the
/// coloring parameters, `BigRational` carries matrix entries.
template <typename Int>
class BasicRational {
public:
    BasicRational() : num_(0), den_(1) {}
    BasicRational(Int num) : num_(std::move(num)), den_(1) {}  // NOLINT: implicit from integer
    BasicRational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    template <typename I, typename = std::enable_if_t<std::is_integral_v<I> && !std::is_same_v<I, Int>>>
    BasicRational(I num) : num_(static_cast<Int>(num)), den_(1) {}  // NOLINT

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend BasicRational operator+(const BasicRational& a, const BasicRational& b)
    {
        Int g = detail::gcd_abs(a.den_, b.den_);
        Int da = a.den_ / g;
        Int db = b.den_ / g;
        return BasicRational(detail::checked_add(detail::checked_mul(a.num_, db), detail::checked_mul(b.num_, da)),
                             detail::checked_mul(a.den_, db));
    }

    friend BasicRational operator-(const BasicRational& a) { return BasicRational(Int(-a.num_), a.den_, raw_tag{}); }
    friend BasicRational operator-(const BasicRational& a, const BasicRational& b) { return a + (-b); }

    friend BasicRational operator*(const BasicRational& a, const BasicRational& b)
    {
        Int g1 = detail::gcd_abs(a.num_, b.den_);
        Int g2 = detail::gcd_abs(b.num_, a.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return BasicRational(detail::checked_mul(Int(a.num_ / g1), Int(b.num_ / g2)),
                             detail::checked_mul(Int(a.den_ / g2), Int(b.den_ / g1)), raw_tag{});
    }

    friend BasicRational operator/(const BasicRational& a, const BasicRational& b)
    {
        if (b.num_ == 0)
            throw std::domain_error("rational division by zero");
        return a * BasicRational(b.den_, b.num_);
    }

    BasicRational& operator+=(const BasicRational& o) { return *this = *this + o; }
    BasicRational& operator-=(const BasicRational& o) { return *this = *this - o; }
    BasicRational& operator*=(const BasicRational& o) { return *this = *this * o; }
    BasicRational& operator/=(const BasicRational& o) { return *this = *this / o; }

    friend bool operator==(const BasicRational& a, const BasicRational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const BasicRational& a, const BasicRational& b)
    {
        Int lhs = detail::checked_mul(a.num_, b.den_);
        Int rhs = detail::checked_mul(b.num_, a.den_);
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Reduced `r/s` form; integers keep the `/1` suffix.
    std::string str() const
    {
        std::string out;
        if constexpr (std::is_same_v<Int, BigInt>)
            out = num_.str() + "/" + den_.str();
        else
            out = std::to_string(num_) + "/" + std::to_string(den_);
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicRational& r) { return os << r.str(); }

private:
    struct raw_tag {};
    BasicRational(Int num, Int den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize()
    {
        if (den_ == 0)
            throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = detail::gcd_abs(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    Int num_;
    Int den_;
};

using Rational = BasicRational<std::int64_t>;
using BigRational = BasicRational<BigInt>;

inline BigRational to_big(const Rational& r) { return BigRational(BigInt(r.num()), BigInt(r.den())); }

/// Parses `r/s`, `-r/s` or a bare integer. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

} // namespace fatcolor
