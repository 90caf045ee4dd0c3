#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hardy {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in rational addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in rational multiplication");
    return r;
}

} // namespace detail

// Exact rational on checked 64-bit integers. Always normalized: den > 0,
// gcd(|num|, den) == 1. Overflow throws std::overflow_error instead of wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Accepts "7", "-3/4", "9/7". Whitespace is not allowed.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(std::stoll(std::string(text)));
            return Rational(std::stoll(std::string(text.substr(0, slash))),
                            std::stoll(std::string(text.substr(slash + 1))));
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("rational literal out of range: " + std::string(text));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed rational literal: " + std::string(text));
        }
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        const std::int64_t lb = b.den_ / g;
        return Rational(detail::checked_add(detail::checked_mul(a.num_, lb),
                                            detail::checked_mul(b.num_, a.den_ / g)),
                        detail::checked_mul(a.den_, lb));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        return Rational(detail::checked_mul(a.num_ / g1, b.num_ / g2),
                        detail::checked_mul(a.den_ / g2, b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        // Exact: compare a.num*b.den < b.num*a.den with checked products.
        return detail::checked_mul(a.num_, b.den_) < detail::checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void normalize() {
        if (den_ < 0) {
            if (num_ == std::numeric_limits<std::int64_t>::min() ||
                den_ == std::numeric_limits<std::int64_t>::min())
                throw std::overflow_error("integer overflow normalizing rational sign");
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace hardy
