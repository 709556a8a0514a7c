#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "hdx/error.hpp"

namespace hdx {

/// Exact non-overflowing-in-practice fraction used for Cheeger ratios and
/// expansion constants. Always stored reduced with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) {
            throw DomainError("rational with zero denominator");
        }
        normalize();
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string to_string() const {
        if (den_ == 1) {
            return std::to_string(num_);
        }
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        const std::int64_t n1 = g1 ? a.num_ / g1 : a.num_;
        const std::int64_t d2 = g1 ? b.den_ / g1 : b.den_;
        const std::int64_t n2 = g2 ? b.num_ / g2 : b.num_;
        const std::int64_t d1 = g2 ? a.den_ / g2 : a.den_;
        return Rational(n1 * n2, d1 * d2);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace hdx
