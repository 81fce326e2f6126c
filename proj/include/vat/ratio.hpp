#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "vat/errors.hpp"

namespace vat {

// Exact non-negative rational. Stored in lowest terms with den >= 1.
// All comparisons cross-multiply in 128 bits; no floating point anywhere.
class Ratio {
public:
    Ratio() : num_(0), den_(1) {}

    Ratio(long long num, long long den) {
        if (num < 0 || den <= 0) {
            throw PreconditionError("ratio requires num >= 0 and den >= 1, got " +
                                    std::to_string(num) + "/" + std::to_string(den));
        }
        const long long g = gcd_ll(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    static Ratio from_int(long long value) { return Ratio(value, 1); }

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }

    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Ratio& a, const Ratio& b) noexcept { return !(a == b); }
    friend bool operator<(const Ratio& a, const Ratio& b) noexcept {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Ratio& a, const Ratio& b) noexcept { return b < a; }
    friend bool operator<=(const Ratio& a, const Ratio& b) noexcept { return !(b < a); }
    friend bool operator>=(const Ratio& a, const Ratio& b) noexcept { return !(a < b); }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        return make_reduced(static_cast<__int128>(a.num_) * b.den_ +
                                static_cast<__int128>(b.num_) * a.den_,
                            static_cast<__int128>(a.den_) * b.den_);
    }
    friend Ratio operator*(const Ratio& a, const Ratio& b) {
        return make_reduced(static_cast<__int128>(a.num_) * b.num_,
                            static_cast<__int128>(a.den_) * b.den_);
    }
    // Division by zero is a precondition violation, as is a negative result.
    friend Ratio operator/(const Ratio& a, const Ratio& b) {
        if (b.num_ == 0) throw PreconditionError("division of ratio by zero");
        return make_reduced(static_cast<__int128>(a.num_) * b.den_,
                            static_cast<__int128>(a.den_) * b.num_);
    }
    friend Ratio operator-(const Ratio& a, const Ratio& b) {
        const __int128 num =
            static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
        if (num < 0) throw PreconditionError("ratio subtraction would be negative");
        return make_reduced(num, static_cast<__int128>(a.den_) * b.den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Ratio& r) {
        return os << r.num_ << '/' << r.den_;
    }

private:
    static long long gcd_ll(long long a, long long b) noexcept {
        while (b != 0) {
            const long long t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static __int128 gcd_128(__int128 a, __int128 b) noexcept {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static Ratio make_reduced(__int128 num, __int128 den) {
        const __int128 g = gcd_128(num, den);
        num /= g;
        den /= g;
        constexpr __int128 kMax = INT64_MAX;
        if (num > kMax || den > kMax) throw Error("rational overflow");
        Ratio r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    long long num_;
    long long den_;
};

}  // namespace vat
