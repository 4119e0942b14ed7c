#pragma once

#include <turan/error.hpp>

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace turan {

/// Exact rational on 64-bit words. Every edge count and binomial this
/// project touches stays far below the int64 range (the largest
/// denominators in play are around C(120,3)), so arbitrary precision is
/// not needed; intermediates go through __int128 and overflow raises
/// instead of wrapping.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long value) : num_(value), den_(1) {}
    Rat(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) fail(ErrorKind::InvariantViolation, "rational with zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 num = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 den = i128(a.den_) * b.den_;
        return from_i128(num, den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num_, b.den_); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) fail(ErrorKind::InvariantViolation, "rational division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

private:
    using int128 = __int128;
    static int128 i128(long long v) { return static_cast<int128>(v); }

    static Rat from_i128(int128 num, int128 den) {
        if (den < 0) { num = -num; den = -den; }
        int128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        constexpr int128 lo = -static_cast<int128>(INT64_MAX), hi = static_cast<int128>(INT64_MAX);
        if (num < lo || num > hi || den > hi)
            fail(ErrorKind::Overflow, "rational arithmetic exceeded 64-bit range");
        Rat r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    static int128 gcd128(int128 a, int128 b) {
        while (b != 0) { int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_;
    long long den_;
};

/// Binomial coefficient as an exact 64-bit value; raises on overflow
/// rather than wrapping. Safe through roughly C(60,30).
inline long long binomial(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    __int128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > static_cast<__int128>(INT64_MAX))
            fail(ErrorKind::Overflow, "binomial coefficient exceeded 64-bit range");
    }
    return static_cast<long long>(acc);
}

} // namespace turan
