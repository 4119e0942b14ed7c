#pragma once

#include <turan/rational.hpp>

#include <cmath>
#include <optional>
#include <ostream>
#include <string>

namespace turan {

/// Number of the form a + b*sqrt(3) with rational a, b. Every closed-form
/// density this project certifies lives in this field, so bounds and
/// classifications can be compared exactly instead of through doubles.
class Root3 {
public:
    Root3() : a_(0), b_(0) {}
    Root3(Rat a) : a_(a), b_(0) {}
    Root3(long long a) : a_(Rat(a)), b_(0) {}
    Root3(Rat a, Rat b) : a_(a), b_(b) {}

    const Rat& rational_part() const { return a_; }
    const Rat& root_part() const { return b_; }
    bool is_rational() const { return b_ == Rat(0); }

    double to_double() const {
        constexpr double sqrt3 = 1.7320508075688772935;
        return a_.to_double() + b_.to_double() * sqrt3;
    }

    std::string to_string() const {
        if (b_ == Rat(0)) return a_.to_string();
        std::string s;
        if (a_ != Rat(0)) s += a_.to_string() + " + ";
        s += "(" + b_.to_string() + ")*sqrt(3)";
        return s;
    }

    friend Root3 operator+(const Root3& x, const Root3& y) { return Root3(x.a_ + y.a_, x.b_ + y.b_); }
    friend Root3 operator-(const Root3& x, const Root3& y) { return Root3(x.a_ - y.a_, x.b_ - y.b_); }
    friend Root3 operator*(const Root3& x, const Root3& y) {
        return Root3(x.a_ * y.a_ + Rat(3) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }

    /// Exact sign of a + b*sqrt(3): compare a^2 against 3 b^2 when the two
    /// halves pull in opposite directions (sqrt(3) is irrational, so mixed
    /// terms never cancel to zero).
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rat lhs = a_ * a_, rhs = Rat(3) * b_ * b_;
        if (lhs == rhs) fail(ErrorKind::InvariantViolation, "sqrt(3) cannot satisfy a^2 = 3b^2");
        // |a| dominates |b*sqrt(3)| exactly when a^2 > 3 b^2.
        return lhs > rhs ? sa : sb;
    }

    friend bool operator==(const Root3& x, const Root3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Root3& x, const Root3& y) { return !(x == y); }
    friend bool operator<(const Root3& x, const Root3& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Root3& x, const Root3& y) { return y < x; }
    friend bool operator<=(const Root3& x, const Root3& y) { return !(y < x); }
    friend bool operator>=(const Root3& x, const Root3& y) { return !(x < y); }

    friend std::ostream& operator<<(std::ostream& os, const Root3& v) { return os << v.to_string(); }

private:
    Rat a_;
    Rat b_;
};

} // namespace turan
