#ifndef OPERLAB_RAT_HPP
#define OPERLAB_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace operlab {

using Int = boost::multiprecision::cpp_int;

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

/// Exact rational number.  Invariant: gcd(|num|, den) = 1 and den >= 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long n) : num_(n), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {}
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw DivisionByZero();
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    Rat inv() const {
        if (num_ == 0) throw DivisionByZero();
        return Rat(den_, num_);
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    /// Serializes as "p/q", or "p" when the denominator is 1.
    std::string str() const;

    /// Parses "p", "p/q", or "-p/q".
    static Rat parse(const std::string& s);

private:
    void reduce() {
        if (den_ == 0) throw DivisionByZero();
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    Int num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace operlab

#endif
