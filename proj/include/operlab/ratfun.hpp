#ifndef OPERLAB_RATFUN_HPP
#define OPERLAB_RATFUN_HPP

#include <string>
#include <utility>

#include "operlab/poly.hpp"

namespace operlab {

/// Exact rational function in one variable over Q.
/// Invariant: gcd(num, den) = 1 and den is monic; equality is syntactic.
class RatFun {
public:
    RatFun() : num_(), den_(Poly::one()) {}
    RatFun(Rat c) : num_(Poly(std::move(c))), den_(Poly::one()) {}
    RatFun(long c) : RatFun(Rat(c)) {}
    RatFun(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFun operator-() const { RatFun r; r.num_ = -num_; r.den_ = den_; return r; }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }

    RatFun inv() const {
        if (is_zero()) throw DivisionByZero();
        return RatFun(den_, num_);
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    /// d/dt via the quotient rule, reduced.
    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// Evaluates at a point where the denominator does not vanish.
    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d.is_zero()) throw DivisionByZero();
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var = "t") const;

private:
    void reduce() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) { den_ = Poly::one(); return; }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rat lead_inv = Rat(1) / den_.leading();
        if (!lead_inv.is_one()) {
            num_ = Poly(lead_inv) * num_;
            den_ = den_.monic();
        }
    }

    Poly num_, den_;
};

}  // namespace operlab

#endif
