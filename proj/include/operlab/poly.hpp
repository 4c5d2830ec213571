#ifndef OPERLAB_POLY_HPP
#define OPERLAB_POLY_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "operlab/rat.hpp"

namespace operlab {

/// Dense univariate polynomial over a commutative ring C.
/// Invariant: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient list and degree -1.
template <class C>
class PolyT {
public:
    PolyT() = default;
    PolyT(C c) { coeffs_.push_back(std::move(c)); trim(); }
    PolyT(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    PolyT(std::initializer_list<C> coeffs) : coeffs_(coeffs) { trim(); }

    static PolyT zero() { return PolyT(); }
    static PolyT one() { return PolyT(C(1)); }
    /// The monomial c * x^k.
    static PolyT monomial(C c, int k) {
        if (c.is_zero()) return PolyT();
        std::vector<C> v(k + 1, C(0));
        v[k] = std::move(c);
        return PolyT(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& operator[](int i) const {
        static const C kZero = C(0);
        return (i >= 0 && i <= degree()) ? coeffs_[i] : kZero;
    }
    const C& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    PolyT operator-() const {
        PolyT r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        std::vector<C> v(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return PolyT(std::move(v));
    }
    friend PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }
    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        if (a.is_zero() || b.is_zero()) return PolyT();
        std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return PolyT(std::move(v));
    }
    friend PolyT operator*(const C& c, const PolyT& p) { return PolyT(c) * p; }

    PolyT& operator+=(const PolyT& o) { *this = *this + o; return *this; }
    PolyT& operator-=(const PolyT& o) { *this = *this - o; return *this; }
    PolyT& operator*=(const PolyT& o) { *this = *this * o; return *this; }

    friend bool operator==(const PolyT& a, const PolyT& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

    C eval(const C& x) const {
        C acc(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
        return acc;
    }

    PolyT derivative() const {
        if (coeffs_.size() <= 1) return PolyT();
        std::vector<C> v(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = C(static_cast<long>(i)) * coeffs_[i];
        return PolyT(std::move(v));
    }

    PolyT pow(int e) const {
        PolyT r = one();
        PolyT b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            b *= b;
        }
        return r;
    }

    /// Euclidean division; requires C to be a field.
    static std::pair<PolyT, PolyT> divmod(const PolyT& a, const PolyT& b) {
        if (b.is_zero()) throw DivisionByZero();
        PolyT rem = a;
        std::vector<C> q(std::max(0, a.degree() - b.degree() + 1), C(0));
        C lead_inv = C(1) / b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            C c = rem.leading() * lead_inv;
            int k = rem.degree() - b.degree();
            rem -= monomial(c, k) * b;
            q[k] = c;
        }
        return {PolyT(std::move(q)), rem};
    }

    friend PolyT operator/(const PolyT& a, const PolyT& b) { return divmod(a, b).first; }
    friend PolyT operator%(const PolyT& a, const PolyT& b) { return divmod(a, b).second; }

    /// Leading coefficient scaled to 1; requires C to be a field.
    PolyT monic() const {
        if (is_zero()) return *this;
        C inv = C(1) / leading();
        PolyT r = *this;
        for (auto& c : r.coeffs_) c = c * inv;
        return r;
    }

    /// Monic gcd via the Euclidean algorithm; requires C to be a field.
    static PolyT gcd(PolyT a, PolyT b) {
        while (!b.is_zero()) {
            PolyT r = a % b;
            a = std::move(b);
            b = std::move(r).monic();
        }
        return a.monic();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

using Poly = PolyT<Rat>;

/// Renders with the given variable name, e.g. "t^2 - 1/2".
std::string poly_str(const Poly& p, const std::string& var = "t");

}  // namespace operlab

#endif
