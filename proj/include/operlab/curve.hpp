#ifndef OPERLAB_CURVE_HPP
#define OPERLAB_CURVE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "operlab/ratfun.hpp"

namespace operlab {

struct NegativeGrade : std::runtime_error {
    NegativeGrade() : std::runtime_error("grade must be non-negative") {}
};
struct PoleOutsideD : std::runtime_error {
    PoleOutsideD() : std::runtime_error("function has a pole or zero outside the puncture set") {}
};
struct InvalidUnit : std::runtime_error {
    InvalidUnit() : std::runtime_error("derivation unit must be nonzero with divisor supported on D") {}
};
struct GradeExceeded : std::runtime_error {
    GradeExceeded() : std::runtime_error("section does not lie in the requested graded piece") {}
};

/// A point of P^1: either a rational value or the point at infinity.
struct Puncture {
    bool infinite = false;
    Rat value;  // meaningful only when !infinite

    static Puncture inf() { return Puncture{true, Rat(0)}; }
    static Puncture at(Rat v) { return Puncture{false, std::move(v)}; }

    friend bool operator==(const Puncture& a, const Puncture& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
};

/// P^1 minus a finite nonempty set of punctures D, with infinity in D
/// so that polynomials are sections and dt trivializes the canonical bundle.
class PuncturedCurve {
public:
    explicit PuncturedCurve(std::vector<Puncture> punctures);

    const std::vector<Puncture>& punctures() const { return punctures_; }
    /// Finite punctures in stored order.
    const std::vector<Rat>& finite_punctures() const { return finite_; }
    int num_punctures() const { return static_cast<int>(punctures_.size()); }
    int genus() const { return 0; }

    /// dim k^d[X] = d|D| - g + 1 with g = 0.
    int space_dim(int d) const;

    /// Pole order of f at the puncture (negative for a zero).
    int pole_order(const RatFun& f, const Puncture& p) const;

    /// Minimal d with f in k^d[X]; throws PoleOutsideD if f has a pole off X's punctures.
    int grade(const RatFun& f) const;

    /// Coordinates of f in the space_basis(d) order; throws GradeExceeded when grade(f) > d.
    std::vector<Rat> coordinates(const RatFun& f, int d) const;

private:
    std::vector<Puncture> punctures_;
    std::vector<Rat> finite_;
};

/// Ordered basis of k^d[X]: {1} then {t^m} then {(t-a)^{-m}} per finite puncture.
struct SectionSpace {
    const PuncturedCurve* curve;
    int d;
    std::vector<RatFun> basis;
};

SectionSpace space_basis(const PuncturedCurve& curve, int d);

/// The derivation nu = u * d/dt for a unit u of k[X].
class Derivation {
public:
    Derivation(const PuncturedCurve& curve, RatFun unit);

    const RatFun& unit() const { return unit_; }
    int d_nu() const { return d_nu_; }

    /// nu(f) = u * df/dt, exactly.
    RatFun apply(const RatFun& f) const;

private:
    RatFun unit_;
    int d_nu_;
};

/// Smallest b with grade(nu(e)) <= grade(e) + b over all graded basis elements.
int compute_d_nu(const PuncturedCurve& curve, const RatFun& unit);

}  // namespace operlab

#endif
