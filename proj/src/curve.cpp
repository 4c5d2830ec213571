#include "operlab/curve.hpp"

#include <algorithm>

namespace operlab {

PuncturedCurve::PuncturedCurve(std::vector<Puncture> punctures)
    : punctures_(std::move(punctures)) {
    if (punctures_.empty())
        throw std::invalid_argument("puncture set must be nonempty");
    bool has_inf = false;
    for (size_t i = 0; i < punctures_.size(); ++i) {
        if (punctures_[i].infinite) has_inf = true;
        for (size_t j = i + 1; j < punctures_.size(); ++j)
            if (punctures_[i] == punctures_[j])
                throw std::invalid_argument("punctures must be pairwise distinct");
    }
    if (!has_inf)
        throw std::invalid_argument("the point at infinity must be a puncture");
    for (const auto& p : punctures_)
        if (!p.infinite) finite_.push_back(p.value);
}

int PuncturedCurve::space_dim(int d) const {
    if (d < 0) throw NegativeGrade();
    return d * num_punctures() + 1;
}

namespace {

// Multiplicity of (t - a) in p.
int root_multiplicity(const Poly& p, const Rat& a) {
    if (p.is_zero()) return 0;
    Poly q = p;
    Poly lin({-a, Rat(1)});
    int m = 0;
    while (!q.is_constant() && q.eval(a).is_zero()) {
        q = q / lin;
        ++m;
    }
    return m;
}

}  // namespace

int PuncturedCurve::pole_order(const RatFun& f, const Puncture& p) const {
    if (f.is_zero()) return 0;
    if (p.infinite) return f.num().degree() - f.den().degree();
    return root_multiplicity(f.den(), p.value) - root_multiplicity(f.num(), p.value);
}

int PuncturedCurve::grade(const RatFun& f) const {
    if (f.is_zero()) return 0;
    // Strip the factors of the denominator supported on the finite punctures;
    // anything left over is a pole outside D.
    Poly den = f.den();
    int worst = 0;
    for (const auto& a : finite_) {
        int m = root_multiplicity(den, a);
        if (m > 0) {
            den = den / Poly({-a, Rat(1)}).pow(m);
            worst = std::max(worst, m);
        }
    }
    if (!den.is_constant()) throw PoleOutsideD();
    int at_inf = f.num().degree() - f.den().degree();
    bool inf_punctured = std::any_of(punctures_.begin(), punctures_.end(),
                                     [](const Puncture& p) { return p.infinite; });
    if (at_inf > 0 && !inf_punctured) throw PoleOutsideD();
    return std::max(worst, std::max(at_inf, 0));
}

std::vector<Rat> PuncturedCurve::coordinates(const RatFun& f, int d) const {
    if (d < 0) throw NegativeGrade();
    if (grade(f) > d) throw GradeExceeded();
    int dim = space_dim(d);
    std::vector<Rat> coords(dim, Rat(0));
    RatFun rest = f;
    // Principal part at each finite puncture.
    for (size_t k = 0; k < finite_.size(); ++k) {
        const Rat& a = finite_[k];
        Poly lin({-a, Rat(1)});
        int m = pole_order(rest, Puncture::at(a));
        while (m > 0) {
            Rat c = (RatFun(lin.pow(m)) * rest).eval(a);
            // coordinate slot of (t-a)^{-m}
            coords[1 + d + static_cast<int>(k) * d + (m - 1)] = c;
            rest -= RatFun(Poly(c), lin.pow(m));
            m = pole_order(rest, Puncture::at(a));
        }
    }
    if (!rest.is_polynomial()) throw PoleOutsideD();
    for (int i = 0; i <= rest.num().degree(); ++i) coords[i] = rest.num()[i];
    return coords;
}

SectionSpace space_basis(const PuncturedCurve& curve, int d) {
    if (d < 0) throw NegativeGrade();
    SectionSpace s{&curve, d, {}};
    s.basis.push_back(RatFun(Rat(1)));
    for (int m = 1; m <= d; ++m)
        s.basis.push_back(RatFun(Poly::monomial(Rat(1), m)));
    for (const auto& a : curve.finite_punctures()) {
        Poly lin({-a, Rat(1)});
        for (int m = 1; m <= d; ++m)
            s.basis.push_back(RatFun(Poly::one(), lin.pow(m)));
    }
    return s;
}

Derivation::Derivation(const PuncturedCurve& curve, RatFun unit)
    : unit_(std::move(unit)), d_nu_(0) {
    if (unit_.is_zero()) throw InvalidUnit();
    // Poles of u only at D.
    try {
        curve.grade(unit_);
    } catch (const PoleOutsideD&) {
        throw InvalidUnit();
    }
    // Zeros of u only at D: the numerator must be a product of puncture factors.
    Poly num = unit_.num();
    for (const auto& a : curve.finite_punctures()) {
        Poly lin({-a, Rat(1)});
        while (!num.is_constant() && num.eval(a).is_zero()) num = num / lin;
    }
    if (!num.is_constant()) throw InvalidUnit();
    d_nu_ = compute_d_nu(curve, unit_);
}

RatFun Derivation::apply(const RatFun& f) const {
    return unit_ * f.derivative();
}

int compute_d_nu(const PuncturedCurve& curve, const RatFun& unit) {
    // The grade jump of nu on t^m and (t-a)^{-m} is maximal at m = 1, so the
    // grade-1 basis elements suffice.
    int b = 0;
    SectionSpace s = space_basis(curve, 1);
    for (const auto& e : s.basis) {
        if (e.is_constant()) continue;
        RatFun de = unit * e.derivative();
        if (de.is_zero()) continue;
        b = std::max(b, curve.grade(de) - 1);
    }
    return b;
}

}  // namespace operlab
