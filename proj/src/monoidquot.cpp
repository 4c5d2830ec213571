#include "operlab/monoidquot.hpp"

#include <algorithm>

namespace operlab {

namespace {

int first_nonzero(const SectionVector& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

/// u = c * v for some nonzero constant c in Q.
bool proportional_const(const SectionVector& u, const SectionVector& v) {
    if (u.size() != v.size()) return false;
    int i = first_nonzero(v);
    if (i < 0) return first_nonzero(u) < 0;
    if (u[i].is_zero()) return false;
    RatFun c = u[i] / v[i];
    if (c.num().degree() != 0 || c.den().degree() != 0) return false;
    for (size_t j = 0; j < u.size(); ++j)
        if (u[j] != c * v[j]) return false;
    return true;
}

bool scalar_proportional(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    RatFun c = a / b;
    return c.num().degree() == 0 && c.den().degree() == 0;
}

}  // namespace

MonoidElt make_monoid_elt(const PuncturedCurve& curve, int e, RatFun m) {
    if (m.is_zero()) throw ZeroScalar();
    if (curve.grade(m) > e) throw GradeExceeded();
    return MonoidElt{e, std::move(m)};
}

LineSection act(const MonoidElt& m, const LineSection& line) {
    if (m.m.is_zero()) throw ZeroScalar();
    SectionVector out(line.g.size());
    for (size_t i = 0; i < line.g.size(); ++i) out[i] = m.m * line.g[i];
    return make_line(*line.sys, line.d + m.e, std::move(out));
}

bool same_image(const LineSection& f, const LineSection& g) {
    if (f.g.size() != g.g.size()) return false;
    for (size_t i = 0; i < f.g.size(); ++i)
        for (size_t j = i + 1; j < f.g.size(); ++j)
            if (f.g[i] * g.g[j] != f.g[j] * g.g[i]) return false;
    return true;
}

bool freeness_check(const MonoidElt& m, const MonoidElt& m2, const LineSection& f) {
    // Act at a common grade so the two outputs are comparable sections.
    int e = std::max(m.e, m2.e);
    LineSection a = act(MonoidElt{e, m.m}, f);
    LineSection b = act(MonoidElt{e, m2.m}, f);
    if (!proportional_const(a.g, b.g)) return true;  // vacuous implication
    return scalar_proportional(m.m, m2.m);
}

WitnessPair find_witness(const LineSection& f, const LineSection& g) {
    if (f.d != g.d || f.g.size() != g.g.size())
        throw std::invalid_argument("witness requires lines of equal grade and rank");
    int i = first_nonzero(f.g);
    if (i < 0) throw NoValidIndex();
    if (g.g[i].is_zero()) {
        // Valid same-image input would force g_i != 0; diagnose which.
        if (same_image(f, g)) throw NoValidIndex();
        throw NotSameImage();
    }
    RatFun m1 = g.g[i], m2 = f.g[i];
    for (size_t j = 0; j < f.g.size(); ++j)
        if (m1 * f.g[j] != m2 * g.g[j]) throw NotSameImage();
    return WitnessPair{MonoidElt{f.d, m1}, MonoidElt{f.d, m2}, Poly::one()};
}

// --- families ---

namespace {

int bp_first_nonzero(const std::vector<BiPoly>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

}  // namespace

FamilyLine make_family_line(int d, std::vector<BiPoly> entries) {
    if (bp_first_nonzero(entries) < 0) throw ZeroScalar();
    Poly common;
    for (const auto& e : entries) {
        if (e.degree() > d) throw GradeExceeded();
        for (const auto& c : e.coeffs()) common = Poly::gcd(common, c);
    }
    if (common.degree() != 0) throw DegenerateFamily();
    return FamilyLine{d, std::move(entries)};
}

FamilyElt make_family_elt(int e, BiPoly m) {
    if (m.is_zero()) throw ZeroScalar();
    if (m.degree() > e) throw GradeExceeded();
    return FamilyElt{e, std::move(m)};
}

FamilyLine family_act(const FamilyElt& m, const FamilyLine& line) {
    if (m.m.is_zero()) throw ZeroScalar();
    std::vector<BiPoly> out(line.entries.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = m.m * line.entries[i];
    // Not re-validated: acting by an m with content in s is allowed; the
    // result spans the same image line wherever m specializes nonzero.
    return FamilyLine{line.d + m.e, std::move(out)};
}

bool family_same_image(const FamilyLine& f, const FamilyLine& g) {
    if (f.entries.size() != g.entries.size()) return false;
    for (size_t i = 0; i < f.entries.size(); ++i)
        for (size_t j = i + 1; j < f.entries.size(); ++j)
            if (f.entries[i] * g.entries[j] != f.entries[j] * g.entries[i]) return false;
    return true;
}

FamilyWitness family_find_witness(const FamilyLine& f, const FamilyLine& g) {
    if (f.d != g.d || f.entries.size() != g.entries.size())
        throw std::invalid_argument("witness requires families of equal grade and rank");
    int i = bp_first_nonzero(f.entries);
    if (i < 0) throw NoValidIndex();
    if (g.entries[i].is_zero()) {
        if (family_same_image(f, g)) throw NoValidIndex();
        throw NotSameImage();
    }
    BiPoly m1 = g.entries[i], m2 = f.entries[i];
    for (size_t j = 0; j < f.entries.size(); ++j)
        if (m1 * f.entries[j] != m2 * g.entries[j]) throw NotSameImage();
    // Where this s-polynomial is nonzero, the leading t-coefficient of
    // f_i * g_i survives specialization, so both m1 and m2 stay nonzero.
    Poly h = (m1 * m2).leading();
    return FamilyWitness{FamilyElt{f.d, m1}, FamilyElt{f.d, m2}, std::move(h)};
}

SectionVector family_specialize(const FamilyLine& line, const Rat& s0) {
    SectionVector out(line.entries.size());
    bool nonzero = false;
    for (size_t i = 0; i < out.size(); ++i) {
        Poly p;  // in t
        for (int k = 0; k <= line.entries[i].degree(); ++k)
            p += Poly::monomial(line.entries[i][k].eval(s0), k);
        nonzero = nonzero || !p.is_zero();
        out[i] = RatFun(std::move(p));
    }
    if (!nonzero) throw DegenerateFamily();
    return out;
}

}  // namespace operlab
