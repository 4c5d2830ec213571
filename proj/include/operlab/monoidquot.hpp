#ifndef OPERLAB_MONOIDQUOT_HPP
#define OPERLAB_MONOIDQUOT_HPP

#include <vector>

#include "operlab/opers.hpp"

namespace operlab {

struct ZeroScalar : std::runtime_error {
    ZeroScalar() : std::runtime_error("monoid element must be a nonzero scalar section") {}
};
struct NotSameImage : std::runtime_error {
    NotSameImage() : std::runtime_error("line sections do not span the same image line") {}
};
struct NoValidIndex : std::runtime_error {
    NoValidIndex() : std::runtime_error("no valid witness index: contract violated") {}
};
struct DegenerateFamily : std::runtime_error {
    DegenerateFamily()
        : std::runtime_error("family line degenerates: common factor in the parameter") {}
};

/// A scalar section m in k^e[X]; the graded piece M_e of the monoid.
struct MonoidElt {
    int e;
    RatFun m;
};

MonoidElt make_monoid_elt(const PuncturedCurve& curve, int e, RatFun m);

/// Coordinatewise product m * g, landing in grade d + e.
LineSection act(const MonoidElt& m, const LineSection& line);

/// Projective proportionality over the function field k(t): all cross
/// products f_i g_j = f_j g_i.
bool same_image(const LineSection& f, const LineSection& g);

/// True when act(m, f) = act(m2, f) (up to a nonzero constant) implies that
/// m and m2 agree up to a nonzero constant.
bool freeness_check(const MonoidElt& m, const MonoidElt& m2, const LineSection& f);

struct WitnessPair {
    MonoidElt m1, m2;
    Poly localizer;  // in the family parameter s; the constant 1 over Q
};

/// The constructive content of the quotient lemma: for lines with the same
/// image at grade d, m1 = g_i, m2 = f_i (smallest i with f_i != 0) satisfy
/// m1 * f = m2 * g identically, in grade 2d.
WitnessPair find_witness(const LineSection& f, const LineSection& g);

// --- one-parameter families (base Q[s], curve P^1 minus infinity) ---

/// Polynomial in t whose coefficients are polynomials in the parameter s.
using BiPoly = PolyT<Poly>;

struct FamilyLine {
    int d;
    std::vector<BiPoly> entries;
};

/// Validates: nonzero, deg_t <= d, and the gcd over s of all coefficient
/// polynomials is a nonzero constant (no specialization kills the vector).
FamilyLine make_family_line(int d, std::vector<BiPoly> entries);

struct FamilyElt {
    int e;
    BiPoly m;
};

FamilyElt make_family_elt(int e, BiPoly m);

FamilyLine family_act(const FamilyElt& m, const FamilyLine& line);
bool family_same_image(const FamilyLine& f, const FamilyLine& g);

struct FamilyWitness {
    FamilyElt m1, m2;
    Poly localizer;  // nonzero at s0 guarantees m1, m2 specialize nonzero
};

FamilyWitness family_find_witness(const FamilyLine& f, const FamilyLine& g);

/// Substitutes s = s0; the gcd invariant guarantees a nonzero result.
SectionVector family_specialize(const FamilyLine& line, const Rat& s0);

}  // namespace operlab

#endif
