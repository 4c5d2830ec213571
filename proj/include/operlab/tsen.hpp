#ifndef OPERLAB_TSEN_HPP
#define OPERLAB_TSEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "operlab/numeric.hpp"
#include "operlab/poly.hpp"

namespace operlab {

/// One monomial coeff(t) * prod x_k^{exps[k]} of a homogeneous form.
struct TsenMonomial {
    Poly coeff;             // in Q[t]
    std::vector<int> exps;  // length n+1
};

struct TsenForm {
    std::vector<TsenMonomial> monomials;
    int x_degree = 0;  // common homogeneous degree d_i >= 1
    int t_degree = 0;  // max t-degree c_i of the coefficients
};

/// Intersection of homogeneous forms in P^n over Q[t].
struct ProjectiveSystem {
    int n = 0;
    std::vector<TsenForm> forms;
};

/// Validates homogeneity, d_i >= 1, and at least one form; fills the degrees.
ProjectiveSystem make_projective_system(int n, std::vector<std::vector<TsenMonomial>> forms);

struct TsenCount {
    long unknowns;   // (n+1)(e+1) - 1, projectively
    long equations;  // sum of d_i * e + c_i + 1
    long slack;      // unknowns - equations
    long slope;      // (n+1) - sum d_i: the asymptotic slack per ansatz degree
    bool diverges;   // slack -> infinity with e
};

TsenCount tsen_count(const ProjectiveSystem& sys, int e);

/// Substitutes the degree-e polynomial ansatz and expands in powers of t: one
/// equation per t-coefficient, homogeneous of degree d_i in the coefficients.
numeric::PolySystem assemble_system(const ProjectiveSystem& sys, int e);

struct SectionCandidate {
    int e;
    std::vector<Poly> coords;  // n+1 polynomials of degree <= e, primitive
};

/// Validates degree bounds, nonzeroness, and primitivity.
SectionCandidate make_section_candidate(int e, std::vector<Poly> coords);

/// Exact substitution over Q[t].
bool verify_section(const ProjectiveSystem& sys, const SectionCandidate& cand);

struct TsenSolveResult {
    std::optional<SectionCandidate> section;  // exactly verified when present
    std::vector<std::string> warnings;
};

TsenSolveResult solve_section(const ProjectiveSystem& sys, int e, unsigned seed, int tries = 100);

}  // namespace operlab

#endif
