#ifndef OPERLAB_NUMERIC_HPP
#define OPERLAB_NUMERIC_HPP

#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "operlab/rat.hpp"

namespace operlab::numeric {

using Cx = std::complex<double>;

/// Sparse monomial c * prod x_i^{e_i} in the search variables.
struct Monomial {
    Rat coeff;
    std::vector<int> exps;
};

struct PolyEq {
    std::vector<Monomial> terms;
};

/// A polynomial system over Q; the search heuristics run in complex floats
/// but every candidate root is certified by exact evaluation.
struct PolySystem {
    int n_vars = 0;
    std::vector<PolyEq> eqs;
    /// When true every equation is homogeneous, so a chart normalization
    /// (pinning one variable to 1) is applied per solve attempt.
    bool homogeneous = false;

    Cx eval(const PolyEq& eq, const std::vector<Cx>& x) const;
    Rat eval_exact(const PolyEq& eq, const std::vector<Rat>& x) const;
    bool verify_exact(const std::vector<Rat>& x) const;
    double residual(const std::vector<Cx>& x) const;
};

/// Continued-fraction rational reconstruction with a denominator bound.
/// Returns the cfrac convergent of x with denominator <= max_den.
Rat reconstruct(double x, long max_den);

struct SolveOptions {
    int tries = 100;
    int newton_iters = 120;
    double tol = 1e-11;
    long max_den = 1000000;   // final reconstruction bound
    long pin_max_den = 64;    // denominator bound used while pinning
};

/// Multi-start Gauss-Newton followed by a pin-and-polish sweep: coordinates
/// are rounded to small rationals one at a time (re-converging the rest) until
/// the whole vector is rational, then verified exactly.  Deterministic given
/// the seed; starts are merged in seed order.
std::optional<std::vector<Rat>> rational_solve(const PolySystem& sys, unsigned seed,
                                               const SolveOptions& opts = {});

}  // namespace operlab::numeric

#endif
