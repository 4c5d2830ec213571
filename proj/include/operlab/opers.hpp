#ifndef OPERLAB_OPERS_HPP
#define OPERLAB_OPERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "operlab/localsys.hpp"
#include "operlab/numeric.hpp"

namespace operlab {

struct DegenerateFlag : std::runtime_error {
    DegenerateFlag() : std::runtime_error("flag rows are linearly dependent over k(t)") {}
};
struct ConditionFailed : std::runtime_error {
    ConditionFailed(std::string which_, int index_)
        : std::runtime_error("oper condition failed: " + which_ +
                             " at index " + std::to_string(index_)),
          which(std::move(which_)), index(index_) {}
    std::string which;
    int index;
};

/// A generic line in coordinate form: a nonzero vector g with entries in
/// k^d[X], together with its Q-coordinates in the graded basis.
struct LineSection {
    const LocalSystem* sys;
    int d;
    SectionVector g;
    std::vector<Rat> coords;  // rank * space_dim(d), entry-major blocks
};

LineSection make_line(const LocalSystem& sys, int d, SectionVector g);
LineSection line_from_coords(const LocalSystem& sys, int d, const std::vector<Rat>& coords);

/// The flag spanned by g, nabla g, ..., nabla^{r-1} g.  The domain U is the
/// non-vanishing locus of the discriminant: the product of the nested minors
/// on the greedily chosen leftmost independent columns.
struct Flag {
    int r;
    std::vector<SectionVector> rows;
    std::vector<int> columns;
    RatFun discriminant;
};

Flag complete_flag(const LocalSystem& sys, const LineSection& line, int r);

struct OperCertificate {
    bool certified = false;
    RatFun discriminant;
};

/// Checks the GL oper conditions over k(t): full ranks, nabla-compatibility
/// of the flag steps, and nonzero successive quotients.
OperCertificate verify_oper_gl(const LocalSystem& sys, const Flag& flag);

/// Conservative grade bound: every generated quadric lies in k^{2d+C3}[X].
int compute_C3(const LocalSystem& sys, FormKind kind);

struct QuadraticEquation {
    int pair_index;
    int basis_index;
    Matrix<Rat> matrix;  // symmetric, n_vars x n_vars
};

struct QuadraticSystem {
    int n_vars = 0;
    int d = 0;
    int C3 = 0;
    int beta = 0;
    long raw_count = 0;
    long reduced_count = 0;
    std::vector<QuadraticEquation> equations;  // the nonzero forms

    /// Value of one quadric at a coordinate vector, exactly.
    Rat eval(const QuadraticEquation& eq, const std::vector<Rat>& x) const;
    bool vanishes_at(const std::vector<Rat>& x) const;
    numeric::PolySystem to_poly_system() const;
};

QuadraticSystem gen_sp_equations(const LocalSystem& sys, int d);
QuadraticSystem gen_so_equations(const LocalSystem& sys, int d);

/// The full Gram matrix [<nabla^i g, nabla^j g>] for 0 <= i,j <= bound; the
/// brute-force Lagrangian oracle.
Matrix<RatFun> full_pairing_matrix(const LocalSystem& sys, const LineSection& line, int bound);

struct ConnectivityReport {
    long N;
    long r;
    long bound;
    long slope;
};

ConnectivityReport count_and_bound(const LocalSystem& sys, int d);

/// Exact sp-oper check: Gram vanishing up to m-1, flag completion to full
/// rank, and the GL conditions.
OperCertificate verify_oper_sp(const LocalSystem& sys, const LineSection& line);

/// Best-effort constructive search; any returned line is exactly verified.
std::optional<LineSection> find_sp_oper(const LocalSystem& sys, int d, unsigned seed,
                                        int tries = 100);

struct G2Report {
    long slope;
    bool diverges;
    std::string verdict;  // "diverges" or "fails"
};

G2Report g2_counting_report(int num_punctures, const std::vector<int>& degrees = {2, 2, 3},
                            int ambient = 7);

}  // namespace operlab

#endif
