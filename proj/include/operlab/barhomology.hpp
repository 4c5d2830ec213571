#ifndef OPERLAB_BARHOMOLOGY_HPP
#define OPERLAB_BARHOMOLOGY_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "operlab/linalg.hpp"
#include "operlab/rat.hpp"

namespace operlab {

struct TruncationUnsound : std::logic_error {
    TruncationUnsound()
        : std::logic_error("face map left the grade cap: truncation is not a subcomplex") {}
};

/// A finite (possibly grade-truncated) commutative monoid acting on a finite
/// set.  Table entries are indices; -1 marks a product or action landing
/// beyond the truncation cap (unrepresented).
struct MonoidAction {
    std::vector<std::string> elements;
    int identity = 0;
    std::vector<std::vector<int>> mul;   // mul[m][n] in elements, or -1
    std::vector<int> grade;              // additive under mul; all 0 if ungraded

    std::vector<std::string> points;
    std::vector<std::vector<int>> act;   // act[m][a] in points, or -1
    std::vector<int> point_grade;

    /// Throws std::invalid_argument on any broken table law (identity,
    /// commutativity, associativity, action laws, additivity of grades).
    void validate() const;
};

struct FreeReport {
    bool free = true;
    int m = -1, n = -1, a = -1;  // counterexample: m*a = n*a with m != n
};
FreeReport check_free(const MonoidAction& action);

struct TransitivityReport {
    bool w_transitive = true;
    int a = -1, b = -1;  // counterexample pair with no m*a = n*b
};
TransitivityReport check_w_transitive(const MonoidAction& action);

/// The category A//M: Mor(a,b) = {m | m*a = b}.  For free actions every
/// morphism set is a singleton or empty (A//M is a poset).
struct NervePoset {
    std::vector<std::vector<std::vector<int>>> mor;  // mor[a][b] = list of m
    bool is_poset = true;
};
NervePoset nerve_poset(const MonoidAction& action);

/// A cell (m_1, ..., m_n, a) of the normalized bar construction: no m_i is
/// the identity and the total grade is within the cap.
struct BarCell {
    std::vector<int> ms;
    int a;
    friend bool operator<(const BarCell& x, const BarCell& y) {
        return std::tie(x.ms, x.a) < std::tie(y.ms, y.a);
    }
    friend bool operator==(const BarCell& x, const BarCell& y) {
        return x.ms == y.ms && x.a == y.a;
    }
};

/// Normalized bar complex truncated at simplicial degree N and total grade G,
/// with integer boundary matrices (rank is taken over Q or F_p later).
struct BarComplex {
    int N = 0;
    int G = 0;
    std::vector<std::vector<BarCell>> cells;              // degree 0..N
    std::vector<std::vector<std::vector<long>>> boundary; // boundary[n]: C_n -> C_{n-1}
};

BarComplex bar_complex(const MonoidAction& action, int N, int G);

/// Betti numbers over Q (p = 0) or F_p, for degrees 0..N-2 (strictly below
/// the truncation boundary).
std::vector<long> homology(const BarComplex& complex, long p = 0);

struct ContractibilityReport {
    bool free = false;
    bool w_transitive = false;
    bool nonempty = false;
    std::vector<long> betti;
    /// Set when all three hypotheses hold and Betti = (1, 0, ..., 0).
    bool contractible_confirmed = false;
};

ContractibilityReport contractibility_report(const MonoidAction& action, int N, int G,
                                             long p = 0);

}  // namespace operlab

#endif
