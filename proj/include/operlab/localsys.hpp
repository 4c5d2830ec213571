#ifndef OPERLAB_LOCALSYS_HPP
#define OPERLAB_LOCALSYS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "operlab/curve.hpp"
#include "operlab/linalg.hpp"

namespace operlab {

struct RankMismatch : std::runtime_error {
    RankMismatch() : std::runtime_error("section vector length does not match the system rank") {}
};
struct NoForm : std::runtime_error {
    NoForm() : std::runtime_error("operation requires a bilinear form") {}
};
struct WrongKind : std::runtime_error {
    WrongKind() : std::runtime_error("bilinear form has the wrong kind for this operation") {}
};

enum class FormKind { Symplectic, Symmetric };

struct BilinearForm {
    FormKind kind;
    Matrix<RatFun> M;
};

using SectionVector = std::vector<RatFun>;

/// True when f is nonzero with zeros and poles only at the punctures.
bool is_unit_on_x(const PuncturedCurve& curve, const RatFun& f);

/// A trivialized flat bundle: connection matrix A acting by
/// nabla(v) = nu(v) + v * A  (row-vector convention), with an optional
/// compatible symplectic or symmetric form.
class LocalSystem {
public:
    LocalSystem(PuncturedCurve curve, Derivation nu, Matrix<RatFun> A,
                std::optional<BilinearForm> form = std::nullopt);

    int rank() const { return A_.rows(); }
    const PuncturedCurve& curve() const { return curve_; }
    const Derivation& nu() const { return nu_; }
    const Matrix<RatFun>& A() const { return A_; }
    bool has_form() const { return form_.has_value(); }
    const BilinearForm& form() const {
        if (!form_) throw NoForm();
        return *form_;
    }

    int C1() const { return c1_; }
    int C2() const { return c2_; }
    /// max(d_nu, C2): the grade growth of one application of nabla.
    int beta() const;

    SectionVector nabla(const SectionVector& v) const;
    SectionVector nabla_iter(SectionVector v, int i) const;

    /// u * M * v^T, exactly.
    RatFun pairing(const SectionVector& u, const SectionVector& v) const;

    struct CompatReport {
        bool ok;
        int row = -1, col = -1;  // first violating entry when !ok
    };
    /// Checks nu(M) = A*M + M*A^T entrywise.
    CompatReport check_compatibility() const;

    /// Best-effort numeric search for a nabla-invariant line spanned by a
    /// polynomial vector of degree <= deg_bound; any returned witness is
    /// exactly certified.  A nullopt result proves nothing.
    std::optional<SectionVector> invariant_line_falsifier(int deg_bound, unsigned seed,
                                                          int tries = 32) const;

private:
    PuncturedCurve curve_;
    Derivation nu_;
    Matrix<RatFun> A_;
    std::optional<BilinearForm> form_;
    int c1_, c2_;
};

}  // namespace operlab

#endif
