#include "operlab/localsys.hpp"

namespace operlab {

bool is_unit_on_x(const PuncturedCurve& curve, const RatFun& f) {
    if (f.is_zero()) return false;
    try {
        curve.grade(f);        // poles supported on D
        curve.grade(f.inv());  // zeros supported on D
    } catch (const PoleOutsideD&) {
        return false;
    }
    return true;
}

LocalSystem::LocalSystem(PuncturedCurve curve, Derivation nu, Matrix<RatFun> A,
                         std::optional<BilinearForm> form)
    : curve_(std::move(curve)), nu_(std::move(nu)), A_(std::move(A)),
      form_(std::move(form)), c1_(0), c2_(0) {
    if (A_.rows() != A_.cols())
        throw std::invalid_argument("connection matrix must be square");
    const int n = A_.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c2_ = std::max(c2_, curve_.grade(A_(i, j)));
    if (form_) {
        const Matrix<RatFun>& M = form_->M;
        if (M.rows() != n || M.cols() != n)
            throw std::invalid_argument("form matrix shape mismatch");
        if (form_->kind == FormKind::Symplectic && n % 2 != 0)
            throw std::invalid_argument("symplectic rank must be even");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                c1_ = std::max(c1_, curve_.grade(M(i, j)));
                const RatFun& mirror = M(j, i);
                bool ok = form_->kind == FormKind::Symplectic
                              ? M(i, j) == -mirror
                              : M(i, j) == mirror;
                if (!ok)
                    throw std::invalid_argument("form matrix has the wrong symmetry");
            }
        if (!is_unit_on_x(curve_, M.det()))
            throw std::invalid_argument("det(M) must be a unit of k[X]");
    }
}

int LocalSystem::beta() const { return std::max(nu_.d_nu(), c2_); }

SectionVector LocalSystem::nabla(const SectionVector& v) const {
    const int n = rank();
    if (static_cast<int>(v.size()) != n) throw RankMismatch();
    SectionVector out(n);
    for (int j = 0; j < n; ++j) {
        RatFun acc = nu_.apply(v[j]);
        for (int i = 0; i < n; ++i) acc += v[i] * A_(i, j);
        out[j] = acc;
    }
    return out;
}

SectionVector LocalSystem::nabla_iter(SectionVector v, int i) const {
    if (i < 0) throw std::invalid_argument("iteration count must be non-negative");
    for (int k = 0; k < i; ++k) v = nabla(v);
    return v;
}

RatFun LocalSystem::pairing(const SectionVector& u, const SectionVector& v) const {
    const BilinearForm& f = form();
    const int n = rank();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw RankMismatch();
    RatFun acc;
    for (int i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) acc += u[i] * f.M(i, j) * v[j];
    }
    return acc;
}

LocalSystem::CompatReport LocalSystem::check_compatibility() const {
    const BilinearForm& f = form();
    const int n = rank();
    Matrix<RatFun> rhs = A_ * f.M + f.M * A_.transpose();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (nu_.apply(f.M(i, j)) != rhs(i, j)) return {false, i, j};
    return {true};
}

}  // namespace operlab
