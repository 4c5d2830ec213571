#include "operlab/opers.hpp"

#include <algorithm>
#include <map>

namespace operlab {

LineSection make_line(const LocalSystem& sys, int d, SectionVector g) {
    if (static_cast<int>(g.size()) != sys.rank()) throw RankMismatch();
    bool nonzero = std::any_of(g.begin(), g.end(), [](const RatFun& f) { return !f.is_zero(); });
    if (!nonzero) throw std::invalid_argument("line section must be nonzero");
    LineSection line{&sys, d, std::move(g), {}};
    for (const auto& entry : line.g) {
        auto block = sys.curve().coordinates(entry, d);
        line.coords.insert(line.coords.end(), block.begin(), block.end());
    }
    return line;
}

LineSection line_from_coords(const LocalSystem& sys, int d, const std::vector<Rat>& coords) {
    const int dim = sys.curve().space_dim(d);
    if (static_cast<int>(coords.size()) != sys.rank() * dim)
        throw std::invalid_argument("coordinate vector has the wrong length");
    SectionSpace s = space_basis(sys.curve(), d);
    SectionVector g(sys.rank());
    for (int k = 0; k < sys.rank(); ++k) {
        RatFun acc;
        for (int j = 0; j < dim; ++j) acc += RatFun(coords[k * dim + j]) * s.basis[j];
        g[k] = acc;
    }
    return make_line(sys, d, std::move(g));
}

Flag complete_flag(const LocalSystem& sys, const LineSection& line, int r) {
    const int n = sys.rank();
    if (r < 1 || r > n) throw std::invalid_argument("flag rank out of range");
    Flag flag{r, {}, {}, RatFun(1)};
    SectionVector row = line.g;
    for (int i = 0; i < r; ++i) {
        flag.rows.push_back(row);
        if (i + 1 < r) row = sys.nabla(row);
    }
    // Greedy leftmost column selection: at each step take the smallest new
    // column keeping the nested minor nonzero.
    for (int i = 1; i <= r; ++i) {
        bool found = false;
        for (int c = 0; c < n && !found; ++c) {
            if (std::find(flag.columns.begin(), flag.columns.end(), c) != flag.columns.end())
                continue;
            Matrix<RatFun> minor(i, i);
            for (int a = 0; a < i; ++a) {
                for (int b = 0; b + 1 < i; ++b) minor(a, b) = flag.rows[a][flag.columns[b]];
                minor(a, i - 1) = flag.rows[a][c];
            }
            RatFun det = minor.det();
            if (!det.is_zero()) {
                flag.columns.push_back(c);
                flag.discriminant *= det;
                found = true;
            }
        }
        if (!found) throw DegenerateFlag();
    }
    return flag;
}

OperCertificate verify_oper_gl(const LocalSystem& sys, const Flag& flag) {
    const int n = sys.rank();
    for (int i = 1; i <= flag.r; ++i) {
        Matrix<RatFun> top(i, n);
        for (int a = 0; a < i; ++a)
            for (int b = 0; b < n; ++b) top(a, b) = flag.rows[a][b];
        // Full rank of F_i; rank growth at each step is the nonvanishing of
        // the successive quotient map over the discriminant locus.
        if (top.rank() != i) throw ConditionFailed("rank", i);
    }
    for (int j = 0; j + 1 < flag.r; ++j)
        if (sys.nabla(flag.rows[j]) != flag.rows[j + 1]) throw ConditionFailed("step", j);
    return {true, flag.discriminant};
}

int compute_C3(const LocalSystem& sys, FormKind kind) {
    if (!sys.has_form()) throw NoForm();
    const int m = sys.rank() / 2;
    if (m < 2) return sys.C1();
    const int beta = sys.beta();
    return kind == FormKind::Symplectic ? (2 * m - 3) * beta + sys.C1()
                                        : 2 * (m - 2) * beta + sys.C1();
}

Rat QuadraticSystem::eval(const QuadraticEquation& eq, const std::vector<Rat>& x) const {
    Rat acc(0);
    for (int i = 0; i < n_vars; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n_vars; ++j) acc += x[i] * eq.matrix(i, j) * x[j];
    }
    return acc;
}

bool QuadraticSystem::vanishes_at(const std::vector<Rat>& x) const {
    for (const auto& eq : equations)
        if (!eval(eq, x).is_zero()) return false;
    return true;
}

numeric::PolySystem QuadraticSystem::to_poly_system() const {
    numeric::PolySystem ps;
    ps.n_vars = n_vars;
    ps.homogeneous = true;
    for (const auto& eq : equations) {
        numeric::PolyEq pe;
        for (int i = 0; i < n_vars; ++i)
            for (int j = i; j < n_vars; ++j) {
                Rat c = (i == j) ? eq.matrix(i, j) : eq.matrix(i, j) + eq.matrix(j, i);
                if (c.is_zero()) continue;
                std::vector<int> exps(n_vars, 0);
                exps[i] += 1;
                exps[j] += 1;
                pe.terms.push_back({c, std::move(exps)});
            }
        ps.eqs.push_back(std::move(pe));
    }
    return ps;
}

namespace {

QuadraticSystem gen_pair_equations(const LocalSystem& sys, int d, FormKind kind) {
    if (!sys.has_form()) throw NoForm();
    if (sys.form().kind != kind) throw WrongKind();
    const PuncturedCurve& curve = sys.curve();
    const int n = sys.rank();
    const int m = n / 2;
    const int dim_d = curve.space_dim(d);

    QuadraticSystem qs;
    qs.d = d;
    qs.n_vars = n * dim_d;
    qs.beta = sys.beta();
    qs.C3 = compute_C3(sys, kind);
    const int target = 2 * d + qs.C3;
    const int dim_t = curve.space_dim(target);
    const int pairs = std::max(0, m - 1);
    qs.raw_count = static_cast<long>(pairs) * dim_t;
    if (pairs == 0) return qs;

    // nabla iterates of the coordinate basis vectors b_j * e_k.
    SectionSpace s = space_basis(curve, d);
    const int max_iter = kind == FormKind::Symplectic ? m - 1 : m - 2;
    std::vector<std::vector<SectionVector>> derivs(max_iter + 1,
                                                   std::vector<SectionVector>(qs.n_vars));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < dim_d; ++j) {
            SectionVector e(n, RatFun(0));
            e[k] = s.basis[j];
            derivs[0][k * dim_d + j] = std::move(e);
        }
    for (int i = 1; i <= max_iter; ++i)
        for (int v = 0; v < qs.n_vars; ++v) derivs[i][v] = sys.nabla(derivs[i - 1][v]);

    for (int i = 0; i < pairs; ++i) {
        const auto& left = derivs[i];
        const auto& right = kind == FormKind::Symplectic ? derivs[i + 1] : derivs[i];
        std::vector<Matrix<Rat>> mats(dim_t, Matrix<Rat>(qs.n_vars, qs.n_vars));
        for (int a = 0; a < qs.n_vars; ++a)
            for (int b = 0; b < qs.n_vars; ++b) {
                RatFun p = sys.pairing(left[a], right[b]);
                if (p.is_zero()) continue;
                auto c = curve.coordinates(p, target);  // throws if the C3 bound broke
                for (int t = 0; t < dim_t; ++t)
                    if (!c[t].is_zero()) mats[t](a, b) += c[t];
            }
        for (int t = 0; t < dim_t; ++t) {
            // symmetrize
            Matrix<Rat> sym(qs.n_vars, qs.n_vars);
            bool nonzero = false;
            for (int a = 0; a < qs.n_vars; ++a)
                for (int b = 0; b < qs.n_vars; ++b) {
                    sym(a, b) = (mats[t](a, b) + mats[t](b, a)) * Rat(1, 2);
                    if (!sym(a, b).is_zero()) nonzero = true;
                }
            if (nonzero) qs.equations.push_back({i, t, std::move(sym)});
        }
    }
    qs.reduced_count = static_cast<long>(qs.equations.size());
    return qs;
}

}  // namespace

QuadraticSystem gen_sp_equations(const LocalSystem& sys, int d) {
    return gen_pair_equations(sys, d, FormKind::Symplectic);
}

QuadraticSystem gen_so_equations(const LocalSystem& sys, int d) {
    return gen_pair_equations(sys, d, FormKind::Symmetric);
}

Matrix<RatFun> full_pairing_matrix(const LocalSystem& sys, const LineSection& line, int bound) {
    if (!sys.has_form()) throw NoForm();
    std::vector<SectionVector> it(bound + 1);
    it[0] = line.g;
    for (int i = 1; i <= bound; ++i) it[i] = sys.nabla(it[i - 1]);
    Matrix<RatFun> gram(bound + 1, bound + 1);
    for (int i = 0; i <= bound; ++i)
        for (int j = 0; j <= bound; ++j) gram(i, j) = sys.pairing(it[i], it[j]);
    return gram;
}

ConnectivityReport count_and_bound(const LocalSystem& sys, int d) {
    if (!sys.has_form()) throw NoForm();
    const FormKind kind = sys.form().kind;
    const int m = sys.rank() / 2;
    const int pairs = std::max(0, m - 1);
    const int C3 = compute_C3(sys, kind);
    const long nD = sys.curve().num_punctures();
    ConnectivityReport rep{};
    rep.N = static_cast<long>(sys.rank()) * sys.curve().space_dim(d) - 1;
    rep.r = static_cast<long>(pairs) * sys.curve().space_dim(2 * d + C3);
    rep.bound = rep.N - rep.r;
    rep.slope = static_cast<long>(sys.rank()) * nD - static_cast<long>(pairs) * 2 * nD;
    return rep;
}

OperCertificate verify_oper_sp(const LocalSystem& sys, const LineSection& line) {
    if (!sys.has_form()) throw NoForm();
    if (sys.form().kind != FormKind::Symplectic) throw WrongKind();
    const int m = sys.rank() / 2;
    Matrix<RatFun> gram = full_pairing_matrix(sys, line, std::max(0, m - 1));
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j)
            if (!gram(i, j).is_zero()) throw ConditionFailed("pairing", i);
    Flag flag = complete_flag(sys, line, sys.rank());
    return verify_oper_gl(sys, flag);
}

std::optional<LineSection> find_sp_oper(const LocalSystem& sys, int d, unsigned seed, int tries) {
    QuadraticSystem qs = gen_sp_equations(sys, d);
    numeric::PolySystem ps = qs.to_poly_system();
    numeric::SolveOptions opts;
    opts.tries = 10;
    const int rounds = std::max(1, tries / opts.tries);
    for (int k = 0; k < rounds; ++k) {
        auto sol = numeric::rational_solve(ps, seed + static_cast<unsigned>(k), opts);
        if (!sol) continue;
        try {
            LineSection line = line_from_coords(sys, d, *sol);
            if (!qs.vanishes_at(line.coords)) continue;
            verify_oper_sp(sys, line);
            return line;
        } catch (const DegenerateFlag&) {
        } catch (const ConditionFailed&) {
        }
    }
    return std::nullopt;
}

G2Report g2_counting_report(int num_punctures, const std::vector<int>& degrees, int ambient) {
    long total = 0;
    for (int d : degrees) total += d;
    G2Report rep{};
    rep.slope = (static_cast<long>(ambient) - total) * num_punctures;
    rep.diverges = rep.slope > 0;
    rep.verdict = rep.diverges ? "diverges" : "fails";
    return rep;
}

// --- invariant line falsifier (declared on LocalSystem) ---

std::optional<SectionVector> LocalSystem::invariant_line_falsifier(int deg_bound, unsigned seed,
                                                                   int tries) const {
    if (deg_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
    const int n = rank();
    const int per = deg_bound + 1;
    const int n_vars = n * per;

    // Quadric coefficients of the 2x2 minors of [v; nabla v] for polynomial v.
    std::vector<SectionVector> base(n_vars), dbase(n_vars);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < per; ++j) {
            SectionVector e(n, RatFun(0));
            e[k] = RatFun(Poly::monomial(Rat(1), j));
            dbase[k * per + j] = nabla(e);
            base[k * per + j] = std::move(e);
        }

    struct MinorForm {
        int p, q;
        std::vector<RatFun> coeff;  // n_vars^2 entries, (a,b)-major
    };
    std::vector<MinorForm> minors;
    int target = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            MinorForm mf{p, q, std::vector<RatFun>(size_t(n_vars) * n_vars)};
            for (int a = 0; a < n_vars; ++a)
                for (int b = 0; b < n_vars; ++b) {
                    RatFun f = base[a][p] * dbase[b][q] - base[a][q] * dbase[b][p];
                    if (!f.is_zero()) target = std::max(target, curve_.grade(f));
                    mf.coeff[size_t(a) * n_vars + b] = std::move(f);
                }
            minors.push_back(std::move(mf));
        }

    numeric::PolySystem ps;
    ps.n_vars = n_vars;
    ps.homogeneous = true;
    const int dim_t = curve_.space_dim(target);
    for (const auto& mf : minors) {
        std::vector<Matrix<Rat>> mats(dim_t, Matrix<Rat>(n_vars, n_vars));
        for (int a = 0; a < n_vars; ++a)
            for (int b = 0; b < n_vars; ++b) {
                const RatFun& f = mf.coeff[size_t(a) * n_vars + b];
                if (f.is_zero()) continue;
                auto c = curve_.coordinates(f, target);
                for (int t = 0; t < dim_t; ++t)
                    if (!c[t].is_zero()) mats[t](a, b) += c[t];
            }
        for (int t = 0; t < dim_t; ++t) {
            if (mats[t].is_zero()) continue;
            numeric::PolyEq pe;
            for (int a = 0; a < n_vars; ++a)
                for (int b = a; b < n_vars; ++b) {
                    Rat c = (a == b) ? mats[t](a, b) : mats[t](a, b) + mats[t](b, a);
                    if (c.is_zero()) continue;
                    std::vector<int> exps(n_vars, 0);
                    exps[a] += 1;
                    exps[b] += 1;
                    pe.terms.push_back({c, std::move(exps)});
                }
            ps.eqs.push_back(std::move(pe));
        }
    }

    numeric::SolveOptions opts;
    opts.tries = tries;
    auto sol = numeric::rational_solve(ps, seed, opts);
    if (!sol) return std::nullopt;

    // Certify: rebuild v and check every minor of [v; nabla v] exactly.
    SectionVector v(n, RatFun(0));
    for (int k = 0; k < n; ++k) {
        Poly p;
        for (int j = 0; j < per; ++j) p += Poly::monomial((*sol)[k * per + j], j);
        v[k] = RatFun(p);
    }
    bool nonzero = std::any_of(v.begin(), v.end(), [](const RatFun& f) { return !f.is_zero(); });
    if (!nonzero) return std::nullopt;
    SectionVector dv = nabla(v);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (!(v[p] * dv[q] - v[q] * dv[p]).is_zero()) return std::nullopt;
    return v;
}

}  // namespace operlab
