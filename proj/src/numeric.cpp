#include "operlab/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace operlab::numeric {

Cx PolySystem::eval(const PolyEq& eq, const std::vector<Cx>& x) const {
    Cx acc = 0.0;
    for (const auto& m : eq.terms) {
        Cx t = m.coeff.to_double();
        for (int i = 0; i < n_vars; ++i)
            for (int k = 0; k < m.exps[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

Rat PolySystem::eval_exact(const PolyEq& eq, const std::vector<Rat>& x) const {
    Rat acc(0);
    for (const auto& m : eq.terms) {
        Rat t = m.coeff;
        for (int i = 0; i < n_vars; ++i)
            for (int k = 0; k < m.exps[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

bool PolySystem::verify_exact(const std::vector<Rat>& x) const {
    for (const auto& eq : eqs)
        if (!eval_exact(eq, x).is_zero()) return false;
    return true;
}

double PolySystem::residual(const std::vector<Cx>& x) const {
    double r = 0.0;
    for (const auto& eq : eqs) r = std::max(r, std::abs(eval(eq, x)));
    return r;
}

Rat reconstruct(double x, long max_den) {
    bool neg = x < 0;
    double y = std::fabs(x);
    long p0 = 1, q0 = 0;  // convergent p/q
    long p1 = static_cast<long>(std::floor(y)), q1 = 1;
    double frac = y - std::floor(y);
    for (int it = 0; it < 64 && frac > 1e-12; ++it) {
        double inv = 1.0 / frac;
        double fl = std::floor(inv);
        if (fl > 1e15) break;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        frac = inv - fl;
    }
    return Rat(Int(neg ? -p1 : p1), Int(q1));
}

namespace {

// Partial derivative of one equation with respect to a variable.
Cx eval_deriv(const PolySystem& sys, const PolyEq& eq, const std::vector<Cx>& x, int var) {
    Cx acc = 0.0;
    for (const auto& m : eq.terms) {
        if (m.exps[var] == 0) continue;
        Cx t = m.coeff.to_double() * static_cast<double>(m.exps[var]);
        for (int i = 0; i < sys.n_vars; ++i) {
            int e = m.exps[i] - (i == var ? 1 : 0);
            for (int k = 0; k < e; ++k) t *= x[i];
        }
        acc += t;
    }
    return acc;
}

// Dense complex linear solve with partial pivoting; returns false when singular.
bool lin_solve(std::vector<std::vector<Cx>> a, std::vector<Cx> b, std::vector<Cx>& out) {
    const int n = static_cast<int>(b.size());
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int i = c + 1; i < n; ++i)
            if (std::abs(a[i][c]) > std::abs(a[p][c])) p = i;
        if (std::abs(a[p][c]) < 1e-300) return false;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (int i = c + 1; i < n; ++i) {
            Cx f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    out.assign(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        Cx s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a[i][j] * out[j];
        out[i] = s / a[i][i];
    }
    return true;
}

// Levenberg-damped Gauss-Newton on the free (unpinned) variables.
bool gauss_newton(const PolySystem& sys, const std::vector<std::optional<Rat>>& pins,
                  std::vector<Cx>& x, int iters, double tol) {
    std::vector<int> free_vars;
    for (int i = 0; i < sys.n_vars; ++i)
        if (!pins[i]) free_vars.push_back(i);
    const int nf = static_cast<int>(free_vars.size());
    const int ne = static_cast<int>(sys.eqs.size());
    if (ne == 0 || nf == 0) return sys.residual(x) < tol;

    double lambda = 1e-10;
    for (int it = 0; it < iters; ++it) {
        double res = sys.residual(x);
        if (res < tol) return true;
        std::vector<std::vector<Cx>> jac(ne, std::vector<Cx>(nf));
        std::vector<Cx> f(ne);
        for (int e = 0; e < ne; ++e) {
            f[e] = sys.eval(sys.eqs[e], x);
            for (int j = 0; j < nf; ++j) jac[e][j] = eval_deriv(sys, sys.eqs[e], x, free_vars[j]);
        }
        // Normal equations J^H J delta = -J^H f with damping.
        std::vector<std::vector<Cx>> jhj(nf, std::vector<Cx>(nf, 0.0));
        std::vector<Cx> jhf(nf, 0.0);
        for (int e = 0; e < ne; ++e)
            for (int i = 0; i < nf; ++i) {
                Cx ci = std::conj(jac[e][i]);
                jhf[i] += ci * f[e];
                for (int j = 0; j < nf; ++j) jhj[i][j] += ci * jac[e][j];
            }
        bool stepped = false;
        for (int attempt = 0; attempt < 8 && !stepped; ++attempt) {
            auto damped = jhj;
            for (int i = 0; i < nf; ++i) damped[i][i] += lambda;
            std::vector<Cx> neg(nf);
            for (int i = 0; i < nf; ++i) neg[i] = -jhf[i];
            std::vector<Cx> delta;
            if (!lin_solve(damped, neg, delta)) {
                lambda *= 100.0;
                continue;
            }
            std::vector<Cx> trial = x;
            for (int j = 0; j < nf; ++j) trial[free_vars[j]] += delta[j];
            if (sys.residual(trial) < res || lambda > 1e6) {
                x = std::move(trial);
                lambda = std::max(lambda * 0.3, 1e-12);
                stepped = true;
            } else {
                lambda *= 10.0;
            }
        }
        if (!stepped) return sys.residual(x) < tol;
    }
    return sys.residual(x) < tol;
}

}  // namespace

std::optional<std::vector<Rat>> rational_solve(const PolySystem& sys, unsigned seed,
                                               const SolveOptions& opts) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-2.0, 2.0);

    for (int attempt = 0; attempt < opts.tries; ++attempt) {
        std::vector<std::optional<Rat>> pins(sys.n_vars);
        if (sys.homogeneous && sys.n_vars > 0)
            pins[attempt % sys.n_vars] = Rat(1);

        std::vector<Cx> x(sys.n_vars);
        for (int i = 0; i < sys.n_vars; ++i)
            x[i] = pins[i] ? Cx(pins[i]->to_double(), 0.0) : Cx(box(rng), 0.0);

        if (!gauss_newton(sys, pins, x, opts.newton_iters, opts.tol)) continue;

        // Pin-and-polish: freeze coordinates to small rationals one at a time,
        // re-converging after each pin, then certify the candidate exactly.
        bool dead = false;
        for (int round = 0; round <= sys.n_vars && !dead; ++round) {
            std::vector<Rat> cand(sys.n_vars);
            bool clean = true;
            for (int i = 0; i < sys.n_vars; ++i) {
                if (pins[i]) { cand[i] = *pins[i]; continue; }
                if (std::fabs(x[i].imag()) > 1e-7) { clean = false; break; }
                cand[i] = reconstruct(x[i].real(), opts.max_den);
            }
            if (clean && sys.verify_exact(cand)) return cand;

            // Pin the free coordinate closest to a small rational.
            int best = -1;
            double best_err = 2e-3;
            Rat best_val;
            for (int i = 0; i < sys.n_vars; ++i) {
                if (pins[i] || std::fabs(x[i].imag()) > 1e-7) continue;
                Rat r = reconstruct(x[i].real(), opts.pin_max_den);
                double err = std::fabs(x[i].real() - r.to_double());
                if (err < best_err) { best_err = err; best = i; best_val = r; }
            }
            if (best < 0) { dead = true; break; }
            pins[best] = best_val;
            x[best] = Cx(best_val.to_double(), 0.0);
            if (!gauss_newton(sys, pins, x, opts.newton_iters, opts.tol)) dead = true;
        }
    }
    return std::nullopt;
}

}  // namespace operlab::numeric
