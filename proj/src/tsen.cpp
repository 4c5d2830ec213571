#include "operlab/tsen.hpp"

#include <algorithm>
#include <map>

namespace operlab {

ProjectiveSystem make_projective_system(int n, std::vector<std::vector<TsenMonomial>> forms) {
    if (n < 1) throw std::invalid_argument("ambient dimension must be at least 1");
    if (forms.empty()) throw std::invalid_argument("at least one form required");
    ProjectiveSystem sys;
    sys.n = n;
    for (auto& monos : forms) {
        TsenForm form;
        form.x_degree = -1;
        for (auto& m : monos) {
            if (m.coeff.is_zero()) continue;
            if (static_cast<int>(m.exps.size()) != n + 1)
                throw std::invalid_argument("monomial exponent length mismatch");
            int deg = 0;
            for (int ei : m.exps) {
                if (ei < 0) throw std::invalid_argument("negative exponent");
                deg += ei;
            }
            if (form.x_degree < 0) form.x_degree = deg;
            if (deg != form.x_degree) throw std::invalid_argument("form is not homogeneous");
            form.t_degree = std::max(form.t_degree, m.coeff.degree());
            form.monomials.push_back(std::move(m));
        }
        if (form.x_degree < 1) throw std::invalid_argument("forms must have degree at least 1");
        sys.forms.push_back(std::move(form));
    }
    return sys;
}

TsenCount tsen_count(const ProjectiveSystem& sys, int e) {
    if (e < 0) throw std::invalid_argument("ansatz degree must be non-negative");
    TsenCount c{};
    c.unknowns = static_cast<long>(sys.n + 1) * (e + 1) - 1;
    long total_deg = 0;
    for (const auto& f : sys.forms) {
        c.equations += static_cast<long>(f.x_degree) * e + f.t_degree + 1;
        total_deg += f.x_degree;
    }
    c.slack = c.unknowns - c.equations;
    c.slope = (sys.n + 1) - total_deg;
    c.diverges = c.slope > 0;
    return c;
}

numeric::PolySystem assemble_system(const ProjectiveSystem& sys, int e) {
    if (e < 0) throw std::invalid_argument("ansatz degree must be non-negative");
    const int n_vars = (sys.n + 1) * (e + 1);  // coefficient of t^j in x_k

    numeric::PolySystem ps;
    ps.n_vars = n_vars;
    ps.homogeneous = true;

    for (const auto& form : sys.forms) {
        // Expand the form at the ansatz as a polynomial in the coefficient
        // variables with Q[t] coefficients.
        std::map<std::vector<int>, Poly> expansion;
        for (const auto& mono : form.monomials) {
            std::map<std::vector<int>, Poly> acc{{std::vector<int>(n_vars, 0), mono.coeff}};
            for (int k = 0; k <= sys.n; ++k)
                for (int rep = 0; rep < mono.exps[k]; ++rep) {
                    std::map<std::vector<int>, Poly> next;
                    for (const auto& [exps, c] : acc)
                        for (int j = 0; j <= e; ++j) {
                            auto ex = exps;
                            ex[k * (e + 1) + j] += 1;
                            auto& slot = next[std::move(ex)];
                            slot += Poly::monomial(Rat(1), j) * c;
                        }
                    acc = std::move(next);
                }
            for (const auto& [exps, c] : acc) expansion[exps] += c;
        }

        const int n_eqs = form.x_degree * e + form.t_degree + 1;
        std::vector<numeric::PolyEq> eqs(n_eqs);
        for (const auto& [exps, c] : expansion)
            for (int j = 0; j <= c.degree(); ++j) {
                if (c[j].is_zero()) continue;
                if (j >= n_eqs) throw std::logic_error("t-degree bound violated in assembly");
                eqs[j].terms.push_back({c[j], exps});
            }
        for (auto& eq : eqs) ps.eqs.push_back(std::move(eq));
    }
    return ps;
}

SectionCandidate make_section_candidate(int e, std::vector<Poly> coords) {
    if (coords.empty()) throw std::invalid_argument("empty candidate");
    Poly content;
    bool nonzero = false;
    for (const auto& p : coords) {
        if (p.degree() > e) throw std::invalid_argument("candidate degree exceeds the ansatz");
        nonzero = nonzero || !p.is_zero();
        content = Poly::gcd(content, p);
    }
    if (!nonzero) throw std::invalid_argument("candidate must be nonzero");
    if (content.degree() != 0)
        throw std::invalid_argument("candidate is not primitive: common factor " +
                                    poly_str(content));
    return SectionCandidate{e, std::move(coords)};
}

bool verify_section(const ProjectiveSystem& sys, const SectionCandidate& cand) {
    if (static_cast<int>(cand.coords.size()) != sys.n + 1)
        throw std::invalid_argument("candidate length mismatch");
    for (const auto& form : sys.forms) {
        Poly total;
        for (const auto& mono : form.monomials) {
            Poly term = mono.coeff;
            for (int k = 0; k <= sys.n; ++k) term *= cand.coords[k].pow(mono.exps[k]);
            total += term;
        }
        if (!total.is_zero()) return false;
    }
    return true;
}

TsenSolveResult solve_section(const ProjectiveSystem& sys, int e, unsigned seed, int tries) {
    TsenSolveResult result;
    TsenCount count = tsen_count(sys, e);
    if (count.slack < 1)
        result.warnings.push_back("slack " + std::to_string(count.slack) +
                                  " below 1: the counting heuristic does not favor a section");
    long total_deg = 0;
    for (const auto& f : sys.forms) total_deg += f.x_degree;
    if (total_deg > sys.n)
        result.warnings.push_back("sum of degrees exceeds the ambient dimension: "
                                  "the Tsen hypothesis is violated, no guarantee applies");

    numeric::PolySystem ps = assemble_system(sys, e);
    numeric::SolveOptions opts;
    opts.tries = 10;
    const int rounds = std::max(1, tries / opts.tries);
    for (int round = 0; round < rounds; ++round) {
        auto sol = numeric::rational_solve(ps, seed + static_cast<unsigned>(round), opts);
        if (!sol) continue;
        std::vector<Poly> coords(sys.n + 1);
        bool nonzero = false;
        for (int k = 0; k <= sys.n; ++k) {
            for (int j = 0; j <= e; ++j)
                coords[k] += Poly::monomial((*sol)[k * (e + 1) + j], j);
            nonzero = nonzero || !coords[k].is_zero();
        }
        if (!nonzero) continue;
        // Clear the polynomial content; the forms are homogeneous, so the
        // primitive representative is a section of the same line.
        Poly content;
        for (const auto& p : coords) content = Poly::gcd(content, p);
        if (content.degree() > 0)
            for (auto& p : coords) p = p / content;
        auto cand = make_section_candidate(e, std::move(coords));
        if (verify_section(sys, cand)) {
            result.section = std::move(cand);
            return result;
        }
    }
    return result;
}

}  // namespace operlab
