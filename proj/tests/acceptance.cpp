// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

#include "operlab/barhomology.hpp"
#include "operlab/monoidquot.hpp"
#include "operlab/opers.hpp"
#include "operlab/tsen.hpp"
#include "test_util.hpp"

namespace {

using namespace operlab;
using namespace operlab::testutil;

int failures = 0;

void report(int idx, const std::string& what, bool ok, double seconds) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << what << " ("
              << seconds << " s)\n";
    if (!ok) ++failures;
}

template <class F>
void run(int idx, const std::string& what, F body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cout << "  unexpected exception: " << e.what() << "\n";
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, what, ok, dt);
}

std::vector<PuncturedCurve> all_curves() { return {curve_inf(), curve_0inf(), curve_01inf()}; }

// A random element of sp(4) for the standard form: [[P, Q], [R, -P^T]]
// with Q and R symmetric, entries random polynomials.
Matrix<RatFun> random_sp4(std::mt19937_64& rng, int max_deg) {
    Matrix<RatFun> a(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            RatFun p{random_poly(rng, max_deg)};
            a(i, j) = p;
            a(j + 2, i + 2) = -p;
        }
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j) {
            RatFun q{random_poly(rng, max_deg)}, r{random_poly(rng, max_deg)};
            a(i, j + 2) = a(j, i + 2) = q;
            a(i + 2, j) = a(j + 2, i) = r;
        }
    return a;
}

// Nilpotent Jordan connection matrix and the alternating antidiagonal form it
// preserves: M(i, n-1-i) = (-1)^i.
LocalSystem planted_jordan_sp(int n) {
    Matrix<RatFun> a(n, n), m(n, n);
    for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = RatFun(1);
    for (int i = 0; i < n; ++i) m(i, n - 1 - i) = RatFun(i % 2 == 0 ? 1 : -1);
    return LocalSystem(curve_inf(), Derivation(curve_inf(), RatFun(1)), a,
                       BilinearForm{FormKind::Symplectic, m});
}

Matrix<RatFun> antidiag_ones(int n) {
    Matrix<RatFun> m(n, n);
    for (int i = 0; i < n; ++i) m(i, n - 1 - i) = RatFun(1);
    return m;
}

LocalSystem flat_system(const PuncturedCurve& curve, int rank,
                        std::optional<BilinearForm> form = std::nullopt) {
    return LocalSystem(curve, Derivation(curve, RatFun(1)), Matrix<RatFun>(rank, rank),
                       std::move(form));
}

bool const_proportional(const SectionVector& u, const SectionVector& v) {
    // u = c * v for a nonzero rational constant c.
    std::optional<RatFun> c;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero() != v[i].is_zero()) return false;
        if (u[i].is_zero()) continue;
        RatFun q = u[i] / v[i];
        if (q.num().degree() != 0 || q.den().degree() != 0) return false;
        if (c && *c != q) return false;
        c = q;
    }
    return true;
}

MonoidAction z2_regular() {
    MonoidAction a;
    a.elements = {"1", "s"};
    a.identity = 0;
    a.mul = {{0, 1}, {1, 0}};
    a.grade = {0, 0};
    a.points = {"1", "s"};
    a.act = {{0, 1}, {1, 0}};
    a.point_grade = {0, 0};
    return a;
}

MonoidAction nat_on_nat(int cap) {
    MonoidAction a;
    a.identity = 0;
    for (int i = 0; i <= cap; ++i) {
        a.elements.push_back(std::to_string(i));
        a.points.push_back(std::to_string(i));
        a.grade.push_back(i);
        a.point_grade.push_back(i);
    }
    a.mul.assign(cap + 1, std::vector<int>(cap + 1));
    a.act = a.mul;
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; j <= cap; ++j) a.mul[i][j] = a.act[i][j] = i + j <= cap ? i + j : -1;
    return a;
}

bool boundary_squares_to_zero(const BarComplex& bc) {
    for (int n = 2; n < static_cast<int>(bc.boundary.size()); ++n) {
        const auto& dn = bc.boundary[n];
        const auto& dm = bc.boundary[n - 1];
        if (dn.empty() || dm.empty()) continue;
        for (size_t i = 0; i < dn.size(); ++i)
            for (size_t k = 0; k < dm[0].size(); ++k) {
                long acc = 0;
                for (size_t j = 0; j < dm.size(); ++j) acc += dn[i][j] * dm[j][k];
                if (acc != 0) return false;
            }
    }
    return true;
}

// ---------------------------------------------------------------------------

bool criterion1_dimension() {
    for (const auto& curve : all_curves())
        for (int d = 0; d <= 20; ++d)
            if (curve.space_dim(d) != d * curve.num_punctures() + 1) return false;
    return true;
}

bool criterion2_compatibility() {
    std::mt19937_64 rng(20260823);
    auto m = testutil::std_symplectic(4);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix<RatFun> a = random_sp4(rng, 2);
        LocalSystem sys(curve_inf(), Derivation(curve_inf(), RatFun(1)), a,
                        BilinearForm{FormKind::Symplectic, m});
        if (!sys.check_compatibility().ok) return false;

        // Perturb one entry of the upper-left block: this always leaves sp.
        std::uniform_int_distribution<int> idx(0, 1);
        int i = idx(rng), j = idx(rng);
        Matrix<RatFun> bad = a;
        bad(i, j) = bad(i, j) + RatFun(random_nonzero_rat(rng));
        LocalSystem broken(curve_inf(), Derivation(curve_inf(), RatFun(1)), bad,
                           BilinearForm{FormKind::Symplectic, m});
        auto rep = broken.check_compatibility();
        if (rep.ok) return false;
        if (rep.row < 0 || rep.row >= 4 || rep.col < 0 || rep.col >= 4) return false;
        // The pinpointed entry really violates nu(M) = A*M + M*A^T (M constant).
        RatFun defect;
        for (int k = 0; k < 4; ++k)
            defect += bad(rep.row, k) * m(k, rep.col) + m(rep.row, k) * bad(rep.col, k);
        if (defect.is_zero()) return false;
    }
    return true;
}

bool criterion3_pairing_induction() {
    std::mt19937_64 rng(333);
    auto curves = all_curves();
    auto msp = testutil::std_symplectic(4);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        int which = pick(rng);
        const auto& curve = curves[which];
        // Polynomial connection matrices on the one-puncture curve; constant
        // ones where extra punctures already make the iterates grow fast.
        LocalSystem sys(curve, Derivation(curve, RatFun(1)), random_sp4(rng, which == 0 ? 1 : 0),
                        BilinearForm{FormKind::Symplectic, msp});
        SectionVector g(4);
        for (auto& e : g) e = random_section(rng, curve, 1);
        // Deep iterates on the three-puncture curve cost seconds each; cap
        // their depth there and exercise the full range on the others.
        int max_sum = which == 2 ? 2 : 5;
        std::uniform_int_distribution<int> im(0, max_sum);
        int i = im(rng);
        std::uniform_int_distribution<int> mm(0, max_sum - i);
        int m = mm(rng);
        SectionVector gi = sys.nabla_iter(g, i);
        SectionVector gim = sys.nabla_iter(gi, m);
        RatFun lhs = sys.nu().apply(sys.pairing(gi, gim));
        RatFun rhs = sys.pairing(sys.nabla(gi), gim) + sys.pairing(gi, sys.nabla(gim));
        if (lhs != rhs) return false;
    }

    // Planted exact solutions of the Sp(4) and Sp(6) quadric systems.
    struct Planted {
        int n;
        std::vector<long> g;
    };
    for (const auto& [n, coords] : {Planted{4, {1, 2, 2, 5}}, Planted{6, {1, 2, 2, 3, 4, 7}}}) {
        LocalSystem sys = planted_jordan_sp(n);
        if (!sys.check_compatibility().ok) return false;
        SectionVector g;
        for (long c : coords) g.push_back(RatFun(Rat(c)));
        LineSection line = make_line(sys, 0, g);
        if (!gen_sp_equations(sys, 0).vanishes_at(line.coords)) return false;
        // Brute-force oracle: the whole Gram matrix up to m-1 vanishes.
        auto gram = full_pairing_matrix(sys, line, n / 2 - 1);
        for (int i = 0; i < gram.rows(); ++i)
            for (int j = 0; j < gram.cols(); ++j)
                if (!gram(i, j).is_zero()) return false;
        if (!verify_oper_sp(sys, line).certified) return false;
    }
    return true;
}

bool criterion4_counting() {
    LocalSystem sp4 = flat_system(curve_inf(), 4,
                                  BilinearForm{FormKind::Symplectic, testutil::std_symplectic(4)});
    if (sp4.C1() != 0 || sp4.C2() != 0 || sp4.nu().d_nu() != 0) return false;
    for (int d = 1; d <= 50; ++d) {
        auto rep = count_and_bound(sp4, d);
        if (rep.N != 4 * d + 3 || rep.r != 2 * d + 1 || rep.bound != 2 * d + 2) return false;
    }
    // Slope of the bound: bound(d+1) - bound(d) = 2|D| for Sp(2m) and SO(2m).
    for (const auto& curve : all_curves())
        for (int n : {4, 6})
            for (auto kind : {FormKind::Symplectic, FormKind::Symmetric}) {
                auto m = kind == FormKind::Symplectic ? testutil::std_symplectic(n)
                                                     : antidiag_ones(n);
                LocalSystem sys = flat_system(curve, n, BilinearForm{kind, m});
                long two_d = 2L * curve.num_punctures();
                for (int d = 1; d <= 10; ++d) {
                    auto lo = count_and_bound(sys, d), hi = count_and_bound(sys, d + 1);
                    if (hi.bound - lo.bound != two_d || lo.slope != two_d) return false;
                }
            }
    return true;
}

bool criterion5_g2() {
    auto rep = g2_counting_report(1);
    return rep.slope == 0 && !rep.diverges && rep.verdict == "fails";
}

bool criterion6_witness() {
    std::mt19937_64 rng(666);
    auto curves = all_curves();
    std::uniform_int_distribution<int> pick(0, 2), dg(0, 2), eg(1, 2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto& curve = curves[pick(rng)];
        LocalSystem sys = flat_system(curve, 2);
        int d0 = dg(rng), e = eg(rng);
        SectionVector h0{random_nonzero_section(rng, curve, d0), random_section(rng, curve, d0)};
        LineSection base = make_line(sys, d0, h0);
        MonoidElt m = make_monoid_elt(curve, e, random_nonzero_section(rng, curve, e));
        MonoidElt m2 = make_monoid_elt(curve, e, random_nonzero_section(rng, curve, e));
        LineSection f = act(m, base), g = act(m2, base);
        WitnessPair w = find_witness(f, g);
        for (int i = 0; i < 2; ++i)
            if (w.m1.m * f.g[i] != w.m2.m * g.g[i]) return false;
    }

    // One-parameter families over Q[s].
    const Poly S{Rat(0), Rat(1)};
    auto random_bipoly = [&](int deg_t, bool unit_at_0) {
        std::vector<Poly> c(deg_t + 1);
        for (auto& x : c) x = Poly{random_rat(rng), random_rat(rng)};
        if (unit_at_0) c[0] = Poly(Rat(1)) + S * c[0];  // constant term 1 in s
        return BiPoly(std::move(c));
    };
    for (int trial = 0; trial < 20; ++trial) {
        int d0 = dg(rng), e = eg(rng);
        std::vector<BiPoly> entries{random_bipoly(d0, true), random_bipoly(d0, false)};
        FamilyLine base = make_family_line(d0, entries);
        FamilyElt m = make_family_elt(e, random_bipoly(e, true));
        FamilyElt m2 = make_family_elt(e, random_bipoly(e, true));
        FamilyLine f = family_act(m, base), g = family_act(m2, base);
        FamilyWitness w = family_find_witness(f, g);
        for (size_t i = 0; i < f.entries.size(); ++i)
            if (w.m1.m * f.entries[i] != w.m2.m * g.entries[i]) return false;

        auto specialize_elt = [](const FamilyElt& elt, const Rat& s0) {
            std::vector<Rat> c;
            for (const auto& p : elt.m.coeffs()) c.push_back(p.eval(s0));
            return RatFun(Poly(std::move(c)));
        };
        int checked = 0;
        for (int k = -10; k <= 10 && checked < 5; ++k) {
            Rat s0(k);
            if (w.localizer.eval(s0).is_zero()) continue;
            RatFun a = specialize_elt(w.m1, s0), b = specialize_elt(w.m2, s0);
            if (a.is_zero() || b.is_zero()) return false;
            SectionVector fs = family_specialize(f, s0), gs = family_specialize(g, s0);
            for (size_t i = 0; i < fs.size(); ++i)
                if (a * fs[i] != b * gs[i]) return false;
            ++checked;
        }
        if (checked < 5) return false;
    }
    return true;
}

bool criterion7_freeness() {
    std::mt19937_64 rng(777);
    auto curves = all_curves();
    std::uniform_int_distribution<int> pick(0, 2), dg(0, 2), eg(1, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& curve = curves[pick(rng)];
        LocalSystem sys = flat_system(curve, 2);
        int d0 = dg(rng), e = eg(rng);
        LineSection f = make_line(
            sys, d0, {random_nonzero_section(rng, curve, d0), random_section(rng, curve, d0)});
        MonoidElt m = make_monoid_elt(curve, e, random_nonzero_section(rng, curve, e));
        if (!same_image(act(m, f), f)) return false;
    }
    for (int trial = 0; trial < 200; ++trial) {
        const auto& curve = curves[pick(rng)];
        LocalSystem sys = flat_system(curve, 2);
        int d0 = dg(rng), e = eg(rng);
        LineSection f = make_line(
            sys, d0, {random_nonzero_section(rng, curve, d0), random_section(rng, curve, d0)});
        MonoidElt m = make_monoid_elt(curve, e, random_nonzero_section(rng, curve, e));
        MonoidElt m2 = make_monoid_elt(curve, e, random_nonzero_section(rng, curve, e));
        RatFun q = m2.m / m.m;
        if (q.num().degree() == 0 && q.den().degree() == 0) {
            --trial;  // same projective class: resample
            continue;
        }
        // Projective injectivity: distinct classes give distinct images.
        if (const_proportional(act(m, f).g, act(m2, f).g)) return false;
        if (!freeness_check(m, m2, f)) return false;
        // Positive control: a constant multiple stays in the same class.
        MonoidElt m3 = make_monoid_elt(curve, e, RatFun(Rat(3)) * m.m);
        if (!const_proportional(act(m, f).g, act(m3, f).g)) return false;
        if (!freeness_check(m, m3, f)) return false;
    }
    return true;
}

bool criterion8_bar() {
    MonoidAction z2 = z2_regular();
    BarComplex b1 = bar_complex(z2, 5, 0);
    if (!boundary_squares_to_zero(b1)) return false;
    if (homology(b1, 0) != std::vector<long>{1, 0, 0, 0}) return false;

    MonoidAction pt = z2;
    pt.points = {"pt"};
    pt.act = {{0}, {0}};
    pt.point_grade = {0};
    BarComplex b2 = bar_complex(pt, 4, 0);
    if (!boundary_squares_to_zero(b2)) return false;
    if (homology(b2, 2) != std::vector<long>{1, 1, 1} || homology(b2, 0) != std::vector<long>{1, 0, 0})
        return false;

    BarComplex b3 = bar_complex(nat_on_nat(4), 3, 4);
    if (!boundary_squares_to_zero(b3)) return false;
    if (homology(b3, 0) != std::vector<long>{1, 0}) return false;
    return true;
}

bool criterion9_tsen() {
    // t*x^2 + (1-t)*y^2 - z^2 over P^2.
    ProjectiveSystem conic = make_projective_system(
        2, {{TsenMonomial{Poly{Rat(0), Rat(1)}, {2, 0, 0}},
             TsenMonomial{Poly{Rat(1), Rat(-1)}, {0, 2, 0}},
             TsenMonomial{Poly{Rat(-1)}, {0, 0, 2}}}});
    auto res = solve_section(conic, 1, 11, 100);
    if (!res.section || !verify_section(conic, *res.section)) return false;

    ProjectiveSystem quadric = make_projective_system(
        2, {{TsenMonomial{Poly{Rat(1)}, {1, 1, 0}}, TsenMonomial{Poly{Rat(-1)}, {0, 0, 2}}}});
    auto res2 = solve_section(quadric, 2, 3, 100);
    if (!res2.section || !verify_section(quadric, *res2.section)) return false;
    return true;
}

bool criterion10_flags() {
    std::mt19937_64 rng(1010);
    auto curves = all_curves();
    std::uniform_int_distribution<int> pick(0, 2), dg(0, 2);
    for (int rank : {2, 3}) {
        int certified = 0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto& curve = curves[pick(rng)];
            Matrix<RatFun> a(rank, rank);
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j) a(i, j) = RatFun(random_poly(rng, 2));
            LocalSystem sys(curve, Derivation(curve, RatFun(1)), a);
            SectionVector g(rank);
            g[0] = random_nonzero_section(rng, curve, dg(rng));
            for (int i = 1; i < rank; ++i) g[i] = random_section(rng, curve, 2);
            LineSection line = make_line(sys, 2, g);
            try {
                Flag flag = complete_flag(sys, line, rank);
                if (!verify_oper_gl(sys, flag).certified) return false;
                if (flag.discriminant.is_zero()) return false;
                ++certified;
            } catch (const DegenerateFlag&) {
            }
        }
        if (certified == 0) return false;  // the generic case must occur

        // A = 0 with a constant line: nabla kills it, so the flag always
        // degenerates.
        for (int trial = 0; trial < 20; ++trial) {
            const auto& curve = curves[pick(rng)];
            LocalSystem sys = flat_system(curve, rank);
            SectionVector g(rank);
            g[0] = RatFun(random_nonzero_rat(rng));
            for (int i = 1; i < rank; ++i) g[i] = RatFun(random_rat(rng));
            LineSection line = make_line(sys, 0, g);
            try {
                complete_flag(sys, line, rank);
                return false;
            } catch (const DegenerateFlag&) {
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    run(1, "graded dimension formula, d in [0,20], 1-3 punctures", criterion1_dimension);
    run(2, "compatibility accepted/rejected with pinpointed entry", criterion2_compatibility);
    run(3, "pairing induction identity and planted Gram vanishing", criterion3_pairing_induction);
    run(4, "counting regression and 2|D| bound slope", criterion4_counting);
    run(5, "degree (2,2,3) in ambient 7: slack slope 0, fails", criterion5_g2);
    run(6, "witness identities, pointwise and in families", criterion6_witness);
    run(7, "fiber preservation and projective freeness", criterion7_freeness);
    run(8, "bar homology of Z/2, a point, and graded N", criterion8_bar);
    run(9, "exactly verified conic and quadric sections", criterion9_tsen);
    run(10, "flag completion certifies or degenerates", criterion10_flags);
    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
