#include "operlab/barhomology.hpp"

#include <algorithm>

namespace operlab {

namespace {

void fail(const std::string& what) { throw std::invalid_argument("invalid action table: " + what); }

}  // namespace

void MonoidAction::validate() const {
    const int nm = static_cast<int>(elements.size());
    const int na = static_cast<int>(points.size());
    if (nm == 0 || identity < 0 || identity >= nm) fail("bad identity");
    if (static_cast<int>(mul.size()) != nm || static_cast<int>(grade.size()) != nm)
        fail("monoid table shape");
    if (static_cast<int>(act.size()) != nm || static_cast<int>(point_grade.size()) != na)
        fail("action table shape");
    for (const auto& row : mul)
        if (static_cast<int>(row.size()) != nm) fail("monoid table shape");
    for (const auto& row : act)
        if (static_cast<int>(row.size()) != na) fail("action table shape");
    if (grade[identity] != 0) fail("identity must have grade 0");
    for (int g : grade)
        if (g < 0) fail("grades must be non-negative");
    for (int g : point_grade)
        if (g < 0) fail("grades must be non-negative");

    auto mok = [&](int v) { return v >= -1 && v < nm; };
    auto aok = [&](int v) { return v >= -1 && v < na; };
    for (int m = 0; m < nm; ++m) {
        for (int n = 0; n < nm; ++n) {
            if (!mok(mul[m][n])) fail("monoid index out of range");
            if (mul[m][n] != mul[n][m]) fail("commutativity");
            if (mul[m][n] >= 0 && grade[mul[m][n]] != grade[m] + grade[n])
                fail("grades not additive");
        }
        if (mul[identity][m] != m) fail("identity law");
        for (int a = 0; a < na; ++a) {
            if (!aok(act[m][a])) fail("action index out of range");
            if (act[m][a] >= 0 && point_grade[act[m][a]] != grade[m] + point_grade[a])
                fail("action grades not additive");
        }
    }
    for (int a = 0; a < na; ++a)
        if (act[identity][a] != a) fail("identity action law");
    // Associativity and the mixed action law, wherever all products are
    // represented on both sides.
    for (int m = 0; m < nm; ++m)
        for (int n = 0; n < nm; ++n) {
            int mn = mul[m][n];
            for (int k = 0; k < nm; ++k) {
                int nk = mul[n][k];
                if (mn >= 0 && nk >= 0 && mul[mn][k] != mul[m][nk]) fail("associativity");
            }
            for (int a = 0; a < na; ++a) {
                int na2 = act[n][a];
                if (mn >= 0 && na2 >= 0 && act[mn][a] != act[m][na2]) fail("action law");
            }
        }
}

FreeReport check_free(const MonoidAction& action) {
    const int nm = static_cast<int>(action.elements.size());
    const int na = static_cast<int>(action.points.size());
    for (int a = 0; a < na; ++a)
        for (int m = 0; m < nm; ++m)
            for (int n = m + 1; n < nm; ++n) {
                int x = action.act[m][a], y = action.act[n][a];
                if (x >= 0 && x == y) return {false, m, n, a};
            }
    return {};
}

TransitivityReport check_w_transitive(const MonoidAction& action) {
    const int nm = static_cast<int>(action.elements.size());
    const int na = static_cast<int>(action.points.size());
    for (int a = 0; a < na; ++a)
        for (int b = a + 1; b < na; ++b) {
            bool hit = false;
            for (int m = 0; m < nm && !hit; ++m)
                for (int n = 0; n < nm && !hit; ++n)
                    hit = action.act[m][a] >= 0 && action.act[m][a] == action.act[n][b];
            if (!hit) return {false, a, b};
        }
    return {};
}

NervePoset nerve_poset(const MonoidAction& action) {
    const int nm = static_cast<int>(action.elements.size());
    const int na = static_cast<int>(action.points.size());
    NervePoset nerve;
    nerve.mor.assign(na, std::vector<std::vector<int>>(na));
    for (int a = 0; a < na; ++a)
        for (int m = 0; m < nm; ++m)
            if (action.act[m][a] >= 0) nerve.mor[a][action.act[m][a]].push_back(m);
    for (const auto& row : nerve.mor)
        for (const auto& ms : row)
            if (ms.size() > 1) nerve.is_poset = false;
    if (check_free(action).free && !nerve.is_poset)
        throw std::logic_error("free action produced a non-poset quotient category");
    return nerve;
}

namespace {

int cell_grade(const MonoidAction& action, const BarCell& c) {
    int g = action.point_grade[c.a];
    for (int m : c.ms) g += action.grade[m];
    return g;
}

}  // namespace

BarComplex bar_complex(const MonoidAction& action, int N, int G) {
    if (N < 1) throw std::invalid_argument("simplicial truncation must be at least 1");
    action.validate();
    const int nm = static_cast<int>(action.elements.size());
    const int na = static_cast<int>(action.points.size());

    BarComplex complex;
    complex.N = N;
    complex.G = G;
    complex.cells.resize(N + 1);
    complex.boundary.resize(N + 1);

    for (int a = 0; a < na; ++a)
        if (action.point_grade[a] <= G) complex.cells[0].push_back({{}, a});
    for (int n = 1; n <= N; ++n)
        for (const auto& prev : complex.cells[n - 1])
            for (int m = 0; m < nm; ++m) {
                if (m == action.identity) continue;  // normalized complex
                BarCell c{{m}, prev.a};
                c.ms.insert(c.ms.end(), prev.ms.begin(), prev.ms.end());
                if (cell_grade(action, c) <= G) complex.cells[n].push_back(c);
            }
    for (auto& level : complex.cells) std::sort(level.begin(), level.end());

    for (int n = 1; n <= N; ++n) {
        std::map<BarCell, int> index;
        for (size_t i = 0; i < complex.cells[n - 1].size(); ++i)
            index[complex.cells[n - 1][i]] = static_cast<int>(i);
        auto& mat = complex.boundary[n];
        mat.assign(complex.cells[n].size(),
                   std::vector<long>(complex.cells[n - 1].size(), 0));
        for (size_t ci = 0; ci < complex.cells[n].size(); ++ci) {
            const BarCell& c = complex.cells[n][ci];
            for (int i = 0; i <= n; ++i) {
                BarCell face{{}, c.a};
                if (i == n) {
                    int moved = action.act[c.ms[n - 1]][c.a];
                    if (moved < 0) throw TruncationUnsound();
                    face.a = moved;
                    face.ms.assign(c.ms.begin(), c.ms.end() - 1);
                } else if (i == 0) {
                    face.ms.assign(c.ms.begin() + 1, c.ms.end());
                } else {
                    face.ms = c.ms;
                    int merged = action.mul[face.ms[i - 1]][face.ms[i]];
                    if (merged < 0) throw TruncationUnsound();
                    face.ms[i - 1] = merged;
                    face.ms.erase(face.ms.begin() + i);
                    if (merged == action.identity) continue;  // degenerate image
                }
                auto it = index.find(face);
                if (it == index.end()) throw TruncationUnsound();
                mat[ci][it->second] += (i % 2 == 0) ? 1 : -1;
            }
        }
    }

    // d o d = 0, exactly over the integers.
    for (int n = 2; n <= N; ++n) {
        const auto& a = complex.boundary[n];
        const auto& b = complex.boundary[n - 1];
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t k = 0; b.size() && k < b[0].size(); ++k) {
                long s = 0;
                for (size_t j = 0; j < b.size(); ++j) s += a[i][j] * b[j][k];
                if (s != 0) throw std::logic_error("bar differential does not square to zero");
            }
    }
    return complex;
}

namespace {

template <class F, class Make>
long matrix_rank(const std::vector<std::vector<long>>& m, Make make) {
    if (m.empty() || m[0].empty()) return 0;
    Matrix<F> mat(static_cast<int>(m.size()), static_cast<int>(m[0].size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) mat(int(i), int(j)) = make(m[i][j]);
    return mat.rank();
}

}  // namespace

std::vector<long> homology(const BarComplex& complex, long p) {
    std::vector<long> ranks(complex.N + 2, 0);
    for (int n = 1; n <= complex.N; ++n)
        ranks[n] = p == 0 ? matrix_rank<Rat>(complex.boundary[n], [](long v) { return Rat(v); })
                          : matrix_rank<Fp>(complex.boundary[n],
                                            [p](long v) { return Fp(v, p); });
    std::vector<long> betti;
    for (int i = 0; i <= complex.N - 2; ++i)
        betti.push_back(static_cast<long>(complex.cells[i].size()) - ranks[i] - ranks[i + 1]);
    return betti;
}

ContractibilityReport contractibility_report(const MonoidAction& action, int N, int G, long p) {
    ContractibilityReport rep;
    rep.free = check_free(action).free;
    rep.w_transitive = check_w_transitive(action).w_transitive;
    rep.nonempty = !action.points.empty();
    rep.betti = homology(bar_complex(action, N, G), p);
    if (rep.free && rep.w_transitive && rep.nonempty) {
        rep.contractible_confirmed = true;
        for (size_t i = 0; i < rep.betti.size(); ++i)
            if (rep.betti[i] != (i == 0 ? 1 : 0)) rep.contractible_confirmed = false;
    }
    return rep;
}

}  // namespace operlab
