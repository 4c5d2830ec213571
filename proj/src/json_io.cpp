#include "operlab/json_io.hpp"

namespace operlab::io {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad ") + what + ": " + e.what());
    }
}

}  // namespace

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    return guarded("rational", [&] {
        if (j.is_number_integer()) return Rat(j.get<long>());
        if (j.is_string()) return Rat::parse(j.get<std::string>());
        throw ParseError("rational must be a string \"p/q\" or an integer");
    });
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rat_to_json(c));
    return arr;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
    std::vector<Rat> c;
    for (const auto& e : j) c.push_back(rat_from_json(e));
    return Poly(std::move(c));
}

json ratfun_to_json(const RatFun& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFun ratfun_from_json(const json& j) {
    return guarded("rational function", [&] {
        if (j.is_array()) return RatFun(poly_from_json(j));  // polynomial shorthand
        if (j.is_string() || j.is_number_integer()) return RatFun(rat_from_json(j));
        return RatFun(poly_from_json(need(j, "num")), poly_from_json(need(j, "den")));
    });
}

json curve_to_json(const PuncturedCurve& curve) {
    json punctures = json::array();
    for (const auto& p : curve.punctures())
        punctures.push_back(p.infinite ? json("inf") : rat_to_json(p.value));
    return json{{"punctures", punctures}};
}

PuncturedCurve curve_from_json(const json& j) {
    return guarded("curve", [&] {
        std::vector<Puncture> ps;
        for (const auto& e : need(j, "punctures")) {
            if (e.is_string() && e.get<std::string>() == "inf")
                ps.push_back(Puncture::inf());
            else
                ps.push_back(Puncture::at(rat_from_json(e)));
        }
        return PuncturedCurve(std::move(ps));
    });
}

json system_to_json(const LocalSystem& sys) {
    json j = curve_to_json(sys.curve());
    j["derivation_unit"] = ratfun_to_json(sys.nu().unit());
    j["rank"] = sys.rank();
    json rows = json::array();
    for (int i = 0; i < sys.rank(); ++i) {
        json row = json::array();
        for (int k = 0; k < sys.rank(); ++k) row.push_back(ratfun_to_json(sys.A()(i, k)));
        rows.push_back(std::move(row));
    }
    j["A"] = std::move(rows);
    if (sys.has_form()) {
        json m = json::array();
        for (int i = 0; i < sys.rank(); ++i) {
            json row = json::array();
            for (int k = 0; k < sys.rank(); ++k)
                row.push_back(ratfun_to_json(sys.form().M(i, k)));
            m.push_back(std::move(row));
        }
        j["form"] = json{
            {"kind", sys.form().kind == FormKind::Symplectic ? "symplectic" : "symmetric"},
            {"M", std::move(m)}};
    }
    return j;
}

namespace {

Matrix<RatFun> matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    Matrix<RatFun> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols) throw ParseError("ragged matrix");
        for (int k = 0; k < cols; ++k) m(i, k) = ratfun_from_json(j.at(i).at(k));
    }
    return m;
}

}  // namespace

LocalSystem system_from_json(const json& j) {
    return guarded("local system", [&] {
        PuncturedCurve curve = curve_from_json(j);
        Derivation nu(curve, ratfun_from_json(need(j, "derivation_unit")));
        Matrix<RatFun> A = matrix_from_json(need(j, "A"));
        std::optional<BilinearForm> form;
        if (j.contains("form") && !j.at("form").is_null()) {
            const json& f = j.at("form");
            std::string kind = need(f, "kind").get<std::string>();
            if (kind != "symplectic" && kind != "symmetric")
                throw ParseError("form kind must be \"symplectic\" or \"symmetric\"");
            form = BilinearForm{
                kind == "symplectic" ? FormKind::Symplectic : FormKind::Symmetric,
                matrix_from_json(need(f, "M"))};
        }
        return LocalSystem(std::move(curve), std::move(nu), std::move(A), std::move(form));
    });
}

json line_to_json(const LineSection& line) {
    json g = json::array();
    for (const auto& e : line.g) g.push_back(ratfun_to_json(e));
    json coords = json::array();
    for (const auto& c : line.coords) coords.push_back(rat_to_json(c));
    return json{{"d", line.d}, {"g", std::move(g)}, {"coords", std::move(coords)}};
}

LineSection line_from_json(const LocalSystem& sys, const json& j) {
    return guarded("line section", [&] {
        SectionVector g;
        for (const auto& e : need(j, "g")) g.push_back(ratfun_from_json(e));
        return make_line(sys, need(j, "d").get<int>(), std::move(g));
    });
}

json flag_to_json(const Flag& flag) {
    json rows = json::array();
    for (const auto& row : flag.rows) {
        json r = json::array();
        for (const auto& e : row) r.push_back(ratfun_to_json(e));
        rows.push_back(std::move(r));
    }
    return json{{"r", flag.r},
                {"rows", std::move(rows)},
                {"columns", flag.columns},
                {"discriminant", ratfun_to_json(flag.discriminant)}};
}

json quadratic_system_to_json(const QuadraticSystem& qs) {
    json eqs = json::array();
    for (const auto& eq : qs.equations) {
        json m = json::array();
        for (int i = 0; i < qs.n_vars; ++i) {
            json row = json::array();
            for (int k = 0; k < qs.n_vars; ++k) row.push_back(rat_to_json(eq.matrix(i, k)));
            m.push_back(std::move(row));
        }
        eqs.push_back(json{{"pair_index", eq.pair_index},
                           {"basis_index", eq.basis_index},
                           {"matrix", std::move(m)}});
    }
    return json{{"n_vars", qs.n_vars},   {"d", qs.d},
                {"C3", qs.C3},           {"beta", qs.beta},
                {"raw_count", qs.raw_count}, {"reduced_count", qs.reduced_count},
                {"equations", std::move(eqs)}};
}

json connectivity_to_json(const ConnectivityReport& rep) {
    return json{{"N", rep.N}, {"r", rep.r}, {"bound", rep.bound}, {"slope", rep.slope}};
}

json witness_to_json(const WitnessPair& w) {
    return json{{"m1", ratfun_to_json(w.m1.m)},
                {"m2", ratfun_to_json(w.m2.m)},
                {"grade", w.m1.e},
                {"localizer", poly_to_json(w.localizer)}};
}

json g2_to_json(const G2Report& rep) {
    return json{{"slope", rep.slope}, {"diverges", rep.diverges}, {"verdict", rep.verdict}};
}

json action_to_json(const MonoidAction& action) {
    return json{{"elements", action.elements},
                {"identity", action.identity},
                {"mul", action.mul},
                {"grade", action.grade},
                {"points", action.points},
                {"act", action.act},
                {"point_grade", action.point_grade}};
}

MonoidAction action_from_json(const json& j) {
    return guarded("monoid action", [&] {
        MonoidAction a;
        a.elements = need(j, "elements").get<std::vector<std::string>>();
        a.identity = need(j, "identity").get<int>();
        a.mul = need(j, "mul").get<std::vector<std::vector<int>>>();
        a.points = need(j, "points").get<std::vector<std::string>>();
        a.act = need(j, "act").get<std::vector<std::vector<int>>>();
        if (j.contains("grade"))
            a.grade = j.at("grade").get<std::vector<int>>();
        else
            a.grade.assign(a.elements.size(), 0);
        if (j.contains("point_grade"))
            a.point_grade = j.at("point_grade").get<std::vector<int>>();
        else
            a.point_grade.assign(a.points.size(), 0);
        a.validate();
        return a;
    });
}

json contractibility_to_json(const ContractibilityReport& rep) {
    return json{{"free", rep.free},
                {"w_transitive", rep.w_transitive},
                {"nonempty", rep.nonempty},
                {"betti", rep.betti},
                {"contractible_confirmed", rep.contractible_confirmed}};
}

json projective_system_to_json(const ProjectiveSystem& sys) {
    json forms = json::array();
    for (const auto& f : sys.forms) {
        json monos = json::array();
        for (const auto& m : f.monomials)
            monos.push_back(json{{"exponents", m.exps}, {"coeff", poly_to_json(m.coeff)}});
        forms.push_back(std::move(monos));
    }
    return json{{"n", sys.n}, {"forms", std::move(forms)}};
}

ProjectiveSystem projective_system_from_json(const json& j) {
    return guarded("projective system", [&] {
        std::vector<std::vector<TsenMonomial>> forms;
        for (const auto& f : need(j, "forms")) {
            std::vector<TsenMonomial> monos;
            for (const auto& m : f)
                monos.push_back(TsenMonomial{poly_from_json(need(m, "coeff")),
                                             need(m, "exponents").get<std::vector<int>>()});
            forms.push_back(std::move(monos));
        }
        return make_projective_system(need(j, "n").get<int>(), std::move(forms));
    });
}

json tsen_count_to_json(const TsenCount& c) {
    return json{{"unknowns", c.unknowns},
                {"equations", c.equations},
                {"slack", c.slack},
                {"slope", c.slope},
                {"diverges", c.diverges}};
}

json section_to_json(const SectionCandidate& s) {
    json coords = json::array();
    for (const auto& p : s.coords) coords.push_back(poly_to_json(p));
    return json{{"e", s.e}, {"coords", std::move(coords)}};
}

}  // namespace operlab::io
