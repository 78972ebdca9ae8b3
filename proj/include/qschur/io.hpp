#pragma once

#include "qschur/config.hpp"
#include "qschur/howe.hpp"
#include "qschur/schur.hpp"
#include "qschur/springer.hpp"

#include "json.hpp"

namespace qschur {

using Json = nlohmann::ordered_json;

inline Json word_json(const WeylGroup& W, WeylGroup::Id w) {
    Json a = Json::array();
    for (uint8_t i : W.word(w)) a.push_back(int(i) + 1);
    return a;
}

inline Json xi_json(const OrbitTable& t, const Xi& xi) {
    const WeylGroup& W = t.datum().weyl();
    return Json{{"gamma", t.orbit(xi.gamma).label},
                {"w_word", word_json(W, xi.w)},
                {"nu", t.orbit(xi.nu).label}};
}

inline Json census_json(const OrbitTable& t) {
    const WeylGroup& W = t.datum().weyl();
    CensusReport rep = census(t);
    Json orbits = Json::array();
    for (const auto& o : t.orbits()) {
        Json J = Json::array();
        for (int j : o.J) J.push_back(j + 1);
        orbits.push_back(Json{{"label", o.label},
                              {"rep", w_to_string(o.rep, t.datum().coord_denom())},
                              {"size", o.size},
                              {"J", J},
                              {"num_min_reps", o.min_reps.size()}});
    }
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json cells = Json::array();
        for (auto y : e.closure_cells) cells.push_back(word_json(W, y));
        entries.push_back(Json{{"gamma", t.orbit(e.gamma).label},
                               {"w_word", word_json(W, e.w)},
                               {"nu", t.orbit(e.nu).label},
                               {"dim_F_gamma", e.dim_flag_gamma},
                               {"dim_Z", e.dim_z},
                               {"coset_size", e.coset_size},
                               {"closure_cells", cells}});
    }
    return Json{{"datum", t.datum().name()},
                {"qf", t.spec().to_string()},
                {"weights", t.total_weights()},
                {"orbits", orbits},
                {"entries", entries},
                {"xi_total", rep.xi_total}};
}

inline Json schur_element_json(const OrbitTable& t, const SchurElement& a) {
    Json terms = Json::array();
    for (const auto& [xi, c] : a) {
        Json j = xi_json(t, xi);
        j["coef"] = c.to_string();
        terms.push_back(std::move(j));
    }
    return terms;
}

inline Json consts_json(const OrbitTable& t, int jobs = 1) {
    SchurContext<LaurentScalar> ctx(t, symbolic_q());
    auto table = structure_table(ctx, jobs);
    Json basis = Json::array();
    for (const auto& xi : ctx.basis()) basis.push_back(xi_json(t, xi));
    Json products = Json::array();
    for (size_t i = 0; i < ctx.basis().size(); ++i)
        for (size_t j = 0; j < ctx.basis().size(); ++j)
            products.push_back(Json{{"left_xi", xi_json(t, ctx.basis()[i])},
                                    {"right_xi", xi_json(t, ctx.basis()[j])},
                                    {"result", schur_element_json(t, table[i][j])}});
    return Json{{"datum", t.datum().name()},
                {"qf", t.spec().to_string()},
                {"dim", ctx.dim()},
                {"basis", basis},
                {"products", products}};
}

inline Json howe_json(const HoweVerdict& v) {
    std::ostringstream q0;
    q0 << v.q0;
    return Json{{"hypothesis", v.hypothesis},
                {"dim_bimodule", v.dim_bimodule},
                {"dim_commutant_left", v.dim_commutant_left},
                {"dim_commutant_right", v.dim_commutant_right},
                {"dim_image_left", v.dim_image_left},
                {"dim_image_right", v.dim_image_right},
                {"verdict", v.holds ? "holds" : "fails"},
                {"witness", v.witness},
                {"q0", q0.str()}};
}

inline Json langlands_json(const LanglandsReport& r) {
    return Json{{"check", "langlands_dim"},
                {"xi_primal", r.xi_primal},
                {"xi_dual", r.xi_dual},
                {"result", r.pass ? "pass" : "fail"},
                {"witnesses", r.detail}};
}

inline Json center_json(const CenterReport& r, const std::string& window) {
    return Json{{"check", "center"},
                {"window", window},
                {"result", r.pass ? "pass" : "fail"},
                {"generators_checked", r.generators_checked},
                {"witnesses", r.witness}};
}

inline Json freeness_json(const FreenessReport& r, const std::string& window) {
    std::ostringstream q0;
    q0 << r.q0;
    return Json{{"check", "freeness"},
                {"window", window},
                {"result", r.pass ? "pass" : "fail"},
                {"candidates", r.candidates},
                {"rank", r.rank},
                {"q0", q0.str()}};
}

inline std::string fq_counts_csv(int dmax) {
    std::ostringstream os;
    os << "lambda,gamma,q,count\n";
    for (int d = 1; d <= dmax; ++d)
        for (const auto& lam : partitions(d))
            for (int n = 1; n <= d; ++n)
                for (const auto& gamma : weak_compositions(d, n)) {
                    FqCountRecord rec = fiber_profile(lam, gamma);
                    for (const auto& [q, c] : rec.samples)
                        os << part_to_string(lam) << "," << part_to_string(gamma) << "," << q
                           << "," << c << "\n";
                }
    return os.str();
}

inline Json irreps_json(const IrrepTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries)
        entries.push_back(Json{{"orbit_type", part_to_string(e.orbit_type)},
                               {"label", part_to_string(e.label)},
                               {"dim", e.dim},
                               {"dim_kostka", e.dim_kostka}});
    return Json{{"n", t.n},
                {"d", t.d},
                {"entries", entries},
                {"schur_dim", t.schur_dim},
                {"wedderburn_sum", t.wedderburn_sum.str()}};
}

inline Json sl2_remark_json(const Sl2Remark& r) {
    auto lat = [&](const LatticeRingElement& e) {
        if (e.is_zero()) return std::string("0");
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : e.terms()) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.to_string() << ")";
            if (w[0] != 0) os << " e[" << w[0] << "]";
        }
        return os.str();
    };
    static const char* names[4] = {"1", "e[-1]", "H", "e[-1] H"};
    Json mats = Json::array();
    for (int g = 0; g < 4; ++g) {
        Json rows = Json::array();
        for (int i = 0; i < 2; ++i) {
            Json row = Json::array();
            for (int j = 0; j < 2; ++j) row.push_back(lat(r.mats[g][i][j]));
            rows.push_back(row);
        }
        mats.push_back(Json{{"generator", names[g]}, {"matrix", rows}});
    }
    return Json{{"check", "sl2_remark"}, {"result", "pass"}, {"matrices", mats}};
}

} // namespace qschur
