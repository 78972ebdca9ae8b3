#pragma once

#include "qschur/howe.hpp"
#include "qschur/io.hpp"
#include "qschur/schur.hpp"
#include "qschur/springer.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>

namespace qschur {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct Check {
    std::string name;
    std::function<void()> run;  // throws on failure
};

namespace verify_detail {

inline std::vector<CartanPtr> small_data() {
    return {CartanDatum::make(CartanKind::A, 2), CartanDatum::make(CartanKind::A, 3),
            CartanDatum::make(CartanKind::B, 2), CartanDatum::make(CartanKind::B, 3),
            CartanDatum::make(CartanKind::G, 2)};
}

inline std::vector<OrbitTable> small_tables() {
    std::vector<OrbitTable> out;
    out.emplace_back(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
    out.emplace_back(CartanDatum::make(CartanKind::A, 2),
                     QfSpec::explicit_list({{1, 0}, {1, 1}}));
    out.emplace_back(CartanDatum::make(CartanKind::SO, 5), QfSpec::iota(1));
    out.emplace_back(CartanDatum::make(CartanKind::B, 2), QfSpec::regular());
    return out;
}

inline void expect(bool ok, const std::string& what) {
    if (!ok) throw Error(what);
}

inline HeckeElement random_hecke(const WeylGroup& W, std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 3), gen(0, W.datum().num_simple() - 1),
        coefpick(-2, 2);
    HeckeElement out;
    for (int t = 0; t < 2; ++t) {
        WeylGroup::Id w = W.identity();
        for (int s = 0, l = len(rng); s < l; ++s) w = W.rmul(w, gen(rng));
        add_term(out, w, LaurentScalar::q_power(coefpick(rng), coefpick(rng)));
    }
    return out;
}

inline AffineHeckeElement random_affine(const CartanDatum& d, std::mt19937& rng) {
    const WeylGroup& W = d.weyl();
    std::uniform_int_distribution<int> len(0, 2), gen(0, d.num_simple() - 1), coord(-2, 2),
        coefpick(-2, 2);
    AffineHeckeElement out;
    for (int t = 0; t < 3; ++t) {
        WeylGroup::Id w = W.identity();
        for (int s = 0, l = len(rng); s < l; ++s) w = W.rmul(w, gen(rng));
        Weight lam(d.lattice_dim());
        for (auto& x : lam) x = coord(rng) * d.coord_denom();
        add_term(out, {w, lam}, LaurentScalar::q_power(coefpick(rng), coefpick(rng)));
    }
    return out;
}

inline std::vector<Composition> compositions_upto(int d) {
    std::vector<Composition> out;
    for (int n = 1; n <= d; ++n)
        for (const auto& c : weak_compositions(d, n)) out.push_back(c);
    return out;
}

} // namespace verify_detail

inline const std::vector<Check>& verify_registry() {
    using namespace verify_detail;
    static const std::vector<Check> checks = [] {
        std::vector<Check> cs;
        auto C = symbolic_q();

        cs.push_back({"cartan.factorization", [C] {
            for (const auto& t : small_tables()) {
                const WeylGroup& W = t.datum().weyl();
                for (const auto& o : t.orbits()) {
                    std::set<WeylGroup::Id> seen;
                    for (auto v : o.parabolic)
                        for (auto u : o.min_reps) {
                            auto w = W.mul(v, u);
                            expect(W.length(w) == W.length(v) + W.length(u),
                                   "length not additive in W_gamma x D_gamma");
                            seen.insert(w);
                        }
                    expect(seen.size() == W.size(), "factorization not exhaustive");
                }
            }
        }});
        cs.push_back({"cartan.lemma_dis", [] {
            for (auto d : small_data()) {
                if (d->weyl().size() > 48) continue;
                const WeylGroup& W = d->weyl();
                std::vector<std::vector<int>> Js{{0}, {0, 1}};
                for (const auto& J : Js) {
                    auto subpos = W.sub_positive_roots(J);
                    for (WeylGroup::Id x = 0; x < W.size(); ++x) {
                        bool crit_delta = W.is_min_rep(x, J);
                        bool crit_descent = true;
                        for (int j : J)
                            if (W.left_descent(x, j)) crit_descent = false;
                        bool crit_pm = true;  // w^-1 Pi_gamma^+ in Pi^+
                        for (int r : subpos)
                            if (!W.root_is_positive(W.act_on_root(W.inverse(x), r)))
                                crit_pm = false;
                        expect(crit_delta == crit_descent && crit_descent == crit_pm,
                               "Lemma dis equivalence failed");
                    }
                }
            }
        }});
        cs.push_back({"cartan.coset_sums", [] {
            for (const auto& t : small_tables()) {
                const WeylGroup& W = t.datum().weyl();
                for (size_t g = 0; g < t.num_orbits(); ++g)
                    for (size_t n = 0; n < t.num_orbits(); ++n) {
                        size_t total = 0;
                        const auto& J = t.orbit(g).J;
                        const auto& K = t.orbit(n).J;
                        auto sJ = t.orbit(g).parabolic;
                        auto sK = t.orbit(n).parabolic;
                        for (auto w : t.double_reps(g, n)) {
                            auto dc = W.double_coset_elements(J, w, K);
                            total += dc.size();
                            size_t inter = 0;
                            for (auto v : sJ) {
                                auto c = W.mul(W.mul(W.inverse(w), v), w);
                                if (std::binary_search(sK.begin(), sK.end(), c)) ++inter;
                            }
                            expect(dc.size() == sJ.size() * sK.size() / inter,
                                   "Levi size formula failed");
                        }
                        expect(total == W.size(), "double cosets do not partition W");
                    }
            }
        }});
        cs.push_back({"cartan.theta", [] {
            for (const auto& t : small_tables())
                for (const auto& o : t.orbits()) {
                    const WeylGroup& W = t.datum().weyl();
                    expect(W.mul(o.theta, o.theta) == W.identity(), "theta^2 != e");
                    expect(W.length(o.theta) == o.sub_positive, "l(theta) != #Pi+_gamma");
                }
        }});
        cs.push_back({"cartan.closure_downward", [] {
            for (const auto& t : small_tables()) {
                const WeylGroup& W = t.datum().weyl();
                for (const auto& e : census(t).entries) {
                    auto dgn = t.double_reps(e.gamma, e.nu);
                    std::set<WeylGroup::Id> cells(e.closure_cells.begin(),
                                                  e.closure_cells.end());
                    for (auto y : cells) {
                        expect(W.bruhat_leq(y, e.w), "closure cell not below w");
                        for (auto z : dgn)
                            if (W.bruhat_leq(z, y))
                                expect(cells.count(z) == 1,
                                       "closure cells not downward closed in D_gamma_nu");
                    }
                }
            }
        }});
        cs.push_back({"cartan.dual_involution", [] {
            for (auto d : {CartanDatum::make(CartanKind::B, 3), CartanDatum::make(CartanKind::A, 2),
                           CartanDatum::make(CartanKind::SO, 5),
                           CartanDatum::make(CartanKind::GL, 3)}) {
                auto dd = d->dual()->dual();
                expect(dd->name() == d->name(), "dual not involutive");
                for (int i = 0; i < d->num_simple(); ++i)
                    for (int j = 0; j < d->num_simple(); ++j)
                        expect(dd->cartan_entry(i, j) == d->cartan_entry(i, j),
                               "dual^2 Cartan matrix differs");
            }
        }});
        cs.push_back({"cartan.bruhat_subword", [] {
            auto d = CartanDatum::make(CartanKind::B, 2);
            const WeylGroup& W = d->weyl();
            for (WeylGroup::Id x = 0; x < W.size(); ++x)
                for (WeylGroup::Id y = 0; y < W.size(); ++y) {
                    const auto& wy = W.word(y);
                    bool brute = false;
                    for (size_t mask = 0; mask < (size_t(1) << wy.size()) && !brute; ++mask) {
                        WeylGroup::Id p = W.identity();
                        int letters = 0;
                        for (size_t t = 0; t < wy.size(); ++t)
                            if (mask & (size_t(1) << t)) {
                                p = W.rmul(p, wy[t]);
                                ++letters;
                            }
                        if (p == x && letters == W.length(x)) brute = true;
                    }
                    expect(W.bruhat_leq(x, y) == brute, "bruhat mismatch vs subword oracle");
                }
        }});
        cs.push_back({"cartan.orbit_partition", [] {
            for (const auto& t : small_tables()) {
                size_t total = 0;
                for (const auto& o : t.orbits()) {
                    total += o.size;
                    expect(o.min_reps.size() * o.parabolic_size == t.datum().weyl().size(),
                           "|D_gamma| |W_gamma| != |W|");
                }
                expect(total == t.total_weights(), "orbit sizes do not sum to |Q_f|");
            }
        }});

        cs.push_back({"hecke.quadratic", [C] {
            for (auto d : small_data()) {
                const WeylGroup& W = d->weyl();
                for (int i = 0; i < d->num_simple(); ++i) {
                    auto h = hecke_gen(W, i, C);
                    expect(hecke_mul(W, h, h, C) ==
                               hecke_add(hecke_unit(C), hecke_scale(h, C.qinv_minus_q)),
                           "quadratic relation failed");
                }
            }
        }});
        cs.push_back({"hecke.braid", [C] {
            for (auto d : small_data()) {
                const WeylGroup& W = d->weyl();
                for (int i = 0; i < d->num_simple(); ++i)
                    for (int j = i + 1; j < d->num_simple(); ++j) {
                        long long a = d->cartan_entry(i, j) * d->cartan_entry(j, i);
                        int m = a == 0 ? 2 : a == 1 ? 3 : a == 2 ? 4 : 6;
                        auto hi = hecke_gen(W, i, C), hj = hecke_gen(W, j, C);
                        HeckeElement lhs = hi, rhs = hj;
                        for (int t = 1; t < m; ++t) {
                            lhs = hecke_mul(W, lhs, (t % 2 ? hj : hi), C);
                            rhs = hecke_mul(W, rhs, (t % 2 ? hi : hj), C);
                        }
                        expect(lhs == rhs, "braid relation failed");
                    }
            }
        }});
        cs.push_back({"hecke.symmetrizer_eigen", [C] {
            const LaurentScalar q = LaurentScalar::q_power(1), qi = LaurentScalar::q_power(-1);
            for (const auto& t : small_tables()) {
                const WeylGroup& W = t.datum().weyl();
                for (const auto& o : t.orbits()) {
                    auto x = x_gamma(W, o.J, C);
                    for (int i : o.J) {
                        auto prod = hecke_mul(W, x, hecke_gen(W, i, C), C);
                        expect(prod == hecke_scale(x, C.minus_q), "x_gamma H_i != -q x_gamma");
                        // Lemma calc shadow: x (H_i - q^-1) = -(q + q^-1) x
                        expect(hecke_sub(prod, hecke_scale(x, qi)) ==
                                   hecke_scale(x, -(q + qi)),
                               "convolution constant != -(1+q^-2) after scaling");
                    }
                }
            }
        }});
        cs.push_back({"hecke.symmetrizer_classical", [] {
            auto Cr = rational_q(1);
            for (const auto& t : small_tables()) {
                const WeylGroup& W = t.datum().weyl();
                for (const auto& o : t.orbits()) {
                    auto x = x_gamma(W, o.J, Cr);
                    for (int i : o.J)
                        expect(hecke_mul(W, x, hecke_gen(W, i, Cr), Cr) ==
                                   hecke_scale(x, Rational(-1)),
                               "classical x_gamma s_i != -x_gamma");
                }
            }
        }});
        cs.push_back({"affine.bernstein_oracle", [] {
            std::mt19937 rng(7);
            for (auto d : {CartanDatum::make(CartanKind::A, 2),
                           CartanDatum::make(CartanKind::SO, 5),
                           CartanDatum::make(CartanKind::GL, 3)}) {
                std::uniform_int_distribution<int> coord(-4, 4);
                int checked = 0;
                while (checked < 200) {
                    Weight lam(d->lattice_dim());
                    for (auto& x : lam) x = coord(rng) * d->coord_denom();
                    for (int i = 0; i < d->num_simple(); ++i, ++checked) {
                        auto [slam, theta] = bernstein_cross(*d, lam, i);
                        LatticeRingElement lhs =
                            (LatticeRingElement::e(w_zero(d->lattice_dim())) -
                             LatticeRingElement::e(w_scale(-1, d->simple_root(i)))) *
                            theta;
                        expect(lhs == LatticeRingElement::e(lam) - LatticeRingElement::e(slam),
                               "divided difference oracle failed");
                    }
                }
            }
        }});
        cs.push_back({"affine.associativity", [] {
            std::mt19937 rng(11);
            for (auto d : {CartanDatum::make(CartanKind::A, 1),
                           CartanDatum::make(CartanKind::A, 2)}) {
                for (int rep = 0; rep < 60; ++rep) {
                    auto a = random_affine(*d, rng), b = random_affine(*d, rng),
                         c2 = random_affine(*d, rng);
                    expect(affine_mul(*d, affine_mul(*d, a, b), c2) ==
                               affine_mul(*d, a, affine_mul(*d, b, c2)),
                           "affine associativity failed");
                }
            }
        }});

        cs.push_back({"schur.assoc_unital", [C] {
            OrbitTable t(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
            SchurContext<LaurentScalar> ctx(t, C);
            auto table = structure_table(ctx, 1);
            auto one = ctx.identity();
            const auto& xis = ctx.basis();
            for (size_t i = 0; i < xis.size(); ++i) {
                SchurElement b{{xis[i], C.one}};
                expect(schur_mul(ctx, one, b) == b && schur_mul(ctx, b, one) == b,
                       "identity fails");
            }
            auto exp_in = [&](const SchurElement& a, const SchurElement& b) {
                SchurElement out;
                for (const auto& [xa, ca] : a)
                    for (const auto& [xb, cb] : b) {
                        size_t ia = std::find(xis.begin(), xis.end(), xa) - xis.begin();
                        size_t ib = std::find(xis.begin(), xis.end(), xb) - xis.begin();
                        for (const auto& [xc, cc] : table[ia][ib]) add_term(out, xc, ca * cb * cc);
                    }
                return out;
            };
            for (size_t i = 0; i < xis.size(); ++i)
                for (size_t j = 0; j < xis.size(); ++j)
                    for (size_t k = 0; k < xis.size(); ++k)
                        expect(exp_in(table[i][j], {{xis[k], C.one}}) ==
                                   exp_in({{xis[i], C.one}}, table[j][k]),
                               "structure constants not associative");
        }});
        cs.push_back({"schur.classical_match", [C] {
            OrbitTable t(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
            SchurContext<LaurentScalar> ctx(t, C);
            SchurContext<Rational> rctx(t, rational_q(1));
            for (const auto& xi : ctx.basis())
                for (const auto& xj : ctx.basis()) {
                    SchurElement a{{xi, C.one}}, b{{xj, C.one}};
                    RatSchurElement ra{{xi, Rational(1)}}, rb{{xj, Rational(1)}};
                    expect(specialize(schur_mul(ctx, a, b), 1) == schur_mul(rctx, ra, rb),
                           "classical limit differs from the group-algebra table");
                }
        }});
        cs.push_back({"schur.triangularity", [C] {
            OrbitTable t(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
            const WeylGroup& W = t.datum().weyl();
            SchurContext<LaurentScalar> ctx(t, C);
            for (const auto& xi : ctx.basis())
                for (const auto& xj : ctx.basis()) {
                    auto prod = schur_mul(ctx, {{xi, C.one}}, {{xj, C.one}});
                    std::map<std::pair<uint32_t, uint32_t>, std::vector<WeylGroup::Id>> bygn;
                    for (const auto& [x, c] : prod) bygn[{x.gamma, x.nu}].push_back(x.w);
                    for (auto& [gn, ws] : bygn) {
                        auto top = *std::max_element(
                            ws.begin(), ws.end(),
                            [&](auto a, auto b) { return W.length(a) < W.length(b); });
                        for (auto w : ws)
                            expect(W.bruhat_leq(w, top), "support not below the leading coset");
                    }
                }
        }});
        cs.push_back({"schur.p_symmetry", [C] {
            OrbitTable t(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
            SchurContext<LaurentScalar> ctx(t, C);
            for (const auto& xi : ctx.basis())
                for (const auto& xj : ctx.basis()) {
                    SchurElement a{{xi, C.one}}, b{{xj, C.one}};
                    expect(schur_transpose(t, schur_mul(ctx, a, b)) ==
                               schur_mul(ctx, schur_transpose(t, b), schur_transpose(t, a)),
                           "transpose is not an anti-automorphism");
                }
        }});
        cs.push_back({"schur.module_compat", [C] {
            OrbitTable t(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
            SchurContext<LaurentScalar> ctx(t, C);
            std::mt19937 rng(23);
            const WeylGroup& W = t.datum().weyl();
            std::uniform_int_distribution<size_t> pick(0, ctx.basis().size() - 1);
            for (int rep = 0; rep < 20; ++rep) {
                auto h = random_hecke(W, rng);
                SchurElement phi{{ctx.basis()[pick(rng)], C.one}};
                FockElement f = fock_unit<LaurentScalar>(ctx.basis()[pick(rng)].nu, C);
                expect(schur_apply(ctx, phi, fock_act(t, f, h, C)) ==
                           fock_act(t, schur_apply(ctx, phi, f), h, C),
                       "phi is not an H-module map");
            }
        }});
        cs.push_back({"schur.x_gamma_signs", [C] {
            for (const auto& t : small_tables()) {
                const WeylGroup& W = t.datum().weyl();
                for (uint32_t g = 0; g < t.num_orbits(); ++g) {
                    auto x = specialize_classical(
                        fock_embed(t, fock_unit<LaurentScalar>(g, C), C));
                    int lt = W.length(t.orbit(g).theta);
                    for (const auto& [w, c] : x)
                        expect(c == ((lt - W.length(w)) % 2 == 0 ? 1 : -1),
                               "classical x_gamma signs wrong");
                }
            }
        }});

        cs.push_back({"aschur.compose_validates", [] {
            OrbitTable t(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
            std::vector<AffineSchurElement> gens;
            for (uint32_t g = 0; g < t.num_orbits(); ++g)
                for (uint32_t n = 0; n < t.num_orbits(); ++n)
                    for (auto w : t.double_reps(g, n)) gens.push_back(iota_generator(t, {g, w, n}));
            std::mt19937 rng(31);
            std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
            for (int rep = 0; rep < 12; ++rep) {
                auto c = endo_compose(t, gens[pick(rng)], gens[pick(rng)]);
                make_endo(t, std::map<uint32_t, AffineFockElement>(c.images));
            }
        }});
        cs.push_back({"aschur.compose_assoc", [] {
            OrbitTable t(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
            std::vector<AffineSchurElement> gens;
            for (uint32_t g = 0; g < t.num_orbits(); ++g)
                for (uint32_t n = 0; n < t.num_orbits(); ++n)
                    for (auto w : t.double_reps(g, n)) gens.push_back(iota_generator(t, {g, w, n}));
            std::mt19937 rng(37);
            std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
            for (int rep = 0; rep < 15; ++rep) {
                const auto &a = gens[pick(rng)], &b = gens[pick(rng)], &c = gens[pick(rng)];
                expect(endo_compose(t, endo_compose(t, a, b), c) ==
                           endo_compose(t, a, endo_compose(t, b, c)),
                       "endo composition not associative");
            }
        }});
        cs.push_back({"aschur.peel_well_defined", [] {
            OrbitTable t(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
            std::mt19937 rng(41);
            std::uniform_int_distribution<int> coord(-2, 2), coefpick(-2, 2);
            for (uint32_t g = 0; g < t.num_orbits(); ++g)
                for (int rep = 0; rep < 20; ++rep) {
                    AffineFockElement f;
                    std::uniform_int_distribution<size_t> pick(0, t.orbit(g).min_reps.size() - 1);
                    for (int i = 0; i < 3; ++i)
                        add_term(f, {g, t.orbit(g).min_reps[pick(rng)],
                                     Weight{coord(rng), coord(rng)}},
                                 LaurentScalar::q_power(coefpick(rng), coefpick(rng)));
                    auto emb = affine_embed(t, f);
                    expect(affine_peel(t, g, emb) == f && affine_peel(t, g, emb, true) == f,
                           "peel depends on elimination order");
                }
        }});
        cs.push_back({"aschur.regular_block_iso", [] {
            auto d = CartanDatum::make(CartanKind::A, 1);
            OrbitTable tr(d, QfSpec::regular());
            auto lift = [&](const AffineHeckeElement& h) {
                std::map<uint32_t, AffineFockElement> images;
                AffineFockElement img;
                for (const auto& [k, c] : h) add_term(img, {0u, k.w, k.lam}, c);
                images[0] = img;
                return make_endo(tr, std::move(images));
            };
            std::mt19937 rng(43);
            for (int rep = 0; rep < 20; ++rep) {
                auto h1 = random_affine(*d, rng), h2 = random_affine(*d, rng);
                expect(endo_compose(tr, lift(h1), lift(h2)) == lift(affine_mul(*d, h1, h2)),
                       "regular block is not an algebra isomorphism");
            }
        }});
        cs.push_back({"aschur.eigen_orbits", [] {
            const LaurentScalar mq = LaurentScalar::q_power(1, -1);
            for (const auto& t : small_tables()) {
                const WeylGroup& W = t.datum().weyl();
                for (uint32_t g = 0; g < t.num_orbits(); ++g)
                    for (int i : t.orbit(g).J) {
                        AffineHeckeElement hi{
                            {{W.rmul(0, i), w_zero(t.datum().lattice_dim())}, LaurentScalar(1)}};
                        expect(affine_fock_act(t, afock_unit(t, g), hi) ==
                                   afock_scale(afock_unit(t, g), mq),
                               "affine eigenproperty failed");
                    }
            }
        }});
        cs.push_back({"aschur.rank_accounting", [] {
            for (const auto& t : small_tables()) {
                size_t total = 0;
                for (uint32_t g = 0; g < t.num_orbits(); ++g) {
                    auto rep = freeness_probe(t, g, 0);
                    expect(rep.pass && rep.rank == t.orbit(g).min_reps.size(),
                           "box-0 rank != |D_gamma|");
                    total += rep.rank;
                }
                size_t expected = 0;
                for (const auto& o : t.orbits()) expected += o.min_reps.size();
                expect(total == expected, "rank accounting failed");
            }
        }});
        cs.push_back({"aschur.sl2_matrices", [] { sl2_remark_matrices(); }});
        cs.push_back({"aschur.center", [] {
            OrbitTable tr(CartanDatum::make(CartanKind::A, 1), QfSpec::regular());
            expect(center_check(tr, {1}, 1).pass, "SL2 center check failed");
            OrbitTable t2(CartanDatum::make(CartanKind::A, 2),
                          QfSpec::explicit_list({{1, 0}, {1, 1}}));
            expect(center_check(t2, {1, 0}, 1).pass, "A2 center check failed");
        }});

        cs.push_back({"springer.gaussian_counts", [] {
            for (int d = 1; d <= 4; ++d) {
                Partition zero(d, 1);
                Composition full(d, 1);
                for (int q : {2, 3}) {
                    long long expect_count = 1, pw = 1;
                    for (int k = 1; k <= d; ++k) {
                        pw *= q;
                        long long geom = 0, t = 1;
                        for (int s = 0; s < k; ++s) { geom += t; t *= q; }
                        expect_count *= geom;
                    }
                    expect(count_flags(zero, full, q) == expect_count,
                           "full flag count != Gaussian product");
                }
            }
        }});
        cs.push_back({"springer.dominance", [] {
            for (int d = 1; d <= 4; ++d)
                for (const auto& lam : partitions(d))
                    for (const auto& gamma : compositions_upto(d))
                        expect(fiber_profile_cached(lam, gamma).empty_fiber ==
                                   !fiber_nonempty_dominance(lam, gamma),
                               "emptiness != dominance criterion");
        }});
        cs.push_back({"springer.kostka_components", [] {
            for (int d = 1; d <= 4; ++d)
                for (const auto& lam : partitions(d))
                    for (const auto& gamma : compositions_upto(d)) {
                        const auto& rec = fiber_profile_cached(lam, gamma);
                        if (rec.empty_fiber) continue;
                        expect(rec.components == kostka(transpose(lam), gamma),
                               "component count != Kostka number");
                    }
        }});
        cs.push_back({"springer.relevance_equidim", [] {
            for (int d = 1; d <= 4; ++d)
                for (const auto& lam : partitions(d))
                    for (const auto& gamma : compositions_upto(d)) {
                        const auto& rec = fiber_profile_cached(lam, gamma);
                        if (rec.empty_fiber) continue;
                        expect(2 * rec.dim + orbit_dim(lam) <= 2 * flag_dim(gamma),
                               "dimension inequality failed");
                        expect(2 * rec.dim + orbit_dim(lam) == 2 * flag_dim(gamma),
                               "nonempty fiber not relevant in type A");
                    }
        }});
        cs.push_back({"springer.wedderburn", [] {
            for (int n = 1; n <= 3; ++n)
                for (int d = 1; d <= 3; ++d) irreducible_dims(n, d);
        }});

        cs.push_back({"howe.bimodule_axiom", [] {
            auto d = CartanDatum::make(CartanKind::GL, 2);
            OrbitTable b2(d, QfSpec::box(2)), b3(d, QfSpec::box(3));
            howe_check_finite(b2, b3, 3);  // throws if the actions fail to commute
        }});
        cs.push_back({"howe.image_in_commutant", [] {
            auto d = CartanDatum::make(CartanKind::GL, 2);
            OrbitTable b2(d, QfSpec::box(2));
            auto v = howe_check_finite(b2, b2, 3);
            expect(v.dim_image_left <= v.dim_commutant_right,
                   "image exceeds the commutant");
            expect(v.holds, "gl(2) box(2) double centralizer failed");
        }});
        cs.push_back({"howe.swap_stability", [] {
            auto d = CartanDatum::make(CartanKind::GL, 2);
            OrbitTable b2(d, QfSpec::box(2)), b3(d, QfSpec::box(3));
            auto v = double_centralizer_check(b2, b3, 1);
            auto w = double_centralizer_check(b3, b2, 1);
            expect(v.holds == w.holds && v.dim_bimodule == w.dim_bimodule &&
                       v.dim_image_left == w.dim_image_right &&
                       v.dim_image_right == w.dim_image_left,
                   "verdict not stable under swapping the sides");
        }});
        cs.push_back({"howe.q0_robustness", [] {
            auto d = CartanDatum::make(CartanKind::GL, 2);
            OrbitTable b2(d, QfSpec::box(2));
            auto d1 = CartanDatum::make(CartanKind::A, 1);
            OrbitTable reg(d1, QfSpec::regular());
            OrbitTable zero(d1, QfSpec::explicit_list({{0}}));
            std::vector<Rational> qs{Rational(1), Rational(3), Rational(5, 2)};
            for (const auto& q0 : qs) {
                expect(double_centralizer_check(b2, b2, q0).holds, "positive case failed");
                expect(!double_centralizer_check(reg, zero, q0).holds,
                       "SL2 remark case unexpectedly holds");
            }
        }});

        cs.push_back({"io.roundtrip", [] {
            std::mt19937 rng(53);
            for (auto d : {CartanDatum::make(CartanKind::A, 2),
                           CartanDatum::make(CartanKind::SO, 5)})
                for (int rep = 0; rep < 25; ++rep) {
                    auto a = random_affine(*d, rng);
                    expect(affine_parse(*d, affine_to_string(*d, a)) == a,
                           "serialization round trip failed");
                }
        }});
        cs.push_back({"io.determinism", [] {
            OrbitTable t(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
            expect(census_json(t).dump(2) == census_json(t).dump(2),
                   "census output not deterministic");
            expect(consts_json(t).dump(2) == consts_json(t).dump(2),
                   "structure constants output not deterministic");
        }});

        return cs;
    }();
    return checks;
}

// The manifest shipped with the repository; `verify` fails when the list of
// registered checks diverges from it.
inline const std::vector<std::string>& verify_manifest_names() {
    static const std::vector<std::string> names = {
        "cartan.factorization", "cartan.lemma_dis", "cartan.coset_sums", "cartan.theta",
        "cartan.closure_downward", "cartan.dual_involution", "cartan.bruhat_subword",
        "cartan.orbit_partition", "hecke.quadratic", "hecke.braid", "hecke.symmetrizer_eigen",
        "hecke.symmetrizer_classical", "affine.bernstein_oracle", "affine.associativity",
        "schur.assoc_unital", "schur.classical_match", "schur.triangularity", "schur.p_symmetry",
        "schur.module_compat", "schur.x_gamma_signs", "aschur.compose_validates",
        "aschur.compose_assoc", "aschur.peel_well_defined", "aschur.regular_block_iso",
        "aschur.eigen_orbits", "aschur.rank_accounting", "aschur.sl2_matrices", "aschur.center",
        "springer.gaussian_counts", "springer.dominance", "springer.kostka_components",
        "springer.relevance_equidim", "springer.wedderburn", "howe.bimodule_axiom",
        "howe.image_in_commutant", "howe.swap_stability", "howe.q0_robustness", "io.roundtrip",
        "io.determinism"};
    return names;
}

struct VerifyReport {
    std::vector<CheckResult> results;
    bool manifest_ok = false;
    bool all_pass = false;
};

inline VerifyReport run_verify(const std::string& suite = "all",
                               const std::vector<std::string>* manifest_override = nullptr) {
    VerifyReport rep;
    const auto& registry = verify_registry();
    std::vector<std::string> reg_names;
    for (const auto& c : registry) reg_names.push_back(c.name);
    const std::vector<std::string>& manifest =
        manifest_override ? *manifest_override : verify_manifest_names();
    rep.manifest_ok = reg_names == manifest;
    rep.all_pass = rep.manifest_ok;
    for (const auto& c : registry) {
        if (suite != "all" && c.name.rfind(suite + ".", 0) != 0 && c.name != suite) continue;
        CheckResult r;
        r.name = c.name;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
            rep.all_pass = false;
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rep.results.push_back(std::move(r));
    }
    return rep;
}

inline Json verify_json(const VerifyReport& rep) {
    Json checks = Json::array();
    for (const auto& r : rep.results) {
        std::ostringstream sec;
        sec.setf(std::ios::fixed);
        sec.precision(3);
        sec << r.seconds;
        checks.push_back(Json{{"name", r.name},
                              {"result", r.pass ? "pass" : "fail"},
                              {"detail", r.detail},
                              {"seconds", sec.str()}});
    }
    return Json{{"manifest_consistent", rep.manifest_ok},
                {"all_pass", rep.all_pass},
                {"checks", checks}};
}

} // namespace qschur
