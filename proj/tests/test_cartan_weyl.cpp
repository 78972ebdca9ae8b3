#include <catch2/catch_amalgamated.hpp>

#include "qschur/orbits.hpp"

#include <set>

using namespace qschur;

namespace {

CartanPtr A(int n) { return CartanDatum::make(CartanKind::A, n); }

// Brute-force subword test: x <= y iff some subsequence of a fixed reduced
// word of y is a reduced word multiplying to x.
bool bruhat_subword_oracle(const WeylGroup& W, WeylGroup::Id x, WeylGroup::Id y) {
    const auto& wy = W.word(y);
    size_t n = wy.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        WeylGroup::Id p = W.identity();
        int letters = 0;
        for (size_t t = 0; t < n; ++t)
            if (mask & (size_t(1) << t)) {
                p = W.rmul(p, wy[t]);
                ++letters;
            }
        if (p == x && letters == W.length(x)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("build_cartan validates and tabulates matrices") {
    auto a1 = A(1);
    REQUIRE(a1->cartan_entry(0, 0) == 2);
    auto a2 = A(2);
    REQUIRE(a2->cartan_entry(0, 1) == -1);
    REQUIRE(a2->cartan_entry(1, 0) == -1);
    REQUIRE_THROWS_AS(CartanDatum::make(CartanKind::A, 99), UsageError);
    REQUIRE_THROWS_AS(CartanDatum::make(CartanKind::F, 5), UsageError);

    SECTION("gl(2) reflection swaps epsilon coordinates") {
        auto gl2 = CartanDatum::make(CartanKind::GL, 2);
        Weight e1{1, 0};
        REQUIRE(gl2->reflect(e1, 0) == Weight{0, 1});
    }
    SECTION("so(5) epsilon action sign-permutes") {
        auto so5 = CartanDatum::make(CartanKind::SO, 5);
        REQUIRE(so5->coord_denom() == 2);
        Weight w{2, 4};  // (1,2) doubled
        REQUIRE(so5->reflect(w, 0) == Weight{-2, 4});   // s_0 negates a_1
        REQUIRE(so5->reflect(w, 1) == Weight{4, 2});    // s_1 swaps
    }
}

TEST_CASE("Weyl group orders and root counts") {
    struct Row {
        CartanKind k;
        int rank;
        size_t order;
        int positive_roots;
    };
    for (const Row& r : {Row{CartanKind::A, 2, 6, 3}, Row{CartanKind::A, 3, 24, 6},
                         Row{CartanKind::B, 2, 8, 4}, Row{CartanKind::B, 3, 48, 9},
                         Row{CartanKind::C, 3, 48, 9}, Row{CartanKind::G, 2, 12, 6},
                         Row{CartanKind::D, 4, 192, 12}, Row{CartanKind::F, 4, 1152, 24}}) {
        auto d = CartanDatum::make(r.k, r.rank);
        CAPTURE(d->name());
        REQUIRE(d->weyl().size() == r.order);
        REQUIRE(d->num_positive_roots() == r.positive_roots);
    }
    REQUIRE(CartanDatum::make(CartanKind::GL, 3)->weyl().size() == 6);
    REQUIRE(CartanDatum::make(CartanKind::SO, 5)->weyl().size() == 8);
    REQUIRE(CartanDatum::make(CartanKind::SP, 4)->weyl().size() == 8);
}

TEST_CASE("element keys are faithful and length counts inversions") {
    for (auto d : {A(3), CartanDatum::make(CartanKind::B, 2), CartanDatum::make(CartanKind::SO, 5)}) {
        const WeylGroup& W = d->weyl();
        std::set<Weight> keys;
        for (WeylGroup::Id x = 0; x < W.size(); ++x) {
            keys.insert(W.key(x));
            // length = number of positive roots sent negative
            int inv = 0;
            for (int r = 0; r < d->num_positive_roots(); ++r)
                if (!W.root_is_positive(W.act_on_root(x, r))) ++inv;
            REQUIRE(inv == W.length(x));
            REQUIRE(W.mul(x, W.inverse(x)) == W.identity());
            // reduced word really multiplies to x
            std::vector<int> wd(W.word(x).begin(), W.word(x).end());
            REQUIRE(W.from_word(wd) == x);
        }
        REQUIRE(keys.size() == W.size());
    }
}

TEST_CASE("weyl_orbit examples") {
    SECTION("A1 fundamental weight") {
        auto d = A(1);
        auto wo = weyl_orbit(*d, {1});
        REQUIRE(wo.weights == std::vector<Weight>{{-1}, {1}});
        REQUIRE(wo.rep == Weight{-1});
        REQUIRE(wo.J.empty());
        OrbitTable t(d, QfSpec::explicit_list({{1}}));
        REQUIRE(t.num_orbits() == 1);
        REQUIRE(t.orbit(0).size == 2);
        REQUIRE(t.orbit(0).rep == Weight{-1});
        REQUIRE(t.orbit(0).J.empty());
    }
    SECTION("A1 zero weight") {
        auto d = A(1);
        auto wo = weyl_orbit(*d, {0});
        REQUIRE(wo.weights.size() == 1);
        REQUIRE(wo.J == std::vector<int>{0});
        OrbitTable t(d, QfSpec::explicit_list({{0}}));
        REQUIRE(t.orbit(0).size == 1);
        REQUIRE(t.orbit(0).J == std::vector<int>{0});
    }
    SECTION("A2 fundamental weight orbit has size 3 (brute oracle)") {
        auto d = A(2);
        const WeylGroup& W = d->weyl();
        Weight w1{1, 0};
        std::set<Weight> orbit;
        for (WeylGroup::Id x = 0; x < W.size(); ++x) orbit.insert(W.act(x, w1));
        REQUIRE(orbit.size() == 3);
        auto wo = weyl_orbit(*d, w1);
        REQUIRE(wo.weights == std::vector<Weight>(orbit.begin(), orbit.end()));
        OrbitTable t(d, QfSpec::explicit_list({w1}));
        REQUIRE(t.orbit(0).size == 3);
    }
}

TEST_CASE("build_orbit_table census of gl(2) box(2)") {
    auto d = CartanDatum::make(CartanKind::GL, 2);
    OrbitTable t(d, QfSpec::box(2));
    REQUIRE(t.num_orbits() == 3);
    std::set<std::string> labels;
    for (const auto& o : t.orbits()) labels.insert(o.label);
    REQUIRE(labels == std::set<std::string>{"(2,0)", "(1,1)", "(0,2)"});
    REQUIRE(t.total_weights() == 4);
    REQUIRE(t.xi_size() == 10);
    REQUIRE_THROWS_AS(OrbitTable(d, QfSpec::explicit_list({})), UsageError);
}

TEST_CASE("regular spec yields one free orbit") {
    for (auto d : {A(2), CartanDatum::make(CartanKind::B, 2)}) {
        OrbitTable t(d, QfSpec::regular());
        REQUIRE(t.num_orbits() == 1);
        REQUIRE(t.orbit(0).J.empty());
        REQUIRE(t.orbit(0).size == d->weyl().size());
    }
}

TEST_CASE("composition labels carry the cumulative-sum stabilizers") {
    SECTION("gl(d) box(n): J omits the partial sums of the composition") {
        for (int dd : {2, 3}) {
            auto d = CartanDatum::make(CartanKind::GL, dd);
            OrbitTable t(d, QfSpec::box(2));
            for (const auto& o : t.orbits()) {
                std::set<int> sums;
                int acc = 0;
                for (int c : o.composition) {
                    acc += c;
                    sums.insert(acc);
                }
                std::vector<int> expectJ;
                for (int i = 1; i <= dd - 1; ++i)
                    if (!sums.count(i)) expectJ.push_back(i - 1);  // 0-based generators
                REQUIRE(o.J == expectJ);
            }
        }
    }
    SECTION("so(5) jmath(1): the sign generator lies in J iff gamma_0 > 0") {
        auto d = CartanDatum::make(CartanKind::SO, 5);
        OrbitTable t(d, QfSpec::jmath(1));
        REQUIRE(t.num_orbits() == 3);
        for (const auto& o : t.orbits()) {
            bool has_s0 = std::find(o.J.begin(), o.J.end(), 0) != o.J.end();
            REQUIRE(has_s0 == (o.composition[0] > 0));
            std::set<int> sums;
            int acc = 0;
            for (int c : o.composition) {
                acc += c;
                sums.insert(acc);
            }
            for (int i = 1; i < d->num_simple(); ++i) {
                bool inJ = std::find(o.J.begin(), o.J.end(), i) != o.J.end();
                REQUIRE(inJ == !sums.count(i));
            }
        }
    }
}

TEST_CASE("so(5) iota(1) weights are half-integral") {
    auto d = CartanDatum::make(CartanKind::SO, 5);
    OrbitTable t(d, QfSpec::iota(1));
    REQUIRE(t.total_weights() == 4);  // (+-1/2, +-1/2)
    REQUIRE(t.num_orbits() == 1);
    for (auto c : t.orbit(0).rep) REQUIRE(std::abs(c) % 2 == 1);  // odd doubled coords
}

TEST_CASE("min_coset_reps examples and invariants") {
    auto d = A(2);
    const WeylGroup& W = d->weyl();
    SECTION("A1 J=everything gives the identity") {
        auto d1 = A(1);
        auto reps = d1->weyl().min_coset_reps({0});
        REQUIRE(reps == std::vector<WeylGroup::Id>{d1->weyl().identity()});
    }
    REQUIRE(W.min_coset_reps({0}).size() == 3);
    REQUIRE(W.min_coset_reps({}).size() == 6);

    SECTION("unique length-additive factorization w = v u") {
        for (auto dd : {A(2), A(3), CartanDatum::make(CartanKind::B, 2)}) {
            const WeylGroup& G = dd->weyl();
            for (int j = 0; j < dd->num_simple(); ++j) {
                std::vector<int> J{j};
                auto sub = G.subgroup(J);
                auto reps = G.min_coset_reps(J);
                std::set<WeylGroup::Id> seen;
                int additive = 0;
                for (auto v : sub)
                    for (auto u : reps) {
                        auto w = G.mul(v, u);
                        seen.insert(w);
                        if (G.length(w) == G.length(v) + G.length(u)) ++additive;
                    }
                REQUIRE(seen.size() == G.size());
                REQUIRE(additive == static_cast<int>(G.size()));
            }
        }
    }

    SECTION("Lemma dis equivalence: root criterion == no left descent in J") {
        for (auto dd : {A(2), A(3), CartanDatum::make(CartanKind::B, 3)}) {
            const WeylGroup& G = dd->weyl();
            std::vector<int> J{0};
            if (dd->num_simple() > 2) J.push_back(2);
            for (WeylGroup::Id x = 0; x < G.size(); ++x) {
                bool noLeftDescent = true;
                for (int j : J) noLeftDescent = noLeftDescent && !G.left_descent(x, j);
                REQUIRE(G.is_min_rep(x, J) == noLeftDescent);
            }
        }
    }
}

TEST_CASE("double cosets: examples and the Levi size formula") {
    auto d = A(2);
    const WeylGroup& W = d->weyl();
    std::vector<int> J{0};

    auto djj = W.double_coset_reps(J, J);
    REQUIRE(djj.size() == 2);
    // brute-force partition oracle
    std::set<std::set<WeylGroup::Id>> cosets;
    for (WeylGroup::Id w = 0; w < W.size(); ++w) {
        auto elems = W.double_coset_elements(J, w, J);
        cosets.insert(std::set<WeylGroup::Id>(elems.begin(), elems.end()));
    }
    REQUIRE(cosets.size() == 2);

    REQUIRE(W.double_coset_reps({}, {}).size() == 6);

    SECTION("gl(2): J from (2,0), K from (1,1)") {
        auto gl2 = CartanDatum::make(CartanKind::GL, 2);
        OrbitTable t(gl2, QfSpec::box(2));
        // orbits sorted by anti-dominant rep: (1,1) has rep (1,1)? No:
        // reps are (0,0)->label (2,0), (0,1)->label(1,1), (1,1)->label(0,2)
        REQUIRE(t.orbit(0).label == "(2,0)");
        REQUIRE(t.orbit(1).label == "(1,1)");
        auto reps = t.double_reps(0, 1);
        REQUIRE(reps.size() == 1);
        REQUIRE(reps[0] == gl2->weyl().identity());
    }

    SECTION("size formula |W_J w W_K| = |W_J||W_K|/|W_J cap w W_K w^-1|") {
        for (auto dd : {A(3), CartanDatum::make(CartanKind::B, 2)}) {
            const WeylGroup& G = dd->weyl();
            std::vector<int> Js{0};
            std::vector<int> Ks{dd->num_simple() - 1};
            auto sJ = G.subgroup(Js);
            auto sK = G.subgroup(Ks);
            for (auto w : G.double_coset_reps(Js, Ks)) {
                size_t inter = 0;
                for (auto v : sJ) {
                    auto c = G.mul(G.mul(G.inverse(w), v), w);
                    if (std::find(sK.begin(), sK.end(), c) != sK.end()) ++inter;
                }
                REQUIRE(G.double_coset_elements(Js, w, Ks).size() == sJ.size() * sK.size() / inter);
            }
        }
    }
}

TEST_CASE("longest elements in double cosets") {
    auto d = A(2);
    const WeylGroup& W = d->weyl();
    std::vector<int> J{0};
    auto s2 = W.from_word({1});

    auto [theta, wplus] = longest_elements(*d, J, {&W, s2}, J);
    REQUIRE(theta.word() == std::vector<uint8_t>{0});
    REQUIRE(wplus.length() == 3);
    REQUIRE(wplus.id == W.from_word({0, 1, 0}));

    // exhaustive oracle: maximum over the enumerated double coset
    auto dc = W.double_coset_elements(J, s2, J);
    REQUIRE(dc.size() == 4);
    REQUIRE(W.unique_longest(dc, "oracle") == wplus.id);

    SECTION("J=K=empty leaves w unchanged") {
        auto w = W.from_word({1, 0});
        auto [th, wp] = longest_elements(*d, {}, {&W, w}, {});
        REQUIRE(th.id == W.identity());
        REQUIRE(wp.id == w);
    }
    SECTION("w = e gives w+ = theta of union") {
        auto [th, wp] = longest_elements(*d, J, {&W, W.identity()}, J);
        REQUIRE(wp.id == W.from_word({0}));
    }
    SECTION("precondition: w must be a minimal double coset rep") {
        REQUIRE_THROWS_AS(longest_elements(*d, J, {&W, W.from_word({0})}, J), UsageError);
    }
}

TEST_CASE("longest_in_coset_intersection") {
    auto d = A(2);
    const WeylGroup& W = d->weyl();
    std::vector<int> J{0};
    auto s2 = W.from_word({1});

    SECTION("M must be contained in K") {
        REQUIRE_THROWS_AS(longest_in_coset_intersection(*d, J, {&W, s2}, {}, {0}), UsageError);
    }
    SECTION("M = empty reduces to D_J: theta_gamma w+ as in the convolution formula") {
        auto w1 = longest_in_coset_intersection(*d, J, {&W, s2}, J, {});
        REQUIRE(w1.id == W.from_word({1, 0}));  // s2 s1 = theta_J * (s1 s2 s1)
    }
    SECTION("M = K keeps only genuine double-coset representatives") {
        auto w1 = longest_in_coset_intersection(*d, J, {&W, s2}, J, J);
        REQUIRE(w1.id == s2);
    }
    SECTION("J = {1}, K = {2}, M = empty, w = e") {
        std::vector<int> K{1};
        auto w1 = longest_in_coset_intersection(*d, J, {&W, W.identity()}, K, {});
        // oracle: longest element of W_J W_K that lies in D_J
        std::vector<WeylGroup::Id> cand;
        for (auto x : W.double_coset_elements(J, W.identity(), K))
            if (W.is_min_rep(x, J)) cand.push_back(x);
        REQUIRE(w1.id == W.unique_longest(cand, "oracle"));
        REQUIRE(w1.id == s2);
    }
    SECTION("uniqueness holds exhaustively on A3") {
        auto d3 = A(3);
        const WeylGroup& W3 = d3->weyl();
        std::vector<int> Js{0, 1}, Ks{1, 2}, Ms{1};
        for (auto w : W3.double_coset_reps(Js, Ks))
            REQUIRE_NOTHROW(longest_in_coset_intersection(*d3, Js, {&W3, w}, Ks, Ms));
    }
}

TEST_CASE("bruhat order: examples and subword oracle") {
    auto d = A(2);
    const WeylGroup& W = d->weyl();
    auto s1 = W.from_word({0}), s2 = W.from_word({1}), w0 = W.from_word({0, 1, 0});
    REQUIRE(W.bruhat_leq(W.identity(), w0));
    REQUIRE_FALSE(W.bruhat_leq(s1, s2));
    REQUIRE(W.bruhat_leq(s1, w0));

    for (auto dd : {A(2), A(3), CartanDatum::make(CartanKind::B, 2),
                    CartanDatum::make(CartanKind::B, 3), CartanDatum::make(CartanKind::G, 2)}) {
        const WeylGroup& G = dd->weyl();
        CAPTURE(dd->name());
        for (WeylGroup::Id x = 0; x < G.size(); ++x)
            for (WeylGroup::Id y = 0; y < G.size(); ++y)
                REQUIRE(G.bruhat_leq(x, y) == bruhat_subword_oracle(G, x, y));
    }
}

TEST_CASE("census identities") {
    auto gl2 = CartanDatum::make(CartanKind::GL, 2);
    OrbitTable t(gl2, QfSpec::box(2));
    auto rep = census(t);
    REQUIRE(rep.xi_total == 10);

    SECTION("regular x regular census equals |W|") {
        OrbitTable tr(A(2), QfSpec::regular());
        REQUIRE(census(tr).xi_total == 6);
    }
    SECTION("A2 orbit with J={1}: dim F = 2, dim Z = 4") {
        auto d = A(2);
        OrbitTable ta(d, QfSpec::explicit_list({{0, 1}}));  // rep (0,1)? antidominant...
        REQUIRE(ta.num_orbits() == 1);
        REQUIRE(ta.orbit(0).J.size() == 1);
        REQUIRE(ta.dim_flag(0) == 2);
        auto r = census(ta);
        REQUIRE(r.entries[0].dim_z == 4);
    }
    SECTION("closure cells are downward closed") {
        for (const auto& e : rep.entries)
            for (auto y : e.closure_cells)
                for (auto z : e.closure_cells) {
                    (void)y;
                    REQUIRE(gl2->weyl().bruhat_leq(z, e.w));
                }
    }
}

TEST_CASE("omega weight") {
    auto d = A(2);
    REQUIRE(omega_weight(*d, {}) == w_zero(2));
    REQUIRE(omega_weight(*d, {0}) == d->simple_root(0));
    // J = {1,2}: sum of the three positive roots = 2(alpha_1 + alpha_2)
    Weight expect = w_scale(2, w_add(d->simple_root(0), d->simple_root(1)));
    REQUIRE(omega_weight(*d, {0, 1}) == expect);
}

TEST_CASE("duality") {
    auto b2 = CartanDatum::make(CartanKind::B, 2);
    REQUIRE(b2->dual()->kind() == CartanKind::C);
    REQUIRE(b2->dual()->dual()->cartan_entry(1, 0) == b2->cartan_entry(1, 0));
    auto so5 = CartanDatum::make(CartanKind::SO, 5);
    REQUIRE(so5->dual()->kind() == CartanKind::SP);
    REQUIRE(so5->dual()->dual()->name() == so5->name());

    SECTION("langlands census checks") {
        auto r1 = langlands_dim_check(CartanDatum::make(CartanKind::SO, 5), QfSpec::jmath(1));
        REQUIRE(r1.pass);
        auto r2 = langlands_dim_check(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
        REQUIRE(r2.pass);
        REQUIRE(r2.xi_primal == 10);
        auto r3 = langlands_dim_check(A(2), QfSpec::regular());
        REQUIRE(r3.pass);
        REQUIRE(r3.xi_primal == 6);
    }
}
