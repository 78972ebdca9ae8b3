#include <catch2/catch_amalgamated.hpp>

#include "qschur/affine_schur.hpp"

#include <random>

using namespace qschur;

namespace {

const LaurentScalar kMinusQ = LaurentScalar::q_power(1, -1);

AffineHeckeElement random_affine(const CartanDatum& d, std::mt19937& rng) {
    const WeylGroup& W = d.weyl();
    std::uniform_int_distribution<int> len(0, 2), gen(0, d.num_simple() - 1), coord(-1, 1),
        coefpick(-2, 2);
    AffineHeckeElement out;
    for (int t = 0; t < 2; ++t) {
        WeylGroup::Id w = W.identity();
        int l = len(rng);
        for (int s = 0; s < l; ++s) w = W.rmul(w, gen(rng));
        Weight lam(d.lattice_dim());
        for (auto& x : lam) x = coord(rng) * d.coord_denom();
        add_term(out, {w, lam}, LaurentScalar::q_power(coefpick(rng), coefpick(rng)));
    }
    return out;
}

} // namespace

TEST_CASE("affine fock action") {
    auto d = CartanDatum::make(CartanKind::A, 1);
    OrbitTable tz(d, QfSpec::explicit_list({{0}}));  // zero orbit
    OrbitTable tr(d, QfSpec::regular());
    const WeylGroup& W = d->weyl();

    SECTION("x_gamma e^lambda is a single term") {
        auto r = affine_fock_act(tz, afock_unit(tz, 0), affine_e(*d, {2}));
        REQUIRE(r == AffineFockElement{{{0u, 0, {2}}, LaurentScalar(1)}});
    }
    SECTION("x_gamma H_i = -q x_gamma for i in J") {
        auto hi = affine_from_hecke(*d, hecke_gen(W, 0, symbolic_q()));
        REQUIRE(affine_fock_act(tz, afock_unit(tz, 0), hi) ==
                afock_scale(afock_unit(tz, 0), kMinusQ));
    }
    SECTION("embedding intertwines the action with multiplication") {
        std::mt19937 rng(5150);
        auto gl2 = CartanDatum::make(CartanKind::GL, 2);
        OrbitTable t(gl2, QfSpec::box(2));
        for (uint32_t g = 0; g < t.num_orbits(); ++g)
            for (int rep = 0; rep < 15; ++rep) {
                auto h = random_affine(*gl2, rng);
                auto f = afock_unit(t, g);
                auto lhs = affine_embed(t, affine_fock_act(t, f, h));
                auto rhs = affine_mul(*gl2, affine_embed(t, f), h);
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("affine peel") {
    auto d = CartanDatum::make(CartanKind::A, 1);
    OrbitTable tz(d, QfSpec::explicit_list({{0}}));
    const WeylGroup& W = d->weyl();
    auto C = symbolic_q();

    SECTION("A1 J={1}: (H_s - q^-1) e^lambda peels to (gamma, e, lambda)") {
        Weight lam{2};
        AffineHeckeElement a;
        add_term(a, {W.from_word({0}), lam}, LaurentScalar(1));
        add_term(a, {W.identity(), lam}, -LaurentScalar::q_power(-1));
        auto f = affine_peel(tz, 0, a);
        REQUIRE(f == AffineFockElement{{{0u, 0, lam}, LaurentScalar(1)}});
    }
    SECTION("a bare lattice term is rejected") {
        REQUIRE_THROWS_AS(affine_peel(tz, 0, affine_e(*d, {1})), NotInModuleError);
    }
    SECTION("round trip on random elements, both elimination orders") {
        std::mt19937 rng(271828);
        std::vector<OrbitTable> tables;
        tables.emplace_back(CartanDatum::make(CartanKind::GL, 2), QfSpec::box(2));
        tables.emplace_back(CartanDatum::make(CartanKind::SO, 5), QfSpec::iota(1));
        std::uniform_int_distribution<int> coord(-2, 2), coefpick(-2, 2);
        for (const auto& t : tables) {
            long long denom = t.datum().coord_denom();
            for (uint32_t g = 0; g < t.num_orbits(); ++g)
                for (int rep = 0; rep < 25; ++rep) {
                    AffineFockElement f;
                    std::uniform_int_distribution<size_t> pick(0,
                                                               t.orbit(g).min_reps.size() - 1);
                    for (int i = 0; i < 3; ++i) {
                        Weight lam{coord(rng) * denom, coord(rng) * denom};
                        add_term(f, {g, t.orbit(g).min_reps[pick(rng)], lam},
                                 LaurentScalar::q_power(coefpick(rng), coefpick(rng)));
                    }
                    auto emb = affine_embed(t, f);
                    REQUIRE(affine_peel(t, g, emb) == f);
                    REQUIRE(affine_peel(t, g, emb, /*alt_order=*/true) == f);
                }
        }
    }
    (void)C;
}

TEST_CASE("make_endo validation") {
    auto d = CartanDatum::make(CartanKind::A, 2);
    OrbitTable t(d, QfSpec::explicit_list({{0, -1}, {1, 1}}));  // one parabolic + regular orbit
    REQUIRE(t.num_orbits() == 2);
    uint32_t par = t.orbit(0).J.empty() ? 1 : 0;

    SECTION("identity is valid") { REQUIRE_NOTHROW(endo_identity(t)); }
    SECTION("iota generators validate") {
        for (uint32_t g = 0; g < t.num_orbits(); ++g)
            for (uint32_t n = 0; n < t.num_orbits(); ++n)
                for (auto w : t.double_reps(g, n))
                    REQUIRE_NOTHROW(iota_generator(t, Xi{g, w, n}));
    }
    SECTION("a non-equivariant image is rejected with a witness") {
        // x_nu H_w for a non-trivial minimal coset representative fails
        REQUIRE(t.orbit(par).min_reps.size() > 1);
        std::map<uint32_t, AffineFockElement> images;
        images[par] = AffineFockElement{
            {{par, t.orbit(par).min_reps[1], w_zero(2)}, LaurentScalar(1)}};
        REQUIRE_THROWS_AS(make_endo(t, std::move(images)), UsageError);
    }
    SECTION("a bare lattice shift off the invariant line is rejected") {
        auto d1 = CartanDatum::make(CartanKind::A, 1);
        OrbitTable tz(d1, QfSpec::explicit_list({{0}}));
        std::map<uint32_t, AffineFockElement> images;
        images[0] = AffineFockElement{{{0u, 0, {1}}, LaurentScalar(1)}};
        REQUIRE_THROWS_AS(make_endo(tz, std::move(images)), UsageError);
    }
}

TEST_CASE("endo composition") {
    auto d = CartanDatum::make(CartanKind::GL, 2);
    OrbitTable t(d, QfSpec::box(2));

    std::vector<AffineSchurElement> gens;
    for (uint32_t g = 0; g < t.num_orbits(); ++g)
        for (uint32_t n = 0; n < t.num_orbits(); ++n)
            for (auto w : t.double_reps(g, n)) gens.push_back(iota_generator(t, Xi{g, w, n}));
    REQUIRE(gens.size() == 10);

    SECTION("identity composes trivially") {
        auto one = endo_identity(t);
        for (const auto& g : gens) {
            REQUIRE(endo_compose(t, one, g) == g);
            REQUIRE(endo_compose(t, g, one) == g);
        }
    }
    SECTION("composition is associative and validates") {
        std::mt19937 rng(1618);
        std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
        for (int rep = 0; rep < 25; ++rep) {
            const auto& a = gens[pick(rng)];
            const auto& b = gens[pick(rng)];
            const auto& c = gens[pick(rng)];
            auto ab_c = endo_compose(t, endo_compose(t, a, b), c);
            auto a_bc = endo_compose(t, a, endo_compose(t, b, c));
            REQUIRE(ab_c == a_bc);
            REQUIRE_NOTHROW(make_endo(t, std::map<uint32_t, AffineFockElement>(ab_c.images)));
        }
    }
    SECTION("regular block reproduces affine Hecke multiplication") {
        auto d1 = CartanDatum::make(CartanKind::A, 1);
        OrbitTable tr(d1, QfSpec::regular());
        auto lift = [&](const AffineHeckeElement& h) {
            std::map<uint32_t, AffineFockElement> images;
            AffineFockElement img;
            for (const auto& [k, c] : h) add_term(img, {0u, k.w, k.lam}, c);
            images[0] = img;
            return make_endo(tr, std::move(images));
        };
        std::mt19937 rng(55);
        for (int rep = 0; rep < 20; ++rep) {
            auto h1 = random_affine(*d1, rng);
            auto h2 = random_affine(*d1, rng);
            // lift(h) is left multiplication by h on the regular block
            REQUIRE(endo_compose(tr, lift(h1), lift(h2)) == lift(affine_mul(*d1, h1, h2)));
        }
    }
}

TEST_CASE("sl2 remark matrices match the pinned values") {
    Sl2Remark r;
    REQUIRE_NOTHROW(r = sl2_remark_matrices());
    // first matrix is the identity
    LatticeRingElement one = LatticeRingElement::e(Weight{0});
    REQUIRE(r.mats[0][0][0] == one);
    REQUIRE(r.mats[0][1][0].is_zero());
    // fourth matrix: [[0, -q^-1], [-q, 0]]
    LatticeRingElement mq, mqinv;
    mq.add(Weight{0}, LaurentScalar::q_power(1, -1));
    mqinv.add(Weight{0}, LaurentScalar::q_power(-1, -1));
    REQUIRE(r.mats[3][0][1] == mqinv);
    REQUIRE(r.mats[3][1][0] == mq);
    REQUIRE(r.mats[3][0][0].is_zero());
    // second matrix column 2 carries e^w + e^{-w}
    LatticeRingElement zsum;
    zsum.add(Weight{1}, LaurentScalar(1));
    zsum.add(Weight{-1}, LaurentScalar(1));
    REQUIRE(r.mats[1][1][1] == zsum);
}

TEST_CASE("center candidates commute") {
    SECTION("mu = 0 gives the unit") {
        auto d = CartanDatum::make(CartanKind::A, 1);
        OrbitTable t(d, QfSpec::regular());
        auto z = central_candidate(*d, {0});
        REQUIRE(z == affine_unit(*d));
        auto rep = center_check(t, {0}, 0);
        REQUIRE(rep.pass);
    }
    SECTION("SL2: z = e^w + e^{-w} is central on the four remark generators") {
        auto d = CartanDatum::make(CartanKind::A, 1);
        OrbitTable t(d, QfSpec::regular());
        const WeylGroup& W = d->weyl();
        auto z = central_candidate(*d, {1});
        REQUIRE(z.size() == 2);
        std::array<AffineHeckeElement, 4> gens{
            affine_unit(*d), affine_e(*d, {-1}),
            affine_from_hecke(*d, hecke_gen(W, 0, symbolic_q())),
            affine_mul(*d, affine_e(*d, {-1}),
                       affine_from_hecke(*d, hecke_gen(W, 0, symbolic_q())))};
        for (const auto& h : gens)
            REQUIRE(affine_mul(*d, z, h) == affine_mul(*d, h, z));
        auto rep = center_check(t, {1}, 1);
        REQUIRE(rep.pass);
        REQUIRE(rep.generators_checked >= 2);
    }
    SECTION("A2 two-orbit table with the 3-term orbit sum of w1") {
        auto d = CartanDatum::make(CartanKind::A, 2);
        OrbitTable t(d, QfSpec::explicit_list({{1, 0}, {1, 1}}));
        REQUIRE(t.num_orbits() == 2);
        auto z = central_candidate(*d, {1, 0});
        REQUIRE(z.size() == 3);
        auto rep = center_check(t, {1, 0}, 1);
        REQUIRE(rep.pass);
    }
    SECTION("dominance precondition") {
        auto d = CartanDatum::make(CartanKind::A, 2);
        OrbitTable t(d, QfSpec::regular());
        REQUIRE_THROWS_AS(center_check(t, {-1, 0}, 0), UsageError);
    }
}

TEST_CASE("freeness probe") {
    SECTION("box 0 certifies rank |D_gamma|") {
        auto d = CartanDatum::make(CartanKind::A, 2);
        OrbitTable t(d, QfSpec::explicit_list({{0, -1}}));
        auto rep = freeness_probe(t, 0, 0);
        REQUIRE(rep.pass);
        REQUIRE(rep.rank == t.orbit(0).min_reps.size());
    }
    SECTION("A1 regular, box {-w,0,w}: rank 6") {
        auto d = CartanDatum::make(CartanKind::A, 1);
        OrbitTable t(d, QfSpec::regular());
        auto rep = freeness_probe(t, 0, 1);
        REQUIRE(rep.pass);
        REQUIRE(rep.rank == 6);
    }
    SECTION("gl(2) regular orbit, |lambda_i| <= 1: rank 18") {
        auto d = CartanDatum::make(CartanKind::GL, 2);
        OrbitTable t(d, QfSpec::box(2));
        auto rep = freeness_probe(t, 1, 1);  // orbit (1,1) is regular
        REQUIRE(rep.pass);
        REQUIRE(rep.rank == 18);
    }
    SECTION("cap rejects oversized boxes") {
        auto d = CartanDatum::make(CartanKind::GL, 2);
        OrbitTable t(d, QfSpec::box(2));
        REQUIRE_THROWS_AS(freeness_probe(t, 1, 50), UsageError);
    }
}
