#include <catch2/catch_amalgamated.hpp>

#include "qschur/affine_hecke.hpp"

#include <random>

using namespace qschur;

namespace {

const LaurentScalar kCross = LaurentScalar::q_power(-1) - LaurentScalar::q_power(1);

AffineHeckeElement random_affine(const CartanDatum& d, std::mt19937& rng, int maxterms = 3) {
    const WeylGroup& W = d.weyl();
    std::uniform_int_distribution<int> len(0, 2), gen(0, d.num_simple() - 1), coord(-2, 2),
        coefpick(-2, 2), nterms(1, maxterms);
    AffineHeckeElement out;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
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

TEST_CASE("bernstein_cross closed form against the divisibility oracle") {
    std::mt19937 rng(2024);
    for (auto d : {CartanDatum::make(CartanKind::A, 2), CartanDatum::make(CartanKind::B, 2),
                   CartanDatum::make(CartanKind::GL, 3), CartanDatum::make(CartanKind::SO, 5)}) {
        std::uniform_int_distribution<int> coord(-4, 4);
        int checked = 0;
        while (checked < 200) {
            Weight lam(d->lattice_dim());
            for (auto& x : lam) x = coord(rng) * d->coord_denom();
            for (int i = 0; i < d->num_simple(); ++i) {
                auto [slam, theta] = bernstein_cross(*d, lam, i);
                // oracle: (1 - e^{-alpha_i}) theta = e^lam - e^{s_i lam}
                LatticeRingElement lhs =
                    (LatticeRingElement::e(w_zero(d->lattice_dim())) -
                     LatticeRingElement::e(w_scale(-1, d->simple_root(i)))) *
                    theta;
                LatticeRingElement rhs =
                    LatticeRingElement::e(lam) - LatticeRingElement::e(slam);
                REQUIRE(lhs == rhs);
                ++checked;
            }
        }
    }
}

TEST_CASE("bernstein examples on A1") {
    auto d = CartanDatum::make(CartanKind::A, 1);
    const WeylGroup& W = d->weyl();
    Weight vpi{1};
    auto H = affine_from_hecke(*d, hecke_gen(W, 0, symbolic_q()));

    SECTION("n = 1: e^w H = H e^{-w} + (q^-1 - q) e^w") {
        auto lhs = affine_mul(*d, affine_e(*d, vpi), H);
        AffineHeckeElement rhs;
        add_term(rhs, {W.from_word({0}), Weight{-1}}, LaurentScalar(1));
        add_term(rhs, {W.identity(), vpi}, kCross);
        REQUIRE(lhs == rhs);
    }
    SECTION("n = 0 weights commute with H") {
        auto z = affine_e(*d, Weight{0});
        REQUIRE(affine_mul(*d, z, H) == affine_mul(*d, H, z));
    }
    SECTION("n = -1: theta = -e^{w}") {
        auto [slam, theta] = bernstein_cross(*d, Weight{-1}, 0);
        REQUIRE(slam == Weight{1});
        LatticeRingElement expect;
        expect.add(Weight{1}, LaurentScalar(-1));
        REQUIRE(theta == expect);
    }
}

TEST_CASE("affine multiplication basics") {
    auto d = CartanDatum::make(CartanKind::A, 2);
    const WeylGroup& W = d->weyl();

    SECTION("lattice part is a group ring: e^a e^b = e^{a+b}") {
        Weight a{1, -2}, b{0, 3};
        REQUIRE(affine_mul(*d, affine_e(*d, a), affine_e(*d, b)) == affine_e(*d, w_add(a, b)));
    }
    SECTION("length-additive Hecke products stay single terms") {
        auto h1 = affine_from_hecke(*d, hecke_gen(W, 0, symbolic_q()));
        auto h2 = affine_from_hecke(*d, hecke_gen(W, 1, symbolic_q()));
        auto p = affine_mul(*d, h1, h2);
        REQUIRE(p.size() == 1);
        REQUIRE(p.begin()->first.w == W.from_word({0, 1}));
    }
    SECTION("associativity on random triples") {
        std::mt19937 rng(99);
        for (auto dd : {CartanDatum::make(CartanKind::A, 1), CartanDatum::make(CartanKind::A, 2)}) {
            for (int rep = 0; rep < 60; ++rep) {
                auto a = random_affine(*dd, rng);
                auto b = random_affine(*dd, rng);
                auto c = random_affine(*dd, rng);
                auto lhs = affine_mul(*dd, affine_mul(*dd, a, b), c);
                auto rhs = affine_mul(*dd, a, affine_mul(*dd, b, c));
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("affine serialization round trip") {
    std::mt19937 rng(31415);
    for (auto d : {CartanDatum::make(CartanKind::A, 2), CartanDatum::make(CartanKind::SO, 5)}) {
        for (int rep = 0; rep < 40; ++rep) {
            auto a = random_affine(*d, rng);
            auto text = affine_to_string(*d, a);
            REQUIRE(affine_parse(*d, text) == a);
        }
        REQUIRE(affine_parse(*d, affine_to_string(*d, {})) == AffineHeckeElement{});
    }
    SECTION("explicit half-integer formatting") {
        auto d = CartanDatum::make(CartanKind::SO, 5);
        AffineHeckeElement a;
        add_term(a, {d->weyl().from_word({0}), Weight{1, -3}}, LaurentScalar::q_power(-1));
        auto text = affine_to_string(*d, a);
        REQUIRE(text == "(1 q^-1) * H[1] * e[1/2,-3/2]");
        REQUIRE(affine_parse(*d, text) == a);
    }
}
