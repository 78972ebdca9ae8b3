#pragma once

#include "qschur/affine_hecke.hpp"
#include "qschur/fock.hpp"
#include "qschur/polynomial.hpp"

#include <array>
#include <optional>
#include <set>

namespace qschur {

// Coordinate (gamma, w, lambda) of x_gamma H_w e^lambda in T~_f.
struct AffineFockKey {
    uint32_t orbit = 0;
    WeylGroup::Id w = 0;
    Weight lam;
    bool operator<(const AffineFockKey& o) const {
        if (orbit != o.orbit) return orbit < o.orbit;
        if (w != o.w) return w < o.w;
        return lam < o.lam;
    }
    bool operator==(const AffineFockKey& o) const {
        return orbit == o.orbit && w == o.w && lam == o.lam;
    }
};

using AffineFockElement = std::map<AffineFockKey, LaurentScalar>;

inline void add_term(AffineFockElement& a, const AffineFockKey& k, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto it = a.find(k);
    if (it == a.end()) {
        a.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

inline AffineFockElement afock_unit(const OrbitTable& t, uint32_t orbit) {
    return {{{orbit, 0, w_zero(t.datum().lattice_dim())}, LaurentScalar(1)}};
}
inline AffineFockElement afock_add(AffineFockElement a, const AffineFockElement& b) {
    for (const auto& [k, c] : b) add_term(a, k, c);
    return a;
}
inline AffineFockElement afock_sub(AffineFockElement a, const AffineFockElement& b) {
    for (const auto& [k, c] : b) add_term(a, k, -c);
    return a;
}
inline AffineFockElement afock_scale(const AffineFockElement& a, const LaurentScalar& c) {
    AffineFockElement out;
    for (const auto& [k, v] : a) add_term(out, k, v * c);
    return out;
}
inline AffineFockElement afock_from_fock(const OrbitTable& t, const FockElement& f) {
    AffineFockElement out;
    for (const auto& [k, c] : f)
        add_term(out, {k.orbit, k.w, w_zero(t.datum().lattice_dim())}, c);
    return out;
}

// (x_gamma H_w e^mu) H_i: cross the lattice factor, then the finite rule.
inline AffineFockElement afock_mul_gen(const OrbitTable& t, const AffineFockElement& f, int i) {
    const CartanDatum& d = t.datum();
    const WeylGroup& W = d.weyl();
    static const LaurentScalar kCross = LaurentScalar::q_power(-1) - LaurentScalar::q_power(1);
    static const LaurentScalar kMinusQ = LaurentScalar::q_power(1, -1);
    AffineFockElement out;
    for (const auto& [k, c] : f) {
        auto [smu, theta] = bernstein_cross(d, k.lam, i);
        const Orbit& o = t.orbit(k.orbit);
        WeylGroup::Id u = W.rmul(k.w, i);
        if (W.is_min_rep(u, o.J)) {
            add_term(out, {k.orbit, u, smu}, c);
            if (W.length(u) < W.length(k.w)) add_term(out, {k.orbit, k.w, smu}, c * kCross);
        } else {
            add_term(out, {k.orbit, k.w, smu}, c * kMinusQ);
        }
        for (const auto& [mu, tc] : theta.terms())
            add_term(out, {k.orbit, k.w, mu}, c * kCross * tc);
    }
    return out;
}

inline AffineFockElement afock_mul_e(const AffineFockElement& f, const Weight& lam) {
    AffineFockElement out;
    for (const auto& [k, c] : f) out[{k.orbit, k.w, w_add(k.lam, lam)}] = c;
    return out;
}

inline AffineFockElement affine_fock_act(const OrbitTable& t, const AffineFockElement& f,
                                         const AffineHeckeElement& h) {
    const WeylGroup& W = t.datum().weyl();
    AffineFockElement out;
    for (const auto& [hk, hc] : h) {
        AffineFockElement cur = f;
        for (uint8_t i : W.word(hk.w)) cur = afock_mul_gen(t, cur, i);
        cur = afock_mul_e(cur, hk.lam);
        for (const auto& [k, c] : cur) add_term(out, k, c * hc);
    }
    return out;
}

inline AffineHeckeElement affine_embed(const OrbitTable& t, const AffineFockElement& f) {
    const WeylGroup& W = t.datum().weyl();
    AffineHeckeElement out;
    for (const auto& [k, c] : f) {
        const Orbit& o = t.orbit(k.orbit);
        int ltheta = W.length(o.theta);
        for (auto v : o.parabolic)
            add_term(out, {W.mul(v, k.w), k.lam},
                     c * LaurentScalar::minus_q_power(W.length(v) - ltheta));
    }
    return out;
}

// Leading-term elimination; `alt_order` perturbs tie-breaking among equal-w
// keys to exercise well-definedness.
inline AffineFockElement affine_peel(const OrbitTable& t, uint32_t gamma, AffineHeckeElement h,
                                     bool alt_order = false) {
    const WeylGroup& W = t.datum().weyl();
    const Orbit& o = t.orbit(gamma);
    AffineFockElement out;
    while (!h.empty()) {
        AffineKey top = std::prev(h.end())->first;
        if (alt_order) {
            // same maximal w (ids refine length), smallest lambda instead
            for (auto it = h.rbegin(); it != h.rend() && it->first.w == top.w; ++it)
                top = it->first;
        }
        LaurentScalar c = h.at(top);
        WeylGroup::Id w = W.mul(o.theta, top.w);
        if (!W.is_min_rep(w, o.J) || W.length(top.w) != W.length(o.theta) + W.length(w))
            throw NotInModuleError("not in the parabolic module");
        AffineFockElement unit{{{gamma, w, top.lam}, c}};
        h = affine_sub(std::move(h), affine_embed(t, unit));
        add_term(out, {gamma, w, top.lam}, c);
    }
    return out;
}

// Element of S~_f, represented intensionally by the images of the x_nu.
// Validated: each image satisfies a_nu H_i = -q a_nu for i in J_nu.
struct AffineSchurElement {
    std::map<uint32_t, AffineFockElement> images;
    bool operator==(const AffineSchurElement& o) const { return images == o.images; }
};

inline AffineSchurElement make_endo(const OrbitTable& t,
                                    std::map<uint32_t, AffineFockElement> images) {
    static const LaurentScalar kMinusQ = LaurentScalar::q_power(1, -1);
    for (auto& [nu, a] : images) {
        if (nu >= t.num_orbits()) throw UsageError("make_endo: bad orbit index");
        for (const auto& [k, c] : a) {
            (void)c;
            if (static_cast<int>(k.lam.size()) != t.datum().lattice_dim())
                throw UsageError("make_endo: weight has wrong coordinate length");
        }
        for (int i : t.orbit(nu).J) {
            AffineHeckeElement hi{{{t.datum().weyl().rmul(0, i), w_zero(t.datum().lattice_dim())},
                                   LaurentScalar(1)}};
            if (!(affine_fock_act(t, a, hi) == afock_scale(a, kMinusQ)))
                throw UsageError("make_endo: eigencondition fails at orbit " +
                                 t.orbit(nu).label + ", generator " + std::to_string(i + 1));
        }
    }
    AffineSchurElement e;
    for (auto& [nu, a] : images)
        if (!a.empty()) e.images[nu] = std::move(a);
    return e;
}

inline AffineSchurElement endo_identity(const OrbitTable& t) {
    AffineSchurElement e;
    for (uint32_t g = 0; g < t.num_orbits(); ++g) e.images[g] = afock_unit(t, g);
    return e;
}

// Generator iota^w_{gamma nu}: the q-lifted phi basis element with trivial
// lattice part.
inline AffineSchurElement iota_generator(const OrbitTable& t, const Xi& xi) {
    auto img = phi_image(t, xi, symbolic_q());
    std::map<uint32_t, AffineFockElement> images;
    images[xi.nu] = afock_from_fock(t, img);
    return make_endo(t, std::move(images));
}

inline AffineSchurElement endo_compose(const OrbitTable& t, const AffineSchurElement& a,
                                       const AffineSchurElement& b) {
    AffineSchurElement out;
    for (const auto& [nu, bimg] : b.images) {
        // split the normal form by gamma block: b_nu = sum_gamma x_gamma h_gamma
        std::map<uint32_t, AffineHeckeElement> blocks;
        for (const auto& [k, c] : bimg) add_term(blocks[k.orbit], {k.w, k.lam}, c);
        AffineFockElement acc;
        for (const auto& [gamma, h] : blocks) {
            auto it = a.images.find(gamma);
            if (it == a.images.end()) continue;
            acc = afock_add(std::move(acc), affine_fock_act(t, it->second, h));
        }
        if (!acc.empty()) out.images[nu] = std::move(acc);
    }
    return out;
}

// Endomorphism given by right multiplication with a W-invariant lattice sum.
inline std::vector<Weight> weyl_orbit_weights(const CartanDatum& d, const Weight& mu) {
    std::set<Weight> orb{mu};
    std::vector<Weight> fr{mu};
    while (!fr.empty()) {
        std::vector<Weight> nx;
        for (const auto& w : fr)
            for (int i = 0; i < d.num_simple(); ++i) {
                Weight r = d.reflect(w, i);
                if (orb.insert(r).second) nx.push_back(r);
            }
        fr = std::move(nx);
    }
    return {orb.begin(), orb.end()};
}

inline AffineHeckeElement central_candidate(const CartanDatum& d, const Weight& mu) {
    AffineHeckeElement z;
    for (const auto& lam : weyl_orbit_weights(d, mu))
        add_term(z, {0, lam}, LaurentScalar(1));
    return z;
}

inline AffineSchurElement central_endo(const OrbitTable& t, const AffineHeckeElement& z) {
    std::map<uint32_t, AffineFockElement> images;
    for (uint32_t g = 0; g < t.num_orbits(); ++g)
        images[g] = affine_fock_act(t, afock_unit(t, g), z);
    return make_endo(t, std::move(images));
}

// Per-block shift x_nu -> x_nu (sum over the W_nu-orbit of mu'): a valid
// endomorphism concentrated in one block.
inline std::optional<AffineSchurElement> block_shift_endo(const OrbitTable& t, uint32_t nu,
                                                          const Weight& mu) {
    const CartanDatum& d = t.datum();
    std::set<Weight> orb{mu};
    std::vector<Weight> fr{mu};
    while (!fr.empty()) {
        std::vector<Weight> nx;
        for (const auto& w : fr)
            for (int i : t.orbit(nu).J) {
                Weight r = d.reflect(w, i);
                if (orb.insert(r).second) nx.push_back(r);
            }
        fr = std::move(nx);
    }
    AffineHeckeElement z;
    for (const auto& lam : orb) add_term(z, {0, lam}, LaurentScalar(1));
    std::map<uint32_t, AffineFockElement> images;
    images[nu] = affine_fock_act(t, afock_unit(t, nu), z);
    try {
        return make_endo(t, std::move(images));
    } catch (const UsageError&) {
        return std::nullopt;
    }
}

struct CenterReport {
    bool pass = true;
    int generators_checked = 0;
    std::string witness;
};

// Cor "center of aff schur" shadow: the Bernstein-central candidate
// z = sum_{lambda in W mu} e^lambda commutes with every generator.
inline CenterReport center_check(const OrbitTable& t, const Weight& mu, int height_cap) {
    const CartanDatum& d = t.datum();
    if (!d.is_dominant(mu)) throw UsageError("center_check: mu must be dominant");
    CenterReport rep;
    AffineSchurElement Z = central_endo(t, central_candidate(d, mu));

    std::vector<AffineSchurElement> gens;
    std::vector<std::string> names;
    for (uint32_t g = 0; g < t.num_orbits(); ++g)
        for (uint32_t n = 0; n < t.num_orbits(); ++n)
            for (auto w : t.double_reps(g, n)) {
                gens.push_back(iota_generator(t, Xi{g, w, n}));
                names.push_back("iota(" + t.orbit(g).label + "," + t.orbit(n).label + ")");
            }
    if (height_cap > 0) {
        // one nonzero dominant shift per block, within the height cap
        for (uint32_t n = 0; n < t.num_orbits(); ++n) {
            Weight mu2 = w_zero(d.lattice_dim());
            mu2[0] = d.coord_denom() * std::min<long long>(height_cap, 1);
            if (auto e = block_shift_endo(t, n, mu2)) {
                gens.push_back(*e);
                names.push_back("shift(" + t.orbit(n).label + ")");
            }
        }
    }
    for (size_t i = 0; i < gens.size(); ++i) {
        ++rep.generators_checked;
        if (!(endo_compose(t, Z, gens[i]) == endo_compose(t, gens[i], Z))) {
            rep.pass = false;
            rep.witness = names[i];
            return rep;
        }
    }
    return rep;
}

struct FreenessReport {
    size_t candidates = 0;
    size_t rank = 0;
    bool pass = false;
    Rational q0;
};

// Checks that {x_gamma H_w e^lambda : w in D_gamma, |lambda| <= box} is
// linearly independent after embedding, by exact rank at a rational point
// (a full specialized rank lower-bounds the generic rank).
inline FreenessReport freeness_probe(const OrbitTable& t, uint32_t gamma, int box,
                                     const Rational& q0 = 3, size_t cap = 4000) {
    const CartanDatum& d = t.datum();
    const Orbit& o = t.orbit(gamma);
    // lattice box: true coordinates with |c| <= box
    std::vector<Weight> lams;
    Weight cur(d.lattice_dim(), -box);
    while (true) {
        Weight stored = w_scale(d.coord_denom(), cur);
        lams.push_back(stored);
        int k = d.lattice_dim() - 1;
        while (k >= 0) {
            if (++cur[k] <= box) break;
            cur[k] = -box;
            --k;
        }
        if (k < 0) break;
    }
    if (lams.size() * o.min_reps.size() > cap)
        throw UsageError("freeness_probe: box too large");

    std::map<AffineKey, size_t> colidx;
    std::vector<std::vector<Rational>> rows;
    for (auto w : o.min_reps)
        for (const auto& lam : lams) {
            AffineFockElement unit{{{gamma, w, lam}, LaurentScalar(1)}};
            auto emb = affine_embed(t, unit);
            std::vector<std::pair<size_t, Rational>> sparse;
            for (const auto& [k, c] : emb) {
                auto [it, fresh] = colidx.emplace(k, colidx.size());
                (void)fresh;
                sparse.emplace_back(it->second, c.evaluate(q0));
            }
            std::vector<Rational> row(colidx.size(), 0);
            for (auto& [j, v] : sparse) row[j] = v;
            rows.push_back(std::move(row));
        }
    size_t ncols = colidx.size();
    for (auto& r : rows) r.resize(ncols, Rational(0));

    // Gaussian elimination over Q
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (size_t cdx = col; cdx < ncols; ++cdx) rows[r][cdx] -= f * rows[rank][cdx];
        }
        ++rank;
    }
    FreenessReport rep;
    rep.candidates = lams.size() * o.min_reps.size();
    rep.rank = rank;
    rep.pass = rep.rank == rep.candidates;
    rep.q0 = q0;
    return rep;
}

// ---- the SL2 remark -------------------------------------------------------

struct Sl2Remark {
    CartanPtr datum;
    using Mat = std::array<std::array<LatticeRingElement, 2>, 2>;
    std::array<Mat, 4> mats;  // action of 1, e^{-w}, H, e^{-w}H
    // the same entries as polynomials in z = e^w + e^{-w} over Z[q,q^-1]
    using ZMat = std::array<std::array<Poly<LaurentScalar>, 2>, 2>;
    std::array<ZMat, 4> zmats;
};

namespace detail {

// Reduce an element of Z[q,q^-1][e^{+-w}] to c0 + c1 e^{-w} with c_i in
// Z[q,q^-1][z], z = e^w + e^{-w}.
inline std::pair<Poly<LaurentScalar>, Poly<LaurentScalar>> sl2_reduce(
    std::map<long long, LaurentScalar> p) {
    std::map<long long, Poly<LaurentScalar>> work;
    for (auto& [k, c] : p)
        if (!c.is_zero()) work[k] += Poly<LaurentScalar>(c);
    while (true) {
        long long k = 0;
        bool found = false;
        for (auto& [e, c] : work) {
            if (c.is_zero()) continue;
            if (e >= 1 || e <= -2) {
                k = e;
                found = true;
                break;
            }
        }
        if (!found) break;
        Poly<LaurentScalar> c = work[k];
        work.erase(k);
        if (k >= 1) {  // e^k = z e^{k-1} - e^{k-2}
            work[k - 1] += c.shifted();
            work[k - 2] -= c;
        } else {  // e^k = z e^{k+1} - e^{k+2}
            work[k + 1] += c.shifted();
            work[k + 2] -= c;
        }
    }
    return {work.count(0) ? work[0] : Poly<LaurentScalar>{},
            work.count(-1) ? work[-1] : Poly<LaurentScalar>{}};
}

inline LatticeRingElement z_expand(const Poly<LaurentScalar>& p) {
    LatticeRingElement zed;
    zed.add(Weight{1}, LaurentScalar(1));
    zed.add(Weight{-1}, LaurentScalar(1));
    LatticeRingElement out, pw = LatticeRingElement::e(Weight{0});
    for (size_t k = 0; k < p.c.size(); ++k) {
        out += pw.scaled(p.c[k]);
        pw = pw * zed;
    }
    return out;
}

} // namespace detail

// Computes the action of {1, e^{-w}, H, e^{-w}H} on H~ x_0 over R(G~) in the
// basis {x_0, e^{-w} x_0} and checks it against the pinned matrices.
inline Sl2Remark sl2_remark_matrices() {
    auto d = CartanDatum::make(CartanKind::A, 1);
    const WeylGroup& W = d->weyl();
    auto C = symbolic_q();
    WeylGroup::Id s = W.from_word({0});

    AffineHeckeElement xg = affine_from_hecke(*d, x_gamma(W, {0}, C));
    Weight mw{-1};
    std::array<AffineHeckeElement, 2> basis{xg, affine_mul(*d, affine_e(*d, mw), xg)};
    std::array<AffineHeckeElement, 4> gens{
        affine_unit(*d), affine_e(*d, mw),
        affine_from_hecke(*d, hecke_gen(W, 0, C)),
        affine_mul(*d, affine_e(*d, mw), affine_from_hecke(*d, hecke_gen(W, 0, C)))};

    Sl2Remark out;
    out.datum = d;
    for (int g = 0; g < 4; ++g) {
        for (int j = 0; j < 2; ++j) {
            AffineHeckeElement v = affine_mul(*d, gens[g], basis[j]);
            // v = p(e) x_0 with p read off the H_s-part: coeff of H_s e^{-m w}
            std::map<long long, LaurentScalar> p;
            AffineHeckeElement pcheck;
            for (const auto& [k, c] : v)
                if (k.w == s) p[-k.lam[0]] = c;
            for (const auto& [m, c] : p) add_term(pcheck, {0, Weight{m}}, c);
            if (!(affine_mul(*d, pcheck, xg) == v))
                throw Error("sl2_remark: element not in the cyclic module (internal)");
            auto [c0, c1] = detail::sl2_reduce(std::move(p));
            out.zmats[g][0][j] = c0;
            out.zmats[g][1][j] = c1;
            out.mats[g][0][j] = detail::z_expand(c0);
            out.mats[g][1][j] = detail::z_expand(c1);
        }
    }

    // the matrices printed in the remark
    auto L = [](long long k, long exp, long long coef) {
        LatticeRingElement e;
        e.add(Weight{k}, LaurentScalar::q_power(exp, coef));
        return e;
    };
    LatticeRingElement zero, one = L(0, 0, 1), minus1 = L(0, 0, -1);
    LatticeRingElement zsum = L(1, 0, 1) + L(-1, 0, 1);
    Sl2Remark::Mat m0{{{one, zero}, {zero, one}}};
    Sl2Remark::Mat m1{{{zero, minus1}, {one, zsum}}};
    Sl2Remark::Mat m2{{{L(0, 1, -1), zsum.scaled(LaurentScalar::q_power(-1, -1))},
                       {zero, L(0, -1, 1)}}};
    Sl2Remark::Mat m3{{{zero, L(0, -1, -1)}, {L(0, 1, -1), zero}}};
    std::array<Sl2Remark::Mat, 4> expect{m0, m1, m2, m3};
    for (int g = 0; g < 4; ++g)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                if (!(out.mats[g][r][c] == expect[g][r][c]))
                    throw Error("sl2_remark: matrix mismatch (internal)");
    return out;
}

} // namespace qschur
