#pragma once

#include "qschur/hecke.hpp"
#include "qschur/orbits.hpp"

namespace qschur {

// Coordinate (gamma, w) of x_gamma H_w in the Fock space T_f.
struct FockKey {
    uint32_t orbit = 0;
    WeylGroup::Id w = 0;
    bool operator<(const FockKey& o) const {
        if (orbit != o.orbit) return orbit < o.orbit;
        return w < o.w;
    }
    bool operator==(const FockKey& o) const { return orbit == o.orbit && w == o.w; }
};

template <class S>
using FockTerms = std::map<FockKey, S>;

using FockElement = FockTerms<LaurentScalar>;
using RatFockElement = FockTerms<Rational>;

template <class S>
void add_term(FockTerms<S>& a, const FockKey& k, const S& c) {
    if (c == S(0)) return;
    auto it = a.find(k);
    if (it == a.end()) {
        a.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == S(0)) a.erase(it);
    }
}

template <class S>
FockTerms<S> fock_unit(uint32_t orbit, const QConstants<S>& C) {
    return {{{orbit, 0}, C.one}};
}

template <class S>
FockTerms<S> fock_scale(const FockTerms<S>& a, const S& c) {
    FockTerms<S> out;
    for (const auto& [k, v] : a) add_term(out, k, S(v * c));
    return out;
}

template <class S>
FockTerms<S> fock_add(FockTerms<S> a, const FockTerms<S>& b) {
    for (const auto& [k, c] : b) add_term(a, k, c);
    return a;
}

template <class S>
FockTerms<S> fock_sub(FockTerms<S> a, const FockTerms<S>& b) {
    for (const auto& [k, c] : b) add_term(a, k, S(-c));
    return a;
}

// Right action of the generator H_i on x_gamma H_w, in the three cases:
// ws_i in D_gamma and longer; in D_gamma and shorter; not in D_gamma
// (then w s_i w^-1 is a simple reflection of J_gamma and the term is an
// eigenvector with eigenvalue -q).
template <class S>
FockTerms<S> fock_act_gen(const OrbitTable& t, const FockTerms<S>& f, int i,
                          const QConstants<S>& C) {
    const WeylGroup& W = t.datum().weyl();
    FockTerms<S> out;
    for (const auto& [k, c] : f) {
        const Orbit& o = t.orbit(k.orbit);
        WeylGroup::Id u = W.rmul(k.w, i);
        if (W.is_min_rep(u, o.J)) {
            add_term(out, {k.orbit, u}, c);
            if (W.length(u) < W.length(k.w)) add_term(out, k, S(c * C.qinv_minus_q));
        } else {
            add_term(out, k, S(c * C.minus_q));
        }
    }
    return out;
}

template <class S>
FockTerms<S> fock_act(const OrbitTable& t, const FockTerms<S>& f, const HeckeTerms<S>& h,
                      const QConstants<S>& C) {
    const WeylGroup& W = t.datum().weyl();
    FockTerms<S> out;
    for (const auto& [w, c] : h) {
        FockTerms<S> cur = f;
        for (uint8_t i : W.word(w)) cur = fock_act_gen(t, cur, i, C);
        for (const auto& [k, v] : cur) add_term(out, k, S(v * c));
    }
    return out;
}

// Expansion of x_gamma H_w inside the Hecke algebra.
template <class S>
HeckeTerms<S> fock_embed(const OrbitTable& t, const FockTerms<S>& f, const QConstants<S>& C) {
    const WeylGroup& W = t.datum().weyl();
    HeckeTerms<S> out;
    for (const auto& [k, c] : f) {
        const Orbit& o = t.orbit(k.orbit);
        int ltheta = W.length(o.theta);
        for (auto v : o.parabolic)
            add_term(out, W.mul(v, k.w), S(c * C.mqpow(W.length(v) - ltheta)));
    }
    return out;
}

// Inverse of fock_embed on the gamma block, by leading-term elimination:
// the top Hecke term of x_gamma H_w is H_{theta_gamma w} with coefficient 1.
template <class S>
FockTerms<S> fock_peel(const OrbitTable& t, uint32_t gamma, HeckeTerms<S> h,
                       const QConstants<S>& C) {
    const WeylGroup& W = t.datum().weyl();
    const Orbit& o = t.orbit(gamma);
    FockTerms<S> out;
    while (!h.empty()) {
        auto top = std::prev(h.end());  // ids are sorted by (length, word)
        WeylGroup::Id u = top->first;
        S c = top->second;
        WeylGroup::Id w = W.mul(o.theta, u);
        if (!W.is_min_rep(w, o.J) ||
            W.length(u) != W.length(o.theta) + W.length(w))
            throw NotInModuleError("not in the parabolic module");
        FockTerms<S> unit{{{gamma, w}, c}};
        h = hecke_sub(std::move(h), fock_embed(t, unit, C));
        add_term(out, {gamma, w}, c);
    }
    return out;
}

// Index (gamma, w, nu) of a Schur basis element phi^w_{gamma nu}.
struct Xi {
    uint32_t gamma = 0;
    WeylGroup::Id w = 0;
    uint32_t nu = 0;
    bool operator<(const Xi& o) const {
        if (gamma != o.gamma) return gamma < o.gamma;
        if (nu != o.nu) return nu < o.nu;
        return w < o.w;
    }
    bool operator==(const Xi& o) const { return gamma == o.gamma && w == o.w && nu == o.nu; }
};

// The q-lift of phi^w_{gamma nu} applied to x_nu: peel of the double-coset
// sum normalized to leading coefficient 1 at w+. Validates the eigen
// condition a H_i = -q a for i in J_nu.
template <class S>
FockTerms<S> phi_image(const OrbitTable& t, const Xi& xi, const QConstants<S>& C) {
    const WeylGroup& W = t.datum().weyl();
    const Orbit& og = t.orbit(xi.gamma);
    const Orbit& on = t.orbit(xi.nu);
    if (!W.is_min_rep(xi.w, og.J) || !W.is_min_rep(W.inverse(xi.w), on.J))
        throw UsageError("phi_image: w not a minimal double coset representative");
    auto dc = W.double_coset_elements(og.J, xi.w, on.J);
    WeylGroup::Id wplus = W.unique_longest(dc, "double coset");
    HeckeTerms<S> sum;
    for (auto wp : dc) add_term(sum, wp, C.mqpow(W.length(wp) - W.length(wplus)));
    FockTerms<S> a = fock_peel(t, xi.gamma, std::move(sum), C);
    for (int i : on.J) {
        FockTerms<S> lhs = fock_act_gen(t, a, i, C);
        FockTerms<S> rhs = fock_scale(a, C.minus_q);
        if (!(lhs == rhs)) throw Error("phi_image: eigencondition failed (internal)");
    }
    return a;
}

inline RatFockElement specialize(const FockElement& a, const Rational& q0) {
    RatFockElement out;
    for (const auto& [k, c] : a) {
        Rational v = c.evaluate(q0);
        if (v != 0) out[k] = v;
    }
    return out;
}

} // namespace qschur
