#pragma once

#include "qschur/laurent.hpp"
#include "qschur/weyl.hpp"

#include <map>

namespace qschur {

// The scalar constants the generator rule needs, so the same multiplication
// code serves Z[q,q^-1] and any exact rational specialization (q0 = 1 is the
// classical group algebra, with H_w read as w).
template <class S>
struct QConstants {
    S one;
    S minus_q;        // -q
    S qinv_minus_q;   // q^-1 - q
    S (*minus_q_pow)(const S& self_minus_q, long k);  // (-q)^k
    S mqpow(long k) const { return minus_q_pow(minus_q, k); }
};

inline QConstants<LaurentScalar> symbolic_q() {
    QConstants<LaurentScalar> c;
    c.one = LaurentScalar(1);
    c.minus_q = LaurentScalar::q_power(1, -1);
    c.qinv_minus_q = LaurentScalar::q_power(-1) - LaurentScalar::q_power(1);
    c.minus_q_pow = [](const LaurentScalar&, long k) { return LaurentScalar::minus_q_power(k); };
    return c;
}

inline QConstants<Rational> rational_q(const Rational& q0) {
    if (q0 == 0) throw UsageError("specialization at q = 0");
    QConstants<Rational> c;
    c.one = 1;
    c.minus_q = -q0;
    c.qinv_minus_q = Rational(1) / q0 - q0;
    c.minus_q_pow = [](const Rational& mq, long k) { return rat_pow(mq, k); };
    return c;
}

template <class S>
using HeckeTerms = std::map<WeylGroup::Id, S>;

using HeckeElement = HeckeTerms<LaurentScalar>;
using RatHeckeElement = HeckeTerms<Rational>;

template <class S>
void add_term(HeckeTerms<S>& a, WeylGroup::Id w, const S& c) {
    if (c == S(0)) return;
    auto it = a.find(w);
    if (it == a.end()) {
        a.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == S(0)) a.erase(it);
    }
}

template <class S>
HeckeTerms<S> hecke_unit(const QConstants<S>& C) {
    return {{0, C.one}};
}

template <class S>
HeckeTerms<S> hecke_gen(const WeylGroup& W, int i, const QConstants<S>& C) {
    return {{W.rmul(W.identity(), i), C.one}};
}

// a * H_i by the generator rule.
template <class S>
HeckeTerms<S> hecke_mul_gen(const WeylGroup& W, const HeckeTerms<S>& a, int i,
                            const QConstants<S>& C) {
    HeckeTerms<S> out;
    for (const auto& [w, c] : a) {
        WeylGroup::Id u = W.rmul(w, i);
        add_term(out, u, c);
        if (W.length(u) < W.length(w)) add_term(out, w, S(c * C.qinv_minus_q));
    }
    return out;
}

template <class S>
HeckeTerms<S> hecke_mul(const WeylGroup& W, const HeckeTerms<S>& a, const HeckeTerms<S>& b,
                        const QConstants<S>& C) {
    HeckeTerms<S> out;
    for (const auto& [w, c] : b) {
        HeckeTerms<S> cur = a;
        for (uint8_t i : W.word(w)) cur = hecke_mul_gen(W, cur, i, C);
        for (auto& [u, cv] : cur) add_term(out, u, S(cv * c));
    }
    return out;
}

template <class S>
HeckeTerms<S> hecke_scale(HeckeTerms<S> a, const S& c) {
    HeckeTerms<S> out;
    for (auto& [w, v] : a) add_term(out, w, S(v * c));
    return out;
}

template <class S>
HeckeTerms<S> hecke_add(HeckeTerms<S> a, const HeckeTerms<S>& b) {
    for (const auto& [w, c] : b) add_term(a, w, c);
    return a;
}

template <class S>
HeckeTerms<S> hecke_sub(HeckeTerms<S> a, const HeckeTerms<S>& b) {
    for (const auto& [w, c] : b) add_term(a, w, S(-c));
    return a;
}

// Sign-twisted parabolic symmetrizer x_gamma = sum (-q)^{l(w)-l(theta)} H_w.
template <class S>
HeckeTerms<S> x_gamma(const WeylGroup& W, const std::vector<int>& J, const QConstants<S>& C) {
    HeckeTerms<S> out;
    WeylGroup::Id theta = W.longest_in_subgroup(J);
    for (auto v : W.subgroup(J))
        add_term(out, v, C.mqpow(W.length(v) - W.length(theta)));
    return out;
}

// Anti-automorphism H_w -> H_{w^-1}.
template <class S>
HeckeTerms<S> hecke_rev(const WeylGroup& W, const HeckeTerms<S>& a) {
    HeckeTerms<S> out;
    for (const auto& [w, c] : a) add_term(out, W.inverse(w), c);
    return out;
}

inline RatHeckeElement specialize(const HeckeElement& a, const Rational& q0) {
    if (q0 == 0) throw UsageError("specialization at q = 0");
    RatHeckeElement out;
    for (const auto& [w, c] : a) {
        Rational v = c.evaluate(q0);
        if (v != 0) out[w] = v;
    }
    return out;
}

// Classical limit: q -> 1, H_w read as the group element w.
inline RatHeckeElement specialize_classical(const HeckeElement& a) {
    return specialize(a, 1);
}

} // namespace qschur
