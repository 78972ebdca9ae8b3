#pragma once

#include "qschur/numeric.hpp"

#include <vector>

namespace qschur {

// Dense polynomial in one variable over S.
template <class S>
struct Poly {
    std::vector<S> c;  // c[k] is the coefficient of z^k

    Poly() = default;
    explicit Poly(S v) {
        c.push_back(std::move(v));
        trim();
    }
    static Poly z() {
        Poly p;
        p.c = {S(0), S(1)};
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == S(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    S get(size_t k) const { return k < c.size() ? c[k] : S(0); }

    bool operator==(const Poly& o) const { return c == o.c; }

    Poly& operator+=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), S(0));
        for (size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), S(0));
        for (size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, S(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    Poly shifted() const {  // multiply by z
        Poly r;
        if (is_zero()) return r;
        r.c.assign(c.size() + 1, S(0));
        for (size_t k = 0; k < c.size(); ++k) r.c[k + 1] = c[k];
        return r;
    }
};

// Long division over a field scalar; returns {quotient, remainder}.
inline std::pair<Poly<Rational>, Poly<Rational>> poly_divmod(Poly<Rational> a,
                                                             const Poly<Rational>& b) {
    if (b.is_zero()) throw Error("poly_divmod: division by zero polynomial");
    Poly<Rational> q;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        Rational f = a.c.back() / b.c.back();
        if (q.degree() < shift + 0) q.c.resize(shift + 1, Rational(0));
        if (static_cast<int>(q.c.size()) <= shift) q.c.resize(shift + 1, Rational(0));
        q.c[shift] += f;
        Poly<Rational> sub;
        sub.c.assign(shift + b.c.size(), Rational(0));
        for (size_t k = 0; k < b.c.size(); ++k) sub.c[shift + k] = f * b.c[k];
        a -= sub;
    }
    q.trim();
    return {q, a};
}

} // namespace qschur
