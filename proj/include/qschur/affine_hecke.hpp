#pragma once

#include "qschur/hecke.hpp"
#include "qschur/lattice_ring.hpp"

#include <sstream>

namespace qschur {

// Normal-form monomial H_w e^lambda.
struct AffineKey {
    WeylGroup::Id w = 0;
    Weight lam;
    bool operator<(const AffineKey& o) const {
        if (w != o.w) return w < o.w;
        return lam < o.lam;
    }
    bool operator==(const AffineKey& o) const { return w == o.w && lam == o.lam; }
};

// Element of the extended affine Hecke algebra in Bernstein normal form:
// a finite Z[q,q^-1]-combination of H_w e^lambda with lattice factors right.
using AffineHeckeElement = std::map<AffineKey, LaurentScalar>;

inline void add_term(AffineHeckeElement& a, const AffineKey& k, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto it = a.find(k);
    if (it == a.end()) {
        a.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

inline AffineHeckeElement affine_unit(const CartanDatum& d) {
    return {{{0, w_zero(d.lattice_dim())}, LaurentScalar(1)}};
}
inline AffineHeckeElement affine_e(const CartanDatum& d, const Weight& lam) {
    (void)d;
    return {{{0, lam}, LaurentScalar(1)}};
}
inline AffineHeckeElement affine_from_hecke(const CartanDatum& d, const HeckeElement& h) {
    AffineHeckeElement out;
    for (const auto& [w, c] : h) add_term(out, {w, w_zero(d.lattice_dim())}, c);
    return out;
}
inline AffineHeckeElement affine_add(AffineHeckeElement a, const AffineHeckeElement& b) {
    for (const auto& [k, c] : b) add_term(a, k, c);
    return a;
}
inline AffineHeckeElement affine_sub(AffineHeckeElement a, const AffineHeckeElement& b) {
    for (const auto& [k, c] : b) add_term(a, k, -c);
    return a;
}
inline AffineHeckeElement affine_scale(const AffineHeckeElement& a, const LaurentScalar& c) {
    AffineHeckeElement out;
    for (const auto& [k, v] : a) add_term(out, k, v * c);
    return out;
}

// Data of the Bernstein relation e^lambda H_i = H_i e^{s_i lambda} +
// (q^-1 - q) theta(lambda, i): returns s_i(lambda) and the divided
// difference theta = (e^lambda - e^{s_i lambda}) / (1 - e^{-alpha_i}),
// expanded in closed form.
inline std::pair<Weight, LatticeRingElement> bernstein_cross(const CartanDatum& d,
                                                             const Weight& lam, int i) {
    long long n = d.pairing(lam, i);
    Weight slam = w_sub(lam, w_scale(n, d.simple_root(i)));
    LatticeRingElement theta;
    if (n > 0) {
        for (long long k = 0; k < n; ++k)
            theta.add(w_sub(lam, w_scale(k, d.simple_root(i))), LaurentScalar(1));
    } else if (n < 0) {
        for (long long k = 1; k <= -n; ++k)
            theta.add(w_add(lam, w_scale(k, d.simple_root(i))), LaurentScalar(-1));
    }
    return {slam, theta};
}

// a * H_i in normal form.
inline AffineHeckeElement affine_mul_gen(const CartanDatum& d, const AffineHeckeElement& a,
                                         int i) {
    const WeylGroup& W = d.weyl();
    static const LaurentScalar kCross = LaurentScalar::q_power(-1) - LaurentScalar::q_power(1);
    AffineHeckeElement out;
    for (const auto& [key, c] : a) {
        auto [slam, theta] = bernstein_cross(d, key.lam, i);
        // H_w (H_i e^{s_i lam})
        WeylGroup::Id u = W.rmul(key.w, i);
        add_term(out, {u, slam}, c);
        if (W.length(u) < W.length(key.w)) add_term(out, {key.w, slam}, c * kCross);
        // H_w (q^-1 - q) theta
        for (const auto& [mu, tc] : theta.terms()) add_term(out, {key.w, mu}, c * kCross * tc);
    }
    return out;
}

inline AffineHeckeElement affine_mul_e(const AffineHeckeElement& a, const Weight& lam) {
    AffineHeckeElement out;
    for (const auto& [key, c] : a) out[{key.w, w_add(key.lam, lam)}] = c;
    return out;
}

inline AffineHeckeElement affine_mul(const CartanDatum& d, const AffineHeckeElement& a,
                                     const AffineHeckeElement& b) {
    const WeylGroup& W = d.weyl();
    AffineHeckeElement out;
    for (const auto& [kb, cb] : b) {
        AffineHeckeElement cur = a;
        for (uint8_t i : W.word(kb.w)) cur = affine_mul_gen(d, cur, i);
        cur = affine_mul_e(cur, kb.lam);
        for (const auto& [k, c] : cur) add_term(out, k, c * cb);
    }
    return out;
}

// --- text serialization --------------------------------------------------
// term: (coef) * H[1 2 1] * e[0,1]   with 1-based generator indices and
// weight coordinates as (possibly halved) rationals.

inline std::string affine_to_string(const CartanDatum& d, const AffineHeckeElement& a) {
    if (a.empty()) return "0";
    const WeylGroup& W = d.weyl();
    int denom = d.coord_denom();
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ") * H[";
        const auto& wd = W.word(k.w);
        for (size_t t = 0; t < wd.size(); ++t) {
            if (t) os << " ";
            os << int(wd[t]) + 1;
        }
        os << "] * e[";
        for (size_t t = 0; t < k.lam.size(); ++t) {
            if (t) os << ",";
            if (k.lam[t] % denom == 0)
                os << k.lam[t] / denom;
            else
                os << k.lam[t] << "/" << denom;
        }
        os << "]";
    }
    return os.str();
}

inline AffineHeckeElement affine_parse(const CartanDatum& d, const std::string& text) {
    AffineHeckeElement out;
    if (text == "0") return out;
    const WeylGroup& W = d.weyl();
    int denom = d.coord_denom();
    size_t pos = 0;
    auto expect = [&](const std::string& s) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (text.compare(pos, s.size(), s) != 0)
            throw UsageError("affine_parse: expected '" + s + "' at position " + std::to_string(pos));
        pos += s.size();
    };
    auto read_until = [&](char stop) {
        size_t b = pos;
        while (pos < text.size() && text[pos] != stop) ++pos;
        if (pos == text.size()) throw UsageError("affine_parse: unterminated token");
        return text.substr(b, pos - b);
    };
    while (true) {
        expect("(");
        LaurentScalar c = LaurentScalar::parse(read_until(')'));
        expect(")");
        expect("*");
        expect("H[");
        std::string wordtxt = read_until(']');
        expect("]");
        expect("*");
        expect("e[");
        std::string wttxt = read_until(']');
        expect("]");
        std::vector<int> word;
        {
            std::istringstream is(wordtxt);
            int g;
            while (is >> g) word.push_back(g - 1);
        }
        Weight lam;
        {
            std::istringstream is(wttxt);
            std::string item;
            while (std::getline(is, item, ',')) {
                auto slash = item.find('/');
                if (slash == std::string::npos)
                    lam.push_back(std::stoll(item) * denom);
                else
                    lam.push_back(std::stoll(item.substr(0, slash)));
            }
        }
        if (static_cast<int>(lam.size()) != d.lattice_dim())
            throw UsageError("affine_parse: wrong weight length");
        add_term(out, {W.from_word(word), lam}, c);
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) break;
        expect("+");
    }
    return out;
}

} // namespace qschur
