#pragma once

#include "qschur/fock.hpp"

#include <atomic>
#include <thread>

namespace qschur {

template <class S>
using SchurTerms = std::map<Xi, S>;

using SchurElement = SchurTerms<LaurentScalar>;
using RatSchurElement = SchurTerms<Rational>;

template <class S>
void add_term(SchurTerms<S>& a, const Xi& k, const S& c) {
    if (c == S(0)) return;
    auto it = a.find(k);
    if (it == a.end()) {
        a.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == S(0)) a.erase(it);
    }
}

// Basis bookkeeping and phi-image cache for S_f over one orbit table.
template <class S>
class SchurContext {
  public:
    SchurContext(const OrbitTable& table, QConstants<S> consts)
        : t_(table), C_(std::move(consts)) {
        for (uint32_t g = 0; g < t_.num_orbits(); ++g)
            for (uint32_t n = 0; n < t_.num_orbits(); ++n)
                for (auto w : t_.double_reps(g, n)) xis_.push_back({g, w, n});
    }

    const OrbitTable& table() const { return t_; }
    const QConstants<S>& consts() const { return C_; }
    const std::vector<Xi>& basis() const { return xis_; }
    size_t dim() const { return xis_.size(); }

    const FockTerms<S>& image(const Xi& xi) const {
        auto it = images_.find(xi);
        if (it == images_.end()) it = images_.emplace(xi, phi_image(t_, xi, C_)).first;
        return it->second;
    }

    SchurTerms<S> identity() const {
        SchurTerms<S> e;
        for (uint32_t g = 0; g < t_.num_orbits(); ++g) e[{g, 0, g}] = C_.one;
        return e;
    }

  private:
    const OrbitTable& t_;
    QConstants<S> C_;
    std::vector<Xi> xis_;
    mutable std::map<Xi, FockTerms<S>> images_;
};

template <class S>
FockTerms<S> schur_apply(const SchurContext<S>& ctx, const SchurTerms<S>& phi,
                         const FockTerms<S>& f) {
    const WeylGroup& W = ctx.table().datum().weyl();
    FockTerms<S> out;
    for (const auto& [xi, cphi] : phi) {
        for (const auto& [k, cf] : f) {
            if (k.orbit != xi.nu) continue;
            FockTerms<S> cur = ctx.image(xi);
            for (uint8_t i : W.word(k.w)) cur = fock_act_gen(ctx.table(), cur, i, ctx.consts());
            for (const auto& [kk, v] : cur) add_term(out, kk, S(v * cphi * cf));
        }
    }
    return out;
}

// Express a family of block images (nu -> element of T_f) in phi coordinates
// by stripping maximal double cosets; throws if the family is not in S_f.
template <class S>
SchurTerms<S> schur_coords(const SchurContext<S>& ctx,
                           std::map<uint32_t, FockTerms<S>> images) {
    const OrbitTable& t = ctx.table();
    const WeylGroup& W = t.datum().weyl();
    SchurTerms<S> out;
    while (true) {
        // deterministic maximal key: largest (length, word) then orbit then nu
        bool found = false;
        uint32_t bnu = 0;
        FockKey bkey;
        for (const auto& [nu, f] : images) {
            for (const auto& [k, c] : f) {
                (void)c;
                bool better = false;
                if (!found) {
                    better = true;
                } else if (W.length(k.w) != W.length(bkey.w)) {
                    better = W.length(k.w) > W.length(bkey.w);
                } else if (k.w != bkey.w) {
                    better = k.w > bkey.w;
                } else if (k.orbit != bkey.orbit) {
                    better = k.orbit < bkey.orbit;
                } else {
                    better = nu < bnu;
                }
                if (better) {
                    found = true;
                    bkey = k;
                    bnu = nu;
                }
            }
        }
        if (!found) break;
        const Orbit& og = t.orbit(bkey.orbit);
        const Orbit& on = t.orbit(bnu);
        WeylGroup::Id w0 = W.min_double_coset_rep(og.J, bkey.w, on.J);
        auto dc = W.double_coset_elements(og.J, w0, on.J);
        WeylGroup::Id wplus = W.unique_longest(dc, "double coset");
        if (W.mul(og.theta, wplus) != bkey.w)
            throw Error("schur_coords: leading term is not of phi shape (internal)");
        Xi xi{bkey.orbit, w0, bnu};
        S c = images[bnu].at(bkey);
        add_term(out, xi, c);
        images[bnu] = fock_sub(std::move(images[bnu]), fock_scale(ctx.image(xi), c));
    }
    return out;
}

// Composition phi_a . phi_b expanded back into the phi basis.
template <class S>
SchurTerms<S> schur_mul(const SchurContext<S>& ctx, const SchurTerms<S>& a,
                        const SchurTerms<S>& b) {
    std::map<uint32_t, FockTerms<S>> images;
    for (uint32_t nu = 0; nu < ctx.table().num_orbits(); ++nu) {
        FockTerms<S> bx = schur_apply(ctx, b, fock_unit(nu, ctx.consts()));
        if (bx.empty()) continue;
        FockTerms<S> ax = schur_apply(ctx, a, bx);
        if (!ax.empty()) images[nu] = std::move(ax);
    }
    return schur_coords(ctx, std::move(images));
}

// phi^w_{gamma nu} -> phi^{w^-1}_{nu gamma}; an anti-automorphism.
template <class S>
SchurTerms<S> schur_transpose(const OrbitTable& t, const SchurTerms<S>& a) {
    const WeylGroup& W = t.datum().weyl();
    SchurTerms<S> out;
    for (const auto& [xi, c] : a) add_term(out, Xi{xi.nu, W.inverse(xi.w), xi.gamma}, c);
    return out;
}

inline size_t dim_schur(const OrbitTable& t) { return t.xi_size(); }

inline RatSchurElement specialize(const SchurElement& a, const Rational& q0) {
    RatSchurElement out;
    for (const auto& [k, c] : a) {
        Rational v = c.evaluate(q0);
        if (v != 0) out[k] = v;
    }
    return out;
}

// Full structure-constant table: product of every ordered basis pair,
// expanded in the phi basis. Rows are computed independently (optionally in
// parallel) and merged in index order.
template <class S>
std::vector<std::vector<SchurTerms<S>>> structure_table(const SchurContext<S>& ctx,
                                                        int jobs = 1) {
    const auto& xis = ctx.basis();
    size_t n = xis.size();
    std::vector<std::vector<SchurTerms<S>>> table(n, std::vector<SchurTerms<S>>(n));
    // warm the image cache single-threaded; afterwards reads are shared
    for (const auto& xi : xis) ctx.image(xi);
    auto work = [&](size_t row) {
        SchurTerms<S> a{{xis[row], ctx.consts().one}};
        for (size_t j = 0; j < n; ++j) {
            SchurTerms<S> b{{xis[j], ctx.consts().one}};
            table[row][j] = schur_mul(ctx, a, b);
        }
    };
    if (jobs <= 1) {
        for (size_t i = 0; i < n; ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) work(i);
            });
        for (auto& th : pool) th.join();
    }
    return table;
}

} // namespace qschur
