#pragma once

#include "qschur/weyl.hpp"

#include <optional>
#include <set>
#include <sstream>

namespace qschur {

struct QfSpec {
    enum class Type { Box, Iota, Jmath, Regular, Explicit };
    Type type = Type::Regular;
    int n = 0;
    std::vector<Weight> weights;  // stored coordinates, Explicit only

    static QfSpec box(int n) { return {Type::Box, n, {}}; }
    static QfSpec iota(int n) { return {Type::Iota, n, {}}; }
    static QfSpec jmath(int n) { return {Type::Jmath, n, {}}; }
    static QfSpec regular() { return {Type::Regular, 0, {}}; }
    static QfSpec explicit_list(std::vector<Weight> ws) { return {Type::Explicit, 0, std::move(ws)}; }

    std::string to_string() const {
        switch (type) {
            case Type::Box: return "box:" + std::to_string(n);
            case Type::Iota: return "iota:" + std::to_string(n);
            case Type::Jmath: return "jmath:" + std::to_string(n);
            case Type::Regular: return "regular";
            case Type::Explicit: return "explicit[" + std::to_string(weights.size()) + "]";
        }
        return "?";
    }
};

// Full W-orbit of one weight with its anti-dominant representative and the
// generator set fixing it.
struct WeylOrbit {
    std::vector<Weight> weights;  // sorted
    Weight rep;
    std::vector<int> J;
};

inline WeylOrbit weyl_orbit(const CartanDatum& d, const Weight& lam) {
    if (static_cast<int>(lam.size()) != d.lattice_dim())
        throw UsageError("weyl_orbit: wrong coordinate length");
    std::set<Weight> orb{lam};
    std::vector<Weight> fr{lam};
    while (!fr.empty()) {
        std::vector<Weight> nx;
        for (const auto& w : fr)
            for (int i = 0; i < d.num_simple(); ++i) {
                Weight r = d.reflect(w, i);
                if (orb.insert(r).second) nx.push_back(r);
            }
        fr = std::move(nx);
        if (orb.size() > 500000) throw UsageError("weyl_orbit: orbit exceeds cap");
    }
    WeylOrbit out;
    out.weights.assign(orb.begin(), orb.end());
    int reps = 0;
    for (const auto& w : out.weights)
        if (d.is_antidominant(w)) {
            out.rep = w;
            ++reps;
        }
    if (reps != 1) throw Error("weyl_orbit: anti-dominant representative not unique");
    for (int i = 0; i < d.num_simple(); ++i)
        if (d.pairing(out.rep, i) == 0) out.J.push_back(i);
    return out;
}

struct Orbit {
    Weight rep;                         // anti-dominant representative i_gamma
    std::vector<int> J;                 // generator indices fixing the rep
    size_t size = 0;                    // orbit cardinality
    WeylGroup::Id theta = 0;            // longest element of W_J
    std::vector<WeylGroup::Id> parabolic;  // W_J, sorted
    size_t parabolic_size = 0;          // |W_J|
    std::vector<WeylGroup::Id> min_reps;  // D_gamma, sorted by (length, word)
    int sub_positive = 0;               // #Pi^+_gamma
    std::vector<int> composition;       // label for box/iota/jmath modes (may be empty)
    std::string label;
};

class OrbitTable {
  public:
    OrbitTable(CartanPtr datum, const QfSpec& spec) : datum_(std::move(datum)), spec_(spec) {
        build();
    }

    const CartanDatum& datum() const { return *datum_; }
    CartanPtr datum_ptr() const { return datum_; }
    const QfSpec& spec() const { return spec_; }
    size_t num_orbits() const { return orbits_.size(); }
    const Orbit& orbit(size_t g) const { return orbits_[g]; }
    const std::vector<Orbit>& orbits() const { return orbits_; }
    size_t total_weights() const { return total_weights_; }

    // Complex dimension of the partial flag variety F_gamma.
    int dim_flag(size_t g) const {
        return datum_->num_positive_roots() - orbits_[g].sub_positive;
    }

    // D_{gamma nu}, sorted by (length, word).
    std::vector<WeylGroup::Id> double_reps(size_t g, size_t n) const {
        const WeylGroup& W = datum_->weyl();
        std::vector<WeylGroup::Id> out;
        for (auto w : orbits_[g].min_reps)
            if (W.is_min_rep(W.inverse(w), orbits_[n].J)) out.push_back(w);
        return out;
    }

    size_t xi_size() const {
        size_t s = 0;
        for (size_t g = 0; g < num_orbits(); ++g)
            for (size_t n = 0; n < num_orbits(); ++n) s += double_reps(g, n).size();
        return s;
    }

  private:
    void build() {
        const CartanDatum& d = *datum_;
        std::vector<Weight> init = initial_weights();
        if (init.empty()) throw UsageError("empty orbit-set specification");

        // saturate under the W-action
        std::set<Weight> all(init.begin(), init.end());
        std::vector<Weight> frontier(all.begin(), all.end());
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const auto& w : frontier)
                for (int i = 0; i < d.num_simple(); ++i) {
                    Weight r = d.reflect(w, i);
                    if (all.insert(r).second) next.push_back(r);
                }
            frontier = std::move(next);
            if (all.size() > 500000) throw UsageError("weight set exceeds saturation cap");
        }
        total_weights_ = all.size();

        const WeylGroup& W = d.weyl();
        std::set<Weight> todo = all;
        while (!todo.empty()) {
            WeylOrbit wo = weyl_orbit(d, *todo.begin());
            for (const auto& w : wo.weights) todo.erase(w);
            Orbit o;
            o.rep = wo.rep;
            o.size = wo.weights.size();
            o.J = wo.J;
            o.parabolic = W.subgroup(o.J);
            o.theta = W.unique_longest(o.parabolic, "parabolic subgroup");
            o.parabolic_size = o.parabolic.size();
            o.min_reps = W.min_coset_reps(o.J);
            o.sub_positive = static_cast<int>(W.sub_positive_roots(o.J).size());
            if (o.min_reps.size() * o.parabolic_size != W.size())
                throw Error("coset decomposition count mismatch");
            if (static_cast<int>(W.length(o.theta)) != o.sub_positive)
                throw Error("length of theta_gamma != #Pi^+_gamma");
            o.composition = composition_label(o.rep);
            o.label = o.composition.empty() ? w_to_string(o.rep, d.coord_denom())
                                            : comp_to_string(o.composition);
            orbits_.push_back(std::move(o));
        }
        std::sort(orbits_.begin(), orbits_.end(),
                  [](const Orbit& a, const Orbit& b) { return a.rep < b.rep; });

        size_t total = 0;
        for (const auto& o : orbits_) total += o.size;
        if (total != total_weights_) throw Error("orbit sizes do not add up");
    }

    std::vector<Weight> initial_weights() const {
        const CartanDatum& d = *datum_;
        int dim = d.lattice_dim();
        switch (spec_.type) {
            case QfSpec::Type::Regular:
                return {d.rho()};
            case QfSpec::Type::Explicit:
                for (const auto& w : spec_.weights)
                    if (static_cast<int>(w.size()) != dim)
                        throw UsageError("explicit weight has wrong coordinate length");
                return spec_.weights;
            case QfSpec::Type::Box: {
                if (d.kind() != CartanKind::GL)
                    throw UsageError("box(n) requires gl mode");
                if (spec_.n < 1) throw UsageError("box(n) needs n >= 1");
                return cube_weights(0, spec_.n - 1, 1);
            }
            case QfSpec::Type::Jmath: {
                if (d.kind() != CartanKind::SO && d.kind() != CartanKind::SP)
                    throw UsageError("jmath(n) requires so/sp mode");
                if (spec_.n < 0) throw UsageError("jmath(n) needs n >= 0");
                return cube_weights(-2 * spec_.n, 2 * spec_.n, 2);
            }
            case QfSpec::Type::Iota: {
                if (d.kind() != CartanKind::SO && d.kind() != CartanKind::SP)
                    throw UsageError("iota(n) requires so/sp mode");
                if (spec_.n < 1) throw UsageError("iota(n) needs n >= 1");
                return cube_weights(-(2 * spec_.n - 1), 2 * spec_.n - 1, 2);
            }
        }
        return {};
    }

    std::vector<Weight> cube_weights(long long lo, long long hi, long long step) const {
        int dim = datum_->lattice_dim();
        std::vector<Weight> out;
        Weight cur(dim, lo);
        double count = 1;
        for (int i = 0; i < dim; ++i) count *= double((hi - lo) / step + 1);
        if (count > 500000) throw UsageError("box specification too large");
        while (true) {
            out.push_back(cur);
            int k = dim - 1;
            while (k >= 0) {
                cur[k] += step;
                if (cur[k] <= hi) break;
                cur[k] = lo;
                --k;
            }
            if (k < 0) break;
        }
        return out;
    }

    std::vector<int> composition_label(const Weight& rep) const {
        const CartanDatum& d = *datum_;
        if (spec_.type == QfSpec::Type::Box) {
            std::vector<int> c(spec_.n, 0);
            for (auto a : rep) c[static_cast<size_t>(a)]++;
            return c;
        }
        if (spec_.type == QfSpec::Type::Jmath) {
            std::vector<int> c(spec_.n + 1, 0);
            for (auto a : rep) c[static_cast<size_t>(std::abs(a) / 2)]++;
            return c;
        }
        if (spec_.type == QfSpec::Type::Iota) {
            std::vector<int> c(spec_.n, 0);
            for (auto a : rep) c[static_cast<size_t>((std::abs(a) - 1) / 2)]++;
            return c;
        }
        (void)d;
        return {};
    }

    static std::string comp_to_string(const std::vector<int>& c) {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i];
        }
        os << ")";
        return os.str();
    }

    CartanPtr datum_;
    QfSpec spec_;
    std::vector<Orbit> orbits_;
    size_t total_weights_ = 0;
};

// One row of the Steinberg census: the G-orbit labelled (gamma, w, nu).
struct CensusEntry {
    size_t gamma = 0, nu = 0;
    WeylGroup::Id w = 0;
    int dim_flag_gamma = 0;
    int dim_flag_nu = 0;
    int dim_z = 0;
    size_t coset_size = 0;
    std::vector<WeylGroup::Id> closure_cells;
};

struct CensusReport {
    std::vector<CensusEntry> entries;
    size_t xi_total = 0;
};

inline CensusReport census(const OrbitTable& table) {
    const CartanDatum& d = table.datum();
    const WeylGroup& W = d.weyl();
    CensusReport rep;
    for (size_t g = 0; g < table.num_orbits(); ++g) {
        for (size_t n = 0; n < table.num_orbits(); ++n) {
            auto dgn = table.double_reps(g, n);
            size_t coset_total = 0;
            for (auto w : dgn) {
                CensusEntry e;
                e.gamma = g;
                e.nu = n;
                e.w = w;
                e.dim_flag_gamma = table.dim_flag(g);
                e.dim_flag_nu = table.dim_flag(n);
                e.dim_z = e.dim_flag_gamma + e.dim_flag_nu;
                e.coset_size =
                    W.double_coset_elements(table.orbit(g).J, w, table.orbit(n).J).size();
                coset_total += e.coset_size;
                for (auto y : dgn)
                    if (W.bruhat_leq(y, w)) e.closure_cells.push_back(y);
                rep.entries.push_back(std::move(e));
            }
            if (coset_total != W.size())
                throw Error("double cosets do not partition W");
            rep.xi_total += dgn.size();
        }
    }
    return rep;
}

// theta_J and the longest element w+ of the double coset W_J w W_K.
inline std::pair<WeylElement, WeylElement> longest_elements(const CartanDatum& d,
                                                            const std::vector<int>& J,
                                                            WeylElement w,
                                                            const std::vector<int>& K) {
    const WeylGroup& W = d.weyl();
    if (!W.is_min_rep(w.id, J) || !W.is_min_rep(W.inverse(w.id), K))
        throw UsageError("longest_elements: w not a minimal double coset representative");
    WeylGroup::Id theta = W.longest_in_subgroup(J);
    auto dc = W.double_coset_elements(J, w.id, K);
    WeylGroup::Id wplus = W.unique_longest(dc, "double coset");
    // Howlett factorization: theta_J * w+ lies in D_J
    if (!W.is_min_rep(W.mul(theta, wplus), J))
        throw Error("Howlett factorization failed");
    return {{&W, theta}, {&W, wplus}};
}

// Longest element of W_J w W_K intersected with D_{J,M}; requires M subset K.
inline WeylElement longest_in_coset_intersection(const CartanDatum& d, const std::vector<int>& J,
                                                 WeylElement w, const std::vector<int>& K,
                                                 const std::vector<int>& M) {
    for (int m : M)
        if (std::find(K.begin(), K.end(), m) == K.end())
            throw UsageError("longest_in_coset_intersection: M not a subset of K");
    const WeylGroup& W = d.weyl();
    if (!W.is_min_rep(w.id, J) || !W.is_min_rep(W.inverse(w.id), K))
        throw UsageError("longest_in_coset_intersection: w not in D_{JK}");
    std::vector<WeylGroup::Id> cand;
    for (auto x : W.double_coset_elements(J, w.id, K))
        if (W.is_min_rep(x, J) && W.is_min_rep(W.inverse(x), M)) cand.push_back(x);
    return {&W, W.unique_longest(cand, "coset intersection")};
}

// Sum of the positive roots of the subsystem generated by J.
inline Weight omega_weight(const CartanDatum& d, const std::vector<int>& J) {
    const WeylGroup& W = d.weyl();
    Weight s = w_zero(d.lattice_dim());
    for (int r : W.sub_positive_roots(J)) s = w_add(s, d.roots()[r]);
    return s;
}

struct LanglandsReport {
    bool pass = false;
    size_t xi_primal = 0, xi_dual = 0;
    std::string detail;
};

// Basis-count shadow of Langlands reciprocity: the census of (datum, spec)
// matches the census of (dual datum, spec) pairwise.
inline LanglandsReport langlands_dim_check(CartanPtr datum, const QfSpec& spec) {
    OrbitTable a(datum, spec);
    OrbitTable b(datum->dual(), spec);
    LanglandsReport rep;
    rep.xi_primal = a.xi_size();
    rep.xi_dual = b.xi_size();
    if (a.num_orbits() != b.num_orbits()) {
        rep.detail = "orbit counts differ";
        return rep;
    }
    for (size_t g = 0; g < a.num_orbits(); ++g)
        for (size_t n = 0; n < a.num_orbits(); ++n)
            if (a.double_reps(g, n).size() != b.double_reps(g, n).size()) {
                rep.detail = "double coset counts differ at pair (" + std::to_string(g) + "," +
                             std::to_string(n) + ")";
                return rep;
            }
    rep.pass = rep.xi_primal == rep.xi_dual;
    rep.detail = rep.pass ? "censuses agree" : "xi totals differ";
    return rep;
}

} // namespace qschur
