#pragma once

#include "qschur/numeric.hpp"
#include "qschur/orbits.hpp"
#include "qschur/polynomial.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace qschur {

// ---- partitions -----------------------------------------------------------

using Partition = std::vector<int>;
using Composition = std::vector<int>;

inline int part_sum(const std::vector<int>& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline Partition transpose(const Partition& lam) {
    Partition t;
    for (int i = 0; !lam.empty() && i < lam[0]; ++i) {
        int c = 0;
        for (int x : lam)
            if (x > i) ++c;
        t.push_back(c);
    }
    return t;
}

// lam >= mu in dominance order (both partitions of the same size).
inline bool dominates(const Partition& lam, const Partition& mu) {
    int a = 0, b = 0;
    size_t n = std::max(lam.size(), mu.size());
    for (size_t i = 0; i < n; ++i) {
        a += i < lam.size() ? lam[i] : 0;
        b += i < mu.size() ? mu[i] : 0;
        if (a < b) return false;
    }
    return true;
}

// All partitions of d, sorted descending-lexicographically (a linear
// extension of dominance, largest first).
inline std::vector<Partition> partitions(int d) {
    if (d < 1 || d > 6) throw UsageError("partitions: supported range is 1 <= d <= 6");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

inline std::string part_to_string(const std::vector<int>& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

// n(lambda) = sum (i-1) lambda_i.
inline int partition_n(const Partition& lam) {
    int s = 0;
    for (size_t i = 0; i < lam.size(); ++i) s += static_cast<int>(i) * lam[i];
    return s;
}

// Complex dimension of the GL_d-orbit of Jordan type lambda.
inline int orbit_dim(const Partition& lam) {
    int d = part_sum(lam);
    int s = 0;
    for (int c : transpose(lam)) s += c * c;
    return d * d - s;
}

// ---- small finite fields ---------------------------------------------------

class GF {
  public:
    explicit GF(int q) : q_(q) {
        int p = 0, k = 0;
        std::vector<int> irred;
        switch (q) {
            case 2: case 3: case 5: case 7: case 11: case 13:
                p = q; k = 1; break;
            case 4:  p = 2; k = 2; irred = {1, 1, 1}; break;        // x^2+x+1
            case 8:  p = 2; k = 3; irred = {1, 1, 0, 1}; break;     // x^3+x+1
            case 9:  p = 3; k = 2; irred = {1, 0, 1}; break;        // x^2+1
            default: throw UsageError("GF: unsupported field size " + std::to_string(q));
        }
        p_ = p;
        add_.assign(q * q, 0);
        mul_.assign(q * q, 0);
        inv_.assign(q, 0);
        auto digits = [&](int v) {
            std::vector<int> dg(k);
            for (int i = 0; i < k; ++i) { dg[i] = v % p; v /= p; }
            return dg;
        };
        auto pack = [&](const std::vector<int>& dg) {
            int v = 0;
            for (int i = k - 1; i >= 0; --i) v = v * p + dg[i];
            return v;
        };
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                auto da = digits(a), db = digits(b);
                std::vector<int> s(k);
                for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
                add_[a * q + b] = static_cast<uint8_t>(pack(s));
                std::vector<int> prod(2 * k - 1, 0);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                for (int t = 2 * k - 2; t >= k; --t) {  // reduce by the monic irreducible
                    int c = prod[t];
                    if (c == 0) continue;
                    prod[t] = 0;
                    for (int i = 0; i < k; ++i)
                        prod[t - k + i] = ((prod[t - k + i] - c * irred[i]) % p + p * p) % p;
                }
                prod.resize(k);
                mul_[a * q + b] = static_cast<uint8_t>(pack(prod));
            }
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (mul(a, b) == 1) inv_[a] = static_cast<uint8_t>(b);
        neg_.assign(q, 0);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                if (add(a, b) == 0) neg_[a] = static_cast<uint8_t>(b);
    }

    int q() const { return q_; }
    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw Error("GF: inverse of zero");
        return inv_[a];
    }

  private:
    int q_, p_;
    std::vector<uint8_t> add_, mul_, inv_, neg_;
};

using FqVec = std::vector<uint8_t>;
using FqMat = std::vector<FqVec>;  // row major

inline FqVec mat_apply(const GF& F, const FqMat& m, const FqVec& v) {
    FqVec out(m.size(), 0);
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < v.size(); ++c)
            out[r] = F.add(out[r], F.mul(m[r][c], v[c]));
    return out;
}

// Row echelon reduction in place; returns the rank.
inline int row_reduce(const GF& F, FqMat& rows) {
    int rank = 0;
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        uint8_t f = F.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = F.mul(x, f);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
            uint8_t g = rows[r][col];
            for (size_t c2 = 0; c2 < ncols; ++c2)
                rows[r][c2] = F.sub(rows[r][c2], F.mul(g, rows[rank][c2]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

// Basis of the kernel of m (columns = domain coordinates).
inline FqMat kernel_basis(const GF& F, FqMat m, size_t dim) {
    FqMat rows = std::move(m);
    row_reduce(F, rows);
    std::vector<int> pivot_col(rows.size());
    std::vector<char> is_pivot(dim, 0);
    for (size_t r = 0; r < rows.size(); ++r) {
        size_t c = 0;
        while (c < dim && rows[r][c] == 0) ++c;
        pivot_col[r] = static_cast<int>(c);
        is_pivot[c] = 1;
    }
    FqMat basis;
    for (size_t fc = 0; fc < dim; ++fc) {
        if (is_pivot[fc]) continue;
        FqVec v(dim, 0);
        v[fc] = 1;
        for (size_t r = 0; r < rows.size(); ++r)
            v[pivot_col[r]] = F.neg(rows[r][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// All m-dimensional subspaces of F^D, as lists of basis rows in RREF.
inline std::vector<FqMat> enumerate_subspaces(const GF& F, int D, int m) {
    std::vector<FqMat> out;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    if (m > D) return out;
    std::vector<int> cols(m);
    // iterate pivot column combinations
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        // free positions: row r may have arbitrary entries in non-pivot
        // columns strictly right of its pivot
        std::vector<std::pair<int, int>> frees;
        for (int r = 0; r < m; ++r)
            for (int c = idx[r] + 1; c < D; ++c)
                if (std::find(idx.begin(), idx.end(), c) == idx.end())
                    frees.emplace_back(r, c);
        size_t total = 1;
        for (size_t i = 0; i < frees.size(); ++i) total *= F.q();
        for (size_t code = 0; code < total; ++code) {
            FqMat rows(m, FqVec(D, 0));
            for (int r = 0; r < m; ++r) rows[r][idx[r]] = 1;
            size_t c2 = code;
            for (auto& [r, c] : frees) {
                rows[r][c] = static_cast<uint8_t>(c2 % F.q());
                c2 /= F.q();
            }
            out.push_back(std::move(rows));
        }
        // next combination
        int k = m - 1;
        while (k >= 0 && idx[k] == D - m + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// ---- partial Springer fibers over F_q --------------------------------------

// Nilpotent matrix of Jordan type lambda acting on F^d.
inline FqMat jordan_nilpotent(const Partition& lam) {
    int d = part_sum(lam);
    FqMat x(d, FqVec(d, 0));
    int off = 0;
    for (int part : lam) {
        for (int t = 1; t < part; ++t) x[off + t - 1][off + t] = 1;
        off += part;
    }
    return x;
}

// Number of flags 0 = V_0 <= V_1 <= ... <= V_n = F_q^d with dim V_k/V_{k-1}
// = gamma_k and x V_k <= V_{k-1} (the nilradical condition), for x of Jordan
// type lambda.
inline long long count_flags(const Partition& lam, const Composition& gamma, int q) {
    int d = part_sum(lam);
    if (d != part_sum(gamma)) throw UsageError("count_flags: |gamma| != |lambda|");
    if (d > 4) throw UsageError("count_flags: d <= 4 only");
    GF F(q);
    FqMat x = jordan_nilpotent(lam);

    // recurse over quotients: at each step pick a gamma_k-dim subspace of
    // ker(xbar), then pass to the quotient by it
    auto rec = [&](auto&& self, const FqMat& xq, size_t step) -> long long {
        int D = static_cast<int>(xq.size());
        if (step == gamma.size()) return D == 0 ? 1 : 0;
        int m = gamma[step];
        if (m > D) return 0;
        if (m == 0) return self(self, xq, step + 1);
        FqMat ker = kernel_basis(F, xq, D);
        if (m > static_cast<int>(ker.size())) return 0;
        long long total = 0;
        for (const auto& sub : enumerate_subspaces(F, static_cast<int>(ker.size()), m)) {
            // subspace basis in ambient coordinates
            FqMat ub;
            for (const auto& coeffs : sub) {
                FqVec v(D, 0);
                for (size_t j = 0; j < ker.size(); ++j)
                    for (int c = 0; c < D; ++c)
                        v[c] = F.add(v[c], F.mul(coeffs[j], ker[j][c]));
                ub.push_back(std::move(v));
            }
            // complement coordinates: rows of ub reduced, then unit vectors
            FqMat red = ub;
            row_reduce(F, red);
            std::vector<char> piv(D, 0);
            for (const auto& r : red) {
                int c = 0;
                while (r[c] == 0) ++c;
                piv[c] = 1;
            }
            std::vector<int> comp;
            for (int c = 0; c < D; ++c)
                if (!piv[c]) comp.push_back(c);
            // projection of v onto complement coords after subtracting the
            // U-part determined by pivot coordinates
            auto project = [&](FqVec v) {
                for (size_t r = 0; r < red.size(); ++r) {
                    int pc = 0;
                    while (red[r][pc] == 0) ++pc;
                    uint8_t f = v[pc];
                    if (f == 0) continue;
                    for (int c = 0; c < D; ++c) v[c] = F.sub(v[c], F.mul(f, red[r][c]));
                }
                FqVec w(comp.size());
                for (size_t i = 0; i < comp.size(); ++i) w[i] = v[comp[i]];
                return w;
            };
            FqMat xnew(comp.size(), FqVec(comp.size(), 0));
            for (size_t j = 0; j < comp.size(); ++j) {
                FqVec basis(D, 0);
                basis[comp[j]] = 1;
                FqVec img = project(mat_apply(F, xq, basis));
                for (size_t i = 0; i < comp.size(); ++i) xnew[i][j] = img[i];
            }
            total += self(self, xnew, step + 1);
        }
        return total;
    };
    return rec(rec, x, 0);
}

// ---- point-count interpolation ---------------------------------------------

struct FqCountRecord {
    Partition lambda;
    Composition gamma;
    std::vector<std::pair<int, long long>> samples;
    std::vector<Rational> poly;  // fitted polynomial, poly[k] coeff of q^k
    bool empty_fiber = true;
    int dim = -1;                // fiber dimension (degree), -1 when empty
    long long components = 0;    // leading coefficient
};

inline const std::vector<int>& fq_sample_points() {
    static const std::vector<int> pts{2, 3, 4, 5, 7, 8, 9, 11, 13};
    return pts;
}

// Lagrange interpolation through the first `use` samples, exact over Q.
inline std::vector<Rational> interpolate(const std::vector<std::pair<int, long long>>& samples,
                                         size_t use) {
    Poly<Rational> acc;
    for (size_t i = 0; i < use; ++i) {
        Poly<Rational> term(Rational(samples[i].second));
        for (size_t j = 0; j < use; ++j) {
            if (j == i) continue;
            // multiply by (z - x_j)/(x_i - x_j)
            Poly<Rational> lin;
            lin.c = {Rational(-samples[j].first), Rational(1)};
            term = term * lin;
            Rational den = Rational(samples[i].first) - Rational(samples[j].first);
            for (auto& c : term.c) c /= den;
        }
        acc += term;
    }
    return acc.c;
}

inline Rational poly_eval(const std::vector<Rational>& p, const Rational& x) {
    Rational r = 0;
    for (size_t k = p.size(); k-- > 0;) r = r * x + p[k];
    return r;
}

// Dimension of the n-step flag variety for composition gamma of d.
inline int flag_dim(const Composition& gamma) {
    int d = part_sum(gamma);
    int s = 0;
    for (int g : gamma) s += g * (g - 1) / 2;
    return d * (d - 1) / 2 - s;
}

// Exact counts at enough prime powers to pin the polynomial, plus one spare
// for a consistency check; hard error if the counts are not polynomial.
inline FqCountRecord fiber_profile(const Partition& lam, const Composition& gamma) {
    FqCountRecord rec;
    rec.lambda = lam;
    rec.gamma = gamma;
    int dbound = flag_dim(gamma);
    size_t need = static_cast<size_t>(dbound) + 2;
    const auto& pts = fq_sample_points();
    if (need > pts.size()) throw Error("fiber_profile: not enough sample fields");
    for (size_t i = 0; i < need; ++i)
        rec.samples.emplace_back(pts[i], count_flags(lam, gamma, pts[i]));

    bool allzero = true;
    for (auto& [q, c] : rec.samples)
        if (c != 0) allzero = false;
    if (allzero) {
        rec.empty_fiber = true;
        return rec;
    }
    rec.poly = interpolate(rec.samples, static_cast<size_t>(dbound) + 1);
    while (!rec.poly.empty() && rec.poly.back() == 0) rec.poly.pop_back();
    for (const auto& [q, c] : rec.samples)
        if (poly_eval(rec.poly, q) != c)
            throw Error("fiber_profile: counts are not polynomial-consistent at q=" +
                        std::to_string(q));
    rec.empty_fiber = false;
    rec.dim = static_cast<int>(rec.poly.size()) - 1;
    Rational top = rec.poly.back();
    if (boost::multiprecision::denominator(top) != 1 || top <= 0)
        throw Error("fiber_profile: leading coefficient is not a positive integer");
    rec.components = static_cast<long long>(boost::multiprecision::numerator(top));
    return rec;
}

inline const FqCountRecord& fiber_profile_cached(const Partition& lam, const Composition& gamma) {
    static std::map<std::pair<Partition, Composition>, FqCountRecord> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(lam, gamma);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, fiber_profile(lam, gamma)).first;
    return it->second;
}

// Nonemptiness oracle: the fiber is nonempty iff lambda^t dominates the
// sorted gamma.
inline bool fiber_nonempty_dominance(const Partition& lam, const Composition& gamma) {
    Partition g = gamma;
    std::sort(g.begin(), g.end(), std::greater<int>());
    while (!g.empty() && g.back() == 0) g.pop_back();
    return dominates(transpose(lam), g);
}

// Relevance: fiber nonempty and 2 dim fiber + dim orbit = dim T*F_gamma.
inline bool is_relevant(const Partition& lam, const Composition& gamma) {
    FqCountRecord rec = fiber_profile(lam, gamma);
    if (rec.empty_fiber) return false;
    return 2 * rec.dim + orbit_dim(lam) == 2 * flag_dim(gamma);
}

// ---- Kostka numbers ----------------------------------------------------------

// Number of semistandard tableaux of shape lam and content gamma, by peeling
// horizontal strips from the largest entry down. lam/mu is a horizontal
// strip exactly when lam_{i+1} <= mu_i <= lam_i rowwise.
inline long long kostka(const Partition& lam, const Composition& gamma) {
    if (part_sum(lam) != part_sum(gamma)) return 0;
    auto rec = [&](auto&& self, const Partition& shape, size_t upto) -> long long {
        if (upto == 0) return shape.empty() ? 1 : 0;
        int strip = gamma[upto - 1];
        std::vector<int> mu(shape.size());
        auto go = [&](auto&& inner, size_t row, int removed) -> long long {
            if (row == shape.size()) {
                if (removed != strip) return 0;
                Partition m;
                for (int x : mu)
                    if (x > 0) m.push_back(x);
                return self(self, m, upto - 1);
            }
            long long s = 0;
            int lo = row + 1 < shape.size() ? shape[row + 1] : 0;
            for (int keep = shape[row]; keep >= lo; --keep) {
                if (removed + shape[row] - keep > strip) break;
                mu[row] = keep;
                s += inner(inner, row + 1, removed + shape[row] - keep);
            }
            return s;
        };
        return go(go, 0, 0);
    };
    Partition shape = lam;
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    return rec(rec, shape, gamma.size());
}

// ---- irreducible module dimensions ------------------------------------------

// Weak compositions of d into n parts, in the orbit-table label order.
inline std::vector<Composition> weak_compositions(int d, int n) {
    std::vector<Composition> out;
    Composition cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == n - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (n >= 1) rec(rec, 0, d);
    return out;
}

struct IrrepEntry {
    Partition orbit_type;     // Jordan type of the nilpotent orbit
    Partition label;          // transpose: the tableau-shape label of L
    long long dim = 0;        // sum of top-component counts over relevant gamma
    long long dim_kostka = 0; // independent oracle: sum of K_{label, gamma}
};

struct IrrepTable {
    int n = 0, d = 0;
    std::vector<IrrepEntry> entries;
    size_t schur_dim = 0;
    BigInt wedderburn_sum = 0;
};

// Dimensions of the irreducible S_f-modules for gl(d), box(n), from exact
// F_q point counts, with the Kostka sum as an independent oracle and the
// Wedderburn identity asserted against the census.
inline IrrepTable irreducible_dims(int n, int d) {
    if (d < 1 || d > 4) throw UsageError("irreducible_dims: d <= 4 only");
    if (n < 1) throw UsageError("irreducible_dims: n >= 1");
    IrrepTable out;
    out.n = n;
    out.d = d;
    auto comps = weak_compositions(d, n);
    for (const auto& mu : partitions(d)) {
        IrrepEntry e;
        e.orbit_type = mu;
        e.label = transpose(mu);
        for (const auto& gamma : comps) {
            const FqCountRecord& rec = fiber_profile_cached(mu, gamma);
            long long k = kostka(e.label, gamma);
            if (rec.empty_fiber != (k == 0))
                throw Error("irreducible_dims: emptiness and Kostka disagree at " +
                            part_to_string(mu) + " / " + part_to_string(gamma));
            if (rec.empty_fiber) continue;
            if (rec.components != k)
                throw Error("irreducible_dims: component count != Kostka number at " +
                            part_to_string(mu) + " / " + part_to_string(gamma));
            if (2 * rec.dim + orbit_dim(mu) == 2 * flag_dim(gamma)) e.dim += rec.components;
            e.dim_kostka += k;
        }
        if (e.dim != e.dim_kostka)
            throw Error("irreducible_dims: oracle mismatch at " + part_to_string(mu));
        if (e.dim > 0) out.entries.push_back(std::move(e));
    }
    OrbitTable t(CartanDatum::make(CartanKind::GL, d), QfSpec::box(n));
    out.schur_dim = t.xi_size();
    for (const auto& e : out.entries) out.wedderburn_sum += BigInt(e.dim) * BigInt(e.dim);
    if (out.wedderburn_sum != BigInt(static_cast<long long>(out.schur_dim)))
        throw Error("irreducible_dims: Wedderburn identity failed");
    return out;
}

} // namespace qschur
