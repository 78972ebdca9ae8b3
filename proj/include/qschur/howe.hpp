#pragma once

#include "qschur/affine_schur.hpp"
#include "qschur/schur.hpp"

#include <set>

namespace qschur {

struct HoweVerdict {
    bool hypothesis = false;  // minimal parabolic sets of the two sides coincide
    size_t dim_bimodule = 0;
    size_t dim_commutant_left = 0;   // commutant of the left S_f-action
    size_t dim_commutant_right = 0;  // commutant of the right S_g-action
    size_t dim_image_left = 0;
    size_t dim_image_right = 0;
    bool holds = false;
    std::string witness;
    Rational q0 = 1;
};

// Minimal elements of {J_gamma} under inclusion.
inline std::set<std::vector<int>> minimal_parabolics(const OrbitTable& t) {
    std::set<std::vector<int>> all;
    for (const auto& o : t.orbits()) all.insert(o.J);
    std::set<std::vector<int>> mins;
    for (const auto& a : all) {
        bool minimal = true;
        for (const auto& b : all) {
            if (a == b) continue;
            if (std::includes(a.begin(), a.end(), b.begin(), b.end())) minimal = false;
        }
        if (minimal) mins.insert(a);
    }
    return mins;
}

namespace detail {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// kernel dimension and (optionally) row space rank of a rational matrix
inline size_t rat_rank(RatMat rows) {
    size_t rank = 0, ncols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Solve A c = b exactly; returns empty optional when inconsistent.
inline std::optional<RatVec> rat_solve(RatMat A, RatVec b) {
    size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<int> pivcol;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && A[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[rank], A[piv]);
        std::swap(b[rank], b[piv]);
        Rational d = A[rank][col];
        for (auto& x : A[rank]) x /= d;
        b[rank] /= d;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            Rational f = A[r][col];
            for (size_t c = 0; c < cols; ++c) A[r][c] -= f * A[rank][c];
            b[r] -= f * b[rank];
        }
        pivcol.push_back(static_cast<int>(col));
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r)
        if (b[r] != 0) return std::nullopt;
    RatVec c(cols, 0);
    for (size_t r = 0; r < rank; ++r) c[pivcol[r]] = b[r];
    return c;
}

} // namespace detail

// Finite shadow of the (S_f, S_g)-bimodule: T = direct sum of the subspaces
// x_gamma H(q0) x_mu of the finite Hecke algebra, with the left S_f- and
// right S_g-actions realized through embed / multiply.
class HoweBimodule {
  public:
    HoweBimodule(const OrbitTable& tf, const OrbitTable& tg, const Rational& q0)
        : tf_(tf), tg_(tg), C_(rational_q(q0)), q0_(q0) {
        if (tf.datum().name() != tg.datum().name())
            throw UsageError("howe: the two orbit sets must share one datum");
        const WeylGroup& W = tf.datum().weyl();
        nW_ = W.size();

        // block bases x_gamma H_w x_mu, w in D_{gamma mu}
        for (uint32_t g = 0; g < tf_.num_orbits(); ++g) {
            auto xgf = x_gamma(W, tf_.orbit(g).J, C_);
            for (uint32_t m = 0; m < tg_.num_orbits(); ++m) {
                auto xgm = x_gamma(W, tg_.orbit(m).J, C_);
                detail::RatMat block;
                std::vector<WeylGroup::Id> ws;
                for (auto w : W.double_coset_reps(tf_.orbit(g).J, tg_.orbit(m).J)) {
                    HeckeTerms<Rational> pre = xgf;
                    for (uint8_t i : W.word(w)) pre = hecke_mul_gen(W, pre, i, C_);
                    auto v = hecke_mul(W, pre, xgm, C_);
                    block.push_back(to_vec(v));
                    ws.push_back(w);
                }
                if (detail::rat_rank(block) != block.size())
                    throw UsageError("howe: symmetrizer degenerates at this q0");
                for (size_t i = 0; i < block.size(); ++i) {
                    basis_.push_back({g, m, ws[i], block[i]});
                    blocks_[{g, m}].push_back(basis_.size() - 1);
                }
            }
        }
    }

    size_t dim() const { return basis_.size(); }
    const OrbitTable& left_table() const { return tf_; }
    const OrbitTable& right_table() const { return tg_; }

    // matrix of the left action of phi_xi (xi over tf)
    detail::RatMat left_action(const Xi& xi) const {
        const WeylGroup& W = tf_.datum().weyl();
        auto E = rat_embed(tf_, xi);
        detail::RatMat M(dim(), detail::RatVec(dim(), 0));
        for (size_t j = 0; j < basis_.size(); ++j) {
            const auto& b = basis_[j];
            if (b.gamma != xi.nu) continue;
            HeckeTerms<Rational> img = E;
            for (uint8_t i : W.word(b.w)) img = hecke_mul_gen(W, img, i, C_);
            img = hecke_mul(W, img, x_gamma(W, tg_.orbit(b.mu).J, C_), C_);
            set_column(M, j, express(xi.gamma, b.mu, to_vec(img)));
        }
        return M;
    }

    // matrix of the right action of phi_eta (eta over tg)
    detail::RatMat right_action(const Xi& eta) const {
        const WeylGroup& W = tf_.datum().weyl();
        auto Erev = hecke_rev(W, rat_embed(tg_, eta));
        detail::RatMat M(dim(), detail::RatVec(dim(), 0));
        for (size_t j = 0; j < basis_.size(); ++j) {
            const auto& b = basis_[j];
            if (b.mu != eta.nu) continue;
            HeckeTerms<Rational> pre = x_gamma(W, tf_.orbit(b.gamma).J, C_);
            for (uint8_t i : W.word(b.w)) pre = hecke_mul_gen(W, pre, i, C_);
            auto img = hecke_mul(W, pre, Erev, C_);
            set_column(M, j, express(b.gamma, eta.gamma, to_vec(img)));
        }
        return M;
    }

    std::vector<Xi> left_basis() const { return xis(tf_); }
    std::vector<Xi> right_basis() const { return xis(tg_); }

  private:
    struct BasisVec {
        uint32_t gamma, mu;
        WeylGroup::Id w;
        detail::RatVec vec;
    };

    static std::vector<Xi> xis(const OrbitTable& t) {
        std::vector<Xi> out;
        for (uint32_t g = 0; g < t.num_orbits(); ++g)
            for (uint32_t n = 0; n < t.num_orbits(); ++n)
                for (auto w : t.double_reps(g, n)) out.push_back({g, w, n});
        return out;
    }

    HeckeTerms<Rational> rat_embed(const OrbitTable& t, const Xi& xi) const {
        return fock_embed(t, phi_image(t, xi, C_), C_);
    }

    detail::RatVec to_vec(const HeckeTerms<Rational>& h) const {
        detail::RatVec v(nW_, 0);
        for (const auto& [w, c] : h) v[w] = c;
        return v;
    }

    static void set_column(detail::RatMat& M, size_t j, const detail::RatVec& coords) {
        for (size_t i = 0; i < coords.size(); ++i)
            if (coords[i] != 0) M[i][j] = coords[i];
    }

    // coordinates of `target` in the global basis, supported on block (g, m)
    detail::RatVec express(uint32_t g, uint32_t m, const detail::RatVec& target) const {
        detail::RatVec coords(dim(), 0);
        auto it = blocks_.find({g, m});
        bool zero = std::all_of(target.begin(), target.end(),
                                [](const Rational& x) { return x == 0; });
        if (zero) return coords;
        if (it == blocks_.end()) throw Error("howe: image lands outside the bimodule");
        const auto& idx = it->second;
        detail::RatMat A(nW_, detail::RatVec(idx.size(), 0));
        for (size_t c = 0; c < idx.size(); ++c)
            for (size_t r = 0; r < nW_; ++r) A[r][c] = basis_[idx[c]].vec[r];
        auto sol = detail::rat_solve(std::move(A), target);
        if (!sol) throw Error("howe: image not in the block span");
        for (size_t c = 0; c < idx.size(); ++c) coords[idx[c]] = (*sol)[c];
        return coords;
    }

    const OrbitTable& tf_;
    const OrbitTable& tg_;
    QConstants<Rational> C_;
    Rational q0_;
    size_t nW_ = 0;
    std::vector<BasisVec> basis_;
    std::map<std::pair<uint32_t, uint32_t>, std::vector<size_t>> blocks_;
};

namespace detail {

inline RatVec flatten(const RatMat& m) {
    RatVec v;
    for (const auto& r : m) v.insert(v.end(), r.begin(), r.end());
    return v;
}

inline RatMat commutant_kernel_basis(const std::vector<RatMat>& mats, size_t N) {
    // unknowns X[a][b]; equations sum_k X[i][k] M[k][j] - M[i][k] X[k][j] = 0.
    // The rows are very sparse (about 2N of N^2 entries), so reduce them
    // incrementally against a sparse pivot table.
    using SparseRow = std::map<size_t, Rational>;
    size_t cols = N * N;
    std::map<size_t, SparseRow> pivots;  // leading column -> normalized row
    auto insert_row = [&](SparseRow row) {
        while (!row.empty()) {
            size_t lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Rational d = row.begin()->second;
                for (auto& [c, v] : row) v /= d;
                pivots.emplace(lead, std::move(row));
                return;
            }
            Rational f = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto jt = row.find(c);
                if (jt == row.end()) {
                    row.emplace(c, -f * v);
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) row.erase(jt);
                }
            }
        }
    };
    for (const auto& M : mats)
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j) {
                SparseRow row;
                for (size_t k = 0; k < N; ++k) {
                    if (M[k][j] != 0) row[i * N + k] += M[k][j];
                    if (M[i][k] != 0) row[k * N + j] -= M[i][k];
                }
                for (auto it = row.begin(); it != row.end();)
                    it = it->second == 0 ? row.erase(it) : std::next(it);
                insert_row(std::move(row));
            }
    // back-eliminate to reach RREF
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        for (auto jt = pivots.begin(); jt->first != it->first; ++jt) {
            auto ft = jt->second.find(it->first);
            if (ft == jt->second.end()) continue;
            Rational f = ft->second;
            for (const auto& [c, v] : it->second) {
                auto kt = jt->second.find(c);
                if (kt == jt->second.end()) {
                    jt->second.emplace(c, -f * v);
                } else {
                    kt->second -= f * v;
                    if (kt->second == 0) jt->second.erase(kt);
                }
            }
        }
    }
    std::vector<char> is_piv(cols, 0);
    for (const auto& [c, r] : pivots) is_piv[c] = 1;
    RatMat basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_piv[fc]) continue;
        RatVec v(cols, 0);
        v[fc] = 1;
        for (const auto& [pc, row] : pivots) {
            auto it = row.find(fc);
            if (it != row.end()) v[pc] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline size_t span_rank(const std::vector<RatVec>& vecs) {
    return rat_rank(RatMat(vecs.begin(), vecs.end()));
}

} // namespace detail

// The double-centralizer verdict on the finite shadow at an exact rational
// q0, both sides computed by exact linear algebra.
inline HoweVerdict howe_check_finite(const OrbitTable& tf, const OrbitTable& tg,
                                     const Rational& q0) {
    HoweVerdict v;
    v.q0 = q0;
    v.hypothesis = minimal_parabolics(tf) == minimal_parabolics(tg);
    HoweBimodule T(tf, tg, q0);
    size_t N = T.dim();
    v.dim_bimodule = N;

    std::vector<detail::RatMat> L, R;
    for (const auto& xi : T.left_basis()) L.push_back(T.left_action(xi));
    for (const auto& eta : T.right_basis()) R.push_back(T.right_action(eta));

    // bimodule axiom: the actions commute
    for (const auto& a : L)
        for (const auto& b : R) {
            detail::RatMat ab(N, detail::RatVec(N, 0)), ba(N, detail::RatVec(N, 0));
            for (size_t i = 0; i < N; ++i)
                for (size_t k = 0; k < N; ++k) {
                    if (a[i][k] != 0)
                        for (size_t j = 0; j < N; ++j) ab[i][j] += a[i][k] * b[k][j];
                    if (b[i][k] != 0)
                        for (size_t j = 0; j < N; ++j) ba[i][j] += b[i][k] * a[k][j];
                }
            if (!(ab == ba)) throw Error("howe: left and right actions do not commute");
        }

    std::vector<detail::RatVec> Lv, Rv;
    for (const auto& m : L) Lv.push_back(detail::flatten(m));
    for (const auto& m : R) Rv.push_back(detail::flatten(m));
    v.dim_image_left = detail::span_rank(Lv);
    v.dim_image_right = detail::span_rank(Rv);

    auto commR = detail::commutant_kernel_basis(R, N);
    auto commL = detail::commutant_kernel_basis(L, N);
    v.dim_commutant_right = commR.size();
    v.dim_commutant_left = commL.size();

    // equality of image and commutant as subspaces: both ranks equal the
    // rank of the union (the kernel basis is independent by construction)
    auto subspace_eq = [&](const std::vector<detail::RatVec>& img, const detail::RatMat& comm) {
        std::vector<detail::RatVec> all = img;
        all.insert(all.end(), comm.begin(), comm.end());
        size_t ri = detail::span_rank(img);
        size_t rc = comm.size();
        size_t ru = detail::span_rank(all);
        return ri == rc && ru == rc;
    };
    bool left_ok = subspace_eq(Lv, commR);
    bool right_ok = subspace_eq(Rv, commL);
    v.holds = left_ok && right_ok;
    if (!v.holds) {
        v.witness = left_ok ? "right side: image of S_g is a proper subspace of End_{S_f}(T)"
                            : "left side: image of S_f is a proper subspace of End_{S_g}(T)";
    }
    return v;
}

// The SL2 remark configuration: the bimodule keeps its lattice-ring scalars
// (rank 2 over R(G~)); module linear algebra is over Q[z] at the given q0.
inline HoweVerdict howe_check_sl2_remark(const Rational& q0) {
    HoweVerdict v;
    v.q0 = q0;
    v.hypothesis = false;  // {} vs {s_1}: minimal parabolic sets differ
    v.dim_bimodule = 2;    // rank of R(T~) over R(G~)

    Sl2Remark r = sl2_remark_matrices();
    using PQ = Poly<Rational>;
    auto spec = [&](const Poly<LaurentScalar>& p) {
        PQ out;
        for (const auto& c : p.c) out.c.push_back(c.evaluate(q0));
        out.trim();
        return out;
    };
    std::array<std::array<std::array<PQ, 2>, 2>, 4> G;
    for (int g = 0; g < 4; ++g)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) G[g][i][j] = spec(r.zmats[g][i][j]);

    // coordinate matrix of the four generators in the basis E11,E12,E21,E22
    std::array<std::array<PQ, 4>, 4> Phi;
    for (int g = 0; g < 4; ++g) {
        Phi[0][g] = G[g][0][0];
        Phi[1][g] = G[g][0][1];
        Phi[2][g] = G[g][1][0];
        Phi[3][g] = G[g][1][1];
    }
    auto det4 = [&](const std::array<std::array<PQ, 4>, 4>& m) {
        // Laplace expansion over the 24 permutations
        static const int perms[24][4] = {
            {0,1,2,3},{0,1,3,2},{0,2,1,3},{0,2,3,1},{0,3,1,2},{0,3,2,1},
            {1,0,2,3},{1,0,3,2},{1,2,0,3},{1,2,3,0},{1,3,0,2},{1,3,2,0},
            {2,0,1,3},{2,0,3,1},{2,1,0,3},{2,1,3,0},{2,3,0,1},{2,3,1,0},
            {3,0,1,2},{3,0,2,1},{3,1,0,2},{3,1,2,0},{3,2,0,1},{3,2,1,0}};
        PQ det;
        for (const auto& p : perms) {
            int inv = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (p[i] > p[j]) ++inv;
            PQ term(Rational(inv % 2 ? -1 : 1));
            for (int i = 0; i < 4; ++i) term = term * m[i][p[i]];
            det += term;
        }
        return det;
    };
    PQ det = det4(Phi);
    if (det.is_zero()) throw Error("howe sl2: generators are dependent (internal)");
    v.dim_image_left = 4;  // free of rank 4, but a proper submodule unless det is a unit

    // membership of E12 in the R(G~)-span by Cramer's rule
    bool e12_in_span = true;
    for (int i = 0; i < 4 && e12_in_span; ++i) {
        auto m = Phi;
        for (int rdx = 0; rdx < 4; ++rdx) m[rdx][i] = PQ(Rational(rdx == 1 ? 1 : 0));
        auto [quot, rem] = poly_divmod(det4(m), det);
        (void)quot;
        if (!rem.is_zero()) e12_in_span = false;
    }

    // the right action is by R(G~)-scalars
    v.dim_image_right = 1;
    v.dim_commutant_right = 4;  // all of Mat_2(R(G~))

    // commutant of the left action by a degree-bounded ansatz
    auto commutant_rank = [&](int D) {
        // unknowns: X[i][j] polynomial of degree <= D: 4 (D+1) rationals
        // equations: coefficients of [X, G_g] = 0
        size_t ncols = 4 * (D + 1);
        detail::RatMat eqs;
        int maxdeg = 0;
        for (int g = 0; g < 4; ++g)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) maxdeg = std::max(maxdeg, G[g][i][j].degree());
        int outdeg = D + maxdeg;
        for (int g = 0; g < 4; ++g)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k <= outdeg; ++k) {
                        detail::RatVec row(ncols, 0);
                        // coefficient of z^k in sum_t X[i][t] G[g][t][j] - G[g][i][t] X[t][j]
                        for (int t = 0; t < 2; ++t)
                            for (int dX = 0; dX <= D; ++dX) {
                                int need = k - dX;
                                Rational cg = need >= 0 ? G[g][t][j].get(need) : Rational(0);
                                if (cg != 0) row[(i * 2 + t) * (D + 1) + dX] += cg;
                                Rational cg2 = need >= 0 ? G[g][i][t].get(need) : Rational(0);
                                if (cg2 != 0) row[(t * 2 + j) * (D + 1) + dX] -= cg2;
                            }
                        bool nz = false;
                        for (const auto& x : row)
                            if (x != 0) nz = true;
                        if (nz) eqs.push_back(std::move(row));
                    }
        size_t rank = detail::rat_rank(std::move(eqs));
        return ncols - rank;  // kernel dimension among degree-<=D matrices
    };
    size_t k3 = commutant_rank(3), k4 = commutant_rank(4);
    v.dim_commutant_left = k4 - k3;  // rank of the commutant as an R(G~)-module

    v.holds = e12_in_span;
    if (!v.holds)
        v.witness =
            "E12 is not in the R(G~)-span of the four generator matrices; "
            "det of the coordinate matrix is z^2 - (q0 + 1/q0)^2, a nonunit";
    return v;
}

// Dispatch: the SL2 remark configuration keeps its lattice scalars; every
// other pair runs through the finite shadow at q0.
inline HoweVerdict double_centralizer_check(const OrbitTable& tf, const OrbitTable& tg,
                                            const Rational& q0) {
    bool sl2 = tf.datum().name() == "A(1)" && tg.datum().name() == "A(1)" &&
               tf.num_orbits() == 1 && tg.num_orbits() == 1 && tf.orbit(0).J.empty() &&
               tg.orbit(0).J.size() == 1;
    if (sl2) return howe_check_sl2_remark(q0);
    return howe_check_finite(tf, tg, q0);
}

} // namespace qschur
