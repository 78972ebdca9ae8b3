#pragma once

#include "qschur/cartan.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <vector>

namespace qschur {

// Enumerated Weyl group with multiplication tables. Elements are indexed in
// canonical order: by length, then lexicographically by reduced word. The
// canonical key of w is w(rho); the action on the regular weight rho is
// faithful, so key equality is element equality.
class WeylGroup {
  public:
    using Id = uint32_t;
    static constexpr size_t kMaxSize = 500000;

    explicit WeylGroup(const CartanDatum& datum) : d_(datum) { build(); }

    const CartanDatum& datum() const { return d_; }
    size_t size() const { return len_.size(); }
    Id identity() const { return 0; }
    int length(Id x) const { return len_[x]; }
    const std::vector<uint8_t>& word(Id x) const { return words_[x]; }
    Weight key(Id x) const {
        Weight k(key_.begin() + x * dim_, key_.begin() + (x + 1) * dim_);
        return k;
    }
    Id inverse(Id x) const { return inv_[x]; }

    Id rmul(Id x, int i) const { return rmul_[i][x]; }
    Id lmul(int i, Id x) const { return lmul_[i][x]; }
    Id mul(Id x, Id y) const {
        for (uint8_t i : words_[y]) x = rmul(x, i);
        return x;
    }
    Id from_word(const std::vector<int>& w) const {
        Id x = identity();
        for (int i : w) x = rmul(x, i);
        return x;
    }

    bool right_descent(Id x, int i) const { return len_[rmul(x, i)] < len_[x]; }
    bool left_descent(Id x, int i) const { return len_[lmul(i, x)] < len_[x]; }

    // w(lambda), computed along the reduced word.
    Weight act(Id x, Weight v) const {
        const auto& w = words_[x];
        for (size_t t = w.size(); t-- > 0;) v = d_.reflect(v, w[t]);
        return v;
    }
    // Index of w(beta) in the datum's root list.
    int act_on_root(Id x, int ridx) const {
        const auto& w = words_[x];
        for (size_t t = w.size(); t-- > 0;) ridx = refl_perm_[w[t]][ridx];
        return ridx;
    }

    Id element_with_key(const Weight& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) throw Error("WeylGroup: key not found");
        return it->second;
    }

    // Subword-free Bruhat comparison by descent recursion.
    bool bruhat_leq(Id x, Id y) const {
        while (true) {
            if (x == y) return true;
            if (len_[x] >= len_[y]) return false;
            int i = -1;
            for (int g = 0; g < ngen_; ++g)
                if (right_descent(y, g)) { i = g; break; }
            y = rmul(y, i);
            if (right_descent(x, i)) x = rmul(x, i);
        }
    }

    // Elements of the parabolic subgroup W_J, sorted by id.
    std::vector<Id> subgroup(const std::vector<int>& J) const {
        std::vector<Id> out{identity()};
        std::unordered_map<Id, bool> seen{{identity(), true}};
        for (size_t h = 0; h < out.size(); ++h)
            for (int j : J) {
                Id y = rmul(out[h], j);
                if (!seen.count(y)) {
                    seen[y] = true;
                    out.push_back(y);
                }
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Longest element of W_J (unique).
    Id longest_in_subgroup(const std::vector<int>& J) const {
        return unique_longest(subgroup(J), "parabolic subgroup");
    }

    Id unique_longest(const std::vector<Id>& set, const char* what) const {
        if (set.empty()) throw Error(std::string("empty set in unique_longest: ") + what);
        Id best = set[0];
        bool tie = false;
        for (Id x : set) {
            if (len_[x] > len_[best]) { best = x; tie = false; }
            else if (x != best && len_[x] == len_[best]) tie = true;
        }
        if (tie) throw Error(std::string("longest element not unique in ") + what);
        return best;
    }

    // Minimal-length right coset representatives of W_J in W, via the
    // criterion w^{-1} Delta_J in Pi^+, sorted by (length, word).
    std::vector<Id> min_coset_reps(const std::vector<int>& J) const {
        std::vector<Id> out;
        for (Id x = 0; x < size(); ++x)
            if (is_min_rep(x, J)) out.push_back(x);
        return out;  // id order is (length, word) order
    }

    bool is_min_rep(Id x, const std::vector<int>& J) const {
        Id xi = inv_[x];
        for (int j : J) {
            int img = act_on_root(xi, simple_root_idx_[j]);
            if (!root_positive_[img]) return false;
        }
        return true;
    }

    // D_{JK} = D_J intersect D_K^{-1}.
    std::vector<Id> double_coset_reps(const std::vector<int>& J, const std::vector<int>& K) const {
        std::vector<Id> out;
        for (Id x = 0; x < size(); ++x)
            if (is_min_rep(x, J) && is_min_rep(inv_[x], K)) out.push_back(x);
        return out;
    }

    // All elements of W_J w W_K.
    std::vector<Id> double_coset_elements(const std::vector<int>& J, Id w,
                                          const std::vector<int>& K) const {
        std::vector<Id> out{w};
        std::unordered_map<Id, bool> seen{{w, true}};
        for (size_t h = 0; h < out.size(); ++h) {
            for (int j : J) {
                Id y = lmul(j, out[h]);
                if (!seen.count(y)) { seen[y] = true; out.push_back(y); }
            }
            for (int k : K) {
                Id y = rmul(out[h], k);
                if (!seen.count(y)) { seen[y] = true; out.push_back(y); }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // The unique minimal element of W_J x W_K.
    Id min_double_coset_rep(const std::vector<int>& J, Id x, const std::vector<int>& K) const {
        bool moved = true;
        while (moved) {
            moved = false;
            for (int j : J)
                if (left_descent(x, j)) { x = lmul(j, x); moved = true; }
            for (int k : K)
                if (right_descent(x, k)) { x = rmul(x, k); moved = true; }
        }
        return x;
    }

    int simple_root_index(int j) const { return simple_root_idx_[j]; }
    bool root_is_positive(int ridx) const { return root_positive_[ridx]; }

    // Positive roots of the subsystem generated by J (indices into roots()).
    std::vector<int> sub_positive_roots(const std::vector<int>& J) const {
        std::vector<int> out;
        std::vector<char> seen(d_.roots().size(), 0);
        std::vector<int> stack;
        for (int j : J) {
            int r = simple_root_idx_[j];
            if (!seen[r]) { seen[r] = 1; stack.push_back(r); }
        }
        while (!stack.empty()) {
            int r = stack.back();
            stack.pop_back();
            for (int j : J) {
                int g = refl_perm_[j][r];
                if (!seen[g]) { seen[g] = 1; stack.push_back(g); }
            }
        }
        for (size_t r = 0; r < seen.size(); ++r)
            if (seen[r] && root_positive_[r]) out.push_back(static_cast<int>(r));
        return out;
    }

  private:
    void build() {
        dim_ = d_.lattice_dim();
        ngen_ = d_.num_simple();
        const auto& roots = d_.roots();
        refl_perm_.assign(ngen_, std::vector<uint32_t>(roots.size()));
        root_positive_.resize(roots.size());
        for (size_t r = 0; r < roots.size(); ++r) root_positive_[r] = d_.root_positive(roots[r]);
        for (int i = 0; i < ngen_; ++i)
            for (size_t r = 0; r < roots.size(); ++r)
                refl_perm_[i][r] = d_.root_index(d_.reflect(roots[r], i));
        simple_root_idx_.resize(ngen_);
        for (int i = 0; i < ngen_; ++i) simple_root_idx_[i] = d_.root_index(d_.simple_root(i));

        // BFS over left multiplication; key(s_i w) = s_i(key(w)).
        std::vector<Weight> keys{d_.rho()};
        std::vector<std::vector<uint32_t>> simg(1, std::vector<uint32_t>(ngen_));
        for (int j = 0; j < ngen_; ++j) simg[0][j] = simple_root_idx_[j];
        index_.clear();
        index_[d_.rho()] = 0;
        std::vector<Id> parent{0};
        std::vector<uint8_t> pgen{0};
        len_.assign(1, 0);
        lmul_.assign(ngen_, std::vector<Id>(1, 0));
        std::vector<Id> frontier{0};
        while (!frontier.empty()) {
            std::vector<Id> next;
            for (Id x : frontier) {
                for (int i = 0; i < ngen_; ++i) {
                    Weight k = d_.reflect(keys[x], i);
                    auto it = index_.find(k);
                    Id y;
                    if (it == index_.end()) {
                        y = static_cast<Id>(keys.size());
                        if (keys.size() >= kMaxSize)
                            throw UsageError("Weyl group exceeds enumeration cap");
                        index_.emplace(k, y);
                        keys.push_back(std::move(k));
                        std::vector<uint32_t> si(ngen_);
                        for (int j = 0; j < ngen_; ++j) si[j] = refl_perm_[i][simg[x][j]];
                        simg.push_back(std::move(si));
                        parent.push_back(x);
                        pgen.push_back(static_cast<uint8_t>(i));
                        len_.push_back(len_[x] + 1);
                        for (int g = 0; g < ngen_; ++g) lmul_[g].push_back(0);
                        next.push_back(y);
                    } else {
                        y = it->second;
                    }
                    lmul_[i][x] = y;
                }
            }
            frontier = std::move(next);
        }
        size_t N = keys.size();

        // reduced words: word(x) = [pgen(x)] ++ word(parent(x))
        words_.assign(N, {});
        for (Id x = 0; x < N; ++x) {
            std::vector<uint8_t> w;
            for (Id c = x; c != 0; c = parent[c]) w.push_back(pgen[c]);
            words_[x] = std::move(w);
        }

        // canonical order: (length, word lex)
        std::vector<Id> order(N);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](Id a, Id b) {
            if (len_[a] != len_[b]) return len_[a] < len_[b];
            return words_[a] < words_[b];
        });
        std::vector<Id> rank(N);
        for (Id p = 0; p < N; ++p) rank[order[p]] = p;

        auto permute_ids = [&](std::vector<Id>& v) {
            std::vector<Id> nv(N);
            for (Id old = 0; old < N; ++old) nv[rank[old]] = rank[v[old]];
            v = std::move(nv);
        };
        for (int g = 0; g < ngen_; ++g) permute_ids(lmul_[g]);
        {
            std::vector<uint16_t> nl(N);
            std::vector<std::vector<uint8_t>> nw(N);
            std::vector<std::vector<uint32_t>> ns(N);
            key_.assign(N * dim_, 0);
            for (Id old = 0; old < N; ++old) {
                Id nu = rank[old];
                nl[nu] = len_[old];
                nw[nu] = std::move(words_[old]);
                ns[nu] = std::move(simg[old]);
                for (int t = 0; t < dim_; ++t) key_[nu * dim_ + t] = keys[old][t];
            }
            len_ = std::move(nl);
            words_ = std::move(nw);
            simple_img_ = std::move(ns);
            index_.clear();
            for (Id x = 0; x < N; ++x) index_[key(x)] = x;
        }

        // right multiplication: (w s_j)(rho) = w(rho) - <rho, alpha_j^vee> w(alpha_j)
        rmul_.assign(ngen_, std::vector<Id>(N));
        std::vector<long long> rho_pair(ngen_);
        for (int j = 0; j < ngen_; ++j) rho_pair[j] = d_.pairing(d_.rho(), j);
        for (Id x = 0; x < N; ++x) {
            for (int j = 0; j < ngen_; ++j) {
                const Weight& aj = d_.roots()[simple_img_[x][j]];
                Weight k = key(x);
                for (int t = 0; t < dim_; ++t) k[t] -= rho_pair[j] * aj[t];
                rmul_[j][x] = index_.at(k);
            }
        }

        inv_.assign(N, 0);
        for (Id x = 0; x < N; ++x) {
            Id y = identity();
            const auto& w = words_[x];
            for (size_t t = w.size(); t-- > 0;) y = rmul(y, w[t]);
            inv_[x] = y;
        }
    }

    const CartanDatum& d_;
    int dim_ = 0;
    int ngen_ = 0;
    std::vector<uint16_t> len_;
    std::vector<std::vector<uint8_t>> words_;
    std::vector<long long> key_;  // N x dim
    std::vector<std::vector<uint32_t>> simple_img_;
    std::vector<std::vector<Id>> lmul_, rmul_;
    std::vector<Id> inv_;
    std::vector<std::vector<uint32_t>> refl_perm_;
    std::vector<char> root_positive_;
    std::vector<int> simple_root_idx_;
    std::unordered_map<Weight, Id, WeightHash> index_;
};

inline const WeylGroup& CartanDatum::weyl() const {
    std::call_once(weyl_once_, [this] { weyl_ = std::make_unique<WeylGroup>(*this); });
    return *weyl_;
}

// Value-semantics handle: canonical-form group element with cached length,
// reduced word, and the faithful key w(rho).
struct WeylElement {
    const WeylGroup* group = nullptr;
    WeylGroup::Id id = 0;

    int length() const { return group->length(id); }
    std::vector<uint8_t> word() const { return group->word(id); }
    Weight key() const { return group->key(id); }
    WeylElement inverse() const { return {group, group->inverse(id)}; }
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
        return {a.group, a.group->mul(a.id, b.id)};
    }
    bool operator==(const WeylElement& o) const { return group == o.group && id == o.id; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
};

inline bool bruhat_leq(const WeylElement& x, const WeylElement& y) {
    if (x.group != y.group) throw UsageError("bruhat_leq: elements of different groups");
    return x.group->bruhat_leq(x.id, y.id);
}

} // namespace qschur
