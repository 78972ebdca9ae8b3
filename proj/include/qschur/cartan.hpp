#pragma once

#include "qschur/numeric.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

namespace qschur {

// Weight in the datum's coordinate basis. When the datum stores doubled
// coordinates, entries are twice the true ones.
using Weight = std::vector<long long>;

inline Weight w_add(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Weight w_sub(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Weight w_scale(long long c, const Weight& a) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}
inline Weight w_zero(size_t n) { return Weight(n, 0); }
inline bool w_is_zero(const Weight& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

inline std::string w_to_string(const Weight& a, int denom = 1) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        if (denom == 1 || a[i] % denom == 0)
            os << a[i] / denom;
        else
            os << a[i] << "/" << denom;
    }
    os << ")";
    return os.str();
}

struct WeightHash {
    size_t operator()(const Weight& w) const {
        size_t h = w.size();
        for (long long v : w) h ^= std::hash<long long>()(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

enum class CartanKind { A, B, C, D, E, F, G, GL, SO, SP };

inline std::string kind_name(CartanKind k) {
    switch (k) {
        case CartanKind::A: return "A";
        case CartanKind::B: return "B";
        case CartanKind::C: return "C";
        case CartanKind::D: return "D";
        case CartanKind::E: return "E";
        case CartanKind::F: return "F";
        case CartanKind::G: return "G";
        case CartanKind::GL: return "gl";
        case CartanKind::SO: return "so";
        case CartanKind::SP: return "sp";
    }
    return "?";
}

class WeylGroup;

// Root/weight lattice data with the simple-reflection action. Abstract finite
// types use fundamental-weight coordinates; gl/so/sp use epsilon coordinates
// (doubled for so/sp so the iota half-integer lattices stay integral).
class CartanDatum : public std::enable_shared_from_this<CartanDatum> {
  public:
    static std::shared_ptr<const CartanDatum> make(CartanKind kind, int rank);

    CartanKind kind() const { return kind_; }
    int rank_param() const { return rank_param_; }
    // Number of simple reflections.
    int num_simple() const { return static_cast<int>(simple_roots_.size()); }
    // Coordinate length of weights.
    int lattice_dim() const { return dim_; }
    // 2 when coordinates are stored doubled, else 1.
    int coord_denom() const { return doubled_ ? 2 : 1; }
    bool epsilon_mode() const {
        return kind_ == CartanKind::GL || kind_ == CartanKind::SO || kind_ == CartanKind::SP;
    }
    std::string name() const {
        std::ostringstream os;
        os << kind_name(kind_) << "(" << rank_param_ << ")";
        return os.str();
    }

    const Weight& simple_root(int i) const { return simple_roots_[i]; }
    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    long long cartan_entry(int i, int j) const { return cartan_[i][j]; }

    // <lambda, alpha_i^vee>, exact; rejects weights off the lattice.
    long long pairing(const Weight& lam, int i) const {
        long long dot = 0;
        for (int k = 0; k < dim_; ++k) dot += cofun_[i][k] * lam[k];
        if (dot % codiv_[i] != 0)
            throw UsageError("weight has non-integral coroot pairing (not in the lattice)");
        return dot / codiv_[i];
    }

    Weight reflect(const Weight& lam, int i) const {
        return w_sub(lam, w_scale(pairing(lam, i), simple_roots_[i]));
    }

    bool is_antidominant(const Weight& lam) const {
        for (int i = 0; i < num_simple(); ++i)
            if (pairing(lam, i) > 0) return false;
        return true;
    }
    bool is_dominant(const Weight& lam) const {
        for (int i = 0; i < num_simple(); ++i)
            if (pairing(lam, i) < 0) return false;
        return true;
    }

    // A fixed strictly dominant weight; its W-orbit is regular.
    const Weight& rho() const { return rho_; }

    // Strictly positive on every simple root; a root beta is positive iff
    // dot(posf, beta) > 0.
    long long height_form(const Weight& v) const {
        long long s = 0;
        for (int k = 0; k < dim_; ++k) s += posf_[k] * v[k];
        return s;
    }
    bool root_positive(const Weight& beta) const { return height_form(beta) > 0; }

    // Full root system, positive roots first, each sorted by (height, lex).
    const std::vector<Weight>& roots() const { return roots_; }
    int num_positive_roots() const { return static_cast<int>(roots_.size() / 2); }
    int root_index(const Weight& beta) const {
        auto it = root_pos_.find(key_of(beta));
        if (it == root_pos_.end()) throw Error("not a root");
        return it->second;
    }

    std::shared_ptr<const CartanDatum> dual() const;

    // Weyl group tables, built on first use (capped; see weyl.hpp).
    const WeylGroup& weyl() const;

    ~CartanDatum();

  private:
    CartanDatum() = default;
    void finish_setup();
    void enumerate_roots();
    void compute_height_form();
    void validate();
    std::string key_of(const Weight& w) const {
        std::ostringstream os;
        for (auto v : w) os << v << ",";
        return os.str();
    }

    CartanKind kind_ = CartanKind::A;
    int rank_param_ = 0;
    int dim_ = 0;
    bool doubled_ = false;
    std::vector<Weight> simple_roots_;
    std::vector<Weight> cofun_;            // coroot pairing functionals
    std::vector<long long> codiv_;         // pairing = dot(cofun, lam) / codiv
    std::vector<std::vector<long long>> cartan_;
    Weight rho_;
    Weight posf_;
    std::vector<Weight> roots_;
    std::map<std::string, int> root_pos_;

    mutable std::once_flag weyl_once_;
    mutable std::unique_ptr<WeylGroup> weyl_;
};

using CartanPtr = std::shared_ptr<const CartanDatum>;

namespace detail {

inline std::vector<std::vector<long long>> abstract_cartan_matrix(CartanKind kind, int n) {
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    };
    switch (kind) {
        case CartanKind::A:
            chain(n);
            break;
        case CartanKind::B:
            // last simple root short: <alpha_{n-2}, alpha_{n-1}^vee> = -2
            chain(n);
            a[n - 1][n - 2] = -2;
            break;
        case CartanKind::C:
            chain(n);
            a[n - 2][n - 1] = -2;
            break;
        case CartanKind::D:
            chain(n - 1);
            a[n - 1][n - 3] = a[n - 3][n - 1] = -1;
            break;
        case CartanKind::E: {
            // Bourbaki: chain 0-2-3-4-..., node 1 attached to node 3.
            for (int i = 2; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
            a[0][2] = a[2][0] = -1;
            a[1][3] = a[3][1] = -1;
            break;
        }
        case CartanKind::F:
            chain(4);
            a[2][1] = -2;
            a[1][2] = -1;
            break;
        case CartanKind::G:
            a[0][1] = -1;
            a[1][0] = -3;
            break;
        default:
            throw UsageError("abstract_cartan_matrix: not an abstract kind");
    }
    return a;
}

// Integer adjugate via cofactor expansion; sizes are at most 8.
inline BigInt int_det(const std::vector<std::vector<BigInt>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt det = 0;
    for (int j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        BigInt term = m[0][j] * int_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace detail

inline void CartanDatum::validate() {
    int n = num_simple();
    for (int i = 0; i < n; ++i) {
        if (cartan_[i][i] != 2) throw Error("Cartan matrix: diagonal entry != 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan_[i][j] > 0) throw Error("Cartan matrix: positive off-diagonal");
            if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                throw Error("Cartan matrix: zero pattern not symmetric");
        }
    }
    // Finite type: the symmetrization is positive definite. Find d_i > 0 with
    // d_i a_ij = d_j a_ji by propagation along the Dynkin graph, then check
    // leading principal minors of (d_i a_ij).
    std::vector<Rational> d(n, 0);
    for (int start = 0; start < n; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (j == i || cartan_[i][j] == 0) continue;
                Rational want = d[i] * Rational(cartan_[i][j]) / Rational(cartan_[j][i]);
                if (d[j] == 0) {
                    d[j] = want;
                    stack.push_back(j);
                } else if (d[j] != want) {
                    throw Error("Cartan matrix not symmetrizable");
                }
            }
        }
    }
    BigInt lcm = 1;
    for (const auto& x : d) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
    std::vector<BigInt> di(n);
    for (int i = 0; i < n; ++i) di[i] = boost::multiprecision::numerator(d[i] * Rational(lcm));
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = di[i] * cartan_[i][j];
        if (detail::int_det(m) <= 0) throw Error("Cartan matrix not of finite type");
    }
}

inline void CartanDatum::enumerate_roots() {
    // Roots = closure of the simple roots under simple reflections.
    std::map<std::string, Weight> seen;
    std::vector<Weight> frontier = simple_roots_;
    for (const auto& r : frontier) seen[key_of(r)] = r;
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& beta : frontier)
            for (int i = 0; i < num_simple(); ++i) {
                Weight g = reflect(beta, i);
                auto k = key_of(g);
                if (!seen.count(k)) {
                    seen[k] = g;
                    next.push_back(g);
                }
            }
        frontier = std::move(next);
        if (seen.size() > 4096) throw Error("root system too large");
    }
    roots_.clear();
    for (auto& [k, r] : seen) roots_.push_back(r);
    std::sort(roots_.begin(), roots_.end(), [&](const Weight& x, const Weight& y) {
        bool px = root_positive(x), py = root_positive(y);
        if (px != py) return px > py;
        long long hx = height_form(x), hy = height_form(y);
        if (hx != hy) return px ? hx < hy : hx > hy;
        return x < y;
    });
    if (roots_.size() % 2 != 0) throw Error("root count not even");
    for (size_t i = 0; i < roots_.size(); ++i) root_pos_[key_of(roots_[i])] = static_cast<int>(i);
    // negatives mirror positives
    for (int i = 0; i < num_positive_roots(); ++i)
        if (!root_pos_.count(key_of(w_scale(-1, roots_[i]))))
            throw Error("root system not symmetric");
}

inline void CartanDatum::compute_height_form() {
    if (epsilon_mode()) {
        posf_.assign(dim_, 0);
        if (kind_ == CartanKind::GL) {
            for (int k = 0; k < dim_; ++k) posf_[k] = dim_ - k;  // strictly decreasing
        } else {
            for (int k = 0; k < dim_; ++k) posf_[k] = k + 1;  // strictly increasing, positive
        }
        return;
    }
    // Fundamental-weight basis: need c with (A^T c)_j > 0. Take c = adj(A^T) 1,
    // so A^T c = det(A) 1 with det(A) > 0 in finite type.
    int n = num_simple();
    std::vector<std::vector<BigInt>> at(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at[i][j] = cartan_[j][i];
    posf_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        // c_i = sum_j cofactor_{j,i}(A^T) = det of A^T with column i replaced by ones
        std::vector<std::vector<BigInt>> m = at;
        for (int r = 0; r < n; ++r) m[r][i] = 1;
        BigInt v = detail::int_det(m);
        posf_[i] = static_cast<long long>(v);
    }
    for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int k = 0; k < n; ++k) s += posf_[k] * simple_roots_[j][k];
        if (s <= 0) throw Error("height form failed");
    }
}

inline std::shared_ptr<const CartanDatum> CartanDatum::make(CartanKind kind, int rank) {
    auto d = std::shared_ptr<CartanDatum>(new CartanDatum());
    d->kind_ = kind;
    d->rank_param_ = rank;
    switch (kind) {
        case CartanKind::A:
        case CartanKind::B:
        case CartanKind::C:
        case CartanKind::D:
        case CartanKind::E:
        case CartanKind::F:
        case CartanKind::G: {
            int lo = 1, hi = 8;
            if (kind == CartanKind::B || kind == CartanKind::C || kind == CartanKind::G) lo = 2;
            if (kind == CartanKind::D) lo = 3;
            if (kind == CartanKind::E) lo = 6;
            if (kind == CartanKind::F) { lo = 4; hi = 4; }
            if (kind == CartanKind::G) hi = 2;
            if (rank < lo || rank > hi)
                throw UsageError("unsupported rank for type " + kind_name(kind) + ": " + std::to_string(rank));
            d->dim_ = rank;
            d->doubled_ = false;
            d->cartan_ = detail::abstract_cartan_matrix(kind, rank);
            // fundamental-weight coordinates: alpha_j = column j of the matrix
            for (int j = 0; j < rank; ++j) {
                Weight a(rank);
                for (int i = 0; i < rank; ++i) a[i] = d->cartan_[i][j];
                d->simple_roots_.push_back(a);
            }
            for (int i = 0; i < rank; ++i) {
                Weight f(rank, 0);
                f[i] = 1;
                d->cofun_.push_back(f);
                d->codiv_.push_back(1);
            }
            d->rho_.assign(rank, 1);
            break;
        }
        case CartanKind::GL: {
            if (rank < 1 || rank > 6) throw UsageError("gl mode supports 1 <= d <= 6");
            int n = rank;
            d->dim_ = n;
            d->doubled_ = false;
            for (int i = 0; i + 1 < n; ++i) {
                Weight a(n, 0);
                a[i] = 1;
                a[i + 1] = -1;
                d->simple_roots_.push_back(a);
                d->cofun_.push_back(a);
                d->codiv_.push_back(1);
            }
            d->rho_.assign(n, 0);
            for (int i = 0; i < n; ++i) d->rho_[i] = n - i;
            break;
        }
        case CartanKind::SO:
        case CartanKind::SP: {
            // so(2d+1) with rank = 2d+1, sp(2d) with rank = 2d
            int N = rank;
            int dd;
            if (kind == CartanKind::SO) {
                if (N < 3 || N % 2 == 0) throw UsageError("so mode needs odd rank >= 3");
                dd = (N - 1) / 2;
            } else {
                if (N < 2 || N % 2 == 1) throw UsageError("sp mode needs even rank >= 2");
                dd = N / 2;
            }
            if (dd > 6) throw UsageError("so/sp mode supports d <= 6");
            d->dim_ = dd;
            d->doubled_ = true;  // admit half-integer epsilon coordinates
            // alpha_0 = eps_1 (so) or 2 eps_1 (sp); alpha_i = eps_{i+1} - eps_i
            {
                Weight a(dd, 0);
                a[0] = (kind == CartanKind::SO) ? 2 : 4;  // doubled storage
                d->simple_roots_.push_back(a);
                Weight f(dd, 0);
                f[0] = 1;
                d->cofun_.push_back(f);
                d->codiv_.push_back(kind == CartanKind::SO ? 1 : 2);
            }
            for (int i = 0; i + 1 < dd; ++i) {
                Weight a(dd, 0);
                a[i] = -2;
                a[i + 1] = 2;
                d->simple_roots_.push_back(a);
                d->cofun_.push_back(a);
                d->codiv_.push_back(4);
            }
            d->rho_.assign(dd, 0);
            for (int i = 0; i < dd; ++i) d->rho_[i] = 2 * (i + 1);
            break;
        }
    }
    d->finish_setup();
    return d;
}

inline void CartanDatum::finish_setup() {
    int n = num_simple();
    if (cartan_.empty()) {
        cartan_.assign(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cartan_[i][j] = pairing(simple_roots_[j], i);
    }
    validate();
    compute_height_form();
    enumerate_roots();
    for (int i = 0; i < n; ++i)
        if (pairing(rho_, i) <= 0) throw Error("rho not strictly dominant");
}

inline std::shared_ptr<const CartanDatum> CartanDatum::dual() const {
    switch (kind_) {
        case CartanKind::B: return make(CartanKind::C, rank_param_);
        case CartanKind::C: return make(CartanKind::B, rank_param_);
        case CartanKind::SO: return make(CartanKind::SP, rank_param_ - 1);
        case CartanKind::SP: return make(CartanKind::SO, rank_param_ + 1);
        default: return make(kind_, rank_param_);
    }
}

inline CartanDatum::~CartanDatum() = default;

} // namespace qschur
