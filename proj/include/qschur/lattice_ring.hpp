#pragma once

#include "qschur/cartan.hpp"
#include "qschur/laurent.hpp"

#include <map>

namespace qschur {

// Element of Z[q,q^-1][Q]: sparse sum of c_lambda e^lambda.
class LatticeRingElement {
  public:
    LatticeRingElement() = default;
    static LatticeRingElement e(const Weight& lam, LaurentScalar c = LaurentScalar(1)) {
        LatticeRingElement r;
        r.add(lam, c);
        return r;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<Weight, LaurentScalar>& terms() const { return t_; }
    bool operator==(const LatticeRingElement& o) const { return t_ == o.t_; }

    void add(const Weight& lam, const LaurentScalar& c) {
        if (c.is_zero()) return;
        auto it = t_.find(lam);
        if (it == t_.end()) {
            t_.emplace(lam, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    LatticeRingElement& operator+=(const LatticeRingElement& o) {
        for (const auto& [l, c] : o.t_) add(l, c);
        return *this;
    }
    LatticeRingElement& operator-=(const LatticeRingElement& o) {
        for (const auto& [l, c] : o.t_) add(l, -c);
        return *this;
    }
    friend LatticeRingElement operator+(LatticeRingElement a, const LatticeRingElement& b) {
        return a += b;
    }
    friend LatticeRingElement operator-(LatticeRingElement a, const LatticeRingElement& b) {
        return a -= b;
    }
    friend LatticeRingElement operator*(const LatticeRingElement& a, const LatticeRingElement& b) {
        LatticeRingElement r;
        for (const auto& [la, ca] : a.t_)
            for (const auto& [lb, cb] : b.t_) r.add(w_add(la, lb), ca * cb);
        return r;
    }
    LatticeRingElement scaled(const LaurentScalar& c) const {
        LatticeRingElement r;
        for (const auto& [l, v] : t_) r.add(l, v * c);
        return r;
    }

  private:
    std::map<Weight, LaurentScalar> t_;
};

} // namespace qschur
