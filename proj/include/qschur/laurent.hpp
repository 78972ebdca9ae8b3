#pragma once

#include "qschur/numeric.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qschur {

// Element of Z[q,q^-1], stored sparsely as exponent -> coefficient.
// No zero coefficients are kept; iteration order is ascending exponent.
class LaurentScalar {
  public:
    LaurentScalar() = default;
    LaurentScalar(long n) { if (n != 0) c_[0] = n; }
    LaurentScalar(const BigInt& n) { if (n != 0) c_[0] = n; }

    static LaurentScalar q_power(long k, BigInt coef = 1) {
        LaurentScalar s;
        if (coef != 0) s.c_[k] = std::move(coef);
        return s;
    }
    // (-q)^k, defined for all integer k.
    static LaurentScalar minus_q_power(long k) {
        return q_power(k, (k % 2 == 0) ? 1 : -1);
    }

    bool is_zero() const { return c_.empty(); }
    bool operator==(const LaurentScalar& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentScalar& o) const { return !(*this == o); }

    const std::map<long, BigInt>& terms() const { return c_; }

    LaurentScalar& operator+=(const LaurentScalar& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    LaurentScalar& operator-=(const LaurentScalar& o) {
        for (const auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    LaurentScalar operator-() const {
        LaurentScalar r;
        for (const auto& [e, v] : c_) r.c_[e] = -v;
        return r;
    }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }
    LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

    void add_term(long e, const BigInt& v) {
        if (v == 0) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, v);
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    // Exact evaluation at a nonzero rational point.
    Rational evaluate(const Rational& q0) const {
        if (q0 == 0) throw UsageError("LaurentScalar: evaluation at q=0");
        Rational r = 0;
        for (const auto& [e, v] : c_) r += Rational(v) * rat_pow(q0, e);
        return r;
    }

    // Serialization: "c" or "c q^k" terms joined with " + ", e.g. "1 + -1 q^2".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << v;
            if (e != 0) os << " q^" << e;
        }
        return os.str();
    }

    static LaurentScalar parse(const std::string& text) {
        LaurentScalar r;
        std::istringstream is(text);
        std::string tok;
        BigInt coef;
        bool have_coef = false;
        auto flush = [&](long e) {
            r.add_term(e, coef);
            have_coef = false;
        };
        while (is >> tok) {
            if (tok == "+") {
                if (have_coef) flush(0);  // previous term was a bare constant
                continue;
            }
            if (tok.rfind("q^", 0) == 0) {
                if (!have_coef) throw UsageError("LaurentScalar::parse: exponent without coefficient");
                flush(std::stol(tok.substr(2)));
            } else {
                if (have_coef) flush(0);
                coef = BigInt(tok);
                have_coef = true;
            }
        }
        if (have_coef) flush(0);
        return r;
    }

    bool operator<(const LaurentScalar& o) const { return c_ < o.c_; }

  private:
    std::map<long, BigInt> c_;
};

inline LaurentScalar operator*(const BigInt& a, const LaurentScalar& b) {
    return LaurentScalar(a) * b;
}

} // namespace qschur
