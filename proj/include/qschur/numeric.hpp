#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qschur {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input/precondition violations (bad configs, caps, malformed specs).
struct UsageError : Error {
    using Error::Error;
};

// An element fed to a peel/decomposition routine is not in the claimed module.
struct NotInModuleError : Error {
    using Error::Error;
};

inline BigInt big_pow(const BigInt& b, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

inline Rational rat_pow(const Rational& b, long e) {
    if (b == 0) throw Error("rat_pow: zero base");
    Rational r = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
    if (e < 0) r = Rational(1) / r;
    return r;
}

} // namespace qschur
