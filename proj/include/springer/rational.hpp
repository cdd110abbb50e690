#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

#include "springer/errors.hpp"

namespace springer {

// Exact scalar for the whole library.  GMP keeps gcd(num, den) = 1 and
// den > 0 through arithmetic; only raw (num, den) construction needs an
// explicit canonicalize, which the helpers below always perform.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    Integer n, d;
    if (n.set_str(num, 10) != 0) throw ParseError("bad integer literal: " + num);
    if (d.set_str(den, 10) != 0) throw ParseError("bad integer literal: " + den);
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Accepts "a", "a/b" and plain decimal integers of arbitrary size.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return rational_from_strings(text, "1");
    return rational_from_strings(text.substr(0, slash), text.substr(slash + 1));
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw DivisionByZero("0 raised to a negative power");
        return Rational(0);
    }
    Rational out;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
    if (e < 0) {
        mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    }
    out.canonicalize();
    return out;
}

}  // namespace springer

namespace Eigen {

// Exact-rational scalar support; the cost constants are nominal.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    using Literal = long;

    static inline Real epsilon() { return mpq_class(0); }
    static inline Real dummy_precision() { return mpq_class(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40,
    };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpq_class;
    using Nested = mpz_class;
    using Literal = long;

    static inline Real epsilon() { return mpz_class(0); }
    static inline Real dummy_precision() { return mpz_class(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 30,
    };
};

namespace internal {
inline mpq_class conj(const mpq_class& x) { return x; }
inline mpq_class real(const mpq_class& x) { return x; }
inline mpq_class imag(const mpq_class&) { return mpq_class(0); }
inline mpq_class abs2(const mpq_class& x) { return x * x; }
}  // namespace internal

}  // namespace Eigen
