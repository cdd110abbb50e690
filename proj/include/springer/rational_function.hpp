#pragma once

#include "springer/laurent.hpp"

namespace springer {

// Fraction of Laurent polynomials.  Kept normalized by clearing common
// monomial content and making the lex-leading coefficient of the
// denominator positive; no multivariate gcd reduction is attempted, so
// equality goes through cross-multiplication.
class RationalFunction {
public:
    RationalFunction() : num_(MultiLaurent::zero()), den_(MultiLaurent::one()) {}

    RationalFunction(MultiLaurent num, MultiLaurent den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        normalize();
    }

    /* implicit */ RationalFunction(const MultiLaurent& num)
        : num_(num), den_(MultiLaurent::one()) {}

    explicit RationalFunction(const Rational& c)
        : num_(MultiLaurent(c)), den_(MultiLaurent::one()) {}

    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(MultiLaurent::one()); }

    const MultiLaurent& num() const { return num_; }
    const MultiLaurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    // True when the normalized denominator is a unit, i.e. the value lies
    // in the Laurent ring itself.
    bool is_laurent() const { return den_.is_unit(); }

    MultiLaurent as_laurent() const {
        if (den_.is_unit()) return num_ * den_.inverse_monomial();
        auto q = try_exact_division(num_, den_);
        if (!q) throw DomainError("NotPolynomial", "rational function is not a Laurent polynomial");
        return *q;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    Rational evaluate(const std::map<std::string, Rational>& point) const {
        Rational d = den_.evaluate(point);
        if (d == 0) throw DivisionByZero("rational function evaluated at a pole");
        return num_.evaluate(point) / d;
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = MultiLaurent::one();
            return;
        }
        // Exact cancellation keeps the chains of products in the
        // localization computations from snowballing.
        if (den_.is_unit()) {
            num_ *= den_.inverse_monomial();
            den_ = MultiLaurent::one();
        } else if (auto q = try_exact_division(num_, den_)) {
            num_ = *q;
            den_ = MultiLaurent::one();
        }
        // Clear common monomial content across num and den.
        std::vector<std::string> allv;
        {
            auto av = num_.vars();
            auto bv = den_.vars();
            std::set_union(av.begin(), av.end(), bv.begin(), bv.end(), std::back_inserter(allv));
        }
        MultiLaurent shift = MultiLaurent::one();
        for (const auto& v : allv) {
            std::int64_t m = std::min(num_.min_exponent(v), den_.min_exponent(v));
            if (m != 0) shift *= MultiLaurent::monomial(v, -m);
        }
        num_ *= shift;
        den_ *= shift;
        // Positive lex-leading denominator coefficient.
        const Rational& lead = den_.terms().rbegin()->second;
        if (lead < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    MultiLaurent num_;
    MultiLaurent den_;
};

enum class RfOp { add, mul, div };

inline RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op) {
    switch (op) {
        case RfOp::add: return a + b;
        case RfOp::mul: return a * b;
        case RfOp::div: return a / b;
    }
    throw DomainError("BadOp", "unknown rational-function operation");
}

}  // namespace springer
