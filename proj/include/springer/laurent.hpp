#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "springer/errors.hpp"
#include "springer/rational.hpp"

namespace springer {

using ExponentVec = std::vector<std::int64_t>;

// Element of Z-graded Laurent ring Q[x1^±, ..., xk^±].  Variables are kept
// sorted by name; the term map never stores zero coefficients.
class MultiLaurent {
public:
    MultiLaurent() = default;

    explicit MultiLaurent(const Rational& c) {
        if (c != 0) terms_[ExponentVec{}] = c;
    }

    static MultiLaurent zero() { return MultiLaurent(); }
    static MultiLaurent one() { return MultiLaurent(Rational(1)); }

    static MultiLaurent constant(const Rational& c) { return MultiLaurent(c); }

    // c * x^e in a single variable.
    static MultiLaurent monomial(const std::string& var, std::int64_t e,
                                 const Rational& c = Rational(1)) {
        MultiLaurent f;
        if (c == 0) return f;
        f.vars_ = {var};
        f.terms_[{e}] = c;
        return f;
    }

    static MultiLaurent variable(const std::string& var) { return monomial(var, 1); }

    // Arbitrary term over an explicit (unsorted OK) variable list.
    static MultiLaurent term(std::vector<std::string> vars, ExponentVec exps, const Rational& c) {
        if (vars.size() != exps.size())
            throw ParseError("term: variable/exponent length mismatch");
        MultiLaurent f;
        if (c == 0) return f;
        std::vector<std::size_t> idx(vars.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return vars[a] < vars[b]; });
        ExponentVec sorted(exps.size());
        f.vars_.resize(vars.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            f.vars_[i] = vars[idx[i]];
            sorted[i] = exps[idx[i]];
        }
        for (std::size_t i = 0; i + 1 < f.vars_.size(); ++i)
            if (f.vars_[i] == f.vars_[i + 1]) throw ParseError("term: duplicate variable name");
        f.terms_[sorted] = c;
        f.strip_unused();
        return f;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<ExponentVec, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_vec(terms_.begin()->first));
    }
    bool is_monomial() const { return terms_.size() == 1; }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw DomainError("NotConstant", "value of non-constant Laurent polynomial");
        return terms_.begin()->second;
    }

    friend MultiLaurent operator+(const MultiLaurent& a, const MultiLaurent& b) {
        auto [fa, fb] = aligned(a, b);
        for (const auto& [e, c] : fb.terms_) fa.add_term(e, c);
        return fa;
    }

    friend MultiLaurent operator-(const MultiLaurent& a, const MultiLaurent& b) {
        auto [fa, fb] = aligned(a, b);
        for (const auto& [e, c] : fb.terms_) fa.add_term(e, -c);
        return fa;
    }

    friend MultiLaurent operator-(const MultiLaurent& a) {
        MultiLaurent r = a;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
        auto [fa, fb] = aligned(a, b);
        MultiLaurent out;
        out.vars_ = fa.vars_;
        ExponentVec e(out.vars_.size());
        for (const auto& [ea, ca] : fa.terms_) {
            for (const auto& [eb, cb] : fb.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        out.strip_unused();
        return out;
    }

    friend MultiLaurent operator*(const Rational& c, const MultiLaurent& a) {
        return MultiLaurent(c) * a;
    }

    MultiLaurent& operator+=(const MultiLaurent& b) { return *this = *this + b; }
    MultiLaurent& operator-=(const MultiLaurent& b) { return *this = *this - b; }
    MultiLaurent& operator*=(const MultiLaurent& b) { return *this = *this * b; }

    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
        auto [fa, fb] = aligned(a, b);
        return fa.terms_ == fb.terms_;
    }
    friend bool operator!=(const MultiLaurent& a, const MultiLaurent& b) { return !(a == b); }

    // Total-order for use as a map key (after alignment of variable sets).
    friend bool operator<(const MultiLaurent& a, const MultiLaurent& b) {
        auto [fa, fb] = aligned(a, b);
        return fa.terms_ < fb.terms_;
    }

    MultiLaurent pow(long e) const {
        if (e < 0) {
            return inverse_monomial().pow(-e);
        }
        MultiLaurent acc = one();
        MultiLaurent base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Units of the Laurent ring are the single-term elements.
    bool is_unit() const { return terms_.size() == 1; }

    MultiLaurent inverse_monomial() const {
        if (!is_unit())
            throw SubstitutionNotInvertible("inverse of a non-monomial Laurent polynomial");
        MultiLaurent r;
        r.vars_ = vars_;
        ExponentVec e = terms_.begin()->first;
        for (auto& x : e) x = -x;
        r.terms_[e] = Rational(1) / terms_.begin()->second;
        r.strip_unused();
        return r;
    }

    // Simultaneous substitution; unassigned variables pass through.
    MultiLaurent substitute(const std::map<std::string, MultiLaurent>& assignments) const {
        MultiLaurent out;
        for (const auto& [e, c] : terms_) {
            MultiLaurent term = MultiLaurent(c);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = assignments.find(vars_[i]);
                MultiLaurent base =
                    (it == assignments.end()) ? variable(vars_[i]) : it->second;
                if (e[i] < 0 && !base.is_unit())
                    throw SubstitutionNotInvertible(
                        "negative power of non-unit substitution for " + vars_[i]);
                term *= base.pow(e[i]);
            }
            out += term;
        }
        return out;
    }

    MultiLaurent substitute(const std::string& var, const MultiLaurent& value) const {
        return substitute(std::map<std::string, MultiLaurent>{{var, value}});
    }

    MultiLaurent substitute(const std::string& var, const Rational& value) const {
        if (value == 0 && min_exponent(var) < 0)
            throw SubstitutionNotInvertible("substituting 0 into negative power of " + var);
        return substitute(var, MultiLaurent(value));
    }

    Rational evaluate(const std::map<std::string, Rational>& point) const {
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = point.find(vars_[i]);
                if (it == point.end())
                    throw DomainError("MissingValue", "no value for variable " + vars_[i]);
                t *= springer::pow(it->second, e[i]);
            }
            sum += t;
        }
        return sum;
    }

    std::int64_t min_exponent(const std::string& var) const {
        auto pos = std::find(vars_.begin(), vars_.end(), var);
        if (pos == vars_.end()) return 0;
        std::size_t i = static_cast<std::size_t>(pos - vars_.begin());
        std::int64_t m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (first || e[i] < m) m = e[i];
            first = false;
        }
        return m;
    }

    std::int64_t max_exponent(const std::string& var) const {
        auto pos = std::find(vars_.begin(), vars_.end(), var);
        if (pos == vars_.end()) return 0;
        std::size_t i = static_cast<std::size_t>(pos - vars_.begin());
        std::int64_t m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (first || e[i] > m) m = e[i];
            first = false;
        }
        return m;
    }

    // Extends the variable list (no-op for variables already present).
    MultiLaurent with_vars(const std::vector<std::string>& extra) const {
        MultiLaurent probe;
        probe.vars_ = extra;
        std::sort(probe.vars_.begin(), probe.vars_.end());
        probe.vars_.erase(std::unique(probe.vars_.begin(), probe.vars_.end()), probe.vars_.end());
        auto [fa, fb] = aligned(*this, probe);
        (void)fb;
        return fa;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << to_string(c);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*" << vars_[i];
                if (e[i] != 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    static bool is_zero_vec(const ExponentVec& e) {
        return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
    }

    void add_term(const ExponentVec& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Drops variables that no longer occur with nonzero exponent.
    void strip_unused() {
        if (vars_.empty()) return;
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_) {
            (void)c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) used[i] = true;
        }
        bool all = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
        if (all) return;
        std::vector<std::string> nv;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) {
                nv.push_back(vars_[i]);
                keep.push_back(i);
            }
        std::map<ExponentVec, Rational> nt;
        for (const auto& [e, c] : terms_) {
            ExponentVec ne(keep.size());
            for (std::size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
            nt.emplace(std::move(ne), c);
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    // Re-expresses both operands over the union of their variable sets.
    static std::pair<MultiLaurent, MultiLaurent> aligned(const MultiLaurent& a,
                                                         const MultiLaurent& b) {
        if (a.vars_ == b.vars_) return {a, b};
        std::vector<std::string> u;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(u));
        return {a.remapped(u), b.remapped(u)};
    }

    MultiLaurent remapped(const std::vector<std::string>& u) const {
        MultiLaurent r;
        r.vars_ = u;
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(u.begin(), u.end(), vars_[i]);
            pos[i] = static_cast<std::size_t>(it - u.begin());
        }
        for (const auto& [e, c] : terms_) {
            ExponentVec ne(u.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    std::vector<std::string> vars_;          // sorted, unique
    std::map<ExponentVec, Rational> terms_;  // lex-ordered exponent vectors
};

enum class LaurentOp { add, sub, mul };

inline MultiLaurent laurent_arith(const MultiLaurent& a, const MultiLaurent& b, LaurentOp op) {
    switch (op) {
        case LaurentOp::add: return a + b;
        case LaurentOp::sub: return a - b;
        case LaurentOp::mul: return a * b;
    }
    throw DomainError("BadOp", "unknown Laurent operation");
}

// Exact divisibility test in the Laurent ring; returns the quotient when
// num = q * den.  Works in lex order after clearing negative exponents.
inline std::optional<MultiLaurent> try_exact_division(const MultiLaurent& num,
                                                      const MultiLaurent& den) {
    if (den.is_zero()) throw DivisionByZero("division by zero Laurent polynomial");
    if (num.is_zero()) return MultiLaurent::zero();
    if (den.is_unit()) return num * den.inverse_monomial();

    // Clear monomial content of num and den separately; the quotient picks
    // up the monomial ratio of the two shifts.
    std::vector<std::string> allv;
    {
        auto av = num.vars();
        auto bv = den.vars();
        std::set_union(av.begin(), av.end(), bv.begin(), bv.end(), std::back_inserter(allv));
    }
    MultiLaurent shift_n = MultiLaurent::one(), shift_d = MultiLaurent::one();
    for (const auto& v : allv) {
        shift_n *= MultiLaurent::monomial(v, -num.min_exponent(v));
        shift_d *= MultiLaurent::monomial(v, -den.min_exponent(v));
    }
    MultiLaurent n = (num * shift_n).with_vars(allv);
    MultiLaurent d = (den * shift_d).with_vars(allv);
    MultiLaurent q;
    const auto& dt = *d.terms().rbegin();  // lex-leading term of d
    while (!n.is_zero()) {
        const auto& nt = *n.terms().rbegin();
        ExponentVec e(nt.first.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = nt.first[i] - dt.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        MultiLaurent t = MultiLaurent::term(d.vars(), e, nt.second / dt.second);
        q += t;
        n -= t * d;
    }
    return q * shift_d * shift_n.inverse_monomial();
}

}  // namespace springer
