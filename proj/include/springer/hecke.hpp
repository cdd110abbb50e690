#pragma once

#include <map>

#include "springer/laurent.hpp"
#include "springer/weyl.hpp"

namespace springer {

// Element of the affine Hecke algebra over Z[v^{±1}], q = v^2, written in
// the T_w basis.  Quadratic relation: T_s^2 = (q-1) T_s + q, so q = 1
// specializes to the group algebra of the extended affine Weyl group.
class HeckeElement {
public:
    explicit HeckeElement(const RootDatum* datum) : datum_(datum) {}

    static HeckeElement zero(const RootDatum* datum) { return HeckeElement(datum); }

    static HeckeElement basis(const ExtAffineElement& x) {
        HeckeElement h(x.datum());
        h.support_[x] = MultiLaurent::one();
        return h;
    }

    static HeckeElement unit(const RootDatum* datum) {
        return basis(ExtAffineElement::identity(datum));
    }

    static MultiLaurent v() { return MultiLaurent::variable("v"); }
    static MultiLaurent q() { return v().pow(2); }

    const RootDatum* datum() const { return datum_; }
    const std::map<ExtAffineElement, MultiLaurent>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    MultiLaurent coeff(const ExtAffineElement& x) const {
        auto it = support_.find(x);
        return it == support_.end() ? MultiLaurent::zero() : it->second;
    }

    HeckeElement& add_term(const ExtAffineElement& x, const MultiLaurent& c) {
        if (x.datum() != datum_) throw RootDatumMismatch("term over a different root datum");
        if (c.is_zero()) return *this;
        auto it = support_.find(x);
        if (it == support_.end()) {
            support_.emplace(x, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) support_.erase(it);
        }
        return *this;
    }

    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
        require_same(a, b);
        HeckeElement r = a;
        for (const auto& [x, c] : b.support_) r.add_term(x, c);
        return r;
    }

    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
        require_same(a, b);
        HeckeElement r = a;
        for (const auto& [x, c] : b.support_) r.add_term(x, -c);
        return r;
    }

    friend HeckeElement operator*(const MultiLaurent& c, const HeckeElement& a) {
        HeckeElement r(a.datum_);
        for (const auto& [x, cx] : a.support_) r.add_term(x, c * cx);
        return r;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.datum_ == b.datum_ && a.support_ == b.support_;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

    std::size_t term_count() const { return support_.size(); }

private:
    static void require_same(const HeckeElement& a, const HeckeElement& b) {
        if (a.datum_ != b.datum_)
            throw RootDatumMismatch("combining Hecke elements over different root data");
    }

    const RootDatum* datum_;
    std::map<ExtAffineElement, MultiLaurent> support_;
};

namespace detail {

// h * T_{s_a} for one affine simple reflection.
inline HeckeElement right_mul_simple(const HeckeElement& h, int a) {
    const RootDatum* rd = h.datum();
    ExtAffineElement s = ExtAffineElement::affine_simple(rd, a);
    MultiLaurent q = HeckeElement::q();
    MultiLaurent qm1 = q - MultiLaurent::one();
    HeckeElement out(rd);
    for (const auto& [z, c] : h.support()) {
        ExtAffineElement zs = z * s;
        if (wa_length(zs) > wa_length(z)) {
            out.add_term(zs, c);
        } else {
            out.add_term(z, c * qm1);
            out.add_term(zs, c * q);
        }
    }
    return out;
}

inline HeckeElement right_mul_omega(const HeckeElement& h, const ExtAffineElement& omega) {
    HeckeElement out(h.datum());
    for (const auto& [z, c] : h.support()) out.add_term(z * omega, c);
    return out;
}

}  // namespace detail

// Bilinear extension of T_x T_y, peeling a reduced word of y from the left:
// T_y = T_omega T_{s_{a_1}} ... T_{s_{a_k}} with lengths adding at each step.
inline HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
    if (a.datum() != b.datum())
        throw RootDatumMismatch("multiplying Hecke elements over different root data");
    HeckeElement out(a.datum());
    for (const auto& [y, cy] : b.support()) {
        AffineWord rw = reduced_word(y);
        HeckeElement cur = cy * detail::right_mul_omega(a, rw.omega);
        for (int step : rw.word) cur = detail::right_mul_simple(cur, step);
        out = out + cur;
    }
    return out;
}

inline HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    return hecke_multiply(a, b);
}

// T_w^{-1}; for a simple reflection this is q^{-1} T_s + (q^{-1}-1) T_e.
inline HeckeElement hecke_invert_Tw(const ExtAffineElement& w) {
    const RootDatum* rd = w.datum();
    AffineWord rw = reduced_word(w);
    MultiLaurent qinv = HeckeElement::v().pow(-2);
    HeckeElement acc = HeckeElement::unit(rd);
    for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) {
        HeckeElement sinv(rd);
        sinv.add_term(ExtAffineElement::affine_simple(rd, *it), qinv);
        sinv.add_term(ExtAffineElement::identity(rd), qinv - MultiLaurent::one());
        acc = acc * sinv;
    }
    return acc * HeckeElement::basis(rw.omega.inverse());
}

// Bernstein lattice element theta_lambda = v^{l(t_{l2}) - l(t_{l1})}
// T_{t_{l1}} T_{t_{l2}}^{-1} for the canonical dominant split.
struct BernsteinElement {
    IntVector lambda;
    HeckeElement expansion;
};

inline HeckeElement theta_from_split(const RootDatum* rd, const IntVector& l1,
                                     const IntVector& l2) {
    ExtAffineElement t1 = ExtAffineElement::translation(rd, l1);
    ExtAffineElement t2 = ExtAffineElement::translation(rd, l2);
    long e = wa_length(t2) - wa_length(t1);
    MultiLaurent scale = MultiLaurent::monomial("v", e);
    return scale * (HeckeElement::basis(t1) * hecke_invert_Tw(t2));
}

inline BernsteinElement theta(const RootDatum* rd, const IntVector& lambda) {
    auto [l1, l2] = dominant_split(rd, lambda);
    return BernsteinElement{lambda, theta_from_split(rd, l1, l2)};
}

// z_lambda = sum of theta_mu over the Weyl orbit of a dominant lambda.
inline HeckeElement center_element(const RootDatum* rd, const IntVector& lambda) {
    if (!rd->is_dominant(lambda))
        throw NotDominant("center element requires a dominant cocharacter");
    HeckeElement z(rd);
    for (const auto& mu : weyl_orbit(rd, lambda)) z = z + theta(rd, mu).expansion;
    return z;
}

inline HeckeElement commutator(const HeckeElement& a, const HeckeElement& b) {
    return a * b - b * a;
}

// Coefficient-wise specialization v^2 = q_value.  Odd v-powers need an
// explicit square root.
struct SpecializedElement {
    const RootDatum* datum;
    std::map<ExtAffineElement, Rational> support;

    bool operator==(const SpecializedElement& o) const {
        return datum == o.datum && support == o.support;
    }
};

inline SpecializedElement specialize_q(const HeckeElement& h, const Rational& q_value,
                                       const std::optional<Rational>& sqrt_q = std::nullopt) {
    if (q_value == 0) throw DomainError("BadSpecialization", "q must be nonzero");
    if (sqrt_q && (*sqrt_q) * (*sqrt_q) != q_value)
        throw DomainError("BadSpecialization", "provided root does not square to q");
    SpecializedElement out{h.datum(), {}};
    for (const auto& [x, c] : h.support()) {
        if (!c.vars().empty() && c.vars() != std::vector<std::string>{"v"})
            throw DomainError("BadSpecialization", "coefficient has variables other than v");
        Rational val(0);
        for (const auto& [e, coef] : c.terms()) {
            std::int64_t vpow = e.empty() ? 0 : e[0];
            Rational contrib;
            if (vpow % 2 == 0) {
                contrib = coef * pow(q_value, vpow / 2);
            } else {
                if (!sqrt_q)
                    throw NeedsSquareRoot("odd v-power requires a chosen square root of q");
                contrib = coef * pow(*sqrt_q, vpow);
            }
            val += contrib;
        }
        if (val != 0) out.support.emplace(x, val);
    }
    return out;
}

// Bernstein-basis decomposition h = sum c_{lambda,w} theta_lambda T_w by
// greedy elimination of a maximal-length support element; valid because
// theta_lambda T_w = (unit v-power) T_{t_lambda w} + strictly shorter terms.
struct BernsteinTerm {
    IntVector lambda;
    WeylElement w;
    MultiLaurent coeff;
};

inline HeckeElement theta_times_Tw(const RootDatum* rd, const IntVector& lambda,
                                   const WeylElement& w) {
    HeckeElement t = theta(rd, lambda).expansion;
    return t * HeckeElement::basis(ExtAffineElement(IntVector::Zero(rd->cochar_rank), w));
}

inline std::vector<BernsteinTerm> bernstein_decompose(const HeckeElement& h) {
    const RootDatum* rd = h.datum();
    std::vector<BernsteinTerm> out;
    HeckeElement rest = h;
    int guard = 0;
    while (!rest.is_zero()) {
        if (++guard > 100000)
            throw DomainError("BernsteinDecompose", "decomposition does not terminate");
        // Pick a support element of maximal length.
        const ExtAffineElement* best = nullptr;
        long best_len = -1;
        for (const auto& [x, c] : rest.support()) {
            (void)c;
            long l = wa_length(x);
            if (l > best_len) {
                best_len = l;
                best = &x;
            }
        }
        ExtAffineElement x = *best;
        MultiLaurent cx = rest.coeff(x);
        HeckeElement g = theta_times_Tw(rd, x.translation_part(), x.finite_part());
        MultiLaurent lead = g.coeff(x);
        if (!lead.is_unit())
            throw DomainError("BernsteinDecompose", "leading coefficient is not a unit");
        MultiLaurent factor = cx * lead.inverse_monomial();
        out.push_back(BernsteinTerm{x.translation_part(), x.finite_part(), factor});
        rest = rest - factor * g;
    }
    return out;
}

}  // namespace springer
