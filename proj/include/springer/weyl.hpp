#pragma once

#include <optional>
#include <utility>

#include "springer/root_datum.hpp"

namespace springer {

// Finite Weyl group element: matrix action on the cocharacter lattice plus
// the lexicographically-smallest reduced word (recomputed, hence certified,
// whenever an element is built).
class WeylElement {
public:
    explicit WeylElement(const RootDatum* datum)
        : datum_(datum),
          m_(IntMatrix::Identity(datum->cochar_rank, datum->cochar_rank)),
          minv_(m_) {}

    static WeylElement simple(const RootDatum* datum, int i) {
        WeylElement w(datum);
        w.m_ = datum->simple_reflection_cochar(i - 1);
        w.minv_ = w.m_;
        w.word_ = {i};
        return w;
    }

    static WeylElement from_word(const RootDatum* datum, const std::vector<int>& word) {
        WeylElement w(datum);
        for (int i : word) w = w * simple(datum, i);
        return w;
    }

    // Reflection in an arbitrary root/coroot pair.
    static WeylElement reflection(const RootDatum* datum, const IntVector& root,
                                  const IntVector& coroot) {
        WeylElement w(datum);
        w.m_ = IntMatrix::Identity(datum->cochar_rank, datum->cochar_rank) -
               coroot * root.transpose();
        w.minv_ = w.m_;
        w.recompute_word();
        return w;
    }

    const RootDatum* datum() const { return datum_; }
    const IntMatrix& matrix() const { return m_; }
    const IntMatrix& inverse_matrix() const { return minv_; }
    const std::vector<int>& word() const { return word_; }
    std::size_t length() const { return word_.size(); }
    bool is_identity() const { return word_.empty(); }

    IntVector apply(const IntVector& cochar) const { return m_ * cochar; }
    IntVector apply_inverse(const IntVector& cochar) const { return minv_ * cochar; }

    // Action on the character lattice of w^{-1} is the transpose of the
    // cocharacter action of w (the pairing is W-invariant).
    IntVector inverse_apply_char(const IntVector& character) const {
        return m_.transpose() * character;
    }
    IntVector apply_char(const IntVector& character) const {
        return minv_.transpose() * character;
    }

    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
        if (a.datum_ != b.datum_)
            throw RootDatumMismatch("multiplying Weyl elements over different data");
        WeylElement r(a.datum_);
        r.m_ = a.m_ * b.m_;
        r.minv_ = b.minv_ * a.minv_;
        r.recompute_word();
        return r;
    }

    WeylElement inverse() const {
        WeylElement r(datum_);
        r.m_ = minv_;
        r.minv_ = m_;
        r.recompute_word();
        return r;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.datum_ == b.datum_ && a.m_ == b.m_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    std::vector<std::int64_t> key() const {
        std::vector<std::int64_t> k;
        k.reserve(m_.size());
        for (Eigen::Index i = 0; i < m_.rows(); ++i)
            for (Eigen::Index j = 0; j < m_.cols(); ++j) k.push_back(m_(i, j));
        return k;
    }

private:
    // Greedy smallest-left-descent peel; yields the lex-smallest reduced word.
    void recompute_word() {
        word_.clear();
        IntMatrix cur = m_;
        IntMatrix curinv = minv_;
        while (cur != IntMatrix::Identity(datum_->cochar_rank, datum_->cochar_rank)) {
            int descent = -1;
            for (int i = 0; i < datum_->ssrank; ++i) {
                // Left descent i <=> w^{-1}(alpha_i) < 0.
                IntVector img = cur.transpose() * datum_->simple_roots[i];
                if (!datum_->root_is_positive(img)) {
                    descent = i;
                    break;
                }
            }
            if (descent < 0)
                throw DomainError("BadWeylElement", "matrix is not a Weyl group element");
            IntMatrix s = datum_->simple_reflection_cochar(descent);
            cur = s * cur;
            curinv = curinv * s;
            word_.push_back(descent + 1);
            if (word_.size() > 10000)
                throw DomainError("BadWeylElement", "word reduction does not terminate");
        }
    }

    const RootDatum* datum_;
    IntMatrix m_;
    IntMatrix minv_;
    std::vector<int> word_;
};

// Element (lambda, w) of the extended affine Weyl group W ⋉ X_*(T),
// understood as the product t_lambda w.
class ExtAffineElement {
public:
    ExtAffineElement(IntVector translation, WeylElement finite)
        : translation_(std::move(translation)), finite_(std::move(finite)) {
        if (translation_.size() != finite_.datum()->cochar_rank)
            throw RootDatumMismatch("translation has wrong rank");
    }

    static ExtAffineElement identity(const RootDatum* datum) {
        return ExtAffineElement(IntVector::Zero(datum->cochar_rank), WeylElement(datum));
    }

    static ExtAffineElement translation(const RootDatum* datum, const IntVector& lambda) {
        return ExtAffineElement(lambda, WeylElement(datum));
    }

    // Affine generator 0 is t_{theta^vee} s_theta; 1..ssrank are finite.
    static ExtAffineElement affine_simple(const RootDatum* datum, int a) {
        if (a == 0) {
            if (datum->highest_root_index < 0)
                throw DomainError("BadWeylElement",
                                  datum->name + " has no roots, so no affine reflection");
            const IntVector& theta = datum->positive_roots[datum->highest_root_index];
            const IntVector& theta_v = datum->positive_coroots[datum->highest_root_index];
            return ExtAffineElement(theta_v, WeylElement::reflection(datum, theta, theta_v));
        }
        return ExtAffineElement(IntVector::Zero(datum->cochar_rank),
                                WeylElement::simple(datum, a));
    }

    const RootDatum* datum() const { return finite_.datum(); }
    const IntVector& translation_part() const { return translation_; }
    const WeylElement& finite_part() const { return finite_; }

    bool is_identity() const {
        return finite_.is_identity() && translation_.isZero();
    }

    friend ExtAffineElement operator*(const ExtAffineElement& a, const ExtAffineElement& b) {
        if (a.datum() != b.datum())
            throw RootDatumMismatch("multiplying elements over different root data");
        return ExtAffineElement(a.translation_ + a.finite_.apply(b.translation_),
                                a.finite_ * b.finite_);
    }

    ExtAffineElement inverse() const {
        WeylElement winv = finite_.inverse();
        return ExtAffineElement(-winv.apply(translation_), winv);
    }

    friend bool operator==(const ExtAffineElement& a, const ExtAffineElement& b) {
        return a.datum() == b.datum() && a.translation_ == b.translation_ &&
               a.finite_ == b.finite_;
    }
    friend bool operator!=(const ExtAffineElement& a, const ExtAffineElement& b) {
        return !(a == b);
    }

    friend bool operator<(const ExtAffineElement& a, const ExtAffineElement& b) {
        return a.key() < b.key();
    }

    std::vector<std::int64_t> key() const {
        std::vector<std::int64_t> k(translation_.data(), translation_.data() + translation_.size());
        auto wk = finite_.key();
        k.insert(k.end(), wk.begin(), wk.end());
        return k;
    }

private:
    IntVector translation_;
    WeylElement finite_;
};

inline ExtAffineElement wa_multiply(const ExtAffineElement& a, const ExtAffineElement& b) {
    return a * b;
}

// Membership in the non-extended (Coxeter) subgroup W ⋉ Q^vee: exactly the
// elements whose length-zero part is trivial.
inline bool in_coxeter_subgroup(const ExtAffineElement& x) {
    return x.datum()->omega_class(x.translation_part()) == 0;
}

// Iwahori-Matsumoto length of t_lambda w.  Gated by the breadth-first word
// oracle in the test suite before anything downstream trusts it.
inline long wa_length(const ExtAffineElement& x) {
    const RootDatum* rd = x.datum();
    const IntVector& lambda = x.translation_part();
    long len = 0;
    for (std::size_t i = 0; i < rd->positive_roots.size(); ++i) {
        const IntVector& alpha = rd->positive_roots[i];
        std::int64_t p = RootDatum::pair(alpha, lambda);
        IntVector winv_alpha = x.finite_part().inverse_apply_char(alpha);
        if (rd->root_is_positive(winv_alpha)) {
            len += std::abs(p);
        } else {
            len += std::abs(p - 1);
        }
    }
    return len;
}

// Canonical representative of the length-zero coset of x: the stored
// generator raised to the class of the translation part.
inline ExtAffineElement omega_part(const ExtAffineElement& x) {
    const RootDatum* rd = x.datum();
    long c = rd->omega_class(x.translation_part());
    ExtAffineElement gen(rd->omega_gen_translation,
                         WeylElement::from_word(rd, rd->omega_gen_word));
    ExtAffineElement acc = ExtAffineElement::identity(rd);
    if (c >= 0) {
        for (long i = 0; i < c; ++i) acc = acc * gen;
    } else {
        ExtAffineElement gi = gen.inverse();
        for (long i = 0; i < -c; ++i) acc = acc * gi;
    }
    return acc;
}

struct AffineWord {
    ExtAffineElement omega;
    std::vector<int> word;  // affine simple indices, 0 = affine node
};

// x = omega * s_{a_1} * ... * s_{a_k} with the lex-smallest word.
inline AffineWord reduced_word(const ExtAffineElement& x) {
    const RootDatum* rd = x.datum();
    ExtAffineElement omega = omega_part(x);
    ExtAffineElement y = omega.inverse() * x;
    std::vector<int> word;
    long len = wa_length(y);
    if (wa_length(omega) != 0)
        throw DomainError("BadWeylElement", "omega representative has nonzero length");
    while (len > 0) {
        bool found = false;
        for (int a = 0; a <= rd->ssrank; ++a) {
            ExtAffineElement cand = ExtAffineElement::affine_simple(rd, a) * y;
            long l2 = wa_length(cand);
            if (l2 == len - 1) {
                word.push_back(a);
                y = cand;
                len = l2;
                found = true;
                break;
            }
        }
        if (!found)
            throw DomainError("BadWeylElement", "no descent found; length function broken");
    }
    if (!y.is_identity())
        throw DomainError("BadWeylElement", "word peel did not reach the identity");
    return {omega, word};
}

inline ExtAffineElement compose(const AffineWord& rw, const RootDatum* rd) {
    ExtAffineElement x = rw.omega;
    for (int a : rw.word) x = x * ExtAffineElement::affine_simple(rd, a);
    return x;
}

// lambda = lambda1 - lambda2 with both parts dominant: split the coordinates
// of lambda over the dominant basis by sign.
inline std::pair<IntVector, IntVector> dominant_split(const RootDatum* rd,
                                                      const IntVector& lambda) {
    IntVector coords = rd->dominant_basis_inv * lambda;
    IntVector l1 = IntVector::Zero(rd->cochar_rank);
    IntVector l2 = IntVector::Zero(rd->cochar_rank);
    for (int i = 0; i < rd->cochar_rank; ++i) {
        if (coords[i] > 0) l1 += coords[i] * rd->dominant_basis[i];
        if (coords[i] < 0) l2 += (-coords[i]) * rd->dominant_basis[i];
    }
    return {l1, l2};
}

// Finite Weyl group enumeration (small presets only).
inline std::vector<WeylElement> finite_weyl_group(const RootDatum* rd) {
    std::vector<WeylElement> elems = {WeylElement(rd)};
    std::set<std::vector<std::int64_t>> seen = {elems[0].key()};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        WeylElement cur = elems[head];
        for (int i = 1; i <= rd->ssrank; ++i) {
            WeylElement nxt = cur * WeylElement::simple(rd, i);
            if (seen.insert(nxt.key()).second) elems.push_back(nxt);
            if (elems.size() > 100000)
                throw DomainError("BadRootDatum", "finite Weyl group too large");
        }
    }
    return elems;
}

inline std::vector<IntVector> weyl_orbit(const RootDatum* rd, const IntVector& lambda) {
    std::vector<IntVector> orbit;
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& w : finite_weyl_group(rd)) {
        IntVector v = w.apply(lambda);
        std::vector<std::int64_t> k(v.data(), v.data() + v.size());
        if (seen.insert(k).second) orbit.push_back(v);
    }
    return orbit;
}

}  // namespace springer
