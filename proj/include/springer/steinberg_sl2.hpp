#pragma once

#include <array>
#include <string>
#include <vector>

#include "springer/hecke.hpp"
#include "springer/rational_function.hpp"

namespace springer::sl2 {

// Fixed-point localization model of the equivariant K-theory convolution
// algebra of the Steinberg variety for SL2.  The cotangent space of P^1
// has two torus fixed points; classes are 2x2 tables of rational functions
// in (t, v), q = v^2, indexed by pairs of fixed points, and convolution
// divides by the Euler class of the middle point.

enum class QConvention { a, b };  // fiber scaling q t^{-2} vs q^{-1} t^{-2}

inline MultiLaurent tvar() { return MultiLaurent::variable("t"); }
inline MultiLaurent qvar() { return MultiLaurent::variable("v").pow(2); }

struct TangentData {
    QConvention convention = QConvention::a;

    // Weights at fixed point 0; the point at infinity swaps t <-> t^{-1}.
    std::vector<MultiLaurent> weights(int point) const {
        int s = point == 0 ? 1 : -1;
        MultiLaurent base = tvar().pow(2 * s);
        MultiLaurent fiber =
            (convention == QConvention::a ? qvar() : qvar().pow(-1)) * tvar().pow(-2 * s);
        return {base, fiber};
    }
};

// K-theoretic Euler class: product of (1 - chi^{-1}) over tangent weights.
inline MultiLaurent euler_class(const TangentData& td, int point) {
    MultiLaurent e = MultiLaurent::one();
    for (const auto& chi : td.weights(point)) e *= MultiLaurent::one() - chi.pow(-1);
    return e;
}

class FixedPointClass {
public:
    FixedPointClass() = default;

    RationalFunction& at(int x, int y) { return entries_[2 * x + y]; }
    const RationalFunction& at(int x, int y) const { return entries_[2 * x + y]; }

    friend bool operator==(const FixedPointClass& a, const FixedPointClass& b) {
        for (int i = 0; i < 4; ++i)
            if (a.entries_[i] != b.entries_[i]) return false;
        return true;
    }
    friend bool operator!=(const FixedPointClass& a, const FixedPointClass& b) {
        return !(a == b);
    }

    friend FixedPointClass operator+(const FixedPointClass& a, const FixedPointClass& b) {
        FixedPointClass r;
        for (int i = 0; i < 4; ++i) r.entries_[i] = a.entries_[i] + b.entries_[i];
        return r;
    }
    friend FixedPointClass operator-(const FixedPointClass& a, const FixedPointClass& b) {
        FixedPointClass r;
        for (int i = 0; i < 4; ++i) r.entries_[i] = a.entries_[i] - b.entries_[i];
        return r;
    }
    friend FixedPointClass operator*(const RationalFunction& c, const FixedPointClass& a) {
        FixedPointClass r;
        for (int i = 0; i < 4; ++i) r.entries_[i] = c * a.entries_[i];
        return r;
    }

    bool is_zero() const {
        for (int i = 0; i < 4; ++i)
            if (!entries_[i].is_zero()) return false;
        return true;
    }

    // Entries of honest sheaf classes stay Laurent after localization.
    bool entries_are_laurent() const {
        for (int i = 0; i < 4; ++i) {
            const auto& e = entries_[i];
            if (e.is_zero() || e.is_laurent()) continue;
            if (!try_exact_division(e.num(), e.den()).has_value()) return false;
        }
        return true;
    }

private:
    std::array<RationalFunction, 4> entries_{};
};

class SteinbergModel {
public:
    explicit SteinbergModel(QConvention conv = QConvention::a) : tangent_{conv} {
        e0_ = RationalFunction(euler_class(tangent_, 0));
        einf_ = RationalFunction(euler_class(tangent_, 1));
    }

    const TangentData& tangent() const { return tangent_; }
    QConvention convention() const { return tangent_.convention; }

    RationalFunction euler(int point) const { return point == 0 ? e0_ : einf_; }

    // (a*b)_{xz} = sum_y a_{xy} b_{yz} / e(y).
    FixedPointClass convolve(const FixedPointClass& a, const FixedPointClass& b) const {
        FixedPointClass out;
        for (int x = 0; x < 2; ++x)
            for (int z = 0; z < 2; ++z) {
                RationalFunction sum;
                for (int y = 0; y < 2; ++y) sum += a.at(x, y) * b.at(y, z) / euler(y);
                out.at(x, z) = sum;
            }
        return out;
    }

    // Localized class of the relative diagonal: the convolution unit.
    FixedPointClass unit() const {
        FixedPointClass u;
        u.at(0, 0) = e0_;
        u.at(1, 1) = einf_;
        return u;
    }

    // Diagonal class twisted by the n-th power of the tautological character.
    FixedPointClass class_theta(int n) const {
        FixedPointClass c;
        c.at(0, 0) = RationalFunction(tvar().pow(n)) * e0_;
        c.at(1, 1) = RationalFunction(tvar().pow(-n)) * einf_;
        return c;
    }

    // Off-diagonal component class with an O(m, k) twist, normalized so
    // that its trace against the localization pairing is q + 1.  In matrix
    // coordinates M_{xy} = class_{xy}/e(y) this is the rank-one matrix
    //   P(m, k)_{xy} = t^{m s(x) + k s(y)} p_x,  p = ((qt-1)/(t-1), (t-q)/(t-1)).
    FixedPointClass component_class(int m, int k) const {
        MultiLaurent one = MultiLaurent::one();
        MultiLaurent t = tvar();
        MultiLaurent q = qvar();
        RationalFunction p0(q * t - one, t - one);
        RationalFunction pinf(t - q, t - one);
        FixedPointClass out;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                int sx = x == 0 ? 1 : -1;
                int sy = y == 0 ? 1 : -1;
                RationalFunction px = (x == 0) ? p0 : pinf;
                out.at(x, y) =
                    RationalFunction(t.pow(m * sx + k * sy)) * px * euler(y);
            }
        return out;
    }

    // T_s model class: component class minus the diagonal unit, with the
    // line-bundle twist pinned by the quadratic-relation search.
    FixedPointClass class_Ts() const { return component_class(0, 0) - unit(); }

    bool satisfies_quadratic(const FixedPointClass& Ts) const {
        RationalFunction q(qvar());
        FixedPointClass lhs = convolve(Ts, Ts);
        FixedPointClass rhs = (q - RationalFunction::one()) * Ts + q * unit();
        return lhs == rhs;
    }

    // Twist exponents in {-2..2}^2 whose component class satisfies the
    // quadratic relation after subtracting the unit.
    std::vector<std::pair<int, int>> quadratic_twist_search() const {
        std::vector<std::pair<int, int>> found;
        for (int m = -2; m <= 2; ++m)
            for (int k = -2; k <= 2; ++k)
                if (satisfies_quadratic(component_class(m, k) - unit())) found.emplace_back(m, k);
        return found;
    }

    // t <-> t^{-1} together with swapping the two fixed points.
    FixedPointClass weyl_involution(const FixedPointClass& c) const {
        auto flip = [](const RationalFunction& f) {
            MultiLaurent tinv = MultiLaurent::monomial("t", -1);
            return RationalFunction(f.num().substitute("t", tinv),
                                    f.den().substitute("t", tinv));
        };
        FixedPointClass out;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) out.at(x, y) = flip(c.at(1 - x, 1 - y));
        return out;
    }

private:
    TangentData tangent_;
    RationalFunction e0_, einf_;
};

struct ModelCheckEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ModelCheckReport {
    QConvention convention;
    std::vector<ModelCheckEntry> entries;
    bool all_pass = true;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        entries.push_back({name, pass, detail});
        if (!pass) all_pass = false;
    }
};

// The image of the Hecke algebra under T_s -> class_Ts, theta -> class_theta,
// computed through the Bernstein decomposition.
inline FixedPointClass hecke_image(const SteinbergModel& model, const HeckeElement& h) {
    FixedPointClass out;
    for (const auto& term : bernstein_decompose(h)) {
        FixedPointClass img = model.class_theta(static_cast<int>(term.lambda[0]));
        if (!term.w.is_identity()) img = model.convolve(img, model.class_Ts());
        RationalFunction coeff(term.coeff);
        out = out + coeff * img;
    }
    return out;
}

inline ModelCheckReport hecke_model_check(QConvention conv = QConvention::a) {
    SteinbergModel model(conv);
    ModelCheckReport report;
    report.convention = conv;

    FixedPointClass unit = model.unit();
    FixedPointClass Ts = model.class_Ts();

    // Twist search: the quadratic relation pins the twist sum; the
    // symmetric representative (0,0) is the frozen choice.
    auto found = model.quadratic_twist_search();
    bool has_symmetric = false;
    for (auto [m, k] : found)
        if (m == 0 && k == 0) has_symmetric = true;
    report.add("twist-search", has_symmetric && !found.empty(),
               "twists passing the quadratic: " + std::to_string(found.size()));

    report.add("unit-law", model.convolve(unit, Ts) == Ts && model.convolve(Ts, unit) == Ts);
    report.add("quadratic", model.satisfies_quadratic(Ts));

    bool theta_ok = true;
    for (int mth = -2; mth <= 2; ++mth)
        for (int nth = -2; nth <= 2; ++nth)
            if (model.convolve(model.class_theta(mth), model.class_theta(nth)) !=
                model.class_theta(mth + nth))
                theta_ok = false;
    report.add("theta-lattice", theta_ok && model.class_theta(0) == unit);

    // Weyl-symmetrized theta sum is central.
    FixedPointClass z = model.class_theta(1) + model.class_theta(-1);
    bool central = model.convolve(z, Ts) == model.convolve(Ts, z);
    for (int nth = -2; nth <= 2; ++nth)
        central = central && model.convolve(z, model.class_theta(nth)) ==
                                 model.convolve(model.class_theta(nth), z);
    report.add("symmetrized-theta-central", central);

    // Associativity over all words of length <= 4 in the generator set.
    std::vector<FixedPointClass> gens = {Ts, model.class_theta(1), model.class_theta(-1)};
    std::vector<FixedPointClass> words = {unit};
    for (int len = 0; len < 2; ++len) {
        std::vector<FixedPointClass> next;
        for (const auto& w : words)
            for (const auto& g : gens) next.push_back(model.convolve(w, g));
        words = next;
    }
    bool assoc = true;
    for (const auto& a : gens)
        for (const auto& b : words)
            for (const auto& c : gens)
                if (model.convolve(model.convolve(a, b), c) !=
                    model.convolve(a, model.convolve(b, c)))
                    assoc = false;
    report.add("associativity-words", assoc);

    // Algebra map property against the Hecke module on SL2.
    const RootDatum* sl2 = RootDatum::preset("SL2");
    std::vector<ExtAffineElement> pool;
    {
        std::vector<ExtAffineElement> gens_w;
        for (int a = 0; a <= 1; ++a) gens_w.push_back(ExtAffineElement::affine_simple(sl2, a));
        pool.push_back(ExtAffineElement::identity(sl2));
        std::set<std::vector<std::int64_t>> seen = {pool[0].key()};
        for (std::size_t h = 0; h < pool.size(); ++h) {
            if (wa_length(pool[h]) >= 3) continue;
            for (const auto& s : gens_w) {
                auto y = pool[h] * s;
                if (seen.insert(y.key()).second) pool.push_back(y);
            }
        }
    }
    bool algebra_map = true;
    std::string counterexample;
    for (const auto& x : pool)
        for (const auto& y : pool) {
            FixedPointClass lhs =
                model.convolve(hecke_image(model, HeckeElement::basis(x)),
                               hecke_image(model, HeckeElement::basis(y)));
            FixedPointClass rhs =
                hecke_image(model, HeckeElement::basis(x) * HeckeElement::basis(y));
            if (lhs != rhs && algebra_map) {
                algebra_map = false;
                counterexample = "T_x T_y with lengths " + std::to_string(wa_length(x)) + "," +
                                 std::to_string(wa_length(y));
            }
        }
    report.add("hecke-algebra-map", algebra_map, counterexample);

    // Weyl symmetry is an algebra involution (it fixes the unit, T_s and
    // the diagonal classes entrywise).
    bool invol = model.weyl_involution(unit) == unit && model.weyl_involution(Ts) == Ts;
    for (const auto& a : gens) {
        invol = invol && model.weyl_involution(model.weyl_involution(a)) == a;
        for (const auto& b : gens)
            invol = invol && model.weyl_involution(model.convolve(a, b)) ==
                                 model.convolve(model.weyl_involution(a),
                                                model.weyl_involution(b));
    }
    report.add("weyl-involution", invol);

    // Integrality: products of genuine sheaf classes have Laurent entries.
    bool integral = unit.entries_are_laurent() && Ts.entries_are_laurent();
    FixedPointClass acc = unit;
    for (int i = 0; i < 3; ++i) {
        acc = model.convolve(acc, Ts);
        integral = integral && acc.entries_are_laurent();
    }
    integral = integral && model.convolve(model.class_theta(1), Ts).entries_are_laurent();
    report.add("integrality", integral);

    if (!report.all_pass)
        report.add("summary", false, "model inconsistent under this convention");
    return report;
}

inline void require_model_consistent(QConvention conv = QConvention::a) {
    auto report = hecke_model_check(conv);
    if (report.all_pass) return;
    for (const auto& e : report.entries)
        if (!e.pass) throw ModelInconsistent(e.name + (e.detail.empty() ? "" : ": " + e.detail));
}

}  // namespace springer::sl2
