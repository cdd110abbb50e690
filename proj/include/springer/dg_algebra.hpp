#pragma once

#include <map>
#include <string>
#include <vector>

#include "springer/errors.hpp"
#include "springer/linalg.hpp"

namespace springer {

// Free graded-commutative dg algebra on weighted generators; odd-degree
// generators square to zero by the Koszul rule.  The differential is given
// on generators, raises cohomological degree by one, preserves weight, and
// extends by the graded Leibniz rule.
class DgAlgebraSpec {
public:
    struct Generator {
        std::string name;
        int degree = 0;
        int weight = 1;
    };

    using Monomial = std::vector<int>;  // exponents per generator
    using Element = std::map<Monomial, Rational>;

    std::vector<Generator> generators;
    std::map<int, Element> differential;  // generator index -> image

    int count() const { return static_cast<int>(generators.size()); }

    Monomial unit_monomial() const { return Monomial(count(), 0); }

    Monomial generator_monomial(int i) const {
        Monomial m = unit_monomial();
        m[i] = 1;
        return m;
    }

    int degree_of(const Monomial& m) const {
        int d = 0;
        for (int i = 0; i < count(); ++i) d += m[i] * generators[i].degree;
        return d;
    }

    int weight_of(const Monomial& m) const {
        int w = 0;
        for (int i = 0; i < count(); ++i) w += m[i] * generators[i].weight;
        return w;
    }

    bool monomial_valid(const Monomial& m) const {
        for (int i = 0; i < count(); ++i) {
            if (m[i] < 0) return false;
            if (generators[i].degree % 2 != 0 && m[i] > 1) return false;  // odd^2 = 0
        }
        return true;
    }

    // Product of monomials with the Koszul sign from interleaving their
    // odd factors into canonical generator order.
    static void add_to(Element& e, const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = e.find(m);
        if (it == e.end()) {
            e.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) e.erase(it);
        }
    }

    Element multiply_monomials(const Monomial& a, const Monomial& b) const {
        Monomial sum(count());
        for (int i = 0; i < count(); ++i) sum[i] = a[i] + b[i];
        if (!monomial_valid(sum)) return {};
        long odd_inversions = 0;
        for (int i = 0; i < count(); ++i) {
            if (generators[i].degree % 2 == 0 || a[i] == 0) continue;
            for (int j = 0; j < i; ++j) {
                if (generators[j].degree % 2 == 0) continue;
                odd_inversions += static_cast<long>(a[i]) * b[j];
            }
        }
        Element out;
        add_to(out, sum, odd_inversions % 2 == 0 ? Rational(1) : Rational(-1));
        return out;
    }

    Element multiply(const Element& x, const Element& y) const {
        Element out;
        for (const auto& [ma, ca] : x)
            for (const auto& [mb, cb] : y)
                for (const auto& [m, c] : multiply_monomials(ma, mb)) add_to(out, m, ca * cb * c);
        return out;
    }

    // Graded Leibniz extension of the generator differential.
    Element d(const Monomial& m) const {
        Element out;
        // Walk the canonical factor sequence g_0^{e_0} g_1^{e_1} ...
        int prefix_degree = 0;
        for (int i = 0; i < count(); ++i) {
            for (int rep = 0; rep < m[i]; ++rep) {
                auto it = differential.find(i);
                if (it != differential.end() && !it->second.empty()) {
                    // left part: generators < i plus `rep` copies of g_i
                    Monomial left = unit_monomial();
                    for (int j = 0; j < i; ++j) left[j] = m[j];
                    left[i] = rep;
                    Monomial right = unit_monomial();
                    right[i] = m[i] - rep - 1;
                    for (int j = i + 1; j < count(); ++j) right[j] = m[j];
                    int sign = (prefix_degree % 2 == 0) ? 1 : -1;
                    Element mid = it->second;
                    Element lm;
                    add_to(lm, left, Rational(sign));
                    Element lmid = multiply(lm, mid);
                    Element rme;
                    add_to(rme, right, Rational(1));
                    for (const auto& [mm, cc] : multiply(lmid, rme)) add_to(out, mm, cc);
                }
                prefix_degree += generators[i].degree;
            }
        }
        return out;
    }

    Element d(const Element& x) const {
        Element out;
        for (const auto& [m, c] : x) {
            for (const auto& [mm, cc] : d(m)) add_to(out, mm, c * cc);
        }
        return out;
    }

    // Degree/weight homogeneity of d plus d^2 = 0 on generators.
    void validate() const {
        for (const auto& g : generators)
            if (g.weight < 1)
                throw DomainError("BadDgAlgebra",
                                  "generator weights must be positive for finite windows");
        for (const auto& [i, img] : differential) {
            for (const auto& [m, c] : img) {
                (void)c;
                if (!monomial_valid(m)) throw DomainError("BadDgAlgebra", "invalid image monomial");
                if (degree_of(m) != generators[i].degree + 1)
                    throw DomainError("BadDgAlgebra", "differential must raise degree by 1");
                if (weight_of(m) != generators[i].weight)
                    throw DomainError("BadDgAlgebra", "differential must preserve weight");
            }
        }
        for (int i = 0; i < count(); ++i) {
            auto it = differential.find(i);
            if (it == differential.end()) continue;
            if (!d(it->second).empty())
                throw DifferentialNotSquareZero("d^2 != 0 on generator " + generators[i].name);
        }
    }
};

// Cohomology ranks per (degree, weight) of the free graded-commutative dg
// algebra, over all monomials of weight up to the window.
inline std::map<std::pair<int, int>, long> dg_cohomology(const DgAlgebraSpec& spec,
                                                         int weight_window) {
    spec.validate();
    // Enumerate monomials of weight <= window.
    std::vector<DgAlgebraSpec::Monomial> monos;
    DgAlgebraSpec::Monomial cur = spec.unit_monomial();
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == spec.count()) {
            monos.push_back(cur);
            return;
        }
        const auto& g = spec.generators[pos];
        int emax = g.degree % 2 != 0 ? 1 : left / g.weight;
        for (int e = 0; e <= emax && e * g.weight <= left; ++e) {
            cur[pos] = e;
            rec(pos + 1, left - e * g.weight);
        }
        cur[pos] = 0;
    };
    rec(0, weight_window);

    // Group by (degree, weight).
    std::map<std::pair<int, int>, std::vector<DgAlgebraSpec::Monomial>> groups;
    std::map<DgAlgebraSpec::Monomial, std::pair<std::pair<int, int>, int>> where;
    for (const auto& m : monos) {
        auto key = std::make_pair(spec.degree_of(m), spec.weight_of(m));
        where[m] = {key, static_cast<int>(groups[key].size())};
        groups[key].push_back(m);
    }

    auto dmatrix = [&](std::pair<int, int> key) {
        auto src = groups.find(key);
        auto tgt = groups.find({key.first + 1, key.second});
        long rows = tgt == groups.end() ? 0 : static_cast<long>(tgt->second.size());
        long cols = src == groups.end() ? 0 : static_cast<long>(src->second.size());
        RationalMatrix mat = rational_zero_matrix(rows, cols);
        if (src == groups.end()) return mat;
        for (long c = 0; c < cols; ++c) {
            for (const auto& [img, coeff] : spec.d(src->second[c])) {
                auto it = where.find(img);
                if (it == where.end())
                    throw DomainError("BadDgAlgebra", "differential leaves the window");
                mat(it->second.second, c) = coeff;
            }
        }
        return mat;
    };

    std::map<std::pair<int, int>, long> out;
    for (const auto& [key, basis] : groups) {
        (void)basis;
        RationalMatrix d_out = dmatrix(key);
        RationalMatrix d_in = dmatrix({key.first - 1, key.second});
        long h = homology_rank(d_in, d_out);
        if (h != 0) out[key] = h;
    }
    return out;
}

// The worked example: k[t, eps] with |t| = 0, |eps| = -1, d(eps) = n t.
inline DgAlgebraSpec dual_numbers_spec(const Rational& n) {
    DgAlgebraSpec spec;
    spec.generators.push_back({"t", 0, 1});
    spec.generators.push_back({"eps_t", -1, 1});
    if (n != 0) {
        DgAlgebraSpec::Element img;
        DgAlgebraSpec::add_to(img, spec.generator_monomial(0), n);
        spec.differential[1] = img;
    }
    spec.validate();
    return spec;
}

}  // namespace springer
