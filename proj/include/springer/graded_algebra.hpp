#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "springer/errors.hpp"
#include "springer/linalg.hpp"

namespace springer {

// Finite-dimensional truncation of a graded algebra with a Gm-grading
// (the "weight"): basis elements carry (cohomological degree, weight), and
// products of total weight beyond the truncation bound are dropped, which
// is the quotient by the ideal of high weights.
class GradedAlgebra {
public:
    struct Basis {
        std::string label;
        int degree = 0;
        int weight = 0;
    };

    using Combination = std::vector<std::pair<int, Rational>>;  // (basis index, coeff)

    std::vector<Basis> basis;
    int unit = 0;
    int truncation_weight = 0;
    std::map<std::pair<int, int>, Combination> products;  // (i, j) -> sum

    const Combination& product(int i, int j) const {
        static const Combination empty;
        auto it = products.find({i, j});
        return it == products.end() ? empty : it->second;
    }

    int dim() const { return static_cast<int>(basis.size()); }

    bool weights_nonnegative() const {
        for (const auto& b : basis)
            if (b.weight < 0) return false;
        return true;
    }

    // Unit laws, grading additivity, and associativity on all stored triples
    // (within truncation the three-fold products are either all present or
    // all dropped, since products are weight-homogeneous).
    void validate() const {
        for (int i = 0; i < dim(); ++i) {
            check_equal(product(unit, i), {{i, Rational(1)}}, "left unit law");
            check_equal(product(i, unit), {{i, Rational(1)}}, "right unit law");
        }
        for (const auto& [key, comb] : products) {
            const Basis& a = basis[key.first];
            const Basis& b = basis[key.second];
            for (const auto& [k, c] : comb) {
                (void)c;
                if (basis[k].degree != a.degree + b.degree ||
                    basis[k].weight != a.weight + b.weight)
                    throw DomainError("BadAlgebra", "product is not graded");
            }
        }
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                for (int k = 0; k < dim(); ++k) {
                    if (basis[i].weight + basis[j].weight + basis[k].weight >
                        truncation_weight)
                        continue;
                    Combination lhs = multiply(product(i, j), k, true);
                    Combination rhs = multiply(product(j, k), i, false);
                    check_equal(lhs, rhs, "associativity");
                }
    }

    Combination multiply(const Combination& comb, int other, bool other_on_right) const {
        std::map<int, Rational> acc;
        for (const auto& [m, c] : comb) {
            const Combination& p = other_on_right ? product(m, other) : product(other, m);
            for (const auto& [k, d] : p) {
                acc[k] += c * d;
            }
        }
        Combination out;
        for (const auto& [k, c] : acc)
            if (c != 0) out.emplace_back(k, c);
        return out;
    }

private:
    static void check_equal(const Combination& a, const Combination& b, const char* what) {
        std::map<int, Rational> m;
        for (const auto& [k, c] : a) m[k] += c;
        for (const auto& [k, c] : b) m[k] -= c;
        for (const auto& [k, c] : m) {
            (void)k;
            if (c != 0) throw DomainError("BadAlgebra", std::string(what) + " fails");
        }
    }
};

// Truncated polynomial algebra on `rank` generators of the given degree and
// weight; the default (degree 2, weight 1) is the symmetric algebra on a
// shifted Cartan used throughout.
inline GradedAlgebra sym_algebra(int rank, int max_weight, int gen_degree = 2,
                                 int gen_weight = 1) {
    if (gen_weight <= 0) throw DomainError("BadAlgebra", "generator weight must be positive");
    if (gen_degree % 2 != 0)
        throw DomainError("BadAlgebra", "odd generators need the exterior algebra, not Sym");
    GradedAlgebra A;
    A.truncation_weight = max_weight;
    // Monomials = exponent vectors with total weight <= max_weight.
    std::vector<std::vector<int>> monos;
    std::vector<int> cur(rank, 0);
    std::function<void(int, int)> gen = [&](int pos, int left) {
        if (pos == rank) {
            monos.push_back(cur);
            return;
        }
        for (int e = 0; e * gen_weight <= left; ++e) {
            cur[pos] = e;
            gen(pos + 1, left - e * gen_weight);
        }
        cur[pos] = 0;
    };
    gen(0, max_weight);
    std::sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
        int wa = 0, wb = 0;
        for (int x : a) wa += x;
        for (int x : b) wb += x;
        if (wa != wb) return wa < wb;
        return a < b;
    });
    std::map<std::vector<int>, int> index;
    for (const auto& m : monos) {
        int w = 0;
        for (int x : m) w += x;
        std::string label = "x^(";
        for (std::size_t i = 0; i < m.size(); ++i)
            label += std::to_string(m[i]) + (i + 1 < m.size() ? "," : "");
        label += ")";
        index[m] = A.dim();
        A.basis.push_back({label, w * gen_degree, w * gen_weight});
    }
    A.unit = index.at(std::vector<int>(rank, 0));
    for (int i = 0; i < A.dim(); ++i) {
        for (int j = 0; j < A.dim(); ++j) {
            if (A.basis[i].weight + A.basis[j].weight > max_weight) continue;
            std::vector<int> sum(rank);
            for (int k = 0; k < rank; ++k) sum[k] = monos[i][k] + monos[j][k];
            A.products[{i, j}] = {{index.at(sum), Rational(1)}};
        }
    }
    A.validate();
    return A;
}

inline GradedAlgebra trivial_algebra() {
    GradedAlgebra A;
    A.basis.push_back({"1", 0, 0});
    A.unit = 0;
    A.truncation_weight = 0;
    A.products[{0, 0}] = {{0, Rational(1)}};
    A.validate();
    return A;
}

// Tensor product truncated at the given weight.  All inputs here are even,
// so no Koszul signs enter the product.
inline GradedAlgebra tensor_algebra(const GradedAlgebra& A, const GradedAlgebra& B,
                                    int max_weight) {
    for (const auto& b : A.basis)
        if (b.degree % 2 != 0)
            throw DomainError("BadAlgebra", "tensor_algebra assumes even degrees");
    for (const auto& b : B.basis)
        if (b.degree % 2 != 0)
            throw DomainError("BadAlgebra", "tensor_algebra assumes even degrees");
    GradedAlgebra T;
    T.truncation_weight = max_weight;
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < B.dim(); ++j) {
            if (A.basis[i].weight + B.basis[j].weight > max_weight) continue;
            index[{i, j}] = T.dim();
            T.basis.push_back({A.basis[i].label + "*" + B.basis[j].label,
                               A.basis[i].degree + B.basis[j].degree,
                               A.basis[i].weight + B.basis[j].weight});
        }
    T.unit = index.at({A.unit, B.unit});
    for (const auto& [pi, ti] : index)
        for (const auto& [pj, tj] : index) {
            if (T.basis[ti].weight + T.basis[tj].weight > max_weight) continue;
            GradedAlgebra::Combination comb;
            for (const auto& [ka, ca] : A.product(pi.first, pj.first))
                for (const auto& [kb, cb] : B.product(pi.second, pj.second)) {
                    auto it = index.find({ka, kb});
                    if (it == index.end()) continue;
                    comb.emplace_back(it->second, ca * cb);
                }
            if (!comb.empty()) T.products[{ti, tj}] = comb;
        }
    T.validate();
    return T;
}

}  // namespace springer
