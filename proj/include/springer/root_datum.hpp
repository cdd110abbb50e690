#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "springer/errors.hpp"
#include "springer/linalg.hpp"

namespace springer {

// Root datum of finite type: character/cocharacter lattices Z^cochar_rank
// with the dot-product pairing, simple roots in X^*, simple coroots in X_*.
// Cartan convention: cartan(i, j) = <alpha_j, alpha_i^vee>.
class RootDatum {
public:
    std::string name;
    int cochar_rank = 0;
    int ssrank = 0;
    IntMatrix cartan;
    std::vector<IntVector> simple_roots;
    std::vector<IntVector> simple_coroots;

    // Z-basis of X_* consisting of dominant cocharacters; canonical
    // dominant splits read off signs of coordinates in this basis.
    std::vector<IntVector> dominant_basis;

    // Length-zero subgroup bookkeeping: class(lambda) = f . lambda mod m
    // (m = 0 means infinite cyclic, m = 1 means trivial), with a generator
    // written as a translation part plus a finite word.
    IntVector omega_functional;
    long omega_modulus = 1;
    IntVector omega_gen_translation;
    std::vector<int> omega_gen_word;  // 1-based simple indices

    // Derived once at construction.
    std::vector<IntVector> positive_roots;
    std::vector<IntVector> positive_coroots;
    int highest_root_index = -1;  // index into positive_roots, -1 if none
    IntMatrix dominant_basis_inv; // inverse of the column matrix of dominant_basis

    static std::int64_t pair(const IntVector& character, const IntVector& cocharacter) {
        return character.dot(cocharacter);
    }

    // Reflection matrix of simple i acting on the cocharacter lattice.
    IntMatrix simple_reflection_cochar(int i) const {
        IntMatrix m = IntMatrix::Identity(cochar_rank, cochar_rank);
        m -= simple_coroots[i] * simple_roots[i].transpose();
        return m;
    }

    bool is_dominant(const IntVector& cochar) const {
        for (int i = 0; i < ssrank; ++i)
            if (pair(simple_roots[i], cochar) < 0) return false;
        return true;
    }

    bool root_is_positive(const IntVector& root) const {
        return positive_root_set_.count(key_of(root)) > 0;
    }

    long omega_class(const IntVector& cochar) const {
        long c = static_cast<long>(omega_functional.dot(cochar));
        if (omega_modulus > 0) c = ((c % omega_modulus) + omega_modulus) % omega_modulus;
        return c;
    }

    void finalize();  // computes derived data and validates invariants

    static const RootDatum* preset(const std::string& name);
    static std::vector<std::string> preset_names();
    // Parses the JSON encoding used by the data/ files; caller owns the result.
    static std::unique_ptr<RootDatum> from_json_text(const std::string& text);
    // Directory searched first for datum files (the CLI --data flag).
    static void set_data_directory(const std::string& dir);

private:
    static std::vector<std::int64_t> key_of(const IntVector& v) {
        return std::vector<std::int64_t>(v.data(), v.data() + v.size());
    }
    std::set<std::vector<std::int64_t>> positive_root_set_;
};

inline void RootDatum::finalize() {
    if (static_cast<int>(simple_roots.size()) != ssrank ||
        static_cast<int>(simple_coroots.size()) != ssrank)
        throw DomainError("BadRootDatum", name + ": simple root/coroot count mismatch");
    for (int i = 0; i < ssrank; ++i)
        for (int j = 0; j < ssrank; ++j)
            if (pair(simple_roots[j], simple_coroots[i]) != cartan(i, j))
                throw DomainError("BadRootDatum",
                                  name + ": pairing does not reproduce the Cartan matrix");
    for (int i = 0; i < ssrank; ++i)
        if (cartan(i, i) != 2)
            throw DomainError("BadRootDatum", name + ": Cartan diagonal must be 2");

    // Positive roots by reflection closure; coordinates over simple roots
    // stay all-nonnegative exactly for positive roots.
    struct RootRec {
        IntVector root, coroot, coords;
    };
    std::vector<RootRec> pool;
    std::set<std::vector<std::int64_t>> seen;
    for (int i = 0; i < ssrank; ++i) {
        RootRec r{simple_roots[i], simple_coroots[i], IntVector::Zero(ssrank)};
        r.coords[i] = 1;
        pool.push_back(r);
        seen.insert(key_of(r.root));
    }
    std::vector<IntMatrix> refl_cochar(ssrank), refl_char(ssrank);
    for (int i = 0; i < ssrank; ++i) {
        refl_cochar[i] = simple_reflection_cochar(i);
        refl_char[i] = IntMatrix::Identity(cochar_rank, cochar_rank) -
                       simple_roots[i] * simple_coroots[i].transpose();
    }
    for (std::size_t head = 0; head < pool.size(); ++head) {
        RootRec cur = pool[head];
        for (int j = 0; j < ssrank; ++j) {
            RootRec nxt;
            nxt.root = refl_char[j] * cur.root;
            nxt.coroot = refl_cochar[j] * cur.coroot;
            std::int64_t p = 0;
            for (int k = 0; k < ssrank; ++k) p += cur.coords[k] * cartan(j, k);
            nxt.coords = cur.coords;
            nxt.coords[j] -= p;
            if (seen.insert(key_of(nxt.root)).second) pool.push_back(nxt);
            if (pool.size() > 4096)
                throw DomainError("BadRootDatum", name + ": root system is not finite");
        }
    }
    positive_roots.clear();
    positive_coroots.clear();
    std::int64_t best_height = -1;
    for (const auto& r : pool) {
        bool pos = true;
        for (int k = 0; k < ssrank; ++k)
            if (r.coords[k] < 0) pos = false;
        if (!pos) continue;
        positive_roots.push_back(r.root);
        positive_coroots.push_back(r.coroot);
        std::int64_t h = r.coords.sum();
        if (h > best_height) {
            best_height = h;
            highest_root_index = static_cast<int>(positive_roots.size()) - 1;
        }
        positive_root_set_.insert(key_of(r.root));
    }

    // Dominant basis must be a Z-basis of dominant cocharacters.
    if (static_cast<int>(dominant_basis.size()) != cochar_rank)
        throw DomainError("BadRootDatum", name + ": dominant basis must have full rank");
    IntMatrix b(cochar_rank, cochar_rank);
    for (int j = 0; j < cochar_rank; ++j) b.col(j) = dominant_basis[j];
    for (const auto& v : dominant_basis)
        if (!is_dominant(v))
            throw DomainError("BadRootDatum", name + ": dominant basis vector not dominant");
    // Integer inverse via rational elimination; determinant must be a unit.
    RationalMatrix rb = rational_zero_matrix(cochar_rank, cochar_rank);
    for (int i = 0; i < cochar_rank; ++i)
        for (int j = 0; j < cochar_rank; ++j) rb(i, j) = rational(b(i, j));
    RationalMatrix inv = rational_identity(cochar_rank);
    for (int col = 0, row = 0; col < cochar_rank; ++col, ++row) {
        int piv = -1;
        for (int i = row; i < cochar_rank; ++i)
            if (rb(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw DomainError("BadRootDatum", name + ": dominant basis is singular");
        rb.row(piv).swap(rb.row(row));
        inv.row(piv).swap(inv.row(row));
        Rational lead = rb(row, col);
        for (int j = 0; j < cochar_rank; ++j) {
            rb(row, j) /= lead;
            inv(row, j) /= lead;
        }
        for (int i = 0; i < cochar_rank; ++i) {
            if (i == row || rb(i, col) == 0) continue;
            Rational f = rb(i, col);
            for (int j = 0; j < cochar_rank; ++j) {
                rb(i, j) -= f * rb(row, j);
                inv(i, j) -= f * inv(row, j);
            }
        }
    }
    dominant_basis_inv.resize(cochar_rank, cochar_rank);
    for (int i = 0; i < cochar_rank; ++i)
        for (int j = 0; j < cochar_rank; ++j) {
            if (!is_integer(inv(i, j)))
                throw DomainError("BadRootDatum", name + ": dominant basis is not a Z-basis");
            dominant_basis_inv(i, j) = static_cast<std::int64_t>(inv(i, j).get_num().get_si());
        }
}

}  // namespace springer
