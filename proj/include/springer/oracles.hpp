#pragma once

// Independent reference implementations used by the verification suites.
// Everything here is deliberately built from first principles (group
// multiplication, word search, brute conjugacy) rather than through the
// algebra implementations they check.

#include <map>
#include <set>

#include "springer/hecke.hpp"
#include "springer/weyl.hpp"

namespace springer::oracles {

// Group algebra Q[W_a] built directly on wa_multiply.
struct GroupAlgebraElement {
    const RootDatum* datum;
    std::map<ExtAffineElement, Rational> support;

    static GroupAlgebraElement basis(const ExtAffineElement& x) {
        return {x.datum(), {{x, Rational(1)}}};
    }

    void add(const ExtAffineElement& x, const Rational& c) {
        if (c == 0) return;
        auto it = support.find(x);
        if (it == support.end()) {
            support.emplace(x, c);
        } else {
            it->second += c;
            if (it->second == 0) support.erase(it);
        }
    }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b) {
        GroupAlgebraElement r{a.datum, {}};
        for (const auto& [x, cx] : a.support)
            for (const auto& [y, cy] : b.support) r.add(x * y, cx * cy);
        return r;
    }

    bool operator==(const GroupAlgebraElement& o) const {
        return datum == o.datum && support == o.support;
    }
};

inline GroupAlgebraElement to_group_algebra(const SpecializedElement& s) {
    GroupAlgebraElement g{s.datum, {}};
    for (const auto& [x, c] : s.support) g.add(x, c);
    return g;
}

// Breadth-first word lengths over the affine simple generators, extended to
// the whole group by the length-zero coset representatives.
class BfsLengthOracle {
public:
    BfsLengthOracle(const RootDatum* rd, long radius) : rd_(rd), radius_(radius) {
        std::vector<ExtAffineElement> gens;
        for (int a = 0; a <= rd->ssrank; ++a)
            gens.push_back(ExtAffineElement::affine_simple(rd, a));
        std::vector<ExtAffineElement> frontier = {ExtAffineElement::identity(rd)};
        dist_[frontier[0].key()] = 0;
        for (long d = 1; d <= radius; ++d) {
            std::vector<ExtAffineElement> next;
            for (const auto& x : frontier)
                for (const auto& s : gens) {
                    ExtAffineElement y = x * s;
                    if (dist_.emplace(y.key(), d).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
    }

    // Word length of x, or nullopt if it exceeds the search radius.
    std::optional<long> length(const ExtAffineElement& x) const {
        ExtAffineElement y = omega_part(x).inverse() * x;
        auto it = dist_.find(y.key());
        if (it == dist_.end()) return std::nullopt;
        return it->second;
    }

    long radius() const { return radius_; }

private:
    const RootDatum* rd_;
    long radius_;
    std::map<std::vector<std::int64_t>, long> dist_;
};

}  // namespace springer::oracles
