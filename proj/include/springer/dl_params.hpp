#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "springer/errors.hpp"
#include "springer/linalg.hpp"

namespace springer::dl {

// ---------------------------------------------------------------------------
// GL_n: q-commuting pairs (s, N), s semisimple, s N s^{-1} = q N, classified
// by multisegments.  Eigenvalues are formal symbols a_i times integer powers
// of q; all orbit structure depends only on the q-shift relations.
// ---------------------------------------------------------------------------

struct QMode {
    bool generic = true;
    Rational value = Rational(0);

    // Over Q the only roots of unity are +-1, so the exact check is exact.
    void require_not_root_of_unity() const {
        if (generic) return;
        if (value == 0 || value == 1 || value == -1)
            throw RootOfUnityQ("q must avoid 0 and roots of unity, got " + to_string(value));
    }

    static QMode generic_q() { return {}; }
    static QMode exact(const Rational& v) { return {false, v}; }
};

// Segment [start, start+length) of q-powers on one eigenvalue orbit.
struct Segment {
    int orbit = 0;
    int start = 0;
    int length = 1;

    int end() const { return start + length - 1; }  // inclusive
    bool covers(int p) const { return start <= p && p <= end(); }

    auto key() const { return std::tie(orbit, start, length); }
    bool operator<(const Segment& o) const { return key() < o.key(); }
    bool operator==(const Segment& o) const { return key() == o.key(); }
};

// A parameter class: sorted multiset of segments.
struct DLParameterGLn {
    std::vector<Segment> segments;

    void normalize() { std::sort(segments.begin(), segments.end()); }
    int total_length() const {
        int n = 0;
        for (const auto& s : segments) n += s.length;
        return n;
    }
    bool operator<(const DLParameterGLn& o) const { return segments < o.segments; }
    bool operator==(const DLParameterGLn& o) const { return segments == o.segments; }
};

// Eigenvalue configuration of s: multiplicity of a_orbit * q^power.
struct EigenvalueConfig {
    // (orbit, power) -> multiplicity >= 1
    std::map<std::pair<int, int>, int> mult;

    int dimension() const {
        int n = 0;
        for (const auto& [k, m] : mult) {
            (void)k;
            n += m;
        }
        return n;
    }

    static EigenvalueConfig chain(int orbit_count, const std::vector<int>& sizes) {
        EigenvalueConfig c;
        for (int o = 0; o < orbit_count; ++o)
            for (int p = 0; p < sizes[o]; ++p) c.mult[{o, p}] = 1;
        return c;
    }
};

namespace detail {

// All multisegments on one orbit realizing the coverage profile
// m : power -> multiplicity.  Sweeps powers left to right, deciding how
// many open segments close and how many new ones start.
inline void orbit_multisegments(int orbit, const std::map<int, int>& m,
                                std::vector<std::vector<Segment>>& out) {
    std::vector<int> powers;
    for (const auto& [p, cnt] : m) {
        (void)cnt;
        powers.push_back(p);
    }
    std::vector<Segment> acc;
    // opens: start -> count of currently open segments
    std::function<void(std::size_t, std::map<int, int>)> sweep =
        [&](std::size_t idx, std::map<int, int> opens) {
            int total_open = 0;
            for (const auto& [s, c] : opens) {
                (void)s;
                total_open += c;
            }
            if (idx == powers.size()) {
                // close everything
                std::size_t before = acc.size();
                for (const auto& [s, c] : opens)
                    for (int i = 0; i < c; ++i)
                        acc.push_back({orbit, s, powers.back() - s + 1});
                out.push_back(acc);
                acc.resize(before);
                return;
            }
            int p = powers[idx];
            bool contiguous = idx > 0 && powers[idx - 1] == p - 1;
            int need = m.at(p);
            if (!contiguous && total_open > 0) {
                // gap: all opens must close at the previous power
                std::size_t before = acc.size();
                int prev = powers[idx - 1];
                for (const auto& [s, c] : opens)
                    for (int i = 0; i < c; ++i) acc.push_back({orbit, s, prev - s + 1});
                std::map<int, int> fresh;
                fresh[p] = need;
                std::size_t mark = acc.size();
                (void)mark;
                sweep(idx + 1, fresh);
                acc.resize(before);
                return;
            }
            if (!contiguous) {
                std::map<int, int> fresh;
                fresh[p] = need;
                sweep(idx + 1, fresh);
                return;
            }
            // choose how many to close from each start-group
            std::vector<std::pair<int, int>> groups(opens.begin(), opens.end());
            std::vector<int> close(groups.size(), 0);
            std::function<void(std::size_t, int)> choose = [&](std::size_t g, int closed) {
                if (g == groups.size()) {
                    int kept = total_open - closed;
                    int fresh = need - kept;
                    if (fresh < 0) return;
                    std::size_t before = acc.size();
                    std::map<int, int> next;
                    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
                        int keep = groups[gi].second - close[gi];
                        if (keep > 0) next[groups[gi].first] = keep;
                        for (int i = 0; i < close[gi]; ++i)
                            acc.push_back({orbit, groups[gi].first, (p - 1) - groups[gi].first + 1});
                    }
                    if (fresh > 0) next[p] += fresh;
                    sweep(idx + 1, next);
                    acc.resize(before);
                    return;
                }
                for (int c = 0; c <= groups[g].second; ++c) {
                    close[g] = c;
                    choose(g + 1, closed + c);
                }
                close[g] = 0;
            };
            choose(0, 0);
        };
    sweep(0, {});
}

}  // namespace detail

// Complete duplicate-free list of conjugacy classes of q-commuting pairs
// with the given eigenvalue configuration for s.
inline std::vector<DLParameterGLn> enumerate_config(const EigenvalueConfig& config,
                                                    const QMode& q) {
    q.require_not_root_of_unity();
    std::set<int> orbits;
    for (const auto& [k, m] : config.mult) {
        (void)m;
        orbits.insert(k.first);
    }
    std::vector<std::vector<std::vector<Segment>>> per_orbit;
    for (int o : orbits) {
        std::map<int, int> m;
        for (const auto& [k, c] : config.mult)
            if (k.first == o) m[k.second] = c;
        std::vector<std::vector<Segment>> lists;
        detail::orbit_multisegments(o, m, lists);
        per_orbit.push_back(std::move(lists));
    }
    std::vector<DLParameterGLn> out;
    std::vector<std::size_t> pick(per_orbit.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t oi) {
        if (oi == per_orbit.size()) {
            DLParameterGLn p;
            for (std::size_t k = 0; k < per_orbit.size(); ++k)
                for (const auto& s : per_orbit[k][pick[k]]) p.segments.push_back(s);
            p.normalize();
            out.push_back(std::move(p));
            return;
        }
        for (std::size_t i = 0; i < per_orbit[oi].size(); ++i) {
            pick[oi] = i;
            rec(oi + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Shape-level enumeration for (n, number of orbits): each orbit carries the
// multiplicity-one chain of its size; orbits are unlabeled, so sizes run
// over partitions of n with the stated number of parts.
inline std::vector<std::pair<std::vector<int>, DLParameterGLn>> enumerate_gln(
    int n, const QMode& q, int orbit_budget) {
    q.require_not_root_of_unity();
    if (n < 1 || orbit_budget < 1 || orbit_budget > n)
        throw DomainError("BadEnumeration", "need 1 <= orbits <= n");
    // partitions of n into exactly orbit_budget parts (weakly decreasing)
    std::vector<std::vector<int>> partitions;
    std::vector<int> cur;
    std::function<void(int, int, int)> parts = [&](int left, int maxpart, int slots) {
        if (slots == 0) {
            if (left == 0) partitions.push_back(cur);
            return;
        }
        for (int p = std::min(left - slots + 1, maxpart); p >= 1; --p) {
            cur.push_back(p);
            parts(left - p, p, slots - 1);
            cur.pop_back();
        }
    };
    parts(n, n, orbit_budget);

    std::vector<std::pair<std::vector<int>, DLParameterGLn>> out;
    for (const auto& sizes : partitions) {
        auto config = EigenvalueConfig::chain(static_cast<int>(sizes.size()), sizes);
        for (auto& cls : enumerate_config(config, q)) out.emplace_back(sizes, cls);
    }
    return out;
}

// GL_n stabilizers of q-commuting pairs are connected, so each class
// carries only the trivial local system and the irreducible count equals
// the class count.
inline long count_irreducibles_gln(int n, const QMode& q, int orbit_budget) {
    return static_cast<long>(enumerate_gln(n, q, orbit_budget).size());
}

inline long count_config_classes(const EigenvalueConfig& config, const QMode& q) {
    return static_cast<long>(enumerate_config(config, q).size());
}

// Independent recursion: ways to cut the multiplicity-one chain of length n
// into consecutive segments; f(n) = sum over first-segment lengths.
inline long chain_segment_count_oracle(int n) {
    std::vector<long> f(static_cast<std::size_t>(n) + 1, 0);
    f[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k; ++l) f[k] += f[k - l];
    return f[n];
}

// Rank fingerprint of a class: rank(N^j : slot (o,p) -> (o,p+j)) counts the
// segments covering both endpoints.
inline std::map<std::tuple<int, int, int>, int> rank_fingerprint(const DLParameterGLn& cls) {
    std::map<std::tuple<int, int, int>, int> fp;
    for (const auto& seg : cls.segments) {
        for (int p = seg.start; p <= seg.end(); ++p)
            for (int j = 1; p + j <= seg.end(); ++j) fp[{seg.orbit, p, j}]++;
    }
    return fp;
}

// Brute-force conjugacy oracle: enumerate 0/1 block matrices N over the
// Hom(V_{(o,p)}, V_{(o,p+1)}) slots and fingerprint them by the ranks of
// all compositions; the set of fingerprints is the set of orbits.
inline std::set<std::map<std::tuple<int, int, int>, int>> brute_force_fingerprints(
    const EigenvalueConfig& config) {
    // slots in order
    std::vector<std::pair<int, int>> slots;
    for (const auto& [k, m] : config.mult) {
        (void)m;
        slots.push_back(k);
    }
    auto dim_of = [&](int o, int p) -> int {
        auto it = config.mult.find({o, p});
        return it == config.mult.end() ? 0 : it->second;
    };
    // arrows between consecutive powers
    struct Arrow {
        int orbit, power, rows, cols;
    };
    std::vector<Arrow> arrows;
    long total_bits = 0;
    for (const auto& [o, p] : slots) {
        int rows = dim_of(o, p + 1);
        int cols = dim_of(o, p);
        if (rows > 0 && cols > 0) {
            arrows.push_back({o, p, rows, cols});
            total_bits += static_cast<long>(rows) * cols;
        }
    }
    if (total_bits > 20)
        throw DomainError("BadEnumeration", "brute-force oracle limited to small grids");
    std::set<std::map<std::tuple<int, int, int>, int>> fingerprints;
    for (long mask = 0; mask < (1L << total_bits); ++mask) {
        // materialize arrow matrices
        std::map<std::pair<int, int>, IntMatrix> mat;
        long bit = 0;
        for (const auto& a : arrows) {
            IntMatrix m = IntMatrix::Zero(a.rows, a.cols);
            for (int r = 0; r < a.rows; ++r)
                for (int c = 0; c < a.cols; ++c) m(r, c) = (mask >> bit++) & 1;
            mat[{a.orbit, a.power}] = m;
        }
        std::map<std::tuple<int, int, int>, int> fp;
        for (const auto& [o, p] : slots) {
            IntMatrix acc = IntMatrix::Identity(dim_of(o, p), dim_of(o, p));
            for (int j = 1;; ++j) {
                auto it = mat.find({o, p + j - 1});
                if (it == mat.end()) break;
                acc = (it->second * acc).eval();
                RationalMatrix rm = rational_zero_matrix(acc.rows(), acc.cols());
                for (Eigen::Index r = 0; r < acc.rows(); ++r)
                    for (Eigen::Index c = 0; c < acc.cols(); ++c) rm(r, c) = rational(acc(r, c));
                int rk = static_cast<int>(rank(rm));
                if (rk > 0) fp[{o, p, j}] = rk;
            }
        }
        fingerprints.insert(fp);
    }
    return fingerprints;
}

// ---------------------------------------------------------------------------
// SL2: the looped Springer resolution table.
// ---------------------------------------------------------------------------

struct LambdaDesc {
    enum class Kind { exact, imaginary_unit, sqrt_q, neg_sqrt_q, generic } kind = Kind::generic;
    Rational value = Rational(0);  // for exact

    static LambdaDesc exact(const Rational& v) { return {Kind::exact, v}; }
    static LambdaDesc i() { return {Kind::imaginary_unit, Rational(0)}; }
    static LambdaDesc sqrtq() { return {Kind::sqrt_q, Rational(0)}; }
    static LambdaDesc generic() { return {Kind::generic, Rational(0)}; }
};

enum class Sl2Regime {
    central_q1,      // lambda = +-1, q = 1
    nodal_qminus1,   // q = -1, lambda^2 = -1
    central_qother,  // lambda = +-1, q != 1
    sqrtq_match,     // lambda^2 = q, q != +-1
    generic_q1,      // q = 1, lambda != +-1
    generic          // everything else
};

inline std::string regime_name(Sl2Regime r) {
    switch (r) {
        case Sl2Regime::central_q1: return "central-q1";
        case Sl2Regime::nodal_qminus1: return "nodal-q-minus-1";
        case Sl2Regime::central_qother: return "central-q-generic";
        case Sl2Regime::sqrtq_match: return "sqrt-q-match";
        case Sl2Regime::generic_q1: return "generic-q1";
        case Sl2Regime::generic: return "generic";
    }
    return "?";
}

enum class NStratum { zero, nonzero, nonzero_upper, nonzero_lower };
enum class ComponentGroup { trivial, z2 };

inline std::string stratum_name(NStratum s) {
    switch (s) {
        case NStratum::zero: return "zero";
        case NStratum::nonzero: return "nonzero";
        case NStratum::nonzero_upper: return "nonzero-upper";
        case NStratum::nonzero_lower: return "nonzero-lower";
    }
    return "?";
}

inline std::string group_name(ComponentGroup g) {
    return g == ComponentGroup::trivial ? "trivial" : "Z/2";
}

struct SL2ParameterRow {
    NStratum n_stratum;
    ComponentGroup component_group;
    ComponentGroup gm_component_group;  // stabilizer inside G x Gm
    std::string geometry_label;
    std::string centralizer;  // "G" or "T"
};

namespace detail {

inline bool lambda_is_pm1(const LambdaDesc& l) {
    return l.kind == LambdaDesc::Kind::exact && (l.value == 1 || l.value == -1);
}

// lambda^2 = q -> upper-triangular n admissible; lambda^2 = q^{-1} -> lower.
inline bool lambda_sq_is(const LambdaDesc& l, const QMode& q, bool inverse) {
    switch (l.kind) {
        case LambdaDesc::Kind::exact:
            if (q.generic) return false;
            return inverse ? (l.value * l.value * q.value == 1)
                           : (l.value * l.value == q.value);
        case LambdaDesc::Kind::imaginary_unit:
            // i^2 = -1 = also its own inverse
            return !q.generic && q.value == -1;
        case LambdaDesc::Kind::sqrt_q:
        case LambdaDesc::Kind::neg_sqrt_q:
            // formal square root of the actual q
            if (!inverse) return true;
            return !q.generic && q.value * q.value == 1;
        case LambdaDesc::Kind::generic:
            return false;
    }
    return false;
}

}  // namespace detail

// A formal square root of q collapses to an exact value when q is 1 (and
// to the imaginary unit when q is -1), keeping the regime map single-valued.
inline LambdaDesc canonicalize_lambda(const LambdaDesc& lambda, const QMode& q) {
    if ((lambda.kind == LambdaDesc::Kind::sqrt_q ||
         lambda.kind == LambdaDesc::Kind::neg_sqrt_q) &&
        !q.generic) {
        if (q.value == 1) return LambdaDesc::exact(Rational(1));
        if (q.value == -1) return LambdaDesc::i();
    }
    return lambda;
}

inline Sl2Regime classify_sl2(const LambdaDesc& lambda_in, const QMode& q) {
    LambdaDesc lambda = canonicalize_lambda(lambda_in, q);
    bool q1 = !q.generic && q.value == 1;
    bool qm1 = !q.generic && q.value == -1;
    bool pm1 = detail::lambda_is_pm1(lambda);
    bool matched = detail::lambda_sq_is(lambda, q, false) ||
                   detail::lambda_sq_is(lambda, q, true);
    if (pm1 && q1) return Sl2Regime::central_q1;
    if (pm1) return Sl2Regime::central_qother;
    if (qm1 && (lambda.kind == LambdaDesc::Kind::imaginary_unit ||
                detail::lambda_sq_is(lambda, q, false)))
        return Sl2Regime::nodal_qminus1;
    if (matched && !q1 && !qm1) return Sl2Regime::sqrtq_match;
    if (q1) return Sl2Regime::generic_q1;
    return Sl2Regime::generic;
}

// Component group of {g in SL2 : g s g^{-1} = s, g n g^{-1} = n} by 2x2
// casework, plus the always-connected version inside SL2 x Gm.
inline ComponentGroup component_group_sl2(const LambdaDesc& lambda_in, const QMode& q,
                                          NStratum n_choice) {
    LambdaDesc lambda = canonicalize_lambda(lambda_in, q);
    bool central = detail::lambda_is_pm1(lambda);
    if (n_choice == NStratum::zero) return ComponentGroup::trivial;
    if (central) {
        // s = +-1, q must be 1 for a nonzero q-commuting n.
        if (q.generic || q.value != 1)
            throw NotQCommuting("nonzero n with central s forces q = 1");
        // Z_{SL2}(E12) = {+-1} x unipotents: two components.
        return ComponentGroup::z2;
    }
    bool upper_ok = detail::lambda_sq_is(lambda, q, false);
    bool lower_ok = detail::lambda_sq_is(lambda, q, true);
    bool ok = (n_choice == NStratum::nonzero_upper || n_choice == NStratum::nonzero)
                  ? upper_ok
                  : false;
    if (n_choice == NStratum::nonzero_lower) ok = lower_ok;
    if (n_choice == NStratum::nonzero) ok = upper_ok || lower_ok;
    if (!ok) throw NotQCommuting("chosen n stratum is empty for this (lambda, q)");
    // s regular: stabilizer of (s, E12) inside T is diag(c, c^{-1}) with
    // c^2 = 1: two components.
    return ComponentGroup::z2;
}

inline ComponentGroup gm_component_group_sl2(const LambdaDesc&, const QMode&, NStratum) {
    // Inside SL2 x Gm the scaling absorbs the sign: stabilizers connect up.
    return ComponentGroup::trivial;
}

inline std::vector<SL2ParameterRow> sl2_table(const LambdaDesc& lambda, const QMode& q) {
    Sl2Regime regime = classify_sl2(lambda, q);
    std::vector<SL2ParameterRow> rows;
    auto push = [&](NStratum ns, ComponentGroup cg, const char* geom, const char* cent) {
        rows.push_back({ns, cg, ComponentGroup::trivial, geom, cent});
    };
    switch (regime) {
        case Sl2Regime::central_q1:
            push(NStratum::zero, ComponentGroup::trivial, "springer-resolution", "G");
            push(NStratum::nonzero, ComponentGroup::z2, "springer-resolution", "G");
            break;
        case Sl2Regime::nodal_qminus1:
            push(NStratum::zero, ComponentGroup::trivial, "nodal-normalization", "T");
            push(NStratum::nonzero_upper, ComponentGroup::z2, "nodal-normalization", "T");
            push(NStratum::nonzero_lower, ComponentGroup::z2, "nodal-normalization", "T");
            break;
        case Sl2Regime::central_qother:
            push(NStratum::zero, ComponentGroup::trivial, "p1-to-pt", "G");
            break;
        case Sl2Regime::sqrtq_match:
            push(NStratum::zero, ComponentGroup::trivial, "a1-cup-pt-to-a1", "T");
            push(NStratum::nonzero, ComponentGroup::z2, "a1-cup-pt-to-a1", "T");
            break;
        case Sl2Regime::generic_q1:
        case Sl2Regime::generic:
            push(NStratum::zero, ComponentGroup::trivial, "pt-cup-pt-to-pt", "T");
            break;
    }
    return rows;
}

}  // namespace springer::dl
