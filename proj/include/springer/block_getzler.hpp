#pragma once

#include <optional>
#include <set>

#include "springer/graded_algebra.hpp"

namespace springer {

// Truncated cyclic/mixed complex of an algebra object in Rep(Gm).  The
// n-simplices are (A^{(n+1) tensors} x k[z,z^-1])^Gm in equivariant mode,
// plain tensors with trivial group otherwise, and the z-evaluated enhanced
// complex in twisted mode.  Normalized chains (interior unit factors
// quotiented) per weight slice vanish above n = weight, which makes each
// slice finite and exact.
//
// Since z has Gm-weight zero, invariance forces total tensor weight zero
// and the equivariant complex is one weight-zero complex per z-power.
// Plain and twisted chains split by total tensor weight, preserved by b
// and B (the twist contributes the scalar q^{wt(a_n)} to the last face).

enum class BgMode { equivariant, plain, twisted };

struct BgOptions {
    BgMode mode = BgMode::plain;
    Rational q = Rational(1);  // twisted mode only
    int simplicial_bound = 6;  // N
    int weight_window = 4;     // max total tensor weight (plain/twisted)
    int z_window = 3;          // |z-power| bound reported in equivariant mode
};

class MixedComplexTruncation {
public:
    struct Level {
        std::vector<std::vector<int>> tensors;  // (a_0..a_n), interior non-unit
        std::map<std::vector<int>, int> index;
        std::vector<int> internal_degree;
    };

    struct Slice {
        int weight = 0;
        std::vector<Level> levels;      // levels[n], n = 0..N
        std::vector<RationalMatrix> b;  // b[n]: C_n -> C_{n-1}
        std::vector<RationalMatrix> B;  // B[n]: C_n -> C_{n+1}; empty in twisted mode
        bool exact = true;
    };

    GradedAlgebra algebra;
    BgOptions options;
    std::vector<Slice> slices;

    const Slice* slice(int weight) const {
        for (const auto& s : slices)
            if (s.weight == weight) return &s;
        return nullptr;
    }
};

namespace bg_detail {

inline int tuple_degree(const GradedAlgebra& A, const std::vector<int>& t) {
    int d = 0;
    for (int i : t) d += A.basis[i].degree;
    return d;
}

inline int koszul_sign(int d, int rest) { return ((d % 2) && (rest % 2)) ? -1 : 1; }

inline void enumerate_level(const GradedAlgebra& A, int n, int w,
                            MixedComplexTruncation::Level& out) {
    std::vector<int> cur(n + 1);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n + 1) {
            if (left == 0) {
                out.index[cur] = static_cast<int>(out.tensors.size());
                out.tensors.push_back(cur);
                out.internal_degree.push_back(tuple_degree(A, cur));
            }
            return;
        }
        const bool interior = pos >= 1;
        for (int i = 0; i < A.dim(); ++i) {
            if (interior && i == A.unit) continue;
            int wi = A.basis[i].weight;
            if (wi > left) continue;
            cur[pos] = i;
            rec(pos + 1, left - wi);
        }
    };
    rec(0, w);
}

struct TwistedTuple {
    std::vector<int> tuple;
    Rational coeff;
};

// Signed cyclic operator with the mode's twist, acting on unnormalized
// tuples:
// t(a_0..a_n) = (-1)^n (-1)^{|a_n|(|a_0|+..+|a_{n-1}|)} twist(a_n)
//               (a_n, a_0, .., a_{n-1}).
// Normalization is a projection applied to final chains, never here.
inline TwistedTuple cyclic_once(const GradedAlgebra& A, BgMode mode, const Rational& q,
                                const std::vector<int>& t, const Rational& coeff) {
    int n = static_cast<int>(t.size()) - 1;
    int dn = A.basis[t[n]].degree;
    int rest = tuple_degree(A, t) - dn;
    int sign = koszul_sign(dn, rest) * (n % 2 == 1 ? -1 : 1);
    Rational c = coeff * Rational(sign);
    if (mode == BgMode::twisted) c *= pow(q, A.basis[t[n]].weight);
    std::vector<int> rot(t.size());
    rot[0] = t[n];
    for (int i = 0; i < n; ++i) rot[i + 1] = t[i];
    return TwistedTuple{std::move(rot), c};
}

}  // namespace bg_detail

inline MixedComplexTruncation build_bg_complex(const GradedAlgebra& A, const BgOptions& opt) {
    using namespace bg_detail;
    if (opt.mode != BgMode::equivariant && A.truncation_weight < opt.weight_window)
        throw TruncationTooSmall("algebra truncation " + std::to_string(A.truncation_weight) +
                                 " below requested window " +
                                 std::to_string(opt.weight_window));
    if (opt.mode == BgMode::equivariant && !A.weights_nonnegative())
        throw DomainError("BadAlgebra", "equivariant mode expects nonnegative weights");
    if (opt.mode == BgMode::twisted && opt.q == 0)
        throw DomainError("BadSpecialization", "twist parameter must be nonzero");

    MixedComplexTruncation cx;
    cx.algebra = A;
    cx.options = opt;

    const int N = opt.simplicial_bound;
    std::vector<int> weights;
    if (opt.mode == BgMode::equivariant) {
        weights = {0};  // invariance forces total weight zero
    } else {
        for (int w = 0; w <= opt.weight_window; ++w) weights.push_back(w);
    }

    for (int w : weights) {
        MixedComplexTruncation::Slice slice;
        slice.weight = w;
        slice.levels.resize(N + 1);
        for (int n = 0; n <= N; ++n) enumerate_level(A, n, w, slice.levels[n]);
        slice.exact = (w <= N);

        slice.b.assign(N + 1, RationalMatrix());
        slice.B.assign(N + 1, RationalMatrix());
        for (int n = 0; n <= N; ++n) {
            const auto& lvl = slice.levels[n];
            const long rows_b = n >= 1 ? static_cast<long>(slice.levels[n - 1].tensors.size()) : 0;
            RationalMatrix bmat = rational_zero_matrix(rows_b, lvl.tensors.size());
            for (std::size_t col = 0; n >= 1 && col < lvl.tensors.size(); ++col) {
                const std::vector<int>& t = lvl.tensors[col];
                std::map<int, Rational> acc;
                for (int i = 0; i < n; ++i) {
                    int sign = (i % 2 == 0) ? 1 : -1;
                    for (const auto& [k, c] : A.product(t[i], t[i + 1])) {
                        if (i >= 1 && k == A.unit) continue;  // degenerate
                        std::vector<int> img;
                        img.reserve(t.size() - 1);
                        for (int p = 0; p < i; ++p) img.push_back(t[p]);
                        img.push_back(k);
                        for (std::size_t p = i + 2; p < t.size(); ++p) img.push_back(t[p]);
                        auto it = slice.levels[n - 1].index.find(img);
                        if (it == slice.levels[n - 1].index.end())
                            throw TruncationTooSmall("face image missing from truncation");
                        acc[it->second] += Rational(sign) * c;
                    }
                }
                // d_n = d_0 after one signed, twisted rotation.
                {
                    TwistedTuple rot = cyclic_once(A, opt.mode, opt.q, t, Rational(1));
                    for (const auto& [k, c] : A.product(rot.tuple[0], rot.tuple[1])) {
                        std::vector<int> img;
                        img.reserve(t.size() - 1);
                        img.push_back(k);
                        for (std::size_t p = 2; p < rot.tuple.size(); ++p)
                            img.push_back(rot.tuple[p]);
                        auto it = slice.levels[n - 1].index.find(img);
                        if (it == slice.levels[n - 1].index.end())
                            throw TruncationTooSmall("face image missing from truncation");
                        acc[it->second] += rot.coeff * c;
                    }
                }
                for (const auto& [row, c] : acc)
                    if (c != 0) bmat(row, static_cast<Eigen::Index>(col)) = c;
            }
            slice.b[n] = std::move(bmat);

            if (opt.mode == BgMode::twisted) continue;  // no cyclic structure off q=1
            const long rows_B =
                n + 1 <= N ? static_cast<long>(slice.levels[n + 1].tensors.size()) : 0;
            RationalMatrix Bmat = rational_zero_matrix(rows_B, lvl.tensors.size());
            for (std::size_t col = 0; n + 1 <= N && col < lvl.tensors.size(); ++col) {
                const std::vector<int>& t = lvl.tensors[col];
                std::map<int, Rational> acc;
                Rational coeff(1);
                std::vector<int> cur = t;
                // B = s N followed by the normalized projection: prepend
                // the unit to each signed rotation, drop degenerate results.
                for (int j = 0; j <= n; ++j) {
                    if (j > 0) {
                        TwistedTuple rot = cyclic_once(A, opt.mode, opt.q, cur, coeff);
                        cur = rot.tuple;
                        coeff = rot.coeff;
                    }
                    bool degenerate = false;
                    for (int p : cur)
                        if (p == A.unit) degenerate = true;
                    if (degenerate) continue;
                    std::vector<int> img;
                    img.reserve(t.size() + 1);
                    img.push_back(A.unit);
                    for (int p : cur) img.push_back(p);
                    auto it = slice.levels[n + 1].index.find(img);
                    if (it == slice.levels[n + 1].index.end())
                        throw TruncationTooSmall("degeneracy image missing");
                    acc[it->second] += coeff;
                }
                for (const auto& [row, c] : acc)
                    if (c != 0) Bmat(row, static_cast<Eigen::Index>(col)) = c;
            }
            slice.B[n] = std::move(Bmat);
        }
        cx.slices.push_back(std::move(slice));
    }
    return cx;
}

inline bool matrix_is_zero(const RationalMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

namespace bg_detail {

// Column-by-column sparse check that A*C + D*E == 0 (either pair may have
// zero-size factors).  The boundary matrices are very sparse, so this is
// far cheaper than dense products over mpq.
inline bool sparse_sum_is_zero(const RationalMatrix& A, const RationalMatrix& C,
                               const RationalMatrix& D, const RationalMatrix& E) {
    Eigen::Index cols = std::max(C.cols(), E.cols());
    Eigen::Index rows = std::max(A.rows(), D.rows());
    if (rows == 0 || cols == 0) return true;
    std::map<Eigen::Index, Rational> acc;
    for (Eigen::Index j = 0; j < cols; ++j) {
        acc.clear();
        if (A.rows() > 0 && C.cols() > j) {
            for (Eigen::Index k = 0; k < C.rows(); ++k) {
                if (C(k, j) == 0) continue;
                for (Eigen::Index i = 0; i < A.rows(); ++i)
                    if (A(i, k) != 0) acc[i] += A(i, k) * C(k, j);
            }
        }
        if (D.rows() > 0 && E.cols() > j) {
            for (Eigen::Index k = 0; k < E.rows(); ++k) {
                if (E(k, j) == 0) continue;
                for (Eigen::Index i = 0; i < D.rows(); ++i)
                    if (D(i, k) != 0) acc[i] += D(i, k) * E(k, j);
            }
        }
        for (const auto& [i, v] : acc) {
            (void)i;
            if (v != 0) return false;
        }
    }
    return true;
}

inline bool sparse_product_is_zero(const RationalMatrix& A, const RationalMatrix& C) {
    RationalMatrix none(0, 0);
    return sparse_sum_is_zero(A, C, none, none);
}

}  // namespace bg_detail

// b^2 = 0, B^2 = 0, bB + Bb = 0 as exact matrix identities.
inline void check_complex_axioms(const MixedComplexTruncation& cx) {
    const int N = cx.options.simplicial_bound;
    for (const auto& s : cx.slices) {
        for (int n = 1; n + 1 <= N; ++n)
            if (!bg_detail::sparse_product_is_zero(s.b[n], s.b[n + 1]))
                throw NotAComplex("b^2 != 0 into level " + std::to_string(n - 1));
        if (cx.options.mode == BgMode::twisted) continue;
        for (int n = 0; n + 2 <= N; ++n)
            if (!bg_detail::sparse_product_is_zero(s.B[n + 1], s.B[n]))
                throw NotAComplex("B^2 != 0 at level " + std::to_string(n));
        for (int n = 1; n + 1 <= N; ++n)
            if (!bg_detail::sparse_sum_is_zero(s.b[n + 1], s.B[n], s.B[n - 1], s.b[n]))
                throw NotAComplex("bB + Bb != 0 at level " + std::to_string(n));
        if (N >= 1 && !bg_detail::sparse_product_is_zero(s.b[1], s.B[0]))
            throw NotAComplex("bB != 0 at level 0");
    }
}

struct HHRanks {
    std::map<std::pair<int, long>, long> by_slice_degree;  // (weight, coh degree) -> rank
    std::map<long, long> total_by_degree;
    long certified_max_degree = -1;
    bool all_slices_exact = true;

    long rank_at(long degree) const {
        auto it = total_by_degree.find(degree);
        return it == total_by_degree.end() ? 0 : it->second;
    }
    long slice_rank(int w, long degree) const {
        auto it = by_slice_degree.find({w, degree});
        return it == by_slice_degree.end() ? 0 : it->second;
    }
};

namespace bg_detail {

// Sub-block of a level matrix restricted to a fixed internal degree on
// rows and/or columns.
inline RationalMatrix degree_block(const MixedComplexTruncation::Slice& s, int level_rows,
                                   int level_cols, const RationalMatrix& m, int D) {
    std::vector<Eigen::Index> rows, cols;
    const auto& lr = s.levels[level_rows];
    const auto& lc = s.levels[level_cols];
    for (std::size_t i = 0; i < lr.internal_degree.size(); ++i)
        if (lr.internal_degree[i] == D) rows.push_back(static_cast<Eigen::Index>(i));
    for (std::size_t i = 0; i < lc.internal_degree.size(); ++i)
        if (lc.internal_degree[i] == D) cols.push_back(static_cast<Eigen::Index>(i));
    RationalMatrix out = rational_zero_matrix(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
    return out;
}

}  // namespace bg_detail

// Homology ranks of b per slice and internal degree, reported against the
// cohomological degree (internal degree minus simplicial level).  Each
// boundary block is rank-computed once; b^2 = 0 was already checked on the
// full matrices.
inline HHRanks hh_ranks(const MixedComplexTruncation& cx) {
    check_complex_axioms(cx);
    HHRanks out;
    const int N = cx.options.simplicial_bound;
    for (const auto& s : cx.slices) {
        if (!s.exact) out.all_slices_exact = false;
        std::set<int> degrees;
        for (int n = 0; n <= N; ++n)
            degrees.insert(s.levels[n].internal_degree.begin(),
                           s.levels[n].internal_degree.end());
        for (int D : degrees) {
            std::vector<long> dim(N + 2, 0), brank(N + 2, 0);
            for (int n = 0; n <= N; ++n)
                for (int d : s.levels[n].internal_degree)
                    if (d == D) ++dim[n];
            for (int n = 1; n <= N; ++n) {
                if (dim[n] == 0 || dim[n - 1] == 0) continue;
                brank[n] = rank(bg_detail::degree_block(s, n - 1, n, s.b[n], D));
            }
            for (int n = 0; n <= N; ++n) {
                if (dim[n] == 0) continue;
                long h = dim[n] - brank[n] - brank[n + 1];
                if (h != 0) {
                    long coh = D - n;
                    out.by_slice_degree[{s.weight, coh}] += h;
                    out.total_by_degree[coh] += h;
                }
            }
        }
    }
    if (cx.options.mode == BgMode::equivariant) {
        out.certified_max_degree = 1000000;  // the single slice is exact
    } else {
        // Slices above the window contribute cohomological degrees of at
        // least w * (min degree/weight - 1); certify everything below the
        // cheapest excluded value.
        Rational min_ratio(0);
        bool any = false;
        for (int i = 0; i < cx.algebra.dim(); ++i) {
            if (i == cx.algebra.unit) continue;
            Rational r = Rational(cx.algebra.basis[i].degree) / cx.algebra.basis[i].weight;
            if (!any || r < min_ratio) min_ratio = r;
            any = true;
        }
        if (!any) {
            out.certified_max_degree = 1000000;
        } else {
            Rational lowest = Rational(cx.options.weight_window + 1) * (min_ratio - 1);
            Integer fl;
            mpz_fdiv_q(fl.get_mpz_t(), lowest.get_num_mpz_t(), lowest.get_den_mpz_t());
            long floor_v = fl.get_si();
            // certified degrees are those strictly below `lowest`
            out.certified_max_degree =
                (Rational(floor_v) == lowest) ? floor_v - 1 : floor_v;
        }
    }
    return out;
}

struct CyclicRanks {
    // Negative variant: associated-graded ranks per (coh degree, u-power).
    std::map<std::pair<long, long>, long> negative_gr;
    // Periodic variant: ranks per degree at the full window plus the set of
    // degrees whose rank is stable against shrinking the window by one.
    std::map<long, long> periodic_by_degree;
    std::set<long> periodic_stable_degrees;

    long negative_at(long degree, long upower) const {
        auto it = negative_gr.find({degree, upower});
        return it == negative_gr.end() ? 0 : it->second;
    }
};

namespace bg_detail {

// Cohomological-degree-graded ranks of the truncated (b + uB) total
// complex of one slice; u-powers span [0, u_top] (negative variant) or
// [-u_top, u_top] (periodic).
inline std::map<long, long> total_complex_ranks(const MixedComplexTruncation& cx,
                                                const MixedComplexTruncation::Slice& s,
                                                bool periodic, int u_top) {
    const int N = cx.options.simplicial_bound;
    const int u_lo = periodic ? -u_top : 0;
    std::map<long, std::vector<std::tuple<int, int, int>>> columns;  // coh -> (n, u, local)
    std::map<std::tuple<int, int, int>, long> position;
    for (int n = 0; n <= N; ++n)
        for (std::size_t c = 0; c < s.levels[n].tensors.size(); ++c)
            for (int u = u_lo; u <= u_top; ++u) {
                long coh = s.levels[n].internal_degree[c] - n + 2 * u;
                position[{n, u, static_cast<int>(c)}] =
                    static_cast<long>(columns[coh].size());
                columns[coh].emplace_back(n, u, static_cast<int>(c));
            }
    std::map<long, RationalMatrix> diff;  // coh -> matrix C^coh -> C^{coh+1}
    for (const auto& [coh, cols] : columns) {
        auto tgt = columns.find(coh + 1);
        long rows = tgt == columns.end() ? 0 : static_cast<long>(tgt->second.size());
        RationalMatrix d = rational_zero_matrix(rows, cols.size());
        for (std::size_t cidx = 0; rows > 0 && cidx < cols.size(); ++cidx) {
            auto [n, u, local] = cols[cidx];
            if (n >= 1) {
                const RationalMatrix& bm = s.b[n];
                for (Eigen::Index r = 0; r < bm.rows(); ++r) {
                    if (bm(r, local) == 0) continue;
                    auto it = position.find({n - 1, u, static_cast<int>(r)});
                    if (it != position.end())
                        d(it->second, static_cast<Eigen::Index>(cidx)) += bm(r, local);
                }
            }
            if (n + 1 <= N && u + 1 <= u_top) {
                const RationalMatrix& Bm = s.B[n];
                for (Eigen::Index r = 0; r < Bm.rows(); ++r) {
                    if (Bm(r, local) == 0) continue;
                    auto it = position.find({n + 1, u + 1, static_cast<int>(r)});
                    if (it != position.end())
                        d(it->second, static_cast<Eigen::Index>(cidx)) += Bm(r, local);
                }
            }
        }
        diff[coh] = std::move(d);
    }
    std::map<long, long> ranks;
    for (const auto& [coh, cols] : columns) {
        RationalMatrix d_out = diff.at(coh);
        RationalMatrix d_in;
        auto below = diff.find(coh - 1);
        if (below != diff.end()) {
            d_in = below->second;
        } else {
            d_in = rational_zero_matrix(cols.size(), 0);
        }
        long h = homology_rank(d_in, d_out);
        if (h != 0) ranks[coh] = h;
    }
    return ranks;
}

}  // namespace bg_detail

inline CyclicRanks cyclic_ranks(const MixedComplexTruncation& cx, bool periodic, int u_bound) {
    if (cx.options.mode == BgMode::twisted)
        throw DomainError("BadMode", "cyclic variants need the cyclic structure");
    if (u_bound < 1) throw DomainError("BadMode", "u_bound must be at least 1");
    check_complex_axioms(cx);
    CyclicRanks out;
    if (!periodic) {
        for (const auto& s : cx.slices) {
            std::map<long, long> prev;
            for (int u = 0; u <= u_bound; ++u) {
                auto cur = bg_detail::total_complex_ranks(cx, s, false, u);
                std::set<long> degs;
                for (const auto& [d, r] : cur) degs.insert(d);
                for (const auto& [d, r] : prev) degs.insert(d);
                for (long d : degs) {
                    long delta = (cur.count(d) ? cur.at(d) : 0) -
                                 (prev.count(d) ? prev.at(d) : 0);
                    if (delta != 0) out.negative_gr[{d, u}] += delta;
                }
                prev = std::move(cur);
            }
        }
        for (auto it = out.negative_gr.begin(); it != out.negative_gr.end();) {
            if (it->second == 0) {
                it = out.negative_gr.erase(it);
            } else {
                ++it;
            }
        }
        return out;
    }
    // Periodic: a degree is stable when no slice's rank moves between the
    // u-windows u_bound-1 and u_bound (degrees missing from a table are 0).
    std::vector<std::map<long, long>> fulls, smalls;
    std::set<long> degs;
    for (const auto& s : cx.slices) {
        fulls.push_back(bg_detail::total_complex_ranks(cx, s, true, u_bound));
        smalls.push_back(bg_detail::total_complex_ranks(cx, s, true, u_bound - 1));
        for (const auto& [d, r] : fulls.back()) out.periodic_by_degree[d] += r;
        for (const auto& [d, r] : fulls.back()) degs.insert(d);
        for (const auto& [d, r] : smalls.back()) degs.insert(d);
    }
    long lo = degs.empty() ? 0 : *degs.begin() - 2;
    long hi = degs.empty() ? 0 : *degs.rbegin() + 2;
    for (long d = lo; d <= hi; ++d) {
        bool stable = true;
        for (std::size_t i = 0; i < fulls.size(); ++i) {
            long a = fulls[i].count(d) ? fulls[i].at(d) : 0;
            long b = smalls[i].count(d) ? smalls[i].at(d) : 0;
            if (a != b) stable = false;
        }
        if (stable) out.periodic_stable_degrees.insert(d);
    }
    return out;
}

}  // namespace springer
