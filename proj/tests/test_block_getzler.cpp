#include "doctest.h"
#include "springer/block_getzler.hpp"
#include "springer/dg_algebra.hpp"

using namespace springer;

namespace {

BgOptions opts(BgMode mode, int N, int window, Rational q = Rational(1)) {
    BgOptions o;
    o.mode = mode;
    o.q = q;
    o.simplicial_bound = N;
    o.weight_window = window;
    return o;
}

}  // namespace

TEST_CASE("trivial algebra: bar complex has rank 1 in degree 0") {
    GradedAlgebra k = trivial_algebra();
    auto cx = build_bg_complex(k, opts(BgMode::plain, 5, 0));
    check_complex_axioms(cx);
    auto ranks = hh_ranks(cx);
    CHECK(ranks.rank_at(0) == 1);
    CHECK(ranks.total_by_degree.size() == 1);

    auto cxe = build_bg_complex(k, opts(BgMode::equivariant, 5, 0));
    auto re = hh_ranks(cxe);
    CHECK(re.rank_at(0) == 1);
    CHECK(re.total_by_degree.size() == 1);
}

TEST_CASE("complex axioms hold for Sym(h) rank 1 and 2") {
    for (int rank : {1, 2}) {
        GradedAlgebra A = sym_algebra(rank, 4);
        for (auto mode : {BgMode::plain, BgMode::equivariant}) {
            auto cx = build_bg_complex(A, opts(mode, 5, 4));
            CHECK_NOTHROW(check_complex_axioms(cx));
        }
        auto tw = build_bg_complex(A, opts(BgMode::twisted, 5, 4, rational(2)));
        CHECK_NOTHROW(check_complex_axioms(tw));
    }
}

TEST_CASE("equivariant HH of Sym(h*[-2]): rank 1 in degree 0 per z-power") {
    for (int rank : {1, 2}) {
        GradedAlgebra A = sym_algebra(rank, 6);
        auto cx = build_bg_complex(A, opts(BgMode::equivariant, 8, 6));
        auto ranks = hh_ranks(cx);
        // One weight-zero slice; identical in every z-power.
        CHECK(ranks.rank_at(0) == 1);
        for (long d = -8; d <= 8; ++d)
            if (d != 0) CHECK(ranks.rank_at(d) == 0);
    }
}

TEST_CASE("plain HH of Sym(h*[-2]) rank 1 matches Sym(h*[-1] + h*[-2])") {
    GradedAlgebra A = sym_algebra(1, 6);
    auto cx = build_bg_complex(A, opts(BgMode::plain, 8, 6));
    auto ranks = hh_ranks(cx);
    // Weight slice w contributes rank 1 in degrees 2w and 2w-1.
    for (int w = 0; w <= 6; ++w) {
        CHECK(ranks.slice_rank(w, 2 * w) == 1);
        if (w >= 1) CHECK(ranks.slice_rank(w, 2 * w - 1) == 1);
    }
    // Aggregate: rank 1 in every degree 0..12 within the certified range.
    for (long d = 0; d <= 12; ++d) CHECK(ranks.rank_at(d) == 1);
    CHECK(ranks.certified_max_degree >= 6);
    CHECK(ranks.all_slices_exact);
}

TEST_CASE("twisted HH at q=2: rank 1 in degree 0 only") {
    for (int rank : {1, 2}) {
        GradedAlgebra A = sym_algebra(rank, 6);
        auto cx = build_bg_complex(A, opts(BgMode::twisted, 8, 6, rational(2)));
        auto ranks = hh_ranks(cx);
        CHECK(ranks.rank_at(0) == 1);
        long total = 0;
        for (const auto& [d, r] : ranks.total_by_degree) {
            (void)d;
            total += r;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("equivariant ranks stable in N (monotone stabilization)") {
    GradedAlgebra A = sym_algebra(1, 4);
    auto r1 = hh_ranks(build_bg_complex(A, opts(BgMode::equivariant, 5, 4)));
    auto r2 = hh_ranks(build_bg_complex(A, opts(BgMode::equivariant, 6, 4)));
    CHECK(r1.total_by_degree == r2.total_by_degree);

    auto p1 = hh_ranks(build_bg_complex(A, opts(BgMode::plain, 5, 4)));
    auto p2 = hh_ranks(build_bg_complex(A, opts(BgMode::plain, 6, 4)));
    CHECK(p1.total_by_degree == p2.total_by_degree);
}

TEST_CASE("Connes B maps the weight-1 generator line isomorphically") {
    GradedAlgebra A = sym_algebra(1, 3);
    auto cx = build_bg_complex(A, opts(BgMode::plain, 4, 3));
    const auto* s1 = cx.slice(1);
    REQUIRE(s1 != nullptr);
    // C_0 weight 1 = <x> (degree 2); C_1 weight 1 = <1 (x) x> (degree 2,
    // cohomological degree 1).  B must be an isomorphism on these lines.
    REQUIRE(s1->levels[0].tensors.size() == 1);
    REQUIRE(s1->levels[1].tensors.size() == 1);
    CHECK(s1->B[0](0, 0) != 0);
}

TEST_CASE("Kunneth: plain HH of A tensor A matches convolution of rank profiles") {
    GradedAlgebra A = sym_algebra(1, 3);
    GradedAlgebra AA = tensor_algebra(A, A, 3);
    GradedAlgebra A2 = sym_algebra(2, 3);
    // A tensor A is Sym rank 2; same HH.
    auto cxAA = build_bg_complex(AA, opts(BgMode::plain, 4, 3));
    auto cx2 = build_bg_complex(A2, opts(BgMode::plain, 4, 3));
    auto rAA = hh_ranks(cxAA);
    auto r2 = hh_ranks(cx2);
    CHECK(rAA.total_by_degree == r2.total_by_degree);

    // Convolution of the rank-1 profile with itself in the certified range.
    auto cx1 = build_bg_complex(A, opts(BgMode::plain, 4, 3));
    auto r1 = hh_ranks(cx1);
    for (long d = 0; d <= rAA.certified_max_degree; ++d) {
        long conv = 0;
        for (long i = 0; i <= d; ++i) conv += r1.rank_at(i) * r1.rank_at(d - i);
        CHECK(rAA.rank_at(d) == conv);
    }
}

TEST_CASE("negative cyclic: equivariant degeneration and HN(k) = k[[u]]") {
    GradedAlgebra k = trivial_algebra();
    auto cxk = build_bg_complex(k, opts(BgMode::equivariant, 6, 0));
    auto hn = cyclic_ranks(cxk, false, 3);
    // gr ranks: rank 1 at degrees 0, 2, 4, 6 for u-powers 0..3.
    for (long u = 0; u <= 3; ++u) {
        CHECK(hn.negative_at(2 * u, u) == 1);
    }

    GradedAlgebra A = sym_algebra(1, 4);
    auto cxA = build_bg_complex(A, opts(BgMode::equivariant, 6, 4));
    auto hhA = hh_ranks(cxA);
    auto hnA = cyclic_ranks(cxA, false, 3);
    // Degeneration: gr_u HN at degree d equals HH at degree d - 2u.
    for (long u = 0; u <= 3; ++u)
        for (long d = -2; d <= 8; ++d)
            CHECK(hnA.negative_at(d, u) == hhA.rank_at(d - 2 * u));
}

TEST_CASE("periodic cyclic of plain Sym collapses to one line per even degree") {
    GradedAlgebra A = sym_algebra(1, 3);
    auto cx = build_bg_complex(A, opts(BgMode::plain, 4, 3));
    auto hp = cyclic_ranks(cx, true, 3);
    // In the stable window: rank 1 per even degree, 0 per odd degree.
    int stable_checked = 0;
    for (long d = -2; d <= 2; ++d) {
        if (!hp.periodic_stable_degrees.count(d)) continue;
        ++stable_checked;
        long expect = (d % 2 == 0) ? 1 : 0;
        long got = hp.periodic_by_degree.count(d) ? hp.periodic_by_degree.at(d) : 0;
        CHECK(got == expect);
    }
    CHECK(stable_checked >= 3);
}

TEST_CASE("dg example: k[t, eps t] with d(eps t) = n t") {
    // n = 1: quasi-isomorphic to k.
    auto c1 = dg_cohomology(dual_numbers_spec(rational(1)), 5);
    CHECK(c1.size() == 1);
    CHECK(c1.at({0, 0}) == 1);

    // n = 0: the full bigraded table survives: rank 1 at (0, a) and (-1, a+1).
    auto c0 = dg_cohomology(dual_numbers_spec(rational(0)), 5);
    for (int a = 0; a <= 5; ++a) {
        CHECK(c0.count({0, a}) == 1);
        if (a >= 1) CHECK(c0.count({-1, a}) == 1);
    }
    for (const auto& [key, r] : c0) CHECK(r == 1);

    // Empty spec: k in degree 0.
    DgAlgebraSpec empty;
    auto ce = dg_cohomology(empty, 3);
    CHECK(ce.size() == 1);
    CHECK(ce.at({0, 0}) == 1);
}

TEST_CASE("errors") {
    GradedAlgebra A = sym_algebra(1, 2);
    CHECK_THROWS_AS(build_bg_complex(A, opts(BgMode::plain, 4, 5)), TruncationTooSmall);
    CHECK_THROWS_AS(cyclic_ranks(build_bg_complex(A, opts(BgMode::twisted, 3, 2, rational(2))),
                                 false, 2),
                    DomainError);

    // A differential that does not square to zero must be rejected.
    DgAlgebraSpec bad;
    bad.generators.push_back({"a", 0, 1});
    bad.generators.push_back({"b", -1, 1});
    bad.generators.push_back({"c", -2, 1});
    DgAlgebraSpec::Element db;  // d(b) = a
    DgAlgebraSpec::add_to(db, bad.generator_monomial(0), rational(1));
    DgAlgebraSpec::Element dc;  // d(c) = b, so d^2(c) = a != 0
    DgAlgebraSpec::add_to(dc, bad.generator_monomial(1), rational(1));
    bad.differential[1] = db;
    bad.differential[2] = dc;
    CHECK_THROWS_AS(bad.validate(), DifferentialNotSquareZero);
}
