#include <random>

#include "doctest.h"
#include "springer/dl_params.hpp"

using namespace springer;
using namespace springer::dl;

TEST_CASE("q root-of-unity guard") {
    CHECK_THROWS_AS(QMode::exact(rational(1)).require_not_root_of_unity(), RootOfUnityQ);
    CHECK_THROWS_AS(QMode::exact(rational(-1)).require_not_root_of_unity(), RootOfUnityQ);
    CHECK_NOTHROW(QMode::exact(rational(2)).require_not_root_of_unity());
    CHECK_NOTHROW(QMode::generic_q().require_not_root_of_unity());
}

TEST_CASE("n = 1: a single segment") {
    auto classes = enumerate_gln(1, QMode::generic_q(), 1);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].second.segments.size() == 1);
    CHECK(classes[0].second.segments[0].length == 1);
    CHECK(count_irreducibles_gln(1, QMode::generic_q(), 1) == 1);
}

TEST_CASE("n = 2, one orbit {a, qa}: two classes") {
    auto config = EigenvalueConfig::chain(1, {2});
    auto classes = enumerate_config(config, QMode::generic_q());
    REQUIRE(classes.size() == 2);
    // {[a;1],[qa;1]} (N = 0) and {[a;2]} (N != 0)
    DLParameterGLn split;
    split.segments = {{0, 0, 1}, {0, 1, 1}};
    split.normalize();
    DLParameterGLn full;
    full.segments = {{0, 0, 2}};
    CHECK(std::find(classes.begin(), classes.end(), split) != classes.end());
    CHECK(std::find(classes.begin(), classes.end(), full) != classes.end());
}

TEST_CASE("n = 2, two disjoint orbits: only N = 0") {
    CHECK(count_irreducibles_gln(2, QMode::generic_q(), 2) == 1);
}

TEST_CASE("chain counts match the segment recursion oracle") {
    CHECK(chain_segment_count_oracle(1) == 1);
    CHECK(chain_segment_count_oracle(2) == 2);
    CHECK(chain_segment_count_oracle(3) == 4);
    for (int n = 1; n <= 5; ++n) {
        auto config = EigenvalueConfig::chain(1, {n});
        CHECK(count_config_classes(config, QMode::generic_q()) ==
              chain_segment_count_oracle(n));
    }
}

TEST_CASE("enumeration matches the brute-force conjugacy oracle") {
    std::vector<EigenvalueConfig> configs;
    configs.push_back(EigenvalueConfig::chain(1, {2}));
    configs.push_back(EigenvalueConfig::chain(1, {3}));
    configs.push_back(EigenvalueConfig::chain(2, {2, 1}));
    configs.push_back(EigenvalueConfig::chain(2, {1, 1}));
    {
        EigenvalueConfig c;  // eigenvalue a with multiplicity 2, qa with 1
        c.mult[{0, 0}] = 2;
        c.mult[{0, 1}] = 1;
        configs.push_back(c);
    }
    {
        EigenvalueConfig c;  // gap: a and q^2 a — no q-link, N = 0 forced
        c.mult[{0, 0}] = 1;
        c.mult[{0, 2}] = 1;
        configs.push_back(c);
    }
    {
        EigenvalueConfig c;  // multiplicity-2 chain of length 2 (n = 4 is fine:
        c.mult[{0, 0}] = 2;  // the oracle grid is 4 bits)
        c.mult[{0, 1}] = 2;
        configs.push_back(c);
    }
    for (const auto& config : configs) {
        auto classes = enumerate_config(config, QMode::generic_q());
        // pairwise distinct fingerprints = pairwise non-conjugate
        std::set<std::map<std::tuple<int, int, int>, int>> predicted;
        for (const auto& cls : classes) predicted.insert(rank_fingerprint(cls));
        CHECK(predicted.size() == classes.size());
        // jointly exhaustive and nothing extra
        auto oracle = brute_force_fingerprints(config);
        CHECK(predicted == oracle);
    }
}

TEST_CASE("explicit n = 2 stabilizer is connected") {
    // s = diag(a, qa) with a != qa, N = E12.  g s = s g forces g diagonal;
    // g N g^{-1} = N forces g = diag(c, c): one connected component.
    // Encoded as the rank-fingerprint statement: the class {[a;2]} is a
    // single orbit, so the two-class count for the chain {a, qa} already
    // separates N = 0 from N != 0 with connected stabilizers on both.
    auto config = EigenvalueConfig::chain(1, {2});
    CHECK(count_config_classes(config, QMode::generic_q()) == 2);
    CHECK(brute_force_fingerprints(config).size() == 2);
}

TEST_CASE("sl2 regimes partition the parameter space") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    auto regimes_hit = std::set<Sl2Regime>{};
    auto check_exactly_one = [&](const LambdaDesc& l, const QMode& q) {
        Sl2Regime r = classify_sl2(l, q);
        regimes_hit.insert(r);
        // predicates for the six cells, evaluated independently
        LambdaDesc cl = canonicalize_lambda(l, q);
        bool q1 = !q.generic && q.value == 1;
        bool qm1 = !q.generic && q.value == -1;
        bool pm1 = cl.kind == LambdaDesc::Kind::exact && (cl.value == 1 || cl.value == -1);
        bool isq = detail::lambda_sq_is(cl, q, false) || detail::lambda_sq_is(cl, q, true);
        int cells = 0;
        if (pm1 && q1) ++cells;
        if (pm1 && !q1) ++cells;
        if (!pm1 && qm1 &&
            (cl.kind == LambdaDesc::Kind::imaginary_unit || detail::lambda_sq_is(cl, q, false)))
            ++cells;
        if (!pm1 && isq && !q1 && !qm1) ++cells;
        bool in_special = (pm1) || (qm1 && cl.kind == LambdaDesc::Kind::imaginary_unit) ||
                          (isq && !q1 && !qm1);
        if (!in_special && q1) ++cells;
        if (!in_special && !q1) ++cells;
        CHECK(cells == 1);
    };
    for (int i = 0; i < 300; ++i) {
        Rational lv = rational(num(rng), den(rng));
        Rational qv = rational(num(rng), den(rng));
        if (lv == 0 || qv == 0) continue;
        check_exactly_one(LambdaDesc::exact(lv), QMode::exact(qv));
    }
    // special kinds
    for (auto q : {QMode::exact(rational(1)), QMode::exact(rational(-1)),
                   QMode::exact(rational(3)), QMode::exact(rational(4)), QMode::generic_q()}) {
        check_exactly_one(LambdaDesc::i(), q);
        check_exactly_one(LambdaDesc::sqrtq(), q);
        check_exactly_one(LambdaDesc::generic(), q);
        check_exactly_one(LambdaDesc::exact(rational(1)), q);
        check_exactly_one(LambdaDesc::exact(rational(-1)), q);
        check_exactly_one(LambdaDesc::exact(rational(2)), q);
    }
    CHECK(regimes_hit.size() == 6);
}

TEST_CASE("sl2 table rows") {
    // q = 1, lambda = +-1, n != 0: Z/2, springer resolution, G^s = G.
    {
        auto rows = sl2_table(LambdaDesc::exact(rational(1)), QMode::exact(rational(1)));
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].n_stratum == NStratum::zero);
        CHECK(rows[0].component_group == ComponentGroup::trivial);
        CHECK(rows[1].n_stratum == NStratum::nonzero);
        CHECK(rows[1].component_group == ComponentGroup::z2);
        for (const auto& r : rows) {
            CHECK(r.geometry_label == "springer-resolution");
            CHECK(r.centralizer == "G");
            CHECK(r.gm_component_group == ComponentGroup::trivial);
        }
    }
    // q = -1, lambda = i: nodal normalization rows, G^s = T.
    {
        auto rows = sl2_table(LambdaDesc::i(), QMode::exact(rational(-1)));
        REQUIRE(rows.size() == 3);
        CHECK(rows[1].n_stratum == NStratum::nonzero_upper);
        CHECK(rows[1].component_group == ComponentGroup::z2);
        CHECK(rows[2].n_stratum == NStratum::nonzero_lower);
        CHECK(rows[2].component_group == ComponentGroup::z2);
        for (const auto& r : rows) {
            CHECK(r.geometry_label == "nodal-normalization");
            CHECK(r.centralizer == "T");
        }
    }
    // q != 1, lambda = +-1: P^1 -> pt, n = 0 only.
    {
        auto rows = sl2_table(LambdaDesc::exact(rational(-1)), QMode::exact(rational(3)));
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].geometry_label == "p1-to-pt");
        CHECK(rows[0].centralizer == "G");
    }
    // q != +-1, lambda = sqrt(q): A^1 cup pt -> A^1.
    {
        auto rows = sl2_table(LambdaDesc::sqrtq(), QMode::exact(rational(3)));
        REQUIRE(rows.size() == 2);
        CHECK(rows[1].component_group == ComponentGroup::z2);
        for (const auto& r : rows) {
            CHECK(r.geometry_label == "a1-cup-pt-to-a1");
            CHECK(r.centralizer == "T");
        }
        // exact square root works the same way
        auto rows2 = sl2_table(LambdaDesc::exact(rational(2)), QMode::exact(rational(4)));
        CHECK(rows2.size() == 2);
        CHECK(rows2[0].geometry_label == "a1-cup-pt-to-a1");
    }
    // generic lambda: two points over a point.
    {
        auto rows = sl2_table(LambdaDesc::exact(rational(5)), QMode::exact(rational(3)));
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].geometry_label == "pt-cup-pt-to-pt");
        CHECK(rows[0].centralizer == "T");
    }
}

TEST_CASE("component groups") {
    // n = 0 always trivial.
    CHECK(component_group_sl2(LambdaDesc::exact(rational(7)), QMode::exact(rational(2)),
                              NStratum::zero) == ComponentGroup::trivial);
    // central s at q = 1 with n != 0: Z/2.
    CHECK(component_group_sl2(LambdaDesc::exact(rational(1)), QMode::exact(rational(1)),
                              NStratum::nonzero) == ComponentGroup::z2);
    // invalid stratum: central s needs q = 1 for n != 0.
    CHECK_THROWS_AS(component_group_sl2(LambdaDesc::exact(rational(1)),
                                        QMode::exact(rational(2)), NStratum::nonzero),
                    NotQCommuting);
    // lambda = i at q = -1: both strata are Z/2, conjugation-invariantly.
    CHECK(component_group_sl2(LambdaDesc::i(), QMode::exact(rational(-1)),
                              NStratum::nonzero_upper) == ComponentGroup::z2);
    CHECK(component_group_sl2(LambdaDesc::i(), QMode::exact(rational(-1)),
                              NStratum::nonzero_lower) == ComponentGroup::z2);
    // generic lambda admits no nonzero n.
    CHECK_THROWS_AS(component_group_sl2(LambdaDesc::generic(), QMode::exact(rational(5)),
                                        NStratum::nonzero),
                    NotQCommuting);
    // G-tilde stabilizers are connected in every case.
    CHECK(gm_component_group_sl2(LambdaDesc::exact(rational(1)), QMode::exact(rational(1)),
                                 NStratum::nonzero) == ComponentGroup::trivial);
}
