// Gonality, Clifford search, naive oracle, trigonal classification and relations.

#include "cliffsemi/solvers.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace cliffsemi;

namespace {

std::vector<std::vector<int>> exponent_lists(const std::vector<MonomialSheaf>& v) {
    std::vector<std::vector<int>> out;
    for (const auto& f : v) out.push_back(f.exponents());
    return out;
}

errc code_of(auto&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    return errc::internal_assertion;
}

} // namespace

TEST(Gonality, CuspidalSexticWithThreeGenerators) {
    // a = 2 also reaches degree 6: (2 + S) \ S = {2, 10, 11, 19}.
    const auto r = gonality(NumericalSemigroup::from_generators({6, 8, 9}));
    EXPECT_EQ(r.gonality, 6);
    EXPECT_EQ(r.witnesses, (std::vector<int>{1, 2, 3, 6}));
}

TEST(Gonality, NonplanarQuintic) {
    const auto r = gonality(NumericalSemigroup::from_generators({5, 9, 13, 17, 21}));
    EXPECT_EQ(r.gonality, 5);
    EXPECT_EQ(r.witnesses, (std::vector<int>{1, 4, 5}));
}

TEST(Gonality, PlaneCurves) {
    const auto r = gonality(NumericalSemigroup::from_generators({5, 6}));
    EXPECT_EQ(r.gonality, 5);
    EXPECT_EQ(r.witnesses, (std::vector<int>{1, 5}));
}

TEST(Gonality, NearlyNormalIsHyperellipticLike) {
    const auto r = gonality(NumericalSemigroup::from_generators({3, 4, 5}));
    EXPECT_EQ(r.gonality, 2);
    EXPECT_EQ(r.witnesses, (std::vector<int>{1}));
}

TEST(Gonality, MatchesUnboundedScanUpToGenus9) {
    for_each_semigroup(9, [](const NumericalSemigroup& s) {
        if (s.is_smooth()) return;
        int best = 1 << 20;
        std::vector<int> wit;
        for (int a = 1; a <= s.conductor() + 1; ++a) {
            const int d = pencil_degree(s, a);
            if (d < best) best = d, wit.clear();
            if (d == best) wit.push_back(a);
        }
        const auto r = gonality(s);
        ASSERT_EQ(r.gonality, best);
        ASSERT_EQ(r.witnesses, wit);
    });
}

TEST(Gonality, SmoothCurveRejected) {
    EXPECT_EQ(code_of([] { gonality(NumericalSemigroup::natural()); }), errc::smooth_curve);
}

TEST(Clifford, CuspidalSextic) {
    const auto s = NumericalSemigroup::from_generators({6, 8, 9});
    const auto r = clifford_of_curve(s);
    EXPECT_EQ(r.clifford, 3);
    EXPECT_EQ(r.clifford_dimension, 3);
    EXPECT_EQ(exponent_lists(r.dimension_witnesses), (std::vector<std::vector<int>>{{6, 8, 9}}));
}

TEST(Clifford, NonplanarQuintic) {
    const auto s = NumericalSemigroup::from_generators({5, 9, 13, 17, 21});
    const auto r = clifford_of_curve(s);
    EXPECT_EQ(r.clifford, 2);
    EXPECT_EQ(r.clifford_dimension, 2);
    EXPECT_EQ(exponent_lists(r.dimension_witnesses), (std::vector<std::vector<int>>{{4, 5}}));
    for (const auto& f : r.computing_sheaves) EXPECT_FALSE(is_invertible(f));
}

TEST(Clifford, PlaneSextic) {
    const auto r = clifford_of_curve(NumericalSemigroup::from_generators({5, 6}));
    EXPECT_EQ(r.clifford, 2);
    EXPECT_EQ(r.clifford_dimension, 2);
}

TEST(Clifford, ComputingSheavesAreConsistent) {
    for_each_semigroup(8, [](const NumericalSemigroup& s) {
        if (s.genus() < 4) return;
        const auto r = clifford_of_curve(s);
        ASSERT_FALSE(r.computing_sheaves.empty());
        int min_h0 = 1 << 20;
        for (const auto& f : r.computing_sheaves) {
            ASSERT_TRUE(contributes_clifford(f));
            ASSERT_EQ(clifford_index(f), r.clifford);
            ASSERT_EQ(MonomialSheaf::from_key(s, f.key()).key(), f.key());
            min_h0 = std::min(min_h0, h0(f));
        }
        ASSERT_EQ(r.clifford_dimension, min_h0 - 1);
        for (const auto& f : r.dimension_witnesses) ASSERT_EQ(h0(f), min_h0);
    });
}

TEST(Clifford, LowGenusPolicy) {
    const auto hyper = clifford_of_curve(NumericalSemigroup::from_generators({2, 7}));
    EXPECT_EQ(hyper.clifford, 0);
    EXPECT_EQ(hyper.clifford_dimension, 1);
    const auto g2 = clifford_of_curve(NumericalSemigroup::from_generators({3, 4, 5}));
    EXPECT_EQ(g2.clifford, 0);
    EXPECT_EQ(g2.clifford_dimension, 1);
    EXPECT_EQ(code_of([] { clifford_of_curve(NumericalSemigroup::from_generators({3, 5, 7})); }),
              errc::clifford_undefined);
    EXPECT_EQ(code_of([] { clifford_of_curve(NumericalSemigroup::from_generators({3, 4})); }),
              errc::clifford_undefined);
    EXPECT_EQ(clifford_of_curve(NumericalSemigroup::from_generators({4, 5, 6, 7})).clifford, 0);
    EXPECT_EQ(code_of([] { clifford_of_curve(NumericalSemigroup::natural()); }), errc::smooth_curve);
}

TEST(Clifford, ParallelSearchIsScheduleIndependent) {
    for (auto gens : {std::vector<int>{9, 10}, std::vector<int>{6, 8, 9}, std::vector<int>{7, 13, 19, 25, 31, 37, 43}}) {
        const auto s = NumericalSemigroup::from_generators(gens);
        const auto serial = clifford_of_curve(s);
        for (int jobs : {2, 3, 8}) {
            const auto par = clifford_of_curve(s, CliffordOptions{jobs, {}});
            EXPECT_EQ(par.clifford, serial.clifford);
            EXPECT_EQ(par.clifford_dimension, serial.clifford_dimension);
            EXPECT_EQ(par.candidates, serial.candidates);
            EXPECT_EQ(exponent_lists(par.computing_sheaves), exponent_lists(serial.computing_sheaves));
        }
    }
}

TEST(Clifford, VisitorSeesEveryContributingCandidate) {
    const auto s = NumericalSemigroup::from_generators({4, 7, 10, 13});
    long long seen = 0;
    CliffordOptions opt;
    opt.jobs = 4;
    opt.on_visit = [&](const SheafCandidate& c) {
        ++seen;
        EXPECT_GE(c.h0, 2);
        EXPECT_GE(c.h1, 2);
    };
    const auto r = clifford_of_curve(s, opt);
    EXPECT_EQ(seen, r.candidates);
}

TEST(Oracle, AgreesOnNamedCurves) {
    for (auto gens : {std::vector<int>{6, 8, 9}, std::vector<int>{5, 6}, std::vector<int>{4, 7, 10, 13}}) {
        const auto s = NumericalSemigroup::from_generators(gens);
        const auto fast = clifford_of_curve(s);
        const auto brute = clifford_brute_oracle(s, s.genus());
        EXPECT_EQ(brute.clifford, fast.clifford);
        EXPECT_EQ(brute.clifford_dimension, fast.clifford_dimension);
        EXPECT_EQ(exponent_lists(brute.computing_sheaves), exponent_lists(fast.computing_sheaves));
    }
}

TEST(Oracle, LowGenusMatchesMainSolver) {
    for_each_semigroup(3, [](const NumericalSemigroup& s) {
        if (s.is_smooth()) return;
        const auto a = code_of([&] { clifford_of_curve(s); });
        const auto b = code_of([&] { clifford_brute_oracle(s, s.genus()); });
        EXPECT_EQ(a, b);
    });
}

TEST(Oracle, GenusGuard) {
    const auto s = NumericalSemigroup::from_generators({2, 27});
    EXPECT_EQ(code_of([&] { clifford_brute_oracle(s, 3); }), errc::genus_too_large);
}

TEST(Trigonal, Patterns) {
    using K = TrigonalClass::Kind;
    const auto p1 = classify_trigonal(NumericalSemigroup::from_gaps({1, 2, 3, 6}));
    EXPECT_EQ(p1, (TrigonalClass{K::pattern_i, 4, 1, 2}));
    // {0,4,6,->} also fits the block shape with k = 0, l = 2; the even-step shape wins.
    const auto p2 = classify_trigonal(NumericalSemigroup::from_gaps({1, 2, 3, 5}));
    EXPECT_EQ(p2.kind, K::pattern_ii);
    EXPECT_EQ(p2.k, 1);
    const auto p3 = classify_trigonal(NumericalSemigroup::from_gaps({1, 2, 3, 5, 7}));
    EXPECT_EQ(p3, (TrigonalClass{K::pattern_ii, 4, 2, 0}));
    EXPECT_EQ(classify_trigonal(NumericalSemigroup::from_generators({3, 7})).kind, K::pattern_iii);
    EXPECT_EQ(classify_trigonal(NumericalSemigroup::from_generators({5, 6})).kind, K::not_trigonal);
    EXPECT_EQ(classify_trigonal(NumericalSemigroup::from_generators({2, 5})).kind, K::gonality_le2);
    EXPECT_EQ(classify_trigonal(NumericalSemigroup::from_generators({4, 5, 6, 7})).kind, K::gonality_le2);
}

TEST(Trigonal, AgreesWithGonalityUpToGenus10) {
    for_each_semigroup(10, [](const NumericalSemigroup& s) {
        if (s.is_smooth()) return;
        ASSERT_EQ(classify_trigonal(s).trigonal(), gonality(s).gonality == 3);
    });
}

TEST(Families, PlaneClosedFormMatchesSolver) {
    for (int a = 4; a <= 9; ++a) {
        const auto e = plane_closed_form(a);
        const auto r = clifford_of_curve(e.semigroup);
        EXPECT_EQ(r.clifford, e.clifford);
        EXPECT_EQ(r.clifford_dimension, e.clifford_dimension);
        EXPECT_EQ(gonality(e.semigroup).gonality, *e.gonality);
        const auto witness = MonomialSheaf::make(e.semigroup, e.witness_exponents);
        bool found = false;
        for (const auto& f : r.computing_sheaves) found = found || f.key() == witness.key();
        EXPECT_TRUE(found) << "alpha " << a;
    }
    EXPECT_EQ(code_of([] { plane_closed_form(3); }), errc::degree_too_small);
}

TEST(Families, NonplanarMatchesSolver) {
    EXPECT_EQ(nonplanar_semigroup(4).min_generators(), (std::vector<int>{4, 7, 10, 13}));
    for (int a = 4; a <= 7; ++a) {
        const auto e = nonplanar_family(a);
        const auto r = clifford_of_curve(e.semigroup);
        EXPECT_EQ(r.clifford, e.clifford);
        EXPECT_EQ(r.clifford_dimension, e.clifford_dimension);
        for (const auto& f : r.computing_sheaves) EXPECT_FALSE(is_invertible(f));
    }
    EXPECT_EQ(code_of([] { nonplanar_family(3); }), errc::degree_too_small);
}

TEST(Relations, HoldUpToGenus10) {
    for_each_semigroup(10, [](const NumericalSemigroup& s) {
        if (s.is_smooth()) return;
        const auto gon = gonality(s);
        std::optional<CliffordResult> cl;
        try {
            cl = clifford_of_curve(s);
        } catch (const error& e) {
            ASSERT_EQ(e.code(), errc::clifford_undefined);
            ASSERT_LE(s.genus(), 3);
            return;
        }
        for (const auto& c : relations_report(s, gon, *cl)) ASSERT_TRUE(c.holds) << c.name;
    });
}

TEST(Relations, NamedExamples) {
    const auto r = relations_report(NumericalSemigroup::from_generators({3, 4, 5}));
    ASSERT_FALSE(r.empty());
    EXPECT_EQ(r.front().name, "cliff_zero_iff_gon_two");
    EXPECT_TRUE(r.front().holds);
    for (const auto& c : relations_report(NumericalSemigroup::from_generators({6, 8, 9}))) EXPECT_TRUE(c.holds);
}

TEST(Oracle, AgreesAtGenus9And10) {
    int curves = 0;
    for_each_semigroup(10, [&](const NumericalSemigroup& s) {
        if (s.genus() < 9) return;
        ++curves;
        const auto fast = clifford_of_curve(s);
        const auto brute = clifford_brute_oracle(s, s.genus());
        ASSERT_EQ(brute.clifford, fast.clifford);
        ASSERT_EQ(brute.clifford_dimension, fast.clifford_dimension);
        ASSERT_EQ(exponent_lists(brute.computing_sheaves), exponent_lists(fast.computing_sheaves));
    });
    EXPECT_EQ(curves, 118 + 204);
}

/// A contributing sheaf with Cliff(F) = 0 exists only on curves of gonality 2.
TEST(Clifford, ZeroOnlyForGonalityTwo) {
    for_each_semigroup(9, [](const NumericalSemigroup& s) {
        if (s.is_smooth()) return;
        bool zero = false;
        CliffordOptions opt;
        opt.on_visit = [&](const SheafCandidate& c) { zero = zero || c.clifford == 0; };
        try {
            clifford_of_curve(s, opt);
        } catch (const error&) {
        }
        if (zero) ASSERT_EQ(gonality(s).gonality, 2);
    });
}
