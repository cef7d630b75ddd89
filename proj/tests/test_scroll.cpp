// Canonical coordinates, pencil matrices, scroll types and monomial models.

#include "cliffsemi/scroll.hpp"
#include "cliffsemi/solvers.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace cliffsemi;

namespace {

NumericalSemigroup plane_sextic() { return NumericalSemigroup::from_generators({5, 6}); }
NumericalSemigroup second_example() { return NumericalSemigroup::from_gaps({1, 2, 4, 5, 7, 8, 11}); }

} // namespace

TEST(Canonical, Exponents) {
    EXPECT_EQ(canonical_exponents(plane_sextic()), (std::vector<int>{0, 5, 6, 10, 11, 12, 15, 16, 17, 18}));
    EXPECT_EQ(canonical_exponents(second_example()), (std::vector<int>{0, 3, 4, 6, 7, 9, 10}));
    EXPECT_EQ(canonical_exponents(NumericalSemigroup::from_generators({2, 3})), (std::vector<int>{0}));
    EXPECT_THROW(canonical_exponents(NumericalSemigroup::natural()), error);
}

TEST(PencilMatrix, PlaneSextic) {
    const auto f = MonomialSheaf::make(plane_sextic(), {4, 5, 6});
    const Pencil p05(f, 0, 5);
    EXPECT_EQ(to_string(pencil_matrix(p05)), "[[x2,x4,x5],[x4,x7,x8]]");
    // Second row: 6+6, 11+6, 12+6 = 12, 17, 18, i.e. x5, x8, x9.
    const Pencil p46(f, 4, 6);
    const auto m = pencil_matrix(p46);
    EXPECT_EQ(m.rows[0], (std::vector<int>{3, 6, 7}));
    EXPECT_EQ(m.rows[1], (std::vector<int>{5, 8, 9}));
}

TEST(PencilMatrix, SecondExample) {
    const auto f = MonomialSheaf::make(second_example(), {3, 4, 6});
    EXPECT_EQ(to_string(pencil_matrix(Pencil(f, 0, 4))), "[[x0,x1],[x2,x4]]");
}

TEST(PencilMatrix, EmptyDual) {
    const auto s = NumericalSemigroup::from_generators({3, 4});
    const auto f = MonomialSheaf::make(s, {9});
    try {
        pencil_matrix(Pencil(f, 0, 3));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::empty_dual);
    }
}

TEST(Pencil, Validation) {
    const auto f = MonomialSheaf::make(plane_sextic(), {4, 5, 6});
    auto code = [&](int u, int v) {
        try {
            Pencil p(f, u, v);
        } catch (const error& e) {
            return e.code();
        }
        return errc::internal_assertion;
    };
    EXPECT_EQ(code(5, 0), errc::invalid_pencil);
    EXPECT_EQ(code(0, 3), errc::invalid_pencil);
    EXPECT_EQ(code(0, 10), errc::invalid_pencil);
    EXPECT_EQ(code(4, 4), errc::invalid_pencil);
    const auto o = MonomialSheaf::make(plane_sextic(), std::vector<int>{});
    EXPECT_THROW(Pencil(o, 0, 5), error);
}

TEST(Pencil, StandardFlag) {
    const auto s = plane_sextic();
    EXPECT_TRUE(Pencil(MonomialSheaf::make(s, {6}), 0, 6).standard());
    EXPECT_FALSE(Pencil(MonomialSheaf::make(s, {6}), 5, 6).standard());
    EXPECT_FALSE(Pencil(MonomialSheaf::make(s, {4, 5, 6}), 0, 5).standard());
}

TEST(ScrollType, NamedExamples) {
    const auto f = MonomialSheaf::make(plane_sextic(), {4, 5, 6});
    const auto t1 = scroll_type(Pencil(f, 0, 5));
    EXPECT_EQ(to_string(t1), "S(2,1,0,0,0,0,0) in P^9");
    EXPECT_EQ(t1.dim, 7);
    EXPECT_EQ(to_string(scroll_type(Pencil(f, 4, 6))), "S(1,1,1,0,0,0,0) in P^9");

    const auto h = MonomialSheaf::make(second_example(), {3, 4, 6});
    EXPECT_EQ(scroll_type(Pencil(h, 0, 4)).invariants, (std::vector<int>{1, 1, 0, 0, 0}));
    EXPECT_EQ(scroll_type(Pencil(h, 3, 6)).invariants, (std::vector<int>{2, 0, 0, 0, 0}));
    EXPECT_EQ(scroll_type(Pencil(h, 3, 6)).ambient, 6);
}

/// Every pencil of every contributing sheaf up to genus 10.
TEST(ScrollType, ConsistencyOverAllPencils) {
    long long pencils = 0;
    for_each_semigroup(10, [&](const NumericalSemigroup& s) {
        if (s.is_smooth()) return;
        const auto coords = canonical_exponents(s);
        for_each_ideal(s, [&](const ideal_node& n) {
            for (int a = std::max(1, n.max_generator); a < s.frobenius(); ++a) {
                if (!n.mask[a]) continue;
                const auto f = MonomialSheaf::from_key(s, sheaf_key{n.mask, a});
                if (!contributes_clifford(f)) continue;
                std::optional<int> dim;
                for (const auto& p : pencils_of(f)) {
                    const auto t = scroll_type(p);
                    ASSERT_EQ(t.degree_e, h1(f));
                    ASSERT_EQ(t.dim, scrollar_dimension(f));
                    ASSERT_EQ(t.ambient, s.genus() - 1);
                    if (dim) ASSERT_EQ(*dim, t.dim);
                    dim = t.dim;
                    const auto m = pencil_matrix(p);
                    for (const auto& row : m.rows)
                        for (int k : row) ASSERT_LT(k, static_cast<int>(coords.size()));
                    ++pencils;
                }
            }
        });
    });
    EXPECT_GT(pencils, 5000);
}

TEST(RealizingCurve, Exponents) {
    EXPECT_EQ(realizing_curve_exponents(NumericalSemigroup::from_generators({5, 9, 13, 17, 21})),
              (std::vector<int>{5, 9, 13, 17, 21, 22}));
    EXPECT_EQ(realizing_curve_exponents(NumericalSemigroup::from_generators({6, 8, 9})), (std::vector<int>{6, 8, 9}));
    EXPECT_EQ(realizing_curve_exponents(plane_sextic()), (std::vector<int>{5, 6}));
    // <3,5>: 6 is in S, so the model ends 5, 6.
    EXPECT_EQ(realizing_curve_exponents(NumericalSemigroup::from_generators({3, 5})), (std::vector<int>{3, 5, 6}));
    // <4,6,9>: 10 is in S, so append it.
    EXPECT_EQ(realizing_curve_exponents(NumericalSemigroup::from_generators({4, 6, 9})),
              (std::vector<int>{4, 6, 9, 10}));
}

TEST(RealizingCurve, GeneratesSemigroupAndEndsConsecutive) {
    for_each_semigroup(9, [](const NumericalSemigroup& s) {
        if (s.is_smooth()) return;
        const auto e = realizing_curve_exponents(s);
        ASSERT_GE(e.size(), 2u);
        ASSERT_EQ(e[e.size() - 1], e[e.size() - 2] + 1);
        ASSERT_TRUE(std::is_sorted(e.begin(), e.end()));
        ASSERT_EQ(NumericalSemigroup::from_generators(e), s);
    });
}
