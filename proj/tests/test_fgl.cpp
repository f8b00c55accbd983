#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "genuskit/fgl.hpp"
#include "genuskit/genus.hpp"
#include "support.hpp"

using namespace genuskit;
using namespace genuskit::fgl;

namespace {

const std::vector<std::string> kXY = {"X", "Y"};

MultiSeries monomial(int i, int j, const SymbolPoly& c, int order) {
    MultiSeries m(kXY, order);
    m.add_term({i, j}, c);
    return m;
}

SymbolPoly t(const std::string& prefix, int k) { return SymbolPoly(coefficient_symbol(prefix, k)); }

FormalDiffeo random_odd(std::mt19937_64& rng, int degree) {
    return FormalDiffeo(Series::generate("z", degree + 1, [&](int k) {
        if (k == 1) return SymbolPoly(1);
        if (k % 2 == 0) return SymbolPoly();
        return SymbolPoly(support::random_rational(rng));
    }));
}

}  // namespace

TEST(Fgl, AdditiveAndMultiplicativeLaws) {
    EXPECT_EQ(fgl_from_log(FormalDiffeo::identity(5)),
              monomial(1, 0, 1, 6) + monomial(0, 1, 1, 6));
    Series one_plus_z = Series::constant("z", 7, SymbolPoly(1)) + Series::variable("z", 7);
    MultiSeries mult = fgl_from_log(FormalDiffeo(log(one_plus_z)));
    EXPECT_EQ(mult, monomial(1, 0, 1, 7) + monomial(0, 1, 1, 7) + monomial(1, 1, 1, 7));
}

TEST(Fgl, GenericLowDegree) {
    MultiSeries F = fgl_from_log(FormalDiffeo::generic(3));
    EXPECT_EQ(F.coefficient({1, 1}), t("t", 1) * Rational(-2));
    EXPECT_EQ(F.coefficient({2, 0}), SymbolPoly());
    EXPECT_TRUE(check_fgl_axioms(F).passed());
}

TEST(Fgl, AxiomFailureIsReported) {
    MultiSeries F = monomial(1, 0, 1, 4) + monomial(0, 1, 1, 4) + monomial(2, 0, 1, 4);
    AxiomReport r = check_fgl_axioms(F);
    EXPECT_EQ(r.unit, monomial(2, 0, 1, 4));
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.checks()[0].passed);
}

TEST(Fgl, GammaLogarithmGivesGroupLaw) {
    Series l = genus::log_series(genus::gamma(8)).truncated(8);
    EXPECT_TRUE(check_fgl_axioms(fgl_from_log(FormalDiffeo(l))).passed());
}

TEST(Fgl, RandomDiffeosGiveGroupLaws) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial)
        EXPECT_TRUE(check_fgl_axioms(fgl_from_log(FormalDiffeo(support::random_diffeo_series(rng, 10)))).passed());
    for (int trial = 0; trial < 3; ++trial)
        EXPECT_TRUE(check_fgl_axioms(fgl_from_log(FormalDiffeo(support::random_symbolic_diffeo_series(rng, 11)))).passed());
}

TEST(Fgl, CoproductClosedForms) {
    auto delta = ln_coproduct(3);
    EXPECT_EQ(delta[0], t("t'", 1) + t("t''", 1));
    EXPECT_EQ(delta[1], t("t'", 2) + t("t'", 1) * t("t''", 1) * Rational(2) + t("t''", 2));
    // t'(t''(z)) at z^4 by hand
    EXPECT_EQ(delta[2], t("t'", 3) + t("t'", 2) * t("t''", 1) * Rational(3) + t("t'", 1) * t("t''", 1).pow(2) +
                            t("t'", 1) * t("t''", 2) * Rational(2) + t("t''", 3));
    auto terms = tensor_terms(delta[1]);
    ASSERT_EQ(terms.size(), 3u);
    for (const auto& term : terms) EXPECT_EQ(term.left.degree() + term.right.degree(), 2);
}

TEST(Fgl, HopfLaws) {
    for (const auto& c : check_hopf_laws(6)) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
}

TEST(Fgl, GradingAction) {
    EXPECT_EQ(grading_action(FormalDiffeo::identity(4)), FormalDiffeo::identity(4));
    FormalDiffeo one(Series::variable("z", 2) + Series::generate("z", 2, [](int k) {
                         return k == 2 ? t("t", 1) : SymbolPoly();
                     }));
    EXPECT_EQ(grading_action(one).t(1), SymbolPoly(sym::u()) * t("t", 1));
    FormalDiffeo g6 = FormalDiffeo::generic(6);
    EXPECT_EQ(grading_action(g6), grading_by_conjugation(g6));
    FormalDiffeo s = FormalDiffeo::generic(8, "s"), r = FormalDiffeo::generic(8, "r");
    EXPECT_EQ(grading_action(compose(s, r)), compose(grading_action(s), grading_action(r)));
}

TEST(Fgl, ComposeAndInvert) {
    auto poly = [](std::vector<long> c) {
        return FormalDiffeo(Series::generate("z", static_cast<int>(c.size()) - 1,
                                             [&c](int k) { return SymbolPoly(c[k]); }));
    };
    EXPECT_EQ(compose(poly({0, 1, 0, 1, 0, 0, 0, 0, 0, 0}), poly({0, 1, 0, 2, 0, 0, 0, 0, 0, 0})),
              poly({0, 1, 0, 3, 0, 6, 0, 6, 0, 2}));
    EXPECT_EQ(invert(poly({0, 1, 1, 0, 0})), poly({0, 1, -1, 2, -5}));
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        FormalDiffeo f(support::random_diffeo_series(rng, 11));
        EXPECT_EQ(compose(f, invert(f)), FormalDiffeo::identity(10));
        EXPECT_EQ(compose(invert(f), f), FormalDiffeo::identity(10));
    }
}

TEST(Fgl, OddSubgroupClosure) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        FormalDiffeo a = random_odd(rng, 15), b = random_odd(rng, 15);
        ASSERT_TRUE(a.is_odd());
        EXPECT_TRUE(compose(a, b).is_odd());
        EXPECT_TRUE(invert(a).is_odd());
    }
    FormalDiffeo g = FormalDiffeo::generic(7);
    EXPECT_FALSE(g.is_odd());
}

TEST(Fgl, ThomConstraint) {
    const SymbolPoly s1(sym::sigma(1)), s2(sym::sigma(2));
    Series even = Series::generate("e", 4, [&](int k) { return k == 0 ? SymbolPoly(1) : k == 2 ? s2 : SymbolPoly(); });
    EXPECT_TRUE(thom_twist_constraint(even).empty());
    Series odd = Series::generate("e", 4, [&](int k) { return k == 0 ? SymbolPoly(1) : k == 1 ? s1 : SymbolPoly(); });
    EXPECT_EQ(thom_twist_constraint(odd), std::vector<SymbolPoly>{s1});
    for (int degree : {7, 15}) {
        std::vector<SymbolPoly> expected;
        for (int k = 1; k <= degree; k += 2) expected.emplace_back(sym::sigma(k));
        EXPECT_EQ(thom_twist_constraint(generic_twist(degree)), expected);
    }
}

TEST(Fgl, HbarSeries) {
    Series todd = hbar_series(std::vector<SymbolPoly>(6, SymbolPoly(1)), 6);
    Series one_minus = Series::constant("e", 6, SymbolPoly(1)) - Series::variable("e", 6);
    EXPECT_EQ(todd, -log(one_minus));
    std::vector<SymbolPoly> additive(5, SymbolPoly());
    additive[0] = 1;
    EXPECT_EQ(hbar_series(additive, 5), Series::variable("e", 5));
    auto gcp = genus::cp_values(genus::gamma(10), 8);
    Series h = hbar_series(gcp, 9);
    EXPECT_EQ(h[2], -SymbolPoly(sym::gamma()));
    EXPECT_EQ(h, genus::log_series(genus::gamma(10)).truncated(9).renamed("e"));
    EXPECT_THROW(hbar_series(gcp, 4), std::invalid_argument);
}

TEST(Fgl, DescentInvariants) {
    auto gens = descent_generators(3);
    auto inv = gm_invariant_bidegrees(gens, 12);
    ASSERT_EQ(inv.size(), 3u);
    EXPECT_EQ(inv[0].text, "b^3*e_3");
    EXPECT_EQ(inv[0].bidegree, std::make_pair(1, -6));
    EXPECT_EQ(inv[1].bidegree, std::make_pair(1, -10));
    EXPECT_EQ(inv[2].bidegree, std::make_pair(1, -14));
    for (const auto& m : inv)
        if (m.exponents[1] == 1) EXPECT_EQ(m.exponents[0], 3);
}
