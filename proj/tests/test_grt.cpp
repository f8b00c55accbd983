#include <gtest/gtest.h>

#include <random>

#include "genuskit/grt.hpp"

using namespace genuskit;
using lie::LieElement;

namespace {

LieElement random_element(std::mt19937_64& rng, const lie::FreeLie& lie, int degree, int terms) {
    auto basis = lie::lyndon_words(lie.alphabet(), degree);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    LieElement x;
    for (int i = 0; i < terms; ++i) x.add_term(basis[pick(rng)], Rational(coeff(rng)));
    return x;
}

// D_p on a Lyndon basis element by the Leibniz rule over its standard bracketing.
LieElement derivation_oracle(const lie::FreeLie& lie, const LieElement& p, const lie::Word& w) {
    if (w.size() == 1) return w[0] == 0 ? lie.bracket(p, lie.generator(0)) : LieElement();
    auto [u, v] = lie::standard_factorization(w);
    return lie.bracket(derivation_oracle(lie, p, u), LieElement::basis(v)) +
           lie.bracket(LieElement::basis(u), derivation_oracle(lie, p, v));
}

LieElement derivation_oracle(const lie::FreeLie& lie, const LieElement& p, const LieElement& x) {
    LieElement out;
    for (const auto& [w, c] : x.terms()) out += derivation_oracle(lie, p, w) * c;
    return out;
}

}  // namespace

TEST(Grt, IharaElements) {
    grt::GrtContext g;
    EXPECT_EQ(g.ihara_psi(3), g.parse("3*[A,[A,B]] + 3*[B,[A,B]]"));
    EXPECT_EQ(g.ihara_psi(5), g.parse("5*[A,[A,[A,[A,B]]]] + 10*[A,[A,[B,[A,B]]]] + 10*[A,[B,[B,[A,B]]]] + 5*[B,[B,[B,[A,B]]]]"));
    EXPECT_EQ(g.substitute(g.ihara_psi(3), g.B(), g.A()), -g.ihara_psi(3));
    EXPECT_THROW(g.ihara_psi(4), std::invalid_argument);
    EXPECT_THROW(g.ihara_psi(1), std::invalid_argument);
}

TEST(Grt, Parse) {
    grt::GrtContext g;
    EXPECT_EQ(g.parse("[B,A]"), -g.parse("[A,B]"));
    EXPECT_TRUE(g.parse("[A,A]").is_zero());
    EXPECT_TRUE(g.parse("0").is_zero());
    EXPECT_EQ(g.parse("-1/2*[A,B] + A"), g.A() + g.parse("[A,B]") * Rational(-1, 2));
    EXPECT_THROW(g.parse("[A,B"), std::invalid_argument);
    EXPECT_THROW(g.parse("[A,C]"), std::invalid_argument);
    EXPECT_THROW(g.parse("A + - B"), std::invalid_argument);
}

TEST(Grt, CheckExamples) {
    grt::GrtContext g;
    const auto r3 = g.check(g.ihara_psi(3));
    ASSERT_EQ(r3.residuals.size(), 4u);
    EXPECT_TRUE(r3.passed());
    EXPECT_EQ(r3.residuals[3].relation, "pentagon");
    EXPECT_TRUE(g.check(LieElement()).passed());

    const auto rab = g.check(g.parse("[A,B]"));
    EXPECT_FALSE(rab.passed());
    EXPECT_EQ(rab.residuals[1].relation, "hexagon");
    EXPECT_EQ(rab.residuals[1].text, "3*[A,B]");
}

TEST(Grt, PentagonMethodsAgree) {
    grt::GrtContext elimination;
    grt::GrtContext semidirect(0);
    std::mt19937_64 rng(3);
    for (int d = 3; d <= 5; ++d) {
        std::vector<LieElement> candidates = {random_element(rng, elimination.free(), d, 2)};
        if (d % 2 == 1) candidates.push_back(elimination.ihara_psi(d));
        if (d == 5) candidates.push_back(elimination.solve(5, elimination.ihara_psi(5))->particular);
        for (const auto& psi : candidates) {
            const auto a = elimination.check(psi);
            const auto b = semidirect.check(psi);
            EXPECT_EQ(a.pentagon_method, grt::PentagonMethod::Elimination);
            EXPECT_EQ(b.pentagon_method, grt::PentagonMethod::Semidirect);
            EXPECT_EQ(a.residuals[3].zero, b.residuals[3].zero) << elimination.free().to_string(psi);
        }
    }
}

TEST(Grt, Solve) {
    grt::GrtContext g;
    const auto s3 = g.solve(3, g.ihara_psi(3));
    ASSERT_TRUE(s3.has_value());
    EXPECT_EQ(s3->particular, g.ihara_psi(3));
    EXPECT_FALSE(g.solve(3, g.parse("3*[A,[A,B]]")).has_value());
    EXPECT_FALSE(g.solve(2, g.parse("[A,B]")).has_value());

    const auto s5 = g.solve(5, g.ihara_psi(5));
    ASSERT_TRUE(s5.has_value());
    EXPECT_TRUE(g.check(s5->particular).passed());
    // The correction lies in [fr', fr'], so the depth-one part is unchanged.
    for (const auto& w : lie::lyndon_words(g.free().alphabet(), 5))
        if (std::count(w.begin(), w.end(), 1) == 1 || std::count(w.begin(), w.end(), 0) == 1)
            EXPECT_EQ(s5->particular.coefficient(w), g.ihara_psi(5).coefficient(w));
    for (const auto& d : s5->nullspace) EXPECT_TRUE(g.check(d).passed());
}

TEST(Grt, DrinfeldBracket) {
    grt::GrtContext g;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        const auto x = random_element(rng, g.free(), 2 + trial % 3, 3);
        const auto y = random_element(rng, g.free(), 3, 2);
        const auto z = random_element(rng, g.free(), 3, 2);
        EXPECT_TRUE(g.drinfeld_bracket(x, x).is_zero());
        EXPECT_EQ(g.drinfeld_bracket(x, y + z * Rational(2)), g.drinfeld_bracket(x, y) + g.drinfeld_bracket(x, z) * Rational(2));
        EXPECT_EQ(g.drinfeld_bracket(x, y), -g.drinfeld_bracket(y, x));
        EXPECT_EQ(g.derivation(x, y), derivation_oracle(g.free(), x, y));
    }
}

TEST(Grt, BracketClosure) {
    grt::GrtContext g;
    const auto psi5 = g.solve(5, g.ihara_psi(5));
    ASSERT_TRUE(psi5.has_value());
    const auto bracket = g.drinfeld_bracket(g.ihara_psi(3), psi5->particular);
    EXPECT_FALSE(bracket.is_zero());
    const auto report = g.check(bracket);
    EXPECT_EQ(report.degree, 8);
    EXPECT_EQ(report.pentagon_method, grt::PentagonMethod::Semidirect);
    EXPECT_TRUE(report.passed());
}
