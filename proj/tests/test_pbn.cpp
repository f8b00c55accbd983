#include <gtest/gtest.h>

#include <random>

#include "genuskit/linalg.hpp"
#include "genuskit/pbn.hpp"

using namespace genuskit;
using namespace genuskit::braid;
using lie::LieElement;
using lie::Word;

namespace {

// p_n is an iterated semidirect sum of free Lie algebras on 1, 2, ..., n-1 generators.
std::size_t free_sum_dimension(int n, int d) {
    long total = 0;
    for (int k = 1; k < n; ++k) total += lie::witt_dimension(k, d);
    return static_cast<std::size_t>(total);
}

LieElement random_element(std::mt19937_64& rng, const lie::FreeLie& lie, int degree, int terms) {
    auto basis = lie::lyndon_words(lie.alphabet(), degree);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    LieElement x;
    for (int i = 0; i < terms; ++i) x.add_term(basis[pick(rng)], Rational(coeff(rng)));
    return x;
}

}  // namespace

TEST(PureBraid, Alphabet) {
    const auto a = pure_braid_alphabet(4);
    EXPECT_EQ(a.names, (std::vector<std::string>{"x12", "x13", "x23", "x14", "x24", "x34"}));
    for (int j = 2; j <= 12; ++j)
        for (int i = 1; i < j; ++i) {
            EXPECT_EQ(generator_pair(generator_letter(i, j)), std::make_pair(i, j));
            EXPECT_EQ(generator_letter(j, i), generator_letter(i, j));
        }
    EXPECT_EQ(pure_braid_alphabet(10).names.back(), "x9_10");
}

TEST(PureBraid, SmallDimensions) {
    PureBraid p3(3), p4(4);
    EXPECT_EQ(p3.component(1).dimension(), 3u);
    EXPECT_EQ(p3.component(2).dimension(), 1u);
    EXPECT_EQ(p3.component(3).dimension(), 2u);
    EXPECT_EQ(p4.component(1).dimension(), 6u);
    EXPECT_EQ(p4.component(2).dimension(), 4u);
    EXPECT_EQ(p4.component(2).free_dimension, 15u);
}

TEST(PureBraid, DimensionsMatchFreeSum) {
    for (int n = 2; n <= 5; ++n) {
        PureBraid p(n);
        const int top = n <= 4 ? 5 : 3;
        for (int d = 1; d <= top; ++d) EXPECT_EQ(p.component(d).dimension(), free_sum_dimension(n, d)) << n << " " << d;
    }
}

TEST(PureBraid, RelationsReduceToZero) {
    for (int n = 2; n <= 6; ++n) {
        PureBraid p(n);
        for (const auto& r : p.relations()) EXPECT_TRUE(p.is_zero(r));
        EXPECT_FALSE(p.is_zero(p.x(1, 2)));
    }
    PureBraid p4(4);
    EXPECT_TRUE(p4.is_zero(p4.lie().bracket(p4.x(1, 2), p4.x(1, 3) + p4.x(2, 3))));
    EXPECT_FALSE(p4.is_zero(p4.lie().bracket(p4.x(1, 2), p4.x(1, 3))));
}

TEST(PureBraid, CapExceeded) {
    PureBraid p(6, 200);
    EXPECT_NO_THROW(p.component(2));
    EXPECT_THROW(p.component(3), CapExceeded);
}

TEST(SemidirectPBn, RelationsVanish) {
    for (int n = 2; n <= 6; ++n) {
        PureBraid p(n);
        SemidirectPBn s(n);
        for (const auto& r : p.relations()) EXPECT_TRUE(SemidirectPBn::is_zero(s.image(r)));
    }
}

TEST(SemidirectPBn, AgreesWithElimination) {
    PureBraid p(4);
    SemidirectPBn s(4);
    for (int d = 3; d <= 5; ++d) {
        linalg::SparseEchelon<std::pair<int, Word>> span;
        for (const auto& w : lie::lyndon_words(p.lie().alphabet(), d))
            span.insert(SemidirectPBn::coordinates(s.image(LieElement::basis(w))));
        EXPECT_EQ(span.rank(), p.component(d).dimension()) << d;
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 3 + trial % 3;
        LieElement x = random_element(rng, p.lie(), d, 3);
        // Force some elements into the ideal.
        if (trial % 2 == 0) x = p.lie().bracket(random_element(rng, p.lie(), d - 2, 2), p.relations()[trial % 8]);
        EXPECT_EQ(p.is_zero(x), SemidirectPBn::is_zero(s.image(x))) << trial;
    }
}

TEST(SemidirectPBn, BracketIsLie) {
    SemidirectPBn s(4);
    PureBraid p(4);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = s.image(random_element(rng, p.lie(), 1 + trial % 2, 3));
        const auto b = s.image(random_element(rng, p.lie(), 1, 3));
        const auto c = s.image(random_element(rng, p.lie(), 2, 2));
        auto sum = s.bracket(a, b);
        SemidirectPBn::add_to(sum, s.bracket(b, a));
        EXPECT_TRUE(SemidirectPBn::is_zero(sum));
        auto jacobi = s.bracket(a, s.bracket(b, c));
        SemidirectPBn::add_to(jacobi, s.bracket(b, s.bracket(c, a)));
        SemidirectPBn::add_to(jacobi, s.bracket(c, s.bracket(a, b)));
        EXPECT_TRUE(SemidirectPBn::is_zero(jacobi));
    }
}
