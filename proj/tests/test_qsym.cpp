#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "genuskit/qsym.hpp"

using namespace genuskit;
using namespace genuskit::qsym;

namespace {

QSymmElement M(Composition c, long coeff = 1) { return QSymmElement::monomial(std::move(c), Rational(coeff)); }

// Direct enumeration of the chains m >= n_1 > ... > n_k >= 1.
Rational enumerate_chains(const Composition& c, int m) {
    Rational total;
    std::function<void(std::size_t, int, Rational)> rec = [&](std::size_t j, int below, Rational product) {
        if (j == c.size()) {
            total += product;
            return;
        }
        for (int n = 1; n < below; ++n) {
            Rational f = product;
            for (int e = 0; e < c[j]; ++e) f *= Rational(1, n);
            rec(j + 1, n, f);
        }
    };
    rec(0, m + 1, Rational(1));
    return total;
}

Composition random_composition(std::mt19937_64& rng, int max_weight) {
    int w = std::uniform_int_distribution<int>(0, max_weight)(rng);
    Composition c;
    while (w > 0) {
        const int part = std::uniform_int_distribution<int>(1, w)(rng);
        c.push_back(part);
        w -= part;
    }
    return c;
}

QSymmElement random_element(std::mt19937_64& rng, int max_weight) {
    QSymmElement x;
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int i = 0; i < 2; ++i) x += M(random_composition(rng, max_weight), coeff(rng));
    return x;
}

symm::SymmElement random_symm(std::mt19937_64& rng, int max_weight) {
    symm::SymmElement x(symm::Basis::E);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int i = 0; i < 2; ++i) {
        const int w = std::uniform_int_distribution<int>(1, max_weight)(rng);
        const auto parts = symm::partitions(w);
        x.add_term(parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)], Rational(coeff(rng)));
    }
    return x;
}

// z_k acting on z^p as a first-order operator.
std::map<int, Rational> act_on(const WittField& v, const std::map<int, Rational>& f) {
    std::map<int, Rational> out;
    for (const auto& [k, c] : v.terms())
        for (const auto& [p, a] : f) out[p + k] += c * a * Rational(p);
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace

TEST(QSymm, StuffleExamples) {
    EXPECT_EQ(M({2}) * M({3}), M({2, 3}) + M({3, 2}) + M({5}));
    EXPECT_EQ(M({1}) * M({1}), M({1, 1}, 2) + M({2}));
    EXPECT_EQ(QSymmElement::one() * M({2, 1}), M({2, 1}));
    EXPECT_EQ((M({2}) * M({3})).to_string(), "M[2,3] + M[3,2] + M[5]");
    EXPECT_EQ(stuffle({1, 2}, {3}).terms().size(), 5u);
}

TEST(QSymm, StuffleAlgebra) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_element(rng, 3), b = random_element(rng, 3), c = random_element(rng, 2);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(QSymm, FiniteTruncation) {
    EXPECT_EQ(finite_truncation(M({2}), 2), Rational(5, 4));
    EXPECT_EQ(finite_truncation(M({2, 1}), 2), Rational(1, 4));
    EXPECT_EQ(finite_truncation(M({2}) * M({3}), 10), finite_truncation(M({2}), 10) * finite_truncation(M({3}), 10));
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto c = random_composition(rng, 5);
        EXPECT_EQ(finite_truncation(M(c), 7), enumerate_chains(c, 7)) << composition_string(c);
    }
}

TEST(QSymm, TruncationIsRingMap) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_element(rng, 5), b = random_element(rng, 5);
        EXPECT_EQ(finite_truncation(a * b, 12), finite_truncation(a, 12) * finite_truncation(b, 12));
    }
}

TEST(QSymm, FromSymm) {
    using symm::Basis;
    using symm::SymmElement;
    EXPECT_EQ(symm_to_qsymm(SymmElement::generator(Basis::P, 2)), M({2}));
    EXPECT_EQ(symm_to_qsymm(SymmElement::basis_element(Basis::P, {2, 1})), M({1, 2}) + M({2, 1}) + M({3}));
    EXPECT_EQ(symm_to_qsymm(SymmElement::generator(Basis::E, 2)), M({1, 1}));
    EXPECT_EQ(symm_to_qsymm(SymmElement::generator(Basis::H, 2)), M({1, 1}) + M({2}));
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = random_symm(rng, 3), y = random_symm(rng, 2);
        EXPECT_EQ(symm_to_qsymm(x * y), symm_to_qsymm(x) * symm_to_qsymm(y));
        EXPECT_EQ(finite_truncation(symm_to_qsymm(x), 6), symm::specialize_value(x, symm::Specialization::finite(6)));
    }
}

TEST(Mzv, Values) {
    const auto z2 = mzv_eval({2}, 1e-8);
    EXPECT_NEAR(static_cast<double>(z2.value), M_PI * M_PI / 6, 1e-8);
    EXPECT_LE(z2.error_bound, 1e-8L);
    EXPECT_EQ(z2.cutoff, kInitialCutoff);
    const auto z3 = mzv_eval({3}, 1e-6), z21 = mzv_eval({2, 1}, 1e-6);
    EXPECT_LT(std::fabs(static_cast<double>(z21.value - z3.value)), 1e-6);
    EXPECT_NEAR(static_cast<double>(z3.value), 1.2020569031595942, 1e-9);
    EXPECT_NEAR(static_cast<double>(mzv_eval({2, 2}, 1e-7).value), 0.8117424252833536, 1e-7);
    EXPECT_NEAR(static_cast<double>(mzv_eval({3, 1}, 1e-7).value), std::pow(M_PI, 4) / 360, 1e-7);
    EXPECT_NEAR(static_cast<double>(mzv_eval({2, 1, 1}, 1e-6).value), std::pow(M_PI, 4) / 90, 1e-6);
    // A tighter tolerance raises the cutoff.
    EXPECT_GT(mzv_eval({2, 1}, 1e-9).cutoff, kInitialCutoff);
    EXPECT_EQ(mzv_at_cutoff({2, 1}, 1000).value, mzv_at_cutoff({2, 1}, 1000).value);
}

TEST(Mzv, Rejections) {
    EXPECT_THROW(mzv_eval({1, 2}, 1e-6), DivergentSeries);
    EXPECT_THROW(mzv_eval({1}, 1e-6), DivergentSeries);
    EXPECT_THROW(mzv_eval({2}, 0), std::invalid_argument);
    EXPECT_THROW(mzv_eval({2, 1, 1, 1, 1}, 1e-15), std::runtime_error);
    EXPECT_THROW(parse_composition("2,0"), std::invalid_argument);
    EXPECT_EQ(parse_composition("2,1"), (Composition{2, 1}));
}

TEST(Mzv, StuffleNumerically) {
    const auto a = mzv_eval({2}, 1e-8).value * mzv_eval({3}, 1e-8).value;
    const auto b = mzv_eval({2, 3}, 1e-8).value + mzv_eval({3, 2}, 1e-8).value + mzv_eval({5}, 1e-8).value;
    EXPECT_LT(std::fabs(static_cast<double>(a - b)), 1e-6);
}

TEST(Witt, Bracket) {
    const auto z = [](int k) { return WittField::generator(k); };
    for (int j = 1; j <= 5; ++j)
        for (int k = 1; k <= 5; ++k) {
            EXPECT_EQ(bracket(z(j), z(k)), bracket(z(k), z(j)) * Rational(-1));
            for (int l = 1; l <= 5; ++l) {
                const auto jac = bracket(z(j), bracket(z(k), z(l))) + bracket(z(k), bracket(z(l), z(j))) +
                                 bracket(z(l), bracket(z(j), z(k)));
                EXPECT_TRUE(jac.is_zero());
            }
            // Commutator of the operators on z^p.
            for (int p = 1; p <= 3; ++p) {
                const std::map<int, Rational> mono{{p, Rational(1)}};
                auto lhs = act_on(z(j), act_on(z(k), mono));
                for (const auto& [q, c] : act_on(z(k), act_on(z(j), mono))) lhs[q] -= c;
                std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
                EXPECT_EQ(lhs, act_on(bracket(z(j), z(k)), mono));
            }
        }
}

TEST(Witt, FromFreeLie) {
    const lie::FreeLie f(lie::Alphabet::graded("Z", 5));
    const auto Z = [&f](int k) { return f.generator(k - 1); };
    EXPECT_EQ(lie_to_witt(Z(1), f.alphabet()), WittField::generator(1));
    EXPECT_EQ(lie_to_witt(f.bracket(Z(1), Z(2)), f.alphabet()), WittField::generator(3));
    EXPECT_EQ(lie_to_witt(f.bracket(Z(1), f.bracket(Z(1), Z(2))), f.alphabet()), WittField::generator(4, Rational(2)));
    EXPECT_EQ(lie_to_witt(f.bracket(Z(1), f.bracket(Z(1), Z(2))), f.alphabet()).to_string(), "2*z_4");
}
