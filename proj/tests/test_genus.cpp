#include <gtest/gtest.h>

#include <cmath>

#include "genuskit/genus.hpp"

using namespace genuskit;
using namespace genuskit::genus;

namespace {

const SymbolPoly g_sym(sym::gamma());
const SymbolPoly pi_sym(sym::pi());

SymbolPoly zeta(int k) { return SymbolPoly(sym::zeta(k)); }

// sum_{n>=1} n^{-s} by direct summation plus an Euler-Maclaurin tail.
long double zeta_numeric(int s) {
    const int cutoff = 1000;
    long double sum = 0;
    for (int n = cutoff - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -s);
    const long double N = cutoff;
    sum += std::pow(N, 1 - s) / (s - 1) + std::pow(N, -s) / 2 + s * std::pow(N, -s - 1) / 12 -
           s * (s + 1.0L) * (s + 2) * std::pow(N, -s - 3) / 720;
    return sum;
}

long double pi_power(int k) { return std::pow(3.14159265358979323846264338327950288L, k); }

Rational divisor_power_sum(int n, int p) {
    Rational s(0);
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += Rational(d).pow(p);
    return s;
}

}  // namespace

TEST(Genus, ToddAgreesWithBernoulliGeneratingSeries) {
    Series todd_q = todd(10).Q;
    EXPECT_EQ(todd_q.truncated(2).to_string(), "1 + 1/2*z + 1/12*z^2 + O(z^3)");
    // z e^z / (e^z - 1) = e^z * sum B_n z^n / n!
    auto b = bernoulli_numbers(10);
    Series bern = Series::generate("z", 10, [&](int k) { return SymbolPoly(b[k] / factorial(k)); });
    Series ez = Series::generate("z", 10, [](int k) { return SymbolPoly(factorial(k).inverse()); });
    EXPECT_EQ(todd_q, bern * ez);
}

TEST(Genus, BernoulliTable) {
    auto b = bernoulli_numbers(20);
    EXPECT_EQ(b[1], Rational(-1, 2));
    EXPECT_EQ(b[2], Rational(1, 6));
    EXPECT_EQ(b[4], Rational(-1, 30));
    EXPECT_EQ(b[12], Rational(-691, 2730));
    for (int k = 3; k <= 19; k += 2) EXPECT_TRUE(b[k].is_zero());
    // (e^z - 1)/z * sum B_n z^n/n! = 1
    Series e1 = Series::generate("z", 20, [](int k) { return SymbolPoly(factorial(k + 1).inverse()); });
    Series bs = Series::generate("z", 20, [&](int k) { return SymbolPoly(b[k] / factorial(k)); });
    EXPECT_EQ(e1 * bs, Series::constant("z", 20, SymbolPoly(1)));
}

TEST(Genus, GammaSeries) {
    Series q = gamma(6).Q;
    EXPECT_EQ(q[1], -g_sym);
    EXPECT_EQ(q[2], g_sym * g_sym * Rational(1, 2) + zeta(2) * Rational(1, 2));
    for (int k = 0; k <= 6; ++k) EXPECT_TRUE(q[k].is_homogeneous(k)) << k;
}

TEST(Genus, CpValuesTwoRoutes) {
    for (const char* name : {"todd", "ahat", "L", "gamma"}) {
        Genus g = make_genus(name, 12);
        EXPECT_EQ(cp_by_extraction(g, 8), cp_by_reversion(g, 8)) << name;
        EXPECT_NO_THROW(cp_values(g, 8));
    }
    auto todd_values = cp_values(todd(12), 8);
    for (const auto& v : todd_values) EXPECT_EQ(v, SymbolPoly(1));
    auto l_values = cp_values(l_genus(12), 8);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(l_values[n], SymbolPoly(n % 2 ? 0 : 1)) << n;
    EXPECT_EQ(cp_values(ahat(12), 2)[2], SymbolPoly(Rational(-1, 8)));
    auto gv = cp_values(gamma(12), 8);
    EXPECT_EQ(gv[0], SymbolPoly(1));
    EXPECT_EQ(gv[1], g_sym * Rational(-2));
    EXPECT_EQ(gv[2], g_sym * g_sym * Rational(9, 2) + zeta(2) * Rational(3, 2));
    for (int n = 0; n <= 8; ++n) EXPECT_TRUE(gv[n].is_homogeneous(n));
    EXPECT_THROW(cp_values(gamma(5), 5), std::invalid_argument);
}

TEST(Genus, LogSeries) {
    EXPECT_EQ(log_series(additive(6)), Series::variable("z", 7));
    Series t = log_series(todd(8));
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(t[n], SymbolPoly(Rational(1, n)));
    Series g = log_series(gamma(8));
    EXPECT_EQ(g[1], SymbolPoly(1));
    EXPECT_EQ(g[2], -g_sym);
}

TEST(Genus, BernoulliRewrite) {
    EXPECT_EQ(bernoulli_rewrite(zeta(2)), pi_sym.pow(2) * Rational(1, 6));
    EXPECT_EQ(bernoulli_rewrite(zeta(4)), pi_sym.pow(4) * Rational(1, 90));
    EXPECT_EQ(bernoulli_rewrite(g_sym), g_sym);
    EXPECT_EQ(bernoulli_rewrite(zeta(3)), zeta(3));
    EXPECT_THROW(bernoulli_rewrite(zeta(8), 6), std::invalid_argument);
    for (int k = 1; k <= 10; ++k) {
        long double exact = even_zeta_over_pi_power(k).to_long_double() * pi_power(2 * k);
        EXPECT_NEAR(static_cast<double>(exact), static_cast<double>(zeta_numeric(2 * k)), 1e-10) << k;
    }
}

TEST(Genus, DuplicationIdentities) {
    auto checks = duplication_check(20);
    ASSERT_EQ(checks.size(), 3u);
    for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
    Series q = gamma(4).Q;
    Series product = q * q.scaled_variable(SymbolPoly(-1));
    EXPECT_EQ(product[2], zeta(2));
    EXPECT_EQ(pi_z_over_sin(4)[4], pi_sym.pow(4) * Rational(7, 360));
    EXPECT_EQ(log(gamma(4).Q)[3], zeta(3) * Rational(-1, 3));
    EXPECT_THROW(duplication_check(7), std::invalid_argument);
}

TEST(Genus, PiZOverSinByLongMultiplication) {
    Series ratio = pi_z_over_sin(8);
    Series sin_over = Series::generate("z", 8, [](int k) {
        if (k % 2) return SymbolPoly();
        Rational c = factorial(k + 1).inverse();
        return pi_sym.pow(k) * ((k / 2) % 2 ? -c : c);
    });
    EXPECT_EQ(ratio * sin_over, Series::constant("z", 8, SymbolPoly(1)));
}

TEST(Genus, WittenAtQZeroIsAhat) {
    Genus w = witten(12, 6);
    Series slice = w.Q.map_coefficients([](const SymbolPoly& c) { return c.substitute("q", SymbolPoly(0)); });
    EXPECT_EQ(slice, ahat(12).Q);
    EXPECT_EQ(w.Q[0], SymbolPoly(1));
}

TEST(Genus, WittenCoefficients) {
    auto g = witten_g_series(8, 10);
    for (int k = 1; k <= 9; k += 2) EXPECT_TRUE(g[k].is_zero()) << k;
    EXPECT_EQ(g[0].coefficient(Monomial(sym::q(), 1)), Rational(-1));
    // g_{2k} = B_{2k}/(4k) - sum_N sigma_{2k-1}(N) q^N
    auto b = bernoulli_numbers(10);
    for (int k = 1; k <= 5; ++k) {
        SymbolPoly expected(b[2 * k] / Rational(4 * k));
        for (int n = 1; n <= 8; ++n)
            expected -= SymbolPoly(Monomial(sym::q(), n), divisor_power_sum(n, 2 * k - 1));
        EXPECT_EQ(g[2 * k], expected) << k;
    }
}

TEST(Genus, Rescaling) {
    Genus a = rescaled(ahat(6), SymbolPoly(1), true);
    // (i x/2) / sinh(i x/2) = (x/2) / sin(x/2)
    EXPECT_EQ(a.Q[2], SymbolPoly(Rational(1, 24)));
    EXPECT_EQ(rescaled(todd(4), SymbolPoly(2)).Q[1], SymbolPoly(1));
    Genus twopi = rescaled(ahat(4), pi_sym * Rational(2), true);
    EXPECT_EQ(twopi.Q[2], pi_sym.pow(2) * Rational(1, 6));
    EXPECT_THROW(make_genus("elliptic"), std::invalid_argument);
}
