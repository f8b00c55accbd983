#include "genuskit/genus.hpp"

#include <stdexcept>

namespace genuskit::genus {

namespace {

Series truncate_q(const Series& s, int q_order) {
    return s.map_coefficients([q_order](const SymbolPoly& c) { return c.truncate_exponent("q", q_order); });
}

// e^{c z}
Series scaled_exp(const std::string& var, int order, const Rational& c) {
    return Series::generate(var, order, [&c](int k) { return SymbolPoly(c.pow(k) / factorial(k)); });
}

std::string first_difference(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (!(a[k] == b[k]))
            return "coefficient of z^" + std::to_string(k) + ": " + a[k].to_string() + " vs " + b[k].to_string();
    return "";
}

Check compare(std::string name, const Series& a, const Series& b) {
    Check c{std::move(name), true, ""};
    c.detail = first_difference(a, b);
    c.passed = c.detail.empty();
    return c;
}

}  // namespace

Genus from_series(std::string name, Series Q) {
    if (!(Q[0] == SymbolPoly(1))) throw std::invalid_argument("characteristic series must have Q(0) = 1");
    return Genus{std::move(name), std::move(Q)};
}

Genus additive(int order) { return from_series("additive", Series::constant("z", order, SymbolPoly(1))); }

Genus todd(int order) {
    // (1 - e^{-z}) / z = sum (-1)^k z^k / (k+1)!
    Series denom = Series::generate("z", order, [](int k) {
        Rational c = factorial(k + 1).inverse();
        return SymbolPoly(k % 2 ? -c : c);
    });
    return from_series("todd", inverse(denom));
}

Genus ahat(int order) {
    // sinh(x/2) / (x/2) = sum (x/2)^{2k} / (2k+1)!
    Series s = Series::generate("z", order, [](int k) {
        if (k % 2) return SymbolPoly();
        return SymbolPoly(Rational(1, 2).pow(k) / factorial(k + 1));
    });
    Series plus = inverse(s);
    Series minus = plus.scaled_variable(SymbolPoly(-1));
    return from_series("ahat", sqrt(plus * minus));
}

Genus l_genus(int order) {
    Series cosh = Series::generate("z", order, [](int k) {
        return k % 2 ? SymbolPoly() : SymbolPoly(factorial(k).inverse());
    });
    Series sinh_over_z = Series::generate("z", order, [](int k) {
        return k % 2 ? SymbolPoly() : SymbolPoly(factorial(k + 1).inverse());
    });
    return from_series("L", cosh / sinh_over_z);
}

Genus gamma(int order) {
    Series exponent = Series::generate("z", order, [](int k) {
        if (k == 0) return SymbolPoly();
        if (k == 1) return -SymbolPoly(sym::gamma());
        Rational c(1, k);
        return SymbolPoly(sym::zeta(k)) * (k % 2 ? -c : c);
    });
    return from_series("gamma", exp(exponent));
}

Series witten_log(int q_order, int x_order) {
    if (q_order < 0) throw std::invalid_argument("q order must be non-negative");
    Series out = log(ahat(x_order).Q).renamed("x");
    const SymbolPoly q(sym::q());
    for (int n = 1; n <= q_order; ++n) {
        for (int m = 1; n * m <= q_order; ++m) {
            // -log(1 - q^n u) - log(1 - q^n / u) contributes q^{nm}/m (u^m + u^{-m}), u = e^x
            Series cosh2 = scaled_exp("x", x_order, Rational(m)) + scaled_exp("x", x_order, Rational(-m));
            out += cosh2 * (q.pow(n * m) * Rational(1, m));
        }
    }
    return out;
}

Genus witten(int order, int q_order) {
    Series l = witten_log(q_order, order);
    Series shifted = l - Series::constant("x", order, l[0]);
    return from_series("witten", truncate_q(exp(shifted), q_order).renamed("z"));
}

Genus make_genus(const std::string& name, int order, int q_order) {
    if (name == "todd") return todd(order);
    if (name == "ahat") return ahat(order);
    if (name == "L" || name == "l") return l_genus(order);
    if (name == "gamma") return gamma(order);
    if (name == "witten") return witten(order, q_order);
    if (name == "additive") return additive(order);
    throw std::invalid_argument("unknown genus '" + name + "'");
}

SymbolPoly reduce_imaginary(const SymbolPoly& p) {
    SymbolPoly out;
    const Monomial i(sym::named("i", 0));
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent("i");
        Monomial rest = m.without("i");
        if (e % 2) rest = rest * i;
        out.add_term(rest, (e / 2) % 2 ? -c : c);
    }
    return out;
}

Genus rescaled(const Genus& g, const SymbolPoly& c, bool imaginary) {
    SymbolPoly scale = imaginary ? c * SymbolPoly(sym::named("i", 0)) : c;
    Series Q = g.Q.scaled_variable(scale);
    if (imaginary) Q = Q.map_coefficients(reduce_imaginary);
    return Genus{g.name + "_rescaled", Q};
}

Series exponential(const Genus& g) {
    return inverse(g.Q).shifted_up(1);
}

Series log_series(const Genus& g) { return revert(exponential(g)); }

std::vector<SymbolPoly> cp_by_extraction(const Genus& g, int n_max) {
    if (n_max >= g.order()) throw std::invalid_argument("truncation order too small for the requested CP^n");
    std::vector<SymbolPoly> out;
    Series power = g.Q;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(power[n]);
        power = power * g.Q;
    }
    return out;
}

std::vector<SymbolPoly> cp_by_reversion(const Genus& g, int n_max) {
    if (n_max >= g.order()) throw std::invalid_argument("truncation order too small for the requested CP^n");
    Series l = log_series(g);
    std::vector<SymbolPoly> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(l[n + 1] * Rational(n + 1));
    return out;
}

std::vector<SymbolPoly> cp_values(const Genus& g, int n_max) {
    auto a = cp_by_extraction(g, n_max);
    auto b = cp_by_reversion(g, n_max);
    for (std::size_t n = 0; n < a.size(); ++n)
        if (!(a[n] == b[n]))
            throw std::logic_error("CP^" + std::to_string(n) + " routes disagree for " + g.name + ": " +
                                   a[n].to_string() + " vs " + b[n].to_string());
    return a;
}

std::vector<Rational> bernoulli_numbers(int n) {
    std::vector<Rational> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        if (m == 0) {
            b.emplace_back(1);
            continue;
        }
        Rational acc(0);
        for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * b[j];
        b.push_back(-acc / Rational(m + 1));
    }
    return b;
}

Rational even_zeta_over_pi_power(int k) {
    if (k < 1) throw std::invalid_argument("even zeta index must be positive");
    const Rational b = bernoulli_numbers(2 * k)[2 * k];
    Rational v = b * Rational(2).pow(2 * k) / (Rational(2) * factorial(2 * k));
    return k % 2 ? v : -v;
}

SymbolPoly bernoulli_rewrite(const SymbolPoly& p, int max_index) {
    std::map<std::string, SymbolPoly> values;
    for (const auto& name : p.symbol_names()) {
        if (name.rfind("zeta_", 0) != 0) continue;
        const int k = std::stoi(name.substr(5));
        if (k % 2) continue;
        if (k > max_index)
            throw std::invalid_argument("Bernoulli table too short for " + name);
        values.emplace(name, SymbolPoly(sym::pi()).pow(k) * even_zeta_over_pi_power(k / 2));
    }
    return values.empty() ? p : p.substitute(values);
}

Series bernoulli_rewrite(const Series& s, int max_index) {
    return s.map_coefficients([max_index](const SymbolPoly& c) { return bernoulli_rewrite(c, max_index); });
}

Series pi_z_over_sin(int order) {
    const SymbolPoly pi(sym::pi());
    Series sin_over = Series::generate("z", order, [&pi](int k) {
        if (k % 2) return SymbolPoly();
        Rational c = factorial(k + 1).inverse();
        return pi.pow(k) * ((k / 2) % 2 ? -c : c);
    });
    return inverse(sin_over);
}

std::vector<Check> duplication_check(int order) {
    if (order < 2 || order % 2) throw std::invalid_argument("duplication check needs an even order >= 2");
    const Series Q = gamma(order).Q;
    const Series product = Q * Q.scaled_variable(SymbolPoly(-1));
    const Series even_exp = exp(Series::generate("z", order, [](int k) {
        if (k == 0 || k % 2) return SymbolPoly();
        return SymbolPoly(sym::zeta(k)) * Rational(2, k);
    }));
    std::vector<Check> out;
    out.push_back(compare("product", product, even_exp));
    const Series sine = pi_z_over_sin(order);
    out.push_back(compare("bernoulli", bernoulli_rewrite(even_exp), sine));
    const Series odd_exp = exp(Series::generate("z", order, [](int k) {
        if (k == 1) return -SymbolPoly(sym::gamma());
        if (k < 3 || k % 2 == 0) return SymbolPoly();
        return -SymbolPoly(sym::zeta(k)) * Rational(1, k);
    }));
    out.push_back(compare("split", bernoulli_rewrite(Q), sqrt(sine) * odd_exp));
    return out;
}

std::vector<SymbolPoly> witten_g_series(int q_order, int x_order) {
    const Series l = witten_log(q_order, x_order);
    std::vector<SymbolPoly> g;
    for (int k = 0; k <= x_order; ++k)
        g.push_back((l[k] * (factorial(k) * Rational(-1, 2))).truncate_exponent("q", q_order));
    return g;
}

}  // namespace genuskit::genus
