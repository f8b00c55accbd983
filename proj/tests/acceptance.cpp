// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "genuskit/fgl.hpp"
#include "genuskit/freelie.hpp"
#include "genuskit/genus.hpp"
#include "genuskit/grt.hpp"
#include "genuskit/operad.hpp"
#include "genuskit/pbn.hpp"
#include "genuskit/qsym.hpp"
#include "support.hpp"

using namespace genuskit;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && seconds > limit_seconds) {
        o.passed = false;
        o.detail = "over time limit " + std::to_string(limit_seconds) + " s";
    }
    if (!o.passed) ++failures;
    std::printf("%s %d %s (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", id, name.c_str(), seconds,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

void require_checks(Outcome& o, const std::vector<Check>& checks) {
    for (const auto& c : checks) o.require(c.passed, c.name + " " + c.detail);
}

fgl::FormalDiffeo random_odd(std::mt19937_64& rng, int degree) {
    return fgl::FormalDiffeo(Series::generate("z", degree + 1, [&](int k) {
        if (k == 1) return SymbolPoly(1);
        if (k % 2 == 0) return SymbolPoly();
        return SymbolPoly(support::random_rational(rng));
    }));
}

SymbolPoly tsym(const std::string& prefix, int k) { return SymbolPoly(fgl::coefficient_symbol(prefix, k)); }

}  // namespace

int main() {
    criterion(1, "gamma duplication to order 20", 10, [] {
        Outcome o;
        const auto checks = genus::duplication_check(20);
        o.require(checks.size() == 3, "expected three identities");
        require_checks(o, checks);
        return o;
    });

    criterion(2, "formal group law axioms", 30, [] {
        Outcome o;
        Series l = genus::log_series(genus::gamma(11)).truncated(11);
        o.require(fgl::check_fgl_axioms(fgl::fgl_from_log(fgl::FormalDiffeo(l))).passed(), "gamma logarithm");
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 20; ++trial) {
            fgl::FormalDiffeo t(support::random_symbolic_diffeo_series(rng, 11));
            o.require(t.degree() == 10, "diffeo degree");
            o.require(fgl::check_fgl_axioms(fgl::fgl_from_log(t)).passed(), "random diffeo " + std::to_string(trial));
        }
        return o;
    });

    criterion(3, "Landweber-Novikov coproduct", 60, [] {
        Outcome o;
        const auto delta = fgl::ln_coproduct(2);
        o.require(delta[0] == tsym("t'", 1) + tsym("t''", 1), "Delta t_1");
        o.require(delta[1] == tsym("t'", 2) + tsym("t'", 1) * tsym("t''", 1) * Rational(2) + tsym("t''", 2), "Delta t_2");
        require_checks(o, fgl::check_hopf_laws(6));
        return o;
    });

    criterion(4, "CP^n genus values by two routes", 60, [] {
        Outcome o;
        for (const char* name : {"todd", "ahat", "L", "gamma"}) {
            const genus::Genus g = genus::make_genus(name, 12);
            o.require(genus::cp_by_extraction(g, 8) == genus::cp_by_reversion(g, 8), std::string("routes differ for ") + name);
        }
        for (const auto& v : genus::cp_values(genus::todd(12), 8)) o.require(v == SymbolPoly(1), "todd CP^n != 1");
        o.require(genus::cp_values(genus::gamma(12), 8)[1] == SymbolPoly(sym::gamma()) * Rational(-2), "gamma CP^1");
        return o;
    });

    criterion(5, "Witten series", 60, [] {
        Outcome o;
        const auto g = genus::witten_g_series(8, 10);
        for (int k = 1; k <= 9; k += 2) o.require(g[static_cast<std::size_t>(k)].is_zero(), "g_" + std::to_string(k));
        const genus::Genus w = genus::witten(12, 8);
        Series slice = w.Q.map_coefficients([](const SymbolPoly& c) { return c.substitute("q", SymbolPoly(0)); });
        o.require(slice == genus::ahat(12).Q, "q = 0 slice");
        return o;
    });

    criterion(6, "Thom twist constraint", 60, [] {
        Outcome o;
        std::vector<SymbolPoly> expected;
        for (int k = 1; k <= 15; k += 2) expected.emplace_back(sym::sigma(k));
        o.require(fgl::thom_twist_constraint(fgl::generic_twist(15)) == expected, "constraint set");
        std::mt19937_64 rng(15);
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_odd(rng, 15), b = random_odd(rng, 15);
            o.require(fgl::compose(a, b).is_odd(), "composition");
            o.require(fgl::invert(a).is_odd(), "inversion");
        }
        return o;
    });

    criterion(7, "multiple zeta values", 60, [] {
        Outcome o;
        const double tol = 1e-6;
        const auto z21 = qsym::mzv_eval({2, 1}, tol), z3 = qsym::mzv_eval({3}, tol);
        o.require(std::fabs(static_cast<double>(z21.value - z3.value)) < tol, "zeta(2,1) != zeta(3)");

        qsym::QSymmElement rhs = qsym::QSymmElement::monomial({2, 3}) + qsym::QSymmElement::monomial({3, 2}) +
                                 qsym::QSymmElement::monomial({5});
        o.require(qsym::stuffle({2}, {3}) == rhs, "stuffle expansion");
        o.require(qsym::finite_truncation(qsym::QSymmElement::monomial({2}), 20) *
                          qsym::finite_truncation(qsym::QSymmElement::monomial({3}), 20) ==
                      qsym::finite_truncation(rhs, 20),
                  "truncation at m = 20");
        const auto v = [tol](const qsym::Composition& c) { return qsym::mzv_eval(c, tol).value; };
        o.require(std::fabs(static_cast<double>(v({2}) * v({3}) - (v({2, 3}) + v({3, 2}) + v({5})))) < tol,
                  "numeric stuffle");

        bool rejected = false;
        try {
            qsym::mzv_eval({1, 2}, tol);
        } catch (const qsym::DivergentSeries&) {
            rejected = true;
        }
        o.require(rejected, "zeta(1,2) accepted");
        return o;
    });

    criterion(8, "grt relations, solve and bracket", 600, [] {
        Outcome o;
        grt::GrtContext ctx;
        const auto psi3 = ctx.ihara_psi(3);
        o.require(ctx.check(psi3).passed(), "psi_3");
        const auto solution = ctx.solve(5, ctx.ihara_psi(5));
        o.require(solution.has_value(), "no solution in degree 5");
        if (solution) {
            o.require(ctx.check(solution->particular).passed(), "degree-5 solution");
            const auto report = ctx.check(ctx.drinfeld_bracket(psi3, solution->particular));
            o.require(report.degree == 8, "bracket degree");
            o.require(report.passed(), "bracket fails a relation");
        }
        return o;
    });

    criterion(9, "dimension oracles", 60, [] {
        Outcome o;
        const auto ab = lie::Alphabet::plain({"A", "B"});
        for (int d = 1; d <= 12; ++d)
            o.require(static_cast<long>(lie::lyndon_words(ab, d).size()) == lie::witt_dimension(2, d),
                      "Lyndon count in degree " + std::to_string(d));
        const long witt12[] = {2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335};
        for (int d = 1; d <= 12; ++d) o.require(lie::witt_dimension(2, d) == witt12[d - 1], "Witt value");
        braid::PureBraid p3(3), p4(4);
        const std::size_t d3[] = {3, 1, 2}, d4[] = {6, 4};
        for (int d = 1; d <= 3; ++d) o.require(p3.component(d).dimension() == d3[d - 1], "p_3 dimension");
        for (int d = 1; d <= 2; ++d) o.require(p4.component(d).dimension() == d4[d - 1], "p_4 dimension");
        return o;
    });

    criterion(10, "cabling sweep", 600, [] {
        Outcome o;
        const auto summary = braid::cabling_sweep(6, 5);
        for (const auto& f : summary.failures) o.require(false, f.name + " " + f.detail);
        o.require(summary.partitions == 63 && summary.compositions > 0, "sweep coverage");
        return o;
    });

    return failures == 0 ? 0 : 1;
}
