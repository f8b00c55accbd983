#include "genuskit/fgl.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace genuskit::fgl {

namespace {

const std::vector<std::string> kXY = {"X", "Y"};
const std::vector<std::string> kXYZ = {"X", "Y", "Z"};

SymbolPoly rename_prefix(const SymbolPoly& p, const std::string& from, const std::string& to, int max_k) {
    std::map<std::string, SymbolPoly> values;
    for (int k = 1; k <= max_k; ++k) values.emplace(from + "_" + std::to_string(k), SymbolPoly(coefficient_symbol(to, k)));
    return p.substitute(values);
}

SymbolPoly zero_prefix(const SymbolPoly& p, const std::string& prefix, int max_k) {
    std::map<std::string, SymbolPoly> values;
    for (int k = 1; k <= max_k; ++k) values.emplace(prefix + "_" + std::to_string(k), SymbolPoly());
    return p.substitute(values);
}

std::string describe(const MultiSeries& residual) {
    return residual.is_zero() ? "" : residual.to_string();
}

}  // namespace

Symbol coefficient_symbol(const std::string& prefix, int k) { return sym::named(prefix + "_" + std::to_string(k), k); }

FormalDiffeo::FormalDiffeo(Series s) : series_(std::move(s)) {
    if (series_.order() < 1) throw std::invalid_argument("formal diffeomorphism needs order >= 1");
    if (!series_[0].is_zero()) throw std::invalid_argument("formal diffeomorphism must fix the origin");
    if (!(series_[1] == SymbolPoly(1))) throw std::invalid_argument("formal diffeomorphism must have linear coefficient 1");
}

FormalDiffeo FormalDiffeo::identity(int degree) { return FormalDiffeo(Series::variable("z", degree + 1)); }

FormalDiffeo FormalDiffeo::generic(int degree, const std::string& prefix) {
    return FormalDiffeo(Series::generate("z", degree + 1, [&prefix](int k) {
        if (k == 0) return SymbolPoly();
        if (k == 1) return SymbolPoly(1);
        return SymbolPoly(coefficient_symbol(prefix, k - 1));
    }));
}

bool FormalDiffeo::is_odd() const {
    for (int k = 2; k <= series_.order(); k += 2)
        if (!series_[k].is_zero()) return false;
    return true;
}

FormalDiffeo compose(const FormalDiffeo& s, const FormalDiffeo& t) {
    return FormalDiffeo(genuskit::compose(t.series(), s.series()));
}

FormalDiffeo invert(const FormalDiffeo& t) { return FormalDiffeo(revert(t.series())); }

FormalDiffeo grading_action(const FormalDiffeo& t) {
    const SymbolPoly u(sym::u());
    std::vector<SymbolPoly> c = t.series().coefficients();
    for (std::size_t k = 2; k < c.size(); ++k) c[k] *= u.pow(static_cast<int>(k) - 1);
    return FormalDiffeo(Series(t.series().variable_name(), std::move(c)));
}

FormalDiffeo grading_by_conjugation(const FormalDiffeo& t) {
    const Monomial u(sym::u());
    Series scaled = t.series().scaled_variable(SymbolPoly(sym::u()));
    return FormalDiffeo(scaled.map_coefficients([&u](const SymbolPoly& c) { return c.divided_by(u); }));
}

MultiSeries fgl_from_log(const FormalDiffeo& t) {
    MultiSeries sum = MultiSeries::from_univariate(t.series(), kXY, 0) + MultiSeries::from_univariate(t.series(), kXY, 1);
    return compose(revert(t.series()), sum);
}

std::vector<Check> AxiomReport::checks() const {
    return {Check{"unit", unit.is_zero(), describe(unit)},
            Check{"commutativity", commutativity.is_zero(), describe(commutativity)},
            Check{"associativity", associativity.is_zero(), describe(associativity)}};
}

AxiomReport check_fgl_axioms(const MultiSeries& F) {
    if (F.variables().size() != 2) throw std::invalid_argument("group law must be bivariate");
    const int n = F.order();
    AxiomReport r;
    r.unit = F.with_zero(1) - MultiSeries::variable(F.variables(), 0, n);
    r.commutativity = F - F.permuted({1, 0});
    const MultiSeries X = MultiSeries::variable(kXYZ, 0, n), Y = MultiSeries::variable(kXYZ, 1, n),
                      Z = MultiSeries::variable(kXYZ, 2, n);
    const MultiSeries fxy = substitute(F, {X, Y});
    const MultiSeries fyz = substitute(F, {Y, Z});
    r.associativity = substitute(F, {fxy, Z}) - substitute(F, {X, fyz});
    return r;
}

std::vector<SymbolPoly> ln_coproduct(int max_degree) {
    FormalDiffeo left = FormalDiffeo::generic(max_degree, "t'");
    FormalDiffeo right = FormalDiffeo::generic(max_degree, "t''");
    FormalDiffeo c = compose(right, left);
    std::vector<SymbolPoly> out;
    for (int k = 1; k <= max_degree; ++k) out.push_back(c.t(k));
    return out;
}

std::vector<TensorTerm> tensor_terms(const SymbolPoly& p) {
    std::vector<TensorTerm> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial left, right;
        for (const auto& [s, e] : m.factors()) {
            const bool is_right = s.name.rfind("t''_", 0) == 0;
            if (!is_right && s.name.rfind("t'_", 0) != 0)
                throw std::invalid_argument("unexpected symbol " + s.name + " in a coproduct");
            const int k = std::stoi(s.name.substr(is_right ? 4 : 3));
            Monomial f(coefficient_symbol("t", k), e);
            if (is_right) right = right * f;
            else left = left * f;
        }
        out.push_back(TensorTerm{left, right, c});
    }
    return out;
}

std::vector<Check> check_hopf_laws(int max_degree) {
    const auto delta = ln_coproduct(max_degree);
    std::map<std::string, SymbolPoly> left_ab_c, left_a_bc;
    for (int i = 1; i <= max_degree; ++i) {
        const std::string l = "t'_" + std::to_string(i), r = "t''_" + std::to_string(i);
        left_ab_c.emplace(l, rename_prefix(rename_prefix(delta[i - 1], "t'", "a", max_degree), "t''", "b", max_degree));
        left_ab_c.emplace(r, SymbolPoly(coefficient_symbol("c", i)));
        left_a_bc.emplace(l, SymbolPoly(coefficient_symbol("a", i)));
        left_a_bc.emplace(r, rename_prefix(rename_prefix(delta[i - 1], "t'", "b", max_degree), "t''", "c", max_degree));
    }
    // a(b(c(z)))
    FormalDiffeo triple = compose(compose(FormalDiffeo::generic(max_degree, "c"), FormalDiffeo::generic(max_degree, "b")),
                                  FormalDiffeo::generic(max_degree, "a"));
    Check coassoc{"coassociativity", true, ""}, oracle{"triple composition", true, ""};
    Check counit_left{"left counit", true, ""}, counit_right{"right counit", true, ""};
    for (int k = 1; k <= max_degree; ++k) {
        const std::string tag = "t_" + std::to_string(k);
        const SymbolPoly lhs = delta[k - 1].substitute(left_ab_c);
        const SymbolPoly rhs = delta[k - 1].substitute(left_a_bc);
        if (coassoc.passed && !(lhs == rhs)) coassoc = {coassoc.name, false, tag};
        if (oracle.passed && !(lhs == triple.t(k))) oracle = {oracle.name, false, tag};
        const SymbolPoly t(coefficient_symbol("t", k));
        const SymbolPoly el = rename_prefix(zero_prefix(delta[k - 1], "t'", max_degree), "t''", "t", max_degree);
        const SymbolPoly er = rename_prefix(zero_prefix(delta[k - 1], "t''", max_degree), "t'", "t", max_degree);
        if (counit_left.passed && !(el == t)) counit_left = {counit_left.name, false, tag};
        if (counit_right.passed && !(er == t)) counit_right = {counit_right.name, false, tag};
    }
    return {coassoc, oracle, counit_left, counit_right};
}

Series generic_twist(int degree) {
    return Series::generate("e", degree, [](int k) {
        return k == 0 ? SymbolPoly(1) : SymbolPoly(sym::sigma(k));
    });
}

std::vector<SymbolPoly> thom_twist_constraint(const Series& twist) {
    if (!(twist[0] == SymbolPoly(1))) throw std::invalid_argument("twist series must have constant term 1");
    const Symbol U = sym::named("U", 0);
    const SymbolPoly u(U);
    Series expanded = twist.scaled_variable(SymbolPoly(-1)) * (-u) + twist * u;
    std::vector<SymbolPoly> out;
    for (int k = 0; k <= expanded.order(); ++k) {
        SymbolPoly c = expanded[k].divided_by(Monomial(U));
        if (c.is_zero()) continue;
        out.push_back(c * c.terms().rbegin()->second.inverse());
    }
    return out;
}

Series hbar_series(const std::vector<SymbolPoly>& cp_values, int degree) {
    if (static_cast<int>(cp_values.size()) != degree)
        throw std::invalid_argument("hbar series of degree " + std::to_string(degree) + " needs " +
                                    std::to_string(degree) + " CP values");
    return Series::generate("e", degree, [&cp_values](int k) {
        return k == 0 ? SymbolPoly() : cp_values[k - 1] * Rational(1, k);
    });
}

std::vector<DescentGenerator> descent_generators(int k_max) {
    std::vector<DescentGenerator> gens{{"b", 1, {0, -2}}};
    for (int k = 1; k <= k_max; ++k) gens.push_back({"e_" + std::to_string(2 * k + 1), -(2 * k + 1), {1, 0}});
    return gens;
}

std::vector<InvariantMonomial> gm_invariant_bidegrees(const std::vector<DescentGenerator>& generators, int max_exponent) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].bidegree.first != 1) others.push_back(i);
    std::vector<InvariantMonomial> out;
    for (std::size_t lin = 0; lin < generators.size(); ++lin) {
        if (generators[lin].bidegree.first != 1) continue;
        std::vector<int> exps(generators.size(), 0);
        exps[lin] = 1;
        std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int weight) {
            if (idx == others.size()) {
                if (weight != 0) return;
                InvariantMonomial m{exps, "", {0, 0}};
                for (std::size_t g = 0; g < generators.size(); ++g) {
                    if (exps[g] == 0) continue;
                    if (!m.text.empty()) m.text += "*";
                    m.text += generators[g].name;
                    if (exps[g] > 1) m.text += "^" + std::to_string(exps[g]);
                    m.bidegree.first += exps[g] * generators[g].bidegree.first;
                    m.bidegree.second += exps[g] * generators[g].bidegree.second;
                }
                out.push_back(std::move(m));
                return;
            }
            const std::size_t g = others[idx];
            for (int e = 0; e <= max_exponent; ++e) {
                exps[g] = e;
                rec(idx + 1, weight + e * generators[g].weight);
            }
            exps[g] = 0;
        };
        rec(0, generators[lin].weight);
    }
    return out;
}

}  // namespace genuskit::fgl
