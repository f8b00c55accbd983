#include "genuskit/grt.hpp"

#include <stdexcept>

#include "genuskit/linalg.hpp"

namespace genuskit::grt {

using lie::LieElement;
using lie::NCPoly;
using lie::Word;

namespace {

using Key = std::pair<int, Word>;
using Coordinates = std::map<Key, Rational>;

constexpr int kPentagonTag = 16;

enum Relation { Antisymmetry, Hexagon, HexagonCommutator, Pentagon };
const char* const kRelationNames[] = {"antisymmetry", "hexagon", "hexagon-commutator", "pentagon"};

}  // namespace

bool GrtReport::passed() const {
    for (const auto& r : residuals)
        if (!r.zero) return false;
    return true;
}

GrtContext::GrtContext(std::size_t cap)
    : free_(lie::Alphabet::plain({"A", "B"})), cap_(cap), p4_(4, cap), semidirect_(4) {}

LieElement GrtContext::parse(const std::string& text) const { return lie::parse_lie(free_, text); }

LieElement GrtContext::ihara_psi(int n) const {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("ihara_psi needs an odd degree n >= 3");
    const LieElement a = A(), b = B();
    const LieElement ab = free_.bracket(a, b);
    LieElement out;
    mpz_class binom = 1;
    for (int m = 1; m <= n - 1; ++m) {
        binom = binom * (n - m + 1) / m;
        LieElement term = ab;
        for (int k = 0; k < n - m - 1; ++k) term = free_.bracket(b, term);
        for (int k = 0; k < m - 1; ++k) term = free_.bracket(a, term);
        out += term * Rational(binom);
    }
    return out;
}

LieElement GrtContext::substitute(const LieElement& psi, const LieElement& a, const LieElement& b) const {
    std::function<LieElement(int)> letter = [&](int l) { return l == 0 ? a : b; };
    std::function<LieElement(const LieElement&, const LieElement&)> br = [this](const LieElement& x, const LieElement& y) {
        return free_.bracket(x, y);
    };
    return lie::evaluate<LieElement>(psi, letter, br, LieElement());
}

namespace {

// The four residuals as coordinates, plus their display texts.
struct Evaluation {
    PentagonMethod method = PentagonMethod::Elimination;
    std::vector<LieElement> free_parts;  // first three relations
    LieElement pentagon;                 // in the letters of p_4
};

}  // namespace

static Evaluation evaluate_relations(const GrtContext& ctx, const braid::PureBraid& p4,
                                     const braid::SemidirectPBn& semidirect, std::size_t cap, const LieElement& psi) {
    Evaluation ev;
    const auto& free = ctx.free();
    const LieElement a = ctx.A(), b = ctx.B(), c = -(a + b);
    ev.free_parts.push_back(ctx.substitute(psi, a, b) + ctx.substitute(psi, b, a));
    ev.free_parts.push_back(ctx.substitute(psi, c, a) + ctx.substitute(psi, b, c) + psi);
    ev.free_parts.push_back(free.bracket(b, psi) + free.bracket(c, ctx.substitute(psi, a, c)));
    if (psi.is_zero()) return ev;

    const int degree = free.degree(psi);
    // psi(x12, x23+x24) + psi(x13+x23, x34) - psi(x12+x13, x24+x34) - psi(x23, x34) - psi(x12, x23)
    const std::vector<std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>> args = {
        {{{1, 2}}, {{2, 3}, {2, 4}}},
        {{{1, 3}, {2, 3}}, {{3, 4}}},
        {{{1, 2}, {1, 3}}, {{2, 4}, {3, 4}}},
        {{{2, 3}}, {{3, 4}}},
        {{{1, 2}}, {{2, 3}}},
    };
    const int signs[] = {1, 1, -1, -1, -1};
    const auto& target = p4.lie();
    if (lie::witt_dimension(6, degree) <= static_cast<long>(cap)) {
        ev.method = PentagonMethod::Elimination;
        auto sum = [&target](const std::vector<std::pair<int, int>>& pairs) {
            LieElement out;
            for (auto [i, j] : pairs) out += target.generator(braid::generator_letter(i, j));
            return out;
        };
        std::function<LieElement(const LieElement&, const LieElement&)> br = [&target](const LieElement& x,
                                                                                       const LieElement& y) {
            return target.bracket(x, y);
        };
        LieElement total;
        for (std::size_t k = 0; k < args.size(); ++k) {
            const LieElement x = sum(args[k].first), y = sum(args[k].second);
            std::function<LieElement(int)> letter = [&](int l) { return l == 0 ? x : y; };
            total += lie::evaluate<LieElement>(psi, letter, br, LieElement()) * Rational(signs[k]);
        }
        ev.pentagon = p4.reduce(total);
    } else {
        ev.method = PentagonMethod::Semidirect;
        auto sum = [&semidirect](const std::vector<std::pair<int, int>>& pairs) {
            auto out = semidirect.zero();
            for (auto [i, j] : pairs) braid::SemidirectPBn::add_to(out, semidirect.generator(i, j));
            return out;
        };
        auto total = semidirect.zero();
        for (std::size_t k = 0; k < args.size(); ++k)
            braid::SemidirectPBn::add_to(total, semidirect.evaluate(psi, {sum(args[k].first), sum(args[k].second)}),
                                         Rational(signs[k]));
        for (const auto& component : total) ev.pentagon += target.from_ncpoly(component);
    }
    return ev;
}

static Coordinates coordinates(const Evaluation& ev) {
    Coordinates out;
    for (std::size_t r = 0; r < ev.free_parts.size(); ++r)
        for (const auto& [w, c] : ev.free_parts[r].terms()) out.emplace(Key(static_cast<int>(r), w), c);
    for (const auto& [w, c] : ev.pentagon.terms()) out.emplace(Key(kPentagonTag, w), c);
    return out;
}

GrtReport GrtContext::check(const LieElement& psi) const {
    GrtReport report;
    report.degree = psi.is_zero() ? 0 : free_.degree(psi);
    const Evaluation ev = evaluate_relations(*this, p4_, semidirect_, cap_, psi);
    report.pentagon_method = ev.method;
    for (std::size_t r = 0; r < ev.free_parts.size(); ++r)
        report.residuals.push_back({kRelationNames[r], ev.free_parts[r].is_zero(), free_.to_string(ev.free_parts[r])});
    report.residuals.push_back({kRelationNames[Pentagon], ev.pentagon.is_zero(), p4_.lie().to_string(ev.pentagon)});
    return report;
}

std::optional<GrtSolution> GrtContext::solve(int n, const LieElement& seed) const {
    if (n < 1) throw std::invalid_argument("grt_solve needs a positive degree");
    if (!seed.is_zero() && free_.degree(seed) != n) throw std::invalid_argument("seed is not homogeneous of degree n");

    // Independent spanning set of the degree-n part of [fr', fr'].
    std::vector<LieElement> unknowns;
    linalg::SparseEchelon<Word> span;
    for (int du = 2; du <= n - 2; ++du) {
        for (const auto& u : lie::lyndon_words(free_.alphabet(), du)) {
            for (const auto& v : lie::lyndon_words(free_.alphabet(), n - du)) {
                if (!(u < v)) continue;
                LieElement e = free_.bracket(LieElement::basis(u), LieElement::basis(v));
                if (span.insert(e.terms())) unknowns.push_back(std::move(e));
            }
        }
    }

    const Coordinates rhs = coordinates(evaluate_relations(*this, p4_, semidirect_, cap_, seed));
    std::vector<Coordinates> columns;
    std::map<Key, std::size_t> rows;
    for (const auto& [k, c] : rhs) rows.try_emplace(k, 0);
    for (const auto& e : unknowns) {
        columns.push_back(coordinates(evaluate_relations(*this, p4_, semidirect_, cap_, e)));
        for (const auto& [k, c] : columns.back()) rows.try_emplace(k, 0);
    }
    std::size_t index = 0;
    for (auto& [k, r] : rows) r = index++;

    linalg::Matrix m(rows.size(), unknowns.size());
    std::vector<Rational> b(rows.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [k, c] : columns[j]) m(rows.at(k), j) = c;
    for (const auto& [k, c] : rhs) b[rows.at(k)] = -c;

    const auto affine = linalg::solve_affine(m, b);
    if (!affine) return std::nullopt;
    GrtSolution out;
    out.degree = n;
    out.particular = seed;
    for (std::size_t j = 0; j < unknowns.size(); ++j) out.particular += unknowns[j] * affine->particular[j];
    for (const auto& direction : affine->nullspace) {
        LieElement d;
        for (std::size_t j = 0; j < unknowns.size(); ++j) d += unknowns[j] * direction[j];
        out.nullspace.push_back(std::move(d));
    }
    return out;
}

LieElement GrtContext::derivation(const LieElement& p, const LieElement& x) const {
    const NCPoly image_a = free_.expand(free_.bracket(p, A()));
    const NCPoly none;
    const NCPoly result = lie::derive(free_.expand(x), [&](int l) -> const NCPoly& { return l == 0 ? image_a : none; });
    return free_.from_ncpoly(result);
}

LieElement GrtContext::drinfeld_bracket(const LieElement& p1, const LieElement& p2) const {
    return free_.bracket(p1, p2) + derivation(p2, p1) - derivation(p1, p2);
}

}  // namespace genuskit::grt
