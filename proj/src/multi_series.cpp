#include "genuskit/multi_series.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace genuskit {

namespace {

int total(const MultiSeries::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

MultiSeries::MultiSeries(std::vector<std::string> variables, int order)
    : variables_(std::move(variables)), order_(order) {
    if (order < 0) throw std::invalid_argument("multiseries order must be non-negative");
    if (variables_.empty()) throw std::invalid_argument("multiseries needs at least one variable");
}

MultiSeries MultiSeries::variable(const std::vector<std::string>& variables, std::size_t index, int order) {
    MultiSeries s(variables, order);
    Exponents e(variables.size(), 0);
    e.at(index) = 1;
    if (order >= 1) s.add_term(e, SymbolPoly(1));
    return s;
}

MultiSeries MultiSeries::from_univariate(const Series& u, const std::vector<std::string>& variables,
                                         std::size_t index) {
    MultiSeries s(variables, u.order());
    for (int k = 0; k <= u.order(); ++k) {
        Exponents e(variables.size(), 0);
        e.at(index) = k;
        s.add_term(e, u[k]);
    }
    return s;
}

SymbolPoly MultiSeries::coefficient(const Exponents& e) const {
    if (total(e) > order_) throw std::out_of_range("multiseries coefficient beyond truncation order");
    auto it = terms_.find(e);
    return it == terms_.end() ? SymbolPoly() : it->second;
}

SymbolPoly MultiSeries::constant_term() const { return coefficient(Exponents(variables_.size(), 0)); }

void MultiSeries::add_term(const Exponents& e, const SymbolPoly& c) {
    if (c.is_zero() || total(e) > order_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiSeries MultiSeries::truncated(int order) const {
    if (order > order_) throw std::invalid_argument("cannot extend a truncated multiseries");
    MultiSeries out(variables_, order);
    for (const auto& [e, c] : terms_)
        if (total(e) <= order) out.terms_.emplace(e, c);
    return out;
}

void MultiSeries::check_compatible(const MultiSeries& other) const {
    if (variables_ != other.variables_) throw std::invalid_argument("multiseries variable mismatch");
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& other) {
    check_compatible(other);
    if (other.order_ < order_) *this = truncated(other.order_);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& other) {
    check_compatible(other);
    if (other.order_ < order_) *this = truncated(other.order_);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiSeries MultiSeries::operator-() const {
    MultiSeries out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.check_compatible(b);
    MultiSeries out(a.variables_, std::min(a.order_, b.order_));
    MultiSeries::Exponents e(a.variables_.size());
    for (const auto& [ea, ca] : a.terms_) {
        int da = total(ea);
        if (da > out.order_) continue;
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total(eb) > out.order_) continue;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiSeries operator*(MultiSeries a, const SymbolPoly& s) {
    if (s.is_zero()) {
        a.terms_.clear();
        return a;
    }
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
}

MultiSeries MultiSeries::with_zero(std::size_t index) const {
    MultiSeries out(variables_, order_);
    for (const auto& [e, c] : terms_)
        if (e.at(index) == 0) out.terms_.emplace(e, c);
    return out;
}

MultiSeries MultiSeries::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != variables_.size()) throw std::invalid_argument("permutation size mismatch");
    MultiSeries out(variables_, order_);
    for (const auto& [e, c] : terms_) {
        Exponents f(e.size());
        for (std::size_t k = 0; k < perm.size(); ++k) f[k] = e[perm[k]];
        out.add_term(f, c);
    }
    return out;
}

std::string MultiSeries::to_string() const {
    std::string out;
    // Sort by total degree, then exponent vector descending in the first variable.
    std::map<std::pair<int, Exponents>, const SymbolPoly*> ordered;
    for (const auto& [e, c] : terms_) {
        Exponents key = e;
        for (auto& x : key) x = -x;
        ordered.emplace(std::make_pair(total(e), key), &c);
    }
    for (const auto& [key, c] : ordered) {
        std::string mono;
        for (std::size_t k = 0; k < variables_.size(); ++k) {
            int p = -key.second[k];
            if (p == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variables_[k];
            if (p != 1) mono += "^" + std::to_string(p);
        }
        std::string coeff = c->to_string();
        std::string term;
        if (mono.empty()) {
            term = coeff;
        } else if (coeff == "1") {
            term = mono;
        } else if (coeff == "-1") {
            term = "-" + mono;
        } else {
            term = (c->size() > 1 ? "(" + coeff + ")" : coeff) + "*" + mono;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    if (!out.empty()) out += " + ";
    out += "O(deg " + std::to_string(order_ + 1) + ")";
    return out;
}

MultiSeries compose(const Series& outer, const MultiSeries& inner) {
    if (!inner.constant_term().is_zero())
        throw std::invalid_argument("multiseries composition needs inner constant term zero");
    const int n = std::min(outer.order(), inner.order());
    const auto& vars = inner.variables();
    const MultiSeries::Exponents zero(vars.size(), 0);
    MultiSeries in = inner.truncated(n);
    MultiSeries acc(vars, n);
    acc.add_term(zero, outer[n]);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * in;
        acc.add_term(zero, outer[k]);
    }
    return acc;
}

MultiSeries substitute(const MultiSeries& f, const std::vector<MultiSeries>& images) {
    if (images.size() != f.variables().size())
        throw std::invalid_argument("substitution needs one image per variable");
    if (images.empty()) throw std::invalid_argument("empty substitution");
    const auto& vars = images.front().variables();
    int n = f.order();
    for (const auto& g : images) {
        if (g.variables() != vars) throw std::invalid_argument("substitution images over different variables");
        if (!g.constant_term().is_zero()) throw std::invalid_argument("substitution image with constant term");
        n = std::min(n, g.order());
    }
    // powers[k][p] = images[k]^p
    std::vector<std::vector<MultiSeries>> powers(images.size());
    const MultiSeries::Exponents zero(vars.size(), 0);
    for (std::size_t k = 0; k < images.size(); ++k) {
        MultiSeries one(vars, n);
        one.add_term(zero, SymbolPoly(1));
        powers[k].push_back(one);
        MultiSeries g = images[k].truncated(n);
        for (int p = 1; p <= n; ++p) powers[k].push_back(powers[k].back() * g);
    }
    // Images that are a bare variable (coefficient 1) act by shifting exponents.
    std::vector<std::optional<MultiSeries::Exponents>> monomial_image(images.size());
    for (std::size_t k = 0; k < images.size(); ++k) {
        const auto& t = images[k].terms();
        if (t.size() == 1 && t.begin()->second == SymbolPoly(1) && total(t.begin()->first) == 1)
            monomial_image[k] = t.begin()->first;
    }
    MultiSeries out(vars, n);
    for (const auto& [e, c] : f.terms()) {
        if (total(e) > n) continue;
        MultiSeries term(vars, n);
        term.add_term(zero, c);
        MultiSeries::Exponents shift(vars.size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (monomial_image[k]) {
                for (std::size_t v = 0; v < vars.size(); ++v) shift[v] += e[k] * monomial_image[k]->at(v);
            } else {
                term = term * powers[k][static_cast<std::size_t>(e[k])];
            }
        }
        for (const auto& [te, tc] : term.terms()) {
            MultiSeries::Exponents moved = te;
            for (std::size_t v = 0; v < vars.size(); ++v) moved[v] += shift[v];
            out.add_term(moved, tc);
        }
    }
    return out;
}

}  // namespace genuskit
