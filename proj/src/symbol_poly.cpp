#include "genuskit/symbol_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace genuskit {

namespace sym {
Symbol gamma() { return {"gamma", 1}; }
Symbol pi() { return {"pi", 1}; }
Symbol zeta(int k) { return {"zeta_" + std::to_string(k), k}; }
Symbol t(int k) { return {"t_" + std::to_string(k), k}; }
Symbol sigma(int k) { return {"sigma_" + std::to_string(k), k}; }
Symbol u() { return {"u", 0}; }
Symbol q() { return {"q", 0}; }
Symbol named(std::string name, int degree) { return {std::move(name), degree}; }
}  // namespace sym

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(const Symbol& s, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent in monomial");
    if (exponent > 0) {
        factors_.emplace_back(s, exponent);
        degree_ = s.degree * exponent;
    }
}

int Monomial::exponent(const std::string& name) const {
    for (const auto& [s, e] : factors_)
        if (s.name == name) return e;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        int c = i->first.name.compare(j->first.name);
        if (c < 0) {
            out.factors_.push_back(*i++);
        } else if (c > 0) {
            out.factors_.push_back(*j++);
        } else {
            if (i->first.degree != j->first.degree)
                throw std::invalid_argument("symbol '" + i->first.name + "' used with two degrees");
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    const auto n = std::min(a.factors_.size(), b.factors_.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto& [sa, ea] = a.factors_[k];
        const auto& [sb, eb] = b.factors_[k];
        int c = sa.name.compare(sb.name);
        if (c != 0) return c < 0;
        if (ea != eb) return ea > eb;
    }
    return a.factors_.size() < b.factors_.size();
}

bool Monomial::divides(const Monomial& other) const {
    for (const auto& [s, e] : factors_)
        if (other.exponent(s.name) < e) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
    if (!divisor.divides(*this))
        throw std::invalid_argument("monomial " + divisor.to_string() + " does not divide " + to_string());
    Monomial out;
    for (const auto& [s, e] : factors_) {
        int r = e - divisor.exponent(s.name);
        if (r > 0) {
            out.factors_.emplace_back(s, r);
            out.degree_ += s.degree * r;
        }
    }
    return out;
}

Monomial Monomial::without(const std::string& name) const {
    Monomial out;
    for (const auto& [s, e] : factors_) {
        if (s.name == name) continue;
        out.factors_.emplace_back(s, e);
        out.degree_ += s.degree * e;
    }
    return out;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [s, e] : factors_) {
        if (!out.empty()) out += '*';
        out += s.name;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// SymbolPoly

SymbolPoly::SymbolPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

SymbolPoly::SymbolPoly(const Symbol& s) { terms_.emplace(Monomial(s), Rational(1)); }

SymbolPoly::SymbolPoly(const Monomial& m, const Rational& coeff) {
    if (!coeff.is_zero()) terms_.emplace(m, coeff);
}

bool SymbolPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational SymbolPoly::constant_term() const { return coefficient(Monomial()); }

Rational SymbolPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymbolPoly::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool SymbolPoly::is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [degree](const auto& t) { return t.first.degree() == degree; });
}

std::set<std::string> SymbolPoly::symbol_names() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m.factors()) out.insert(s.name);
    return out;
}

std::vector<Symbol> SymbolPoly::signature() const {
    std::map<std::string, int> seen;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m.factors()) seen.emplace(s.name, s.degree);
    std::vector<Symbol> out;
    for (const auto& [n, d] : seen) out.push_back({n, d});
    return out;
}

int SymbolPoly::max_exponent(const std::string& name) const {
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.exponent(name));
    return best;
}

void SymbolPoly::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
    SymbolPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

SymbolPoly& SymbolPoly::operator*=(const SymbolPoly& other) {
    *this = *this * other;
    return *this;
}

SymbolPoly& SymbolPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

SymbolPoly SymbolPoly::operator-() const {
    SymbolPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

SymbolPoly SymbolPoly::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative power of polynomial");
    SymbolPoly result(1);
    SymbolPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

SymbolPoly SymbolPoly::substitute(const std::string& name, const SymbolPoly& value) const {
    return substitute(std::map<std::string, SymbolPoly>{{name, value}});
}

SymbolPoly SymbolPoly::substitute(const std::map<std::string, SymbolPoly>& values) const {
    SymbolPoly out;
    // Cache powers of each substituted value within this call.
    std::map<std::pair<std::string, int>, SymbolPoly> powers;
    for (const auto& [m, c] : terms_) {
        Monomial kept;
        SymbolPoly factor(c);
        for (const auto& [s, e] : m.factors()) {
            auto it = values.find(s.name);
            if (it == values.end()) {
                kept = kept * Monomial(s, e);
                continue;
            }
            auto key = std::make_pair(s.name, e);
            auto pit = powers.find(key);
            if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(e)).first;
            factor *= pit->second;
        }
        out += factor * SymbolPoly(kept, Rational(1));
    }
    return out;
}

SymbolPoly SymbolPoly::truncate_exponent(const std::string& name, int max_exponent) const {
    SymbolPoly out;
    for (const auto& [m, c] : terms_)
        if (m.exponent(name) <= max_exponent) out.terms_.emplace(m, c);
    return out;
}

SymbolPoly SymbolPoly::divided_by(const Monomial& divisor) const {
    SymbolPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.divided_by(divisor), c);
    return out;
}

SymbolPoly SymbolPoly::coefficient_of_power(const std::string& name, int k) const {
    SymbolPoly out;
    for (const auto& [m, c] : terms_)
        if (m.exponent(name) == k) out.add_term(m.without(name), c);
    return out;
}

SymbolPoly SymbolPoly::map_coefficients(
    const std::function<Rational(const Monomial&, const Rational&)>& fn) const {
    SymbolPoly out;
    for (const auto& [m, c] : terms_) out.add_term(m, fn(m, c));
    return out;
}

std::string SymbolPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += m.to_string();
        } else {
            out += mag.to_string() + "*" + m.to_string();
        }
    }
    return out;
}

}  // namespace genuskit
