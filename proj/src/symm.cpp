#include "genuskit/symm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace genuskit::symm {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::E: return 'e';
        case Basis::H: return 'h';
        case Basis::P: return 'p';
    }
    return '?';
}

Basis parse_basis(const std::string& text) {
    if (text.size() == 1) {
        switch (std::tolower(static_cast<unsigned char>(text[0]))) {
            case 'e': return Basis::E;
            case 'h': return Basis::H;
            case 'p': return Basis::P;
            default: break;
        }
    }
    throw std::invalid_argument("unknown basis '" + text + "' (expected e, h or p)");
}

Partition normalize(Partition parts) {
    for (int p : parts)
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

int weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition current;
    std::function<void(int, int)> rec = [&](int remaining, int largest) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, largest); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Symbol generator_symbol(Basis b, int k) {
    return sym::named(std::string(1, basis_letter(b)) + "_" + std::to_string(k), k);
}

SymmElement SymmElement::generator(Basis basis, int k) { return basis_element(basis, {k}); }

SymmElement SymmElement::basis_element(Basis basis, Partition lambda, const Rational& coeff) {
    SymmElement x(basis);
    x.add_term(std::move(lambda), coeff);
    return x;
}

SymmElement SymmElement::constant(Basis basis, const Rational& c) { return basis_element(basis, {}, c); }

SymmElement SymmElement::from_poly(Basis basis, const SymbolPoly& p) {
    const std::string prefix = std::string(1, basis_letter(basis)) + "_";
    SymmElement x(basis);
    for (const auto& [m, c] : p.terms()) {
        Partition lambda;
        for (const auto& [s, e] : m.factors()) {
            if (s.name.rfind(prefix, 0) != 0)
                throw std::invalid_argument("symbol " + s.name + " is not a generator of basis " + prefix);
            lambda.insert(lambda.end(), static_cast<std::size_t>(e), std::stoi(s.name.substr(prefix.size())));
        }
        x.add_term(std::move(lambda), c);
    }
    return x;
}

Rational SymmElement::coefficient(const Partition& lambda) const {
    auto it = terms_.find(normalize(lambda));
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymmElement::max_weight() const {
    int w = 0;
    for (const auto& [lambda, c] : terms_) w = std::max(w, weight(lambda));
    return w;
}

void SymmElement::add_term(Partition lambda, const Rational& coeff) {
    if (coeff.is_zero()) return;
    lambda = normalize(std::move(lambda));
    auto [it, inserted] = terms_.try_emplace(std::move(lambda), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolPoly SymmElement::to_poly() const {
    SymbolPoly out;
    for (const auto& [lambda, c] : terms_) {
        SymbolPoly term(c);
        for (int part : lambda) term *= SymbolPoly(generator_symbol(basis_, part));
        out += term;
    }
    return out;
}

void SymmElement::check_basis(const SymmElement& other) const {
    if (basis_ != other.basis_) throw std::invalid_argument("symmetric functions in different bases");
}

SymmElement& SymmElement::operator+=(const SymmElement& other) {
    check_basis(other);
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
    return *this;
}

SymmElement& SymmElement::operator-=(const SymmElement& other) {
    check_basis(other);
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
    return *this;
}

SymmElement& SymmElement::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, c] : terms_) c *= s;
    return *this;
}

SymmElement operator*(const SymmElement& a, const SymmElement& b) {
    a.check_basis(b);
    SymmElement out(a.basis_);
    for (const auto& [la, ca] : a.terms_) {
        for (const auto& [lb, cb] : b.terms_) {
            Partition merged = la;
            merged.insert(merged.end(), lb.begin(), lb.end());
            out.add_term(std::move(merged), ca * cb);
        }
    }
    return out;
}

std::string SymmElement::to_string() const {
    if (terms_.empty()) return "0";
    // Ascending weight, then partitions in reverse lexicographic order.
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
        const int wx = weight(x->first), wy = weight(y->first);
        if (wx != wy) return wx < wy;
        return x->first > y->first;
    });
    std::string out;
    for (const auto* t : order) {
        const auto& [lambda, c] = *t;
        std::string mono;
        if (!lambda.empty()) {
            mono = std::string(1, basis_letter(basis_)) + "[";
            for (std::size_t i = 0; i < lambda.size(); ++i) {
                if (i) mono += ",";
                mono += std::to_string(lambda[i]);
            }
            mono += "]";
        }
        Rational mag = c.abs();
        std::string body;
        if (mono.empty()) body = mag.to_string();
        else if (mag.is_one()) body = mono;
        else body = mag.to_string() + "*" + mono;
        if (out.empty()) out = (c.sign() < 0 ? "-" : "") + body;
        else out += (c.sign() < 0 ? " - " : " + ") + body;
    }
    return out;
}

namespace {

Series generic_series(Basis b, int degree) {
    return Series::generate("z", degree, [b](int k) {
        return k == 0 ? SymbolPoly(1) : SymbolPoly(generator_symbol(b, k));
    });
}

// exponent of -sum p_k/k (-z)^k  (sign = -1) or sum p_k/k z^k (sign = +1)
Series power_sum_exponent(int degree, int sign) {
    return Series::generate("z", degree, [sign](int k) {
        if (k == 0) return SymbolPoly();
        Rational c(1, k);
        if (sign < 0 && k % 2 == 0) c = -c;
        return SymbolPoly(generator_symbol(Basis::P, k)) * c;
    });
}

// Images of the generators of `source` (index k, 1..w) as polynomials in target generators.
std::vector<SymbolPoly> generator_images(Basis source, Basis target, int w) {
    std::vector<SymbolPoly> images(static_cast<std::size_t>(w) + 1);
    if (source == target) {
        for (int k = 1; k <= w; ++k) images[k] = SymbolPoly(generator_symbol(source, k));
        return images;
    }
    Series s;
    if (target == Basis::P) {
        s = exp(power_sum_exponent(w, source == Basis::E ? -1 : 1));
        for (int k = 1; k <= w; ++k) images[k] = s[k];
    } else if (source == Basis::P) {
        s = log(generic_series(target, w));
        for (int k = 1; k <= w; ++k) {
            Rational scale(k);
            if (target == Basis::E && k % 2 == 0) scale = -scale;
            images[k] = s[k] * scale;
        }
    } else {
        // E(z) H(-z) = 1
        s = inverse(generic_series(target, w).scaled_variable(SymbolPoly(-1)));
        for (int k = 1; k <= w; ++k) images[k] = s[k];
    }
    return images;
}

}  // namespace

SymmElement convert(const SymmElement& x, Basis target, int max_weight) {
    const int w = x.max_weight();
    if (w > max_weight)
        throw std::invalid_argument("weight " + std::to_string(w) + " exceeds the cap " + std::to_string(max_weight));
    if (x.basis() == target) return x;
    auto images = generator_images(x.basis(), target, w);
    std::map<std::string, SymbolPoly> values;
    for (int k = 1; k <= w; ++k) values.emplace(generator_symbol(x.basis(), k).name, images[k]);
    return SymmElement::from_poly(target, x.to_poly().substitute(values));
}

Series generating_series(Basis basis, int degree) {
    if (basis == Basis::P) return exp(power_sum_exponent(degree, -1));
    return generic_series(basis, degree);
}

Series exp_infinity(int degree) {
    return Series::generate("z", degree + 1, [](int k) {
        if (k == 0) return SymbolPoly();
        if (k == 1) return SymbolPoly(1);
        SymbolPoly h(generator_symbol(Basis::H, k - 1));
        return (k - 1) % 2 == 0 ? h : -h;
    });
}

Specialization Specialization::zeta() { return {}; }

Specialization Specialization::power_sum(int s) {
    if (s < 1) throw std::invalid_argument("power specialization needs s >= 1");
    Specialization r;
    r.kind = Kind::Power;
    r.power = s;
    return r;
}

Specialization Specialization::finite(int m) {
    if (m < 1) throw std::invalid_argument("finite specialization needs m >= 1");
    std::vector<Rational> values;
    for (int k = 1; k <= m; ++k) values.emplace_back(1, k);
    return sequence(std::move(values));
}

Specialization Specialization::sequence(std::vector<Rational> values) {
    Specialization r;
    r.kind = Kind::Finite;
    r.values = std::move(values);
    return r;
}

SymbolPoly specialize(const SymmElement& x, const Specialization& rule, int max_weight) {
    SymmElement p = convert(x, Basis::P, max_weight);
    const int w = p.max_weight();
    std::map<std::string, SymbolPoly> values;
    for (int k = 1; k <= w; ++k) {
        SymbolPoly image;
        switch (rule.kind) {
            case Specialization::Kind::Zeta:
                image = k == 1 ? SymbolPoly(sym::gamma()) : SymbolPoly(sym::zeta(k));
                break;
            case Specialization::Kind::Power:
                image = rule.power * k == 1 ? SymbolPoly(sym::gamma()) : SymbolPoly(sym::zeta(rule.power * k));
                break;
            case Specialization::Kind::Finite: {
                Rational sum(0);
                for (const auto& v : rule.values) sum += v.pow(k);
                image = SymbolPoly(sum);
                break;
            }
        }
        values.emplace(generator_symbol(Basis::P, k).name, image);
    }
    return p.to_poly().substitute(values);
}

Rational specialize_value(const SymmElement& x, const Specialization& rule, int max_weight) {
    if (rule.kind != Specialization::Kind::Finite)
        throw std::invalid_argument("only finite specializations have rational values");
    return specialize(x, rule, max_weight).constant_term();
}

SymmElement parse_symm(const std::string& text, int max_weight) {
    auto fail = [&text](const std::string& what) {
        return std::invalid_argument("symmetric function '" + text + "': " + what);
    };
    auto trim = [](const std::string& t) {
        const auto first = t.find_first_not_of(" \t");
        if (first == std::string::npos) return std::string();
        return t.substr(first, t.find_last_not_of(" \t") - first + 1);
    };
    std::vector<std::pair<int, std::string>> terms;
    int depth = 0, sign = 1;
    bool signed_term = false;
    std::string current;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            if (trim(current).empty()) {
                if (signed_term || !terms.empty()) throw fail("missing term");
            } else {
                terms.emplace_back(sign, trim(current));
            }
            current.clear();
            sign = c == '-' ? -1 : 1;
            signed_term = true;
            continue;
        }
        current += c;
    }
    if (depth != 0) throw fail("unbalanced brackets");
    if (trim(current).empty()) throw fail("missing term");
    terms.emplace_back(sign, trim(current));

    std::vector<std::pair<std::optional<Basis>, std::pair<Partition, Rational>>> parsed;
    std::optional<Basis> common;
    bool mixed = false;
    for (const auto& [s, body] : terms) {
        Rational coeff(s);
        std::string rest = body;
        if (const auto star = body.find('*'); star != std::string::npos) {
            coeff *= Rational::parse(trim(body.substr(0, star)));
            rest = trim(body.substr(star + 1));
        }
        if (rest.empty()) throw fail("missing term");
        if (!std::isalpha(static_cast<unsigned char>(rest[0]))) {
            parsed.push_back({std::nullopt, {Partition{}, coeff * Rational::parse(rest)}});
            continue;
        }
        const Basis b = parse_basis(rest.substr(0, 1));
        Partition lambda;
        if (rest.size() > 2 && rest[1] == '_') {
            lambda.push_back(std::stoi(rest.substr(2)));
            if (std::to_string(lambda.back()) != rest.substr(2)) throw fail("bad generator '" + rest + "'");
        } else if (rest.size() >= 3 && rest[1] == '[' && rest.back() == ']') {
            std::stringstream in(rest.substr(2, rest.size() - 3));
            std::string item;
            while (std::getline(in, item, ',')) {
                item = trim(item);
                if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) throw fail("bad partition in '" + rest + "'");
                lambda.push_back(std::stoi(item));
            }
        } else {
            throw fail("cannot read term '" + rest + "'");
        }
        for (int part : lambda)
            if (part < 1) throw fail("partition parts must be positive");
        if (common && *common != b) mixed = true;
        common = b;
        parsed.push_back({b, {normalize(lambda), coeff}});
    }
    const Basis target = mixed || !common ? Basis::P : *common;
    SymmElement out(target);
    for (const auto& [b, term] : parsed) {
        if (!b) {
            out += SymmElement::constant(target, term.second);
            continue;
        }
        const auto element = SymmElement::basis_element(*b, term.first, term.second);
        out += *b == target ? element : convert(element, target, max_weight);
    }
    return out;
}

}  // namespace genuskit::symm
