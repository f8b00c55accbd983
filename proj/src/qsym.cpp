#include "genuskit/qsym.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace genuskit::qsym {

Composition parse_composition(const std::string& text) {
    Composition out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad composition part '" + item + "'");
        }
        if (used != item.size() || value < 1) throw std::invalid_argument("bad composition part '" + item + "'");
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty composition");
    return out;
}

std::string composition_string(const Composition& c) {
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + std::to_string(c[k]);
    return out;
}

int weight(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

bool is_admissible(const Composition& c) { return !c.empty() && c.front() > 1; }

QSymmElement QSymmElement::monomial(Composition c, const Rational& coeff) {
    for (int part : c)
        if (part < 1) throw std::invalid_argument("composition parts must be positive");
    QSymmElement out;
    out.add_term(c, coeff);
    return out;
}

Rational QSymmElement::coefficient(const Composition& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QSymmElement::add_term(const Composition& c, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(c, Rational(0));
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

QSymmElement& QSymmElement::operator+=(const QSymmElement& other) {
    for (const auto& [c, v] : other.terms_) add_term(c, v);
    return *this;
}

QSymmElement& QSymmElement::operator-=(const QSymmElement& other) {
    for (const auto& [c, v] : other.terms_) add_term(c, -v);
    return *this;
}

QSymmElement& QSymmElement::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, v] : terms_) v *= s;
    return *this;
}

QSymmElement stuffle(const Composition& a, const Composition& b) {
    std::map<std::pair<std::size_t, std::size_t>, QSymmElement> memo;
    // Product of the suffixes a[i..] and b[j..].
    std::function<const QSymmElement&(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) -> const QSymmElement& {
        auto it = memo.find({i, j});
        if (it != memo.end()) return it->second;
        QSymmElement value;
        if (i == a.size()) {
            value = QSymmElement::monomial(Composition(b.begin() + static_cast<long>(j), b.end()));
        } else if (j == b.size()) {
            value = QSymmElement::monomial(Composition(a.begin() + static_cast<long>(i), a.end()));
        } else {
            auto prepend = [&value](int head, const QSymmElement& tail) {
                for (const auto& [c, v] : tail.terms()) {
                    Composition nc{head};
                    nc.insert(nc.end(), c.begin(), c.end());
                    value.add_term(nc, v);
                }
            };
            prepend(a[i], rec(i + 1, j));
            prepend(b[j], rec(i, j + 1));
            prepend(a[i] + b[j], rec(i + 1, j + 1));
        }
        return memo.emplace(std::make_pair(i, j), std::move(value)).first->second;
    };
    return rec(0, 0);
}

QSymmElement operator*(const QSymmElement& a, const QSymmElement& b) {
    QSymmElement out;
    for (const auto& [ca, va] : a.terms_)
        for (const auto& [cb, vb] : b.terms_) {
            const QSymmElement product = stuffle(ca, cb);
            for (const auto& [c, v] : product.terms()) out.add_term(c, v * va * vb);
        }
    return out;
}

std::string QSymmElement::to_string() const {
    if (terms_.empty()) return "0";
    // Increasing weight, then lexicographic.
    std::vector<std::pair<Composition, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return weight(x.first) < weight(y.first); });
    std::string out;
    bool first = true;
    for (const auto& [c, v] : ordered) {
        const bool negative = v < Rational(0);
        const Rational mag = negative ? -v : v;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        if (!(mag == Rational(1))) out += mag.to_string() + "*";
        out += "M[" + composition_string(c) + "]";
    }
    return out;
}

QSymmElement symm_to_qsymm(const symm::SymmElement& x, int max_weight) {
    const symm::SymmElement p = symm::convert(x, symm::Basis::P, max_weight);
    QSymmElement out;
    for (const auto& [lambda, c] : p.terms()) {
        QSymmElement term = QSymmElement::one();
        for (int part : lambda) term = term * QSymmElement::monomial({part});
        out += term * c;
    }
    return out;
}

Rational finite_truncation(const QSymmElement& a, int m) {
    if (m < 1) throw std::invalid_argument("finite_truncation needs m >= 1");
    Rational total;
    for (const auto& [comp, coeff] : a.terms()) {
        const std::size_t k = comp.size();
        // s[j] = sum over m >= n_{j+1} > ... > n_k of the trailing factors; s[k] = 1.
        std::vector<Rational> s(k + 1);
        s[k] = Rational(1);
        for (int n = 1; n <= m; ++n) {
            for (std::size_t j = 0; j < k; ++j) {
                mpz_class den;
                mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(comp[j]));
                s[j] += s[j + 1] * Rational(mpq_class(mpz_class(1), den));
            }
        }
        total += s[0] * coeff;
    }
    return total;
}

namespace {

// Function on [N, oo) as sum c_{a,b} x^{-a} log(x/N)^b.
using TailFn = std::map<std::pair<int, int>, long double>;

long double factorial(int b) {
    long double f = 1;
    for (int k = 2; k <= b; ++k) f *= k;
    return f;
}

// x -> int_N^x t^{-i} f(t) dt
TailFn integrate(const TailFn& f, int i, long double N) {
    TailFn out;
    for (const auto& [key, c] : f) {
        const auto [a, b] = key;
        const int s = a + i;
        if (s == 1) {
            out[{0, b + 1}] += c / (b + 1);
            continue;
        }
        const long double r = s - 1;
        const long double bf = factorial(b);
        for (int p = 0; p <= b; ++p) out[{s - 1, b - p}] -= c * bf / factorial(b - p) / std::pow(r, p + 1);
        out[{0, 0}] += c * bf / std::pow(r, b + 1) * std::pow(N, -r);
    }
    return out;
}

}  // namespace

MzvValue mzv_at_cutoff(const Composition& I, long cutoff) {
    if (I.empty()) throw std::invalid_argument("empty composition");
    for (int part : I)
        if (part < 1) throw std::invalid_argument("composition parts must be positive");
    if (!is_admissible(I))
        throw DivergentSeries("zeta(" + composition_string(I) + ") diverges: the first part must exceed 1");
    if (cutoff < 10) throw std::invalid_argument("cutoff too small");
    const std::size_t k = I.size();
    std::vector<long double> s(k + 1, 0.0L);
    s[k] = 1.0L;
    for (long n = 1; n <= cutoff; ++n) {
        const long double x = 1.0L / static_cast<long double>(n);
        for (std::size_t j = 0; j < k; ++j) s[j] += std::pow(x, I[j]) * s[j + 1];
    }
    const long double N = static_cast<long double>(cutoff);
    TailFn inner{{{0, 0}, 1.0L}};
    for (std::size_t j = k; j-- > 1;) {
        TailFn next = integrate(inner, I[j], N);
        next[{0, 0}] += s[j];
        inner = std::move(next);
    }
    long double tail = 0;
    for (const auto& [key, c] : integrate(inner, I[0], N))
        if (key.first == 0 && key.second == 0) tail += c;

    MzvValue out;
    out.value = s[0] + tail;
    out.cutoff = cutoff;
    const long double logn = 1.0L + std::log(N);
    out.error_bound = 2.0L * static_cast<long double>(k) * std::pow(logn, static_cast<long double>(k)) / (N * N) +
                      N * static_cast<long double>(k) * 1e-18L;
    return out;
}

MzvValue mzv_eval(const Composition& I, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    for (long cutoff = kInitialCutoff;; cutoff *= 10) {
        MzvValue v = mzv_at_cutoff(I, cutoff);
        if (v.error_bound <= tol) return v;
        if (cutoff >= kMaxCutoff)
            throw std::runtime_error("tolerance " + std::to_string(tol) + " not reached at cutoff " + std::to_string(cutoff));
    }
}

WittField WittField::generator(int k, const Rational& coeff) {
    WittField out;
    if (!coeff.is_zero()) out.terms_.emplace(k, coeff);
    return out;
}

Rational WittField::coefficient(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

WittField& WittField::operator+=(const WittField& other) {
    for (const auto& [k, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, Rational(0));
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

WittField operator*(WittField a, const Rational& s) {
    if (s.is_zero()) return WittField();
    for (auto& [k, c] : a.terms_) c *= s;
    return a;
}

std::string WittField::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        const bool negative = v < Rational(0);
        const Rational mag = negative ? -v : v;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        if (!(mag == Rational(1))) out += mag.to_string() + "*";
        out += "z_" + std::to_string(k);
    }
    return out;
}

WittField bracket(const WittField& a, const WittField& b) {
    WittField out;
    for (const auto& [j, cj] : a.terms())
        for (const auto& [k, ck] : b.terms()) out += WittField::generator(j + k, cj * ck * Rational(k - j));
    return out;
}

WittField lie_to_witt(const lie::LieElement& x, const lie::Alphabet& alphabet) {
    std::function<WittField(int)> letter = [&alphabet](int l) {
        return WittField::generator(alphabet.degrees.at(static_cast<std::size_t>(l)));
    };
    std::function<WittField(const WittField&, const WittField&)> br = [](const WittField& a, const WittField& b) {
        return bracket(a, b);
    };
    return lie::evaluate<WittField>(x, letter, br, WittField());
}

}  // namespace genuskit::qsym
