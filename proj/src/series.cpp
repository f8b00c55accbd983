#include "genuskit/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace genuskit {

namespace {

bool is_rational_unit(const SymbolPoly& p) { return p.is_constant() && !p.is_zero(); }

void require_order(int order) {
    if (order < 0) throw std::invalid_argument("series truncation order must be non-negative");
}

}  // namespace

Series::Series(std::string variable, int order) : variable_(std::move(variable)) {
    require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, SymbolPoly());
}

Series::Series(std::string variable, std::vector<SymbolPoly> coefficients)
    : variable_(std::move(variable)), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series Series::variable(const std::string& name, int order) {
    Series s(name, order);
    if (order >= 1) s.coeffs_[1] = SymbolPoly(1);
    return s;
}

Series Series::constant(const std::string& name, int order, const SymbolPoly& value) {
    Series s(name, order);
    s.coeffs_[0] = value;
    return s;
}

Series Series::generate(const std::string& name, int order, const std::function<SymbolPoly(int)>& coeff) {
    Series s(name, order);
    for (int k = 0; k <= order; ++k) s.coeffs_[k] = coeff(k);
    return s;
}

const SymbolPoly& Series::operator[](int k) const {
    if (k < 0 || k > order())
        throw std::out_of_range("coefficient z^" + std::to_string(k) + " beyond truncation order " +
                                std::to_string(order()));
    return coeffs_[k];
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const SymbolPoly& c) { return c.is_zero(); });
}

int Series::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (!coeffs_[k].is_zero()) return k;
    return order() + 1;
}

Series Series::truncated(int order) const {
    require_order(order);
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return Series(variable_, std::vector<SymbolPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::shifted_up(int k) const {
    std::vector<SymbolPoly> c(static_cast<std::size_t>(k), SymbolPoly());
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Series(variable_, std::move(c));
}

Series Series::shifted_down(int k) const {
    if (k > order()) throw std::invalid_argument("shift exceeds truncation order");
    for (int i = 0; i < k; ++i)
        if (!coeffs_[i].is_zero())
            throw std::invalid_argument("cannot divide by " + variable_ + "^" + std::to_string(k) +
                                        ": low coefficient is nonzero");
    return Series(variable_, std::vector<SymbolPoly>(coeffs_.begin() + k, coeffs_.end()));
}

Series Series::derivative() const {
    if (order() == 0) return Series(variable_, 0);
    Series out(variable_, order() - 1);
    for (int k = 1; k <= order(); ++k) out.coeffs_[k - 1] = coeffs_[k] * Rational(k);
    return out;
}

Series Series::integral() const {
    Series out(variable_, order() + 1);
    for (int k = 0; k <= order(); ++k) out.coeffs_[k + 1] = coeffs_[k] * Rational(1, k + 1);
    return out;
}

Series Series::scaled_variable(const SymbolPoly& c) const {
    Series out = *this;
    SymbolPoly power(1);
    for (int k = 1; k <= order(); ++k) {
        power *= c;
        out.coeffs_[k] = coeffs_[k] * power;
    }
    return out;
}

Series Series::map_coefficients(const std::function<SymbolPoly(const SymbolPoly&)>& fn) const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = fn(c);
    return out;
}

Series Series::renamed(const std::string& variable) const {
    Series out = *this;
    out.variable_ = variable;
    return out;
}

void Series::check_compatible(const Series& other) const {
    if (variable_ != other.variable_)
        throw std::invalid_argument("series variable mismatch: '" + variable_ + "' vs '" + other.variable_ + "'");
}

Series& Series::operator+=(const Series& other) {
    check_compatible(other);
    int n = std::min(order(), other.order());
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

Series& Series::operator-=(const Series& other) {
    check_compatible(other);
    int n = std::min(order(), other.order());
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

Series& Series::operator*=(const SymbolPoly& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Series Series::operator-() const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Series operator*(const Series& a, const Series& b) {
    a.check_compatible(b);
    int n = std::min(a.order(), b.order());
    Series out(a.variable_, n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

Series operator/(const Series& a, const Series& b) {
    a.check_compatible(b);
    return a * inverse(b);
}

Series Series::pow(int exponent) const {
    if (exponent < 0) return inverse(*this).pow(-exponent);
    Series result = Series::constant(variable_, order(), SymbolPoly(1));
    Series base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

std::string Series::to_string() const {
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        std::string c = coeffs_[k].to_string();
        bool compound = coeffs_[k].size() > 1;
        std::string power = k == 0 ? "" : (k == 1 ? variable_ : variable_ + "^" + std::to_string(k));
        std::string term;
        if (k == 0) {
            term = c;
        } else if (c == "1") {
            term = power;
        } else if (c == "-1") {
            term = "-" + power;
        } else {
            term = (compound ? "(" + c + ")" : c) + "*" + power;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    if (!out.empty()) out += " + ";
    out += "O(" + variable_ + "^" + std::to_string(order() + 1) + ")";
    return out;
}

// ---------------------------------------------------------------------------

Series inverse(const Series& a) {
    if (!is_rational_unit(a[0]))
        throw std::invalid_argument("series inverse needs a nonzero rational constant term");
    const int n = a.order();
    Rational c0inv = a[0].constant_term().inverse();
    std::vector<SymbolPoly> b(static_cast<std::size_t>(n) + 1);
    b[0] = SymbolPoly(c0inv);
    for (int k = 1; k <= n; ++k) {
        SymbolPoly acc;
        for (int i = 1; i <= k; ++i)
            if (!a[i].is_zero() && !b[k - i].is_zero()) acc += a[i] * b[k - i];
        b[k] = acc * (-c0inv);
    }
    return Series(a.variable_name(), std::move(b));
}

Series exp(const Series& a) {
    if (!a[0].is_zero()) throw std::invalid_argument("series exp needs zero constant term");
    const int n = a.order();
    // f' = a' f  =>  k f_k = sum_{i=1..k} i a_i f_{k-i}
    std::vector<SymbolPoly> f(static_cast<std::size_t>(n) + 1);
    f[0] = SymbolPoly(1);
    for (int k = 1; k <= n; ++k) {
        SymbolPoly acc;
        for (int i = 1; i <= k; ++i)
            if (!a[i].is_zero() && !f[k - i].is_zero()) acc += a[i] * f[k - i] * Rational(i);
        f[k] = acc * Rational(1, k);
    }
    return Series(a.variable_name(), std::move(f));
}

Series log(const Series& a) {
    if (a[0] != SymbolPoly(1)) throw std::invalid_argument("series log needs constant term exactly 1");
    const int n = a.order();
    // a b' = a'  =>  k b_k = k a_k - sum_{i=1..k-1} i b_i a_{k-i}
    std::vector<SymbolPoly> b(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        SymbolPoly acc = a[k] * Rational(k);
        for (int i = 1; i < k; ++i)
            if (!b[i].is_zero() && !a[k - i].is_zero()) acc -= b[i] * a[k - i] * Rational(i);
        b[k] = acc * Rational(1, k);
    }
    return Series(a.variable_name(), std::move(b));
}

Series sqrt(const Series& a) {
    if (a[0] != SymbolPoly(1)) throw std::invalid_argument("series sqrt needs constant term exactly 1");
    const int n = a.order();
    std::vector<SymbolPoly> s(static_cast<std::size_t>(n) + 1);
    s[0] = SymbolPoly(1);
    for (int k = 1; k <= n; ++k) {
        SymbolPoly acc = a[k];
        for (int i = 1; i < k; ++i)
            if (!s[i].is_zero() && !s[k - i].is_zero()) acc -= s[i] * s[k - i];
        s[k] = acc * Rational(1, 2);
    }
    return Series(a.variable_name(), std::move(s));
}

Series compose(const Series& outer, const Series& inner) {
    if (!inner[0].is_zero()) throw std::invalid_argument("series composition needs inner constant term zero");
    const int n = std::min(outer.order(), inner.order());
    const Series in = inner.truncated(n);
    Series acc = Series::constant(inner.variable_name(), n, outer[n]);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * in;
        acc = acc + Series::constant(inner.variable_name(), n, outer[k]);
    }
    return acc;
}

namespace {

Rational linear_coefficient(const Series& f) {
    if (f.order() < 1) throw std::invalid_argument("reversion needs truncation order >= 1");
    if (!f[0].is_zero()) throw std::invalid_argument("reversion needs zero constant term");
    if (!is_rational_unit(f[1]))
        throw std::invalid_argument("reversion needs a nonzero rational linear coefficient");
    return f[1].constant_term();
}

}  // namespace

Series revert_lagrange(const Series& f) {
    linear_coefficient(f);
    const int n = f.order();
    // [z^k] g = (1/k) [z^{k-1}] (z/f)^k
    Series h = inverse(f.shifted_down(1));  // order n-1
    std::vector<SymbolPoly> g(static_cast<std::size_t>(n) + 1);
    Series power = Series::constant(f.variable_name(), h.order(), SymbolPoly(1));
    for (int k = 1; k <= n; ++k) {
        power = power * h;
        g[k] = power[k - 1] * Rational(1, k);
    }
    return Series(f.variable_name(), std::move(g));
}

Series revert_newton(const Series& f) {
    Rational c = linear_coefficient(f);
    const int n = f.order();
    const std::string& z = f.variable_name();
    const Series identity = Series::variable(z, n);
    const Series fprime = f.derivative();
    Series g = identity * SymbolPoly(c.inverse());
    // Each step doubles the number of correct coefficients; the residual always
    // starts at z^2 so dividing through by z keeps the step known to order n.
    for (int correct = 1; correct <= 2 * n + 2; correct *= 2) {
        Series residual = compose(f, g) - identity;
        if (residual.is_zero()) return g;
        Series slope = compose(fprime, g);
        g = g - (residual.shifted_down(1) * inverse(slope)).shifted_up(1);
    }
    if (!(compose(f, g) - identity).is_zero()) throw std::logic_error("Newton reversion did not converge");
    return g;
}

Series revert(const Series& f) { return revert_lagrange(f); }

}  // namespace genuskit
