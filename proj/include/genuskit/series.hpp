#ifndef GENUSKIT_SERIES_HPP
#define GENUSKIT_SERIES_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "genuskit/symbol_poly.hpp"

namespace genuskit {

inline constexpr int kDefaultOrder = 20;

/// Truncated univariate power series with SymbolPoly coefficients.
///
/// A series of order N knows the coefficients of z^0 .. z^N; nothing is assumed
/// about higher powers.  Binary operations truncate to the smaller order.
class Series {
public:
    Series() = default;
    /// The zero series known to the given order.
    Series(std::string variable, int order);
    Series(std::string variable, std::vector<SymbolPoly> coefficients);

    static Series variable(const std::string& name, int order);
    static Series constant(const std::string& name, int order, const SymbolPoly& value);
    /// Builds sum_{k<=order} coeff(k) z^k.
    static Series generate(const std::string& name, int order,
                           const std::function<SymbolPoly(int)>& coeff);

    const std::string& variable_name() const { return variable_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of z^k.  Throws std::out_of_range beyond the truncation order.
    const SymbolPoly& operator[](int k) const;
    const std::vector<SymbolPoly>& coefficients() const { return coeffs_; }
    bool is_zero() const;
    /// Lowest index with a nonzero coefficient, or order()+1 if none.
    int valuation() const;

    Series truncated(int order) const;
    /// Multiplies by z^k; the result is known to order() + k.
    Series shifted_up(int k) const;
    /// Divides by z^k; requires the first k coefficients to vanish.
    Series shifted_down(int k) const;
    Series derivative() const;
    /// Antiderivative with zero constant term.
    Series integral() const;
    /// f(c z) for a polynomial scale factor c.
    Series scaled_variable(const SymbolPoly& c) const;
    Series map_coefficients(const std::function<SymbolPoly(const SymbolPoly&)>& fn) const;
    Series renamed(const std::string& variable) const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const SymbolPoly& scalar);
    Series operator-() const;

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const SymbolPoly& s) { return a *= s; }
    friend Series operator*(const SymbolPoly& s, Series a) { return a *= s; }
    /// a * b^{-1}; b must have a nonzero rational constant term.
    friend Series operator/(const Series& a, const Series& b);
    friend bool operator==(const Series& a, const Series& b) {
        return a.variable_ == b.variable_ && a.coeffs_ == b.coeffs_;
    }

    Series pow(int exponent) const;

    /// Canonical text form "c0 + c1*z + ... + O(z^{N+1})".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.to_string(); }

private:
    void check_compatible(const Series& other) const;

    std::string variable_;
    std::vector<SymbolPoly> coeffs_;
};

/// Multiplicative inverse; constant term must be a nonzero rational.
Series inverse(const Series& a);
/// exp(a); constant term must be zero.
Series exp(const Series& a);
/// log(a); constant term must be exactly 1.
Series log(const Series& a);
/// Square root with constant term 1; constant term of a must be exactly 1.
Series sqrt(const Series& a);
/// outer(inner); inner must have zero constant term.  Result named after inner's variable.
Series compose(const Series& outer, const Series& inner);
/// Compositional inverse via Lagrange inversion.  f must be c z + O(z^2) with c a nonzero rational.
Series revert(const Series& f);
Series revert_lagrange(const Series& f);
/// Compositional inverse via Newton iteration on f(g) = z.
Series revert_newton(const Series& f);

}  // namespace genuskit

#endif  // GENUSKIT_SERIES_HPP
