#ifndef GENUSKIT_SYMBOL_POLY_HPP
#define GENUSKIT_SYMBOL_POLY_HPP

#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "genuskit/rational.hpp"

namespace genuskit {

/// A graded polynomial generator.  Two symbols with the same name must agree on degree.
struct Symbol {
    std::string name;
    int degree = 0;

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

namespace sym {
Symbol gamma();            // Euler's constant, degree 1
Symbol pi();               // degree 1
Symbol zeta(int k);        // zeta_k, degree k
Symbol t(int k);           // Landweber-Novikov generator t_k, degree k
Symbol sigma(int k);       // Thom twist coefficient, degree k
Symbol u();                // grading unit, degree 0
Symbol q();                // Witten nome, degree 0
Symbol named(std::string name, int degree);
}  // namespace sym

/// Commutative monomial: symbols sorted by name, positive exponents.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const Symbol& s, int exponent = 1);

    int degree() const { return degree_; }
    bool is_one() const { return factors_.empty(); }
    int exponent(const std::string& name) const;
    const std::vector<std::pair<Symbol, int>>& factors() const { return factors_; }

    bool divides(const Monomial& other) const;
    /// Throws std::invalid_argument if *this is not divisible by divisor.
    Monomial divided_by(const Monomial& divisor) const;
    /// Removes one symbol entirely.
    Monomial without(const std::string& name) const;

    std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.factors_ == b.factors_;
    }
    /// Total degree first, then lexicographic on (name, exponent).
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<Symbol, int>> factors_;
    int degree_ = 0;
};

/// Sparse multivariate polynomial over the rationals in graded named symbols.
class SymbolPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    SymbolPoly() = default;
    SymbolPoly(const Rational& constant);  // NOLINT(implicit)
    SymbolPoly(long constant) : SymbolPoly(Rational(constant)) {}  // NOLINT(implicit)
    SymbolPoly(int constant) : SymbolPoly(Rational(constant)) {}   // NOLINT(implicit)
    SymbolPoly(const Symbol& s);  // NOLINT(implicit)
    SymbolPoly(const Monomial& m, const Rational& coeff);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the unit monomial.
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    std::size_t size() const { return terms_.size(); }

    /// Largest total degree among terms (-1 for the zero polynomial).
    int max_degree() const;
    bool is_homogeneous(int degree) const;
    std::set<std::string> symbol_names() const;
    /// The (name, degree) pairs of all symbols present, sorted by name.
    std::vector<Symbol> signature() const;
    int max_exponent(const std::string& name) const;

    SymbolPoly& operator+=(const SymbolPoly& other);
    SymbolPoly& operator-=(const SymbolPoly& other);
    SymbolPoly& operator*=(const SymbolPoly& other);
    SymbolPoly& operator*=(const Rational& scalar);
    SymbolPoly operator-() const;
    SymbolPoly pow(int exponent) const;

    friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
    friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
    friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator*(SymbolPoly a, const Rational& s) { return a *= s; }
    friend SymbolPoly operator*(const Rational& s, SymbolPoly a) { return a *= s; }
    friend bool operator==(const SymbolPoly& a, const SymbolPoly& b) { return a.terms_ == b.terms_; }

    /// Adds coeff * m in place.
    void add_term(const Monomial& m, const Rational& coeff);

    /// Replaces every occurrence of a symbol by a polynomial.
    SymbolPoly substitute(const std::string& name, const SymbolPoly& value) const;
    SymbolPoly substitute(const std::map<std::string, SymbolPoly>& values) const;
    /// Drops all terms whose exponent of `name` exceeds max_exponent.
    SymbolPoly truncate_exponent(const std::string& name, int max_exponent) const;
    /// Exact division by a monomial; throws if some term is not divisible.
    SymbolPoly divided_by(const Monomial& m) const;
    /// Coefficient of name^k, viewing the polynomial as univariate in `name`.
    SymbolPoly coefficient_of_power(const std::string& name, int k) const;
    SymbolPoly map_coefficients(const std::function<Rational(const Monomial&, const Rational&)>& fn) const;

    /// Canonical, byte-stable text form ("0" for zero).
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const SymbolPoly& p) { return os << p.to_string(); }

private:
    Terms terms_;
};

}  // namespace genuskit

#endif  // GENUSKIT_SYMBOL_POLY_HPP
