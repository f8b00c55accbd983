#ifndef GENUSKIT_SYMM_HPP
#define GENUSKIT_SYMM_HPP

#include <map>
#include <string>
#include <vector>

#include "genuskit/series.hpp"

namespace genuskit::symm {

inline constexpr int kDefaultMaxWeight = 12;

/// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

enum class Basis { E, H, P };

char basis_letter(Basis b);
/// Parses "e", "h" or "p" (case-insensitive).
Basis parse_basis(const std::string& text);
/// Sorts descending; throws on non-positive parts.
Partition normalize(Partition parts);
int weight(const Partition& p);
/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions(int n);

/// The polynomial generator e_k, h_k or p_k (degree k).
Symbol generator_symbol(Basis b, int k);

/// Symmetric function expanded in one of the multiplicative bases e_λ, h_λ, p_λ.
class SymmElement {
public:
    using Terms = std::map<Partition, Rational>;

    explicit SymmElement(Basis basis = Basis::P) : basis_(basis) {}
    static SymmElement generator(Basis basis, int k);
    static SymmElement basis_element(Basis basis, Partition lambda, const Rational& coeff = Rational(1));
    static SymmElement constant(Basis basis, const Rational& c);
    /// Reads a polynomial in the generator symbols of `basis`.
    static SymmElement from_poly(Basis basis, const SymbolPoly& p);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Partition& lambda) const;
    /// Largest weight present (0 for constants and zero).
    int max_weight() const;
    void add_term(Partition lambda, const Rational& coeff);
    SymbolPoly to_poly() const;

    SymmElement& operator+=(const SymmElement& other);
    SymmElement& operator-=(const SymmElement& other);
    SymmElement& operator*=(const Rational& s);
    friend SymmElement operator+(SymmElement a, const SymmElement& b) { return a += b; }
    friend SymmElement operator-(SymmElement a, const SymmElement& b) { return a -= b; }
    friend SymmElement operator*(const SymmElement& a, const SymmElement& b);
    friend SymmElement operator*(SymmElement a, const Rational& s) { return a *= s; }
    friend bool operator==(const SymmElement& a, const SymmElement& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    /// "e[1,1] - 2*e[2]"; "0" for zero.
    std::string to_string() const;

private:
    void check_basis(const SymmElement& other) const;

    Basis basis_;
    Terms terms_;
};

/// Parses "e[2,1] - 3*h[3] + 1/2*p_2 + 1"; terms in different bases are converted to p.
SymmElement parse_symm(const std::string& text, int max_weight = kDefaultMaxWeight);

/// Same symmetric function in the target basis (Newton identities through generating series).
/// Throws std::invalid_argument above max_weight.
SymmElement convert(const SymmElement& x, Basis target, int max_weight = kDefaultMaxWeight);

/// E: 1 + sum e_k z^k.  H: 1 + sum h_k z^k.  P: exp(-sum p_k/k (-z)^k), the E-series in power sums.
Series generating_series(Basis basis, int degree);

/// z - h_1 z^2 + h_2 z^3 - ... to z^{degree+1}, coefficients in h-symbols.
Series exp_infinity(int degree);

struct Specialization {
    enum class Kind { Zeta, Power, Finite };
    Kind kind = Kind::Zeta;
    int power = 1;
    /// Values of x_1, x_2, ... for Finite.
    std::vector<Rational> values;

    /// p_1 -> gamma, p_k -> zeta_k.
    static Specialization zeta();
    /// p_k -> zeta_{s k}.
    static Specialization power_sum(int s);
    /// x_k = 1/k for k <= m.
    static Specialization finite(int m);
    static Specialization sequence(std::vector<Rational> values);
};

SymbolPoly specialize(const SymmElement& x, const Specialization& rule, int max_weight = kDefaultMaxWeight);
/// Finite specializations only; returns the exact value.
Rational specialize_value(const SymmElement& x, const Specialization& rule, int max_weight = kDefaultMaxWeight);

}  // namespace genuskit::symm

#endif  // GENUSKIT_SYMM_HPP
