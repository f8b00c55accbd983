#ifndef GENUSKIT_FGL_HPP
#define GENUSKIT_FGL_HPP

#include <string>
#include <utility>
#include <vector>

#include "genuskit/check.hpp"
#include "genuskit/multi_series.hpp"
#include "genuskit/series.hpp"

namespace genuskit::fgl {

/// z + sum_{k=1}^{N} t_k z^{k+1}, stored as a series of order N+1.
class FormalDiffeo {
public:
    FormalDiffeo() = default;
    /// Requires zero constant term and linear coefficient exactly 1.
    explicit FormalDiffeo(Series s);

    static FormalDiffeo identity(int degree);
    /// Generic diffeo with coefficients the symbols <prefix>_k (degree k).
    static FormalDiffeo generic(int degree, const std::string& prefix = "t");

    int degree() const { return series_.order() - 1; }
    const Series& series() const { return series_; }
    /// Coefficient t_k of z^{k+1}.
    const SymbolPoly& t(int k) const { return series_[k + 1]; }
    /// t(-z) = -t(z), i.e. every t_k with k odd vanishes.
    bool is_odd() const;

    friend bool operator==(const FormalDiffeo& a, const FormalDiffeo& b) { return a.series_ == b.series_; }

private:
    Series series_;
};

Symbol coefficient_symbol(const std::string& prefix, int k);

/// Apply s, then t: the diffeo z -> t(s(z)).
FormalDiffeo compose(const FormalDiffeo& s, const FormalDiffeo& t);
FormalDiffeo invert(const FormalDiffeo& t);
/// t_k -> u^k t_k.
FormalDiffeo grading_action(const FormalDiffeo& t);
/// u^{-1} t(u z).
FormalDiffeo grading_by_conjugation(const FormalDiffeo& t);

/// F(X, Y) = t^{-1}(t(X) + t(Y)) in variables X, Y to total degree t.degree() + 1.
MultiSeries fgl_from_log(const FormalDiffeo& t);

struct AxiomReport {
    MultiSeries unit;           // F(X, 0) - X
    MultiSeries commutativity;  // F(X, Y) - F(Y, X)
    MultiSeries associativity;  // F(F(X, Y), Z) - F(X, F(Y, Z))

    bool passed() const { return unit.is_zero() && commutativity.is_zero() && associativity.is_zero(); }
    std::vector<Check> checks() const;
};

AxiomReport check_fgl_axioms(const MultiSeries& F);

/// One term coeff * (left monomial) (x) (right monomial) of a coproduct.
struct TensorTerm {
    Monomial left;
    Monomial right;
    Rational coeff;
};

/// Delta(t_k), k = 1..max_degree, as polynomials in t'_i (left factor) and t''_j (right factor):
/// the coefficients of the composition t'(t''(z)).
std::vector<SymbolPoly> ln_coproduct(int max_degree);
/// Splits a polynomial in t'/t'' symbols into tensor terms; symbols are renamed back to t_k.
std::vector<TensorTerm> tensor_terms(const SymbolPoly& p);
/// Coassociativity and both counit laws for t_k, k <= max_degree.
std::vector<Check> check_hopf_laws(int max_degree);

/// 1 + sum_{k<=degree} sigma_k e^k.
Series generic_twist(int degree);
/// Expands s(-e) (-U) + s(e) U and returns the coefficient conditions, each normalized to
/// leading coefficient 1 (a polynomial p stands for p = 0), in increasing e-degree.
std::vector<SymbolPoly> thom_twist_constraint(const Series& twist);

/// sum_{k=1}^{degree} CP_{k-1} e^k / k.  cp_values must have exactly `degree` entries.
Series hbar_series(const std::vector<SymbolPoly>& cp_values, int degree);

struct DescentGenerator {
    std::string name;
    int weight = 0;
    std::pair<int, int> bidegree;
};

/// b (weight 1, bidegree (0,-2)) and e_{2k+1} (weight -(2k+1), bidegree (1,0)) for 1 <= k <= k_max.
std::vector<DescentGenerator> descent_generators(int k_max);

struct InvariantMonomial {
    /// Exponent per generator, same order as the input list.
    std::vector<int> exponents;
    std::string text;
    std::pair<int, int> bidegree;
};

/// Weight-zero monomials that are linear in exactly one generator with first bidegree 1 and
/// otherwise involve the remaining generators to exponent at most max_exponent.
std::vector<InvariantMonomial> gm_invariant_bidegrees(const std::vector<DescentGenerator>& generators,
                                                      int max_exponent);

}  // namespace genuskit::fgl

#endif  // GENUSKIT_FGL_HPP
