#ifndef GENUSKIT_QSYM_HPP
#define GENUSKIT_QSYM_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "genuskit/freelie.hpp"
#include "genuskit/rational.hpp"
#include "genuskit/symm.hpp"

namespace genuskit::qsym {

using Composition = std::vector<int>;

/// "2,1"; parts must be positive.
Composition parse_composition(const std::string& text);
std::string composition_string(const Composition& c);
int weight(const Composition& c);
/// First part > 1.
bool is_admissible(const Composition& c);

/// Element of QSymm in the monomial basis M_I = sum_{n_1 > ... > n_k} x_{n_1}^{i_1} ... x_{n_k}^{i_k}.
class QSymmElement {
public:
    using Terms = std::map<Composition, Rational>;

    QSymmElement() = default;
    static QSymmElement monomial(Composition c, const Rational& coeff = Rational(1));
    static QSymmElement one() { return monomial({}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Composition& c) const;
    void add_term(const Composition& c, const Rational& coeff);

    QSymmElement& operator+=(const QSymmElement& other);
    QSymmElement& operator-=(const QSymmElement& other);
    QSymmElement& operator*=(const Rational& s);
    friend QSymmElement operator+(QSymmElement a, const QSymmElement& b) { return a += b; }
    friend QSymmElement operator-(QSymmElement a, const QSymmElement& b) { return a -= b; }
    friend QSymmElement operator*(QSymmElement a, const Rational& s) { return a *= s; }
    /// Stuffle product.
    friend QSymmElement operator*(const QSymmElement& a, const QSymmElement& b);
    friend bool operator==(const QSymmElement& a, const QSymmElement& b) { return a.terms_ == b.terms_; }

    /// "M[2,3] + M[3,2] + M[5]"; "0" for zero, "M[]" for the unit.
    std::string to_string() const;

private:
    Terms terms_;
};

/// Quasi-shuffle of two compositions: interleavings plus merges of adjacent parts.
QSymmElement stuffle(const Composition& a, const Composition& b);

/// Ring map Symm -> QSymm with p_k -> M_(k).
QSymmElement symm_to_qsymm(const symm::SymmElement& x, int max_weight = symm::kDefaultMaxWeight);

/// Exact value at x_k = 1/k for k <= m and x_k = 0 beyond.
Rational finite_truncation(const QSymmElement& a, int m);

struct DivergentSeries : std::domain_error {
    using std::domain_error::domain_error;
};

struct MzvValue {
    long double value = 0;
    long double error_bound = 0;
    long cutoff = 0;
};

inline constexpr long kInitialCutoff = 100000;
inline constexpr long kMaxCutoff = 10000000;

/// zeta(I) by nested summation to n_1 <= cutoff plus an integral tail.  Throws DivergentSeries
/// for an inadmissible I.
MzvValue mzv_at_cutoff(const Composition& I, long cutoff);
/// Raises the cutoff by factors of 10 from kInitialCutoff until error_bound <= tol; throws
/// std::runtime_error if kMaxCutoff is not enough.
MzvValue mzv_eval(const Composition& I, double tol);

/// sum_k c_k z_k with z_k = z^{k+1} d/dz.
class WittField {
public:
    using Terms = std::map<int, Rational>;

    WittField() = default;
    static WittField generator(int k, const Rational& coeff = Rational(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(int k) const;

    WittField& operator+=(const WittField& other);
    friend WittField operator+(WittField a, const WittField& b) { return a += b; }
    friend WittField operator*(WittField a, const Rational& s);
    friend bool operator==(const WittField& a, const WittField& b) { return a.terms_ == b.terms_; }

    /// "2*z_4 - z_1"
    std::string to_string() const;

private:
    Terms terms_;
};

/// [z_j, z_k] = (k - j) z_{j+k}.
WittField bracket(const WittField& a, const WittField& b);

/// Lie map from the free Lie algebra on a graded alphabet Z_1, Z_2, ... with Z_k -> z_k.
WittField lie_to_witt(const lie::LieElement& x, const lie::Alphabet& alphabet);

}  // namespace genuskit::qsym

#endif  // GENUSKIT_QSYM_HPP
