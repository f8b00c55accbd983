#ifndef GENUSKIT_MULTI_SERIES_HPP
#define GENUSKIT_MULTI_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "genuskit/series.hpp"

namespace genuskit {

/// Multivariate power series truncated by total degree in its variables.
/// The bivariate case carries formal group laws F(X, Y).
class MultiSeries {
public:
    using Exponents = std::vector<int>;

    MultiSeries() = default;
    MultiSeries(std::vector<std::string> variables, int order);

    static MultiSeries variable(const std::vector<std::string>& variables, std::size_t index, int order);
    /// s(v_index) viewed as a series in all the given variables.
    static MultiSeries from_univariate(const Series& s, const std::vector<std::string>& variables,
                                       std::size_t index);

    const std::vector<std::string>& variables() const { return variables_; }
    int order() const { return order_; }
    const std::map<Exponents, SymbolPoly>& terms() const { return terms_; }
    SymbolPoly coefficient(const Exponents& e) const;
    bool is_zero() const { return terms_.empty(); }
    SymbolPoly constant_term() const;

    void add_term(const Exponents& e, const SymbolPoly& c);
    MultiSeries truncated(int order) const;

    MultiSeries& operator+=(const MultiSeries& other);
    MultiSeries& operator-=(const MultiSeries& other);
    MultiSeries operator-() const;
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator*(MultiSeries a, const SymbolPoly& s);
    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        return a.variables_ == b.variables_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    /// Sets one variable to zero (drops every term that contains it).
    MultiSeries with_zero(std::size_t index) const;
    /// Reorders variables: result variable k carries what was variable perm[k].
    MultiSeries permuted(const std::vector<std::size_t>& perm) const;

    std::string to_string() const;

private:
    void check_compatible(const MultiSeries& other) const;

    std::vector<std::string> variables_;
    int order_ = 0;
    std::map<Exponents, SymbolPoly> terms_;
};

/// outer(inner) for univariate outer; inner must have zero constant term.
MultiSeries compose(const Series& outer, const MultiSeries& inner);
/// F(G_1, ..., G_k): substitutes series (all over a common variable list, zero constant terms)
/// for the variables of F.
MultiSeries substitute(const MultiSeries& f, const std::vector<MultiSeries>& images);

}  // namespace genuskit

#endif  // GENUSKIT_MULTI_SERIES_HPP
