#ifndef GENUSKIT_GENUS_HPP
#define GENUSKIT_GENUS_HPP

#include <string>
#include <vector>

#include "genuskit/check.hpp"
#include "genuskit/series.hpp"

namespace genuskit::genus {

/// A multiplicative genus given by its characteristic series Q(z), Q(0) = 1.
struct Genus {
    std::string name;
    Series Q;

    int order() const { return Q.order(); }
};

/// Validates Q(0) = 1.
Genus from_series(std::string name, Series Q);

Genus additive(int order = kDefaultOrder);
/// z / (1 - e^{-z})
Genus todd(int order = kDefaultOrder);
/// (x/2) / sinh(x/2), assembled as the square root of the product of the +x/2 and -x/2 factors.
Genus ahat(int order = kDefaultOrder);
/// z / tanh z
Genus l_genus(int order = kDefaultOrder);
/// exp(-gamma z + sum_{k>=2} zeta_k/k (-z)^k)
Genus gamma(int order = kDefaultOrder);
/// Witten series, normalized so that Q(0) = 1 (the x-independent factor prod (1-q^n)^{-2} removed).
/// q-coefficients are truncated above q^{q_order}.
Genus witten(int order, int q_order);
/// Dispatch by name: todd, ahat, L, gamma, witten, additive.
Genus make_genus(const std::string& name, int order = kDefaultOrder, int q_order = 4);

/// Q(c z).  With imaginary = true the scale is c*i and i^2 = -1 is reduced afterwards;
/// rescaled(g, 2*pi, true) realizes the substitution z = 2 pi i x.
Genus rescaled(const Genus& g, const SymbolPoly& c, bool imaginary = false);
/// Reduces powers of the symbol "i" using i^2 = -1.
SymbolPoly reduce_imaginary(const SymbolPoly& p);

/// f(z) = z / Q(z).
Series exponential(const Genus& g);
/// The genus logarithm, the compositional inverse of z / Q(z).
Series log_series(const Genus& g);

/// phi(CP^n) = [z^n] Q^{n+1}, n = 0..n_max.
std::vector<SymbolPoly> cp_by_extraction(const Genus& g, int n_max);
/// phi(CP^n) = (n+1) [z^{n+1}] log_series, n = 0..n_max.
std::vector<SymbolPoly> cp_by_reversion(const Genus& g, int n_max);
/// Both routes; throws std::logic_error if they disagree and std::invalid_argument if
/// n_max >= order.
std::vector<SymbolPoly> cp_values(const Genus& g, int n_max);

/// B_0 .. B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int n);
/// zeta(2k) / pi^{2k} = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!) / pi^{2k}.
Rational even_zeta_over_pi_power(int k);
/// Replaces every zeta_{2k} by its rational multiple of pi^{2k}; throws if 2k > max_index.
SymbolPoly bernoulli_rewrite(const SymbolPoly& p, int max_index = 2 * kDefaultOrder);
Series bernoulli_rewrite(const Series& s, int max_index = 2 * kDefaultOrder);

/// pi z / sin(pi z) with pi as a symbol.
Series pi_z_over_sin(int order);
/// The three Gamma duplication identities (product, Bernoulli form, split form).
std::vector<Check> duplication_check(int order);

/// log phi_W to x^{x_order}, without normalization; q truncated above q^{q_order}.
Series witten_log(int q_order, int x_order);
/// g_k = -(k!/2) [x^k] log phi_W, k = 0..x_order, as q-polynomials.
std::vector<SymbolPoly> witten_g_series(int q_order, int x_order);

}  // namespace genuskit::genus

#endif  // GENUSKIT_GENUS_HPP
