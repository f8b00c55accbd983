#ifndef GENUSKIT_TESTS_SUPPORT_HPP
#define GENUSKIT_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "genuskit/series.hpp"

namespace genuskit::support {

inline Rational random_rational(std::mt19937_64& rng, int bound = 5) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng), den(rng));
}

/// Random polynomial in a couple of ungraded symbols a, b of degree <= 2.
inline SymbolPoly random_poly(std::mt19937_64& rng) {
    const Symbol a = sym::named("a", 0);
    const Symbol b = sym::named("b", 0);
    SymbolPoly p(random_rational(rng));
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(rng) == 0) p += SymbolPoly(a) * random_rational(rng);
    if (coin(rng) == 0) p += SymbolPoly(b) * SymbolPoly(a) * random_rational(rng);
    return p;
}

inline Series random_series(std::mt19937_64& rng, int order, bool symbolic = true) {
    return Series::generate("z", order, [&](int) {
        return symbolic ? random_poly(rng) : SymbolPoly(random_rational(rng));
    });
}

/// Random series z + sum_{k>=2} c_k z^k with rational coefficients.
inline Series random_diffeo_series(std::mt19937_64& rng, int order) {
    return Series::generate("z", order, [&](int k) {
        if (k == 0) return SymbolPoly();
        if (k == 1) return SymbolPoly(1);
        return SymbolPoly(random_rational(rng));
    });
}

/// Random diffeo z + sum t_k z^{k+1} with each t_k = c + d*a for a free degree-0 symbol a.
inline Series random_symbolic_diffeo_series(std::mt19937_64& rng, int order) {
    const SymbolPoly a(sym::named("a", 0));
    return Series::generate("z", order, [&](int k) {
        if (k == 0) return SymbolPoly();
        if (k == 1) return SymbolPoly(1);
        return SymbolPoly(random_rational(rng)) + a * random_rational(rng);
    });
}

}  // namespace genuskit::support

#endif  // GENUSKIT_TESTS_SUPPORT_HPP
