#ifndef GENUSKIT_GRT_HPP
#define GENUSKIT_GRT_HPP

#include <optional>
#include <string>
#include <vector>

#include "genuskit/freelie.hpp"
#include "genuskit/pbn.hpp"

namespace genuskit::grt {

/// How the pentagon residual in p_4 was reduced.
enum class PentagonMethod { Elimination, Semidirect };

struct Residual {
    std::string relation;
    bool zero = true;
    /// Normal form of the residual; for the pentagon, Lyndon coordinates in p_4.
    std::string text;
};

struct GrtReport {
    int degree = 0;
    PentagonMethod pentagon_method = PentagonMethod::Elimination;
    std::vector<Residual> residuals;  // antisymmetry, hexagon, hexagon-commutator, pentagon

    bool passed() const;
};

/// Affine set seed + span(nullspace) of elements of grt obtained by adding corrections from
/// the degree-n part of [fr', fr'].
struct GrtSolution {
    int degree = 0;
    lie::LieElement particular;
    std::vector<lie::LieElement> nullspace;
};

/// Computations in the free Lie algebra on A, B.  Caches live in the instance.
class GrtContext {
public:
    /// `cap` bounds the free Lie dimension of p_4 for which the pentagon is reduced by
    /// elimination; above it the semidirect form is used.
    explicit GrtContext(std::size_t cap = braid::kDefaultCap);

    const lie::FreeLie& free() const { return free_; }
    lie::LieElement A() const { return free_.generator(0); }
    lie::LieElement B() const { return free_.generator(1); }
    /// Parses "3*[A,[A,B]] - [B,[A,B]]".
    lie::LieElement parse(const std::string& text) const;

    /// sum_{m=1}^{n-1} C(n,m) (ad A)^{m-1} (ad B)^{n-m-1} [A,B], n odd >= 3.
    lie::LieElement ihara_psi(int n) const;
    /// psi(a, b) inside the free Lie algebra on A, B.
    lie::LieElement substitute(const lie::LieElement& psi, const lie::LieElement& a, const lie::LieElement& b) const;

    GrtReport check(const lie::LieElement& psi) const;
    /// Empty when no correction makes seed + c satisfy all four relations.
    std::optional<GrtSolution> solve(int n, const lie::LieElement& seed) const;
    /// [p1, p2] + D_{p2}(p1) - D_{p1}(p2) with D_p(A) = [p, A], D_p(B) = 0.
    lie::LieElement drinfeld_bracket(const lie::LieElement& p1, const lie::LieElement& p2) const;
    /// The derivation D_p applied to x.
    lie::LieElement derivation(const lie::LieElement& p, const lie::LieElement& x) const;

private:
    lie::FreeLie free_;
    std::size_t cap_;
    braid::PureBraid p4_;
    braid::SemidirectPBn semidirect_;
};

}  // namespace genuskit::grt

#endif  // GENUSKIT_GRT_HPP
