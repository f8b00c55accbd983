#ifndef GENUSKIT_PBN_HPP
#define GENUSKIT_PBN_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "genuskit/freelie.hpp"
#include "genuskit/linalg.hpp"

namespace genuskit::braid {

inline constexpr std::size_t kDefaultCap = 20000;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generators x_ij, 1 <= i < j <= n, ordered by j then i (x12, x13, x23, x14, ...).
lie::Alphabet pure_braid_alphabet(int n);
/// Letter index of x_ij (either order of i, j).
int generator_letter(int i, int j);
/// (i, j) with i < j for a letter.
std::pair<int, int> generator_pair(int letter);

/// Degree-d component of p_n: the free Lie algebra on the x_ij modulo the ideal of the
/// infinitesimal braid relations.  The basis consists of the Lyndon words that are not
/// pivots of the ideal echelon form.
struct PBnComponent {
    int n = 0;
    int degree = 0;
    std::size_t free_dimension = 0;
    std::vector<lie::Word> basis;
    linalg::SparseEchelon<lie::Word> ideal;

    std::size_t dimension() const { return basis.size(); }
};

class PureBraid {
public:
    explicit PureBraid(int n, std::size_t cap = kDefaultCap);

    int strands() const { return n_; }
    const lie::FreeLie& lie() const { return lie_; }
    lie::LieElement x(int i, int j) const;

    /// [x_ik, x_st] for disjoint pairs and [x_ik, x_is + x_ks] for ordered distinct triples.
    std::vector<lie::LieElement> relations() const;

    /// Builds all components up to d on first use.  Throws CapExceeded when the free
    /// Lie dimension in degree d exceeds the cap.
    const PBnComponent& component(int d) const;
    /// Reduces each homogeneous part modulo the relation ideal.
    lie::LieElement reduce(const lie::LieElement& x) const;
    bool is_zero(const lie::LieElement& x) const { return reduce(x).is_zero(); }

private:
    int n_;
    std::size_t cap_;
    lie::FreeLie lie_;
    mutable std::vector<PBnComponent> components_;  // index d - 1
};

/// p_n as the iterated semidirect sum of free Lie algebras F_1, ..., F_{n-1}, with F_k free on
/// x_{1,k+1}, ..., x_{k,k+1}.  Each component is stored by its associative expansion, so the
/// representation of an element is unique.
class SemidirectPBn {
public:
    using Element = std::vector<lie::NCPoly>;

    explicit SemidirectPBn(int n);

    int strands() const { return n_; }
    Element zero() const { return Element(static_cast<std::size_t>(n_ - 1)); }
    Element generator(int i, int j) const;
    Element bracket(const Element& a, const Element& b) const;
    /// Image of a free Lie element on the x_ij.
    Element image(const lie::LieElement& x) const;
    /// Image of x under the Lie homomorphism sending letter l to letter_images[l].
    Element evaluate(const lie::LieElement& x, const std::vector<Element>& letter_images) const;
    static bool is_zero(const Element& e);
    static void add_to(Element& target, const Element& e, const Rational& scale = Rational(1));
    /// Flattened coordinates (component, word) for linear algebra.
    static std::map<std::pair<int, lie::Word>, Rational> coordinates(const Element& e);

private:
    /// Action of a component-k Lie polynomial u on a component-l element v (k < l).
    lie::NCPoly act(const lie::NCPoly& u, const lie::NCPoly& v) const;

    int n_;
};

}  // namespace genuskit::braid

#endif  // GENUSKIT_PBN_HPP
