#ifndef GENUSKIT_FREELIE_HPP
#define GENUSKIT_FREELIE_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genuskit/rational.hpp"

namespace genuskit::lie {

/// Letters are indices into an Alphabet; words compare lexicographically (a prefix is smaller).
using Word = std::vector<int>;

struct Alphabet {
    std::vector<std::string> names;
    std::vector<int> degrees;

    /// Letters of degree 1 with the given names.
    static Alphabet plain(std::vector<std::string> names);
    /// <prefix>_1 .. <prefix>_n with letter k+1 of degree k+1.
    static Alphabet graded(const std::string& prefix, int n);

    int size() const { return static_cast<int>(names.size()); }
    int degree(const Word& w) const;
    std::optional<int> find(const std::string& name) const;
};

bool is_lyndon(const Word& w);
/// Lyndon words of the given weighted degree, in increasing order.
std::vector<Word> lyndon_words(const Alphabet& alphabet, int degree);
/// (1/d) sum_{e | d} mu(e) q^{d/e}.
long witt_dimension(int letters, int degree);
/// (u, v) with v the longest proper Lyndon suffix of w; requires |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Element of the free associative algebra.
using NCPoly = std::map<Word, Rational>;

void add_to(NCPoly& target, const NCPoly& p, const Rational& scale = Rational(1));
NCPoly multiply(const NCPoly& a, const NCPoly& b);
NCPoly commutator(const NCPoly& a, const NCPoly& b);
/// The derivation of the free associative algebra with the given letter images, applied to p.
NCPoly derive(const NCPoly& p, const std::function<const NCPoly&(int)>& image);

/// Free Lie algebra element in Lyndon coordinates.
class LieElement {
public:
    using Terms = std::map<Word, Rational>;

    LieElement() = default;
    static LieElement basis(Word lyndon, const Rational& coeff = Rational(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word& w) const;
    void add_term(const Word& w, const Rational& coeff);

    LieElement& operator+=(const LieElement& other);
    LieElement& operator-=(const LieElement& other);
    LieElement& operator*=(const Rational& s);
    LieElement operator-() const;
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(LieElement a, const Rational& s) { return a *= s; }
    friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
    friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// Free Lie algebra on an alphabet.  Bracket and expansion results are cached per instance;
/// an instance must not be shared between threads.
class FreeLie {
public:
    explicit FreeLie(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    LieElement generator(int letter) const;
    LieElement generator(const std::string& name) const;

    /// Normal form of [b(u), b(v)] for Lyndon u, v, by the Lyndon rewriting rule with Jacobi.
    const LieElement& bracket_basis(const Word& u, const Word& v) const;
    LieElement bracket(const LieElement& a, const LieElement& b) const;
    /// Weighted degree of each term; throws if x is not homogeneous.
    int degree(const LieElement& x) const;

    /// Associative expansion of the standard bracketing b(w).
    const NCPoly& expand(const Word& lyndon) const;
    NCPoly expand(const LieElement& x) const;
    /// Triangular reduction against the expansions b(w) = w + (larger words); throws
    /// std::invalid_argument if p is not a Lie polynomial.
    LieElement from_ncpoly(NCPoly p) const;

    std::string word_string(const Word& w) const;
    /// "[A,[A,B]]"
    std::string bracketing(const Word& lyndon) const;
    /// "3*[A,[A,B]] - [B,[A,B]]"; "0" for zero.
    std::string to_string(const LieElement& x) const;

private:
    Alphabet alphabet_;
    mutable std::map<std::pair<Word, Word>, LieElement> bracket_cache_;
    mutable std::map<Word, NCPoly> expand_cache_;
};

/// Binary bracket tree over letters.
struct BracketExpr {
    int letter = -1;
    std::shared_ptr<const BracketExpr> left, right;

    static BracketExpr leaf(int letter);
    static BracketExpr node(BracketExpr l, BracketExpr r);
    bool is_leaf() const { return letter >= 0; }
};

/// Parses "[A,[B,A]]" with letter names from the alphabet.
BracketExpr parse_bracket(const std::string& text, const Alphabet& alphabet);
/// Lyndon normal form by recursive bracketing.
LieElement normal_form(const FreeLie& lie, const BracketExpr& expr);
/// Parses a linear combination such as "3*[A,[A,B]] - 1/2*[B,[A,B]] + A"; "0" is zero.
LieElement parse_lie(const FreeLie& lie, const std::string& text);
/// Direct associative expansion of the tree.
NCPoly expand_expr(const BracketExpr& expr);

/// Evaluates x under the Lie homomorphism determined by letter images, using standard
/// bracketings.  `bracket` is the target bracket; T needs +=, scalar * with Rational.
template <typename T>
T evaluate(const LieElement& x, const std::function<T(int)>& letter_image,
           const std::function<T(const T&, const T&)>& bracket, const T& zero) {
    std::map<Word, T> memo;
    std::function<const T&(const Word&)> eval = [&](const Word& w) -> const T& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        T value = zero;
        if (w.size() == 1) {
            value = letter_image(w.front());
        } else {
            auto [u, v] = standard_factorization(w);
            const T left = eval(u);
            const T right = eval(v);
            value = bracket(left, right);
        }
        return memo.emplace(w, std::move(value)).first->second;
    };
    T out = zero;
    for (const auto& [w, c] : x.terms()) out += eval(w) * c;
    return out;
}

}  // namespace genuskit::lie

#endif  // GENUSKIT_FREELIE_HPP
