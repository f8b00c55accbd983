#include "genuskit/pbn.hpp"

#include <functional>

namespace genuskit::braid {

using lie::LieElement;
using lie::NCPoly;
using lie::Word;

lie::Alphabet pure_braid_alphabet(int n) {
    if (n < 2) throw std::invalid_argument("pure braid algebra needs n >= 2");
    std::vector<std::string> names;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            names.push_back(n < 10 ? "x" + std::to_string(i) + std::to_string(j)
                                   : "x" + std::to_string(i) + "_" + std::to_string(j));
    return lie::Alphabet::plain(std::move(names));
}

int generator_letter(int i, int j) {
    if (i == j || i < 1 || j < 1) throw std::invalid_argument("x_ij needs distinct positive indices");
    if (i > j) std::swap(i, j);
    return (j - 1) * (j - 2) / 2 + (i - 1);
}

std::pair<int, int> generator_pair(int letter) {
    int j = 2;
    while ((j) * (j - 1) / 2 <= letter) ++j;
    return {letter - (j - 1) * (j - 2) / 2 + 1, j};
}

PureBraid::PureBraid(int n, std::size_t cap) : n_(n), cap_(cap), lie_(pure_braid_alphabet(n)) {}

LieElement PureBraid::x(int i, int j) const {
    if (std::max(i, j) > n_) throw std::out_of_range("generator index exceeds the strand count");
    return lie_.generator(generator_letter(i, j));
}

std::vector<LieElement> PureBraid::relations() const {
    std::vector<LieElement> out;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= n_; ++j)
        for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
    for (std::size_t a = 0; a < pairs.size(); ++a) {
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            auto [i, k] = pairs[a];
            auto [s, t] = pairs[b];
            if (i == s || i == t || k == s || k == t) continue;
            out.push_back(lie_.bracket(x(i, k), x(s, t)));
        }
    }
    for (int i = 1; i <= n_; ++i)
        for (int k = 1; k <= n_; ++k)
            for (int s = 1; s <= n_; ++s) {
                if (i == k || i == s || k == s) continue;
                out.push_back(lie_.bracket(x(i, k), x(i, s) + x(k, s)));
            }
    return out;
}

const PBnComponent& PureBraid::component(int d) const {
    if (d < 1) throw std::invalid_argument("component degree must be positive");
    const int letters = lie_.alphabet().size();
    while (static_cast<int>(components_.size()) < d) {
        const int deg = static_cast<int>(components_.size()) + 1;
        const long free_dim = lie::witt_dimension(letters, deg);
        if (free_dim > static_cast<long>(cap_))
            throw CapExceeded("p_" + std::to_string(n_) + " degree " + std::to_string(deg) + " needs " +
                              std::to_string(free_dim) + " free Lie coordinates (cap " + std::to_string(cap_) + ")");
        PBnComponent c;
        c.n = n_;
        c.degree = deg;
        c.free_dimension = static_cast<std::size_t>(free_dim);
        if (deg == 2) {
            for (const auto& r : relations()) c.ideal.insert(r.terms());
        } else if (deg > 2) {
            const auto& previous = components_.back().ideal.rows();
            for (const auto& [pivot, row] : previous) {
                LieElement r;
                for (const auto& [w, coeff] : row) r.add_term(w, coeff);
                for (int g = 0; g < letters; ++g) c.ideal.insert(lie_.bracket(lie_.generator(g), r).terms());
            }
        }
        for (const auto& w : lie::lyndon_words(lie_.alphabet(), deg))
            if (!c.ideal.is_pivot(w)) c.basis.push_back(w);
        components_.push_back(std::move(c));
    }
    return components_[static_cast<std::size_t>(d - 1)];
}

LieElement PureBraid::reduce(const LieElement& x) const {
    std::map<int, linalg::SparseEchelon<Word>::Vector> parts;
    for (const auto& [w, c] : x.terms()) parts[static_cast<int>(w.size())].emplace(w, c);
    LieElement out;
    for (auto& [d, v] : parts) {
        component(d).ideal.reduce(v);
        for (const auto& [w, c] : v) out.add_term(w, c);
    }
    return out;
}

SemidirectPBn::SemidirectPBn(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("pure braid algebra needs n >= 2");
}

SemidirectPBn::Element SemidirectPBn::generator(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_ || i == j) throw std::out_of_range("generator outside p_n");
    Element e = zero();
    e[static_cast<std::size_t>(j - 2)].emplace(Word{generator_letter(i, j)}, Rational(1));
    return e;
}

bool SemidirectPBn::is_zero(const Element& e) {
    for (const auto& p : e)
        if (!p.empty()) return false;
    return true;
}

void SemidirectPBn::add_to(Element& target, const Element& e, const Rational& scale) {
    for (std::size_t k = 0; k < e.size(); ++k) lie::add_to(target[k], e[k], scale);
}

std::map<std::pair<int, Word>, Rational> SemidirectPBn::coordinates(const Element& e) {
    std::map<std::pair<int, Word>, Rational> out;
    for (std::size_t k = 0; k < e.size(); ++k)
        for (const auto& [w, c] : e[k]) out.emplace(std::make_pair(static_cast<int>(k), w), c);
    return out;
}

namespace {

// [x_ij, x_sm] for j < m, as a Lie polynomial in the x_{*m}.
NCPoly letter_action(int a, int y) {
    auto [i, j] = generator_pair(a);
    auto [s, m] = generator_pair(y);
    int other;
    if (s == i) other = j;
    else if (s == j) other = i;
    else return {};
    // [x_sm, x_{other,m}]
    const int p = y, q = generator_letter(other, m);
    NCPoly out;
    lie::add_to(out, NCPoly{{Word{p, q}, Rational(1)}});
    lie::add_to(out, NCPoly{{Word{q, p}, Rational(-1)}});
    return out;
}

}  // namespace

NCPoly SemidirectPBn::act(const NCPoly& u, const NCPoly& v) const {
    std::map<std::pair<int, int>, NCPoly> letter_images;  // (a, y) -> [x_a, x_y]
    auto single = [&letter_images](int a) {
        return [&letter_images, a](int y) -> const NCPoly& {
            auto key = std::make_pair(a, y);
            auto it = letter_images.find(key);
            if (it == letter_images.end()) it = letter_images.emplace(key, letter_action(a, y)).first;
            return it->second;
        };
    };
    // D_u on each letter of v: sum_w c_w D_{w_1}(D_{w_2}(...D_{w_r}(y))), memoized on suffixes.
    std::map<int, NCPoly> du;
    for (const auto& [vw, vc] : v)
        for (int y : vw) du.try_emplace(y);
    for (auto& [y, result] : du) {
        std::map<Word, NCPoly> memo;
        std::function<const NCPoly&(const Word&, std::size_t)> word_on_y = [&](const Word& w, std::size_t start) -> const NCPoly& {
            Word suffix(w.begin() + static_cast<long>(start), w.end());
            auto it = memo.find(suffix);
            if (it != memo.end()) return it->second;
            NCPoly value;
            if (start == w.size()) {
                value.emplace(Word{y}, Rational(1));
            } else {
                const NCPoly inner = word_on_y(w, start + 1);
                value = lie::derive(inner, single(w[start]));
            }
            return memo.emplace(std::move(suffix), std::move(value)).first->second;
        };
        for (const auto& [uw, uc] : u) lie::add_to(result, word_on_y(uw, 0), uc);
    }
    const NCPoly empty;
    return lie::derive(v, [&du, &empty](int y) -> const NCPoly& {
        auto it = du.find(y);
        return it == du.end() ? empty : it->second;
    });
}

SemidirectPBn::Element SemidirectPBn::bracket(const Element& a, const Element& b) const {
    Element out = zero();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].empty()) continue;
        for (std::size_t l = 0; l < b.size(); ++l) {
            if (b[l].empty()) continue;
            if (k == l) lie::add_to(out[k], lie::commutator(a[k], b[l]));
            else if (k < l) lie::add_to(out[l], act(a[k], b[l]));
            else lie::add_to(out[k], act(b[l], a[k]), Rational(-1));
        }
    }
    return out;
}

namespace {

struct Acc {
    SemidirectPBn::Element e;
    Acc& operator+=(const Acc& other) {
        if (e.empty()) e.resize(other.e.size());
        SemidirectPBn::add_to(e, other.e);
        return *this;
    }
    Acc operator*(const Rational& c) const {
        Acc out{SemidirectPBn::Element(e.size())};
        SemidirectPBn::add_to(out.e, e, c);
        return out;
    }
};

}  // namespace

SemidirectPBn::Element SemidirectPBn::evaluate(const LieElement& x, const std::vector<Element>& letter_images) const {
    std::function<Acc(int)> letter = [&letter_images](int l) { return Acc{letter_images.at(static_cast<std::size_t>(l))}; };
    std::function<Acc(const Acc&, const Acc&)> br = [this](const Acc& a, const Acc& b) { return Acc{bracket(a.e, b.e)}; };
    return lie::evaluate<Acc>(x, letter, br, Acc{zero()}).e;
}

SemidirectPBn::Element SemidirectPBn::image(const LieElement& x) const {
    std::vector<Element> letters;
    for (int l = 0; l < n_ * (n_ - 1) / 2; ++l) {
        auto [i, j] = generator_pair(l);
        letters.push_back(generator(i, j));
    }
    return evaluate(x, letters);
}

}  // namespace genuskit::braid
