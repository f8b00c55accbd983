#include "genuskit/freelie.hpp"

#include <cctype>
#include <stdexcept>

namespace genuskit::lie {

Alphabet Alphabet::plain(std::vector<std::string> names) {
    Alphabet a;
    a.degrees.assign(names.size(), 1);
    a.names = std::move(names);
    return a;
}

Alphabet Alphabet::graded(const std::string& prefix, int n) {
    Alphabet a;
    for (int k = 1; k <= n; ++k) {
        a.names.push_back(prefix + "_" + std::to_string(k));
        a.degrees.push_back(k);
    }
    return a;
}

int Alphabet::degree(const Word& w) const {
    int d = 0;
    for (int letter : w) d += degrees.at(static_cast<std::size_t>(letter));
    return d;
}

std::optional<int> Alphabet::find(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + static_cast<long>(i), w.end());
        if (!(w < suffix)) return false;
    }
    return true;
}

std::vector<Word> lyndon_words(const Alphabet& alphabet, int degree) {
    if (degree < 1) throw std::invalid_argument("Lyndon basis degree must be positive");
    std::vector<Word> out;
    Word current;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            if (is_lyndon(current)) out.push_back(current);
            return;
        }
        for (int letter = 0; letter < alphabet.size(); ++letter) {
            const int d = alphabet.degrees[static_cast<std::size_t>(letter)];
            if (d > remaining) continue;
            // a Lyndon word starts with its smallest letter
            if (!current.empty() && letter < current.front()) continue;
            current.push_back(letter);
            rec(remaining - d);
            current.pop_back();
        }
    };
    rec(degree);
    return out;
}

namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

long ipow(long base, int e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

long witt_dimension(int letters, int degree) {
    long sum = 0;
    for (int e = 1; e <= degree; ++e)
        if (degree % e == 0) sum += mobius(e) * ipow(letters, degree / e);
    return sum / degree;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("standard factorization needs a word of length >= 2");
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + static_cast<long>(i), w.end());
        if (is_lyndon(suffix)) return {Word(w.begin(), w.begin() + static_cast<long>(i)), suffix};
    }
    throw std::logic_error("word has no Lyndon suffix");
}

void add_to(NCPoly& target, const NCPoly& p, const Rational& scale) {
    if (scale.is_zero()) return;
    for (const auto& [w, c] : p) {
        auto [it, inserted] = target.try_emplace(w, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

NCPoly multiply(const NCPoly& a, const NCPoly& b) {
    NCPoly out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            auto [it, inserted] = out.try_emplace(std::move(w), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) {
    NCPoly out = multiply(a, b);
    add_to(out, multiply(b, a), Rational(-1));
    return out;
}

NCPoly derive(const NCPoly& p, const std::function<const NCPoly&(int)>& image) {
    NCPoly out;
    for (const auto& [w, c] : p) {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            for (const auto& [iw, ic] : image(w[pos])) {
                Word nw(w.begin(), w.begin() + static_cast<long>(pos));
                nw.insert(nw.end(), iw.begin(), iw.end());
                nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 1, w.end());
                auto [slot, inserted] = out.try_emplace(std::move(nw), Rational(0));
                slot->second += c * ic;
                if (slot->second.is_zero()) out.erase(slot);
            }
        }
    }
    return out;
}

LieElement LieElement::basis(Word lyndon, const Rational& coeff) {
    LieElement x;
    x.add_term(lyndon, coeff);
    return x;
}

Rational LieElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add_term(const Word& w, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

LieElement LieElement::operator-() const {
    LieElement out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

LieElement FreeLie::generator(int letter) const {
    if (letter < 0 || letter >= alphabet_.size()) throw std::out_of_range("letter outside the alphabet");
    return LieElement::basis({letter});
}

LieElement FreeLie::generator(const std::string& name) const {
    auto letter = alphabet_.find(name);
    if (!letter) throw std::invalid_argument("unknown generator '" + name + "'");
    return generator(*letter);
}

const LieElement& FreeLie::bracket_basis(const Word& u, const Word& v) const {
    auto key = std::make_pair(u, v);
    auto it = bracket_cache_.find(key);
    if (it != bracket_cache_.end()) return it->second;
    LieElement result;
    if (u == v) {
        // [x, x] = 0
    } else if (v < u) {
        result = -LieElement(bracket_basis(v, u));
    } else if (u.size() == 1 || !(standard_factorization(u).second < v)) {
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        result = LieElement::basis(std::move(uv));
    } else {
        // [[u1, u2], v] = [u1, [u2, v]] - [u2, [u1, v]]
        auto [u1, u2] = standard_factorization(u);
        const LieElement u2v = bracket_basis(u2, v);
        const LieElement u1v = bracket_basis(u1, v);
        for (const auto& [w, c] : u2v.terms()) result += LieElement(bracket_basis(u1, w)) * c;
        for (const auto& [w, c] : u1v.terms()) result -= LieElement(bracket_basis(u2, w)) * c;
    }
    return bracket_cache_.emplace(std::move(key), std::move(result)).first->second;
}

LieElement FreeLie::bracket(const LieElement& a, const LieElement& b) const {
    LieElement out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) out += LieElement(bracket_basis(u, v)) * (cu * cv);
    return out;
}

int FreeLie::degree(const LieElement& x) const {
    if (x.is_zero()) throw std::invalid_argument("the zero element has no degree");
    const int d = alphabet_.degree(x.terms().begin()->first);
    for (const auto& [w, c] : x.terms())
        if (alphabet_.degree(w) != d) throw std::invalid_argument("Lie element is not homogeneous");
    return d;
}

const NCPoly& FreeLie::expand(const Word& lyndon) const {
    auto it = expand_cache_.find(lyndon);
    if (it != expand_cache_.end()) return it->second;
    NCPoly out;
    if (lyndon.size() == 1) {
        out.emplace(lyndon, Rational(1));
    } else {
        auto [u, v] = standard_factorization(lyndon);
        const NCPoly eu = expand(u);
        const NCPoly ev = expand(v);
        out = commutator(eu, ev);
    }
    return expand_cache_.emplace(lyndon, std::move(out)).first->second;
}

NCPoly FreeLie::expand(const LieElement& x) const {
    NCPoly out;
    for (const auto& [w, c] : x.terms()) add_to(out, expand(w), c);
    return out;
}

LieElement FreeLie::from_ncpoly(NCPoly p) const {
    LieElement out;
    while (!p.empty()) {
        const Word w = p.begin()->first;
        const Rational c = p.begin()->second;
        if (!is_lyndon(w)) throw std::invalid_argument("polynomial is not a Lie element (leading word " + word_string(w) + ")");
        out.add_term(w, c);
        add_to(p, expand(w), -c);
    }
    return out;
}

std::string FreeLie::word_string(const Word& w) const {
    std::string out;
    for (int letter : w) out += alphabet_.names.at(static_cast<std::size_t>(letter));
    return out;
}

std::string FreeLie::bracketing(const Word& lyndon) const {
    if (lyndon.size() == 1) return alphabet_.names.at(static_cast<std::size_t>(lyndon.front()));
    auto [u, v] = standard_factorization(lyndon);
    return "[" + bracketing(u) + "," + bracketing(v) + "]";
}

std::string FreeLie::to_string(const LieElement& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : x.terms()) {
        const Rational mag = c.abs();
        std::string body = mag.is_one() ? bracketing(w) : mag.to_string() + "*" + bracketing(w);
        if (out.empty()) out = (c.sign() < 0 ? "-" : "") + body;
        else out += (c.sign() < 0 ? " - " : " + ") + body;
    }
    return out;
}

BracketExpr BracketExpr::leaf(int letter) {
    BracketExpr e;
    e.letter = letter;
    return e;
}

BracketExpr BracketExpr::node(BracketExpr l, BracketExpr r) {
    BracketExpr e;
    e.left = std::make_shared<const BracketExpr>(std::move(l));
    e.right = std::make_shared<const BracketExpr>(std::move(r));
    return e;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    BracketExpr parse() {
        BracketExpr e = expr();
        skip();
        if (pos_ != text_.size()) fail("trailing characters");
        return e;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("bracket expression: " + what + " at position " + std::to_string(pos_));
    }
    void expect(char c) {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    BracketExpr expr() {
        skip();
        if (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            BracketExpr l = expr();
            expect(',');
            BracketExpr r = expr();
            expect(']');
            return BracketExpr::node(std::move(l), std::move(r));
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '[' && text_[pos_] != ']' && text_[pos_] != ',' &&
               !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected a generator");
        const std::string name = text_.substr(start, pos_ - start);
        auto letter = alphabet_.find(name);
        if (!letter) fail("unknown generator '" + name + "'");
        return BracketExpr::leaf(*letter);
    }

    const std::string& text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

BracketExpr parse_bracket(const std::string& text, const Alphabet& alphabet) { return Parser(text, alphabet).parse(); }

LieElement normal_form(const FreeLie& lie, const BracketExpr& expr) {
    if (expr.is_leaf()) return lie.generator(expr.letter);
    return lie.bracket(normal_form(lie, *expr.left), normal_form(lie, *expr.right));
}

LieElement parse_lie(const FreeLie& lie, const std::string& text) {
    auto blank = [](const std::string& t) { return t.find_first_not_of(" \t") == std::string::npos; };
    auto trim = [](const std::string& t) {
        const auto first = t.find_first_not_of(" \t");
        return t.substr(first, t.find_last_not_of(" \t") - first + 1);
    };
    std::vector<std::pair<int, std::string>> terms;
    int depth = 0, sign = 1;
    bool signed_term = false;
    std::string current;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            if (blank(current)) {
                if (signed_term || !terms.empty()) throw std::invalid_argument("Lie expression: missing term");
            } else {
                terms.emplace_back(sign, trim(current));
            }
            current.clear();
            sign = c == '-' ? -1 : 1;
            signed_term = true;
            continue;
        }
        current += c;
    }
    if (depth != 0) throw std::invalid_argument("Lie expression: unbalanced brackets");
    if (blank(current)) throw std::invalid_argument("Lie expression: missing term");
    terms.emplace_back(sign, trim(current));

    LieElement out;
    for (const auto& [s, body] : terms) {
        Rational coeff(s);
        std::string expr = body;
        if (const auto star = body.find('*'); star != std::string::npos && body.find('[') > star) {
            coeff *= Rational::parse(trim(body.substr(0, star)));
            expr = trim(body.substr(star + 1));
        }
        if (expr == "0") continue;
        out += normal_form(lie, parse_bracket(expr, lie.alphabet())) * coeff;
    }
    return out;
}

NCPoly expand_expr(const BracketExpr& expr) {
    if (expr.is_leaf()) return NCPoly{{Word{expr.letter}, Rational(1)}};
    return commutator(expand_expr(*expr.left), expand_expr(*expr.right));
}

}  // namespace genuskit::lie
