#include "genuskit/linalg.hpp"

#include <utility>

namespace genuskit::linalg {

namespace {

using IntRow = std::vector<mpz_class>;

struct Echelon {
    std::vector<IntRow> rows;          // integer rows after elimination
    std::vector<std::size_t> pivots;   // pivot column of row r, for r < rank
};

// Clears denominators row by row, then runs fraction-free Bareiss elimination.
// Pivot choice: first row (in current order) with a nonzero entry in the column.
Echelon bareiss(const Matrix& a, std::size_t cols) {
    Echelon e;
    e.rows.resize(a.rows(), IntRow(cols));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(r, c).denominator().get_mpz_t());
        for (std::size_t c = 0; c < cols; ++c)
            e.rows[r][c] = a(r, c).numerator() * (lcm / a(r, c).denominator());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < e.rows.size(); ++c) {
        std::size_t p = r;
        while (p < e.rows.size() && e.rows[p][c] == 0) ++p;
        if (p == e.rows.size()) continue;
        std::swap(e.rows[p], e.rows[r]);
        const mpz_class pivot = e.rows[r][c];
        for (std::size_t i = r + 1; i < e.rows.size(); ++i) {
            const mpz_class lead = e.rows[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = pivot * e.rows[i][j] - lead * e.rows[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                e.rows[i][j] = v;
            }
            e.rows[i][c] = 0;
        }
        prev = pivot;
        e.pivots.push_back(c);
        ++r;
    }
    e.rows.resize(r);
    return e;
}

// Back substitution over the rationals on the integer echelon form.
// Column `cols` of `rows` (if present) is the right-hand side.
std::vector<Rational> back_substitute(const Echelon& e, std::size_t unknowns, bool augmented,
                                      std::size_t free_col) {
    std::vector<Rational> x(unknowns, Rational(0));
    if (free_col < unknowns) x[free_col] = Rational(1);
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
        const std::size_t pc = e.pivots[r];
        Rational acc = augmented ? Rational(e.rows[r][unknowns]) : Rational(0);
        for (std::size_t j = pc + 1; j < unknowns; ++j) {
            if (e.rows[r][j] == 0 || x[j].is_zero()) continue;
            acc -= Rational(e.rows[r][j]) * x[j];
        }
        x[pc] = acc / Rational(e.rows[r][pc]);
    }
    return x;
}

}  // namespace

std::size_t rank(const Matrix& a) { return bareiss(a, a.cols()).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const Matrix& a) {
    Echelon e = bareiss(a, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) basis.push_back(back_substitute(e, a.cols(), false, c));
    return basis;
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    Echelon e = bareiss(aug, a.cols() + 1);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    AffineSolution sol;
    sol.particular = back_substitute(e, a.cols(), true, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    Echelon homogeneous = e;
    for (auto& row : homogeneous.rows) row[a.cols()] = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) sol.nullspace.push_back(back_substitute(homogeneous, a.cols(), true, c));
    return sol;
}

}  // namespace genuskit::linalg
