#ifndef GENUSKIT_LINALG_HPP
#define GENUSKIT_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "genuskit/rational.hpp"

namespace genuskit::linalg {

/// Dense row-major matrix of rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Solution set {particular + span(nullspace)} of A x = b.
struct AffineSolution {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> nullspace;
};

/// Rank by fraction-free (Bareiss) elimination with first-nonzero pivoting.
std::size_t rank(const Matrix& a);
/// Basis of {x : A x = 0}; one vector per free column, free entry 1.
std::vector<std::vector<Rational>> nullspace(const Matrix& a);
/// Solves A x = b exactly; nullopt when inconsistent.  Free variables are set to zero
/// in the particular solution.
std::optional<AffineSolution> solve_affine(const Matrix& a, const std::vector<Rational>& b);

/// Incrementally built echelon basis of a subspace of sparse vectors indexed by Key.
/// Each stored row has leading key (its smallest key) with coefficient 1, and no two rows
/// share a leading key.  Reducing a vector clears every leading key, which yields the
/// unique representative supported on non-leading keys.
template <typename Key>
class SparseEchelon {
public:
    using Vector = std::map<Key, Rational>;

    /// Reduces v in place modulo the stored rows.
    void reduce(Vector& v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto row = rows_.find(it->first);
            if (row == rows_.end()) {
                ++it;
                continue;
            }
            const Key pivot = it->first;
            const Rational factor = it->second;
            for (const auto& [k, c] : row->second) {
                auto [slot, inserted] = v.try_emplace(k, Rational(0));
                slot->second -= factor * c;
                if (slot->second.is_zero()) v.erase(slot);
            }
            it = v.upper_bound(pivot);
        }
    }

    Vector reduced(Vector v) const {
        reduce(v);
        return v;
    }

    /// Adds v to the span; returns true if the rank grew.
    bool insert(Vector v) {
        reduce(v);
        if (v.empty()) return false;
        const Rational lead = v.begin()->second.inverse();
        for (auto& [k, c] : v) c *= lead;
        const Key pivot = v.begin()->first;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    bool contains(const Vector& v) const { return reduced(v).empty(); }
    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }
    const std::map<Key, Vector>& rows() const { return rows_; }

private:
    std::map<Key, Vector> rows_;
};

}  // namespace genuskit::linalg

#endif  // GENUSKIT_LINALG_HPP
