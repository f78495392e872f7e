#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "howe/scalar.hpp"

namespace howe {

/// Dense row-major matrix over Q(i, sqrt 2).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}.
std::vector<std::vector<Scalar>> nullspace(Matrix m);

/// Some x with a x = b, if one exists.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

/// Matrix whose rows are the given vectors (all of equal length).
Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

/// Incrementally maintained span of sparse vectors.
///
/// Each stored row is fully reduced against the others, so reduction of a
/// candidate vector is a single pass over the pivots it touches.
template <class Key>
class SpanBasis {
public:
    using Vec = std::map<Key, Scalar>;

    /// Remainder of v modulo the current span (zero map iff v is in the span).
    Vec reduce(Vec v) const {
        // rows are fully reduced, so no row touches another row's pivot and
        // the pivot coefficients of v can be read off up front
        std::vector<std::pair<const Vec*, Scalar>> hits;
        for (const auto& [k, c] : v) {
            auto piv = rows_.find(k);
            if (piv != rows_.end()) hits.emplace_back(&piv->second, c);
        }
        for (const auto& [row, f] : hits) {
            for (const auto& [k, c] : *row) {
                auto [slot, fresh] = v.try_emplace(k);
                slot->second -= f * c;
                if (slot->second.is_zero()) v.erase(slot);
            }
        }
        return v;
    }

    bool contains(const Vec& v) const { return reduce(v).empty(); }

    /// Adds v to the span; returns false if it was already contained.
    bool insert(const Vec& v) {
        Vec r = reduce(v);
        if (r.empty()) return false;
        Key pivot = r.begin()->first;
        Scalar inv = r.begin()->second.inverse();
        for (auto& [k, c] : r) c *= inv;
        for (auto& [pk, row] : rows_) {
            auto hit = row.find(pivot);
            if (hit == row.end()) continue;
            Scalar f = hit->second;
            for (const auto& [k, c] : r) {
                auto [slot, fresh] = row.try_emplace(k);
                slot->second -= f * c;
                if (slot->second.is_zero()) row.erase(slot);
            }
        }
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    std::size_t dimension() const { return rows_.size(); }
    const std::map<Key, Vec>& rows() const { return rows_; }

    /// Coordinates of v in terms of the stored (reduced) rows, if v is in the span.
    std::optional<std::map<Key, Scalar>> coordinates(const Vec& v) const {
        std::map<Key, Scalar> coords;
        Vec rem = v;
        for (const auto& [pk, row] : rows_) {
            auto hit = rem.find(pk);
            if (hit == rem.end()) continue;
            coords[pk] = hit->second;
        }
        for (const auto& [pk, c] : coords) {
            for (const auto& [k, x] : rows_.at(pk)) {
                Scalar& slot = rem[k];
                slot -= c * x;
            }
        }
        for (const auto& [k, x] : rem)
            if (!x.is_zero()) return std::nullopt;
        return coords;
    }

private:
    std::map<Key, Vec> rows_;
};

/// Basis of the common kernel on C^n of the functionals spanned by `rows`
/// (keys are coordinate indices below n).
std::vector<std::vector<Scalar>> nullspace(const SpanBasis<std::size_t>& rows, std::size_t n);

/// Drops zero entries from a sparse vector.
template <class Key>
void prune(std::map<Key, Scalar>& v) {
    for (auto it = v.begin(); it != v.end();) {
        if (it->second.is_zero())
            it = v.erase(it);
        else
            ++it;
    }
}

}  // namespace howe
