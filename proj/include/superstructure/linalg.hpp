#pragma once

// Exact dense linear algebra over a field context F: reduced row echelon
// spans, kernels, and coordinate extraction.  Pivoting is deterministic
// (leftmost column, canonical insertion), so every span has one canonical
// matrix and spans are equal iff their matrices are identical.

#include <optional>
#include <vector>

#include "superstructure/field.hpp"

namespace superstructure {

template <class K>
using Vec = std::vector<K>;
template <class K>
using Mat = std::vector<Vec<K>>;

template <class K>
bool vec_is_zero(const Vec<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// Row-reduced echelon span with unit pivots; rows sorted by pivot column.
template <class K>
class Echelon {
public:
    Echelon() = default;
    explicit Echelon(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    const Mat<K>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Reduces v against the span in place.
    void reduce(Vec<K>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            K f = c;  // pivot entries are 1
            for (int j = pivots_[r]; j < cols_; ++j) {
                if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
            }
        }
    }

    bool contains(Vec<K> v) const {
        reduce(v);
        return vec_is_zero(v);
    }

    /// Inserts v if independent; keeps the reduced form.  Returns whether the
    /// rank grew.
    bool insert(Vec<K> v) {
        reduce(v);
        int p = -1;
        for (int j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) { p = j; break; }
        if (p < 0) return false;
        K inv = v[p].inverse();
        for (int j = p; j < cols_; ++j)
            if (!v[j].is_zero()) v[j] = inv * v[j];
        // clear the new pivot column from existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = rows_[r][p];
            if (c.is_zero()) continue;
            K f = c;
            for (int j = p; j < cols_; ++j)
                if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
        }
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + at, std::move(v));
        pivots_.insert(pivots_.begin() + at, p);
        return true;
    }

    bool is_subspace_of(const Echelon& o) const {
        for (const auto& r : rows_)
            if (!o.contains(r)) return false;
        return true;
    }

    friend bool operator==(const Echelon& a, const Echelon& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

    /// Columns without a pivot, in increasing order: canonical coordinates of
    /// the quotient space.
    std::vector<int> free_columns() const {
        std::vector<int> out;
        std::size_t r = 0;
        for (int j = 0; j < cols_; ++j) {
            if (r < pivots_.size() && pivots_[r] == j) { ++r; continue; }
            out.push_back(j);
        }
        return out;
    }

private:
    int cols_ = 0;
    Mat<K> rows_;
    std::vector<int> pivots_;
};

template <class K>
Echelon<K> echelon_from_rows(int cols, const Mat<K>& rows) {
    Echelon<K> e(cols);
    for (const auto& r : rows) e.insert(r);
    return e;
}

/// Span that remembers how its reduced rows combine the original generators;
/// used to express vectors in a prescribed basis.
template <class K>
class SpanSolver {
public:
    SpanSolver(int cols, const Mat<K>& gens, const K& one) : cols_(cols), n_(static_cast<int>(gens.size())) {
        for (int i = 0; i < n_; ++i) {
            Vec<K> aug(cols_ + n_);
            for (int j = 0; j < cols_; ++j) aug[j] = gens[i][j];
            aug[cols_ + i] = one;
            insert_aug(std::move(aug));
        }
    }

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Coordinates of v over the original generators, if v lies in the span.
    std::optional<Vec<K>> coords(const Vec<K>& v) const {
        Vec<K> aug(cols_ + n_);
        for (int j = 0; j < cols_; ++j) aug[j] = v[j];
        reduce_aug(aug);
        for (int j = 0; j < cols_; ++j)
            if (!aug[j].is_zero()) return std::nullopt;
        Vec<K> c(n_);
        for (int i = 0; i < n_; ++i) c[i] = -aug[cols_ + i];
        return c;
    }

private:
    void reduce_aug(Vec<K>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            K f = c;
            for (int j = 0; j < cols_ + n_; ++j)
                if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
        }
    }
    void insert_aug(Vec<K> v) {
        reduce_aug(v);
        int p = -1;
        for (int j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) { p = j; break; }
        if (p < 0) return;  // dependent generator
        K inv = v[p].inverse();
        for (int j = 0; j < cols_ + n_; ++j)
            if (!v[j].is_zero()) v[j] = inv * v[j];
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        // keep rows ordered by pivot
        for (std::size_t i = rows_.size(); i-- > 1;) {
            if (pivots_[i - 1] > pivots_[i]) {
                std::swap(pivots_[i - 1], pivots_[i]);
                std::swap(rows_[i - 1], rows_[i]);
            }
        }
    }

    int cols_;
    int n_;
    Mat<K> rows_;
    std::vector<int> pivots_;
};

/// Canonical basis of {x : x A = 0} for the row-listed linear map A
/// (rows = domain basis images).  Equivalently the left kernel.
template <class F>
Mat<typename F::Elem> left_kernel(const Mat<typename F::Elem>& a, int cols, const F& field) {
    using K = typename F::Elem;
    int n = static_cast<int>(a.size());
    // reduce the transposed system: solve sum_i x_i a[i][j] = 0
    // via RREF of the n x cols matrix with identity augmentation.
    Mat<K> rows(n);
    for (int i = 0; i < n; ++i) {
        rows[i].assign(cols + n, K{});
        for (int j = 0; j < cols; ++j) rows[i][j] = a[i][j];
        rows[i][cols + i] = field(1);
    }
    // forward eliminate on the first `cols` columns only
    std::vector<int> pivots;
    int rr = 0;
    for (int j = 0; j < cols && rr < n; ++j) {
        int sel = -1;
        for (int i = rr; i < n; ++i)
            if (!rows[i][j].is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(rows[sel], rows[rr]);
        K inv = rows[rr][j].inverse();
        for (int t = j; t < cols + n; ++t)
            if (!rows[rr][t].is_zero()) rows[rr][t] = inv * rows[rr][t];
        for (int i = 0; i < n; ++i) {
            if (i == rr) continue;
            const K& c = rows[i][j];
            if (c.is_zero()) continue;
            K f = c;
            for (int t = j; t < cols + n; ++t)
                if (!rows[rr][t].is_zero()) rows[i][t] -= f * rows[rr][t];
        }
        pivots.push_back(j);
        ++rr;
    }
    Mat<K> ker;
    for (int i = rr; i < n; ++i) {
        Vec<K> x(n);
        for (int t = 0; t < n; ++t) x[t] = rows[i][cols + t];
        ker.push_back(std::move(x));
    }
    Echelon<typename F::Elem> e(n);
    for (auto& r : ker) e.insert(r);
    return e.rows();
}

}  // namespace superstructure
