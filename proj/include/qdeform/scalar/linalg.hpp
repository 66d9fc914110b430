#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qdeform/scalar/rational.hpp"

namespace qd {

// Sorted (index, value) pairs with no stored zeros.
template <class T>
using SparseVec = std::vector<std::pair<std::size_t, T>>;

template <class T>
SparseVec<T> to_sparse(const std::vector<T>& dense) {
    SparseVec<T> out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!is_zero(dense[i])) out.emplace_back(i, dense[i]);
    return out;
}

template <class T>
std::vector<T> to_dense(const SparseVec<T>& v, std::size_t n) {
    std::vector<T> out(n, T(0));
    for (const auto& [i, x] : v) out.at(i) = x;
    return out;
}

// y + a*x
template <class T>
SparseVec<T> axpy(const SparseVec<T>& y, const T& a, const SparseVec<T>& x) {
    SparseVec<T> out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin(), ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
            out.push_back(*iy++);
        } else if (iy == y.end() || ix->first < iy->first) {
            T v = a * ix->second;
            if (!is_zero(v)) out.emplace_back(ix->first, std::move(v));
            ++ix;
        } else {
            T v = iy->second + a * ix->second;
            if (!is_zero(v)) out.emplace_back(iy->first, std::move(v));
            ++iy;
            ++ix;
        }
    }
    return out;
}

template <class T>
SparseVec<T> scaled(const SparseVec<T>& x, const T& a) {
    SparseVec<T> out;
    if (is_zero(a)) return out;
    out.reserve(x.size());
    for (const auto& [i, v] : x) out.emplace_back(i, a * v);
    return out;
}

template <class T>
T sparse_at(const SparseVec<T>& v, std::size_t i) {
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& p, std::size_t k) { return p.first < k; });
    return (it != v.end() && it->first == i) ? it->second : T(0);
}

// Incremental row echelon form over an exact field.  Rows are linear
// equations on `cols` unknowns; an optional right-hand side lives in column
// `cols` (the augmented column).
template <class T>
class Echelon {
  public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }
    bool inconsistent() const { return pivots_.count(cols_) > 0; }

    // Returns true when the row was independent of the previous ones.
    bool add(SparseVec<T> row) {
        reduced_ = false;
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) break;
            T lead = row.front().second;
            row = axpy(row, T(-lead), it->second);
        }
        if (row.empty()) return false;
        T inv = T(1) / row.front().second;
        for (auto& e : row) e.second = e.second * inv;
        pivots_.emplace(row.front().first, std::move(row));
        return true;
    }

    bool add(const SparseVec<T>& row, const T& rhs) {
        SparseVec<T> r = row;
        if (!is_zero(rhs)) r.emplace_back(cols_, rhs);
        return add(std::move(r));
    }

    // Basis of {x : every added row annihilates x} (augmented column ignored).
    std::vector<SparseVec<T>> kernel() {
        reduce();
        std::vector<SparseVec<T>> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (pivots_.count(f)) continue;
            SparseVec<T> v;
            for (const auto& [p, row] : pivots_) {
                if (p >= cols_) continue;
                T c = sparse_at(row, f);
                if (!is_zero(c)) v.emplace_back(p, T(-c));
            }
            v.emplace_back(f, T(1));
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // The solution with all free unknowns set to zero, or nothing if inconsistent.
    std::optional<std::vector<T>> particular_solution() {
        if (inconsistent()) return std::nullopt;
        reduce();
        std::vector<T> x(cols_, T(0));
        for (const auto& [p, row] : pivots_) x[p] = sparse_at(row, cols_);
        return x;
    }

    std::vector<std::size_t> pivot_columns() const {
        std::vector<std::size_t> out;
        for (const auto& [p, row] : pivots_)
            if (p < cols_) out.push_back(p);
        return out;
    }

  private:
    void reduce() {
        if (reduced_) return;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            SparseVec<T>& row = it->second;
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t k = 1; k < row.size(); ++k) {
                    std::size_t c = row[k].first;
                    auto jt = pivots_.find(c);
                    if (jt == pivots_.end() || c == it->first) continue;
                    T coef = row[k].second;
                    row = axpy(row, T(-coef), jt->second);
                    changed = true;
                    break;
                }
            }
        }
        reduced_ = true;
    }

    std::size_t cols_;
    std::map<std::size_t, SparseVec<T>> pivots_;
    bool reduced_ = false;
};

template <class T>
std::size_t rank_of(const std::vector<SparseVec<T>>& rows, std::size_t cols) {
    Echelon<T> e(cols);
    for (const auto& r : rows) e.add(r);
    return e.rank();
}

template <class T>
std::vector<SparseVec<T>> kernel_of(const std::vector<SparseVec<T>>& rows, std::size_t cols) {
    Echelon<T> e(cols);
    for (const auto& r : rows) e.add(r);
    return e.kernel();
}

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

// Exact LDL* of a Hermitian matrix; true iff every pivot is positive.
template <class T>
bool is_positive_definite(DenseMatrix<T> g) {
    const std::size_t n = g.size();
    for (std::size_t k = 0; k < n; ++k) {
        const T d = g[k][k];
        if (!is_positive(d)) return false;
        const T inv = T(1) / d;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(g[i][k])) continue;
            const T f = g[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) g[i][j] = g[i][j] - f * g[k][j];
        }
    }
    return true;
}

// Unique solution of a square exact system, or nothing when singular.
template <class T>
std::optional<std::vector<T>> solve_square(const DenseMatrix<T>& a, const std::vector<T>& b) {
    const std::size_t n = a.size();
    Echelon<T> e(n);
    for (std::size_t i = 0; i < n; ++i) {
        SparseVec<T> row = to_sparse(a[i]);
        e.add(row, b[i]);
    }
    if (e.inconsistent() || e.rank() != n) return std::nullopt;
    return e.particular_solution();
}

}  // namespace qd
