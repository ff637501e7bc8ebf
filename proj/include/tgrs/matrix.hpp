/**************************************************************************
 * matrix.hpp
 *
 * Copyright 2026 the tgrs authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "field.hpp"

namespace tgrs {

using Word = std::vector<fel>;

/// Dense row-major matrix over F_q. Values are immutable in spirit; all
/// toolkit operations return fresh matrices.
class Matrix {
   public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(FieldPtr f, std::size_t k) {
        Matrix m(std::move(f), k, k);
        for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix from_rows(FieldPtr f, const std::vector<Word>& rows, std::size_t cols) {
        Matrix m(std::move(f), rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == cols, Err::LengthMismatch, "row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    fel& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    fel at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    const fel* row_ptr(std::size_t r) const { return a_.data() + r * cols_; }
    Word row(std::size_t r) const { return Word(row_ptr(r), row_ptr(r) + cols_); }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix t(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix mul(const Matrix& o) const {
        require(cols_ == o.rows_, Err::DimensionMismatch, "matrix product shape");
        const Field& F = *f_;
        Matrix r(f_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                fel v = at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = F.add(r.at(i, j), F.mul(v, o.at(k, j)));
            }
        return r;
    }

    Word mul_vec_left(const Word& x) const {  // x * M for a row vector x
        require(x.size() == rows_, Err::LengthMismatch, "vector length mismatch");
        const Field& F = *f_;
        Word r(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) r[j] = F.add(r[j], F.mul(x[i], at(i, j)));
        }
        return r;
    }

    Matrix vstack(const Matrix& o) const {
        require(cols_ == o.cols_, Err::DimensionMismatch, "vstack width mismatch");
        Matrix r(f_, rows_ + o.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

   private:
    FieldPtr f_;
    std::size_t rows_, cols_;
    std::vector<fel> a_;
};

struct RrefResult {
    Matrix mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination with first-nonzero pivoting; exact over F_q.
inline RrefResult rref(Matrix m) {
    const Field& F = *m.field();
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
        fel s = F.inv(m.at(rank, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(rank, j) = F.mul(s, m.at(rank, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank) continue;
            fel v = m.at(i, col);
            if (v == 0) continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(v, m.at(rank, j)));
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(m), rank, std::move(pivots)};
}

/// Basis (RREF rows) of {x : m x^T = 0}.
inline Matrix kernel_basis(const Matrix& m) {
    const Field& F = *m.field();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<Word> rows;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Word x(m.cols(), 0);
        x[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            x[r.pivots[i]] = F.neg(r.mat.at(i, free));
        rows.push_back(std::move(x));
    }
    Matrix k = Matrix::from_rows(m.field(), rows, m.cols());
    return rref(std::move(k)).mat;
}

/// Incremental rank of a growing set of rows, with an optional cap for early
/// abort. Rows are kept in (non-reduced) echelon form.
class RankTracker {
   public:
    RankTracker(FieldPtr f, std::size_t width) : f_(std::move(f)), width_(width) {}

    // returns true if the row increased the rank
    bool add(Word row) {
        const Field& F = *f_;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            fel v = row[pivot_[i]];
            if (v == 0) continue;
            fel s = F.mul(v, inv_lead_[i]);
            const Word& base = rows_[i];
            for (std::size_t j = pivot_[i]; j < width_; ++j)
                if (base[j] != 0) row[j] = F.sub(row[j], F.mul(s, base[j]));
        }
        std::size_t lead = 0;
        while (lead < width_ && row[lead] == 0) ++lead;
        if (lead == width_) return false;
        inv_lead_.push_back(F.inv(row[lead]));
        pivot_.push_back(lead);
        rows_.push_back(std::move(row));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

    // feeds rows until the rank exceeds `cap`; returns min(rank, cap + 1)
    template <class Gen>
    std::size_t rank_capped(Gen&& next_row, std::size_t count, std::size_t cap) {
        for (std::size_t i = 0; i < count; ++i) {
            add(next_row(i));
            if (rows_.size() > cap) return cap + 1;
        }
        return rows_.size();
    }

   private:
    FieldPtr f_;
    std::size_t width_;
    std::vector<Word> rows_;
    std::vector<std::size_t> pivot_;
    std::vector<fel> inv_lead_;
};

/// Linear subspace of F_q^n in canonical form: the basis matrix is the unique
/// RREF with no zero rows. Two subspaces are equal iff their bases are equal.
class Subspace {
   public:
    Subspace(FieldPtr f, std::size_t ambient)
        : basis_(std::move(f), 0, ambient), ambient_(ambient) {}

    static Subspace from_span(const Matrix& gens) {
        RrefResult r = rref(gens);
        Matrix b(gens.field(), r.rank, gens.cols());
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t j = 0; j < gens.cols(); ++j) b.at(i, j) = r.mat.at(i, j);
        Subspace s(gens.field(), gens.cols());
        s.basis_ = std::move(b);
        return s;
    }

    const Matrix& basis() const { return basis_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return ambient_; }
    const FieldPtr& field() const { return basis_.field(); }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const Word& x) const {
        require(x.size() == ambient_, Err::AmbientMismatch, "vector has wrong ambient dimension");
        const Field& F = *basis_.field();
        Word r = x;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t piv = 0;
            while (piv < ambient_ && basis_.at(i, piv) == 0) ++piv;
            if (piv == ambient_) continue;
            fel v = r[piv];
            if (v == 0) continue;
            for (std::size_t j = piv; j < ambient_; ++j)
                r[j] = F.sub(r[j], F.mul(v, basis_.at(i, j)));
        }
        for (fel v : r)
            if (v != 0) return false;
        return true;
    }

   private:
    Matrix basis_;
    std::size_t ambient_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require(a.ambient() == b.ambient(), Err::AmbientMismatch, "subspace sum");
    return Subspace::from_span(a.basis().vstack(b.basis()));
}

/// Zassenhaus: RREF of [A|A; B|0]; rows with zero left half carry the
/// intersection in their right half.
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    require(a.ambient() == b.ambient(), Err::AmbientMismatch, "subspace intersection");
    std::size_t n = a.ambient();
    FieldPtr f = a.field() ? a.field() : b.field();
    Matrix z(f, a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            z.at(i, j) = a.basis().at(i, j);
            z.at(i, n + j) = a.basis().at(i, j);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) z.at(a.dim() + i, j) = b.basis().at(i, j);
    RrefResult r = rref(z);
    std::vector<Word> rows;
    for (std::size_t i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (r.mat.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        Word w(n);
        for (std::size_t j = 0; j < n; ++j) w[j] = r.mat.at(i, n + j);
        rows.push_back(std::move(w));
    }
    return Subspace::from_span(Matrix::from_rows(f, rows, n));
}

inline Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f->random_element(rng);
    return m;
}

/// Rejection-sample uniform k x k matrices until invertible.
inline Matrix random_invertible(const FieldPtr& f, std::size_t k, Rng& rng,
                                std::size_t* attempts = nullptr) {
    require(k >= 1, Err::InvalidParams, "k must be >= 1");
    std::size_t tries = 0;
    for (;;) {
        ++tries;
        Matrix m = random_matrix(f, k, k, rng);
        if (rref(m).rank == k) {
            if (attempts) *attempts = tries;
            return m;
        }
    }
}

}  // namespace tgrs
