/**************************************************************************
 * code.hpp
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

#include <algorithm>

#include "matrix.hpp"
#include "rng.hpp"

namespace tgrs {

inline Word schur(const Field& F, const Word& a, const Word& b) {
    require(a.size() == b.size(), Err::LengthMismatch, "componentwise product length mismatch");
    Word r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], b[i]);
    return r;
}

inline fel dot(const Field& F, const Word& a, const Word& b) {
    require(a.size() == b.size(), Err::LengthMismatch, "dot product length mismatch");
    fel r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r = F.add(r, F.mul(a[i], b[i]));
    return r;
}

/// Linear code of length n in canonical form: the generator is the unique
/// RREF basis. Code equality throughout the toolkit is RREF-basis equality.
/// A dimension-0 code is permitted as a distinguished empty code (it shows up
/// as the dual of the full space).
class LinearCode {
   public:
    LinearCode() : gen_(FieldPtr(), 0) {}
    LinearCode(FieldPtr f, std::size_t n) : gen_(from_span_internal(Matrix(std::move(f), 0, n))) {}

    static LinearCode from_generator(const Matrix& rows) {
        LinearCode c(rows.field(), rows.cols());
        c.gen_ = from_span_internal(rows);
        return c;
    }

    const FieldPtr& field() const { return gen_.basis().field(); }
    std::size_t n() const { return gen_.ambient(); }
    std::size_t k() const { return gen_.dim(); }
    const Matrix& generator() const { return gen_.basis(); }
    const Subspace& row_space() const { return gen_; }

    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

    bool contains(const Word& w) const { return gen_.contains(w); }

    Word word_from_coeffs(const Word& coeffs) const { return generator().mul_vec_left(coeffs); }

    Word random_word(Rng& rng) const {
        Word coeffs(k());
        for (fel& c : coeffs) c = field()->random_element(rng);
        return word_from_coeffs(coeffs);
    }

   private:
    static Subspace from_span_internal(const Matrix& rows) { return Subspace::from_span(rows); }

    Subspace gen_;
};

inline LinearCode code_sum(const LinearCode& a, const LinearCode& b) {
    require(a.n() == b.n(), Err::LengthMismatch, "code sum length mismatch");
    return LinearCode::from_generator(a.generator().vstack(b.generator()));
}

inline LinearCode code_intersect(const LinearCode& a, const LinearCode& b) {
    require(a.n() == b.n(), Err::LengthMismatch, "code intersection length mismatch");
    Subspace s = subspace_intersect(a.row_space(), b.row_space());
    return LinearCode::from_generator(s.basis());
}

inline LinearCode dual(const LinearCode& c) {
    if (c.k() == 0) {
        return LinearCode::from_generator(Matrix::identity(c.field(), c.n()));
    }
    return LinearCode::from_generator(kernel_basis(c.generator()));
}

/// Words of c vanishing on I. With keep_zero_columns the prescribed zero
/// coordinates stay in place (the "lifted" shortening); otherwise they are
/// removed. Computed by RREF with the I-columns moved first, dropping rows
/// whose pivot lies in I.
inline LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& I,
                          bool keep_zero_columns = false) {
    std::size_t n = c.n();
    for (std::size_t i : I) require(i < n, Err::InvalidParams, "shortening index out of range");
    if (I.empty()) return c;
    std::vector<bool> in_I(n, false);
    for (std::size_t i : I) in_I[i] = true;
    std::vector<std::size_t> perm;  // I first, the rest after
    for (std::size_t i = 0; i < n; ++i)
        if (in_I[i]) perm.push_back(i);
    std::size_t a = perm.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!in_I[i]) perm.push_back(i);

    const Matrix& g = c.generator();
    Matrix pg(c.field(), g.rows(), n);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t j = 0; j < n; ++j) pg.at(r, j) = g.at(r, perm[j]);
    RrefResult rr = rref(std::move(pg));
    std::vector<Word> keep;
    for (std::size_t r = 0; r < rr.rank; ++r) {
        if (rr.pivots[r] < a) continue;  // pivot inside I
        if (keep_zero_columns) {
            Word w(n, 0);
            for (std::size_t j = a; j < n; ++j) w[perm[j]] = rr.mat.at(r, j);
            keep.push_back(std::move(w));
        } else {
            Word w(n - a);
            // shortened coordinates keep their original relative order
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < n; ++i)
                if (!in_I[i]) rest.push_back(i);
            std::vector<std::size_t> inv(n, 0);
            for (std::size_t j = a; j < n; ++j) inv[perm[j]] = j;
            for (std::size_t t = 0; t < rest.size(); ++t) w[t] = rr.mat.at(r, inv[rest[t]]);
            keep.push_back(std::move(w));
        }
    }
    std::size_t out_n = keep_zero_columns ? n : n - a;
    return LinearCode::from_generator(Matrix::from_rows(c.field(), keep, out_n));
}

/// Delete the columns indexed by I.
inline LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& I) {
    std::vector<bool> in_I(c.n(), false);
    for (std::size_t i : I) {
        require(i < c.n(), Err::InvalidParams, "puncture index out of range");
        in_I[i] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < c.n(); ++i)
        if (!in_I[i]) rest.push_back(i);
    Matrix g(c.field(), c.k(), rest.size());
    for (std::size_t r = 0; r < c.k(); ++r)
        for (std::size_t j = 0; j < rest.size(); ++j) g.at(r, j) = c.generator().at(r, rest[j]);
    return LinearCode::from_generator(g);
}

/// <{a * b : a in A, b in B}> spanned by pairwise basis products.
inline LinearCode schur_product(const LinearCode& a, const LinearCode& b) {
    require(a.n() == b.n(), Err::LengthMismatch, "product of codes of different lengths");
    const Field& F = *a.field();
    bool square = (&a == &b) || (a == b);
    std::vector<Word> rows;
    for (std::size_t i = 0; i < a.k(); ++i)
        for (std::size_t j = square ? i : 0; j < b.k(); ++j)
            rows.push_back(schur(F, a.generator().row(i), b.generator().row(j)));
    Matrix m = Matrix::from_rows(a.field(), rows, a.n());
    return LinearCode::from_generator(m);
}

inline LinearCode schur_square(const LinearCode& a) { return schur_product(a, a); }

/// dim of the square without materializing the basis, early-aborted at cap.
inline std::size_t schur_square_dim(const LinearCode& a, std::size_t cap) {
    const Field& F = *a.field();
    RankTracker rk(a.field(), a.n());
    for (std::size_t i = 0; i < a.k(); ++i)
        for (std::size_t j = i; j < a.k(); ++j) {
            rk.add(schur(F, a.generator().row(i), a.generator().row(j)));
            if (rk.rank() > cap) return cap + 1;
        }
    return rk.rank();
}

/// dim <{b_i * c_j}> for the spanning words b_1..b_s against the basis of c,
/// with incremental rank and early abort once the rank exceeds cap. The
/// result below the cap is identical to a batch RREF.
inline std::size_t product_span_dim(const std::vector<Word>& bs, const LinearCode& c,
                                    std::size_t cap) {
    const Field& F = *c.field();
    for (const Word& b : bs)
        require(b.size() == c.n(), Err::LengthMismatch, "spanning word length mismatch");
    RankTracker rk(c.field(), c.n());
    for (const Word& b : bs) {
        bool zero = std::all_of(b.begin(), b.end(), [](fel v) { return v == 0; });
        if (zero) continue;
        for (std::size_t j = 0; j < c.k(); ++j) {
            rk.add(schur(F, b, c.generator().row(j)));
            if (rk.rank() > cap) return cap + 1;
        }
    }
    return rk.rank();
}

/// Systematic random code [I_k | R] with uniform R; deterministic per seed.
inline LinearCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng) {
    require(k <= n, Err::InvalidParams, "k must be at most n");
    Matrix g(f, k, n);
    for (std::size_t i = 0; i < k; ++i) g.at(i, i) = 1;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = k; j < n; ++j) g.at(i, j) = f->random_element(rng);
    return LinearCode::from_generator(g);
}

}  // namespace tgrs
