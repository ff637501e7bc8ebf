/**************************************************************************
 * grs.hpp
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

#include <optional>

#include "code.hpp"
#include "poly_space.hpp"

namespace tgrs {

/// Parameters of a generalized Reed-Solomon code: distinct support alpha,
/// nonzero column multipliers, dimension k < n <= q.
struct GrsParams {
    FieldPtr field;
    std::vector<fel> alpha;
    std::vector<fel> mult;
    std::size_t k = 0;

    std::size_t n() const { return alpha.size(); }

    void validate() const {
        require(field != nullptr, Err::InvalidParams, "missing field");
        require(n() <= field->q(), Err::InvalidParams, "support longer than the field");
        require(k >= 1 && k < n(), Err::InvalidParams, "need 1 <= k < n");
        check_support(alpha, mult);
    }
};

/// Secret key of a twisted GRS code: for each twist j, the monomial x^{h_j}
/// acquires a companion eta_j * x^{k-1+t_j} tied to the same message
/// coefficient. Hooks must be distinct and eta_j nonzero; eta = 0 and
/// repeated hooks are rejected at construction because they degenerate the
/// twist.
struct TgrsKey {
    GrsParams grs;
    std::vector<std::size_t> twists;  // t_j in {1..n-k}
    std::vector<std::size_t> hooks;   // h_j in {0..k-1}, distinct
    std::vector<fel> coeffs;          // eta_j nonzero

    std::size_t ell() const { return twists.size(); }
    std::size_t max_twist() const {
        std::size_t t = 0;
        for (std::size_t ti : twists) t = std::max(t, ti);
        return t;
    }

    void validate() const {
        grs.validate();
        std::size_t k = grs.k, n = grs.n();
        require(twists.size() == hooks.size() && twists.size() == coeffs.size(),
                Err::InvalidParams, "twist/hook/coefficient vectors must have equal length");
        require(ell() >= 1 && ell() <= k, Err::InvalidParams, "need 1 <= ell <= k");
        for (std::size_t j = 0; j < ell(); ++j) {
            require(twists[j] >= 1 && twists[j] <= n - k, Err::InvalidParams,
                    "twist out of range");
            require(hooks[j] < k, Err::InvalidParams, "hook out of range");
            require(coeffs[j] != 0, Err::InvalidParams, "zero twist coefficient");
            for (std::size_t i = j + 1; i < ell(); ++i)
                require(hooks[j] != hooks[i], Err::InvalidParams, "repeated hook");
        }
        require(k - 1 + max_twist() <= n - 1, Err::InvalidParams, "maximal degree exceeds n-1");
    }
};

inline LinearCode grs_code(const GrsParams& p) {
    p.validate();
    const Field& F = *p.field;
    std::vector<Word> rows;
    for (std::size_t i = 0; i < p.k; ++i)
        rows.push_back(ev(F, p.alpha, p.mult, Poly::monomial(p.field, i)));
    return LinearCode::from_generator(Matrix::from_rows(p.field, rows, p.n()));
}

/// The twisted polynomial space: {x^i : i not a hook} plus, for each twist,
/// x^{h_j} + eta_j x^{k-1+t_j}.
inline PolySpace twisted_poly_space(const TgrsKey& key) {
    key.validate();
    const FieldPtr& f = key.grs.field;
    std::size_t k = key.grs.k;
    std::vector<Poly> basis;
    std::vector<bool> hooked(k, false);
    for (std::size_t h : key.hooks) hooked[h] = true;
    for (std::size_t i = 0; i < k; ++i)
        if (!hooked[i]) basis.push_back(Poly::monomial(f, i));
    for (std::size_t j = 0; j < key.ell(); ++j) {
        Poly tw = Poly::monomial(f, key.hooks[j])
                      .add(Poly::monomial(f, k - 1 + key.twists[j], key.coeffs[j]));
        basis.push_back(std::move(tw));
    }
    return PolySpace::span(f, basis);
}

/// Canonical (unscrambled) generator: row i encodes message coefficient i.
inline Matrix tgrs_canonical_generator(const TgrsKey& key) {
    key.validate();
    const Field& F = *key.grs.field;
    std::size_t k = key.grs.k;
    std::vector<Word> rows;
    for (std::size_t i = 0; i < k; ++i) {
        Poly b = Poly::monomial(key.grs.field, i);
        for (std::size_t j = 0; j < key.ell(); ++j)
            if (key.hooks[j] == i)
                b = b.add(Poly::monomial(key.grs.field, k - 1 + key.twists[j], key.coeffs[j]));
        rows.push_back(ev(F, key.grs.alpha, key.grs.mult, b));
    }
    return Matrix::from_rows(key.grs.field, rows, key.grs.n());
}

inline LinearCode tgrs_code(const TgrsKey& key) {
    return LinearCode::from_generator(tgrs_canonical_generator(key));
}

/// Split a twisted code into its monomial subcode C0 = ev(span{x^i : i not a
/// hook}) and the twist complement C1; C0 + C1 is the whole code and C1 meets
/// the underlying GRS code trivially.
inline std::pair<LinearCode, LinearCode> qgrs_decompose(const TgrsKey& key) {
    key.validate();
    const Field& F = *key.grs.field;
    std::size_t k = key.grs.k;
    std::vector<bool> hooked(k, false);
    for (std::size_t h : key.hooks) hooked[h] = true;
    std::vector<Word> rows0, rows1;
    for (std::size_t i = 0; i < k; ++i)
        if (!hooked[i])
            rows0.push_back(ev(F, key.grs.alpha, key.grs.mult, Poly::monomial(key.grs.field, i)));
    for (std::size_t j = 0; j < key.ell(); ++j) {
        Poly tw = Poly::monomial(key.grs.field, key.hooks[j])
                      .add(Poly::monomial(key.grs.field, k - 1 + key.twists[j], key.coeffs[j]));
        rows1.push_back(ev(F, key.grs.alpha, key.grs.mult, tw));
    }
    LinearCode c0 = LinearCode::from_generator(
        Matrix::from_rows(key.grs.field, rows0, key.grs.n()));
    LinearCode c1 = LinearCode::from_generator(
        Matrix::from_rows(key.grs.field, rows1, key.grs.n()));
    return {c0, c1};
}

/// Column multipliers of the dual: u_i = (v_i * prod_{j != i}(a_i - a_j))^{-1}.
inline std::vector<fel> dual_multipliers(const Field& F, const std::vector<fel>& alpha,
                                         const std::vector<fel>& mult) {
    std::size_t n = alpha.size();
    std::vector<fel> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        fel prod = mult[i];
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod = F.mul(prod, F.sub(alpha[i], alpha[j]));
        u[i] = F.inv(prod);
    }
    return u;
}

struct BwResult {
    Poly message;                           // deg < k
    std::vector<std::size_t> error_positions;
};

/// Unique decoding up to floor((n-k)/2) errors via the Berlekamp-Welch linear
/// system: find E (deg <= e) and Q (deg <= e+k-1) with Q(a_i) = y'_i E(a_i),
/// y'_i = y_i / v_i; then f = Q / E when the division is exact.
inline std::optional<BwResult> bw_decode(const GrsParams& p, const Word& y) {
    p.validate();
    require(y.size() == p.n(), Err::LengthMismatch, "received word has wrong length");
    const Field& F = *p.field;
    std::size_t n = p.n(), k = p.k;
    std::size_t e = (n - k) / 2;

    // unknowns: Q_0..Q_{e+k-1}, E_0..E_e
    std::size_t nq = e + k, ne = e + 1;
    Matrix sys(p.field, n, nq + ne);
    for (std::size_t i = 0; i < n; ++i) {
        fel yi = F.div(y[i], p.mult[i]);
        fel pw = 1;
        for (std::size_t j = 0; j < nq; ++j) {
            sys.at(i, j) = pw;
            pw = F.mul(pw, p.alpha[i]);
        }
        pw = 1;
        for (std::size_t j = 0; j < ne; ++j) {
            sys.at(i, nq + j) = F.neg(F.mul(yi, pw));
            pw = F.mul(pw, p.alpha[i]);
        }
    }
    Matrix ker = kernel_basis(sys);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        std::vector<fel> qc(nq), ec(ne);
        for (std::size_t j = 0; j < nq; ++j) qc[j] = ker.at(r, j);
        for (std::size_t j = 0; j < ne; ++j) ec[j] = ker.at(r, nq + j);
        Poly Q(p.field, std::move(qc)), E(p.field, std::move(ec));
        if (E.is_zero()) continue;
        auto [f, rem] = Q.divrem(E);
        if (!rem.is_zero()) continue;
        if (f.deg() != Poly::kDegNegInf && f.deg() >= static_cast<int>(k)) continue;
        std::vector<std::size_t> errs;
        for (std::size_t i = 0; i < n; ++i)
            if (F.mul(p.mult[i], f.eval(p.alpha[i])) != y[i]) errs.push_back(i);
        if (errs.size() <= e) return BwResult{std::move(f), std::move(errs)};
    }
    return std::nullopt;
}

/// Brute-force decoding of a twisted code: guess the hooked message
/// coefficients g in canonical element-code order (g_1 most significant),
/// strip the guessed twist contribution, decode as GRS, and accept the first
/// guess whose full re-encoding lies within radius floor((n-k)/2) of y.
/// Costs q^ell GRS decodings in the worst case.
inline std::optional<Poly> tgrs_decode(const TgrsKey& key, const Word& y) {
    key.validate();
    require(y.size() == key.grs.n(), Err::LengthMismatch, "received word has wrong length");
    const Field& F = *key.grs.field;
    std::size_t n = key.grs.n(), k = key.grs.k, ell = key.ell();
    std::size_t radius = (n - k) / 2;
    std::uint64_t q = key.grs.field->q();
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < ell; ++j) total *= q;

    for (std::uint64_t gi = 0; gi < total; ++gi) {
        // decompose gi base q, g_1 most significant
        std::vector<fel> g(ell);
        std::uint64_t x = gi;
        for (std::size_t j = ell; j-- > 0;) {
            g[j] = static_cast<fel>(x % q);
            x /= q;
        }
        Word shifted = y;
        for (std::size_t j = 0; j < ell; ++j) {
            if (g[j] == 0) continue;
            Poly tw = Poly::monomial(key.grs.field, k - 1 + key.twists[j],
                                     F.mul(g[j], key.coeffs[j]));
            Word tv = ev(F, key.grs.alpha, key.grs.mult, tw);
            for (std::size_t i = 0; i < n; ++i) shifted[i] = F.sub(shifted[i], tv[i]);
        }
        auto dec = bw_decode(key.grs, shifted);
        if (!dec) continue;
        // re-encode the decoded coefficients through the twisted map
        Poly full = dec->message;
        for (std::size_t j = 0; j < ell; ++j) {
            fel fh = dec->message.coeff(key.hooks[j]);
            if (fh != 0)
                full = full.add(Poly::monomial(key.grs.field, k - 1 + key.twists[j],
                                               F.mul(fh, key.coeffs[j])));
        }
        Word w = ev(F, key.grs.alpha, key.grs.mult, full);
        std::size_t dist = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] != y[i]) ++dist;
        if (dist <= radius) return dec->message;
    }
    return std::nullopt;
}

/// Witnessed quasi-GRS structure: dim(c ^ GRS_k(p)) >= k - ell.
inline bool is_qgrs_witnessed(const LinearCode& c, const GrsParams& p, std::size_t ell) {
    require(c.k() == p.k, Err::DimensionMismatch, "code dimension differs from parameter k");
    LinearCode g = grs_code(p);
    LinearCode inter = code_intersect(c, g);
    return inter.k() + ell >= c.k();
}

}  // namespace tgrs
