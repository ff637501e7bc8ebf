/**************************************************************************
 * attack.hpp
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

#include <array>
#include <atomic>
#include <optional>
#include <string>
#include <thread>

#include "distinguisher.hpp"
#include "mceliece.hpp"

namespace tgrs {

/*
 * Key recovery for single-twist codes, in three steps.
 *
 * Step 1 finds the monomial subcode: triples of codewords are drawn until
 * dim(<b1,b2,b3> * C) stays at or below 2k+2, then the accepted triple is
 * extended one vector at a time to a basis of the codimension-1 subcode.
 * When the square of the public code is full, the same search runs on lifted
 * shortenings and the pieces are summed back together.
 *
 * Step 2 recovers a support/multiplier pair. The square of the monomial
 * subcode is a GRS code, so a Sidelnikov-Shestakov step yields one valid
 * support, and a dual-kernel solve yields matching multipliers. GRS
 * representations are only unique up to fractional linear maps, while the
 * twisted structure survives support scalings only, so the pair is then
 * re-normalized: the annihilator of the subcode's coefficient space, weighted
 * by binomials, factors as const * (Dx - C)^h (A - Bx)^{k-1-h}, and its
 * projective root pair determines the usable maps up to scaling (two
 * candidates, or a one-parameter scan when a root has multiplicity zero).
 * Every candidate map is validated by the hook scan against the public code.
 *
 * Step 3 reads the hook (the unique missing monomial), then the twist and its
 * coefficient from the degree and leading coefficient of any word outside the
 * monomial subcode.
 */

struct AttackConfig {
    std::uint64_t seed = 0;
    std::size_t budget_factor = 20;  // trial caps: factor*q^3 triples, factor*q per slot
    unsigned threads = 1;
    std::size_t max_step1_retries = 6;
    // test hook: force the index sets used by the shortened route
    std::vector<std::vector<std::size_t>> forced_shortenings;
};

struct AttackReport {
    std::optional<TgrsKey> key;
    std::uint64_t trials_used = 0;  // triple draws spent
    int case_taken = 0;             // 1 = direct, 2 = via shortenings
    bool verified = false;
    std::uint64_t seed = 0;
    std::string note;
};

/// Shared trial budget across retries; exhaustion is an explicit error, never
/// a silent retry.
struct TrialBudget {
    std::uint64_t cap_triples = 0;
    std::uint64_t used_triples = 0;
    std::uint64_t cap_singles_per_slot = 0;

    void charge_triples(std::uint64_t n) {
        used_triples += n;
        if (used_triples > cap_triples)
            fail(Err::TrialBudgetExhausted,
                 "triple budget of " + std::to_string(cap_triples) + " draws exhausted");
    }
};

namespace detail {

inline Word draw_word(const LinearCode& c, Rng& rng) {
    Word coeffs(c.k());
    for (fel& v : coeffs) v = c.field()->random_element(rng);
    return c.generator().mul_vec_left(coeffs);
}

struct TripleHit {
    std::uint64_t counter = 0;
    std::array<Word, 3> words;
};

/// Scan counters from `base` until a triple passes the product-dimension and
/// independence tests. Workers race over blocks; the lowest accepted counter
/// wins, so the result does not depend on the thread count.
inline std::optional<TripleHit> find_triple(const LinearCode& c, std::uint64_t seed,
                                            std::uint64_t salt, std::uint64_t base,
                                            std::size_t threshold, unsigned threads,
                                            TrialBudget& budget) {
    const std::uint64_t kBlock = 512;
    auto test_one = [&](std::uint64_t ctr) -> bool {
        Rng rng = Rng::stream(seed, phase::kTriple + (salt << 8), ctr);
        std::vector<Word> b{draw_word(c, rng), draw_word(c, rng), draw_word(c, rng)};
        if (product_span_dim(b, c, threshold) > threshold) return false;
        RankTracker rk(c.field(), c.n());
        std::size_t indep = 0;
        for (const Word& w : b)
            if (rk.add(Word(w))) ++indep;
        return indep == 3;
    };

    for (std::uint64_t block = base;; block += kBlock) {
        std::uint64_t remaining = budget.cap_triples > budget.used_triples
                                      ? budget.cap_triples - budget.used_triples
                                      : 0;
        if (remaining == 0) return std::nullopt;
        std::uint64_t hi = block + std::min<std::uint64_t>(kBlock, remaining);
        budget.used_triples += hi - block;
        std::atomic<std::uint64_t> best(~std::uint64_t(0));
        if (threads <= 1) {
            for (std::uint64_t ctr = block; ctr < hi; ++ctr)
                if (test_one(ctr)) {
                    best.store(ctr);
                    break;
                }
        } else {
            std::vector<std::thread> pool;
            std::atomic<std::uint64_t> next(block);
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        std::uint64_t ctr = next.fetch_add(1);
                        if (ctr >= hi || ctr >= best.load()) break;
                        if (test_one(ctr)) {
                            std::uint64_t cur = best.load();
                            while (ctr < cur && !best.compare_exchange_weak(cur, ctr)) {
                            }
                        }
                    }
                });
            for (auto& th : pool) th.join();
        }
        std::uint64_t won = best.load();
        if (won != ~std::uint64_t(0)) {
            Rng rng = Rng::stream(seed, phase::kTriple + (salt << 8), won);
            TripleHit hit;
            hit.counter = won;
            hit.words = {draw_word(c, rng), draw_word(c, rng), draw_word(c, rng)};
            return hit;
        }
    }
}

}  // namespace detail

/// Step 1, direct form: accept a triple with small product span, then extend
/// it one vector at a time (keeping b1, b2 and the candidate) until k-1
/// independent vectors span the codimension-1 subcode.
inline LinearCode recover_monomial_subcode(const LinearCode& c, const AttackConfig& cfg,
                                           TrialBudget& budget, std::uint64_t salt = 0,
                                           std::uint64_t* counter_io = nullptr) {
    std::size_t k = c.k();
    require(k >= 4, Err::InvalidParams, "triple search needs dimension >= 4");
    std::size_t threshold = 2 * k + 2;
    std::uint64_t base = counter_io ? *counter_io : 0;

    auto hit =
        detail::find_triple(c, cfg.seed, salt, base, threshold, cfg.threads, budget);
    if (!hit) fail(Err::TrialBudgetExhausted, "no accepted triple within the trial budget");
    if (counter_io) *counter_io = hit->counter + 1;

    std::vector<Word> basis(hit->words.begin(), hit->words.end());
    RankTracker rk(c.field(), c.n());
    for (const Word& w : basis) rk.add(Word(w));

    for (std::size_t s = 4; s <= k - 1; ++s) {
        bool found = false;
        for (std::uint64_t ctr = 0; ctr < budget.cap_singles_per_slot; ++ctr) {
            Rng rng = Rng::stream(cfg.seed, phase::kExtend + (salt << 8) + (s << 32),
                                  hit->counter * 1315423911ULL + ctr);
            Word cand = detail::draw_word(c, rng);
            std::vector<Word> probe{basis[0], basis[1], cand};
            if (product_span_dim(probe, c, threshold) > threshold) continue;
            RankTracker probe_rk = rk;
            if (!probe_rk.add(Word(cand))) continue;
            rk = std::move(probe_rk);
            basis.push_back(std::move(cand));
            found = true;
            break;
        }
        if (!found)
            fail(Err::TrialBudgetExhausted,
                 "extension slot " + std::to_string(s) + " exhausted its trial budget");
    }
    return LinearCode::from_generator(Matrix::from_rows(c.field(), basis, c.n()));
}

namespace detail {

/// One reassembly attempt over a fixed list of index sets: recover a piece
/// per set, sum the pieces, and validate the sum through the dimension of
/// its square. Throws ReassemblyStalled when the sum stops growing.
inline std::optional<LinearCode> reassemble_pieces(
    const LinearCode& c, const std::vector<std::vector<std::size_t>>& sets,
    const AttackConfig& cfg, TrialBudget& budget, std::uint64_t salt) {
    std::size_t n = c.n(), k = c.k();
    Subspace sum(c.field(), n);
    std::size_t stalls = 0;
    std::uint64_t piece_salt = (salt << 16) + 1;
    for (const auto& I : sets) {
        if (sum.dim() >= k - 1) break;
        LinearCode sc = shorten(c, I, /*keep_zero_columns=*/true);
        std::size_t ka = sc.k();
        if (ka + I.size() != k || ka < 4) continue;
        std::size_t expected = std::min(n - I.size(), ka * (ka + 1) / 2);
        if (schur_square_dim(sc, expected) >= expected) continue;  // not structured here
        LinearCode piece;
        try {
            piece = recover_monomial_subcode(sc, cfg, budget, piece_salt++);
        } catch (const Error& e) {
            if (e.code() == Err::TrialBudgetExhausted) throw;
            continue;
        }
        Subspace trial = subspace_sum(sum, piece.row_space());
        if (trial.dim() > k - 1) continue;  // polluted piece, drop it
        if (trial.dim() == sum.dim()) {
            if (++stalls >= 8)
                fail(Err::ReassemblyStalled, "sum of shortened pieces stopped growing at dim " +
                                                 std::to_string(sum.dim()));
            continue;
        }
        stalls = 0;
        sum = std::move(trial);
    }
    if (sum.dim() != k - 1) return std::nullopt;
    // a correct sum is the monomial subcode, whose square has dimension
    // 2k-1 (2k-3 or 2k-2 for edge hooks); anything else is pollution
    LinearCode m = LinearCode::from_generator(sum.basis());
    std::size_t sq = schur_square_dim(m, 2 * k);
    if (sq != 2 * k - 1 && sq != 2 * k - 2 && sq != 2 * k - 3) return std::nullopt;
    return m;
}

}  // namespace detail

/// Step 1, shortened form: run the triple search on lifted shortenings C_I
/// (prescribed zero columns kept in place) and sum the recovered pieces over
/// index sets with empty common intersection until the sum has dimension k-1.
/// The secret twist is unknown, so shortening sizes are probed from the
/// bottom of the admissible window upward: small sizes keep the acceptance
/// threshold discriminating, larger ones tolerate larger twists.
inline LinearCode recover_via_shortenings(const LinearCode& c, const AttackConfig& cfg,
                                          TrialBudget& budget, std::uint64_t salt = 0) {
    std::size_t n = c.n(), k = c.k();

    if (!cfg.forced_shortenings.empty()) {
        auto m = detail::reassemble_pieces(c, cfg.forced_shortenings, cfg, budget, salt);
        if (m) return *m;
        fail(Err::ReassemblyStalled, "forced index sets did not reassemble the subcode");
    }

    auto window = shortening_window(1, n, k);
    require(window.has_value(), Err::Unsupported, "empty shortening window");
    for (std::size_t a = std::max<std::size_t>(window->first, 1); a <= window->second; ++a) {
        if (k - a < 4) continue;
        std::vector<std::vector<std::size_t>> sets;
        for (std::uint64_t i = 0; i < 24; ++i) {
            Rng rng = Rng::stream(cfg.seed, phase::kShorten + (salt << 8) + (a << 32), i);
            sets.push_back(sample_index_set(n, a, rng));
        }
        auto m = detail::reassemble_pieces(c, sets, cfg, budget, salt + (a << 8));
        if (m) return *m;
    }
    fail(Err::ReassemblyStalled, "no shortening size reassembled a subcode of dimension k-1");
}

namespace detail {

/// All-nonzero solutions of {u : u * alpha^j  _|_  rows of `code`, j < jmax},
/// in a deterministic order. For a 2-dimensional kernel the projective
/// combinations are enumerated as well.
inline std::vector<Word> dual_kernel_candidates(const LinearCode& code,
                                                const std::vector<fel>& alpha,
                                                std::size_t jmax) {
    const Field& F = *code.field();
    std::size_t n = code.n();
    Matrix sys(code.field(), code.k() * jmax, n);
    std::size_t r = 0;
    for (std::size_t row = 0; row < code.k(); ++row) {
        Word pw(n, 1);
        for (std::size_t j = 0; j < jmax; ++j) {
            for (std::size_t i = 0; i < n; ++i)
                sys.at(r, i) = F.mul(code.generator().at(row, i), pw[i]);
            ++r;
            for (std::size_t i = 0; i < n; ++i) pw[i] = F.mul(pw[i], alpha[i]);
        }
    }
    Matrix ker = kernel_basis(sys);
    auto all_nonzero = [](const Word& w) {
        for (fel v : w)
            if (v == 0) return false;
        return true;
    };
    std::vector<Word> out;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        Word w = ker.row(i);
        if (all_nonzero(w)) out.push_back(std::move(w));
    }
    if (ker.rows() == 2) {
        for (fel t = 1; t < F.q(); ++t) {
            Word w(n);
            for (std::size_t i = 0; i < n; ++i)
                w[i] = F.add(ker.at(0, i), F.mul(t, ker.at(1, i)));
            if (all_nonzero(w)) out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace detail

/// Sidelnikov-Shestakov support recovery. The systematic form of a GRS code
/// is Cauchy-like, so row and column entry ratios are fractional linear
/// images of the support; gluing the two charts through their four shared
/// values determines every support point. The result is normalized to place
/// 0 and 1 at the first two pivot positions. Returns (alpha, mult) with
/// grs_code(alpha, mult, dim) equal to the input, or throws NotGrs.
inline std::pair<std::vector<fel>, std::vector<fel>> ss_recover_support(const LinearCode& g) {
    const Field& F = *g.field();
    std::size_t n = g.n(), m = g.k();
    require(m >= 2 && n >= m + 2, Err::NotGrs, "support recovery needs 2 <= dim <= n-2");

    const Matrix& gen = g.generator();  // already RREF
    std::vector<std::size_t> piv, nonpiv;
    {
        RrefResult rr = rref(gen);
        piv = rr.pivots;
        std::vector<bool> is_piv(n, false);
        for (std::size_t c : piv) is_piv[c] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_piv[c]) nonpiv.push_back(c);
    }
    auto A = [&](std::size_t i, std::size_t j) { return gen.at(i, nonpiv[j]); };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < nonpiv.size(); ++j)
            require(A(i, j) != 0, Err::NotGrs, "zero entry in the systematic part");

    std::vector<fel> rv(nonpiv.size()), sv(m);
    for (std::size_t j = 0; j < nonpiv.size(); ++j) rv[j] = F.div(A(0, j), A(1, j));
    for (std::size_t i = 0; i < m; ++i) sv[i] = F.div(A(i, 0), A(i, 1));
    require(F.mul(rv[0], sv[1]) == F.mul(rv[1], sv[0]), Err::NotGrs,
            "cross-ratio consistency check failed");

    // rho glues the column chart onto the row chart: rho(s_0) = inf,
    // rho(0) = r_1, rho(inf) = r_0. Infinity is tracked with a flag.
    struct P1 {
        fel v = 0;
        bool inf = false;
    };
    auto rho = [&](fel w) -> P1 {
        if (w == sv[0]) return {0, true};
        fel num = F.sub(F.mul(rv[0], w), F.mul(sv[0], rv[1]));
        fel den = F.sub(w, sv[0]);
        return {F.div(num, den), false};
    };

    std::vector<P1> w_of_pos(n);
    for (std::size_t i = 0; i < m; ++i) w_of_pos[piv[i]] = rho(sv[i]);
    for (std::size_t j = 0; j < nonpiv.size(); ++j) w_of_pos[nonpiv[j]] = {rv[j], false};

    std::vector<bool> taken(F.q(), false);
    bool inf_seen = false;
    for (const P1& w : w_of_pos) {
        if (w.inf) {
            require(!inf_seen, Err::NotGrs, "duplicate projective support value");
            inf_seen = true;
        } else {
            require(!taken[w.v], Err::NotGrs, "duplicate projective support value");
            taken[w.v] = true;
        }
    }
    fel z0 = 0;
    while (z0 < F.q() && taken[z0]) ++z0;
    require(z0 < F.q(), Err::NotGrs, "no free normalization point");

    // lambda(w) = z0 / (z0 - w) sends inf -> 0 and 0 -> 1
    std::vector<fel> alpha(n);
    for (std::size_t i = 0; i < n; ++i)
        alpha[i] = w_of_pos[i].inf ? 0 : F.div(z0, F.sub(z0, w_of_pos[i].v));

    for (const Word& u : detail::dual_kernel_candidates(g, alpha, n - m)) {
        std::vector<fel> mult = dual_multipliers(F, alpha, u);
        try {
            if (grs_code(GrsParams{g.field(), alpha, mult, m}) == g) return {alpha, mult};
        } catch (const Error&) {
        }
    }
    fail(Err::NotGrs, "no multiplier vector reproduces the code");
}

/// All multiplier vectors v with m_code inside GRS_k(alpha, v), found by
/// solving for dual multipliers u with GRS_{n-k}(alpha, u) annihilating
/// m_code, keeping all-nonzero kernel vectors, and verifying containment.
/// Generically there is exactly one (up to scale); when the subcode is itself
/// a GRS code the family is larger and every member is returned.
inline std::vector<std::vector<fel>> multiplier_candidates(const LinearCode& m_code,
                                                           const std::vector<fel>& alpha,
                                                           std::size_t k) {
    const Field& F = *m_code.field();
    require(alpha.size() == m_code.n(), Err::LengthMismatch, "support length mismatch");
    std::vector<std::vector<fel>> out;
    for (const Word& u : detail::dual_kernel_candidates(m_code, alpha, m_code.n() - k)) {
        std::vector<fel> v = dual_multipliers(F, alpha, u);
        try {
            LinearCode g = grs_code(GrsParams{m_code.field(), alpha, v, k});
            bool ok = true;
            for (std::size_t r = 0; r < m_code.k() && ok; ++r)
                ok = g.contains(m_code.generator().row(r));
            if (ok) out.push_back(std::move(v));
        } catch (const Error&) {
        }
    }
    return out;
}

/// First multiplier vector passing verification.
inline std::vector<fel> recover_multipliers(const LinearCode& m_code,
                                            const std::vector<fel>& alpha, std::size_t k) {
    auto cands = multiplier_candidates(m_code, alpha, k);
    if (cands.empty())
        fail(Err::NoValidMultiplier, "no all-nonzero kernel vector passes verification");
    return cands.front();
}

/// The unique i in {0..k-1} with ev(alpha, v, x^i) outside c.
inline std::size_t recover_hook(const LinearCode& c, const std::vector<fel>& alpha,
                                const std::vector<fel>& v, std::size_t k) {
    const Field& F = *c.field();
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < k; ++i)
        if (!c.contains(ev(F, alpha, v, Poly::monomial(c.field(), i)))) missing.push_back(i);
    if (missing.size() != 1)
        fail(Err::HookCountMismatch,
             std::to_string(missing.size()) + " missing monomials; expected exactly 1");
    return missing[0];
}

/// Twist data read from one word outside the monomial subcode: with a valid
/// representation its interpolation is f = (low part) + gamma(x^h + eta
/// x^{k-1+t}), so t = deg f - (k-1) and eta = f_lead / f_h.
inline std::pair<std::size_t, fel> twist_from_word(const Word& w, const std::vector<fel>& alpha,
                                                   const std::vector<fel>& v, std::size_t h,
                                                   std::size_t k, const FieldPtr& field) {
    std::size_t n = alpha.size();
    Poly f = interpolate(field, alpha, v, w);
    if (f.deg() == Poly::kDegNegInf || f.deg() < static_cast<int>(k))
        fail(Err::DegenerateWord, "word interpolates below degree k");
    std::size_t t = static_cast<std::size_t>(f.deg()) - (k - 1);
    if (t < 1 || t > n - k)
        fail(Err::TwistOutOfRange, "recovered twist " + std::to_string(t) + " out of range");
    for (std::size_t d = k; d < static_cast<std::size_t>(f.deg()); ++d)
        if (f.coeff(d) != 0)
            fail(Err::DegenerateWord, "extra high-degree component in the word");
    fel fh = f.coeff(h);
    if (fh == 0) fail(Err::DegenerateWord, "hook coefficient vanishes");
    return {t, field->div(f.lead(), fh)};
}

/// Pick words of c outside m_code until one yields twist data.
inline std::pair<std::size_t, fel> recover_twist_coeff(const LinearCode& c,
                                                       const LinearCode& m_code,
                                                       const std::vector<fel>& alpha,
                                                       const std::vector<fel>& v, std::size_t h) {
    std::string last = "every generator row lies in the subcode";
    for (std::size_t r = 0; r < c.k(); ++r) {
        Word w = c.generator().row(r);
        if (m_code.contains(w)) continue;
        try {
            return twist_from_word(w, alpha, v, h, c.k(), c.field());
        } catch (const Error& e) {
            last = e.what();
        }
    }
    fail(Err::DegenerateWord, last);
}

namespace detail {

/// Pascal's triangle modulo the characteristic.
inline std::vector<fel> binomial_row(const Field& F, std::size_t n) {
    std::vector<fel> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j >= 1; --j) row[j] = (row[j] + row[j - 1]) % F.p();
    return row;
}

struct NormalizedRep {
    std::vector<fel> alpha;
    std::vector<fel> mult;
    std::size_t hook = 0;
};

/// Degree-compatible support normalizations. Given one representation
/// (alpha0, v0) with m_code inside GRS_k(alpha0, v0): the coefficient space
/// of the subcode is the kernel of a single functional; its binomial-weighted
/// polynomial factors over P^1 into at most two roots whose images must be 0
/// and infinity under any usable support map. Builds the candidate maps and
/// keeps every one that passes the hook scan against the public code (callers
/// try them in order; a scan-passing candidate can still fail the twist read
/// when the subcode itself is a GRS code).
inline std::vector<NormalizedRep> normalize_support(const LinearCode& m_code,
                                                    const LinearCode& pub,
                                                    const std::vector<fel>& alpha0,
                                                    const std::vector<fel>& v0, std::size_t k) {
    const Field& F = *m_code.field();
    const FieldPtr& f = m_code.field();
    std::size_t n = m_code.n();

    std::vector<NormalizedRep> out;
    Matrix coeffs(f, m_code.k(), k);
    for (std::size_t r = 0; r < m_code.k(); ++r) {
        Poly p = interpolate(f, alpha0, v0, m_code.generator().row(r));
        if (p.deg() != Poly::kDegNegInf && p.deg() >= static_cast<int>(k)) return out;
        for (std::size_t j = 0; j < k; ++j) coeffs.at(r, j) = p.coeff(j);
    }
    Matrix ann = kernel_basis(coeffs);
    if (ann.rows() != 1) return out;

    std::vector<fel> binom = binomial_row(F, k - 1);
    std::vector<fel> lam(k);
    bool all_zero = true;
    for (std::size_t j = 0; j < k; ++j) {
        lam[j] = F.mul(binom[j], ann.at(0, j));
        if (lam[j] != 0) all_zero = false;
    }
    if (all_zero)
        fail(Err::Unsupported,
             "binomial weights of the annihilator vanish in characteristic " +
                 std::to_string(F.p()));

    Poly lampoly(f, lam);
    std::size_t mult_inf = (k - 1) - static_cast<std::size_t>(lampoly.deg());
    struct Root {
        bool inf = false;
        fel v = 0;
        std::size_t mult = 0;
    };
    std::vector<Root> roots;
    if (mult_inf > 0) roots.push_back({true, 0, mult_inf});
    Poly rem = lampoly;
    for (fel z = 0; z < F.q() && rem.deg() > 0; ++z) {
        std::size_t mz = 0;
        for (;;) {
            auto [quo, r] = rem.divrem(Poly(f, {F.neg(z), 1}));
            if (!r.is_zero()) break;
            rem = quo;
            ++mz;
        }
        if (mz > 0) roots.push_back({false, z, mz});
    }
    if (rem.deg() > 0) return out;  // does not split over F_q
    if (roots.size() > 2) return out;

    struct P1 {
        bool inf = false;
        fel v = 0;
    };
    // sigma(z) = (Az + B)/(Cz + D) with num_root = C/D and den_root = A/B
    auto build = [&](P1 num_root, P1 den_root) -> std::optional<NormalizedRep> {
        fel Aa = den_root.inf ? 1 : den_root.v, Bb = den_root.inf ? 0 : 1;
        fel Cc = num_root.inf ? 1 : num_root.v, Dd = num_root.inf ? 0 : 1;
        std::vector<fel> alpha(n), mult(n);
        std::vector<bool> seen(F.q(), false);
        for (std::size_t i = 0; i < n; ++i) {
            fel den = F.add(F.mul(Cc, alpha0[i]), Dd);
            if (den == 0) return std::nullopt;  // pole on the support
            alpha[i] = F.div(F.add(F.mul(Aa, alpha0[i]), Bb), den);
            if (seen[alpha[i]]) return std::nullopt;
            seen[alpha[i]] = true;
            // same code on the new support: v* = v0 * (C a0 + D)^{k-1}
            mult[i] = F.mul(v0[i], F.pow(den, k - 1));
        }
        std::size_t h;
        try {
            h = recover_hook(pub, alpha, mult, k);
        } catch (const Error&) {
            return std::nullopt;
        }
        return NormalizedRep{std::move(alpha), std::move(mult), h};
    };

    if (roots.size() == 2) {
        for (int flip = 0; flip < 2; ++flip) {
            auto rep = build({roots[flip].inf, roots[flip].v},
                             {roots[1 - flip].inf, roots[1 - flip].v});
            if (rep) out.push_back(std::move(*rep));
        }
        return out;
    }
    // single root: the second projective point is unconstrained, scan it
    P1 r0{roots[0].inf, roots[0].v};
    for (std::uint32_t cidx = 0; cidx <= F.q(); ++cidx) {
        P1 other = (cidx == F.q()) ? P1{true, 0} : P1{false, static_cast<fel>(cidx)};
        if (other.inf == r0.inf && (other.inf || other.v == r0.v)) continue;
        auto rep = build(r0, other);
        if (rep) out.push_back(std::move(*rep));
        rep = build(other, r0);
        if (rep) out.push_back(std::move(*rep));
    }
    return out;
}

}  // namespace detail

/// True iff the candidate generates exactly the public row space and decrypts
/// 20 seeded sample encryptions correctly.
inline bool verify_key(const PublicKey& pk, const TgrsKey& candidate) {
    try {
        LinearCode pub = LinearCode::from_generator(pk.g_pub);
        if (tgrs_code(candidate) != pub) return false;
        for (std::uint64_t i = 0; i < 20; ++i) {
            Rng rng = Rng::stream(0xfeedc0de, phase::kVerify, i);
            Word m(pk.k());
            for (fel& v : m) v = pk.field()->random_element(rng);
            Word c = encrypt(pk, m, 0xabcd0000 + i);
            if (decrypt(candidate, pk, c) != m) return false;
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

namespace detail {

/// Steps 2b and 3 on a subcode without zero columns: normalize the
/// representation, read the hook/twist/coefficient, and collect every
/// candidate that regenerates pub exactly (several only in degenerate cases
/// where the code has more than one twisted representation).
inline std::vector<TgrsKey> finish_from_rep(const LinearCode& pub, const LinearCode& m_code,
                                            const std::vector<fel>& alpha0,
                                            const std::vector<fel>& v0,
                                            std::string& last_error) {
    const FieldPtr& f = pub.field();
    std::size_t k = pub.k();
    std::vector<TgrsKey> out;
    auto reps = normalize_support(m_code, pub, alpha0, v0, k);
    if (reps.empty()) {
        last_error = "no degree-compatible support normalization found";
        return out;
    }
    for (const NormalizedRep& rep : reps) {
        try {
            auto [t, eta] = recover_twist_coeff(pub, m_code, rep.alpha, rep.mult, rep.hook);
            TgrsKey key;
            key.grs = GrsParams{f, rep.alpha, rep.mult, k};
            key.twists = {t};
            key.hooks = {rep.hook};
            key.coeffs = {eta};
            key.validate();
            if (tgrs_code(key) == pub)
                out.push_back(std::move(key));
            else
                last_error = "candidate key does not regenerate the public code";
        } catch (const Error& e) {
            if (e.code() == Err::Unsupported || e.code() == Err::TrialBudgetExhausted) throw;
            last_error = e.what();
        }
    }
    return out;
}

/// Extend a key recovered on a punctured instance back to full length. A
/// subcode zero column forces hook 0 with support value 0 at that column; the
/// missing multiplier is read off any word outside the subcode.
inline std::optional<TgrsKey> lift_punctured_key(const TgrsKey& key_p, std::size_t j0,
                                                 const LinearCode& pub_full,
                                                 const LinearCode& m_full,
                                                 std::string& last_error) {
    const FieldPtr& f = pub_full.field();
    const Field& F = *f;
    if (key_p.hooks[0] != 0) {
        last_error = "lift blocked: candidate hook is not 0";
        return std::nullopt;
    }
    for (fel a : key_p.grs.alpha)
        if (a == 0) {
            last_error = "lift blocked: zero already present in the support";
            return std::nullopt;
        }
    std::optional<fel> vj;
    for (std::size_t r = 0; r < pub_full.k() && !vj; ++r) {
        Word w = pub_full.generator().row(r);
        if (m_full.contains(w) || w[j0] == 0) continue;
        Word wp = w;
        wp.erase(wp.begin() + j0);
        Poly fp = interpolate(f, key_p.grs.alpha, key_p.grs.mult, wp);
        fel f0 = fp.coeff(0);
        if (f0 == 0) continue;
        vj = F.div(w[j0], f0);
    }
    if (!vj) {
        last_error = "lift blocked: no word determines the missing multiplier";
        return std::nullopt;
    }
    TgrsKey full = key_p;
    full.grs.alpha.insert(full.grs.alpha.begin() + j0, 0);
    full.grs.mult.insert(full.grs.mult.begin() + j0, *vj);
    full.validate();
    if (tgrs_code(full) == pub_full) return full;
    last_error = "lifted key does not regenerate the public code";
    return std::nullopt;
}

/// Attack core; handles the k > n/2 case by running steps 1 and 2 on the
/// dual (a single-twist code's dual is quasi-GRS with the same support) and
/// translating the recovered representation back through dual multipliers.
/// Returns the recovered key plus (case taken, triple draws used).
inline std::pair<TgrsKey, std::pair<int, std::uint64_t>> attack_code(const LinearCode& pub,
                                                                     const AttackConfig& cfg) {
    const FieldPtr& f = pub.field();
    const Field& F = *f;
    std::size_t n = pub.n(), k = pub.k();
    std::uint64_t q = f->q();

    TrialBudget budget;
    budget.cap_triples = cfg.budget_factor * q * q * q;
    budget.cap_singles_per_slot = cfg.budget_factor * q;

    bool dualize = 2 * k > n;
    LinearCode work = dualize ? dual(pub) : pub;
    std::size_t kw = work.k();

    std::size_t sq_probe = schur_square_dim(work, work.n() - 1);
    bool case1 = sq_probe < work.n();
    int case_taken = case1 ? 1 : 2;
    if (case1 && sq_probe <= 2 * kw + 2)
        fail(Err::Unsupported,
             "square of the code is at most 2k+2, so the triple test cannot discriminate; "
             "the twist is tiny, absent, or folded by the evaluation map");

    std::uint64_t counter = 0;
    std::string last_error = "step 1 produced no usable subcode";
    for (std::size_t attempt = 0; attempt < cfg.max_step1_retries; ++attempt) {
        LinearCode sub;
        if (case1) {
            sub = recover_monomial_subcode(work, cfg, budget, 0, &counter);
        } else {
            try {
                sub = recover_via_shortenings(work, cfg, budget, attempt);
            } catch (const Error& e) {
                if (e.code() != Err::ReassemblyStalled) throw;
                last_error = e.what();
                continue;
            }
        }

        // a zero column in the subcode (hook 0 with 0 in the support) is
        // punctured for the algebra and lifted back at the end
        std::vector<std::size_t> zcols;
        for (std::size_t j = 0; j < sub.n(); ++j) {
            bool zero = true;
            for (std::size_t r = 0; r < sub.k() && zero; ++r)
                zero = sub.generator().at(r, j) == 0;
            if (zero) zcols.push_back(j);
        }
        if (zcols.size() > 1 || (dualize && !zcols.empty())) {
            last_error = "subcode has unsupported zero columns";
            continue;
        }
        LinearCode sub_v = zcols.empty() ? sub : puncture(sub, zcols);
        LinearCode pub_v = zcols.empty() ? pub : puncture(pub, zcols);
        if (sub_v.k() != sub.k() || pub_v.k() != pub.k()) {
            last_error = "puncturing at the zero column dropped a dimension";
            continue;
        }

        LinearCode sq = schur_square(sub_v);
        if (!dualize && sq.k() == 2 * kw - 2)
            fail(Err::Unsupported,
                 "square of the recovered subcode has dimension 2k-2; "
                 "hooks 1 and k-2 are outside the supported cases");
        if (sq.k() != 2 * kw - 1 && sq.k() != 2 * kw - 3 && sq.k() != 2 * kw - 2) {
            last_error = "recovered subcode square has dimension " + std::to_string(sq.k());
            continue;  // junk subcode, redraw
        }

        try {
            auto [alpha0, w0] = ss_recover_support(sq);
            std::optional<TgrsKey> key;
            if (dualize) {
                for (const auto& u0 : multiplier_candidates(sub_v, alpha0, kw)) {
                    std::vector<fel> v0 = dual_multipliers(F, alpha0, u0);
                    LinearCode m_code =
                        code_intersect(pub_v, grs_code(GrsParams{f, alpha0, v0, k}));
                    if (m_code.k() != k - 1) {
                        last_error = "dual route: intersection with the recovered GRS has dim " +
                                     std::to_string(m_code.k());
                        continue;
                    }
                    auto keys = finish_from_rep(pub_v, m_code, alpha0, v0, last_error);
                    if (!keys.empty()) {
                        key = keys.front();
                        break;
                    }
                }
            } else {
                for (const auto& v0 : multiplier_candidates(sub_v, alpha0, k)) {
                    for (const TgrsKey& key_v :
                         finish_from_rep(pub_v, sub_v, alpha0, v0, last_error)) {
                        key = zcols.empty() ? std::optional<TgrsKey>(key_v)
                                            : lift_punctured_key(key_v, zcols[0], pub, sub,
                                                                 last_error);
                        if (key) break;
                    }
                    if (key) break;
                }
            }
            if (key) return {*key, {case_taken, budget.used_triples}};
        } catch (const Error& e) {
            if (e.code() == Err::Unsupported || e.code() == Err::TrialBudgetExhausted) throw;
            last_error = e.what();
        }
    }
    fail(Err::TrialBudgetExhausted, "all step-1 attempts failed; last error: " + last_error);
}

}  // namespace detail

/// Full pipeline: probe the direct or shortened route from the square of the
/// public code (working on the dual when k > n/2), chain the recovery steps,
/// and verify the candidate.
inline AttackReport full_attack(const PublicKey& pk, const AttackConfig& cfg) {
    LinearCode pub = LinearCode::from_generator(pk.g_pub);
    std::size_t n = pub.n(), k = pub.k();
    require(k >= 1 && k < n, Err::InvalidParams, "public code must satisfy 1 <= k < n");
    require(2 * k != n, Err::Unsupported,
            "n = 2k leaves the subcode square without a rigid GRS representation");

    AttackReport report;
    report.seed = cfg.seed;
    auto [key, stats] = detail::attack_code(pub, cfg);
    report.case_taken = stats.first;
    report.trials_used = stats.second;
    report.key = key;
    report.verified = verify_key(pk, key);
    if (!report.verified) report.note = "candidate failed verification";
    return report;
}

}  // namespace tgrs
