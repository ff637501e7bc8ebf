/**************************************************************************
 * distinguisher.hpp
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

namespace tgrs {

namespace detail {
inline long ceil_div(long a, long b) {  // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}
}  // namespace detail

/// Upper bound on dim C^2 for a quasi-GRS code with ell twist directions,
/// dimension k and maximal polynomial degree d:
/// min{(ell+2)k - 1 - ell(ell-1)/2, k + d + ell(ell+1)/2, 2d + 1}.
inline long qgrs_sq_bound(std::size_t ell, std::size_t k, std::size_t d) {
    require(ell >= 1 && ell <= k && k <= d + 1, Err::InvalidParams,
            "need 1 <= ell <= k <= d+1");
    long l = static_cast<long>(ell), kk = static_cast<long>(k), dd = static_cast<long>(d);
    long b1 = (l + 2) * kk - 1 - l * (l - 1) / 2;
    long b2 = kk + dd + l * (l + 1) / 2;
    long b3 = 2 * dd + 1;
    return std::min({b1, b2, b3});
}

/// The same bound after shortening at a positions: substitute k <- k-a and
/// d <- d-a.
inline long shortened_bound(std::size_t ell, std::size_t k, std::size_t d, std::size_t a) {
    require(a < k, Err::InvalidParams, "shortening size must be below k");
    return qgrs_sq_bound(ell, k - a, d - a);
}

/// Admissible shortening sizes for distinguishing. For ell = 1 the refined
/// window max(0, ceil((3k-n)/2)) .. k-5 is used; for ell >= 2 the coarse
/// bounds a >= ((ell+2)k - ell(ell-1)/2 - n)/(ell+1) and a <= k - 2(ell+2).
inline std::optional<std::pair<std::size_t, std::size_t>> shortening_window(std::size_t ell,
                                                                            std::size_t n,
                                                                            std::size_t k) {
    require(k <= n, Err::InvalidParams, "k must be at most n");
    require(ell >= 1, Err::InvalidParams, "ell must be >= 1");
    long a_min, a_max;
    long kk = static_cast<long>(k), nn = static_cast<long>(n), l = static_cast<long>(ell);
    if (ell == 1) {
        a_min = std::max(0L, detail::ceil_div(3 * kk - nn, 2));
        a_max = kk - 5;
    } else {
        a_min = std::max(0L, detail::ceil_div(2 * (l + 2) * kk - l * (l - 1) - 2 * nn,
                                              2 * (l + 1)));
        a_max = kk - 2 * (l + 2);
    }
    if (a_max < 0 || a_min > a_max) return std::nullopt;
    return std::make_pair(static_cast<std::size_t>(a_min), static_cast<std::size_t>(a_max));
}

/// Redundancy needed for the coarse distinguisher to apply:
/// n - k >= ceil(1.5 ell^2 + 2.5 ell + 4).
inline std::size_t distinguish_threshold(std::size_t ell) {
    require(ell >= 1, Err::InvalidParams, "ell must be >= 1");
    return static_cast<std::size_t>((3 * ell * ell + 5 * ell + 8 + 1) / 2);
}

enum class Verdict { Structured, Inconclusive };

inline const char* verdict_name(Verdict v) {
    return v == Verdict::Structured ? "Structured" : "Inconclusive";
}

struct BoundReport {
    std::size_t a = 0;
    std::uint64_t trial = 0;       // stream counter of the sampled I
    std::size_t observed = 0;      // dim of the shortened square
    std::size_t predicted_max = 0; // (ell+2)(k-a) - 1 - ell(ell-1)/2, d-free bound
    std::size_t random_expected = 0;  // min(n-a, C(k-a+1, 2))
    bool degenerate = false;       // dim C_I != k - a
};

struct DistinguishResult {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<BoundReport> reports;
};

/// uniform a-subset of [0, n), sorted
inline std::vector<std::size_t> sample_index_set(std::size_t n, std::size_t a, Rng& rng) {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[i] = i;
    for (std::size_t i = 0; i < a; ++i) {
        std::size_t j = i + rng.below(n - i);
        std::swap(pos[i], pos[j]);
    }
    pos.resize(a);
    std::sort(pos.begin(), pos.end());
    return pos;
}

/// Shorten-and-square distinguisher. Expects k <= n/2 (square the dual
/// otherwise). For every a in the window, trials_per_a random index sets are
/// measured; the verdict is Structured when any observed dimension falls
/// strictly below the random expectation. A shortening of unexpected
/// dimension is itself structural evidence and is reported as such.
inline DistinguishResult distinguish(const LinearCode& c, std::size_t ell_hint,
                                     std::size_t trials_per_a, std::uint64_t seed) {
    std::size_t n = c.n(), k = c.k();
    DistinguishResult out;
    auto window = shortening_window(ell_hint, n, k);
    if (!window) return out;
    long l = static_cast<long>(ell_hint);
    for (std::size_t a = window->first; a <= window->second; ++a) {
        std::size_t trials = (a == 0) ? 1 : trials_per_a;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            Rng rng = Rng::stream(seed, phase::kDistinguish, (a << 20) + trial);
            std::vector<std::size_t> I = sample_index_set(n, a, rng);
            LinearCode sc = shorten(c, I);
            BoundReport rep;
            rep.a = a;
            rep.trial = trial;
            rep.predicted_max =
                static_cast<std::size_t>((l + 2) * static_cast<long>(k - a) - 1 - l * (l - 1) / 2);
            rep.random_expected =
                std::min<std::size_t>(n - a, (k - a) * (k - a + 1) / 2);
            if (sc.k() != k - a) {
                rep.degenerate = true;
                rep.observed = sc.k() ? schur_square_dim(sc, n) : 0;
                out.verdict = Verdict::Structured;
            } else {
                rep.observed = schur_square_dim(sc, n);
                if (rep.observed < rep.random_expected) out.verdict = Verdict::Structured;
            }
            out.reports.push_back(rep);
        }
    }
    return out;
}

}  // namespace tgrs
