/**************************************************************************
 * census.hpp
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

#include <cmath>
#include <map>
#include <numeric>
#include <thread>

#include "poly_space.hpp"

namespace tgrs {

// Executable checks for the combinatorics behind the triple test: the
// dimension formula for f*F[x]_{<k} + g*F[x]_{<k}, exhaustive gcd censuses,
// and Monte-Carlo estimates of the gcd-condition density and of the triple
// classification rates.

namespace detail {

/// deg(gcd(f, g)) on flat coefficient buffers; degrees of inputs given, both
/// nonzero. Cheap enough for million-sample Monte Carlo runs.
inline int gcd_degree_flat(const Field& F, fel* a, int da, fel* b, int db) {
    while (db >= 0) {
        // a mod b
        fel lead_inv = F.inv(b[db]);
        while (da >= db) {
            fel s = F.mul(a[da], lead_inv);
            if (s != 0)
                for (int j = 0; j <= db; ++j)
                    a[da - db + j] = F.sub(a[da - db + j], F.mul(s, b[j]));
            while (da >= 0 && a[da] == 0) --da;
        }
        std::swap(a, b);
        std::swap(da, db);
    }
    return da;
}

}  // namespace detail

struct DimSumCheck {
    std::size_t measured = 0;
    std::size_t predicted = 0;
};

/// dim(f F[x]_{<k} + g F[x]_{<k}) measured as the rank of the stacked shift
/// bases, next to the closed form k + max(deg f, deg g) - deg gcd(f, g).
inline DimSumCheck dim_sum_check(const Poly& f, const Poly& g, std::size_t k) {
    require(!f.is_zero() && !g.is_zero(), Err::ZeroPolynomial, "inputs must be nonzero");
    require(f.deg() < static_cast<int>(k) && g.deg() < static_cast<int>(k), Err::InvalidParams,
            "inputs must have degree below k");
    const FieldPtr& field = f.field();
    std::size_t width = static_cast<std::size_t>(std::max(f.deg(), g.deg())) + k;
    RankTracker rk(field, width);
    for (const Poly* p : {&f, &g})
        for (std::size_t i = 0; i < k; ++i) {
            Word row(width, 0);
            for (std::size_t j = 0; j < p->coeffs().size(); ++j) row[i + j] = p->coeffs()[j];
            rk.add(std::move(row));
        }
    int d = poly_gcd(f, g).deg();
    std::size_t predicted = k + static_cast<std::size_t>(std::max(f.deg(), g.deg())) -
                            static_cast<std::size_t>(d);
    return {rk.rank(), predicted};
}

/// Exhaustive count of degree-(s, u) pairs by exact gcd degree.
struct GcdCensus {
    std::uint32_t q = 0;
    std::size_t s = 0, u = 0;
    std::map<std::size_t, std::uint64_t> counts;  // gcd degree -> #pairs
    std::uint64_t total = 0;
};

inline GcdCensus gcd_census(const FieldPtr& field, std::size_t s, std::size_t u) {
    const Field& F = *field;
    std::uint64_t q = F.q();
    std::uint64_t fs = (q - 1), fu = (q - 1);
    for (std::size_t i = 0; i < s; ++i) fs *= q;
    for (std::size_t i = 0; i < u; ++i) fu *= q;
    require(fs * fu <= 10000000ull, Err::TooLarge, "census would enumerate more than 1e7 pairs");

    GcdCensus out;
    out.q = F.q();
    out.s = s;
    out.u = u;
    std::vector<fel> a(s + 1), b(u + 1), wa(s + 1), wb(u + 1);
    for (std::uint64_t ia = 0; ia < fs; ++ia) {
        std::uint64_t x = ia;
        for (std::size_t i = 0; i < s; ++i) {
            a[i] = static_cast<fel>(x % q);
            x /= q;
        }
        a[s] = static_cast<fel>(1 + x % (q - 1));
        for (std::uint64_t ib = 0; ib < fu; ++ib) {
            std::uint64_t y = ib;
            for (std::size_t i = 0; i < u; ++i) {
                b[i] = static_cast<fel>(y % q);
                y /= q;
            }
            b[u] = static_cast<fel>(1 + y % (q - 1));
            wa = a;
            wb = b;
            int d = detail::gcd_degree_flat(F, wa.data(), static_cast<int>(s), wb.data(),
                                            static_cast<int>(u));
            ++out.counts[static_cast<std::size_t>(d)];
            ++out.total;
        }
    }
    return out;
}

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t n, std::int64_t d) {
        std::int64_t g = std::gcd(n, d);
        if (g == 0) g = 1;
        return {n / g, d / g};
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// |B_j(s,u)| / |A(s,u)| exactly: the fraction of degree-(s,u) pairs whose
/// gcd has degree at most j.
inline Rational density_below(const FieldPtr& field, std::size_t s, std::size_t u,
                              std::size_t j) {
    require(j <= std::min(s, u), Err::InvalidParams, "j must be at most min(s, u)");
    GcdCensus c = gcd_census(field, s, u);
    std::uint64_t below = 0;
    for (const auto& [deg, count] : c.counts)
        if (deg <= j) below += count;
    return Rational::of(static_cast<std::int64_t>(below), static_cast<std::int64_t>(c.total));
}

/// The gcd condition on a pair of degrees s = deg f, u = deg g:
/// deg gcd < max{s,u} - 5 when t > k, and < max{s,u} - (k-t) - 5 when t <= k.
inline bool gcd_condition(const Poly& f, const Poly& g, std::size_t k, std::size_t t) {
    require(!f.is_zero() && !g.is_zero(), Err::ZeroPolynomial, "inputs must be nonzero");
    require(f.deg() < static_cast<int>(k) && g.deg() < static_cast<int>(k), Err::InvalidParams,
            "inputs must have degree below k");
    long s = f.deg(), u = g.deg();
    long bound = std::max(s, u) - 5;
    if (t <= k) bound -= static_cast<long>(k) - static_cast<long>(t);
    int d = poly_gcd(f, g).deg();
    return d < bound;
}

struct McEstimate {
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    std::uint64_t seed = 0;
    double estimate() const { return samples ? double(hits) / double(samples) : 0.0; }
    double sigma() const {
        if (!samples) return 0.0;
        double p = estimate();
        return std::sqrt(p * (1.0 - p) / double(samples));
    }
};

/// Monte-Carlo density of the gcd condition over uniform pairs from
/// F[x]_{<k} x F[x]_{<k}. Pairs with a zero member count as misses.
inline McEstimate gcd_condition_density_mc(const FieldPtr& field, std::size_t k, std::size_t t,
                                           std::uint64_t samples, std::uint64_t seed,
                                           unsigned threads = 1) {
    require(samples > 0, Err::InvalidParams, "need at least one sample");
    require(field->q() >= 11, Err::InvalidParams, "density estimate assumes q >= 11");
    const Field& F = *field;
    auto run = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
        std::uint64_t hits = 0;
        std::vector<fel> a(k), b(k);
        for (std::uint64_t ctr = lo; ctr < hi; ++ctr) {
            Rng rng = Rng::stream(seed, phase::kCensus, ctr);
            int da = -1, db = -1;
            for (std::size_t i = 0; i < k; ++i) {
                a[i] = F.random_element(rng);
                if (a[i] != 0) da = static_cast<int>(i);
            }
            for (std::size_t i = 0; i < k; ++i) {
                b[i] = F.random_element(rng);
                if (b[i] != 0) db = static_cast<int>(i);
            }
            if (da < 0 || db < 0) continue;
            long bound = std::max(da, db) - 5;
            if (t <= k) bound -= static_cast<long>(k) - static_cast<long>(t);
            if (bound <= 0) continue;
            int d = detail::gcd_degree_flat(F, a.data(), da, b.data(), db);
            if (d < bound) ++hits;
        }
        return hits;
    };
    McEstimate out;
    out.samples = samples;
    out.seed = seed;
    if (threads <= 1) {
        out.hits = run(0, samples);
    } else {
        std::vector<std::uint64_t> part(threads, 0);
        std::vector<std::thread> pool;
        std::uint64_t chunk = (samples + threads - 1) / threads;
        for (unsigned tI = 0; tI < threads; ++tI)
            pool.emplace_back([&, tI] {
                std::uint64_t lo = tI * chunk, hi = std::min<std::uint64_t>(samples, lo + chunk);
                if (lo < hi) part[tI] = run(lo, hi);
            });
        for (auto& th : pool) th.join();
        for (std::uint64_t h : part) out.hits += h;
    }
    return out;
}

/// Classification counts of sampled triples from R^3, R = E' + <c> with E'
/// the monomial complement of c's hook below degree k. Membership in E'^3 is
/// exact (the sampled coefficient along c), the product dimension is measured
/// against the 2k+2 threshold.
struct TripleCensus {
    std::uint32_t q = 0;
    std::size_t k = 0, t = 0;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::uint64_t accepted = 0;     // dim <= 2k+2
    std::uint64_t in_subspace3 = 0; // all three sampled from E'
    std::uint64_t gamma = 0;        // accepted but not in E'^3
    std::uint64_t psi = 0;          // dim > 2k+2

    double conditional_subspace_rate() const {
        return accepted ? double(in_subspace3) / double(accepted) : 0.0;
    }
};

namespace detail {

/// dim <f1,f2,f3> R with early abort; R given by its monomial degree list and
/// the twist polynomial c. Rows are shifts of the f_i plus the three products
/// f_i * c, fed into an incremental ranker.
inline std::size_t triple_dim_fast(const Field& F, const std::vector<Poly>& fs,
                                   const std::vector<std::size_t>& mono_degs, const Poly& c,
                                   std::size_t width, std::size_t cap) {
    RankTracker rk(fs[0].field(), width);
    for (const Poly& f : fs) {
        if (f.is_zero()) continue;
        Poly fc = f.mul(c);
        Word row(width, 0);
        for (std::size_t j = 0; j < fc.coeffs().size(); ++j) row[j] = fc.coeffs()[j];
        rk.add(std::move(row));
        if (rk.rank() > cap) return cap + 1;
        for (std::size_t d : mono_degs) {
            Word shifted(width, 0);
            for (std::size_t j = 0; j < f.coeffs().size(); ++j) shifted[d + j] = f.coeffs()[j];
            rk.add(std::move(shifted));
            if (rk.rank() > cap) return cap + 1;
        }
    }
    (void)F;
    return rk.rank();
}

}  // namespace detail

/// Sample triples from R^3 (uniform coefficients over the canonical basis of
/// R) and classify them. Processing is blocked so results are identical for
/// any thread count; with stop_after_accepted > 0, sampling ends at the first
/// block boundary where the accepted count reaches the target.
inline TripleCensus triple_census(const FieldPtr& field, std::size_t k, std::size_t t,
                                  const Poly& c, std::uint64_t samples, std::uint64_t seed,
                                  std::uint64_t stop_after_accepted = 0, unsigned threads = 1) {
    const Field& F = *field;
    require(c.deg() == static_cast<int>(k - 1 + t), Err::InvalidParams,
            "c must have degree k-1+t");
    std::size_t hook = 0;
    while (hook < k && c.coeff(hook) == 0) ++hook;
    if (hook >= k) hook = 0;
    std::vector<std::size_t> mono_degs;
    for (std::size_t i = 0; i < k; ++i)
        if (i != hook) mono_degs.push_back(i);

    TripleCensus out;
    out.q = F.q();
    out.k = k;
    out.t = t;
    out.seed = seed;
    std::size_t cap = 2 * k + 2;
    std::size_t width = 2 * (k - 1 + t) + 1;

    const std::uint64_t kBlock = 8192;
    struct Tally {
        std::uint64_t accepted = 0, in3 = 0, gamma = 0, psi = 0;
    };
    auto run = [&](std::uint64_t lo, std::uint64_t hi) -> Tally {
        Tally tl;
        for (std::uint64_t ctr = lo; ctr < hi; ++ctr) {
            Rng rng = Rng::stream(seed, phase::kCensus + 1, ctr);
            std::vector<Poly> fs;
            bool all_in = true;
            for (int i = 0; i < 3; ++i) {
                std::vector<fel> coeffs(k, 0);
                for (std::size_t d : mono_degs) coeffs[d] = F.random_element(rng);
                fel gamma_coeff = F.random_element(rng);
                Poly f(field, std::move(coeffs));
                if (gamma_coeff != 0) {
                    f = f.add(c.scale(gamma_coeff));
                    all_in = false;
                }
                fs.push_back(std::move(f));
            }
            std::size_t dim = detail::triple_dim_fast(F, fs, mono_degs, c, width, cap);
            if (dim <= cap) {
                ++tl.accepted;
                if (all_in)
                    ++tl.in3;
                else
                    ++tl.gamma;
            } else {
                ++tl.psi;
            }
        }
        return tl;
    };

    for (std::uint64_t done = 0; done < samples;) {
        std::uint64_t hi = std::min<std::uint64_t>(samples, done + kBlock);
        Tally tl;
        if (threads <= 1) {
            tl = run(done, hi);
        } else {
            std::vector<Tally> part(threads);
            std::vector<std::thread> pool;
            std::uint64_t chunk = (hi - done + threads - 1) / threads;
            for (unsigned tI = 0; tI < threads; ++tI)
                pool.emplace_back([&, tI] {
                    std::uint64_t lo = done + tI * chunk;
                    std::uint64_t sub_hi = std::min<std::uint64_t>(hi, lo + chunk);
                    if (lo < sub_hi) part[tI] = run(lo, sub_hi);
                });
            for (auto& th : pool) th.join();
            for (const Tally& p : part) {
                tl.accepted += p.accepted;
                tl.in3 += p.in3;
                tl.gamma += p.gamma;
                tl.psi += p.psi;
            }
        }
        out.accepted += tl.accepted;
        out.in_subspace3 += tl.in3;
        out.gamma += tl.gamma;
        out.psi += tl.psi;
        out.samples += hi - done;
        done = hi;
        if (stop_after_accepted && out.accepted >= stop_after_accepted) break;
    }
    return out;
}

/// Exponent transfer between the full density and its restriction to a
/// codimension-1 subspace pair: a density >= 1 - q^{-w} on the full product
/// implies >= 1 - q^{-(w-2)} on the restricted one. Returns true when the
/// measured pair of densities is consistent with the implication.
inline bool exponent_transfer_holds(std::uint32_t q, std::uint32_t w, double full_density,
                                    double restricted_density) {
    require(w > 2, Err::InvalidParams, "need w > 2");
    double premise = 1.0 - std::pow(double(q), -double(w));
    double conclusion = 1.0 - std::pow(double(q), -double(w - 2));
    if (full_density < premise) return true;  // premise not established
    return restricted_density >= conclusion;
}

}  // namespace tgrs
