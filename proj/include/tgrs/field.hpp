/**************************************************************************
 * field.hpp
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

#include <cstdint>
#include <memory>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace tgrs {

/// Field element, stored as its canonical integer code in [0, q).
/// For extension fields the code is read base p as the coefficients of the
/// residue polynomial, lowest power first.
using fel = std::uint32_t;

/**
 * Arithmetic context for F_q, q = p^m with p prime.
 *
 * Elements are plain integer codes; all operations go through the owning
 * Field. Equality, hashing and serialization of elements are therefore
 * bit-exact. Instances are immutable after construction and safe to share
 * across threads.
 *
 * Small fields (q <= 256) use a full multiplication table, extension fields
 * up to 2^16 use log/antilog tables. Both are pure optimizations with results
 * identical to the schoolbook path.
 */
class Field {
   public:
    /// Prime field F_p.
    explicit Field(std::uint32_t p) : Field(p, 1, {}) {}

    /// F_{p^m} with a monic irreducible modulus of degree m over F_p,
    /// coefficients lowest power first (size m+1). Ignored when m == 1.
    Field(std::uint32_t p, std::uint32_t m, std::vector<fel> modulus) : p_(p), m_(m) {
        require(is_prime(p_), Err::NonPrimeP, "p = " + std::to_string(p_) + " is not prime");
        require(m_ >= 1, Err::DegreeMismatch, "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            q *= p_;
            require(q <= (1u << 20), Err::TooLarge, "q exceeds 2^20");
        }
        q_ = static_cast<std::uint32_t>(q);
        if (m_ == 1) {
            modulus_.clear();
        } else {
            require(modulus.size() == m_ + 1, Err::DegreeMismatch, "modulus must have degree m");
            for (fel c : modulus)
                require(c < p_, Err::InvalidParams, "modulus coefficient out of range");
            require(modulus[m_] == 1, Err::DegreeMismatch, "modulus must be monic");
            require(is_irreducible(modulus), Err::ReducibleModulus, "modulus is reducible over F_p");
            modulus_ = std::move(modulus);
        }
        build_tables();
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<fel>& modulus() const { return modulus_; }

    bool operator==(const Field& o) const { return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    fel add(fel a, fel b) const {
        if (m_ == 1) {
            fel s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_ext(a, b);
    }

    fel neg(fel a) const {
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        fel r = 0, pw = 1;
        fel x = a;
        for (std::uint32_t i = 0; i < m_; ++i) {
            fel d = x % p_;
            x /= p_;
            r += (d == 0 ? 0 : p_ - d) * pw;
            pw *= p_;
        }
        return r;
    }

    fel sub(fel a, fel b) const { return add(a, neg(b)); }

    fel mul(fel a, fel b) const {
        if (!mul8_.empty()) return mul8_[a * q_ + b];
        if (m_ == 1) return static_cast<fel>((std::uint64_t)a * b % p_);
        if (!log_.empty()) {
            if (a == 0 || b == 0) return 0;
            return exp_[log_[a] + log_[b]];
        }
        return mul_slow(a, b);
    }

    fel inv(fel a) const {
        require(a != 0, Err::DivisionByZero, "inverse of zero");
        if (!inv_.empty()) return inv_[a];
        return pow(a, q_ - 2);
    }

    fel div(fel a, fel b) const { return mul(a, inv(b)); }

    /// a^e by square-and-multiply; 0^0 = 1.
    fel pow(fel a, std::uint64_t e) const {
        fel r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    fel from_int(std::uint64_t v) const { return static_cast<fel>(v % q_); }

    fel random_element(Rng& rng) const { return static_cast<fel>(rng.below(q_)); }
    fel random_nonzero(Rng& rng) const { return static_cast<fel>(1 + rng.below(q_ - 1)); }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

   private:
    // --- residue-polynomial arithmetic on codes (extension fields) ---

    fel add_ext(fel a, fel b) const {
        fel r = 0, pw = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            fel s = a % p_ + b % p_;
            if (s >= p_) s -= p_;
            r += s * pw;
            a /= p_;
            b /= p_;
            pw *= p_;
        }
        return r;
    }

    std::vector<fel> digits(fel a) const {
        std::vector<fel> d(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    fel from_digits(const std::vector<fel>& d) const {
        fel r = 0;
        for (std::uint32_t i = m_; i-- > 0;) r = r * p_ + (i < d.size() ? d[i] % p_ : 0);
        return r;
    }

    fel mul_slow(fel a, fel b) const {
        std::vector<fel> da = digits(a), db = digits(b);
        std::vector<fel> prod(2 * m_ - 1, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < m_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        // reduce modulo the modulus polynomial
        for (std::uint32_t d = 2 * m_ - 2; d >= m_ && d < prod.size(); --d) {
            fel c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (std::uint32_t j = 0; j < m_; ++j) {
                fel t = (c * (p_ - modulus_[j])) % p_;
                prod[d - m_ + j] = (prod[d - m_ + j] + t) % p_;
            }
        }
        prod.resize(m_);
        return from_digits(prod);
    }

    // mod-p polynomial helpers used only for the irreducibility check
    static std::vector<fel> poly_mod(std::vector<fel> a, const std::vector<fel>& b, std::uint32_t p) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        while (a.size() >= b.size()) {
            fel lead = a.back();
            if (lead != 0) {
                // b is monic
                std::size_t shift = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) {
                    fel t = (lead * b[i]) % p;
                    a[shift + i] = (a[shift + i] + p - t) % p;
                }
            }
            a.pop_back();
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        return a;
    }

    bool is_irreducible(const std::vector<fel>& mod) const {
        // trial division by every monic polynomial of degree 1..m/2
        for (std::uint32_t d = 1; 2 * d <= m_; ++d) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p_;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<fel> divisor(d + 1);
                std::uint64_t x = idx;
                for (std::uint32_t i = 0; i < d; ++i) {
                    divisor[i] = static_cast<fel>(x % p_);
                    x /= p_;
                }
                divisor[d] = 1;
                if (poly_mod(mod, divisor, p_).empty()) return false;
            }
        }
        return true;
    }

    void build_tables() {
        if (q_ <= 256) {
            mul8_.resize(static_cast<std::size_t>(q_) * q_);
            for (fel a = 0; a < q_; ++a)
                for (fel b = 0; b < q_; ++b)
                    mul8_[a * q_ + b] =
                        static_cast<std::uint8_t>(m_ == 1 ? (std::uint64_t)a * b % p_ : mul_slow(a, b));
        } else if (m_ > 1 && q_ <= (1u << 16)) {
            // log/antilog tables over a generator of the multiplicative group
            fel g = find_generator();
            log_.assign(q_, 0);
            exp_.assign(2 * (q_ - 1), 0);
            fel x = 1;
            for (std::uint32_t i = 0; i < q_ - 1; ++i) {
                exp_[i] = x;
                exp_[i + q_ - 1] = x;
                log_[x] = i;
                x = mul_slow(x, g);
            }
        }
        if (q_ <= (1u << 16)) {
            inv_.assign(q_, 0);
            for (fel a = 1; a < q_; ++a) inv_[a] = pow_no_table(a, q_ - 2);
        }
    }

    fel mul_no_table(fel a, fel b) const {
        if (m_ == 1) return static_cast<fel>((std::uint64_t)a * b % p_);
        if (!log_.empty()) {
            if (a == 0 || b == 0) return 0;
            return exp_[log_[a] + log_[b]];
        }
        return mul_slow(a, b);
    }

    fel pow_no_table(fel a, std::uint64_t e) const {
        fel r = 1, base = a;
        while (e) {
            if (e & 1) r = mul_no_table(r, base);
            base = mul_no_table(base, base);
            e >>= 1;
        }
        return r;
    }

    fel find_generator() const {
        std::uint32_t n = q_ - 1;
        std::vector<std::uint32_t> primes;
        std::uint32_t x = n;
        for (std::uint32_t d = 2; (std::uint64_t)d * d <= x; ++d)
            while (x % d == 0) {
                if (primes.empty() || primes.back() != d) primes.push_back(d);
                x /= d;
            }
        if (x > 1) primes.push_back(x);
        for (fel g = 1; g < q_; ++g) {
            bool ok = true;
            for (std::uint32_t pr : primes)
                if (pow_no_table(g, n / pr) == 1) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
        fail(Err::InvalidParams, "no multiplicative generator found");
    }

    std::uint32_t p_, m_, q_;
    std::vector<fel> modulus_;
    std::vector<std::uint8_t> mul8_;
    std::vector<fel> inv_;
    std::vector<std::uint32_t> log_;
    std::vector<fel> exp_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(std::uint32_t p) { return std::make_shared<Field>(p); }

inline FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::vector<fel> modulus) {
    return std::make_shared<Field>(p, m, std::move(modulus));
}

}  // namespace tgrs
