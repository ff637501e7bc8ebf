/**************************************************************************
 * poly.hpp
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

#include <limits>
#include <vector>

#include "matrix.hpp"

namespace tgrs {

/// Univariate polynomial over F_q, coefficients lowest power first, no
/// trailing zeros. The zero polynomial is the empty list; its degree is the
/// sentinel kDegNegInf (a distinguished "minus infinity", never -1).
class Poly {
   public:
    static constexpr int kDegNegInf = std::numeric_limits<int>::min();

    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<fel> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly constant(FieldPtr f, fel v) { return Poly(std::move(f), {v}); }
    static Poly monomial(FieldPtr f, std::size_t degree, fel coeff = 1) {
        std::vector<fel> c(degree + 1, 0);
        c[degree] = coeff;
        return Poly(std::move(f), std::move(c));
    }

    const FieldPtr& field() const { return f_; }
    const std::vector<fel>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }

    fel coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    fel lead() const { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly add(const Poly& o) const {
        const Field& F = *f_;
        std::vector<fel> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(i), o.coeff(i));
        return Poly(f_, std::move(r));
    }

    Poly sub(const Poly& o) const {
        const Field& F = *f_;
        std::vector<fel> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(coeff(i), o.coeff(i));
        return Poly(f_, std::move(r));
    }

    Poly mul(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero(f_);
        const Field& F = *f_;
        std::vector<fel> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
        }
        return Poly(f_, std::move(r));
    }

    Poly scale(fel s) const {
        const Field& F = *f_;
        if (s == 0) return zero(f_);
        std::vector<fel> r(c_);
        for (fel& v : r) v = F.mul(v, s);
        return Poly(f_, std::move(r));
    }

    Poly shift_up(std::size_t e) const {  // multiply by x^e
        if (is_zero()) return *this;
        std::vector<fel> r(c_.size() + e, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[e + i] = c_[i];
        return Poly(f_, std::move(r));
    }

    Poly monic() const {
        require(!is_zero(), Err::ZeroPolynomial, "monic of zero polynomial");
        return scale(f_->inv(lead()));
    }

    fel eval(fel x) const {
        const Field& F = *f_;
        fel r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = F.add(F.mul(r, x), c_[i]);
        return r;
    }

    /// (quotient, remainder) with deg(r) < deg(d).
    std::pair<Poly, Poly> divrem(const Poly& d) const {
        require(!d.is_zero(), Err::DivisionByZero, "polynomial division by zero");
        const Field& F = *f_;
        std::vector<fel> rem(c_);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        std::vector<fel> quo;
        if (rem.size() >= d.c_.size()) quo.assign(rem.size() - d.c_.size() + 1, 0);
        fel dinv = F.inv(d.lead());
        while (rem.size() >= d.c_.size()) {
            std::size_t sh = rem.size() - d.c_.size();
            fel s = F.mul(rem.back(), dinv);
            quo[sh] = s;
            for (std::size_t j = 0; j < d.c_.size(); ++j)
                rem[sh + j] = F.sub(rem[sh + j], F.mul(s, d.c_[j]));
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldPtr f_;
    std::vector<fel> c_;
};

/// Monic gcd by Euclid's algorithm.
inline Poly poly_gcd(Poly a, Poly b) {
    require(!(a.is_zero() && b.is_zero()), Err::BothZero, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline void check_support(const std::vector<fel>& alpha, const std::vector<fel>& v) {
    require(alpha.size() == v.size(), Err::LengthMismatch, "support and multiplier lengths differ");
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        require(v[i] != 0, Err::ZeroMultiplier, "zero multiplier at position " + std::to_string(i));
        for (std::size_t j = i + 1; j < alpha.size(); ++j)
            require(alpha[i] != alpha[j], Err::RepeatedAlpha,
                    "repeated support value at positions " + std::to_string(i) + "," + std::to_string(j));
    }
}

/// Evaluation map: f -> (v_1 f(a_1), ..., v_n f(a_n)).
inline Word ev(const Field& F, const std::vector<fel>& alpha, const std::vector<fel>& v,
               const Poly& f) {
    Word r(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) r[i] = F.mul(v[i], f.eval(alpha[i]));
    return r;
}

/// Unique f with deg f < n and ev(alpha, v, f) = c (Lagrange on c_i / v_i).
inline Poly interpolate(const FieldPtr& f, const std::vector<fel>& alpha,
                        const std::vector<fel>& v, const Word& c) {
    const Field& F = *f;
    std::size_t n = alpha.size();
    require(c.size() == n, Err::LengthMismatch, "word length mismatch");
    Poly full = Poly::constant(f, 1);
    for (std::size_t i = 0; i < n; ++i)
        full = full.mul(Poly(f, {F.neg(alpha[i]), 1}));
    Poly acc = Poly::zero(f);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        Poly qi = full.divrem(Poly(f, {F.neg(alpha[i]), 1})).first;
        fel denom = F.mul(qi.eval(alpha[i]), v[i]);
        acc = acc.add(qi.scale(F.div(c[i], denom)));
    }
    return acc;
}

}  // namespace tgrs
