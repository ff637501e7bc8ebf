/**************************************************************************
 * poly_space.hpp
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
#include <set>

#include "poly.hpp"

namespace tgrs {

/// Finite-dimensional subspace of F_q[x] in echelon-by-degree canonical form:
/// basis polynomials have strictly increasing degrees, are monic, and each has
/// zero coefficient at every other basis member's degree. The canonical basis
/// is unique, so equality of spaces is equality of bases.
class PolySpace {
   public:
    explicit PolySpace(FieldPtr f) : f_(std::move(f)) {}

    static PolySpace span(FieldPtr f, const std::vector<Poly>& gens) {
        PolySpace s(std::move(f));
        s.basis_ = echelonize(s.f_, gens);
        return s;
    }

    /// F_q[x]_{<k}
    static PolySpace bounded_degree(FieldPtr f, std::size_t k) {
        std::vector<Poly> b;
        for (std::size_t i = 0; i < k; ++i) b.push_back(Poly::monomial(f, i));
        PolySpace s(std::move(f));
        s.basis_ = std::move(b);  // already canonical
        return s;
    }

    /// span{x^i : i < k, i not a hook}
    static PolySpace monomials(FieldPtr f, std::size_t k, const std::vector<std::size_t>& hooks) {
        std::set<std::size_t> h(hooks.begin(), hooks.end());
        std::vector<Poly> b;
        for (std::size_t i = 0; i < k; ++i)
            if (!h.count(i)) b.push_back(Poly::monomial(f, i));
        PolySpace s(std::move(f));
        s.basis_ = std::move(b);
        return s;
    }

    const FieldPtr& field() const { return f_; }
    const std::vector<Poly>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    int max_deg() const { return basis_.empty() ? Poly::kDegNegInf : basis_.back().deg(); }

    bool operator==(const PolySpace& o) const { return basis_ == o.basis_; }
    bool operator!=(const PolySpace& o) const { return !(*this == o); }

    bool contains(const Poly& p) const {
        Poly r = reduce(p);
        return r.is_zero();
    }

    /// remainder of p after eliminating all basis leading terms
    Poly reduce(Poly p) const {
        for (auto it = basis_.rbegin(); it != basis_.rend(); ++it) {
            if (p.is_zero()) break;
            fel c = p.coeff(static_cast<std::size_t>(it->deg()));
            if (c != 0) p = p.sub(it->scale(c));
        }
        return p;
    }

    PolySpace sum(const PolySpace& o) const {
        std::vector<Poly> gens = basis_;
        gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
        return span(f_, gens);
    }

    /// <fg : f in this, g in other>
    PolySpace product(const PolySpace& o) const {
        std::vector<Poly> gens;
        bool square = (this == &o) || (*this == o);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = square ? i : 0; j < o.basis_.size(); ++j)
                gens.push_back(basis_[i].mul(o.basis_[j]));
        return span(f_, gens);
    }

    PolySpace square() const { return product(*this); }

    /// dim of <f1,f2,f3>·this at the polynomial level, early-aborted at cap
    std::size_t triple_product_dim(const Poly& f1, const Poly& f2, const Poly& f3,
                                   std::size_t cap) const {
        int dmax = Poly::kDegNegInf;
        for (const Poly* f : {&f1, &f2, &f3})
            if (!f->is_zero() && !basis_.empty()) dmax = std::max(dmax, f->deg() + max_deg());
        if (dmax == Poly::kDegNegInf) return 0;
        std::size_t width = static_cast<std::size_t>(dmax) + 1;
        RankTracker rk(f_, width);
        for (const Poly* f : {&f1, &f2, &f3}) {
            if (f->is_zero()) continue;
            for (const Poly& b : basis_) {
                Poly p = f->mul(b);
                Word row(width, 0);
                for (std::size_t i = 0; i < p.coeffs().size(); ++i) row[i] = p.coeffs()[i];
                rk.add(std::move(row));
                if (rk.rank() > cap) return cap + 1;
            }
        }
        return rk.rank();
    }

    /// Intersection with the ideal (p_I), p_I = prod_{i in I}(x - alpha_i):
    /// the multiples of p_I inside this space. Since the alpha_i are distinct,
    /// membership is vanishing at every alpha_i with i in I.
    PolySpace multiples_of_vanishing(const std::vector<fel>& alpha,
                                     const std::vector<std::size_t>& I) const {
        if (I.empty()) return *this;
        Matrix evals(f_, basis_.size(), I.size());
        for (std::size_t r = 0; r < basis_.size(); ++r)
            for (std::size_t c = 0; c < I.size(); ++c) {
                require(I[c] < alpha.size(), Err::InvalidParams, "shortening index out of range");
                evals.at(r, c) = basis_[r].eval(alpha[I[c]]);
            }
        // combos x with x * evals = 0
        Matrix combos = kernel_basis(evals.transpose());
        std::vector<Poly> gens;
        for (std::size_t r = 0; r < combos.rows(); ++r) {
            Poly acc = Poly::zero(f_);
            for (std::size_t c = 0; c < basis_.size(); ++c) {
                fel v = combos.at(r, c);
                if (v != 0) acc = acc.add(basis_[c].scale(v));
            }
            gens.push_back(std::move(acc));
        }
        return span(f_, gens);
    }

   private:
    static std::vector<Poly> echelonize(const FieldPtr& f, const std::vector<Poly>& gens) {
        int dmax = Poly::kDegNegInf;
        for (const Poly& g : gens) dmax = std::max(dmax, g.deg());
        if (dmax == Poly::kDegNegInf) return {};
        std::size_t width = static_cast<std::size_t>(dmax) + 1;
        // columns reversed so that RREF pivots on the highest degree first
        Matrix m(f, gens.size(), width);
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (std::size_t i = 0; i < gens[r].coeffs().size(); ++i)
                m.at(r, width - 1 - i) = gens[r].coeffs()[i];
        RrefResult rr = rref(std::move(m));
        std::vector<Poly> out;
        for (std::size_t r = rr.rank; r-- > 0;) {
            std::vector<fel> c(width);
            for (std::size_t j = 0; j < width; ++j) c[width - 1 - j] = rr.mat.at(r, j);
            out.emplace_back(f, std::move(c));
        }
        return out;  // increasing degree
    }

    FieldPtr f_;
    std::vector<Poly> basis_;
};

}  // namespace tgrs
