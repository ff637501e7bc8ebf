#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tgrs/poly_space.hpp"

using namespace tgrs;

namespace {

Poly random_poly(const FieldPtr& f, std::size_t deg_bound, Rng& rng) {
    std::vector<fel> c(deg_bound);
    for (fel& v : c) v = f->random_element(rng);
    return Poly(f, std::move(c));
}

Poly random_nonzero_poly(const FieldPtr& f, std::size_t deg_bound, Rng& rng) {
    for (;;) {
        Poly p = random_poly(f, deg_bound, rng);
        if (!p.is_zero()) return p;
    }
}

// dimension oracle that avoids the echelon machinery: rank of the evaluation
// matrix of the basis at deg+1 fixed points (valid when q > max degree)
std::size_t dim_by_evaluation(const std::vector<Poly>& gens, std::size_t max_deg) {
    const FieldPtr& f = gens.front().field();
    REQUIRE(f->q() > max_deg);
    Matrix m(f, gens.size(), max_deg + 1);
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t x = 0; x <= max_deg; ++x) m.at(r, x) = gens[r].eval(static_cast<fel>(x));
    return rref(m).rank;
}

}  // namespace

TEST_CASE("degree sentinel and normalization") {
    FieldPtr f = make_field(7);
    Poly z = Poly::zero(f);
    CHECK(z.deg() == Poly::kDegNegInf);
    CHECK(Poly(f, {3, 0, 0}).deg() == 0);
    CHECK(Poly(f, {0, 0, 0}).is_zero());
}

TEST_CASE("gcd") {
    FieldPtr f7 = make_field(7);
    // gcd(x^2 - 1, x - 1) = x + 6 (monic form of x - 1)
    Poly a(f7, {6, 0, 1});
    Poly b(f7, {6, 1});
    CHECK(poly_gcd(a, b) == Poly(f7, {6, 1}));
    CHECK(poly_gcd(a, Poly::constant(f7, 1)) == Poly::constant(f7, 1));
    CHECK_THROWS_MATCHES(poly_gcd(Poly::zero(f7), Poly::zero(f7)), Error, HasErr(Err::BothZero));

    // divisibility property: gcd divides both; any common divisor divides gcd
    FieldPtr f5 = make_field(5);
    for (std::uint64_t s = 0; s < 500; ++s) {
        Rng rng = Rng::stream(10, phase::kTest, s);
        Poly d = random_nonzero_poly(f5, 1 + rng.below(3), rng);
        Poly p = random_nonzero_poly(f5, 1 + rng.below(5), rng).mul(d);
        Poly q = random_nonzero_poly(f5, 1 + rng.below(5), rng).mul(d);
        Poly g = poly_gcd(p, q);
        CHECK(p.divrem(g).second.is_zero());
        CHECK(q.divrem(g).second.is_zero());
        CHECK(g.divrem(poly_gcd(g, d)).second.is_zero());
        CHECK(poly_gcd(g, d) == d.monic());
    }
}

TEST_CASE("evaluation map") {
    FieldPtr f13 = make_field(13);
    std::vector<fel> alpha{0, 1, 2, 3, 4, 5};
    std::vector<fel> ones(6, 1);
    Poly f(f13, {0, 1, 0, 0, 1});  // x + x^4
    CHECK(ev(*f13, alpha, ones, f) == Word{0, 2, 5, 6, 0, 6});

    Word v{3, 1, 4, 1, 5, 9};
    CHECK(ev(*f13, alpha, v, Poly::constant(f13, 1)) == v);

    FieldPtr f7 = make_field(7);
    std::vector<fel> a7{0, 1, 2, 3, 4, 5, 6}, ones7(7, 1);
    CHECK(ev(*f7, a7, ones7, Poly::monomial(f7, 6)) == Word{0, 1, 1, 1, 1, 1, 1});

    CHECK_THROWS_MATCHES(check_support({0, 0, 1}, {1, 1, 1}), Error, HasErr(Err::RepeatedAlpha));
    CHECK_THROWS_MATCHES(check_support({0, 1, 2}, {1, 0, 1}), Error, HasErr(Err::ZeroMultiplier));
}

TEST_CASE("interpolation inverts evaluation") {
    FieldPtr f13 = make_field(13);
    std::vector<fel> alpha{2, 5, 7, 11, 0, 1, 3, 9};
    std::vector<fel> v{1, 2, 3, 4, 5, 6, 7, 8};
    for (std::uint64_t s = 0; s < 500; ++s) {
        Rng rng = Rng::stream(11, phase::kTest, s);
        Poly f = random_poly(f13, 8, rng);
        Word c = ev(*f13, alpha, v, f);
        CHECK(interpolate(f13, alpha, v, c) == f);
    }
    CHECK(interpolate(f13, alpha, v, v) == Poly::constant(f13, 1));
    CHECK(interpolate(f13, alpha, v, Word(8, 0)).is_zero());
}

TEST_CASE("evaluation is a ring morphism for unit multipliers") {
    FieldPtr f13 = make_field(13);
    std::vector<fel> alpha{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<fel> ones(alpha.size(), 1);
    for (std::uint64_t s = 0; s < 100; ++s) {
        Rng rng = Rng::stream(12, phase::kTest, s);
        Poly f = random_poly(f13, 4, rng), g = random_poly(f13, 4, rng);
        Word lhs = ev(*f13, alpha, ones, f.mul(g));
        Word rhs = ev(*f13, alpha, ones, f);
        Word gv = ev(*f13, alpha, ones, g);
        for (std::size_t i = 0; i < alpha.size(); ++i) rhs[i] = f13->mul(rhs[i], gv[i]);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("poly space canonical form and equality") {
    FieldPtr f7 = make_field(7);
    PolySpace p = PolySpace::span(f7, {Poly(f7, {1, 1}), Poly(f7, {2, 1}), Poly(f7, {0, 0, 3})});
    CHECK(p.dim() == 3);
    // canonical basis has strictly increasing degrees and is reduced
    CHECK(p == PolySpace::bounded_degree(f7, 3));

    PolySpace mon = PolySpace::monomials(f7, 5, {2});
    CHECK(mon.dim() == 4);
    CHECK(mon.contains(Poly::monomial(f7, 3)));
    CHECK_FALSE(mon.contains(Poly::monomial(f7, 2)));
}

TEST_CASE("products of bounded-degree spaces") {
    FieldPtr f13 = make_field(13);
    for (std::size_t k : {2, 3, 5}) {
        for (std::size_t l : {1, 2, 4}) {
            PolySpace a = PolySpace::bounded_degree(f13, k);
            PolySpace b = PolySpace::bounded_degree(f13, l);
            CHECK(a.product(b) == PolySpace::bounded_degree(f13, k + l - 1));
        }
    }
    PolySpace p = PolySpace::monomials(f13, 6, {3});
    CHECK(p.product(PolySpace::span(f13, {Poly::constant(f13, 1)})) == p);
}

TEST_CASE("square of a monomial space with a generic gap is full") {
    FieldPtr f13 = make_field(13);
    PolySpace mon = PolySpace::monomials(f13, 5, {2});
    PolySpace sq = mon.square();
    CHECK(sq.dim() == 9);
    CHECK(sq == PolySpace::bounded_degree(f13, 9));
    // cross-check the dimension through evaluation ranks
    std::vector<Poly> gens;
    for (const Poly& a : mon.basis())
        for (const Poly& b : mon.basis()) gens.push_back(a.mul(b));
    CHECK(dim_by_evaluation(gens, 8) == 9);
}

TEST_CASE("square dimension bound") {
    FieldPtr f7 = make_field(7);
    for (std::uint64_t s = 0; s < 50; ++s) {
        Rng rng = Rng::stream(13, phase::kTest, s);
        std::vector<Poly> gens;
        std::size_t d = 2 + rng.below(4);
        for (std::size_t i = 0; i < d; ++i) gens.push_back(random_poly(f7, 6, rng));
        PolySpace p = PolySpace::span(f7, gens);
        std::size_t dim = p.dim();
        CHECK(p.square().dim() <= dim * (dim + 1) / 2);
    }
}

TEST_CASE("shortening a polynomial space to multiples of p_I") {
    FieldPtr f7 = make_field(7);
    std::vector<fel> alpha{0, 1, 2, 3, 4, 5, 6};
    PolySpace p = PolySpace::bounded_degree(f7, 3);
    CHECK(p.multiples_of_vanishing(alpha, {}) == p);

    // I = {position of alpha = 0}: multiples of x below degree 3
    PolySpace sh = p.multiples_of_vanishing(alpha, {0});
    CHECK(sh == PolySpace::span(f7, {Poly::monomial(f7, 1), Poly::monomial(f7, 2)}));
}

TEST_CASE("generic twisted spaces lose exactly |I| dimensions when shortened") {
    FieldPtr f17 = make_field(17);
    std::vector<fel> alpha;
    for (fel a = 0; a < 14; ++a) alpha.push_back(a);
    for (std::uint64_t s = 0; s < 40; ++s) {
        Rng rng = Rng::stream(14, phase::kTest, s);
        std::size_t k = 5 + rng.below(3);
        std::size_t hook = rng.below(k);
        std::size_t twist = 1 + rng.below(4);
        Poly tw = Poly::monomial(f17, hook).add(
            Poly::monomial(f17, k - 1 + twist, f17->random_nonzero(rng)));
        std::vector<Poly> gens;
        for (std::size_t i = 0; i < k; ++i)
            if (i != hook) gens.push_back(Poly::monomial(f17, i));
        gens.push_back(tw);
        PolySpace p = PolySpace::span(f17, gens);
        std::size_t a_size = 1 + rng.below(k - 1);
        std::vector<std::size_t> I;
        for (std::size_t i = 0; i < a_size; ++i) I.push_back(i);
        CHECK(p.multiples_of_vanishing(alpha, I).dim() == p.dim() - a_size);
    }
}
