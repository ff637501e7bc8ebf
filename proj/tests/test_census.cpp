#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tgrs/census.hpp"

using namespace tgrs;

namespace {

Poly random_nonzero_bounded(const FieldPtr& f, std::size_t k, Rng& rng) {
    for (;;) {
        std::vector<fel> c(k);
        for (fel& v : c) v = f->random_element(rng);
        Poly p(f, std::move(c));
        if (!p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("dimension formula for shifted spans") {
    FieldPtr f5 = make_field(5);
    {
        Poly x = Poly::monomial(f5, 1);
        DimSumCheck r = dim_sum_check(x, x, 2);
        CHECK(r.measured == 2);
        CHECK(r.predicted == 2);
    }
    {
        Poly x = Poly::monomial(f5, 1);
        Poly one = Poly::constant(f5, 1);
        DimSumCheck r = dim_sum_check(x, one, 2);
        CHECK(r.measured == 3);
        CHECK(r.predicted == 3);
    }
    CHECK_THROWS_MATCHES(dim_sum_check(Poly::zero(f5), Poly::constant(f5, 1), 2), Error,
                         HasErr(Err::ZeroPolynomial));

    // the formula is exact, not probabilistic
    for (std::uint64_t s = 0; s < 500; ++s) {
        Rng rng = Rng::stream(80, phase::kTest, s);
        std::size_t k = 2 + rng.below(7);
        Poly a = random_nonzero_bounded(f5, k, rng);
        Poly b = random_nonzero_bounded(f5, k, rng);
        DimSumCheck r = dim_sum_check(a, b, k);
        CHECK(r.measured == r.predicted);
    }
}

TEST_CASE("gcd census at q = 3") {
    FieldPtr f3 = make_field(3);
    GcdCensus c = gcd_census(f3, 2, 2);
    CHECK(c.total == 324);  // (q-1)^2 q^4
    CHECK(c.counts.at(0) == 216);  // (q-1)^3 q^3
    CHECK(c.counts.at(1) == 72);   // (q-1)^3 q^2
    // boundary i = s = u: enumeration yields 36, the generic formula gives 24
    CHECK(c.counts.at(2) == 36);

    // the closed form (q-1)^3 q^{s+u-i-1} is exact for i < min(s, u); at
    // i = min(s, u) the reduction leaves a degree-0 cofactor, which is coprime
    // to everything, and enumeration gives (q-1)^2 q^{max(s,u)} instead
    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t u = 1; u <= 3; ++u) {
            GcdCensus cc = gcd_census(f3, s, u);
            std::uint64_t total_pred = 4;
            for (std::size_t e = 0; e < s + u; ++e) total_pred *= 3;
            CHECK(cc.total == total_pred);
            for (std::size_t i = 0; i <= std::min(s, u); ++i) {
                std::uint64_t measured = cc.counts.count(i) ? cc.counts.at(i) : 0;
                if (i < std::min(s, u)) {
                    std::uint64_t pred = 8;
                    for (std::size_t e = 0; e + i + 1 < s + u; ++e) pred *= 3;
                    CHECK(measured == pred);
                } else {
                    std::uint64_t boundary = 4;
                    for (std::size_t e = 0; e < std::max(s, u); ++e) boundary *= 3;
                    CHECK(measured == boundary);
                }
            }
        }
}

TEST_CASE("census size guard") {
    FieldPtr f5 = make_field(5);
    CHECK_THROWS_MATCHES(gcd_census(f5, 6, 6), Error, HasErr(Err::TooLarge));
}

TEST_CASE("density of small-gcd pairs") {
    FieldPtr f3 = make_field(3);
    CHECK(density_below(f3, 2, 2, 1) == Rational::of(288, 324));
    CHECK(density_below(f3, 2, 2, 1) == Rational::of(8, 9));  // 1 - 1/q^2
    CHECK(density_below(f3, 2, 2, 0) == Rational::of(2, 3));  // coprime: 1 - 1/q
    CHECK(density_below(f3, 3, 2, 0) == Rational::of(2, 3));
    // boundary j = s = u: everything has gcd degree <= 2, density 1 not 1 - q^-3
    CHECK(density_below(f3, 2, 2, 2) == Rational::of(1, 1));
}

TEST_CASE("gcd condition branches") {
    FieldPtr f31 = make_field(31);
    // t > k: deg f = 9, deg g = 7, gcd degree 2 -> 2 < 9 - 5
    Poly d(f31, {1, 1, 1});  // degree 2
    Poly a = d.mul(Poly(f31, {1, 2, 0, 0, 0, 0, 0, 1}));  // degree 9, coprime cofactor
    Poly b = d.mul(Poly(f31, {2, 1, 0, 0, 0, 3}));        // degree 7
    std::size_t k = 10;
    if (poly_gcd(a, b).deg() == 2) {
        CHECK(gcd_condition(a, b, k, k + 1));
    }

    // boundary: gcd degree exactly max - 5 fails the strict inequality
    Poly f9 = Poly::monomial(f31, 9);
    Poly g8 = Poly::monomial(f31, 8);  // gcd = x^8, degree 8; max - 5 = 4
    CHECK_FALSE(gcd_condition(f9, g8, 10, 11));

    // t = k - 1 < k with s = u = k - 1, coprime: true iff k - 1 > (k - t) + 5
    for (std::size_t kk : {7ul, 8ul, 9ul}) {
        Poly f_(f31, std::vector<fel>(kk, 0));
        Poly fkm1 = Poly::monomial(f31, kk - 1);
        Poly gkm1 = Poly::monomial(f31, kk - 1).add(Poly::constant(f31, 1));
        REQUIRE(poly_gcd(fkm1, gkm1).deg() == 0);
        bool expect = (kk - 1) > 6;
        CHECK(gcd_condition(fkm1, gkm1, kk, kk - 1) == expect);
    }
}

TEST_CASE("gcd condition density estimate") {
    FieldPtr f11 = make_field(11);
    McEstimate est = gcd_condition_density_mc(f11, 17, 17, 20000, 5);
    CHECK(est.samples == 20000);
    // true density is at least 1 - 1/q^7
    CHECK(est.estimate() >= 1.0 - 1.0 / 19487171.0 - 3.0 * est.sigma());
    CHECK_THROWS_MATCHES(gcd_condition_density_mc(f11, 17, 17, 0, 5), Error,
                         HasErr(Err::InvalidParams));
    FieldPtr f5 = make_field(5);
    CHECK_THROWS_MATCHES(gcd_condition_density_mc(f5, 17, 17, 10, 5), Error,
                         HasErr(Err::InvalidParams));

    // threading does not change the tally
    McEstimate est2 = gcd_condition_density_mc(f11, 17, 17, 20000, 5, 4);
    CHECK(est2.hits == est.hits);
}

TEST_CASE("triple census classification") {
    FieldPtr f17 = make_field(17);
    std::size_t k = 17, t = 17;
    Poly c = Poly::monomial(f17, 4).add(Poly::monomial(f17, k - 1 + t, 3));
    TripleCensus tc = triple_census(f17, k, t, c, 40000, 9);
    CHECK(tc.samples == 40000);
    CHECK(tc.accepted + tc.psi == tc.samples);
    CHECK(tc.in_subspace3 + tc.gamma == tc.accepted);
    // q^-3 of the samples land in the subspace triple on average
    double expected_in3 = 40000.0 / (17.0 * 17.0 * 17.0);
    CHECK(double(tc.in_subspace3) > expected_in3 / 4.0);
    CHECK(double(tc.in_subspace3) < expected_in3 * 4.0);

    // identical tallies for any thread count
    TripleCensus tc4 = triple_census(f17, k, t, c, 40000, 9, 0, 4);
    CHECK(tc4.accepted == tc.accepted);
    CHECK(tc4.in_subspace3 == tc.in_subspace3);
    CHECK(tc4.psi == tc.psi);

    // early stop at a block boundary once the target is reached
    TripleCensus tstop = triple_census(f17, k, t, c, 40000, 9, 1);
    CHECK(tstop.accepted >= 1);
    CHECK(tstop.samples <= 40000);
}

TEST_CASE("subspace triples always pass the product test") {
    FieldPtr f17 = make_field(17);
    std::size_t k = 17, t = 17;
    Poly c = Poly::monomial(f17, 4).add(Poly::monomial(f17, k - 1 + t, 3));
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < k; ++i)
        if (i != 4) gens.push_back(Poly::monomial(f17, i));
    gens.push_back(c);
    PolySpace r = PolySpace::span(f17, gens);
    PolySpace eprime = PolySpace::monomials(f17, k, {4});

    Rng rng = Rng::stream(81, phase::kTest, 0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Poly> fs;
        for (int i = 0; i < 3; ++i) {
            Poly p = Poly::zero(f17);
            for (const Poly& b : eprime.basis())
                p = p.add(b.scale(f17->random_element(rng)));
            fs.push_back(std::move(p));
        }
        CHECK(r.triple_product_dim(fs[0], fs[1], fs[2], 2 * k + 2) <= 2 * k + 2);
    }

    // a triple containing c itself blows past the threshold almost surely
    std::size_t psi_hits = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Poly f2 = Poly::zero(f17), f3 = Poly::zero(f17);
        for (const Poly& b : eprime.basis()) {
            f2 = f2.add(b.scale(f17->random_element(rng)));
            f3 = f3.add(b.scale(f17->random_element(rng)));
        }
        if (r.triple_product_dim(c, f2, f3, 2 * k + 2) > 2 * k + 2) ++psi_hits;
    }
    CHECK(psi_hits >= 45);
}

TEST_CASE("exponent transfer between full and restricted densities") {
    CHECK(exponent_transfer_holds(11, 7, 1.0, 1.0));
    CHECK(exponent_transfer_holds(11, 7, 0.5, 0.0));  // premise not established
    CHECK_FALSE(exponent_transfer_holds(11, 7, 1.0, 0.9));
    CHECK_THROWS_MATCHES(exponent_transfer_holds(11, 2, 1.0, 1.0), Error,
                         HasErr(Err::InvalidParams));
}
