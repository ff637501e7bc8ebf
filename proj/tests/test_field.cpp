#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tgrs/field.hpp"

using namespace tgrs;

TEST_CASE("prime field construction") {
    FieldPtr f7 = make_field(7);
    CHECK(f7->q() == 7);
    CHECK(f7->p() == 7);
    CHECK(f7->m() == 1);
}

TEST_CASE("extension field construction and rejection") {
    // x^2 + 1 is irreducible over F_3
    FieldPtr f9 = make_field(3, 2, {1, 0, 1});
    CHECK(f9->q() == 9);

    // x^2 + 2x + 1 = (x+1)^2 is reducible
    CHECK_THROWS_MATCHES(make_field(3, 2, {1, 2, 1}), Error, HasErr(Err::ReducibleModulus));
    CHECK_THROWS_MATCHES(make_field(6), Error, HasErr(Err::NonPrimeP));
    CHECK_THROWS_MATCHES(make_field(3, 2, {1, 0, 0, 1}), Error, HasErr(Err::DegreeMismatch));
}

TEST_CASE("inverses") {
    FieldPtr f7 = make_field(7);
    CHECK(f7->inv(3) == 5);
    FieldPtr f13 = make_field(13);
    CHECK(f13->inv(2) == 7);
    CHECK_THROWS_MATCHES(f7->inv(0), Error, HasErr(Err::DivisionByZero));

    // in F_9 = F_3[x]/(x^2+1): x * 2x = 2x^2 = 1, with x encoded as 3
    FieldPtr f9 = make_field(3, 2, {1, 0, 1});
    CHECK(f9->mul(3, 6) == 1);
    CHECK(f9->inv(3) == 6);
}

TEST_CASE("powers") {
    FieldPtr f7 = make_field(7);
    CHECK(f7->pow(3, 0) == 1);
    CHECK(f7->pow(0, 0) == 1);
    CHECK(f7->pow(3, 6) == 1);
    FieldPtr f13 = make_field(13);
    CHECK(f13->pow(2, 5) == 6);
}

TEST_CASE("field axioms, exhaustively for small q") {
    for (FieldPtr f : {make_field(5), make_field(3, 2, {1, 0, 1}), make_field(2, 3, {1, 1, 0, 1}),
                       make_field(7, 2, {3, 1, 1})}) {
        const Field& F = *f;
        std::uint32_t q = F.q();
        REQUIRE(q <= 49);
        for (fel a = 0; a < q; ++a) {
            for (fel b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (fel c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
        for (fel a = 1; a < q; ++a) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.inv(F.inv(a)) == a);
            CHECK(F.pow(a, q - 1) == 1);
        }
    }
}

TEST_CASE("log table path matches schoolbook on a larger extension") {
    // F_{2^10}: x^10 + x^3 + 1 is irreducible over F_2
    FieldPtr f = make_field(2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1});
    const Field& F = *f;
    CHECK(F.q() == 1024);
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        fel a = F.random_nonzero(rng), b = F.random_nonzero(rng);
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.mul(F.mul(a, b), F.inv(b)) == a);
        CHECK(F.pow(a, F.q() - 1) == 1);
    }
}
