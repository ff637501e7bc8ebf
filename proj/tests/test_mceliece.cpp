#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tgrs/mceliece.hpp"

using namespace tgrs;

TEST_CASE("keygen produces full-rank scrambled generators") {
    FieldPtr f31 = make_field(31);
    KeygenSpec spec;
    spec.n = 20;
    spec.k = 7;
    spec.ell = 1;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto [sk, pk] = keygen(f31, spec, seed);
        CHECK(rref(pk.g_pub).rank == 7);
        CHECK(pk.w_err == (20 - 7) / 2);
        // the public matrix leaks only the row space
        CHECK(LinearCode::from_generator(pk.g_pub) == tgrs_code(sk));
    }
}

TEST_CASE("keygen is deterministic per seed") {
    FieldPtr f31 = make_field(31);
    KeygenSpec spec;
    spec.n = 18;
    spec.k = 6;
    spec.ell = 1;
    auto [sk1, pk1] = keygen(f31, spec, 99);
    auto [sk2, pk2] = keygen(f31, spec, 99);
    CHECK(sk1.grs.alpha == sk2.grs.alpha);
    CHECK(sk1.grs.mult == sk2.grs.mult);
    CHECK(sk1.twists == sk2.twists);
    CHECK(sk1.hooks == sk2.hooks);
    CHECK(sk1.coeffs == sk2.coeffs);
    CHECK(pk1.g_pub == pk2.g_pub);

    auto [sk3, pk3] = keygen(f31, spec, 100);
    CHECK(pk3.g_pub != pk1.g_pub);
}

TEST_CASE("explicit twist parameters are honored") {
    FieldPtr f31 = make_field(31);
    KeygenSpec spec;
    spec.n = 20;
    spec.k = 7;
    spec.ell = 1;
    spec.twists = {5};
    spec.hooks = {3};
    spec.coeffs = {11};
    auto [sk, pk] = keygen(f31, spec, 1);
    CHECK(sk.twists == std::vector<std::size_t>{5});
    CHECK(sk.hooks == std::vector<std::size_t>{3});
    CHECK(sk.coeffs == std::vector<fel>{11});
}

TEST_CASE("encryption adds exactly w_err errors") {
    FieldPtr f31 = make_field(31);
    KeygenSpec spec;
    spec.n = 20;
    spec.k = 7;
    auto [sk, pk] = keygen(f31, spec, 5);
    Rng mrng = Rng::stream(50, phase::kTest, 0);
    Word msg(7);
    for (fel& v : msg) v = f31->random_element(mrng);
    Word clean = pk.g_pub.mul_vec_left(msg);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Word c = encrypt(pk, msg, seed);
        std::size_t wt = 0;
        for (std::size_t i = 0; i < c.size(); ++i) wt += c[i] != clean[i];
        CHECK(wt == pk.w_err);
    }
    CHECK_THROWS_MATCHES(encrypt(pk, Word(6, 0), 0), Error, HasErr(Err::LengthMismatch));
}

TEST_CASE("zero-error edge case") {
    FieldPtr f7 = make_field(7);
    KeygenSpec spec;
    spec.n = 5;
    spec.k = 4;  // n - k = 1, so w_err = 0
    auto [sk, pk] = keygen(f7, spec, 3);
    CHECK(pk.w_err == 0);
    Word msg{1, 2, 3, 4};
    CHECK(encrypt(pk, msg, 9) == pk.g_pub.mul_vec_left(msg));
}

TEST_CASE("decrypt inverts encrypt") {
    FieldPtr f31 = make_field(31);
    KeygenSpec spec;
    spec.n = 30;
    spec.k = 10;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto [sk, pk] = keygen(f31, spec, seed);
        Rng mrng = Rng::stream(51, phase::kTest, seed);
        Word msg(10);
        for (fel& v : msg) v = f31->random_element(mrng);
        Word c = encrypt(pk, msg, seed ^ 0x5555);
        CHECK(decrypt(sk, pk, c) == msg);
    }
}

TEST_CASE("zero message round trip") {
    FieldPtr f31 = make_field(31);
    KeygenSpec spec;
    spec.n = 20;
    spec.k = 7;
    auto [sk, pk] = keygen(f31, spec, 17);
    Word zero(7, 0);
    Word clean = pk.g_pub.mul_vec_left(zero);
    CHECK(decrypt(sk, pk, clean) == zero);
}

TEST_CASE("tampered ciphertext beyond the radius is rejected") {
    FieldPtr f13 = make_field(13);
    KeygenSpec spec;
    spec.n = 8;
    spec.k = 3;
    auto [sk, pk] = keygen(f13, spec, 2);
    LinearCode c = tgrs_code(sk);
    std::size_t radius = pk.w_err;
    // brute-force a word beyond the radius of every codeword
    std::uint64_t total = 13 * 13 * 13;
    bool found = false;
    for (std::uint64_t probe = 0; probe < (1u << 20) && !found; ++probe) {
        Rng rng = Rng::stream(52, phase::kTest, probe);
        Word y(8);
        for (fel& v : y) v = f13->random_element(rng);
        std::size_t best = 9;
        for (std::uint64_t x = 0; x < total; ++x) {
            Word coeffs(3);
            std::uint64_t v = x;
            for (std::size_t i = 0; i < 3; ++i) {
                coeffs[i] = static_cast<fel>(v % 13);
                v /= 13;
            }
            Word w = c.word_from_coeffs(coeffs);
            std::size_t d = 0;
            for (std::size_t i = 0; i < 8; ++i) d += w[i] != y[i];
            best = std::min(best, d);
            if (best <= radius) break;
        }
        if (best > radius) {
            found = true;
            CHECK_THROWS_MATCHES(decrypt(sk, pk, y), Error, HasErr(Err::DecodeFailure));
        }
    }
    CHECK(found);
}
