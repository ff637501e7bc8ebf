/**************************************************************************
 * mceliece.hpp
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

#include "grs.hpp"

namespace tgrs {

/// Published data: a scrambled generator of the secret twisted code and the
/// error weight the holder can correct.
struct PublicKey {
    Matrix g_pub;       // k x n, rank k
    std::size_t w_err;  // floor((n-k)/2)

    std::size_t n() const { return g_pub.cols(); }
    std::size_t k() const { return g_pub.rows(); }
    const FieldPtr& field() const { return g_pub.field(); }
};

struct KeygenSpec {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t ell = 1;
    // when empty, drawn uniformly at random (hooks distinct, coeffs nonzero)
    std::vector<std::size_t> twists;
    std::vector<std::size_t> hooks;
    std::vector<fel> coeffs;
};

/// Draw a secret twisted key and its scrambled public generator. Scrambling is
/// by a random invertible S only; no column permutation is applied, so the
/// public row space equals the secret code exactly.
inline std::pair<TgrsKey, PublicKey> keygen(const FieldPtr& f, const KeygenSpec& spec,
                                            std::uint64_t seed) {
    require(spec.n >= 2 && spec.k >= 1 && spec.k < spec.n, Err::InvalidParams,
            "need 1 <= k < n");
    require(spec.n <= f->q(), Err::InvalidParams, "n exceeds field size");
    Rng rng = Rng::stream(seed, phase::kKeygen, 0);

    // alpha: uniformly random sequence of distinct elements (partial shuffle)
    std::vector<fel> pool(f->q());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<fel>(i);
    std::vector<fel> alpha(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        std::size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
        alpha[i] = pool[i];
    }
    std::vector<fel> mult(spec.n);
    for (fel& v : mult) v = f->random_nonzero(rng);

    TgrsKey key;
    key.grs = GrsParams{f, std::move(alpha), std::move(mult), spec.k};
    if (!spec.twists.empty()) {
        require(spec.twists.size() == spec.ell && spec.hooks.size() == spec.ell &&
                    spec.coeffs.size() == spec.ell,
                Err::InvalidParams, "explicit twist parameters must match ell");
        key.twists = spec.twists;
        key.hooks = spec.hooks;
        key.coeffs = spec.coeffs;
    } else {
        std::vector<bool> used(spec.k, false);
        for (std::size_t j = 0; j < spec.ell; ++j) {
            key.twists.push_back(1 + rng.below(spec.n - spec.k));
            std::size_t h;
            do {
                h = rng.below(spec.k);
            } while (used[h]);
            used[h] = true;
            key.hooks.push_back(h);
            key.coeffs.push_back(f->random_nonzero(rng));
        }
    }
    key.validate();

    Matrix g_can = tgrs_canonical_generator(key);
    Matrix s = random_invertible(f, spec.k, rng);
    PublicKey pk{s.mul(g_can), (spec.n - spec.k) / 2};
    return {std::move(key), std::move(pk)};
}

/// c = m G_pub + e with e uniform of Hamming weight exactly w_err.
inline Word encrypt(const PublicKey& pk, const Word& msg, std::uint64_t seed) {
    require(msg.size() == pk.k(), Err::LengthMismatch, "message has wrong length");
    const Field& F = *pk.field();
    Word c = pk.g_pub.mul_vec_left(msg);
    Rng rng = Rng::stream(seed, phase::kEncrypt, 0);
    std::size_t n = pk.n();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[i] = i;
    for (std::size_t i = 0; i < pk.w_err; ++i) {
        std::size_t j = i + rng.below(n - i);
        std::swap(pos[i], pos[j]);
        c[pos[i]] = F.add(c[pos[i]], F.random_nonzero(rng));
    }
    return c;
}

/// Decode the ciphertext with the secret key, then solve m G_pub = codeword.
/// Throws DecodeFailure when the brute-force decoder exhausts its guesses.
inline Word decrypt(const TgrsKey& sk, const PublicKey& pk, const Word& cipher) {
    require(cipher.size() == pk.n(), Err::LengthMismatch, "ciphertext has wrong length");
    const Field& F = *pk.field();
    auto msg_poly = tgrs_decode(sk, cipher);
    if (!msg_poly) fail(Err::DecodeFailure, "no codeword within the decoding radius");

    // codeword = ev of the full twisted polynomial built from the message
    std::size_t k = sk.grs.k;
    Poly full = *msg_poly;
    for (std::size_t j = 0; j < sk.ell(); ++j) {
        fel fh = msg_poly->coeff(sk.hooks[j]);
        if (fh != 0)
            full = full.add(Poly::monomial(sk.grs.field, k - 1 + sk.twists[j],
                                           F.mul(fh, sk.coeffs[j])));
    }
    Word codeword = ev(F, sk.grs.alpha, sk.grs.mult, full);

    // solve m * G_pub = codeword
    Matrix sys = pk.g_pub.transpose();  // n x k
    Matrix aug(pk.field(), sys.rows(), sys.cols() + 1);
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        for (std::size_t j = 0; j < sys.cols(); ++j) aug.at(i, j) = sys.at(i, j);
        aug.at(i, sys.cols()) = codeword[i];
    }
    RrefResult rr = rref(std::move(aug));
    Word m(pk.k(), 0);
    for (std::size_t r = 0; r < rr.rank; ++r) {
        require(rr.pivots[r] < pk.k(), Err::DecodeFailure, "inconsistent linear system");
        m[rr.pivots[r]] = rr.mat.at(r, pk.k());
    }
    return m;
}

}  // namespace tgrs
