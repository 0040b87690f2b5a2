/*
   Copyright 2026 The dgov Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <set>
#include <string_view>
#include <vector>

#include <dgov/algebra/encoding.hpp>
#include <dgov/algebra/matrix.hpp>
#include <dgov/algebra/rng.hpp>
#include <dgov/vc/vc.hpp>

namespace dgov::abe {

using algebra::G1Matrix;
using algebra::G1Point;
using algebra::G1Vector;
using algebra::G2Point;
using algebra::G2Vector;
using algebra::GtPoint;
using algebra::GtVector;
using algebra::Rng;
using algebra::Scalar;
using algebra::ScalarMatrix;
using algebra::ScalarVector;

// Domain string for the H_1(GID, C) components.
inline constexpr std::string_view kHashDomain = "DGOV-H1";

// PP_ABE. g1, g2 are the fixed generators. A_pub = g1^A, UA_pub stands in for g1^{U^T A};
// both (k+1) x k. L = l + 1 slots, the last one being the trust slot.
struct SystemParams {
    std::size_t k = 0;
    std::size_t L = 0;
    G1Matrix A_pub;
    G1Matrix UA_pub;

    std::size_t trust_slot() const { return L - 1; }
    void validate() const;
    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

struct SlotSecret {
    ScalarMatrix X;    // (k+1) x (k+1)
    ScalarVector tau;  // k+1
    Scalar sigma;      // nonzero
};

struct SlotPublic {
    G1Matrix XA_pub;   // g1^{X^T A}, (k+1) x k
    GtVector tauA_pub; // e(g1, g2)^{tau^T A}, length k
    G2Point y;         // g2^sigma

    friend bool operator==(const SlotPublic&, const SlotPublic&) = default;
};

struct KeyPart {
    G2Vector K;  // k+1
    std::size_t slot = 0;
};

struct AttributeVector {
    ScalarVector v;  // entries in {0,1}, last entry 1
};

struct PolicyVector {
    ScalarVector x;
};

struct AbeCiphertext {
    G1Vector ct0;
    std::vector<G1Vector> cts;
    GtPoint ct_prime;

    friend bool operator==(const AbeCiphertext&, const AbeCiphertext&) = default;
};

enum class PolicyEncoding {
    Randomized,
    // Fixed all-ones encoding; only for reproducing attacks on the weak encoding.
    InsecureNaive,
};

SlotSecret sample_slot_secret(std::size_t k, Rng& rng);
SlotPublic slot_public_from_secret(const SystemParams& params, const SlotSecret& secret);
// Rebuilds a slot public key from the ledger-published images g1^{X^T A}, g1^{tau^T A}, g2^sigma.
SlotPublic slot_public_from_images(const G1Matrix& xa, const G1Matrix& tau_a, const G2Point& y);
std::pair<SlotPublic, SlotSecret> slot_keygen(const SystemParams& params, Rng& rng);

// g2^h with h = H_1(GID, C).
G2Vector derive_h(ByteView gid, const vc::VCCommitment& c, std::size_t k);

// mu_slot = sum_{j<slot} H(y_j^sigma) - sum_{j>slot} H(y_j^sigma). Throws if all_y[slot] != g2^sigma.
ScalarVector masking(std::size_t slot, const Scalar& sigma, const std::vector<G2Point>& all_y, ByteView gid,
                     const vc::VCCommitment& c, std::size_t k);

// K = g2^{tau} (g2^{X h})^{-v} g2^{mu}. The trust slot refuses v != 1.
KeyPart issue_key_part(const SlotSecret& secret, const Scalar& v_j, const G2Vector& h_pub, const ScalarVector& mu,
                       std::size_t slot, bool trust_slot);

AttributeVector make_attribute_vector(const std::vector<bool>& attributes);
void validate(const AttributeVector& v, std::size_t L);

// required indices lie in [0, L-2].
PolicyVector encode_policy(const std::set<std::size_t>& required, std::size_t L, Rng& rng,
                           PolicyEncoding encoding = PolicyEncoding::Randomized);

AbeCiphertext encrypt(const SystemParams& params, const std::vector<SlotPublic>& slot_pubs, const PolicyVector& x,
                      const GtPoint& payload, Rng& rng);
// Deterministic core with caller-chosen s (nonzero); exposed so tests can retain s.
AbeCiphertext encrypt_with_randomness(const SystemParams& params, const std::vector<SlotPublic>& slot_pubs,
                                      const PolicyVector& x, const GtPoint& payload, const ScalarVector& s);

GtPoint decrypt(const std::vector<KeyPart>& key_parts, const AttributeVector& v, const G2Vector& h_pub,
                const AbeCiphertext& ct);

// Versioned header carrying (k, L), then ct0, cts, ct'.
void encode(algebra::ByteWriter& w, const AbeCiphertext& ct);
AbeCiphertext decode_ciphertext(algebra::ByteReader& r);
Bytes ciphertext_to_bytes(const AbeCiphertext& ct);
AbeCiphertext ciphertext_from_bytes(ByteView in);

void encode(algebra::ByteWriter& w, const SystemParams& p);
SystemParams decode_system_params(algebra::ByteReader& r);
void encode(algebra::ByteWriter& w, const SlotPublic& p);
SlotPublic decode_slot_public(algebra::ByteReader& r);
void encode(algebra::ByteWriter& w, const SlotSecret& s);
SlotSecret decode_slot_secret(algebra::ByteReader& r);
void encode(algebra::ByteWriter& w, const KeyPart& kp);
KeyPart decode_key_part(algebra::ByteReader& r);

}  // namespace dgov::abe
