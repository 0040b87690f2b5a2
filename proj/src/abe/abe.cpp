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

#include <dgov/abe/abe.hpp>

#include <dgov/algebra/hash.hpp>
#include <dgov/algebra/ops.hpp>

namespace dgov::abe {

using algebra::ByteReader;
using algebra::ByteWriter;

void SystemParams::validate() const {
    if (k == 0 || L == 0) throw PreconditionError("system parameters need k >= 1 and L >= 1");
    if (A_pub.rows() != k + 1 || A_pub.cols() != k || UA_pub.rows() != k + 1 || UA_pub.cols() != k)
        throw DimensionError("system parameter matrices must be (k+1) x k");
}

SlotSecret sample_slot_secret(std::size_t k, Rng& rng) {
    SlotSecret s{ScalarMatrix(k + 1, k + 1), ScalarVector(k + 1), Scalar::random_nonzero(rng)};
    for (auto& x : s.X.data()) x = Scalar::random_nonzero(rng);
    for (auto& t : s.tau) t = Scalar::random_nonzero(rng);
    return s;
}

SlotPublic slot_public_from_images(const G1Matrix& xa, const G1Matrix& tau_a, const G2Point& y) {
    if (tau_a.rows() != 1 || tau_a.cols() != xa.cols()) throw DimensionError("tau image must be 1 x k");
    SlotPublic pub{xa, {}, y};
    for (std::size_t c = 0; c < tau_a.cols(); ++c)
        pub.tauA_pub.push_back(algebra::pairing(tau_a(0, c), G2Point::generator()));
    return pub;
}

SlotPublic slot_public_from_secret(const SystemParams& params, const SlotSecret& secret) {
    params.validate();
    if (secret.X.rows() != params.k + 1 || secret.X.cols() != params.k + 1 || secret.tau.size() != params.k + 1)
        throw DimensionError("slot secret shape does not match k");
    return slot_public_from_images(algebra::transpose_product(params.A_pub, secret.X),
                                   algebra::transpose_product(params.A_pub, ScalarMatrix::column(secret.tau)),
                                   secret.sigma * G2Point::generator());
}

std::pair<SlotPublic, SlotSecret> slot_keygen(const SystemParams& params, Rng& rng) {
    auto secret = sample_slot_secret(params.k, rng);
    auto pub = slot_public_from_secret(params, secret);
    return {std::move(pub), std::move(secret)};
}

G2Vector derive_h(ByteView gid, const vc::VCCommitment& c, std::size_t k) {
    G2Vector h;
    h.reserve(k + 1);
    for (std::size_t t = 1; t <= k + 1; ++t)
        h.push_back(algebra::hash_to_g2(kHashDomain, gid, c.c, static_cast<std::uint32_t>(t)));
    return h;
}

ScalarVector masking(std::size_t slot, const Scalar& sigma, const std::vector<G2Point>& all_y, ByteView gid,
                     const vc::VCCommitment& c, std::size_t k) {
    if (slot >= all_y.size()) throw PreconditionError("masking: slot out of range");
    if (!(all_y[slot] == sigma * G2Point::generator())) throw PreconditionError("masking: own y does not match sigma");
    ScalarVector mu(k + 1);
    for (std::size_t j = 0; j < all_y.size(); ++j) {
        if (j == slot) continue;
        const auto h = algebra::mask_oracle(sigma * all_y[j], gid, c.c, k + 1);
        for (std::size_t t = 0; t <= k; ++t) {
            if (j < slot) {
                mu[t] += h[t];
            } else {
                mu[t] -= h[t];
            }
        }
    }
    return mu;
}

KeyPart issue_key_part(const SlotSecret& secret, const Scalar& v_j, const G2Vector& h_pub, const ScalarVector& mu,
                       std::size_t slot, bool trust_slot) {
    const std::size_t n = secret.tau.size();
    if (secret.X.rows() != n || secret.X.cols() != n || h_pub.size() != n || mu.size() != n)
        throw DimensionError("issue_key_part: shape mismatch");
    const bool one = v_j == Scalar::one();
    if (!one && !v_j.is_zero()) throw PreconditionError("issue_key_part: attribute value must be 0 or 1");
    if (trust_slot && !one) throw PreconditionError("issue_key_part: trust slot requires v = 1");
    KeyPart kp{G2Vector(n), slot};
    for (std::size_t r = 0; r < n; ++r) {
        G2Point acc = (secret.tau[r] + mu[r]) * G2Point::generator();
        if (one) {
            // (g2^{X h})[r] = prod_t h_pub[t]^{X[r,t]}
            G2Point xh;
            for (std::size_t t = 0; t < n; ++t) xh += secret.X(r, t) * h_pub[t];
            acc -= xh;
        }
        kp.K[r] = acc;
    }
    return kp;
}

AttributeVector make_attribute_vector(const std::vector<bool>& attributes) {
    AttributeVector v;
    for (bool b : attributes) v.v.push_back(b ? Scalar::one() : Scalar::zero());
    v.v.push_back(Scalar::one());
    return v;
}

void validate(const AttributeVector& v, std::size_t L) {
    if (v.v.size() != L) throw DimensionError("attribute vector length must be L");
    for (const auto& x : v.v)
        if (!x.is_zero() && !(x == Scalar::one())) throw PreconditionError("attribute entries must be 0 or 1");
    if (!(v.v.back() == Scalar::one())) throw PreconditionError("trust slot entry must be 1");
}

PolicyVector encode_policy(const std::set<std::size_t>& required, std::size_t L, Rng& rng, PolicyEncoding encoding) {
    if (L == 0) throw PreconditionError("encode_policy: L must be positive");
    PolicyVector p{ScalarVector(L)};
    Scalar sum;
    for (auto i : required) {
        if (i + 1 >= L) throw PreconditionError("encode_policy: required attribute outside [0, L-2]");
        p.x[i] = encoding == PolicyEncoding::Randomized ? Scalar::random_nonzero(rng) : Scalar::one();
        sum += p.x[i];
    }
    p.x[L - 1] = -sum;
    return p;
}

AbeCiphertext encrypt_with_randomness(const SystemParams& params, const std::vector<SlotPublic>& slot_pubs,
                                      const PolicyVector& x, const GtPoint& payload, const ScalarVector& s) {
    params.validate();
    if (slot_pubs.size() != params.L || x.x.size() != params.L || s.size() != params.k)
        throw DimensionError("encrypt: dimension mismatch");
    bool nonzero = false;
    for (const auto& si : s) nonzero = nonzero || !si.is_zero();
    if (!nonzero) throw PreconditionError("encrypt: s must be a nonzero vector");
    const std::size_t k = params.k;

    AbeCiphertext ct;
    ct.ct0 = algebra::multi_exp_matvec(params.A_pub, s);
    // [UA | XA_i] against [x_i s ; s] gives g1^{x_i U^T A s + X_i^T A s} in one multi-exponentiation.
    G1Matrix joint(k + 1, 2 * k);
    ScalarVector e(2 * k);
    for (std::size_t i = 0; i < params.L; ++i) {
        const auto& pub = slot_pubs[i];
        if (pub.XA_pub.rows() != k + 1 || pub.XA_pub.cols() != k || pub.tauA_pub.size() != k)
            throw DimensionError("encrypt: slot public key shape mismatch");
        for (std::size_t r = 0; r <= k; ++r)
            for (std::size_t c = 0; c < k; ++c) {
                joint(r, c) = params.UA_pub(r, c);
                joint(r, k + c) = pub.XA_pub(r, c);
            }
        for (std::size_t c = 0; c < k; ++c) {
            e[c] = x.x[i] * s[c];
            e[k + c] = s[c];
        }
        ct.cts.push_back(algebra::multi_exp_matvec(joint, e));
    }
    ct.ct_prime = payload;
    for (const auto& pub : slot_pubs) ct.ct_prime *= algebra::multi_exp(pub.tauA_pub, s);
    return ct;
}

AbeCiphertext encrypt(const SystemParams& params, const std::vector<SlotPublic>& slot_pubs, const PolicyVector& x,
                      const GtPoint& payload, Rng& rng) {
    ScalarVector s(params.k);
    bool nonzero = false;
    while (!nonzero) {
        for (auto& si : s) {
            si = Scalar::random(rng);
            nonzero = nonzero || !si.is_zero();
        }
    }
    return encrypt_with_randomness(params, slot_pubs, x, payload, s);
}

GtPoint decrypt(const std::vector<KeyPart>& key_parts, const AttributeVector& v, const G2Vector& h_pub,
                const AbeCiphertext& ct) {
    const std::size_t L = ct.cts.size();
    const std::size_t n = ct.ct0.size();
    if (key_parts.size() != L || v.v.size() != L || h_pub.size() != n) throw DimensionError("decrypt: shape mismatch");
    G2Vector k_prod(n);
    G1Vector c_prod(n);
    for (std::size_t j = 0; j < L; ++j) {
        if (key_parts[j].slot != j || key_parts[j].K.size() != n || ct.cts[j].size() != n)
            throw DimensionError("decrypt: key part or ciphertext component mismatch");
        k_prod = algebra::hadamard_mul(k_prod, key_parts[j].K);
        c_prod = algebra::hadamard_mul(c_prod, algebra::vector_pow(ct.cts[j], v.v[j]));
    }
    const auto blind = algebra::vector_pairing(ct.ct0, k_prod) * algebra::vector_pairing(c_prod, h_pub);
    return ct.ct_prime / blind;
}

void encode(ByteWriter& w, const AbeCiphertext& ct) {
    w.u8(algebra::kFormatVersion);
    w.u32(static_cast<std::uint32_t>(ct.ct0.size() - 1)).u32(static_cast<std::uint32_t>(ct.cts.size()));
    w.put(ct.ct0);
    for (const auto& c : ct.cts) w.put(c);
    w.put(ct.ct_prime);
}

AbeCiphertext decode_ciphertext(ByteReader& r) {
    r.expect_version();
    const auto k = r.u32();
    const auto L = r.u32();
    if (k == 0 || L == 0 || L > r.remaining()) throw DecodeError("ciphertext header out of range");
    AbeCiphertext ct;
    ct.ct0 = r.vec<G1Point>();
    if (ct.ct0.size() != k + 1) throw DecodeError("ct0 length does not match header");
    for (std::uint32_t i = 0; i < L; ++i) {
        ct.cts.push_back(r.vec<G1Point>());
        if (ct.cts.back().size() != k + 1) throw DecodeError("ct_i length does not match header");
    }
    ct.ct_prime = r.gt();
    return ct;
}

Bytes ciphertext_to_bytes(const AbeCiphertext& ct) {
    ByteWriter w;
    encode(w, ct);
    return std::move(w).take();
}

AbeCiphertext ciphertext_from_bytes(ByteView in) {
    ByteReader r(in);
    auto ct = decode_ciphertext(r);
    r.expect_end();
    return ct;
}

void encode(ByteWriter& w, const SystemParams& p) {
    w.u32(static_cast<std::uint32_t>(p.k)).u32(static_cast<std::uint32_t>(p.L)).put(p.A_pub).put(p.UA_pub);
}

SystemParams decode_system_params(ByteReader& r) {
    SystemParams p;
    p.k = r.u32();
    p.L = r.u32();
    p.A_pub = r.matrix<G1Point>();
    p.UA_pub = r.matrix<G1Point>();
    try {
        p.validate();
    } catch (const Error& e) {
        throw DecodeError(std::string("system parameters: ") + e.what());
    }
    return p;
}

void encode(ByteWriter& w, const SlotPublic& p) { w.put(p.XA_pub).put(p.tauA_pub).put(p.y); }

SlotPublic decode_slot_public(ByteReader& r) {
    SlotPublic p;
    p.XA_pub = r.matrix<G1Point>();
    p.tauA_pub = r.vec<GtPoint>();
    p.y = r.g2();
    return p;
}

void encode(ByteWriter& w, const SlotSecret& s) { w.put(s.X).put(s.tau).put(s.sigma); }

SlotSecret decode_slot_secret(ByteReader& r) {
    SlotSecret s;
    s.X = r.matrix<Scalar>();
    s.tau = r.vec<Scalar>();
    s.sigma = r.scalar();
    return s;
}

void encode(ByteWriter& w, const KeyPart& kp) { w.u32(static_cast<std::uint32_t>(kp.slot)).put(kp.K); }

KeyPart decode_key_part(ByteReader& r) {
    KeyPart kp;
    kp.slot = r.u32();
    kp.K = r.vec<G2Point>();
    return kp;
}

}  // namespace dgov::abe
