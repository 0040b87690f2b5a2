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

#include <string>
#include <vector>

#include <dgov/abe/abe.hpp>
#include <dgov/ceremony/ceremony.hpp>

namespace dgov::attacks {

using algebra::G1Matrix;
using algebra::G1Vector;
using algebra::G2Vector;
using algebra::GtPoint;
using algebra::Rng;
using algebra::ScalarVector;

// A slot public key whose XA image cancels every honest non-trust slot, plus the parts the
// adversary does know (tau, sigma). The matching X is unknown to anyone.
struct RogueSlotPublic {
    G1Matrix xa_pub;
    abe::SlotSecret known;  // X is a placeholder and never used
};

// xa_pub = entrywise inverse of the product of the given honest XA images. Group operations only.
RogueSlotPublic rogue_key_forge(const std::vector<G1Matrix>& honest_xa, std::size_t k, Rng& rng);

// Reveal list of `base` with the X image of its first slot replaced by the forgery.
std::vector<pok::Element> forge_elements(const ceremony::AuthContribution& base, const G1Matrix& forged_xa);

// Decrypts with colluder key parts issued for v' = (0,...,0,1), then removes the residual
// e(omega, h) where omega is the product of all non-trust ct_i.
GtPoint rogue_key_decrypt(const abe::AbeCiphertext& ct, const std::vector<abe::KeyPart>& colluder_parts,
                          const G2Vector& h_pub);

// g1^{s_i} = ct0[i]^{1/a_i} for i < k.
G1Vector infer_secret_vector(const G1Vector& ct0, const ScalarVector& a_diag);

struct Verdict {
    std::string attack;
    std::string configuration;
    bool success = false;
    std::string detail;
    double elapsed_ms = 0;

    // One JSON object on a single line.
    std::string to_json() const;
};

struct RogueKeyOptions {
    std::size_t k = 2;
    bool insecure_no_pok = false;
    // When false the adversary registers honestly (control run).
    bool forge = true;
    abe::PolicyEncoding encoding = abe::PolicyEncoding::Randomized;
};

// Roster AA1 (entry, mid, senior), AA2 (agent), rogue ADV (manager), TA: six slots. The
// adversary waits for the honest reveals, forges its X image, then colludes with a user
// holding no attributes against a file requiring {entry, agent}.
Verdict run_rogue_key_attack(const RogueKeyOptions& opts, Rng& rng);

struct InferenceOptions {
    std::size_t k = 2;
    std::size_t participants = 3;
    std::size_t trials = 100;
    // Withholds contribution (trial mod participants) from the adversary's witness.
    bool withhold_one = false;
};

// Encrypts `trials` payloads under the deployed system and counts how often the adversary's
// reconstruction equals g1^{s}. success means every trial matched.
struct InferenceResult {
    std::size_t trials = 0;
    std::size_t matches = 0;
    Verdict verdict;
};

InferenceResult run_inference_attack(const InferenceOptions& opts, Rng& rng);

}  // namespace dgov::attacks
