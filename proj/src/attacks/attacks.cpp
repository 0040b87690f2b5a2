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

#include <dgov/attacks/attacks.hpp>

#include <chrono>

#include <json.hpp>

#include <dgov/algebra/ops.hpp>

namespace dgov::attacks {

using algebra::G1Point;
using algebra::Scalar;
using ceremony::Address;
using ledger::Transaction;

RogueSlotPublic rogue_key_forge(const std::vector<G1Matrix>& honest_xa, std::size_t k, Rng& rng) {
    G1Matrix acc(k + 1, k);
    for (const auto& xa : honest_xa) {
        if (xa.rows() != k + 1 || xa.cols() != k) throw DimensionError("honest XA image has the wrong shape");
        acc = algebra::hadamard_mul(acc, xa);
    }
    RogueSlotPublic out{G1Matrix(k + 1, k), abe::sample_slot_secret(k, rng)};
    for (std::size_t i = 0; i < acc.size(); ++i) out.xa_pub.data()[i] = algebra::group_inv(acc.data()[i]);
    return out;
}

std::vector<pok::Element> forge_elements(const ceremony::AuthContribution& base, const G1Matrix& forged_xa) {
    auto els = base.elements;
    if (els.size() < 6 || els[3].name != ledger::kSlotElementNames[0]) throw PreconditionError("no X element");
    els[3].rp->power = forged_xa;
    return els;
}

GtPoint rogue_key_decrypt(const abe::AbeCiphertext& ct, const std::vector<abe::KeyPart>& colluder_parts,
                          const G2Vector& h_pub) {
    const std::size_t L = ct.cts.size();
    if (L < 2) throw DimensionError("rogue-key decryption needs a non-trust slot");
    abe::AttributeVector trust_only{ScalarVector(L)};
    trust_only.v[L - 1] = Scalar::one();
    const auto residual = abe::decrypt(colluder_parts, trust_only, h_pub, ct);
    G1Vector omega(ct.ct0.size());
    for (std::size_t i = 0; i + 1 < L; ++i) omega = algebra::hadamard_mul(omega, ct.cts[i]);
    return residual / algebra::multi_pairing(omega, h_pub);
}

G1Vector infer_secret_vector(const G1Vector& ct0, const ScalarVector& a_diag) {
    if (ct0.size() != a_diag.size() + 1) throw DimensionError("witness length must be k");
    G1Vector out;
    for (std::size_t i = 0; i < a_diag.size(); ++i) out.push_back(a_diag[i].inverse() * ct0[i]);
    return out;
}

std::string Verdict::to_json() const {
    return nlohmann::json{{"attack", attack},
                          {"configuration", configuration},
                          {"success", success},
                          {"detail", detail},
                          {"elapsed_ms", elapsed_ms}}
        .dump();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Actor {
    ceremony::AuthorityParticipant p;
    std::vector<pok::Element> revealed;
    bool adversary = false;
};

// Honest proofs for every element the actor knows. For a substituted element the actor can
// only prove its original statement, bound to the context of what it revealed.
std::vector<pok::PoKProof> best_effort_proofs(const Actor& a, Rng& rng) {
    const auto& c = *a.p.contribution;
    const auto com = pok::commit_spairs(a.revealed);
    std::vector<pok::PoKProof> out;
    for (std::size_t i = 0; i < a.revealed.size(); ++i) {
        const auto ctx = pok::proof_context(com.overall, com.per_element[i]);
        const auto& statement = a.revealed[i] == c.elements[i] ? a.revealed[i] : c.elements[i];
        out.push_back(pok::prove_element(statement, c.element_secrets[i], ctx, rng));
    }
    return out;
}

}  // namespace

Verdict run_rogue_key_attack(const RogueKeyOptions& opts, Rng& rng) {
    const auto t0 = Clock::now();
    Verdict v{"rogue-key", opts.insecure_no_pok ? "insecure-no-pok" : "default", false, "", 0};
    const std::size_t k = opts.k;
    const Address setup_addr = Address::from_label("setup-0");
    std::vector<ceremony::AuthoritySpec> roster = {
        {"AA1", Address::from_label("AA1"), {"entry", "mid", "senior"}, false},
        {"AA2", Address::from_label("AA2"), {"agent"}, false},
        {"ADV", Address::from_label("ADV"), {"manager"}, false},
        {"TA", Address::from_label("TA"), {}, true},
    };
    std::set<Address> aa = {setup_addr};
    for (const auto& s : roster) aa.insert(s.address);
    auto cfg = ceremony::default_ledger_config(k, aa);
    cfg.insecure_no_pok = opts.insecure_no_pok;
    ledger::Ledger ledger(cfg);
    const auto sched = ceremony::Schedule::from(cfg);

    std::vector<ceremony::SetupParticipant> setup = {{ceremony::make_setup_contribution(setup_addr, k, rng)}};
    const auto sys = ceremony::run_trusted_setup(ledger, setup, rng);

    std::vector<Actor> actors;
    for (const auto& s : roster) {
        Actor a{{s, ceremony::make_auth_contribution(s.address, k, sys.a_pub, s.trust ? 1 : s.attributes.size(), rng),
                 std::nullopt, std::nullopt},
                {},
                s.name == "ADV"};
        a.revealed = a.p.contribution->elements;
        actors.push_back(std::move(a));
    }
    auto submit = [&](const Address& who, std::uint64_t ts, ledger::Call call) {
        return ledger.submit(Transaction{{who, ts, 0}, std::move(call)});
    };

    // Honest authorities reveal first.
    for (auto& a : actors) {
        if (a.adversary) continue;
        submit(a.p.spec.address, sched.auth_commit, ledger::AuthCommit{a.p.contribution->commitment.overall});
        submit(a.p.spec.address, sched.auth_commit, ledger::AuthReveal{a.revealed});
    }
    // The adversary reads the honest non-trust X images off the ledger and cancels them.
    auto& adv = *std::find_if(actors.begin(), actors.end(), [](const Actor& a) { return a.adversary; });
    if (opts.forge) {
        std::vector<G1Matrix> honest_xa;
        for (const auto& a : actors) {
            if (a.adversary || a.p.spec.trust) continue;
            const auto& els = ledger.state().auth.unverified.at(a.p.spec.address);
            for (std::size_t s = 3; s < els.size(); s += 3) honest_xa.push_back(els[s].rp->power);
        }
        const auto forged = rogue_key_forge(honest_xa, k, rng);
        auto& slot = adv.p.contribution->slots[0];
        slot.tau = forged.known.tau;
        slot.sigma = forged.known.sigma;
        *adv.p.contribution = ceremony::make_auth_contribution_from(adv.p.spec.address, k, sys.a_pub,
                                                                    adv.p.contribution->slots, rng);
        adv.revealed = forge_elements(*adv.p.contribution, forged.xa_pub);
    }
    const auto adv_commit = pok::commit_spairs(adv.revealed).overall;
    submit(adv.p.spec.address, sched.auth_commit, ledger::AuthCommit{adv_commit});
    submit(adv.p.spec.address, sched.auth_commit, ledger::AuthReveal{adv.revealed});

    // Prove in roster order so the trust authority takes the last index. The adversary can
    // only prove knowledge of the exponents it actually holds.
    bool registration_accepted = false;
    for (auto& a : actors) {
        const auto r = submit(a.p.spec.address, sched.auth_prove, ledger::AuthProve{best_effort_proofs(a, rng)});
        if (a.adversary) {
            registration_accepted = r.accepted;
            if (!r.accepted) v.detail = "forged registration rejected: " + r.reason;
        } else if (!r.accepted) {
            throw ceremony::CeremonyError(a.p.spec.address, "SC_auth.prove", r.reason);
        }
    }
    for (auto& a : actors) {
        const auto& st = ledger.state().auth;
        if (!st.index.count(a.p.spec.address)) continue;
        const auto size = static_cast<std::uint32_t>(a.p.contribution->slots.size());
        const auto r = submit(a.p.spec.address, sched.auth_generate, ceremony::make_cross_terms(*a.p.contribution, st, size));
        if (!r.accepted) throw ceremony::CeremonyError(a.p.spec.address, "SC_auth.generate", r.reason);
    }
    std::vector<ceremony::AuthorityParticipant> participants;
    for (const auto& a : actors) participants.push_back(a.p);
    const auto out = ceremony::assemble_authority_outputs(ledger, sys.a_pub, sys.ua_pub, roster);

    // A colluding user with no attributes obtains one key part per slot.
    const auto gid = ledger::gid_for(Address::from_label("colluder"));
    const auto keys = ceremony::obtain_user_keys(out, ceremony::slot_secrets_of(participants), gid, {}, rng);

    const auto payload = GtPoint::random(rng);
    std::set<std::size_t> required = {out.table.slot_of("entry"), out.table.slot_of("agent")};
    const auto x = abe::encode_policy(required, out.params.L, rng, opts.encoding);
    const auto ct = abe::encrypt(out.params, out.slot_pubs, x, payload, rng);
    const auto recovered = rogue_key_decrypt(ct, keys.parts, keys.h);
    v.success = recovered == payload;
    if (v.detail.empty())
        v.detail = std::string(registration_accepted ? "forged registration accepted" : "registration rejected") +
                   (v.success ? "; payload recovered" : "; payload not recovered");
    v.elapsed_ms = ms_since(t0);
    return v;
}

InferenceResult run_inference_attack(const InferenceOptions& opts, Rng& rng) {
    const auto t0 = Clock::now();
    InferenceResult res;
    res.verdict = {"infer-s", opts.withhold_one ? "ceremony-one-withheld" : "full-witness", false, "", 0};
    const std::vector<ceremony::AuthoritySpec> roster = {{"AA1", Address::from_label("AA1"), {"entry"}, false},
                                                         {"TA", Address::from_label("TA"), {}, true}};
    auto d = ceremony::deploy(opts.k, roster, opts.participants, rng);
    const auto g1 = G1Point::generator();

    for (std::size_t t = 0; t < opts.trials; ++t) {
        ScalarVector witness(opts.k, Scalar::one());
        for (std::size_t p = 0; p < d.setup.size(); ++p) {
            if (opts.withhold_one && p == t % d.setup.size()) continue;
            for (std::size_t i = 0; i < opts.k; ++i) witness[i] *= d.setup[p].contribution.secrets.a_diag[i];
        }
        ScalarVector s(opts.k);
        for (auto& si : s) si = Scalar::random_nonzero(rng);
        const auto x = abe::encode_policy({0}, d.out.params.L, rng, abe::PolicyEncoding::Randomized);
        const auto ct = abe::encrypt_with_randomness(d.out.params, d.out.slot_pubs, x, GtPoint::random(rng), s);
        const auto guess = infer_secret_vector(ct.ct0, witness);
        bool match = true;
        for (std::size_t i = 0; i < opts.k; ++i) match = match && guess[i] == s[i] * g1;
        res.matches += match ? 1 : 0;
        ++res.trials;
    }
    res.verdict.success = res.trials > 0 && res.matches == res.trials;
    res.verdict.detail = std::to_string(res.matches) + "/" + std::to_string(res.trials) + " reconstructions matched";
    res.verdict.elapsed_ms = ms_since(t0);
    return res;
}

}  // namespace dgov::attacks
