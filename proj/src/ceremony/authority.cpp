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

#include <dgov/ceremony/ceremony.hpp>

#include <algorithm>

#include <dgov/algebra/ops.hpp>

namespace dgov::ceremony {

using ledger::Transaction;

std::size_t MappingTable::slot_of(const std::string& attribute) const {
    for (const auto& r : records) {
        for (std::size_t i = 0; i < r.attributes.size(); ++i)
            if (r.attributes[i] == attribute) return r.slot_begin + i;
    }
    throw NotFoundError("unknown attribute: " + attribute);
}

const MappingRecord& MappingTable::record_for(const Address& a) const {
    for (const auto& r : records)
        if (r.address == a) return r;
    throw NotFoundError("no authority at " + a.to_hex());
}

MappingTable build_mapping_table(const ledger::AuthState& state, const std::vector<AuthoritySpec>& specs) {
    if (state.counter == 0) throw PreconditionError("no verified authorities");
    MappingTable t;
    for (std::uint32_t i = 1; i <= state.counter; ++i) {
        const Address addr = *state.by_index(i);
        const auto spec = std::find_if(specs.begin(), specs.end(), [&](const auto& s) { return s.address == addr; });
        if (spec == specs.end()) throw PreconditionError("verified authority without declaration: " + addr.to_hex());
        const auto size = state.attribute_size.find(addr);
        if (size == state.attribute_size.end())
            throw PreconditionError("authority " + spec->name + " did not publish cross terms");
        if (spec->trust) {
            if (i != state.counter) throw PreconditionError("trust authority must hold the last index");
            if (size->second != 1) throw PreconditionError("trust authority must own exactly one slot");
        } else if (spec->attributes.size() != size->second) {
            throw PreconditionError("attribute count of " + spec->name + " disagrees with the ledger");
        }
        MappingRecord r{addr, spec->name, i, t.l, t.l + size->second, spec->attributes, spec->trust};
        if (!spec->trust) t.l += size->second;
        t.records.push_back(std::move(r));
    }
    if (!t.records.back().trust) throw PreconditionError("no trust authority");
    t.records.back().slot_begin = t.l;
    t.records.back().slot_end = t.l + 1;
    return t;
}

abe::AttributeVector assemble_user_attribute_vector(const MappingTable& table, const std::set<std::string>& issued) {
    std::vector<bool> bits(table.l, false);
    for (const auto& a : issued) bits[table.slot_of(a)] = true;
    return abe::make_attribute_vector(bits);
}

AuthorityOutcome assemble_authority_outputs(const Ledger& ledger, const G1Matrix& a_pub, const G1Matrix& ua_pub,
                                            const std::vector<AuthoritySpec>& specs) {
    const auto& st = ledger.state().auth;
    AuthorityOutcome out;
    out.table = build_mapping_table(st, specs);
    const std::size_t n = st.counter;
    algebra::G1Vector o(n);
    algebra::G1Matrix o_cross(n, n);
    algebra::G2Vector z_pub(n);
    for (const auto& rec : out.table.records) {
        const auto i = rec.authority_index - 1;
        const auto& els = st.verified.at(rec.address);
        o[i] = els[0].rp->power(0, 0);
        z_pub[i] = els[0].rp2->power(0, 0);
        const auto& cross = st.verified_o.at(rec.address).o;
        for (std::size_t j = 0; j < n; ++j) o_cross(i, j) = cross[j];
        for (std::size_t s = 0; s < rec.slot_end - rec.slot_begin; ++s) {
            const auto& x = els[3 + 3 * s];
            const auto& tau = els[4 + 3 * s];
            const auto& sigma = els[5 + 3 * s];
            out.slot_pubs.push_back(
                abe::slot_public_from_images(x.rp->power, tau.rp->power, sigma.rp2->power(0, 0)));
        }
    }
    out.vc_params = vc::assemble_vc_params(std::move(o), std::move(o_cross), std::move(z_pub));
    out.params = {ledger.config().k, out.table.L(), a_pub, ua_pub};
    out.params.validate();
    return out;
}

namespace {

bool submit(Ledger& ledger, const Address& who, std::uint64_t ts, ledger::Call call, bool honest,
            std::vector<RejectedCall>& rejected) {
    const auto name = ledger::call_name(call);
    const auto r = ledger.submit(Transaction{{who, ts, 0}, std::move(call)});
    if (r.accepted) return true;
    if (honest) throw CeremonyError(who, name, r.reason);
    rejected.push_back({who, name, r.reason});
    return false;
}

}  // namespace

AuthorityOutcome run_authority_setup(Ledger& ledger, const G1Matrix& a_pub, const G1Matrix& ua_pub,
                                     std::vector<AuthorityParticipant>& authorities, Rng& rng) {
    const auto sched = Schedule::from(ledger.config());
    const std::size_t k = ledger.config().k;
    std::vector<AuthorityParticipant*> order;
    for (auto& a : authorities)
        if (!a.spec.trust) order.push_back(&a);
    for (auto& a : authorities)
        if (a.spec.trust) order.push_back(&a);
    if (order.empty() || !order.back()->spec.trust) throw PreconditionError("authority roster needs a trust authority");
    if (std::count_if(authorities.begin(), authorities.end(), [](const auto& a) { return a.spec.trust; }) != 1)
        throw PreconditionError("exactly one trust authority is allowed");

    std::vector<RejectedCall> rejected;
    for (auto* a : order) {
        const std::size_t slots = a->spec.trust ? 1 : a->spec.attributes.size();
        if (!a->contribution) a->contribution = make_auth_contribution(a->spec.address, k, a_pub, slots, rng);
        const auto& els = a->forged_elements ? *a->forged_elements : a->contribution->elements;
        const bool honest = !a->forged_elements;
        const auto h = a->forged_elements ? pok::commit_spairs(els).overall : a->contribution->commitment.overall;
        submit(ledger, a->spec.address, sched.auth_commit, ledger::AuthCommit{h}, honest, rejected);
        submit(ledger, a->spec.address, sched.auth_commit, ledger::AuthReveal{els}, honest, rejected);
    }
    for (auto* a : order) {
        const bool honest = !a->forged_elements;
        auto proofs = a->forged_proofs
                          ? *a->forged_proofs
                          : pok::prove_all(a->contribution->elements, a->contribution->element_secrets, rng);
        submit(ledger, a->spec.address, sched.auth_prove, ledger::AuthProve{std::move(proofs)}, honest, rejected);
    }
    for (auto* a : order) {
        const auto& st = ledger.state().auth;
        if (!st.index.count(a->spec.address)) continue;
        const auto size = static_cast<std::uint32_t>(a->contribution->slots.size());
        submit(ledger, a->spec.address, sched.auth_generate, make_cross_terms(*a->contribution, st, size),
               !a->forged_elements, rejected);
    }

    std::vector<AuthoritySpec> specs;
    for (const auto& a : authorities) specs.push_back(a.spec);
    auto out = assemble_authority_outputs(ledger, a_pub, ua_pub, specs);
    out.rejected = std::move(rejected);
    return out;
}

UserCommitment commit_user_attributes(const MappingTable& table, const vc::VCParams& params, const Bytes& gid,
                                      const std::set<std::string>& issued, Rng& rng) {
    if (params.size() != table.records.size()) throw DimensionError("VC size differs from the authority count");
    for (const auto& a : issued) (void)table.slot_of(a);
    UserCommitment uc{gid, {}, {}, {}, {}};
    for (const auto& rec : table.records) {
        std::string bits;
        if (rec.trust) {
            bits = "1";
        } else {
            for (const auto& a : rec.attributes) bits.push_back(issued.count(a) ? '1' : '0');
        }
        const auto nonce = Scalar::random(rng);
        uc.msgs.push_back(vc::vc_message(bits, nonce));
        uc.bits.push_back(std::move(bits));
        uc.nonces.push_back(nonce);
    }
    uc.c = vc::vc_commit(params, uc.msgs);
    return uc;
}

KeyRequest make_key_request(const UserCommitment& uc, const vc::VCParams& params, std::uint32_t authority_index) {
    if (authority_index == 0 || authority_index > uc.msgs.size()) throw PreconditionError("authority index out of range");
    const auto i = authority_index - 1;
    return {uc.gid, uc.c, uc.bits[i], vc::vc_open(params, uc.msgs, i, uc.nonces[i])};
}

std::vector<abe::KeyPart> issue_for_authority(const MappingRecord& record, const std::vector<abe::SlotSecret>& slots,
                                              const vc::VCParams& params, const std::vector<algebra::G2Point>& all_y,
                                              std::size_t k, const KeyRequest& request,
                                              const std::set<std::string>& acknowledged) {
    const std::size_t n_slots = record.slot_end - record.slot_begin;
    if (slots.size() != n_slots) throw DimensionError("slot secrets do not match the mapping record");
    std::string expected;
    if (record.trust) {
        expected = "1";
    } else {
        for (const auto& a : record.attributes) expected.push_back(acknowledged.count(a) ? '1' : '0');
    }
    if (request.bits != expected) throw PreconditionError("claimed attributes are not acknowledged by " + record.name);
    const auto pos = record.authority_index - 1;
    const auto m = vc::vc_message(expected, request.opening.nonce);
    if (!vc::vc_verify(params, request.c, m, pos, request.opening))
        throw PreconditionError("commitment opening rejected by " + record.name);

    const auto h = abe::derive_h(request.gid, request.c, k);
    std::vector<abe::KeyPart> parts;
    for (std::size_t s = 0; s < n_slots; ++s) {
        const std::size_t slot = record.slot_begin + s;
        const auto v = expected[s] == '1' ? Scalar::one() : Scalar::zero();
        const auto mu = abe::masking(slot, slots[s].sigma, all_y, request.gid, request.c, k);
        parts.push_back(abe::issue_key_part(slots[s], v, h, mu, slot, record.trust));
    }
    return parts;
}

}  // namespace dgov::ceremony

namespace dgov::ceremony {

SlotSecrets slot_secrets_of(const std::vector<AuthorityParticipant>& authorities) {
    SlotSecrets out;
    for (const auto& a : authorities)
        if (a.contribution) out[a.spec.address] = a.contribution->slots;
    return out;
}

UserKeys obtain_user_keys(const AuthorityOutcome& system, const SlotSecrets& secrets, const Bytes& gid,
                          const std::set<std::string>& issued, Rng& rng) {
    const auto uc = commit_user_attributes(system.table, system.vc_params, gid, issued, rng);
    std::vector<algebra::G2Point> all_y;
    for (const auto& p : system.slot_pubs) all_y.push_back(p.y);
    UserKeys keys{gid, uc.c, abe::derive_h(gid, uc.c, system.params.k),
                  assemble_user_attribute_vector(system.table, issued), {}};
    for (const auto& rec : system.table.records) {
        const auto it = secrets.find(rec.address);
        if (it == secrets.end()) throw NotFoundError("no secrets for authority " + rec.name);
        const auto request = make_key_request(uc, system.vc_params, rec.authority_index);
        auto parts =
            issue_for_authority(rec, it->second, system.vc_params, all_y, system.params.k, request, issued);
        for (auto& p : parts) keys.parts.push_back(std::move(p));
    }
    return keys;
}

}  // namespace dgov::ceremony

namespace dgov::ceremony {

std::vector<AuthoritySpec> default_authority_roster() {
    return {
        {"AA1", Address::from_label("AA1"), {"entry", "mid", "senior"}, false},
        {"AA2", Address::from_label("AA2"), {"agent", "manager"}, false},
        {"TA", Address::from_label("TA"), {}, true},
    };
}

}  // namespace dgov::ceremony

namespace dgov::ceremony {

Deployment deploy(std::size_t k, const std::vector<AuthoritySpec>& roster, std::size_t setup_participants, Rng& rng,
                  bool insecure_no_pok) {
    if (setup_participants == 0) throw PreconditionError("trusted setup needs at least one participant");
    std::set<Address> aa;
    std::vector<Address> setup_addrs;
    for (std::size_t i = 0; i < setup_participants; ++i) {
        setup_addrs.push_back(Address::from_label("setup-" + std::to_string(i)));
        aa.insert(setup_addrs.back());
    }
    for (const auto& s : roster) aa.insert(s.address);
    auto cfg = default_ledger_config(k, aa);
    cfg.insecure_no_pok = insecure_no_pok;
    Deployment d{Ledger(cfg), {}, {}, {}, {}};
    for (const auto& a : setup_addrs) d.setup.push_back({make_setup_contribution(a, k, rng)});
    d.setup_out = run_trusted_setup(d.ledger, d.setup, rng);
    for (const auto& s : roster) d.authorities.push_back({s, std::nullopt, std::nullopt, std::nullopt});
    d.out = run_authority_setup(d.ledger, d.setup_out.a_pub, d.setup_out.ua_pub, d.authorities, rng);
    return d;
}

}  // namespace dgov::ceremony
