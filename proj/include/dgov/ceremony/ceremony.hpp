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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <dgov/abe/abe.hpp>
#include <dgov/ledger/ledger.hpp>
#include <dgov/pok/pok.hpp>
#include <dgov/vc/vc.hpp>

namespace dgov::ceremony {

using algebra::G1Matrix;
using algebra::Rng;
using algebra::Scalar;
using algebra::ScalarMatrix;
using algebra::ScalarVector;
using ledger::Address;
using ledger::ChainHead;
using ledger::Ledger;

// A rejected ledger transaction raised during orchestration.
class CeremonyError : public Error {
  public:
    CeremonyError(Address who, std::string function, std::string reason);
    Address participant;
    std::string function;
    std::string reason;
};

// Clock positions used by the orchestrators, derived from the ledger deadlines.
struct Schedule {
    std::uint64_t sys_commit, sys_prove, sys_chain;
    std::uint64_t auth_commit, auth_prove, auth_generate;
    std::uint64_t after_setup;

    static Schedule from(const ledger::LedgerConfig& c);
};

// Deadlines {100,200,300} for setup and {400,500,600} for authorities.
ledger::LedgerConfig default_ledger_config(std::size_t k, std::set<Address> aa_list);

// ---- Trusted setup ----

struct SetupSecrets {
    ScalarVector a_diag;  // k nonzero diagonal entries of A
    ScalarMatrix u;       // (k+1) x k, nonzero entries
    Scalar alpha_a;
    Scalar alpha_u;
};

struct SetupContribution {
    Address address;
    SetupSecrets secrets;
    std::vector<pok::Element> elements;  // A, U, alpha_A, alpha_U, alphaA_A, alphaU_U
    std::vector<ScalarMatrix> element_secrets;
    pok::Commitment commitment;
};

SetupContribution make_setup_contribution(const Address& who, std::size_t k, Rng& rng);

// Next chain heads for an honest contributor.
ChainHead extend_v(const ChainHead& head, const SetupSecrets& s);
ChainHead extend_w(const ChainHead& head, const SetupSecrets& s);

enum class Behavior {
    Honest,
    // Extends V with a freshly sampled A unrelated to the proven s-pairs.
    SubstituteA,
    // Commits, reveals and proves, then never contributes to the chains.
    SkipChains,
};

struct SetupParticipant {
    SetupContribution contribution;
    Behavior behavior = Behavior::Honest;
};

struct RejectedCall {
    Address participant;
    std::string function;
    std::string reason;
};

struct SetupOutcome {
    G1Matrix a_pub;   // final V
    G1Matrix ua_pub;  // final W
    std::vector<RejectedCall> rejected;
};

// Drives commit, reveal, prove, compute and generate for every participant, advancing the
// clock through the windows. Rejections of honest participants throw CeremonyError; those
// of misbehaving ones are recorded.
SetupOutcome run_trusted_setup(Ledger& ledger, std::vector<SetupParticipant>& participants, Rng& rng);

// ---- Authority setup ----

struct AuthoritySpec {
    std::string name;
    Address address;
    std::vector<std::string> attributes;  // empty for the trust authority
    bool trust = false;
};

// Two attribute-holding authorities, AA1 (entry, mid, senior) and AA2 (agent, manager), plus
// the trust authority TA. Addresses derive from the names.
std::vector<AuthoritySpec> default_authority_roster();

struct AuthContribution {
    Address address;
    Scalar z;
    Scalar alpha_z;
    std::vector<abe::SlotSecret> slots;
    std::vector<pok::Element> elements;  // z, alpha_z, alphaz_z, then (X, tau, sigma) per slot
    std::vector<ScalarMatrix> element_secrets;
    pok::Commitment commitment;
};

AuthContribution make_auth_contribution(const Address& who, std::size_t k, const G1Matrix& a_pub,
                                        std::size_t n_slots, Rng& rng);

// Builds the elements from given slot secrets (used by adversaries who pick their own images).
AuthContribution make_auth_contribution_from(const Address& who, std::size_t k, const G1Matrix& a_pub,
                                             std::vector<abe::SlotSecret> slots, Rng& rng);

// O, theta, O' cross terms for every verified partner.
ledger::AuthGenerate make_cross_terms(const AuthContribution& mine, const ledger::AuthState& state,
                                      std::uint32_t attribute_size);

struct MappingRecord {
    Address address;
    std::string name;
    std::uint32_t authority_index = 0;  // 1-based
    std::size_t slot_begin = 0;
    std::size_t slot_end = 0;  // exclusive
    std::vector<std::string> attributes;
    bool trust = false;

    friend bool operator==(const MappingRecord&, const MappingRecord&) = default;
};

struct MappingTable {
    std::vector<MappingRecord> records;  // index order; trust authority last
    std::size_t l = 0;                   // attribute slots; trust slot is l

    std::size_t L() const { return l + 1; }
    std::size_t slot_of(const std::string& attribute) const;  // throws NotFoundError
    const MappingRecord& record_for(const Address& a) const;
    const MappingRecord& trust() const { return records.back(); }

    friend bool operator==(const MappingTable&, const MappingTable&) = default;
};

// Builds the table from the ledger's verified indices and attribute sizes plus the off-chain
// attribute names. Throws when declarations disagree with the ledger.
MappingTable build_mapping_table(const ledger::AuthState& state, const std::vector<AuthoritySpec>& specs);

// v_i = 1 iff attribute i is acknowledged; trust slot is 1.
abe::AttributeVector assemble_user_attribute_vector(const MappingTable& table, const std::set<std::string>& issued);

struct AuthorityParticipant {
    AuthoritySpec spec;
    std::optional<AuthContribution> contribution;  // filled by run_authority_setup when absent
    // Replaces the honestly generated reveal (rogue registrations).
    std::optional<std::vector<pok::Element>> forged_elements;
    // Proofs submitted alongside forged elements; defaults to the honest proofs.
    std::optional<std::vector<pok::PoKProof>> forged_proofs;
};

struct AuthorityOutcome {
    vc::VCParams vc_params;
    std::vector<abe::SlotPublic> slot_pubs;  // L entries
    MappingTable table;
    abe::SystemParams params;
    std::vector<RejectedCall> rejected;
};

// Reads the verified slot public keys, VC parameters and mapping table from the ledger.
AuthorityOutcome assemble_authority_outputs(const Ledger& ledger, const G1Matrix& a_pub, const G1Matrix& ua_pub,
                                            const std::vector<AuthoritySpec>& specs);

// Runs AU1-AU4 for every authority; the trust authority proves last so it receives index n.
AuthorityOutcome run_authority_setup(Ledger& ledger, const G1Matrix& a_pub, const G1Matrix& ua_pub,
                                     std::vector<AuthorityParticipant>& authorities, Rng& rng);

// Ledger plus completed trusted and authority setup, with every participant's secrets kept.
struct Deployment {
    Ledger ledger;
    std::vector<SetupParticipant> setup;
    SetupOutcome setup_out;
    std::vector<AuthorityParticipant> authorities;
    AuthorityOutcome out;
};

// Runs both ceremonies with `setup_participants` honest setup contributors named "setup-<i>".
Deployment deploy(std::size_t k, const std::vector<AuthoritySpec>& roster, std::size_t setup_participants, Rng& rng,
                  bool insecure_no_pok = false);

// ---- User key issuance ----

// Per-authority bit slices, nonces and the resulting commitment.
struct UserCommitment {
    Bytes gid;
    std::vector<std::string> bits;  // one slice per authority, index order
    std::vector<Scalar> nonces;
    std::vector<vc::VCMessage> msgs;
    vc::VCCommitment c;
};

UserCommitment commit_user_attributes(const MappingTable& table, const vc::VCParams& params, const Bytes& gid,
                                      const std::set<std::string>& issued, Rng& rng);

struct KeyRequest {
    Bytes gid;
    vc::VCCommitment c;
    std::string bits;
    vc::VCOpening opening;
};

KeyRequest make_key_request(const UserCommitment& uc, const vc::VCParams& params, std::uint32_t authority_index);

// Authority side: checks the opening against the slice the authority itself acknowledges,
// then issues one key part per owned slot. Throws PreconditionError on a bad opening.
std::vector<abe::KeyPart> issue_for_authority(const MappingRecord& record, const std::vector<abe::SlotSecret>& slots,
                                              const vc::VCParams& params, const std::vector<algebra::G2Point>& all_y,
                                              std::size_t k, const KeyRequest& request,
                                              const std::set<std::string>& acknowledged);

struct UserKeys {
    Bytes gid;
    vc::VCCommitment c;
    algebra::G2Vector h;
    abe::AttributeVector v;
    std::vector<abe::KeyPart> parts;  // L entries in slot order
};

// Commits to the user's attributes and collects one key part per slot from every authority
// in the table. `issued` holds the attributes the authorities acknowledge for this user.
using SlotSecrets = std::map<Address, std::vector<abe::SlotSecret>>;
SlotSecrets slot_secrets_of(const std::vector<AuthorityParticipant>& authorities);

UserKeys obtain_user_keys(const AuthorityOutcome& system, const SlotSecrets& secrets, const Bytes& gid,
                          const std::set<std::string>& issued, Rng& rng);

void encode(algebra::ByteWriter& w, const UserKeys& u);
UserKeys decode_user_keys(algebra::ByteReader& r);
void encode(algebra::ByteWriter& w, const MappingTable& t);
MappingTable decode_mapping_table(algebra::ByteReader& r);
void encode(algebra::ByteWriter& w, const vc::VCParams& p);
vc::VCParams decode_vc_params(algebra::ByteReader& r);

// ---- Transcript ----

// Ledger transcript plus the recorded final state hash.
Bytes write_transcript(const Ledger& ledger);

struct TranscriptCheck {
    bool ok = false;
    std::string reason;
    algebra::Digest32 state_hash{};
    std::size_t transactions = 0;
    std::size_t rejected = 0;
};

// Replays every transaction into a fresh ledger and compares the final state hash.
TranscriptCheck verify_transcript(ByteView transcript);

// Restores a ledger from write_transcript output. Throws DecodeError if the replayed state
// hash differs from the recorded one.
Ledger load_transcript(ByteView transcript);

}  // namespace dgov::ceremony
