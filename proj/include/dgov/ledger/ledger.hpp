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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <dgov/algebra/hash.hpp>
#include <dgov/ledger/transaction.hpp>

namespace dgov::ledger {

// Element order fixed for every transcript.
inline const std::vector<std::string> kSysElementNames = {"A", "U", "alpha_A", "alpha_U", "alphaA_A", "alphaU_U"};
inline const std::vector<std::string> kAuthPrefixNames = {"z", "alpha_z", "alphaz_z"};
inline const std::vector<std::string> kSlotElementNames = {"X", "tau", "sigma"};

struct Deadlines {
    std::uint64_t ddl1 = 0;
    std::uint64_t ddl2 = 0;
    std::uint64_t ddl3 = 0;
    friend bool operator==(const Deadlines&, const Deadlines&) = default;
};

struct LedgerConfig {
    std::size_t k = 2;
    std::set<Address> aa_list;
    // commit/reveal up to ddl1, prove in [ddl1, ddl2], compute/generate in [ddl2, ddl3]. Inclusive.
    Deadlines sys;
    Deadlines auth;
    std::uint64_t registration_threshold = 1000000;
    // Skips proof-of-knowledge checks in both prove entry points. Attack demonstrations only.
    bool insecure_no_pok = false;

    friend bool operator==(const LedgerConfig&, const LedgerConfig&) = default;
};

struct ChainHead {
    G1Matrix m;
    G1Point theta;
    G1Matrix m_prime;
    friend bool operator==(const ChainHead&, const ChainHead&) = default;
};

// Genesis heads: the k-Lin shape with unit diagonal for V, all-g1 for W.
ChainHead genesis_v(std::size_t k);
ChainHead genesis_w(std::size_t k);

struct SysState {
    std::map<Address, Scalar> h_collector;
    std::map<Address, std::vector<pok::Element>> unverified;
    std::map<Address, std::vector<pok::Element>> verified;
    ChainHead v;
    ChainHead w;
    std::vector<Address> v_contributors;
    std::vector<Address> w_contributors;
};

struct CrossTerms {
    G1Vector o;
    G1Vector theta;
    G1Vector o_prime;
};

struct AuthState {
    std::map<Address, Scalar> h_collector;
    std::map<Address, std::vector<pok::Element>> unverified;
    std::map<Address, std::vector<pok::Element>> verified;
    std::uint32_t counter = 0;
    std::map<Address, std::uint32_t> index;  // 1-based, arrival order
    std::map<Address, CrossTerms> verified_o;
    std::map<Address, std::uint32_t> attribute_size;

    // Address holding index i, if any.
    std::optional<Address> by_index(std::uint32_t i) const;
};

struct RegState {
    std::map<Address, Bytes> collector;  // GID
};

struct LogEntry {
    Bytes ct;
    std::optional<std::string> kw;
    friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

struct LogState {
    std::vector<LogEntry> entries;
};

struct ContractState {
    SysState sys;
    AuthState auth;
    RegState reg;
    LogState log;
    std::uint64_t last_timestamp = 0;
};

struct Receipt {
    bool accepted = false;
    std::string reason;  // empty on a plain accept
    Bytes output;        // GID for registration, entry index for log
};

struct TraceRecord {
    Address sender;
    std::string function;
    bool accepted = false;
    algebra::Digest32 state_hash{};

    std::string to_line() const;
};

// Deterministic single-writer simulation of SC_sys, SC_auth, SC_reg and SC_log.
class Ledger {
  public:
    using Subscriber = std::function<void(const LogEntry&, std::size_t index)>;

    explicit Ledger(LedgerConfig config);

    // Applies one transaction atomically: on rejection the state is untouched.
    Receipt submit(const Transaction& tx);

    const LedgerConfig& config() const { return config_; }
    const ContractState& state() const { return state_; }
    Bytes serialize_state() const;
    algebra::Digest32 state_hash() const;

    const std::vector<TraceRecord>& trace() const { return trace_; }
    std::string trace_text() const;
    const std::vector<Transaction>& history() const { return history_; }

    // SC_log.get: -1 returns every entry, otherwise the single entry. Throws NotFoundError.
    std::vector<LogEntry> log_get(std::int64_t index) const;
    // Delivered synchronously after a log call commits. Subscribers may not submit.
    void subscribe(Subscriber s);

    std::optional<Bytes> gid_of(const Address& a) const;

  private:
    LedgerConfig config_;
    ContractState state_;
    std::vector<TraceRecord> trace_;
    std::vector<Transaction> history_;
    std::vector<Subscriber> subscribers_;
    bool dispatching_ = false;
};

// SC_util: the helpers the contracts call (hash, SameRatio, proof check).
Scalar util_hash(ByteView data);
bool util_same_ratio(const std::pair<G1Point, G1Point>& p1,
                     const std::pair<algebra::G2Point, algebra::G2Point>& p2);
bool util_check_pok(const pok::Element& e, const pok::PoKProof& proof, const Scalar& h, const Scalar& h_s);

// GID = COMMIT(sender address).
Bytes gid_for(const Address& a);

// Config plus the ordered transaction list; replaying reproduces the state byte for byte.
void encode(algebra::ByteWriter& w, const LedgerConfig& c);
LedgerConfig decode_ledger_config(algebra::ByteReader& r);
Bytes export_transcript(const Ledger& ledger);
Ledger replay_transcript(ByteView transcript);

}  // namespace dgov::ledger
