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

#include "app.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include <dgov/attacks/attacks.hpp>
#include <dgov/storage/share.hpp>

#include "state.hpp"

namespace dgov::cli {

namespace {

using ledger::Address;
using nlohmann::json;

struct Globals {
    std::string state = "dgov-state";
    std::string seed;
};

// Seeded runs derive one stream per command and ledger height so replays are reproducible.
std::unique_ptr<algebra::Rng> make_rng(const Globals& g, const std::string& command, std::size_t height) {
    if (g.seed.empty()) return std::make_unique<algebra::SystemRng>();
    return std::make_unique<algebra::SeededRng>(g.seed + "/" + command + "/" + std::to_string(height));
}

std::uint64_t now(const ledger::Ledger& l) {
    return std::max(l.state().last_timestamp, ceremony::Schedule::from(l.config()).after_setup);
}

Address user_address(const std::string& user) { return Address::from_label("user:" + user); }

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    return out;
}

class LedgerRejected : public Error {
  public:
    using Error::Error;
};

ceremony::AuthorityOutcome require_system(const StateDir& st) {
    auto sys = st.load_system();
    if (!sys) throw NotFoundError("authority setup has not run in " + st.root().string());
    return std::move(*sys);
}

// ---- commands ----

struct SetupOpts {
    std::size_t authorities = 3;
    std::size_t k = 2;
    std::size_t participants = 3;
    std::uint64_t fee_threshold = 1000000;
    std::string config_file;
    bool insecure_no_pok = false;
    bool force = false;
};

int cmd_setup(const Globals& g, const SetupOpts& o, std::ostream& out) {
    StateDir st(g.state);
    if (st.initialized() && !o.force) throw Error("state directory already initialized; pass --force to replace it");
    Config cfg;
    if (!o.config_file.empty()) {
        const auto b = read_file(o.config_file);
        cfg = parse_config(std::string(b.begin(), b.end()));
    } else {
        cfg = default_config(o.authorities, o.k);
        cfg.setup_participants = o.participants;
        cfg.registration_threshold = o.fee_threshold;
        cfg.insecure_no_pok = o.insecure_no_pok;
        cfg.validate();
    }
    if (o.force) std::filesystem::remove_all(g.state);
    ledger::Ledger ledger(cfg.ledger_config());
    auto rng = make_rng(g, "setup", 0);
    std::vector<ceremony::SetupParticipant> ps;
    for (const auto& a : cfg.setup_addresses()) ps.push_back({ceremony::make_setup_contribution(a, cfg.k, *rng)});
    const auto res = ceremony::run_trusted_setup(ledger, ps, *rng);
    st.save_config(cfg);
    st.save_ledger(ledger);
    st.save_setup(res);
    out << "trusted setup complete: " << ledger.state().sys.v_contributors.size() << " contributors, k=" << cfg.k
        << ", state " << to_hex(ledger.state_hash()) << "\n";
    return kOk;
}

int cmd_authority_setup(const Globals& g, std::ostream& out) {
    StateDir st(g.state);
    const auto cfg = st.load_config();
    if (st.load_system()) {
        out << "authority setup already complete\n";
        return kOk;
    }
    const auto setup = st.load_setup();
    if (!setup) throw NotFoundError("trusted setup has not run");
    auto ledger = st.load_ledger();
    auto rng = make_rng(g, "authority-setup", ledger.history().size());
    std::vector<ceremony::AuthorityParticipant> authorities;
    for (const auto& s : cfg.roster) authorities.push_back({s, std::nullopt, std::nullopt, std::nullopt});
    const auto res = ceremony::run_authority_setup(ledger, setup->a_pub, setup->ua_pub, authorities, *rng);
    for (const auto& a : authorities) st.save_authority_secrets(a.spec.name, a.contribution->slots);
    st.save_system(res);
    st.save_ledger(ledger);
    out << "authority setup complete: l=" << res.table.l << " L=" << res.table.L() << "\n";
    for (const auto& r : res.table.records) {
        out << "  [" << r.authority_index << "] " << r.name << " " << r.address.to_hex() << " slots " << r.slot_begin
            << ".." << r.slot_end - 1;
        if (r.trust) out << " (trust)";
        for (const auto& a : r.attributes) out << " " << a;
        out << "\n";
    }
    return kOk;
}

int cmd_register(const Globals& g, const std::string& user, std::uint64_t fee, std::ostream& out) {
    StateDir st(g.state);
    auto ledger = st.load_ledger();
    const auto r = ledger.submit({{user_address(user), now(ledger), fee}, ledger::Register{}});
    st.save_ledger(ledger);
    if (!r.accepted) throw LedgerRejected("SC_reg.register rejected: " + r.reason);
    out << "registered " << user << " gid " << to_hex(r.output) << "\n";
    return kOk;
}

int cmd_keygen(const Globals& g, const std::string& user, const std::string& attributes, std::ostream& out) {
    StateDir st(g.state);
    const auto sys = require_system(st);
    const auto ledger = st.load_ledger();
    const auto gid = ledger.gid_of(user_address(user));
    if (!gid) throw NotFoundError("user " + user + " is not registered");
    const auto attrs = split_csv(attributes);
    const std::set<std::string> issued(attrs.begin(), attrs.end());
    ceremony::SlotSecrets secrets;
    for (const auto& rec : sys.table.records) secrets[rec.address] = st.load_authority_secrets(rec.name);
    auto rng = make_rng(g, "keygen/" + user, ledger.history().size());
    const auto keys = ceremony::obtain_user_keys(sys, secrets, *gid, issued, *rng);
    st.save_user_keys(user, keys);
    out << "issued " << keys.parts.size() << " key parts to " << user << " v=(";
    for (std::size_t i = 0; i < keys.v.v.size(); ++i) out << (i ? "," : "") << (keys.v.v[i].is_zero() ? 0 : 1);
    out << ")\n";
    return kOk;
}

struct ShareOpts {
    std::string file;
    std::string policy;
    std::string keyword;
    std::string owner = "owner";
    bool naive = false;
};

int cmd_share(const Globals& g, const ShareOpts& o, std::ostream& out) {
    StateDir st(g.state);
    const auto sys = require_system(st);
    auto ledger = st.load_ledger();
    storage::ShareRequest req{read_file(o.file), {}, std::nullopt,
                              o.naive ? abe::PolicyEncoding::InsecureNaive : abe::PolicyEncoding::Randomized};
    for (const auto& a : split_csv(o.policy)) req.required_slots.insert(sys.table.slot_of(a));
    if (!o.keyword.empty()) req.keyword = o.keyword;
    auto cas = st.cas();
    auto rng = make_rng(g, "share", ledger.history().size());
    const auto res = storage::share_file(req, sys.params, sys.slot_pubs, cas, ledger,
                                         {Address::from_label("user:" + o.owner), now(ledger), 0}, *rng);
    st.save_ledger(ledger);
    out << json{{"index", res.log_index}, {"loc", res.loc.to_hex()}}.dump() << "\n";
    return kOk;
}

int cmd_retrieve(const Globals& g, const std::string& user, std::int64_t index, const std::string& out_path,
                 std::ostream& out) {
    StateDir st(g.state);
    const auto keys = st.load_user_keys(user);
    const auto ledger = st.load_ledger();
    const auto entry = ledger.log_get(index).at(0);
    const auto file = storage::retrieve_file(entry, keys.parts, keys.v, keys.h, st.cas());
    if (out_path == "-") {
        out.write(reinterpret_cast<const char*>(file.data()), static_cast<std::streamsize>(file.size()));
    } else {
        write_file(out_path, file);
        out << "recovered " << file.size() << " bytes to " << out_path << "\n";
    }
    return kOk;
}

int cmd_verify(const Globals& g, const std::string& path, std::ostream& out) {
    const auto file = path.empty() ? StateDir(g.state).transcript_path() : std::filesystem::path(path);
    const auto res = ceremony::verify_transcript(read_file(file));
    out << json{{"ok", res.ok},
                {"transactions", res.transactions},
                {"rejected", res.rejected},
                {"state_hash", to_hex(res.state_hash)},
                {"reason", res.reason}}
               .dump()
        << "\n";
    return res.ok ? kOk : kVerificationFailed;
}

int cmd_trace(const Globals& g, std::ostream& out) {
    out << StateDir(g.state).load_ledger().trace_text();
    return kOk;
}

struct AttackOpts {
    std::string mode = "both";
    std::size_t k = 2;
    std::size_t trials = 100;
    std::size_t participants = 3;
    bool naive = false;
};

int cmd_attack_rogue(const Globals& g, const AttackOpts& o, std::ostream& out) {
    for (bool weak : {true, false}) {
        if ((weak && o.mode == "default") || (!weak && o.mode == "insecure-no-pok")) continue;
        auto rng = make_rng(g, "attack/rogue-key", 0);
        const auto v = attacks::run_rogue_key_attack(
            {o.k, weak, true, o.naive ? abe::PolicyEncoding::InsecureNaive : abe::PolicyEncoding::Randomized}, *rng);
        out << v.to_json() << "\n";
    }
    return kOk;
}

int cmd_attack_infer(const Globals& g, const AttackOpts& o, std::ostream& out) {
    for (bool withhold : {false, true}) {
        if ((withhold && o.mode == "full") || (!withhold && o.mode == "withheld")) continue;
        auto rng = make_rng(g, "attack/infer-s", 0);
        const auto r = attacks::run_inference_attack({o.k, o.participants, o.trials, withhold}, *rng);
        out << r.verdict.to_json() << "\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Blockchain-governed attribute-based file sharing", "dgov"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--state", g.state, "State directory")->capture_default_str();
    app.add_option("--seed", g.seed, "Deterministic seed; omit for OS randomness");

    SetupOpts so;
    auto* setup = app.add_subcommand("setup", "Run the trusted setup ceremony");
    setup->add_option("--authorities", so.authorities, "Authorities including the trust authority")
        ->capture_default_str()
        ->check(CLI::Range(2, 64));
    setup->add_option("--k", so.k, "k-Lin parameter")->capture_default_str()->check(CLI::Range(1, 16));
    setup->add_option("--participants", so.participants, "Setup ceremony participants")
        ->capture_default_str()
        ->check(CLI::Range(1, 64));
    setup->add_option("--fee-threshold", so.fee_threshold, "Registration fees must exceed this")->capture_default_str();
    setup->add_option("--config", so.config_file, "INI deployment description")->check(CLI::ExistingFile);
    setup->add_flag("--insecure-no-pok", so.insecure_no_pok, "Disable proof-of-knowledge checks (attack demos)");
    setup->add_flag("--force", so.force, "Replace an existing state directory");

    auto* auth = app.add_subcommand("authority-setup", "Run the authority setup ceremony");

    std::string user;
    std::uint64_t fee = 0;
    auto* reg = app.add_subcommand("register", "Register a user and obtain its GID");
    reg->add_option("--user", user, "User name")->required();
    reg->add_option("--fee", fee, "Registration fee in simulated GWEI")->required();

    std::string attributes;
    auto* keygen = app.add_subcommand("keygen", "Collect key parts from every authority");
    keygen->add_option("--user", user, "User name")->required();
    keygen->add_option("--attributes", attributes, "Comma-separated attributes the authorities acknowledge");

    ShareOpts sh;
    auto* share = app.add_subcommand("share", "Encrypt, store and log a file");
    share->add_option("file", sh.file, "File to share")->required()->check(CLI::ExistingFile);
    share->add_option("--policy", sh.policy, "Comma-separated required attributes")->required();
    share->add_option("--keyword", sh.keyword, "Keyword recorded with the log entry");
    share->add_option("--owner", sh.owner, "Sharing user")->capture_default_str();
    share->add_flag("--naive-policy", sh.naive, "Use the fixed all-ones policy encoding");

    std::int64_t index = 0;
    std::string out_path = "-";
    auto* retrieve = app.add_subcommand("retrieve", "Recover a shared file");
    retrieve->add_option("--user", user, "User name")->required();
    retrieve->add_option("--index", index, "Log entry index")->required()->check(CLI::NonNegativeNumber);
    retrieve->add_option("--out", out_path, "Output file, - for stdout")->capture_default_str();

    AttackOpts ao;
    auto* attack = app.add_subcommand("attack", "Run an attack demonstration");
    attack->require_subcommand(1);
    auto* rogue = attack->add_subcommand("rogue-key", "Rogue authority key cancellation");
    rogue->add_option("--mode", ao.mode, "default, insecure-no-pok or both")
        ->capture_default_str()
        ->check(CLI::IsMember({"default", "insecure-no-pok", "both"}));
    rogue->add_option("--k", ao.k, "k-Lin parameter")->capture_default_str()->check(CLI::Range(1, 8));
    rogue->add_flag("--naive-policy", ao.naive, "Use the fixed all-ones policy encoding");
    auto* infer = attack->add_subcommand("infer-s", "Secret-vector inference from the A diagonal");
    infer->add_option("--mode", ao.mode, "full, withheld or both")
        ->capture_default_str()
        ->check(CLI::IsMember({"full", "withheld", "both"}));
    infer->add_option("--trials", ao.trials, "Encryptions to attack")->capture_default_str()->check(CLI::Range(1, 100000));
    infer->add_option("--participants", ao.participants, "Setup ceremony participants")
        ->capture_default_str()
        ->check(CLI::Range(1, 64));
    infer->add_option("--k", ao.k, "k-Lin parameter")->capture_default_str()->check(CLI::Range(1, 8));

    std::string transcript;
    auto* verify = app.add_subcommand("verify-transcript", "Replay a ledger transcript and check its state hash");
    verify->add_option("file", transcript, "Transcript file; defaults to the state directory's");

    auto* trace = app.add_subcommand("trace", "Print the ledger transaction trace");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*setup) return cmd_setup(g, so, out);
        if (*auth) return cmd_authority_setup(g, out);
        if (*reg) return cmd_register(g, user, fee, out);
        if (*keygen) return cmd_keygen(g, user, attributes, out);
        if (*share) return cmd_share(g, sh, out);
        if (*retrieve) return cmd_retrieve(g, user, index, out_path, out);
        if (*rogue) return cmd_attack_rogue(g, ao, out);
        if (*infer) return cmd_attack_infer(g, ao, out);
        if (*verify) return cmd_verify(g, transcript, out);
        if (*trace) return cmd_trace(g, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const LedgerRejected& e) {
        err << e.what() << "\n";
        return kLedgerReject;
    } catch (const ceremony::CeremonyError& e) {
        err << e.what() << "\n";
        return kLedgerReject;
    } catch (const storage::PolicyDeniedError& e) {
        err << "policy denied: " << e.what() << "\n";
        return kPolicyDenied;
    } catch (const NotFoundError& e) {
        err << "not found: " << e.what() << "\n";
        return kNotFound;
    } catch (const storage::IntegrityError& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const DecodeError& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kGeneric;
    }
    return kUsage;
}

}  // namespace dgov::cli
