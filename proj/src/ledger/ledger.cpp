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

#include <dgov/ledger/ledger.hpp>

#include <sstream>

#include <dgov/algebra/ops.hpp>

namespace dgov::ledger {

using algebra::ByteReader;
using algebra::ByteWriter;
using algebra::G2Point;
using pok::Action;
using pok::Element;

namespace {

const G1Point kG1 = G1Point::generator();
const G2Point kG2 = G2Point::generator();

struct Rejection {
    std::string reason;
};

[[noreturn]] void reject(std::string reason) { throw Rejection{std::move(reason)}; }

void require(bool cond, const char* reason) {
    if (!cond) reject(reason);
}

// Signals an accepted no-op (resubmission).
struct Ignored {
    std::string reason;
};

template <class P>
bool all_equal(const algebra::Matrix<P>& m, const P& p) {
    for (const auto& x : m.data())
        if (!(x == p)) return false;
    return true;
}

bool shape(const algebra::Matrix<G1Point>& m, std::size_t r, std::size_t c) { return m.rows() == r && m.cols() == c; }

// Elementwise element with generator bases on both sides and the given shape.
bool dual_element_ok(const Element& e, const std::string& name, std::size_t r, std::size_t c) {
    if (e.name != name || e.action != Action::Elementwise || !e.rp || !e.rp2 || !pok::well_formed(e)) return false;
    return e.rp->base.rows() == r && e.rp->base.cols() == c && all_equal(e.rp->base, kG1) &&
           all_equal(e.rp2->base, kG2);
}

void check_sys_layout(const std::vector<Element>& es, std::size_t k) {
    require(es.size() == kSysElementNames.size(), "wrong number of setup elements");
    const std::size_t shapes[6][2] = {{1, k}, {k + 1, k}, {1, 1}, {1, 1}, {1, k}, {k + 1, k}};
    for (std::size_t i = 0; i < es.size(); ++i)
        require(dual_element_ok(es[i], kSysElementNames[i], shapes[i][0], shapes[i][1]), "malformed setup element");
}

std::size_t check_auth_layout(const std::vector<Element>& es, std::size_t k, const G1Matrix& a_pub) {
    require(es.size() >= 6 && (es.size() - 3) % 3 == 0, "wrong number of authority elements");
    for (std::size_t i = 0; i < 3; ++i)
        require(dual_element_ok(es[i], kAuthPrefixNames[i], 1, 1), "malformed authority element");
    const std::size_t slots = (es.size() - 3) / 3;
    for (std::size_t s = 0; s < slots; ++s) {
        const auto& x = es[3 + 3 * s];
        const auto& tau = es[4 + 3 * s];
        const auto& sigma = es[5 + 3 * s];
        require(x.name == kSlotElementNames[0] && x.action == Action::TransposeProduct && pok::well_formed(x) &&
                    x.rp->base == a_pub && shape(x.rp->power, k + 1, k),
                "malformed X element");
        require(tau.name == kSlotElementNames[1] && tau.action == Action::TransposeProduct && pok::well_formed(tau) &&
                    tau.rp->base == a_pub && shape(tau.rp->power, 1, k),
                "malformed tau element");
        require(sigma.name == kSlotElementNames[2] && sigma.action == Action::Elementwise && !sigma.rp &&
                    sigma.rp2 && pok::well_formed(sigma) && sigma.rp2->base.rows() == 1 &&
                    sigma.rp2->base.cols() == 1 && sigma.rp2->base(0, 0) == kG2,
                "malformed sigma element");
    }
    return slots;
}

void check_proofs(const std::vector<Element>& es, const std::vector<pok::PoKProof>& proofs, const Scalar& h,
                  bool skip_pok) {
    require(proofs.size() == es.size(), "one proof per element required");
    const auto com = pok::commit_spairs(es);
    for (std::size_t i = 0; i < es.size(); ++i) {
        require(pok::check_same_ratio(es[i]), "SameRatio check failed");
        if (!skip_pok) require(util_check_pok(es[i], proofs[i], h, com.per_element[i]), "proof of knowledge rejected");
    }
}

bool ratio(const G1Point& a, const G1Point& b, const G2Point& d) { return algebra::same_ratio({a, b}, {kG2, d}); }

void commit_step(std::map<Address, Scalar>& collector, const TxContext& ctx, const Scalar& h) {
    if (collector.count(ctx.sender)) throw Ignored{"commitment already recorded"};
    collector.emplace(ctx.sender, h);
}

void reveal_step(std::map<Address, Scalar>& collector, std::map<Address, std::vector<Element>>& unverified,
                 const std::map<Address, std::vector<Element>>& verified, const TxContext& ctx,
                 const std::vector<Element>& elements) {
    const auto it = collector.find(ctx.sender);
    require(it != collector.end(), "no commitment from sender");
    if (unverified.count(ctx.sender) || verified.count(ctx.sender)) throw Ignored{"elements already revealed"};
    require(pok::commit_spairs(elements).overall == it->second, "revealed elements do not match commitment");
    unverified.emplace(ctx.sender, elements);
}

class Executor {
  public:
    Executor(const LedgerConfig& cfg, ContractState& st, const TxContext& ctx, Receipt& receipt)
        : cfg_(cfg), st_(st), ctx_(ctx), receipt_(receipt) {}

    void operator()(const SysCommit& c) {
        authorized();
        require(ctx_.timestamp <= cfg_.sys.ddl1, "past commit deadline");
        commit_step(st_.sys.h_collector, ctx_, c.h);
    }

    void operator()(const SysReveal& c) {
        authorized();
        require(ctx_.timestamp <= cfg_.sys.ddl1, "past reveal deadline");
        check_sys_layout(c.elements, cfg_.k);
        reveal_step(st_.sys.h_collector, st_.sys.unverified, st_.sys.verified, ctx_, c.elements);
    }

    void operator()(const SysProve& c) {
        authorized();
        within(cfg_.sys.ddl1, cfg_.sys.ddl2, "outside prove window");
        auto& s = st_.sys;
        if (s.verified.count(ctx_.sender)) throw Ignored{"elements already verified"};
        const auto it = s.unverified.find(ctx_.sender);
        require(it != s.unverified.end(), "no revealed elements");
        check_proofs(it->second, c.proofs, s.h_collector.at(ctx_.sender), cfg_.insecure_no_pok);
        s.verified.emplace(ctx_.sender, std::move(it->second));
        s.unverified.erase(it);
    }

    void operator()(const SysCompute& c) {
        authorized();
        within(cfg_.sys.ddl2, cfg_.sys.ddl3, "outside compute window");
        auto& s = st_.sys;
        const auto it = s.verified.find(ctx_.sender);
        require(it != s.verified.end(), "sender has no verified elements");
        for (const auto& a : s.v_contributors)
            if (a == ctx_.sender) throw Ignored{"already contributed to V"};
        const auto& e = it->second;
        const std::size_t k = cfg_.k;
        require(shape(c.v, k + 1, k) && shape(c.v_prime, k + 1, k), "V has wrong shape");
        const auto& head = s.v;
        const auto& rp_a = e[0].rp2->power;
        const auto& rp_alpha = e[2].rp2->power(0, 0);
        const auto& rp_alpha_a = e[4].rp2->power;
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i == k) {
                    require(c.v(i, j) == kG1, "V bottom row must be g1");
                    require(ratio(head.m_prime(i, j), c.v_prime(i, j), rp_alpha), "V' bottom row inconsistent");
                } else if (i != j) {
                    require(c.v(i, j).is_identity() && c.v_prime(i, j).is_identity(), "V off-diagonal must be 1");
                } else {
                    require(ratio(head.m(i, i), c.v(i, i), rp_a(0, i)), "V is not a proper multiple of the head");
                    require(ratio(head.m_prime(i, i), c.v_prime(i, i), rp_alpha_a(0, i)),
                            "V' is not a proper multiple of the head");
                }
            }
        require(ratio(head.theta, c.theta, rp_alpha), "theta is not a proper multiple of the head");
        s.v = ChainHead{c.v, c.theta, c.v_prime};
        s.v_contributors.push_back(ctx_.sender);
    }

    void operator()(const SysGenerate& c) {
        authorized();
        within(cfg_.sys.ddl2, cfg_.sys.ddl3, "outside generate window");
        auto& s = st_.sys;
        const auto it = s.verified.find(ctx_.sender);
        require(it != s.verified.end(), "sender has no verified elements");
        for (const auto& a : s.w_contributors)
            if (a == ctx_.sender) throw Ignored{"already contributed to W"};
        const auto& e = it->second;
        const std::size_t k = cfg_.k;
        require(shape(c.w, k + 1, k) && shape(c.w_prime, k + 1, k), "W has wrong shape");
        const auto& head = s.w;
        for (std::size_t i = 0; i < c.w.size(); ++i) {
            require(ratio(head.m.data()[i], c.w.data()[i], e[1].rp2->power.data()[i]),
                    "W is not a proper multiple of the head");
            require(ratio(head.m_prime.data()[i], c.w_prime.data()[i], e[5].rp2->power.data()[i]),
                    "W' is not a proper multiple of the head");
        }
        require(ratio(head.theta, c.theta, e[3].rp2->power(0, 0)), "theta is not a proper multiple of the head");
        s.w = ChainHead{c.w, c.theta, c.w_prime};
        s.w_contributors.push_back(ctx_.sender);
    }

    void operator()(const AuthCommit& c) {
        authorized();
        require(ctx_.timestamp <= cfg_.auth.ddl1, "past commit deadline");
        commit_step(st_.auth.h_collector, ctx_, c.h);
    }

    void operator()(const AuthReveal& c) {
        authorized();
        require(ctx_.timestamp <= cfg_.auth.ddl1, "past reveal deadline");
        check_auth_layout(c.elements, cfg_.k, st_.sys.v.m);
        reveal_step(st_.auth.h_collector, st_.auth.unverified, st_.auth.verified, ctx_, c.elements);
    }

    void operator()(const AuthProve& c) {
        authorized();
        within(cfg_.auth.ddl1, cfg_.auth.ddl2, "outside prove window");
        auto& a = st_.auth;
        if (a.verified.count(ctx_.sender)) throw Ignored{"elements already verified"};
        const auto it = a.unverified.find(ctx_.sender);
        require(it != a.unverified.end(), "no revealed elements");
        check_proofs(it->second, c.proofs, a.h_collector.at(ctx_.sender), cfg_.insecure_no_pok);
        a.verified.emplace(ctx_.sender, std::move(it->second));
        a.unverified.erase(it);
        a.index[ctx_.sender] = ++a.counter;
    }

    void operator()(const AuthGenerate& c) {
        authorized();
        within(cfg_.auth.ddl2, cfg_.auth.ddl3, "outside generate window");
        auto& a = st_.auth;
        const auto it = a.verified.find(ctx_.sender);
        require(it != a.verified.end(), "sender has no verified elements");
        if (a.verified_o.count(ctx_.sender)) throw Ignored{"cross terms already published"};
        const std::size_t n = a.counter;
        require(c.o.size() == n && c.theta.size() == n && c.o_prime.size() == n, "one cross term per authority");
        const std::uint32_t self = a.index.at(ctx_.sender);
        const auto& mine = it->second;
        for (std::uint32_t j = 1; j <= n; ++j) {
            const auto& o = c.o[j - 1];
            const auto& th = c.theta[j - 1];
            const auto& op = c.o_prime[j - 1];
            if (j == self) {
                require(o.is_identity() && th.is_identity() && op.is_identity(), "own cross term must be 1");
                continue;
            }
            const auto& partner = a.verified.at(*a.by_index(j));
            require(ratio(partner[0].rp->power(0, 0), o, mine[0].rp2->power(0, 0)), "cross term o_ij rejected");
            require(ratio(partner[1].rp->power(0, 0), th, mine[1].rp2->power(0, 0)), "cross term theta_ij rejected");
            require(ratio(partner[2].rp->power(0, 0), op, mine[2].rp2->power(0, 0)), "cross term o'_ij rejected");
        }
        require(c.attribute_size == (mine.size() - 3) / 3, "attribute size does not match revealed slots");
        a.verified_o[ctx_.sender] = CrossTerms{c.o, c.theta, c.o_prime};
        a.attribute_size[ctx_.sender] = c.attribute_size;
    }

    void operator()(const Register&) {
        require(ctx_.value > cfg_.registration_threshold, "registration fee too low");
        auto gid = gid_for(ctx_.sender);
        st_.reg.collector[ctx_.sender] = gid;
        receipt_.output = std::move(gid);
    }

    void operator()(const Log& c) {
        st_.log.entries.push_back(LogEntry{c.ct, c.kw});
        ByteWriter w;
        w.u32(static_cast<std::uint32_t>(st_.log.entries.size() - 1));
        receipt_.output = std::move(w).take();
    }

  private:
    void authorized() const { require(cfg_.aa_list.count(ctx_.sender) > 0, "sender not in AAlist"); }
    void within(std::uint64_t lo, std::uint64_t hi, const char* reason) const {
        require(ctx_.timestamp >= lo && ctx_.timestamp <= hi, reason);
    }

    const LedgerConfig& cfg_;
    ContractState& st_;
    const TxContext& ctx_;
    Receipt& receipt_;
};

void put_elements_map(ByteWriter& w, const std::map<Address, std::vector<Element>>& m) {
    w.u32(static_cast<std::uint32_t>(m.size()));
    for (const auto& [addr, es] : m) {
        w.raw(addr.view()).u32(static_cast<std::uint32_t>(es.size()));
        for (const auto& e : es) pok::encode(w, e);
    }
}

void put_scalar_map(ByteWriter& w, const std::map<Address, Scalar>& m) {
    w.u32(static_cast<std::uint32_t>(m.size()));
    for (const auto& [addr, h] : m) w.raw(addr.view()).put(h);
}

void put_head(ByteWriter& w, const ChainHead& h) { w.put(h.m).put(h.theta).put(h.m_prime); }

void put_addresses(ByteWriter& w, const std::vector<Address>& v) {
    w.u32(static_cast<std::uint32_t>(v.size()));
    for (const auto& a : v) w.raw(a.view());
}

}  // namespace

ChainHead genesis_v(std::size_t k) {
    G1Matrix m(k + 1, k);
    for (std::size_t j = 0; j < k; ++j) {
        m(j, j) = kG1;
        m(k, j) = kG1;
    }
    return {m, kG1, m};
}

ChainHead genesis_w(std::size_t k) {
    G1Matrix m(k + 1, k, kG1);
    return {m, kG1, m};
}

std::optional<Address> AuthState::by_index(std::uint32_t i) const {
    for (const auto& [addr, idx] : index)
        if (idx == i) return addr;
    return std::nullopt;
}

std::string TraceRecord::to_line() const {
    std::ostringstream os;
    os << sender.to_hex() << ' ' << function << ' ' << (accepted ? "accept" : "reject") << ' '
       << dgov::to_hex(state_hash);
    return os.str();
}

Ledger::Ledger(LedgerConfig config) : config_(std::move(config)) {
    if (config_.k == 0) throw PreconditionError("ledger needs k >= 1");
    state_.sys.v = genesis_v(config_.k);
    state_.sys.w = genesis_w(config_.k);
}

Receipt Ledger::submit(const Transaction& tx) {
    if (dispatching_) throw PreconditionError("re-entrant submission from a log subscriber");
    history_.push_back(tx);
    Receipt receipt;
    ContractState next = state_;
    try {
        if (tx.ctx.timestamp < state_.last_timestamp) reject("timestamp earlier than the previous block");
        std::visit(Executor(config_, next, tx.ctx, receipt), tx.call);
        next.last_timestamp = tx.ctx.timestamp;
        state_ = std::move(next);
        receipt.accepted = true;
    } catch (const Ignored& i) {
        receipt.accepted = true;
        receipt.reason = i.reason;
    } catch (const Rejection& r) {
        receipt.accepted = false;
        receipt.reason = r.reason;
        receipt.output.clear();
    } catch (const Error& e) {
        receipt.accepted = false;
        receipt.reason = e.what();
        receipt.output.clear();
    }
    trace_.push_back(TraceRecord{tx.ctx.sender, call_name(tx.call), receipt.accepted, state_hash()});

    if (receipt.accepted && receipt.reason.empty() && std::holds_alternative<Log>(tx.call)) {
        const std::size_t idx = state_.log.entries.size() - 1;
        dispatching_ = true;
        try {
            for (const auto& s : subscribers_) s(state_.log.entries[idx], idx);
        } catch (...) {
            dispatching_ = false;
            throw;
        }
        dispatching_ = false;
    }
    return receipt;
}

Bytes Ledger::serialize_state() const {
    ByteWriter w;
    w.u8(algebra::kFormatVersion);
    const auto& s = state_.sys;
    put_scalar_map(w, s.h_collector);
    put_elements_map(w, s.unverified);
    put_elements_map(w, s.verified);
    put_head(w, s.v);
    put_head(w, s.w);
    put_addresses(w, s.v_contributors);
    put_addresses(w, s.w_contributors);

    const auto& a = state_.auth;
    put_scalar_map(w, a.h_collector);
    put_elements_map(w, a.unverified);
    put_elements_map(w, a.verified);
    w.u32(a.counter).u32(static_cast<std::uint32_t>(a.index.size()));
    for (const auto& [addr, i] : a.index) w.raw(addr.view()).u32(i);
    w.u32(static_cast<std::uint32_t>(a.verified_o.size()));
    for (const auto& [addr, ct] : a.verified_o) w.raw(addr.view()).put(ct.o).put(ct.theta).put(ct.o_prime);
    w.u32(static_cast<std::uint32_t>(a.attribute_size.size()));
    for (const auto& [addr, l] : a.attribute_size) w.raw(addr.view()).u32(l);

    w.u32(static_cast<std::uint32_t>(state_.reg.collector.size()));
    for (const auto& [addr, gid] : state_.reg.collector) w.raw(addr.view()).bytes(gid);

    w.u32(static_cast<std::uint32_t>(state_.log.entries.size()));
    for (const auto& e : state_.log.entries) {
        w.bytes(e.ct).boolean(e.kw.has_value());
        if (e.kw) w.str(*e.kw);
    }
    w.u64(state_.last_timestamp);
    return std::move(w).take();
}

algebra::Digest32 Ledger::state_hash() const { return algebra::derive_key(algebra::kStateTag, serialize_state()); }

std::string Ledger::trace_text() const {
    std::string out;
    for (const auto& r : trace_) out += r.to_line() + "\n";
    return out;
}

std::vector<LogEntry> Ledger::log_get(std::int64_t index) const {
    const auto& entries = state_.log.entries;
    if (index == -1) return entries;
    if (index < 0 || static_cast<std::size_t>(index) >= entries.size()) throw NotFoundError("log index out of range");
    return {entries[static_cast<std::size_t>(index)]};
}

void Ledger::subscribe(Subscriber s) { subscribers_.push_back(std::move(s)); }

std::optional<Bytes> Ledger::gid_of(const Address& a) const {
    const auto it = state_.reg.collector.find(a);
    if (it == state_.reg.collector.end()) return std::nullopt;
    return it->second;
}

Scalar util_hash(ByteView data) { return algebra::commit_hash(data); }

bool util_same_ratio(const std::pair<G1Point, G1Point>& p1, const std::pair<G2Point, G2Point>& p2) {
    return algebra::same_ratio(p1, p2);
}

bool util_check_pok(const Element& e, const pok::PoKProof& proof, const Scalar& h, const Scalar& h_s) {
    return pok::verify_element(e, proof, pok::proof_context(h, h_s));
}

Bytes gid_for(const Address& a) {
    const auto s = algebra::commit_hash(a.view()).to_bytes();
    return {s.begin(), s.end()};
}

void encode(ByteWriter& w, const LedgerConfig& c) {
    w.u32(static_cast<std::uint32_t>(c.k)).u32(static_cast<std::uint32_t>(c.aa_list.size()));
    for (const auto& a : c.aa_list) w.raw(a.view());
    for (const auto* d : {&c.sys, &c.auth}) w.u64(d->ddl1).u64(d->ddl2).u64(d->ddl3);
    w.u64(c.registration_threshold).boolean(c.insecure_no_pok);
}

LedgerConfig decode_ledger_config(ByteReader& r) {
    LedgerConfig c;
    c.k = r.u32();
    const auto n = r.u32();
    for (std::uint32_t i = 0; i < n; ++i) {
        Address a;
        const auto b = r.raw(20);
        std::copy(b.begin(), b.end(), a.bytes.begin());
        c.aa_list.insert(a);
    }
    for (auto* d : {&c.sys, &c.auth}) {
        d->ddl1 = r.u64();
        d->ddl2 = r.u64();
        d->ddl3 = r.u64();
    }
    c.registration_threshold = r.u64();
    c.insecure_no_pok = r.boolean();
    return c;
}

Bytes export_transcript(const Ledger& ledger) {
    ByteWriter w;
    w.u8(algebra::kFormatVersion);
    encode(w, ledger.config());
    w.u32(static_cast<std::uint32_t>(ledger.history().size()));
    for (const auto& tx : ledger.history()) encode(w, tx);
    return std::move(w).take();
}

Ledger replay_transcript(ByteView transcript) {
    ByteReader r(transcript);
    r.expect_version();
    Ledger ledger(decode_ledger_config(r));
    const auto n = r.u32();
    for (std::uint32_t i = 0; i < n; ++i) ledger.submit(decode_transaction(r));
    r.expect_end();
    return ledger;
}

}  // namespace dgov::ledger
