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

namespace dgov::ceremony {

using algebra::ByteReader;
using algebra::ByteWriter;

void encode(ByteWriter& w, const UserKeys& u) {
    w.u8(algebra::kFormatVersion);
    w.bytes(u.gid);
    w.put(u.c.c);
    w.put(u.h);
    w.put(u.v.v);
    w.u32(static_cast<std::uint32_t>(u.parts.size()));
    for (const auto& p : u.parts) abe::encode(w, p);
}

UserKeys decode_user_keys(ByteReader& r) {
    r.expect_version();
    UserKeys u;
    u.gid = r.bytes();
    u.c.c = r.g1();
    u.h = r.vec<algebra::G2Point>();
    u.v.v = r.vec<Scalar>();
    const auto n = r.u32();
    if (n > r.remaining()) throw DecodeError("key part count exceeds input");
    for (std::uint32_t i = 0; i < n; ++i) u.parts.push_back(abe::decode_key_part(r));
    return u;
}

void encode(ByteWriter& w, const MappingTable& t) {
    w.u8(algebra::kFormatVersion);
    w.u64(t.l);
    w.u32(static_cast<std::uint32_t>(t.records.size()));
    for (const auto& rec : t.records) {
        w.raw(rec.address.view());
        w.str(rec.name);
        w.u32(rec.authority_index);
        w.u64(rec.slot_begin);
        w.u64(rec.slot_end);
        w.boolean(rec.trust);
        w.u32(static_cast<std::uint32_t>(rec.attributes.size()));
        for (const auto& a : rec.attributes) w.str(a);
    }
}

MappingTable decode_mapping_table(ByteReader& r) {
    r.expect_version();
    MappingTable t;
    t.l = r.u64();
    const auto n = r.u32();
    if (n > r.remaining()) throw DecodeError("record count exceeds input");
    for (std::uint32_t i = 0; i < n; ++i) {
        MappingRecord rec;
        const auto a = r.raw(20);
        std::copy(a.begin(), a.end(), rec.address.bytes.begin());
        rec.name = r.str();
        rec.authority_index = r.u32();
        rec.slot_begin = r.u64();
        rec.slot_end = r.u64();
        rec.trust = r.boolean();
        const auto m = r.u32();
        if (m > r.remaining()) throw DecodeError("attribute count exceeds input");
        for (std::uint32_t j = 0; j < m; ++j) rec.attributes.push_back(r.str());
        t.records.push_back(std::move(rec));
    }
    if (t.records.empty() || !t.records.back().trust) throw DecodeError("mapping table lacks a trust authority");
    return t;
}

void encode(ByteWriter& w, const vc::VCParams& p) {
    w.u8(algebra::kFormatVersion);
    w.put(p.o);
    w.put(p.o_cross);
    w.put(p.z_pub);
}

vc::VCParams decode_vc_params(ByteReader& r) {
    r.expect_version();
    auto o = r.vec<algebra::G1Point>();
    auto cross = r.matrix<algebra::G1Point>();
    auto z = r.vec<algebra::G2Point>();
    return vc::assemble_vc_params(std::move(o), std::move(cross), std::move(z));
}

Bytes write_transcript(const Ledger& ledger) {
    ByteWriter w;
    w.u8(algebra::kFormatVersion);
    w.bytes(ledger::export_transcript(ledger));
    const auto h = ledger.state_hash();
    w.raw({h.data(), h.size()});
    return std::move(w).take();
}

namespace {

struct ParsedTranscript {
    Bytes body;
    algebra::Digest32 recorded{};
};

ParsedTranscript parse_transcript(ByteView transcript) {
    ByteReader r(transcript);
    r.expect_version();
    ParsedTranscript p;
    p.body = r.bytes();
    const auto h = r.raw(32);
    std::copy(h.begin(), h.end(), p.recorded.begin());
    r.expect_end();
    return p;
}

}  // namespace

TranscriptCheck verify_transcript(ByteView transcript) {
    TranscriptCheck out;
    try {
        const auto parsed = parse_transcript(transcript);
        const Ledger replayed = ledger::replay_transcript(parsed.body);
        out.state_hash = replayed.state_hash();
        out.transactions = replayed.history().size();
        out.rejected = static_cast<std::size_t>(std::count_if(
            replayed.trace().begin(), replayed.trace().end(), [](const auto& t) { return !t.accepted; }));
        if (parsed.recorded != out.state_hash) {
            out.reason = "final state hash differs from the recorded one";
            return out;
        }
        out.ok = true;
    } catch (const Error& e) {
        out.reason = e.what();
    }
    return out;
}

Ledger load_transcript(ByteView transcript) {
    const auto parsed = parse_transcript(transcript);
    Ledger l = ledger::replay_transcript(parsed.body);
    if (l.state_hash() != parsed.recorded) throw DecodeError("transcript state hash mismatch");
    return l;
}

}  // namespace dgov::ceremony
