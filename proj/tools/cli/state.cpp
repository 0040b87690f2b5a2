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

#include "state.hpp"

#include <fstream>
#include <iterator>

#include <dgov/algebra/encoding.hpp>

namespace dgov::cli {

using algebra::ByteReader;
using algebra::ByteWriter;

Bytes read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw NotFoundError("cannot read " + p.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& p, ByteView data) {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    const auto tmp = p.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
        if (!out) throw Error("cannot write " + tmp);
    }
    std::filesystem::rename(tmp, p);
}

StateDir::StateDir(std::filesystem::path root) : root_(std::move(root)) {}

bool StateDir::initialized() const { return std::filesystem::exists(root_ / "config.ini"); }

void StateDir::save_config(const Config& c) const { write_file(root_ / "config.ini", as_bytes(render_config(c))); }

Config StateDir::load_config() const {
    if (!initialized()) throw NotFoundError("no deployment in " + root_.string() + "; run setup first");
    const auto b = read_file(root_ / "config.ini");
    return parse_config(std::string(b.begin(), b.end()));
}

void StateDir::save_ledger(const ledger::Ledger& l) const { write_file(transcript_path(), ceremony::write_transcript(l)); }

ledger::Ledger StateDir::load_ledger() const { return ceremony::load_transcript(read_file(transcript_path())); }

void StateDir::save_setup(const ceremony::SetupOutcome& s) const {
    ByteWriter w;
    w.u8(algebra::kFormatVersion).put(s.a_pub).put(s.ua_pub);
    write_file(root_ / "public" / "setup.bin", w.data());
}

std::optional<ceremony::SetupOutcome> StateDir::load_setup() const {
    const auto p = root_ / "public" / "setup.bin";
    if (!std::filesystem::exists(p)) return std::nullopt;
    const auto b = read_file(p);
    ByteReader r(b);
    r.expect_version();
    ceremony::SetupOutcome s;
    s.a_pub = r.matrix<algebra::G1Point>();
    s.ua_pub = r.matrix<algebra::G1Point>();
    r.expect_end();
    return s;
}

void StateDir::save_system(const ceremony::AuthorityOutcome& o) const {
    ByteWriter w;
    w.u8(algebra::kFormatVersion);
    abe::encode(w, o.params);
    w.u32(static_cast<std::uint32_t>(o.slot_pubs.size()));
    for (const auto& p : o.slot_pubs) abe::encode(w, p);
    ceremony::encode(w, o.vc_params);
    ceremony::encode(w, o.table);
    write_file(root_ / "public" / "system.bin", w.data());
}

std::optional<ceremony::AuthorityOutcome> StateDir::load_system() const {
    const auto p = root_ / "public" / "system.bin";
    if (!std::filesystem::exists(p)) return std::nullopt;
    const auto b = read_file(p);
    ByteReader r(b);
    r.expect_version();
    ceremony::AuthorityOutcome o;
    o.params = abe::decode_system_params(r);
    const auto n = r.u32();
    if (n > r.remaining()) throw DecodeError("slot count exceeds input");
    for (std::uint32_t i = 0; i < n; ++i) o.slot_pubs.push_back(abe::decode_slot_public(r));
    o.vc_params = ceremony::decode_vc_params(r);
    o.table = ceremony::decode_mapping_table(r);
    r.expect_end();
    return o;
}

void StateDir::save_authority_secrets(const std::string& name, const std::vector<abe::SlotSecret>& slots) const {
    ByteWriter w;
    w.u8(algebra::kFormatVersion).u32(static_cast<std::uint32_t>(slots.size()));
    for (const auto& s : slots) abe::encode(w, s);
    write_file(root_ / "authorities" / (name + ".bin"), w.data());
}

std::vector<abe::SlotSecret> StateDir::load_authority_secrets(const std::string& name) const {
    const auto b = read_file(root_ / "authorities" / (name + ".bin"));
    ByteReader r(b);
    r.expect_version();
    const auto n = r.u32();
    if (n > r.remaining()) throw DecodeError("slot count exceeds input");
    std::vector<abe::SlotSecret> out;
    for (std::uint32_t i = 0; i < n; ++i) out.push_back(abe::decode_slot_secret(r));
    r.expect_end();
    return out;
}

void StateDir::save_user_keys(const std::string& user, const ceremony::UserKeys& keys) const {
    ByteWriter w;
    ceremony::encode(w, keys);
    write_file(root_ / "users" / (user + ".keys"), w.data());
}

ceremony::UserKeys StateDir::load_user_keys(const std::string& user) const {
    const auto p = root_ / "users" / (user + ".keys");
    if (!std::filesystem::exists(p)) throw NotFoundError("no keys for user " + user + "; run keygen first");
    const auto b = read_file(p);
    ByteReader r(b);
    auto keys = ceremony::decode_user_keys(r);
    r.expect_end();
    return keys;
}

}  // namespace dgov::cli
