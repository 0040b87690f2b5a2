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

#include <dgov/storage/share.hpp>

#include <algorithm>

#include <dgov/algebra/encoding.hpp>

namespace dgov::storage {

using algebra::ByteReader;
using algebra::ByteWriter;

Bytes metadata_to_bytes(const Metadata& m) {
    ByteWriter w;
    w.u8(algebra::kFormatVersion).raw(m.ak).raw(m.loc.digest);
    return std::move(w).take();
}

Metadata metadata_from_bytes(ByteView in) {
    ByteReader r(in);
    r.expect_version();
    Metadata m;
    const auto ak = r.raw(32);
    std::copy(ak.begin(), ak.end(), m.ak.begin());
    const auto loc = r.raw(32);
    std::copy(loc.begin(), loc.end(), m.loc.digest.begin());
    r.expect_end();
    return m;
}

Bytes sealed_to_bytes(const SealedMetadata& s) {
    ByteWriter w;
    w.u8(algebra::kFormatVersion);
    abe::encode(w, s.abe_ct);
    w.bytes(s.dem);
    return std::move(w).take();
}

SealedMetadata sealed_from_bytes(ByteView in) {
    ByteReader r(in);
    r.expect_version();
    SealedMetadata s;
    s.abe_ct = abe::decode_ciphertext(r);
    s.dem = r.bytes();
    r.expect_end();
    return s;
}

SymmetricKey kem_key(const algebra::GtPoint& r) {
    return algebra::derive_key(algebra::kKemTag, algebra::serialize(r));
}

SealedMetadata seal_metadata(const Metadata& m, const abe::SystemParams& params,
                             const std::vector<abe::SlotPublic>& slot_pubs, const abe::PolicyVector& x,
                             algebra::Rng& rng) {
    const auto r = algebra::GtPoint::random(rng);
    auto ct = abe::encrypt(params, slot_pubs, x, r, rng);
    return {std::move(ct), dem_encrypt(kem_key(r), metadata_to_bytes(m), rng)};
}

Metadata open_metadata(const SealedMetadata& s, const std::vector<abe::KeyPart>& parts, const abe::AttributeVector& v,
                       const algebra::G2Vector& h_pub) {
    const auto r = abe::decrypt(parts, v, h_pub, s.abe_ct);
    const auto m = dem_decrypt(kem_key(r), s.dem);
    if (!m) throw PolicyDeniedError("attributes do not satisfy the file policy");
    return metadata_from_bytes(*m);
}

ShareResult share_file(const ShareRequest& req, const abe::SystemParams& params,
                       const std::vector<abe::SlotPublic>& slot_pubs, Cas& cas, ledger::Ledger& ledger,
                       const ledger::TxContext& ctx, algebra::Rng& rng) {
    const auto x = abe::encode_policy(req.required_slots, params.L, rng, req.encoding);
    Metadata meta{random_key(rng), {}};
    meta.loc = cas.put(dem_encrypt(meta.ak, req.file, rng));
    ShareResult out{meta.loc, seal_metadata(meta, params, slot_pubs, x, rng), 0};
    const auto receipt = ledger.submit({ctx, ledger::Log{sealed_to_bytes(out.sealed), req.keyword}});
    if (!receipt.accepted) throw Error("log rejected: " + receipt.reason);
    ByteReader r(receipt.output);
    out.log_index = r.u32();
    return out;
}

Bytes retrieve_file(const ledger::LogEntry& entry, const std::vector<abe::KeyPart>& parts,
                    const abe::AttributeVector& v, const algebra::G2Vector& h_pub, const Cas& cas) {
    const auto meta = open_metadata(sealed_from_bytes(entry.ct), parts, v, h_pub);
    auto file = dem_decrypt(meta.ak, cas.get(meta.loc));
    if (!file) throw IntegrityError("stored file failed authentication at " + meta.loc.to_hex());
    return std::move(*file);
}

}  // namespace dgov::storage
