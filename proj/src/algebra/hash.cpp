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

#include <dgov/algebra/hash.hpp>

#include <openssl/evp.h>

#include <dgov/common/error.hpp>

namespace dgov::algebra {

namespace {

EVP_MD_CTX* md(void* p) { return static_cast<EVP_MD_CTX*>(p); }

}  // namespace

TaggedHasher::TaggedHasher(std::string_view tag) : ctx_(EVP_MD_CTX_new()) {
    if (ctx_ == nullptr || EVP_DigestInit_ex(md(ctx_), EVP_blake2b512(), nullptr) != 1)
        throw Error("blake2b init failed");
    if (tag.size() > 255) throw PreconditionError("hash tag too long");
    const std::uint8_t len = static_cast<std::uint8_t>(tag.size());
    update(ByteView{&len, 1});
    update(as_bytes(tag));
}

TaggedHasher::~TaggedHasher() { EVP_MD_CTX_free(md(ctx_)); }

TaggedHasher& TaggedHasher::update(ByteView data) {
    if (!data.empty() && EVP_DigestUpdate(md(ctx_), data.data(), data.size()) != 1) throw Error("blake2b update failed");
    return *this;
}

TaggedHasher& TaggedHasher::update_u32(std::uint32_t v) {
    const std::uint8_t be[4] = {static_cast<std::uint8_t>(v >> 24), static_cast<std::uint8_t>(v >> 16),
                                static_cast<std::uint8_t>(v >> 8), static_cast<std::uint8_t>(v)};
    return update(ByteView{be, 4});
}

TaggedHasher& TaggedHasher::update_prefixed(ByteView data) {
    update_u32(static_cast<std::uint32_t>(data.size()));
    return update(data);
}

Digest64 TaggedHasher::finalize() {
    Digest64 out{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(md(ctx_), out.data(), &len) != 1 || len != out.size()) throw Error("blake2b final failed");
    return out;
}

Digest64 tagged_hash(std::string_view tag, ByteView data) {
    TaggedHasher h(tag);
    h.update(data);
    return h.finalize();
}

Digest32 derive_key(std::string_view tag, ByteView data) {
    const auto d = tagged_hash(tag, data);
    Digest32 out{};
    std::copy_n(d.begin(), out.size(), out.begin());
    return out;
}

Scalar commit_hash(ByteView data) {
    auto d = tagged_hash(kCommitTag, data);
    Scalar s = Scalar::from_bytes_wide(d);
    // Probability ~2^-255; handled so the output is always in Z_p^*.
    for (std::uint32_t ctr = 1; s.is_zero(); ++ctr) {
        TaggedHasher h(kCommitTag);
        h.update(d).update_u32(ctr);
        d = h.finalize();
        s = Scalar::from_bytes_wide(d);
    }
    return s;
}

G2Point hash_to_g2(std::string_view domain, ByteView gid, const G1Point& c, std::uint32_t index) {
    Bytes msg;
    auto put_u32 = [&msg](std::uint32_t v) {
        for (int sh = 24; sh >= 0; sh -= 8) msg.push_back(static_cast<std::uint8_t>(v >> sh));
    };
    put_u32(static_cast<std::uint32_t>(domain.size()));
    msg.insert(msg.end(), domain.begin(), domain.end());
    put_u32(static_cast<std::uint32_t>(gid.size()));
    msg.insert(msg.end(), gid.begin(), gid.end());
    const auto cb = c.to_bytes();
    msg.insert(msg.end(), cb.begin(), cb.end());
    put_u32(index);

    blst_p2 out;
    blst_hash_to_g2(&out, msg.data(), msg.size(), reinterpret_cast<const byte*>(kHashToG2Dst.data()),
                    kHashToG2Dst.size(), nullptr, 0);
    return G2Point(out);
}

ScalarVector mask_oracle(const G2Point& shared, ByteView gid, const G1Point& c, std::size_t len) {
    const auto sb = shared.to_bytes();
    const auto cb = c.to_bytes();
    ScalarVector out;
    out.reserve(len);
    for (std::size_t t = 0; t < len; ++t) {
        TaggedHasher h(kMaskTag);
        h.update(sb).update_prefixed(gid).update(cb).update_u32(static_cast<std::uint32_t>(t));
        out.push_back(Scalar::from_bytes_wide(h.finalize()));
    }
    return out;
}

}  // namespace dgov::algebra
