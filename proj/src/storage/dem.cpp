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

#include <dgov/storage/dem.hpp>

#include <memory>

#include <openssl/evp.h>

#include <dgov/common/error.hpp>

namespace dgov::storage {

namespace {

using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)>;

CipherCtx new_ctx() {
    CipherCtx ctx(EVP_CIPHER_CTX_new(), &EVP_CIPHER_CTX_free);
    if (!ctx) throw Error("EVP_CIPHER_CTX_new failed");
    return ctx;
}

}  // namespace

SymmetricKey random_key(algebra::Rng& rng) {
    SymmetricKey k;
    rng.fill(k);
    return k;
}

Bytes dem_encrypt(const SymmetricKey& key, ByteView plaintext, algebra::Rng& rng) {
    Bytes out(kDemNonceSize + plaintext.size() + kDemTagSize);
    rng.fill(std::span<std::uint8_t>(out.data(), kDemNonceSize));
    auto ctx = new_ctx();
    int len = 0;
    if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(), out.data()) != 1)
        throw Error("AES-GCM init failed");
    std::uint8_t* body = out.data() + kDemNonceSize;
    if (!plaintext.empty() &&
        EVP_EncryptUpdate(ctx.get(), body, &len, plaintext.data(), static_cast<int>(plaintext.size())) != 1)
        throw Error("AES-GCM encrypt failed");
    if (EVP_EncryptFinal_ex(ctx.get(), body + len, &len) != 1) throw Error("AES-GCM final failed");
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kDemTagSize, body + plaintext.size()) != 1)
        throw Error("AES-GCM tag failed");
    return out;
}

std::optional<Bytes> dem_decrypt(const SymmetricKey& key, ByteView blob) {
    if (blob.size() < kDemNonceSize + kDemTagSize) return std::nullopt;
    const std::size_t n = blob.size() - kDemNonceSize - kDemTagSize;
    Bytes out(n);
    auto ctx = new_ctx();
    int len = 0;
    if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(), blob.data()) != 1)
        throw Error("AES-GCM init failed");
    const std::uint8_t* body = blob.data() + kDemNonceSize;
    if (n > 0 && EVP_DecryptUpdate(ctx.get(), out.data(), &len, body, static_cast<int>(n)) != 1) return std::nullopt;
    // The tag is passed as non-const per the OpenSSL API but is not modified.
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kDemTagSize, const_cast<std::uint8_t*>(body + n)) != 1)
        throw Error("AES-GCM tag setup failed");
    if (EVP_DecryptFinal_ex(ctx.get(), out.data() + len, &len) != 1) return std::nullopt;
    return out;
}

}  // namespace dgov::storage
