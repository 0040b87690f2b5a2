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

#include <dgov/algebra/rng.hpp>

#include <array>
#include <cstring>
#include <string>
#include <vector>

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <dgov/algebra/hash.hpp>
#include <dgov/common/error.hpp>

namespace dgov::algebra {

std::uint64_t Rng::next_u64() {
    std::array<std::uint8_t, 8> buf{};
    fill(buf);
    std::uint64_t v = 0;
    for (auto b : buf) v = (v << 8) | b;
    return v;
}

void SystemRng::fill(std::span<std::uint8_t> out) {
    if (out.empty()) return;
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
        throw Error("system RNG failure");
    }
}

struct SeededRng::State {
    EVP_CIPHER_CTX* ctx = nullptr;
    ~State() { EVP_CIPHER_CTX_free(ctx); }
};

SeededRng::SeededRng(std::string_view seed) {
    auto key = derive_key("DGOV-SEEDED-RNG-V1", as_bytes(seed));
    state_ = std::make_unique<State>();
    state_->ctx = EVP_CIPHER_CTX_new();
    std::array<std::uint8_t, 16> iv{};  // 32-bit block counter || 96-bit nonce, all zero
    if (state_->ctx == nullptr ||
        EVP_EncryptInit_ex(state_->ctx, EVP_chacha20(), nullptr, key.data(), iv.data()) != 1) {
        throw Error("cannot initialise ChaCha20 stream");
    }
}

SeededRng::SeededRng(std::uint64_t seed) : SeededRng(std::to_string(seed)) {}

SeededRng::~SeededRng() = default;
SeededRng::SeededRng(SeededRng&&) noexcept = default;
SeededRng& SeededRng::operator=(SeededRng&&) noexcept = default;

void SeededRng::fill(std::span<std::uint8_t> out) {
    if (out.empty()) return;
    std::memset(out.data(), 0, out.size());
    int len = 0;
    if (EVP_EncryptUpdate(state_->ctx, out.data(), &len, out.data(), static_cast<int>(out.size())) != 1 ||
        len != static_cast<int>(out.size())) {
        throw Error("ChaCha20 keystream failure");
    }
}

SeededRng SeededRng::fork(std::string_view label) {
    std::array<std::uint8_t, 32> material{};
    fill(material);
    std::string seed = to_hex(ByteView{material.data(), material.size()});
    seed.push_back('/');
    seed.append(label);
    return SeededRng(seed);
}

}  // namespace dgov::algebra
