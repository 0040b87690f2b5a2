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
#include <memory>
#include <span>
#include <string_view>

namespace dgov::algebra {

// Source of randomness injected into every sampling operation.
class Rng {
  public:
    virtual ~Rng() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;

    std::uint64_t next_u64();
};

// Operating-system CSPRNG (OpenSSL RAND_bytes).
class SystemRng final : public Rng {
  public:
    void fill(std::span<std::uint8_t> out) override;
};

// Deterministic ChaCha20 keystream keyed by a hash of the seed label. Used for
// reproducible runs and tests; never for production secrets.
class SeededRng final : public Rng {
  public:
    explicit SeededRng(std::string_view seed);
    explicit SeededRng(std::uint64_t seed);
    ~SeededRng() override;

    SeededRng(SeededRng&&) noexcept;
    SeededRng& operator=(SeededRng&&) noexcept;

    void fill(std::span<std::uint8_t> out) override;

    // Independent child stream, keyed by this stream's next output and the label.
    SeededRng fork(std::string_view label);

  private:
    struct State;
    std::unique_ptr<State> state_;
};

}  // namespace dgov::algebra
