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

#include <compare>
#include <filesystem>
#include <map>
#include <shared_mutex>
#include <string>

#include <dgov/algebra/hash.hpp>
#include <dgov/common/bytes.hpp>

namespace dgov::storage {

// Digest of stored bytes under the CAS domain tag; stands in for a multihash.
struct ContentHash {
    algebra::Digest32 digest{};

    static ContentHash of(ByteView data);
    static ContentHash from_hex(std::string_view hex);
    std::string to_hex() const;

    friend auto operator<=>(const ContentHash&, const ContentHash&) = default;
};

// Content-addressed store: bytes retrievable by their digest.
class Cas {
  public:
    virtual ~Cas() = default;
    // Idempotent; returns ContentHash::of(data).
    virtual ContentHash put(ByteView data) = 0;
    // Throws NotFoundError for unknown hashes. Returns the bytes as stored.
    virtual Bytes get(const ContentHash& h) const = 0;
    virtual bool has(const ContentHash& h) const = 0;

    // True iff the entry exists and still hashes to its address.
    bool verify(const ContentHash& h) const;
};

// Concurrent readers, serialized writers.
class MemoryCas final : public Cas {
  public:
    ContentHash put(ByteView data) override;
    Bytes get(const ContentHash& h) const override;
    bool has(const ContentHash& h) const override;
    std::size_t size() const;

    // Fault injection: replaces an entry's bytes without rehashing.
    void overwrite_unchecked(const ContentHash& h, Bytes data);

  private:
    mutable std::shared_mutex mu_;
    std::map<ContentHash, Bytes> blobs_;
};

// One file per entry, named by the hex digest. Writes go through a temporary file and a rename.
class DirectoryCas final : public Cas {
  public:
    explicit DirectoryCas(std::filesystem::path root);
    ContentHash put(ByteView data) override;
    Bytes get(const ContentHash& h) const override;
    bool has(const ContentHash& h) const override;

  private:
    std::filesystem::path path_for(const ContentHash& h) const;
    std::filesystem::path root_;
};

}  // namespace dgov::storage
