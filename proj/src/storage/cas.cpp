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

#include <dgov/storage/cas.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <mutex>

#include <dgov/common/error.hpp>

namespace dgov::storage {

ContentHash ContentHash::of(ByteView data) { return {algebra::derive_key(algebra::kCasTag, data)}; }

ContentHash ContentHash::from_hex(std::string_view hex) {
    const Bytes b = dgov::from_hex(hex);
    if (b.size() != 32) throw DecodeError("content hash must be 32 bytes");
    ContentHash h;
    std::copy(b.begin(), b.end(), h.digest.begin());
    return h;
}

std::string ContentHash::to_hex() const { return dgov::to_hex(digest); }

bool Cas::verify(const ContentHash& h) const {
    if (!has(h)) return false;
    return ContentHash::of(get(h)) == h;
}

ContentHash MemoryCas::put(ByteView data) {
    const auto h = ContentHash::of(data);
    std::unique_lock lock(mu_);
    blobs_.try_emplace(h, data.begin(), data.end());
    return h;
}

Bytes MemoryCas::get(const ContentHash& h) const {
    std::shared_lock lock(mu_);
    const auto it = blobs_.find(h);
    if (it == blobs_.end()) throw NotFoundError("no CAS entry " + h.to_hex());
    return it->second;
}

bool MemoryCas::has(const ContentHash& h) const {
    std::shared_lock lock(mu_);
    return blobs_.count(h) > 0;
}

std::size_t MemoryCas::size() const {
    std::shared_lock lock(mu_);
    return blobs_.size();
}

void MemoryCas::overwrite_unchecked(const ContentHash& h, Bytes data) {
    std::unique_lock lock(mu_);
    blobs_[h] = std::move(data);
}

DirectoryCas::DirectoryCas(std::filesystem::path root) : root_(std::move(root)) {
    std::filesystem::create_directories(root_);
}

std::filesystem::path DirectoryCas::path_for(const ContentHash& h) const { return root_ / h.to_hex(); }

ContentHash DirectoryCas::put(ByteView data) {
    const auto h = ContentHash::of(data);
    const auto dst = path_for(h);
    if (std::filesystem::exists(dst)) return h;
    const auto tmp = dst.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
        if (!out) throw Error("cannot write CAS entry " + tmp);
    }
    std::filesystem::rename(tmp, dst);
    return h;
}

Bytes DirectoryCas::get(const ContentHash& h) const {
    std::ifstream in(path_for(h), std::ios::binary);
    if (!in) throw NotFoundError("no CAS entry " + h.to_hex());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool DirectoryCas::has(const ContentHash& h) const { return std::filesystem::exists(path_for(h)); }

}  // namespace dgov::storage
