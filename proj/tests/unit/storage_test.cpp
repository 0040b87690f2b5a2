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

#include <filesystem>
#include <thread>

#include <gtest/gtest.h>

#include <dgov/storage/cas.hpp>
#include <dgov/storage/dem.hpp>
#include <dgov/storage/share.hpp>

#include "../support/abe_fixture.hpp"

namespace dgov::storage {
namespace {

using algebra::SeededRng;

// Emits only zero bytes; pins the GCM nonce for known-answer tests.
class ZeroRng final : public algebra::Rng {
  public:
    void fill(std::span<std::uint8_t> out) override { std::fill(out.begin(), out.end(), 0); }
};

Bytes random_bytes(algebra::Rng& rng, std::size_t n) {
    Bytes b(n);
    rng.fill(b);
    return b;
}

TEST(Cas, MemoryRoundTripIdempotentAndNotFound) {
    MemoryCas cas;
    const Bytes data = to_bytes("hello");
    const auto h = cas.put(data);
    EXPECT_EQ(h, ContentHash::of(data));
    EXPECT_EQ(h.digest, algebra::derive_key(algebra::kCasTag, data));
    EXPECT_EQ(cas.get(h), data);
    EXPECT_EQ(cas.put(data), h);
    EXPECT_EQ(cas.size(), 1u);
    EXPECT_TRUE(cas.verify(h));
    EXPECT_THROW(cas.get(ContentHash::of(to_bytes("other"))), NotFoundError);
    EXPECT_FALSE(cas.has(ContentHash::of(to_bytes("other"))));
    EXPECT_EQ(ContentHash::from_hex(h.to_hex()), h);

    cas.overwrite_unchecked(h, to_bytes("tampered"));
    EXPECT_FALSE(cas.verify(h));
}

TEST(Cas, DirectoryRoundTrip) {
    const auto root = std::filesystem::temp_directory_path() / "dgov-cas-test";
    std::filesystem::remove_all(root);
    {
        DirectoryCas cas(root);
        const Bytes data = {0, 1, 2, 255};
        const auto h = cas.put(data);
        EXPECT_TRUE(cas.has(h));
        EXPECT_EQ(cas.get(h), data);
        EXPECT_EQ(cas.put(data), h);
        EXPECT_TRUE(cas.verify(h));
        EXPECT_THROW(cas.get(ContentHash::of({})), NotFoundError);
    }
    DirectoryCas reopened(root);
    EXPECT_TRUE(reopened.has(ContentHash::of(Bytes{0, 1, 2, 255})));
    std::filesystem::remove_all(root);
}

TEST(Cas, ConcurrentReadersAndWriters) {
    MemoryCas cas;
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t] {
            for (int i = 0; i < 200; ++i) {
                const Bytes b = {static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(i)};
                const auto h = cas.put(b);
                EXPECT_EQ(cas.get(h), b);
            }
        });
    for (auto& th : threads) th.join();
    EXPECT_EQ(cas.size(), 800u);
}

TEST(Dem, KnownAnswerZeroKeyAndNonce) {
    ZeroRng zero;
    const SymmetricKey key{};
    EXPECT_EQ(to_hex(dem_encrypt(key, {}, zero)), "000000000000000000000000530f8afbc74536b9a963b4f1c4cb738b");
    const Bytes pt(16, 0);
    EXPECT_EQ(to_hex(dem_encrypt(key, pt, zero)),
              "000000000000000000000000cea7403d4d606b6e074ec5d3baf39d18d0d1c8a799996bf0265b98b5d48ab919");
}

TEST(Dem, RoundTripAndAuthenticationFailures) {
    SeededRng rng("dem");
    for (std::size_t n : {0u, 1u, 31u, 1000u}) {
        const auto key = random_key(rng);
        const auto pt = random_bytes(rng, n);
        const auto blob = dem_encrypt(key, pt, rng);
        EXPECT_EQ(blob.size(), n + kDemNonceSize + kDemTagSize);
        EXPECT_EQ(*dem_decrypt(key, blob), pt);

        for (std::size_t pos : {std::size_t{0}, blob.size() / 2, blob.size() - 1}) {
            auto bad = blob;
            bad[pos] ^= 0x01;
            EXPECT_FALSE(dem_decrypt(key, bad).has_value()) << "flip at " << pos;
        }
        EXPECT_FALSE(dem_decrypt(random_key(rng), blob).has_value());
        EXPECT_FALSE(dem_decrypt(key, ByteView(blob).first(kDemNonceSize + kDemTagSize - 1)).has_value());
    }
    // Fresh nonce per call.
    const auto key = random_key(rng);
    EXPECT_NE(dem_encrypt(key, to_bytes("x"), rng), dem_encrypt(key, to_bytes("x"), rng));
}

TEST(Metadata, FixedWidthEncoding) {
    SeededRng rng("meta");
    const Metadata m{random_key(rng), ContentHash::of(to_bytes("f"))};
    const auto b = metadata_to_bytes(m);
    EXPECT_EQ(b.size(), 65u);
    EXPECT_EQ(b[0], algebra::kFormatVersion);
    EXPECT_EQ(metadata_from_bytes(b), m);
    auto longer = b;
    longer.push_back(0);
    EXPECT_THROW(metadata_from_bytes(longer), DecodeError);
}

struct Hybrid : ::testing::Test {
    static constexpr std::size_t kK = 2;
    static constexpr std::size_t kL = 6;
    SeededRng rng{"hybrid"};
    testing::CentralSystem sys = testing::make_central_system(kK, kL, rng);
    MemoryCas cas;
    ledger::Ledger ledger{ledger::LedgerConfig{}};
    ledger::TxContext owner{ledger::Address::from_label("owner"), 0, 0};

    testing::UserKeys keys_for(const abe::AttributeVector& v) {
        const auto gid = testing::random_gid(rng);
        return testing::issue_user_keys(sys, gid, testing::random_commitment(rng), v);
    }

    std::set<std::size_t> random_policy() {
        std::set<std::size_t> req;
        for (std::size_t i = 0; i + 1 < kL; ++i)
            if (rng.next_u64() & 1) req.insert(i);
        return req;
    }
};

TEST_F(Hybrid, FiftySatisfyingRoundTrips) {
    for (int trial = 0; trial < 50; ++trial) {
        const auto req = random_policy();
        auto bits = testing::random_bits_vector(rng, kL - 1);
        for (auto i : req) bits[i] = true;
        const auto v = abe::make_attribute_vector(bits);
        const auto keys = keys_for(v);
        const auto file = random_bytes(rng, rng.next_u64() % 2048);
        const auto res = share_file({file, req, std::nullopt}, sys.params, sys.pubs, cas, ledger, owner, rng);
        EXPECT_EQ(ContentHash::of(cas.get(res.loc)), res.loc);
        const auto entry = ledger.log_get(static_cast<std::int64_t>(res.log_index)).at(0);
        EXPECT_EQ(retrieve_file(entry, keys.parts, v, keys.h, cas), file) << "trial " << trial;
    }
    EXPECT_EQ(ledger.log_get(-1).size(), 50u);
}

TEST_F(Hybrid, FiftyNonSatisfyingDenied) {
    for (int trial = 0; trial < 50; ++trial) {
        auto req = random_policy();
        if (req.empty()) req.insert(rng.next_u64() % (kL - 1));
        auto bits = testing::random_bits_vector(rng, kL - 1);
        for (auto i : req) bits[i] = true;
        const auto missing = *std::next(req.begin(), static_cast<long>(rng.next_u64() % req.size()));
        bits[missing] = false;
        const auto v = abe::make_attribute_vector(bits);
        const auto keys = keys_for(v);
        const auto res = share_file({to_bytes("secret"), req, std::nullopt}, sys.params, sys.pubs, cas, ledger, owner,
                                    rng);
        const auto entry = ledger.log_get(static_cast<std::int64_t>(res.log_index)).at(0);
        EXPECT_THROW(retrieve_file(entry, keys.parts, v, keys.h, cas), PolicyDeniedError) << "trial " << trial;
    }
}

TEST_F(Hybrid, EmptyFileKeywordAndFaults) {
    const auto v = abe::make_attribute_vector({true, false, false, true, false});
    const auto keys = keys_for(v);
    const auto res = share_file({{}, {0, 3}, std::string("quarterly")}, sys.params, sys.pubs, cas, ledger, owner, rng);
    const auto entry = ledger.log_get(0).at(0);
    EXPECT_EQ(*entry.kw, "quarterly");
    EXPECT_EQ(sealed_from_bytes(entry.ct), res.sealed);
    EXPECT_TRUE(retrieve_file(entry, keys.parts, v, keys.h, cas).empty());

    auto stored = cas.get(res.loc);
    stored.back() ^= 1;
    cas.overwrite_unchecked(res.loc, stored);
    EXPECT_THROW(retrieve_file(entry, keys.parts, v, keys.h, cas), IntegrityError);

    MemoryCas empty;
    EXPECT_THROW(retrieve_file(entry, keys.parts, v, keys.h, empty), NotFoundError);
}

TEST_F(Hybrid, KemKeyBindsPayload) {
    const auto r = algebra::GtPoint::random(rng);
    EXPECT_EQ(kem_key(r), algebra::derive_key(algebra::kKemTag, algebra::serialize(r)));
    EXPECT_NE(kem_key(r), kem_key(algebra::GtPoint::random(rng)));
}

}  // namespace
}  // namespace dgov::storage
