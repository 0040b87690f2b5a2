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

#include <optional>
#include <set>
#include <string>

#include <dgov/abe/abe.hpp>
#include <dgov/ledger/ledger.hpp>
#include <dgov/storage/cas.hpp>
#include <dgov/storage/dem.hpp>

namespace dgov::storage {

// The file's decryption policy could not be satisfied by the presented key material.
class PolicyDeniedError : public Error {
  public:
    using Error::Error;
};

// Stored ciphertext failed authentication under a correctly recovered key.
class IntegrityError : public Error {
  public:
    using Error::Error;
};

// M = (AK, loc). Wire: version || ak (32) || loc (32).
struct Metadata {
    SymmetricKey ak{};
    ContentHash loc;

    friend bool operator==(const Metadata&, const Metadata&) = default;
};

Bytes metadata_to_bytes(const Metadata& m);
Metadata metadata_from_bytes(ByteView in);

// Wire: version || ABE ciphertext || u32-prefixed DEM blob.
struct SealedMetadata {
    abe::AbeCiphertext abe_ct;
    Bytes dem;

    friend bool operator==(const SealedMetadata&, const SealedMetadata&) = default;
};

Bytes sealed_to_bytes(const SealedMetadata& s);
SealedMetadata sealed_from_bytes(ByteView in);

// DEM key for a KEM element.
SymmetricKey kem_key(const algebra::GtPoint& r);

// Encrypts M under a fresh random GT element for the given policy vector.
SealedMetadata seal_metadata(const Metadata& m, const abe::SystemParams& params,
                             const std::vector<abe::SlotPublic>& slot_pubs, const abe::PolicyVector& x,
                             algebra::Rng& rng);

// Throws PolicyDeniedError when the recovered KEM element does not authenticate.
Metadata open_metadata(const SealedMetadata& s, const std::vector<abe::KeyPart>& parts, const abe::AttributeVector& v,
                       const algebra::G2Vector& h_pub);

struct ShareRequest {
    Bytes file;
    std::set<std::size_t> required_slots;
    std::optional<std::string> keyword;
    abe::PolicyEncoding encoding = abe::PolicyEncoding::Randomized;
};

struct ShareResult {
    ContentHash loc;
    SealedMetadata sealed;
    std::size_t log_index = 0;
};

// Encrypts the file, stores it, seals its metadata and appends the sealed bytes to SC_log.
// Throws Error if the log transaction is rejected.
ShareResult share_file(const ShareRequest& req, const abe::SystemParams& params,
                       const std::vector<abe::SlotPublic>& slot_pubs, Cas& cas, ledger::Ledger& ledger,
                       const ledger::TxContext& ctx, algebra::Rng& rng);

// Recovers the file behind a log entry. Throws PolicyDeniedError, NotFoundError or IntegrityError.
Bytes retrieve_file(const ledger::LogEntry& entry, const std::vector<abe::KeyPart>& parts,
                    const abe::AttributeVector& v, const algebra::G2Vector& h_pub, const Cas& cas);

}  // namespace dgov::storage
