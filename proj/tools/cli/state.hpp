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

#include <filesystem>
#include <map>
#include <optional>

#include <dgov/ceremony/ceremony.hpp>
#include <dgov/storage/cas.hpp>

#include "config.hpp"

namespace dgov::cli {

// Files under the state directory:
//   config.ini                 deployment description
//   ledger.transcript          every submitted transaction plus the final state hash
//   public/setup.bin           A_pub and UA_pub after the trusted setup
//   public/system.bin          PP_ABE, slot public keys, VC parameters, mapping table
//   authorities/<name>.bin     an authority's slot secrets
//   users/<name>.keys          a user's key parts
//   cas/                       content-addressed file store
class StateDir {
  public:
    explicit StateDir(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }
    bool initialized() const;

    void save_config(const Config& c) const;
    Config load_config() const;

    void save_ledger(const ledger::Ledger& l) const;
    ledger::Ledger load_ledger() const;
    std::filesystem::path transcript_path() const { return root_ / "ledger.transcript"; }

    void save_setup(const ceremony::SetupOutcome& s) const;
    std::optional<ceremony::SetupOutcome> load_setup() const;

    void save_system(const ceremony::AuthorityOutcome& o) const;
    std::optional<ceremony::AuthorityOutcome> load_system() const;

    void save_authority_secrets(const std::string& name, const std::vector<abe::SlotSecret>& slots) const;
    std::vector<abe::SlotSecret> load_authority_secrets(const std::string& name) const;

    void save_user_keys(const std::string& user, const ceremony::UserKeys& keys) const;
    ceremony::UserKeys load_user_keys(const std::string& user) const;

    storage::DirectoryCas cas() const { return storage::DirectoryCas(root_ / "cas"); }

  private:
    std::filesystem::path root_;
};

Bytes read_file(const std::filesystem::path& p);
// Writes through a temporary file and a rename.
void write_file(const std::filesystem::path& p, ByteView data);

}  // namespace dgov::cli
