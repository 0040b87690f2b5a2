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

#include <string>
#include <vector>

#include <dgov/ceremony/ceremony.hpp>
#include <dgov/ledger/ledger.hpp>

namespace dgov::cli {

// Declarative deployment description stored as config.ini in the state directory.
struct Config {
    std::size_t k = 2;
    std::size_t setup_participants = 3;
    std::uint64_t registration_threshold = 1000000;
    bool insecure_no_pok = false;
    ledger::Deadlines sys{100, 200, 300};
    ledger::Deadlines auth{400, 500, 600};
    std::vector<ceremony::AuthoritySpec> roster;

    ledger::LedgerConfig ledger_config() const;
    std::vector<ledger::Address> setup_addresses() const;
    // Throws ConfigError if any module precondition is violated.
    void validate() const;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

// Default roster: n - 1 attribute-holding authorities plus the trust authority. n = 3 gives
// AA1 (entry, mid, senior), AA2 (agent, manager), TA.
Config default_config(std::size_t authorities, std::size_t k);

// INI text with sections [system], [deadlines] and one [authority:<name>] per authority.
Config parse_config(const std::string& text);
std::string render_config(const Config& c);

}  // namespace dgov::cli
