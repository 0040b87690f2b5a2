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

#include <set>
#include <string>
#include <vector>

#include <dgov/ceremony/ceremony.hpp>

namespace dgov::testing {

using DeployedSystem = ceremony::Deployment;

using ceremony::deploy;

inline DeployedSystem deploy_default(std::size_t k, algebra::Rng& rng) {
    return ceremony::deploy(k, ceremony::default_authority_roster(), 3, rng);
}

inline std::set<std::size_t> slots_of(const ceremony::MappingTable& t, const std::set<std::string>& attrs) {
    std::set<std::size_t> out;
    for (const auto& a : attrs) out.insert(t.slot_of(a));
    return out;
}

}  // namespace dgov::testing
