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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <dgov/algebra/encoding.hpp>
#include <dgov/ledger/address.hpp>
#include <dgov/pok/pok.hpp>

namespace dgov::ledger {

using algebra::G1Matrix;
using algebra::G1Point;
using algebra::G1Vector;
using algebra::Scalar;

struct SysCommit {
    Scalar h;
};
struct SysReveal {
    std::vector<pok::Element> elements;
};
struct SysProve {
    std::vector<pok::PoKProof> proofs;
};
struct SysCompute {
    G1Matrix v;
    G1Point theta;
    G1Matrix v_prime;
};
struct SysGenerate {
    G1Matrix w;
    G1Point theta;
    G1Matrix w_prime;
};
struct AuthCommit {
    Scalar h;
};
struct AuthReveal {
    std::vector<pok::Element> elements;
};
struct AuthProve {
    std::vector<pok::PoKProof> proofs;
};
// Cross terms indexed by authority index - 1; the publisher's own entry is the identity.
struct AuthGenerate {
    G1Vector o;
    G1Vector theta;
    G1Vector o_prime;
    std::uint32_t attribute_size = 0;
};
struct Register {};
struct Log {
    Bytes ct;
    std::optional<std::string> kw;
};

using Call = std::variant<SysCommit, SysReveal, SysProve, SysCompute, SysGenerate, AuthCommit, AuthReveal, AuthProve,
                          AuthGenerate, Register, Log>;

// Contract-qualified entry point name, e.g. "SC_sys.commit".
std::string call_name(const Call& call);

struct TxContext {
    Address sender;
    std::uint64_t timestamp = 0;
    std::uint64_t value = 0;
};

struct Transaction {
    TxContext ctx;
    Call call;
};

void encode(algebra::ByteWriter& w, const Transaction& tx);
Transaction decode_transaction(algebra::ByteReader& r);

}  // namespace dgov::ledger
