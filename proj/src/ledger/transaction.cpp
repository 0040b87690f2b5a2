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

#include <dgov/ledger/transaction.hpp>

namespace dgov::ledger {

using algebra::ByteReader;
using algebra::ByteWriter;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void put_elements(ByteWriter& w, const std::vector<pok::Element>& es) {
    w.u32(static_cast<std::uint32_t>(es.size()));
    for (const auto& e : es) pok::encode(w, e);
}

std::vector<pok::Element> get_elements(ByteReader& r) {
    const auto n = r.u32();
    if (n > r.remaining()) throw DecodeError("element count exceeds input");
    std::vector<pok::Element> out;
    for (std::uint32_t i = 0; i < n; ++i) out.push_back(pok::decode_element(r));
    return out;
}

void put_proofs(ByteWriter& w, const std::vector<pok::PoKProof>& ps) {
    w.u32(static_cast<std::uint32_t>(ps.size()));
    for (const auto& p : ps) pok::encode(w, p);
}

std::vector<pok::PoKProof> get_proofs(ByteReader& r) {
    const auto n = r.u32();
    if (n > r.remaining()) throw DecodeError("proof count exceeds input");
    std::vector<pok::PoKProof> out;
    for (std::uint32_t i = 0; i < n; ++i) out.push_back(pok::decode_proof(r));
    return out;
}

}  // namespace

std::string call_name(const Call& call) {
    static const char* const kNames[] = {"SC_sys.commit",  "SC_sys.reveal",   "SC_sys.prove",  "SC_sys.compute",
                                         "SC_sys.generate", "SC_auth.commit", "SC_auth.reveal", "SC_auth.prove",
                                         "SC_auth.generate", "SC_reg.register", "SC_log.log"};
    return kNames[call.index()];
}

void encode(ByteWriter& w, const Transaction& tx) {
    w.raw(tx.ctx.sender.view()).u64(tx.ctx.timestamp).u64(tx.ctx.value);
    w.u8(static_cast<std::uint8_t>(tx.call.index()));
    std::visit(Overloaded{
                   [&](const SysCommit& c) { w.put(c.h); },
                   [&](const SysReveal& c) { put_elements(w, c.elements); },
                   [&](const SysProve& c) { put_proofs(w, c.proofs); },
                   [&](const SysCompute& c) { w.put(c.v).put(c.theta).put(c.v_prime); },
                   [&](const SysGenerate& c) { w.put(c.w).put(c.theta).put(c.w_prime); },
                   [&](const AuthCommit& c) { w.put(c.h); },
                   [&](const AuthReveal& c) { put_elements(w, c.elements); },
                   [&](const AuthProve& c) { put_proofs(w, c.proofs); },
                   [&](const AuthGenerate& c) { w.put(c.o).put(c.theta).put(c.o_prime).u32(c.attribute_size); },
                   [&](const Register&) {},
                   [&](const Log& c) {
                       w.bytes(c.ct).boolean(c.kw.has_value());
                       if (c.kw) w.str(*c.kw);
                   },
               },
               tx.call);
}

Transaction decode_transaction(ByteReader& r) {
    Transaction tx;
    const auto addr = r.raw(20);
    std::copy(addr.begin(), addr.end(), tx.ctx.sender.bytes.begin());
    tx.ctx.timestamp = r.u64();
    tx.ctx.value = r.u64();
    switch (r.u8()) {
        case 0: tx.call = SysCommit{r.scalar()}; break;
        case 1: tx.call = SysReveal{get_elements(r)}; break;
        case 2: tx.call = SysProve{get_proofs(r)}; break;
        case 3: {
            SysCompute c;
            c.v = r.matrix<G1Point>();
            c.theta = r.g1();
            c.v_prime = r.matrix<G1Point>();
            tx.call = std::move(c);
            break;
        }
        case 4: {
            SysGenerate c;
            c.w = r.matrix<G1Point>();
            c.theta = r.g1();
            c.w_prime = r.matrix<G1Point>();
            tx.call = std::move(c);
            break;
        }
        case 5: tx.call = AuthCommit{r.scalar()}; break;
        case 6: tx.call = AuthReveal{get_elements(r)}; break;
        case 7: tx.call = AuthProve{get_proofs(r)}; break;
        case 8: {
            AuthGenerate c;
            c.o = r.vec<G1Point>();
            c.theta = r.vec<G1Point>();
            c.o_prime = r.vec<G1Point>();
            c.attribute_size = r.u32();
            tx.call = std::move(c);
            break;
        }
        case 9: tx.call = Register{}; break;
        case 10: {
            Log c;
            c.ct = r.bytes();
            if (r.boolean()) c.kw = r.str();
            tx.call = std::move(c);
            break;
        }
        default: throw DecodeError("unknown call tag");
    }
    return tx;
}

}  // namespace dgov::ledger
