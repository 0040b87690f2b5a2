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
#include <string>
#include <variant>
#include <vector>

#include <dgov/algebra/encoding.hpp>
#include <dgov/algebra/matrix.hpp>
#include <dgov/algebra/ops.hpp>
#include <dgov/algebra/rng.hpp>

namespace dgov::pok {

using algebra::G1Matrix;
using algebra::G1Point;
using algebra::G2Matrix;
using algebra::G2Point;
using algebra::Matrix;
using algebra::Rng;
using algebra::Scalar;
using algebra::ScalarMatrix;

// How the power of an s-pair relates to its base.
enum class Action : std::uint8_t {
    // power[i,j] = base[i,j]^{s[i,j]}
    Elementwise = 0,
    // power[r,c] = prod_t base[t,c]^{s[t,r]}, i.e. g^{S^T M} from g^{M}
    TransposeProduct = 1,
};

template <class P>
struct SPair {
    Matrix<P> base;
    Matrix<P> power;

    friend bool operator==(const SPair&, const SPair&) = default;
};

using G1SPair = SPair<G1Point>;
using G2SPair = SPair<G2Point>;

// Rejects identity bases and zero exponents.
template <class P>
SPair<P> make_spair(const Matrix<P>& base, const ScalarMatrix& s) {
    for (const auto& b : base.data())
        if (b.is_identity()) throw PreconditionError("s-pair base must be nonzero");
    for (const auto& x : s.data())
        if (x.is_zero()) throw PreconditionError("s-pair exponent must be nonzero");
    return {base, algebra::power_multi(base, s)};
}

template <class P>
SPair<P> make_spair(const P& base, const Scalar& s) {
    return make_spair(Matrix<P>::single(base), ScalarMatrix::single(s));
}

using algebra::transpose_product;

G1SPair make_transpose_spair(const G1Matrix& base, const ScalarMatrix& s);

// One committed ceremony element: a G1 s-pair, its G2 dual, or both.
struct Element {
    std::string name;
    Action action = Action::Elementwise;
    std::optional<G1SPair> rp;
    std::optional<G2SPair> rp2;

    friend bool operator==(const Element&, const Element&) = default;
};

// Scalar-secret element with both duals over the generators.
Element scalar_element(std::string name, const Scalar& s);
// Elementwise element with generator bases of the given shape on both sides.
Element matrix_element(std::string name, const ScalarMatrix& s);

// Shapes consistent with the declared action.
bool well_formed(const Element& e);

// SameRatio between the G1 s-pair and its G2 dual, entrywise. Elements without
// both sides (or with a transpose action) have no cross-group relation to check.
bool check_same_ratio(const Element& e);

struct PoKProof {
    std::variant<G1Matrix, G2Matrix> r;
    ScalarMatrix u;

    friend bool operator==(const PoKProof&, const PoKProof&) = default;
};

// Scalar Schnorr proof over one s-pair: R = base^a, c = COMMIT(R || ctx), u = a + c s.
template <class P>
PoKProof nizk_prove(const SPair<P>& rp, const ScalarMatrix& s, ByteView context, Rng& rng);
template <class P>
bool nizk_verify(const SPair<P>& rp, const PoKProof& proof, ByteView context);

// Generalised Schnorr for transpose-product s-pairs: R = g^{L^T M}, c = COMMIT(R || ctx), u = L + c S.
PoKProof nizk_prove_transpose(const G1SPair& rp, const ScalarMatrix& s, ByteView context, Rng& rng);
bool nizk_verify_transpose(const G1SPair& rp, const PoKProof& proof, ByteView context);

// Dispatch on the element: transpose elements prove over rp; elementwise ones over rp
// when present, otherwise over rp2.
PoKProof prove_element(const Element& e, const ScalarMatrix& s, ByteView context, Rng& rng);
bool verify_element(const Element& e, const PoKProof& proof, ByteView context);

struct Commitment {
    std::vector<Scalar> per_element;  // h_s
    Scalar overall;                   // h

    friend bool operator==(const Commitment&, const Commitment&) = default;
};

Scalar element_digest(const Element& e);
// overall = COMMIT(h_s1 || h_s2 || ...)
Commitment commit_spairs(const std::vector<Element>& elements);
// h || h_s
Bytes proof_context(const Scalar& overall, const Scalar& element);

// Proves every element with its own context. secrets[i] belongs to elements[i].
std::vector<PoKProof> prove_all(const std::vector<Element>& elements, const std::vector<ScalarMatrix>& secrets,
                                Rng& rng);

// Wire encodings.
void encode(algebra::ByteWriter& w, const Element& e);
Element decode_element(algebra::ByteReader& r);
void encode(algebra::ByteWriter& w, const PoKProof& p);
PoKProof decode_proof(algebra::ByteReader& r);
// Versioned proof bytes: 0x01 || group tag || R || u.
Bytes proof_to_bytes(const PoKProof& p);
PoKProof proof_from_bytes(ByteView in);

}  // namespace dgov::pok
