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

#include <dgov/pok/pok.hpp>

#include <dgov/algebra/hash.hpp>

namespace dgov::pok {

using algebra::ByteReader;
using algebra::ByteWriter;
using algebra::commit_hash;

G1SPair make_transpose_spair(const G1Matrix& base, const ScalarMatrix& s) {
    return {base, transpose_product(base, s)};
}

Element scalar_element(std::string name, const Scalar& s) {
    return {std::move(name), Action::Elementwise, make_spair(G1Point::generator(), s),
            make_spair(G2Point::generator(), s)};
}

Element matrix_element(std::string name, const ScalarMatrix& s) {
    return {std::move(name), Action::Elementwise,
            make_spair(G1Matrix(s.rows(), s.cols(), G1Point::generator()), s),
            make_spair(G2Matrix(s.rows(), s.cols(), G2Point::generator()), s)};
}

bool well_formed(const Element& e) {
    if (!e.rp && !e.rp2) return false;
    if (e.action == Action::TransposeProduct) {
        // power is m x cols(base) for any m; no G2 side.
        return e.rp && !e.rp2 && e.rp->power.cols() == e.rp->base.cols() && !e.rp->base.empty();
    }
    if (e.rp && !e.rp->base.same_shape(e.rp->power)) return false;
    if (e.rp2 && !e.rp2->base.same_shape(e.rp2->power)) return false;
    if (e.rp && e.rp2 &&
        (e.rp->base.rows() != e.rp2->base.rows() || e.rp->base.cols() != e.rp2->base.cols()))
        return false;
    return true;
}

bool check_same_ratio(const Element& e) {
    if (!well_formed(e)) return false;
    if (e.action != Action::Elementwise || !e.rp || !e.rp2) return true;
    return algebra::same_ratio_matrix(e.rp->base, e.rp->power, e.rp2->base, e.rp2->power);
}

namespace {

Bytes challenge_input(ByteView r_bytes, ByteView context) {
    Bytes in(r_bytes.begin(), r_bytes.end());
    in.insert(in.end(), context.begin(), context.end());
    return in;
}

template <class P>
Scalar entry_challenge(const P& r, ByteView context) {
    return commit_hash(challenge_input(r.to_bytes(), context));
}

template <class P>
const Matrix<P>* proof_r(const PoKProof& p) {
    return std::get_if<Matrix<P>>(&p.r);
}

}  // namespace

template <class P>
PoKProof nizk_prove(const SPair<P>& rp, const ScalarMatrix& s, ByteView context, Rng& rng) {
    if (!rp.base.same_shape(s) || !rp.base.same_shape(rp.power)) throw DimensionError("nizk_prove: shape mismatch");
    if (algebra::power_multi(rp.base, s) != rp.power) throw PreconditionError("nizk_prove: secret does not match s-pair");
    Matrix<P> r(s.rows(), s.cols());
    ScalarMatrix u(s.rows(), s.cols());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto alpha = Scalar::random_nonzero(rng);
        r.data()[i] = alpha * rp.base.data()[i];
        u.data()[i] = alpha + entry_challenge(r.data()[i], context) * s.data()[i];
    }
    return {std::move(r), std::move(u)};
}

template <class P>
bool nizk_verify(const SPair<P>& rp, const PoKProof& proof, ByteView context) {
    const auto* r = proof_r<P>(proof);
    if (r == nullptr || !rp.base.same_shape(rp.power) || !rp.base.same_shape(*r) || !rp.base.same_shape(proof.u))
        return false;
    for (std::size_t i = 0; i < r->size(); ++i) {
        const auto c = entry_challenge(r->data()[i], context);
        if (proof.u.data()[i] * rp.base.data()[i] != r->data()[i] + c * rp.power.data()[i]) return false;
    }
    return true;
}

template PoKProof nizk_prove<G1Point>(const G1SPair&, const ScalarMatrix&, ByteView, Rng&);
template PoKProof nizk_prove<G2Point>(const G2SPair&, const ScalarMatrix&, ByteView, Rng&);
template bool nizk_verify<G1Point>(const G1SPair&, const PoKProof&, ByteView);
template bool nizk_verify<G2Point>(const G2SPair&, const PoKProof&, ByteView);

PoKProof nizk_prove_transpose(const G1SPair& rp, const ScalarMatrix& s, ByteView context, Rng& rng) {
    if (s.rows() != rp.base.rows()) throw DimensionError("nizk_prove_transpose: shape mismatch");
    if (transpose_product(rp.base, s) != rp.power)
        throw PreconditionError("nizk_prove_transpose: secret does not match s-pair");
    ScalarMatrix lambda(s.rows(), s.cols());
    for (auto& x : lambda.data()) x = Scalar::random_nonzero(rng);
    auto r = transpose_product(rp.base, lambda);
    const auto c = commit_hash(challenge_input(algebra::serialize(r), context));
    ScalarMatrix u(s.rows(), s.cols());
    for (std::size_t i = 0; i < s.size(); ++i) u.data()[i] = lambda.data()[i] + c * s.data()[i];
    return {std::move(r), std::move(u)};
}

bool nizk_verify_transpose(const G1SPair& rp, const PoKProof& proof, ByteView context) {
    const auto* r = proof_r<G1Point>(proof);
    if (r == nullptr || proof.u.rows() != rp.base.rows() || !r->same_shape(rp.power) || r->rows() != proof.u.cols())
        return false;
    const auto c = commit_hash(challenge_input(algebra::serialize(*r), context));
    const auto lhs = transpose_product(rp.base, proof.u);
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs.data()[i] != r->data()[i] + c * rp.power.data()[i]) return false;
    return true;
}

PoKProof prove_element(const Element& e, const ScalarMatrix& s, ByteView context, Rng& rng) {
    if (!well_formed(e)) throw PreconditionError("prove_element: malformed element " + e.name);
    if (e.action == Action::TransposeProduct) return nizk_prove_transpose(*e.rp, s, context, rng);
    if (e.rp) return nizk_prove(*e.rp, s, context, rng);
    return nizk_prove(*e.rp2, s, context, rng);
}

bool verify_element(const Element& e, const PoKProof& proof, ByteView context) {
    if (!well_formed(e)) return false;
    if (e.action == Action::TransposeProduct) return nizk_verify_transpose(*e.rp, proof, context);
    if (e.rp) return nizk_verify(*e.rp, proof, context);
    return nizk_verify(*e.rp2, proof, context);
}

Scalar element_digest(const Element& e) {
    ByteWriter w;
    w.boolean(e.rp.has_value());
    if (e.rp) w.put(e.rp->base).put(e.rp->power);
    w.boolean(e.rp2.has_value());
    if (e.rp2) w.put(e.rp2->base).put(e.rp2->power);
    return commit_hash(w.data());
}

Commitment commit_spairs(const std::vector<Element>& elements) {
    Commitment out;
    ByteWriter cat;
    for (const auto& e : elements) {
        out.per_element.push_back(element_digest(e));
        cat.put(out.per_element.back());
    }
    out.overall = commit_hash(cat.data());
    return out;
}

Bytes proof_context(const Scalar& overall, const Scalar& element) {
    ByteWriter w;
    w.put(overall).put(element);
    return std::move(w).take();
}

std::vector<PoKProof> prove_all(const std::vector<Element>& elements, const std::vector<ScalarMatrix>& secrets,
                                Rng& rng) {
    if (elements.size() != secrets.size()) throw DimensionError("prove_all: one secret per element");
    const auto com = commit_spairs(elements);
    std::vector<PoKProof> out;
    out.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
        out.push_back(prove_element(elements[i], secrets[i], proof_context(com.overall, com.per_element[i]), rng));
    return out;
}

void encode(ByteWriter& w, const Element& e) {
    w.str(e.name).u8(static_cast<std::uint8_t>(e.action));
    w.boolean(e.rp.has_value());
    if (e.rp) w.put(e.rp->base).put(e.rp->power);
    w.boolean(e.rp2.has_value());
    if (e.rp2) w.put(e.rp2->base).put(e.rp2->power);
}

Element decode_element(ByteReader& r) {
    Element e;
    e.name = r.str();
    const auto action = r.u8();
    if (action > 1) throw DecodeError("unknown s-pair action");
    e.action = static_cast<Action>(action);
    if (r.boolean()) {
        auto base = r.matrix<G1Point>();
        auto power = r.matrix<G1Point>();
        e.rp = G1SPair{std::move(base), std::move(power)};
    }
    if (r.boolean()) {
        auto base = r.matrix<G2Point>();
        auto power = r.matrix<G2Point>();
        e.rp2 = G2SPair{std::move(base), std::move(power)};
    }
    return e;
}

void encode(ByteWriter& w, const PoKProof& p) {
    if (const auto* r1 = std::get_if<G1Matrix>(&p.r)) {
        w.u8(1).put(*r1);
    } else {
        w.u8(2).put(std::get<G2Matrix>(p.r));
    }
    w.put(p.u);
}

PoKProof decode_proof(ByteReader& r) {
    PoKProof p;
    switch (r.u8()) {
        case 1: p.r = r.matrix<G1Point>(); break;
        case 2: p.r = r.matrix<G2Point>(); break;
        default: throw DecodeError("unknown proof group tag");
    }
    p.u = r.matrix<Scalar>();
    return p;
}

Bytes proof_to_bytes(const PoKProof& p) {
    ByteWriter w;
    w.u8(algebra::kFormatVersion);
    encode(w, p);
    return std::move(w).take();
}

PoKProof proof_from_bytes(ByteView in) {
    ByteReader r(in);
    r.expect_version();
    auto p = decode_proof(r);
    r.expect_end();
    return p;
}

}  // namespace dgov::pok
