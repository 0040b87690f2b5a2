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

#include <dgov/algebra/encoding.hpp>

namespace dgov::algebra {

ByteWriter& ByteWriter::u8(std::uint8_t v) {
    buf_.push_back(v);
    return *this;
}

ByteWriter& ByteWriter::u32(std::uint32_t v) {
    for (int sh = 24; sh >= 0; sh -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> sh));
    return *this;
}

ByteWriter& ByteWriter::u64(std::uint64_t v) {
    for (int sh = 56; sh >= 0; sh -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> sh));
    return *this;
}

ByteWriter& ByteWriter::raw(ByteView data) {
    buf_.insert(buf_.end(), data.begin(), data.end());
    return *this;
}

ByteWriter& ByteWriter::bytes(ByteView data) {
    u32(static_cast<std::uint32_t>(data.size()));
    return raw(data);
}

ByteWriter& ByteWriter::put(const Scalar& s) { return raw(s.to_bytes()); }
ByteWriter& ByteWriter::put(const G1Point& p) { return raw(p.to_bytes()); }
ByteWriter& ByteWriter::put(const G2Point& p) { return raw(p.to_bytes()); }
ByteWriter& ByteWriter::put(const GtPoint& p) { return raw(p.to_bytes()); }

ByteView ByteReader::raw(std::size_t n) {
    if (n > remaining()) throw DecodeError("unexpected end of input");
    ByteView out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
}

std::uint8_t ByteReader::u8() { return raw(1)[0]; }

std::uint32_t ByteReader::u32() {
    const auto b = raw(4);
    std::uint32_t v = 0;
    for (auto x : b) v = (v << 8) | x;
    return v;
}

std::uint64_t ByteReader::u64() {
    const auto b = raw(8);
    std::uint64_t v = 0;
    for (auto x : b) v = (v << 8) | x;
    return v;
}

bool ByteReader::boolean() {
    const auto v = u8();
    if (v > 1) throw DecodeError("invalid boolean");
    return v == 1;
}

Bytes ByteReader::bytes() {
    const auto n = u32();
    const auto b = raw(n);
    return {b.begin(), b.end()};
}

std::string ByteReader::str() {
    const auto n = u32();
    const auto b = raw(n);
    return {b.begin(), b.end()};
}

Scalar ByteReader::scalar() {
    auto s = Scalar::from_bytes(raw(Scalar::kEncodedSize));
    if (!s) throw DecodeError("non-canonical scalar");
    return *s;
}

G1Point ByteReader::g1() {
    auto p = G1Point::from_bytes(raw(G1Point::kEncodedSize));
    if (!p) throw DecodeError("invalid G1 point");
    return *p;
}

G2Point ByteReader::g2() {
    auto p = G2Point::from_bytes(raw(G2Point::kEncodedSize));
    if (!p) throw DecodeError("invalid G2 point");
    return *p;
}

GtPoint ByteReader::gt() {
    auto p = GtPoint::from_bytes(raw(GtPoint::kEncodedSize));
    if (!p) throw DecodeError("invalid GT element");
    return *p;
}

void ByteReader::expect_version() {
    if (u8() != kFormatVersion) throw DecodeError("unsupported format version");
}

}  // namespace dgov::algebra
