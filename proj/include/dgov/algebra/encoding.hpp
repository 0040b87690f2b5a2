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
#include <string>
#include <string_view>
#include <vector>

#include <dgov/algebra/group.hpp>
#include <dgov/algebra/matrix.hpp>
#include <dgov/algebra/scalar.hpp>
#include <dgov/common/bytes.hpp>
#include <dgov/common/error.hpp>

namespace dgov::algebra {

// Every top-level wire object starts with this byte.
inline constexpr std::uint8_t kFormatVersion = 0x01;

// Canonical big-endian writer: compressed points, 32-byte scalars, 576-byte GT
// elements, u32 length prefixes, matrices as u32 rows || u32 cols || entries.
class ByteWriter {
  public:
    ByteWriter& u8(std::uint8_t v);
    ByteWriter& u32(std::uint32_t v);
    ByteWriter& u64(std::uint64_t v);
    ByteWriter& i64(std::int64_t v) { return u64(static_cast<std::uint64_t>(v)); }
    ByteWriter& boolean(bool v) { return u8(v ? 1 : 0); }
    ByteWriter& raw(ByteView data);
    ByteWriter& bytes(ByteView data);  // u32 length prefix
    ByteWriter& str(std::string_view s) { return bytes(as_bytes(s)); }

    ByteWriter& put(const Scalar& s);
    ByteWriter& put(const G1Point& p);
    ByteWriter& put(const G2Point& p);
    ByteWriter& put(const GtPoint& p);

    template <class T>
    ByteWriter& put(const std::vector<T>& v) {
        u32(static_cast<std::uint32_t>(v.size()));
        for (const auto& x : v) put(x);
        return *this;
    }

    template <class T>
    ByteWriter& put(const Matrix<T>& m) {
        u32(static_cast<std::uint32_t>(m.rows()));
        u32(static_cast<std::uint32_t>(m.cols()));
        for (const auto& x : m.data()) put(x);
        return *this;
    }

    const Bytes& data() const& { return buf_; }
    Bytes take() && { return std::move(buf_); }

  private:
    Bytes buf_;
};

class ByteReader {
  public:
    explicit ByteReader(ByteView data) : data_(data) {}

    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
    bool boolean();
    ByteView raw(std::size_t n);
    Bytes bytes();
    std::string str();

    Scalar scalar();
    G1Point g1();
    G2Point g2();
    GtPoint gt();

    template <class T>
    T get();

    template <class T>
    std::vector<T> vec() {
        const std::uint32_t n = u32();
        if (n > remaining()) throw DecodeError("vector length exceeds input");
        std::vector<T> out;
        out.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) out.push_back(get<T>());
        return out;
    }

    template <class T>
    Matrix<T> matrix() {
        const std::uint32_t r = u32();
        const std::uint32_t c = u32();
        if (r == 0 || c == 0) throw DecodeError("matrix dimensions must be positive");
        if (static_cast<std::uint64_t>(r) * c > remaining()) throw DecodeError("matrix size exceeds input");
        Matrix<T> m(r, c);
        for (auto& x : m.data()) x = get<T>();
        return m;
    }

    std::size_t remaining() const { return data_.size() - pos_; }
    bool at_end() const { return pos_ == data_.size(); }
    void expect_end() const {
        if (!at_end()) throw DecodeError("trailing bytes");
    }
    // Reads and checks the leading format-version byte.
    void expect_version();

  private:
    ByteView data_;
    std::size_t pos_ = 0;
};

template <>
inline Scalar ByteReader::get<Scalar>() { return scalar(); }
template <>
inline G1Point ByteReader::get<G1Point>() { return g1(); }
template <>
inline G2Point ByteReader::get<G2Point>() { return g2(); }
template <>
inline GtPoint ByteReader::get<GtPoint>() { return gt(); }

// Convenience serializers.
template <class T>
Bytes serialize(const T& v) {
    ByteWriter w;
    w.put(v);
    return std::move(w).take();
}

}  // namespace dgov::algebra
