// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <kacfpga/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

namespace kacfpga {

/// Append-only byte sink; all multi-byte integers big-endian.
class ByteWriter {
 public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u16(std::uint16_t v)
    {
        buf_.push_back(static_cast<std::uint8_t>(v >> 8));
        buf_.push_back(static_cast<std::uint8_t>(v));
    }
    void u32(std::uint32_t v)
    {
        for (int i = 3; i >= 0; --i)
            buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void u64(std::uint64_t v)
    {
        for (int i = 7; i >= 0; --i)
            buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void bytes(std::span<const std::uint8_t> b)
    {
        std::copy(b.begin(), b.end(), std::back_inserter(buf_));
    }

    std::vector<std::uint8_t> take() { return std::move(buf_); }
    const std::vector<std::uint8_t>& view() const { return buf_; }

 private:
    std::vector<std::uint8_t> buf_;
};

/// Bounds-checked cursor over a byte buffer; throws `underflow_errc` when the
/// input runs short.
class ByteReader {
 public:
    explicit ByteReader(std::span<const std::uint8_t> data, Errc underflow_errc = Errc::bad_encoding)
        : data_(data), errc_(underflow_errc)
    {}

    std::size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return remaining() == 0; }

    std::uint8_t u8() { return take(1)[0]; }
    std::uint16_t u16()
    {
        const auto b = take(2);
        return static_cast<std::uint16_t>(b[0] << 8 | b[1]);
    }
    std::uint32_t u32()
    {
        const auto b = take(4);
        std::uint32_t v = 0;
        for (const auto x : b)
            v = v << 8 | x;
        return v;
    }
    std::uint64_t u64()
    {
        const auto b = take(8);
        std::uint64_t v = 0;
        for (const auto x : b)
            v = v << 8 | x;
        return v;
    }

    std::span<const std::uint8_t> take(std::size_t n)
    {
        if (remaining() < n)
            raise(errc_, "truncated input");
        const auto out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    /// Peek at the next byte without consuming it.
    std::uint8_t peek() const
    {
        if (done())
            raise(errc_, "truncated input");
        return data_[pos_];
    }

 private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
    Errc errc_;
};

}  // namespace kacfpga
