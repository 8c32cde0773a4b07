// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#include <kacfpga/rng.hpp>

#include <algorithm>
#include <cstring>
#include <random>

namespace kacfpga {

namespace {

std::array<std::uint8_t, 8> be64(std::uint64_t v)
{
    std::array<std::uint8_t, 8> out;
    for (std::size_t i = 0; i < 8; ++i)
        out[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
    return out;
}

}  // namespace

Rng::Rng(std::uint64_t seed)
{
    const auto bytes = be64(seed);
    key_ = sha256(bytes);
}

Rng::Rng(std::span<const std::uint8_t> seed)
{
    key_ = sha256(seed);
}

Rng Rng::from_entropy()
{
    std::random_device rd;
    std::array<std::uint8_t, 32> seed;
    for (std::size_t i = 0; i < seed.size(); i += 4)
    {
        const std::uint32_t v = rd();
        std::memcpy(seed.data() + i, &v, 4);
    }
    return Rng(std::span<const std::uint8_t>(seed));
}

void Rng::refill()
{
    std::array<std::uint8_t, sizeof(Digest) + 8> input;
    std::copy(key_.begin(), key_.end(), input.begin());
    const auto ctr = be64(counter_++);
    std::copy(ctr.begin(), ctr.end(), input.begin() + sizeof(Digest));
    block_ = sha256(input);
    pos_ = 0;
}

void Rng::fill(std::span<std::uint8_t> out)
{
    std::size_t done = 0;
    while (done < out.size())
    {
        if (pos_ == block_.size())
            refill();
        const std::size_t take = std::min(out.size() - done, block_.size() - pos_);
        std::copy_n(block_.begin() + static_cast<std::ptrdiff_t>(pos_), take,
            out.begin() + static_cast<std::ptrdiff_t>(done));
        pos_ += take;
        done += take;
    }
}

std::uint64_t Rng::next_u64()
{
    std::array<std::uint8_t, 8> raw;
    fill(raw);
    std::uint64_t v = 0;
    for (const auto b : raw)
        v = v << 8 | b;
    return v;
}

u256 Rng::uniform_below(const u256& bound)
{
    if (bound.is_zero())
        raise(Errc::bad_parameter, "uniform_below with zero bound");
    const unsigned bits = bound.bit_length();
    // Mask the draw down to bit_length(bound) bits; acceptance rate >= 1/2.
    for (;;)
    {
        std::array<std::uint8_t, 32> raw;
        fill(raw);
        u256 v = u256::from_bytes_be(raw);
        for (unsigned i = 255; i >= bits; --i)
            v.w[i / 64] &= ~(std::uint64_t{1} << (i % 64));
        if (v < bound)
            return v;
    }
}

std::uint32_t Rng::uniform_u32_below(std::uint32_t bound)
{
    if (bound == 0)
        raise(Errc::bad_parameter, "uniform_u32_below with zero bound");
    const std::uint64_t limit = (std::uint64_t{1} << 32) / bound * bound;
    for (;;)
    {
        std::array<std::uint8_t, 4> raw;
        fill(raw);
        std::uint64_t v = 0;
        for (const auto b : raw)
            v = v << 8 | b;
        if (v < limit)
            return static_cast<std::uint32_t>(v % bound);
    }
}

}  // namespace kacfpga
