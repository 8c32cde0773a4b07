// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <kacfpga/hash.hpp>
#include <kacfpga/u256.hpp>

#include <array>
#include <cstdint>
#include <span>

namespace kacfpga {

/// Deterministic byte generator: SHA-256 in counter mode over a seed key.
///
/// Identical seeds produce identical streams on every platform, which is what
/// makes all key material and ciphertexts reproducible under --seed.
class Rng {
 public:
    explicit Rng(std::uint64_t seed);
    explicit Rng(std::span<const std::uint8_t> seed);

    /// Fresh generator seeded from the OS entropy source.
    static Rng from_entropy();

    void fill(std::span<std::uint8_t> out);
    std::uint64_t next_u64();

    /// Uniform value in [0, bound) by rejection sampling; bound must be nonzero.
    u256 uniform_below(const u256& bound);
    std::uint32_t uniform_u32_below(std::uint32_t bound);

    template <std::size_t N>
    std::array<std::uint8_t, N> bytes()
    {
        std::array<std::uint8_t, N> out;
        fill(out);
        return out;
    }

 private:
    void refill();

    Digest key_{};
    std::uint64_t counter_ = 0;
    Digest block_{};
    std::size_t pos_ = sizeof(Digest);
};

}  // namespace kacfpga
