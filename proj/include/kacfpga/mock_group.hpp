// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <kacfpga/errors.hpp>
#include <kacfpga/rng.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace kacfpga::mock {

/// Modulus of the mock bilinear group; small enough to verify every example
/// by hand, large enough to avoid accidental collisions.
inline constexpr std::uint32_t kMockOrder = 101;

/// Source-group element of the intentionally insecure mock realization.
///
/// The "point" is just its discrete log: group law is addition mod 101 and
/// the pairing MockGt(a*b) is bilinear by construction. Serves as a
/// brute-force oracle for the scheme's algebra; offers no security at all.
struct MockElement {
    std::uint32_t e = 0;

    static constexpr MockElement identity() { return {}; }
    static constexpr MockElement generator() { return {1}; }

    friend constexpr MockElement operator+(MockElement a, MockElement b)
    {
        return {(a.e + b.e) % kMockOrder};
    }
    constexpr MockElement negate() const { return {(kMockOrder - e) % kMockOrder}; }
    friend constexpr bool operator==(MockElement, MockElement) = default;

    constexpr bool is_infinity() const { return e == 0; }

    std::vector<std::uint8_t> to_bytes() const
    {
        return {static_cast<std::uint8_t>(e >> 24), static_cast<std::uint8_t>(e >> 16),
            static_cast<std::uint8_t>(e >> 8), static_cast<std::uint8_t>(e)};
    }

    static MockElement from_bytes(std::span<const std::uint8_t> in)
    {
        if (in.size() != 4)
            raise(Errc::bad_encoding, "mock element needs 4 bytes");
        std::uint32_t v = 0;
        for (const auto b : in)
            v = v << 8 | b;
        if (v >= kMockOrder)
            raise(Errc::bad_encoding, "mock element not canonical");
        return {v};
    }
};

/// Target-group element; exponent arithmetic mod 101 (op = addition).
struct MockGt {
    std::uint32_t e = 0;

    static constexpr MockGt identity() { return {}; }

    friend constexpr MockGt operator*(MockGt a, MockGt b) { return {(a.e + b.e) % kMockOrder}; }
    friend constexpr bool operator==(MockGt, MockGt) = default;

    constexpr MockGt inverse() const { return {(kMockOrder - e) % kMockOrder}; }

    constexpr MockGt pow(std::uint32_t k) const { return {(e * (k % kMockOrder)) % kMockOrder}; }

    std::vector<std::uint8_t> to_bytes() const
    {
        return {static_cast<std::uint8_t>(e >> 24), static_cast<std::uint8_t>(e >> 16),
            static_cast<std::uint8_t>(e >> 8), static_cast<std::uint8_t>(e)};
    }
};

struct MockScalar {
    std::uint32_t v = 0;

    static MockScalar random(Rng& rng) { return {rng.uniform_u32_below(kMockOrder)}; }

    friend constexpr MockScalar operator+(MockScalar a, MockScalar b)
    {
        return {(a.v + b.v) % kMockOrder};
    }
    friend constexpr MockScalar operator*(MockScalar a, MockScalar b)
    {
        return {(a.v * b.v) % kMockOrder};
    }
    friend constexpr bool operator==(MockScalar, MockScalar) = default;

    constexpr bool is_zero() const { return v == 0; }
};

constexpr MockElement operator*(MockScalar k, MockElement p)
{
    return {(k.v * p.e) % kMockOrder};
}

/// e(a, b) = a*b mod 101; bilinear in both arguments.
constexpr MockGt mock_pair(MockElement a, MockElement b)
{
    return {(a.e * b.e) % kMockOrder};
}

}  // namespace kacfpga::mock
