// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <kacfpga/rng.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace kacfpga {

using SessionKey = std::array<std::uint8_t, 16>;

inline constexpr std::size_t kNonceSize = 12;
inline constexpr std::size_t kTagSize = 16;

/// AES-128-CTR with an encrypt-then-MAC tag (HMAC-SHA-256 truncated to 16
/// bytes, keyed by SHA-256("kacfpga-mac" || K)).
///
/// Layout: nonce (12) || ciphertext (same length as the plaintext) || tag (16).
std::vector<std::uint8_t> seal(const SessionKey& key, std::span<const std::uint8_t> plaintext,
    Rng& rng);

/// Verify the tag, then decrypt. Throws tag_mismatch on any alteration and
/// bad_encoding if the buffer is too short to contain nonce and tag.
std::vector<std::uint8_t> open(const SessionKey& key, std::span<const std::uint8_t> sealed);

}  // namespace kacfpga
