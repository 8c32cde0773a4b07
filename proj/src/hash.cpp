// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#include <kacfpga/errors.hpp>
#include <kacfpga/hash.hpp>

#include <openssl/evp.h>
#include <openssl/hmac.h>

namespace kacfpga {

Digest sha256(std::span<const std::uint8_t> data)
{
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size())
        raise(Errc::io_error, "SHA-256 failed");
    return out;
}

Digest hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> data)
{
    Digest out{};
    unsigned int len = 0;
    if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(), data.size(),
            out.data(), &len) == nullptr ||
        len != out.size())
        raise(Errc::io_error, "HMAC-SHA-256 failed");
    return out;
}

}  // namespace kacfpga
