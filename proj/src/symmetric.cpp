// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#include <kacfpga/errors.hpp>
#include <kacfpga/hash.hpp>
#include <kacfpga/symmetric.hpp>

#include <openssl/evp.h>

#include <cstring>
#include <memory>

namespace kacfpga {

namespace {

struct CipherCtxFree {
    void operator()(EVP_CIPHER_CTX* c) const { EVP_CIPHER_CTX_free(c); }
};

std::vector<std::uint8_t> aes128_ctr(const SessionKey& key,
    std::span<const std::uint8_t, kNonceSize> nonce, std::span<const std::uint8_t> data)
{
    // Initial counter block: nonce || 32-bit block counter starting at zero.
    std::array<std::uint8_t, 16> iv{};
    std::memcpy(iv.data(), nonce.data(), kNonceSize);

    std::unique_ptr<EVP_CIPHER_CTX, CipherCtxFree> ctx(EVP_CIPHER_CTX_new());
    if (!ctx ||
        EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_ctr(), nullptr, key.data(), iv.data()) != 1)
        raise(Errc::io_error, "AES-CTR init failed");

    std::vector<std::uint8_t> out(data.size());
    int len = 0;
    if (!data.empty() &&
        EVP_EncryptUpdate(ctx.get(), out.data(), &len, data.data(), static_cast<int>(data.size())) !=
            1)
        raise(Errc::io_error, "AES-CTR update failed");
    int fin = 0;
    if (EVP_EncryptFinal_ex(ctx.get(), out.data() + len, &fin) != 1)
        raise(Errc::io_error, "AES-CTR final failed");
    if (static_cast<std::size_t>(len + fin) != out.size())
        raise(Errc::io_error, "AES-CTR length mismatch");
    return out;
}

Digest mac_key(const SessionKey& key)
{
    static constexpr std::uint8_t label[] = {'k', 'a', 'c', 'f', 'p', 'g', 'a', '-', 'm', 'a', 'c'};
    std::vector<std::uint8_t> input(std::begin(label), std::end(label));
    input.insert(input.end(), key.begin(), key.end());
    return sha256(input);
}

std::array<std::uint8_t, kTagSize> compute_tag(const SessionKey& key,
    std::span<const std::uint8_t> nonce_and_ct)
{
    const auto mk = mac_key(key);
    const auto full = hmac_sha256(mk, nonce_and_ct);
    std::array<std::uint8_t, kTagSize> tag;
    std::copy_n(full.begin(), kTagSize, tag.begin());
    return tag;
}

}  // namespace

std::vector<std::uint8_t> seal(const SessionKey& key, std::span<const std::uint8_t> plaintext,
    Rng& rng)
{
    std::array<std::uint8_t, kNonceSize> nonce;
    rng.fill(nonce);

    std::vector<std::uint8_t> out(nonce.begin(), nonce.end());
    const auto ct = aes128_ctr(key, nonce, plaintext);
    out.insert(out.end(), ct.begin(), ct.end());

    const auto tag = compute_tag(key, out);
    out.insert(out.end(), tag.begin(), tag.end());
    return out;
}

std::vector<std::uint8_t> open(const SessionKey& key, std::span<const std::uint8_t> sealed)
{
    if (sealed.size() < kNonceSize + kTagSize)
        raise(Errc::bad_encoding, "sealed payload shorter than nonce plus tag");

    const auto nonce_and_ct = sealed.first(sealed.size() - kTagSize);
    const auto tag = sealed.last(kTagSize);

    const auto expect = compute_tag(key, nonce_and_ct);
    // Constant-time comparison is not a goal here; reject on any difference.
    std::uint8_t diff = 0;
    for (std::size_t i = 0; i < kTagSize; ++i)
        diff |= static_cast<std::uint8_t>(tag[i] ^ expect[i]);
    if (diff != 0)
        raise(Errc::tag_mismatch, "integrity tag does not verify");

    const auto nonce = nonce_and_ct.first<kNonceSize>();
    return aes128_ctr(key, nonce, nonce_and_ct.subspan(kNonceSize));
}

}  // namespace kacfpga
