// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <kacfpga/bilinear.hpp>
#include <kacfpga/bytes.hpp>
#include <kacfpga/hash.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace kacfpga::kac {

/// Plaintexts are XORed with a single hash output, so they cap at one digest.
inline constexpr std::size_t kMaxPlaintext = 32;

/// Guard against absurd allocations; the mpk holds 4n+2 group elements.
inline constexpr std::uint32_t kMaxEntities = 1u << 16;

/// Master public key: powers [alpha^j]P for j in [0,n] and [n+2,2n], plus
/// [gamma]P, all published in both source groups. Index n+1 is the hole --
/// deliberately unpublished, and guarded by the accessors.
template <BilinearGroup G>
class MasterPublicKey {
 public:
    MasterPublicKey() = default;
    MasterPublicKey(std::uint32_t n, std::vector<typename G::G1> powers_g1,
        std::vector<typename G::G2> powers_g2, typename G::G1 gamma_g1, typename G::G2 gamma_g2)
        : n_(n), powers_g1_(std::move(powers_g1)), powers_g2_(std::move(powers_g2)),
          gamma_g1_(std::move(gamma_g1)), gamma_g2_(std::move(gamma_g2))
    {
        if (powers_g1_.size() != 2 * static_cast<std::size_t>(n_) ||
            powers_g2_.size() != 2 * static_cast<std::size_t>(n_))
            raise(Errc::bad_parameter, "power table size must be 2n per group");
    }

    std::uint32_t n() const { return n_; }

    bool has_power(std::uint32_t j) const { return j <= 2 * n_ && j != n_ + 1; }

    const typename G::G1& power_g1(std::uint32_t j) const
    {
        return powers_g1_[slot(j)];
    }
    const typename G::G2& power_g2(std::uint32_t j) const
    {
        return powers_g2_[slot(j)];
    }

    const typename G::G1& gamma_g1() const { return gamma_g1_; }
    const typename G::G2& gamma_g2() const { return gamma_g2_; }

    /// Number of stored powers per group (2n; the hole is not a slot).
    std::size_t power_count() const { return powers_g1_.size(); }

 private:
    std::size_t slot(std::uint32_t j) const
    {
        if (j == n_ + 1)
            raise(Errc::hole_index, "power index n+1 is never published");
        if (j > 2 * n_)
            raise(Errc::id_out_of_range, "power index beyond 2n");
        return j <= n_ ? j : j - 1;
    }

    std::uint32_t n_ = 0;
    std::vector<typename G::G1> powers_g1_;
    std::vector<typename G::G2> powers_g2_;
    typename G::G1 gamma_g1_{};
    typename G::G2 gamma_g2_{};
};

template <BilinearGroup G>
struct MasterKeyPair {
    MasterPublicKey<G> mpk;
    typename G::Scalar msk{};  // gamma
};

/// Ciphertext (c0, c1, c2) bound to entity index `id`; c0 and c1 live in the
/// ciphertext-side source group.
template <BilinearGroup G>
struct KacCiphertext {
    std::uint32_t id = 0;
    typename G::G2 c0{};
    typename G::G2 c1{};
    std::vector<std::uint8_t> c2;
};

/// Aggregate key for a subset S: the secret sk_S = [gamma]a_S (one group
/// element, constant size for any |S|) plus the public helpers a_S and
/// b_{i,S} for each i in S.
template <BilinearGroup G>
struct AggregateKeyBundle {
    std::set<std::uint32_t> subset;
    typename G::G1 sk{};
    typename G::G1 a{};
    std::map<std::uint32_t, typename G::G1> b;
};

/// H: target-group element -> 32-byte mask.
template <BilinearGroup G>
Digest mask_of(const typename G::Gt& g)
{
    return sha256(G::gt_bytes(g));
}

/// Deterministic setup core with explicit alpha and gamma; the entry point
/// for reproducing worked examples. Public setup() draws them from the rng.
template <BilinearGroup G>
MasterKeyPair<G> setup_with(std::uint32_t n, const typename G::Scalar& alpha,
    const typename G::Scalar& gamma)
{
    if (n == 0 || n > kMaxEntities)
        raise(Errc::bad_parameter, "entity count must be in [1, 2^16]");

    std::vector<typename G::G1> powers_g1;
    std::vector<typename G::G2> powers_g2;
    powers_g1.reserve(2 * static_cast<std::size_t>(n));
    powers_g2.reserve(2 * static_cast<std::size_t>(n));

    const auto g1 = G::g1_generator();
    const auto g2 = G::g2_generator();
    auto alpha_pow = G::scalar_from_u64(1);
    for (std::uint32_t j = 0; j <= 2 * n; ++j)
    {
        if (j > 0)
            alpha_pow = G::scalar_mul(alpha_pow, alpha);
        if (j == n + 1)
            continue;  // the hole
        powers_g1.push_back(G::g1_mul(g1, alpha_pow));
        powers_g2.push_back(G::g2_mul(g2, alpha_pow));
    }

    MasterKeyPair<G> kp;
    kp.mpk = MasterPublicKey<G>(n, std::move(powers_g1), std::move(powers_g2),
        G::g1_mul(g1, gamma), G::g2_mul(g2, gamma));
    kp.msk = gamma;
    return kp;
}

template <BilinearGroup G>
MasterKeyPair<G> setup(std::uint32_t n, Rng& rng)
{
    if (n == 0 || n > kMaxEntities)
        raise(Errc::bad_parameter, "entity count must be in [1, 2^16]");
    // alpha in {0, 1} would collapse the power table; re-draw.
    auto alpha = G::random_scalar(rng);
    while (alpha == G::scalar_from_u64(0) || alpha == G::scalar_from_u64(1))
        alpha = G::random_scalar(rng);
    const auto gamma = G::random_scalar(rng);
    return setup_with<G>(n, alpha, gamma);
}

/// Deterministic encryption core with explicit randomizer r.
template <BilinearGroup G>
KacCiphertext<G> encrypt_with_r(const MasterPublicKey<G>& mpk, std::uint32_t id,
    std::span<const std::uint8_t> msg, const typename G::Scalar& r)
{
    if (id < 1 || id > mpk.n())
        raise(Errc::bad_id, "entity index must be in [1, n]");
    if (msg.empty() || msg.size() > kMaxPlaintext)
        raise(Errc::bad_length, "plaintext must be 1..32 bytes");

    KacCiphertext<G> ct;
    ct.id = id;
    ct.c0 = G::g2_mul(G::g2_generator(), r);
    ct.c1 = G::g2_mul(G::g2_add(mpk.gamma_g2(), mpk.power_g2(id)), r);

    const auto base = G::pair(mpk.power_g1(1), mpk.power_g2(mpk.n()));
    const auto seed = G::gt_pow(base, r);
    const auto pad = mask_of<G>(seed);
    ct.c2.resize(msg.size());
    for (std::size_t i = 0; i < msg.size(); ++i)
        ct.c2[i] = msg[i] ^ pad[i];
    return ct;
}

template <BilinearGroup G>
KacCiphertext<G> encrypt(const MasterPublicKey<G>& mpk, std::uint32_t id,
    std::span<const std::uint8_t> msg, Rng& rng)
{
    auto r = G::random_scalar(rng);
    while (r == G::scalar_from_u64(0))
        r = G::random_scalar(rng);
    return encrypt_with_r(mpk, id, msg, r);
}

/// a_S = sum over j in S of [alpha^(n+1-j)]P; sk_S = [gamma]a_S;
/// b_{i,S} = sum over j in S minus {i} of [alpha^(n+1-j+i)]P.
/// Every index touched lies in [1,n] or [n+2,2n]: the hole stays unread.
template <BilinearGroup G>
AggregateKeyBundle<G> aggregate_key(const typename G::Scalar& msk, const MasterPublicKey<G>& mpk,
    const std::set<std::uint32_t>& subset)
{
    if (subset.empty())
        raise(Errc::empty_subset, "aggregate key needs a non-empty subset");
    for (const auto id : subset)
        if (id < 1 || id > mpk.n())
            raise(Errc::id_out_of_range, "subset member outside [1, n]");

    const std::uint32_t n = mpk.n();
    AggregateKeyBundle<G> bundle;
    bundle.subset = subset;

    auto a = G::g1_identity();
    for (const auto j : subset)
        a = G::g1_add(a, mpk.power_g1(n + 1 - j));
    bundle.a = a;
    bundle.sk = G::g1_mul(a, msk);

    for (const auto i : subset)
    {
        auto b = G::g1_identity();  // empty sum when S = {i}
        for (const auto j : subset)
        {
            if (j == i)
                continue;
            b = G::g1_add(b, mpk.power_g1(n + 1 - j + i));
        }
        bundle.b.emplace(i, std::move(b));
    }
    return bundle;
}

namespace detail {

template <BilinearGroup G>
std::vector<std::uint8_t> decrypt_core(const AggregateKeyBundle<G>& bundle,
    const KacCiphertext<G>& ct)
{
    if (ct.c2.empty() || ct.c2.size() > kMaxPlaintext)
        raise(Errc::malformed_ciphertext, "c2 length out of range");

    auto b_it = bundle.b.find(ct.id);
    const auto b = b_it != bundle.b.end() ? b_it->second : G::g1_identity();

    const auto num = G::pair(bundle.a, ct.c1);
    const auto den = G::pair(G::g1_add(bundle.sk, b), ct.c0);
    const auto seed = G::gt_op(num, G::gt_inv(den));
    const auto pad = mask_of<G>(seed);

    std::vector<std::uint8_t> msg(ct.c2.size());
    for (std::size_t i = 0; i < msg.size(); ++i)
        msg[i] = ct.c2[i] ^ pad[i];
    return msg;
}

}  // namespace detail

/// Recover the plaintext; refuses ciphertexts whose id is outside the
/// bundle's subset before doing any group work.
template <BilinearGroup G>
std::vector<std::uint8_t> decrypt(const AggregateKeyBundle<G>& bundle, const KacCiphertext<G>& ct)
{
    if (!bundle.subset.contains(ct.id))
        raise(Errc::id_not_in_subset, "ciphertext id not covered by aggregate key");
    return detail::decrypt_core(bundle, ct);
}

/// Test hook: run the decryption equation even when ct.id is not in S
/// (missing b term becomes the identity). Exists so exclusion trials can
/// demonstrate that the recovered bytes are wrong; never use it for real.
template <BilinearGroup G>
std::vector<std::uint8_t> decrypt_unchecked(const AggregateKeyBundle<G>& bundle,
    const KacCiphertext<G>& ct)
{
    return detail::decrypt_core(bundle, ct);
}

// ---- canonical serializations ----------------------------------------------

namespace detail {

template <BilinearGroup G>
typename G::G1 read_g1(ByteReader& r)
{
    return G::g1_from_bytes(r.take(G::g1_wire_size(r.peek())));
}

template <BilinearGroup G>
typename G::G2 read_g2(ByteReader& r)
{
    return G::g2_from_bytes(r.take(G::g2_wire_size(r.peek())));
}

}  // namespace detail

/// id (4 bytes BE) || c0 || c1 || len(c2) (2 bytes BE) || c2.
template <BilinearGroup G>
std::vector<std::uint8_t> ciphertext_to_bytes(const KacCiphertext<G>& ct)
{
    ByteWriter w;
    w.u32(ct.id);
    w.bytes(G::g2_bytes(ct.c0));
    w.bytes(G::g2_bytes(ct.c1));
    w.u16(static_cast<std::uint16_t>(ct.c2.size()));
    w.bytes(ct.c2);
    return w.take();
}

template <BilinearGroup G>
KacCiphertext<G> ciphertext_from_bytes(std::span<const std::uint8_t> in)
{
    try
    {
        ByteReader r(in, Errc::malformed_ciphertext);
        KacCiphertext<G> ct;
        ct.id = r.u32();
        ct.c0 = detail::read_g2<G>(r);
        ct.c1 = detail::read_g2<G>(r);
        const auto len = r.u16();
        const auto body = r.take(len);
        ct.c2.assign(body.begin(), body.end());
        if (!r.done())
            raise(Errc::malformed_ciphertext, "trailing bytes after ciphertext");
        return ct;
    }
    catch (const Error& e)
    {
        if (e.code() == Errc::malformed_ciphertext)
            throw;
        raise(Errc::malformed_ciphertext, std::string("invalid ciphertext: ") + e.what());
    }
}

/// Public-key payload: n (4 bytes BE) || powers_g1 in ascending index order ||
/// [gamma]P_1 || powers_g2 || [gamma]P_2. The keystore wraps this in its own
/// magic/version header.
template <BilinearGroup G>
std::vector<std::uint8_t> mpk_to_bytes(const MasterPublicKey<G>& mpk)
{
    ByteWriter w;
    w.u32(mpk.n());
    for (std::uint32_t j = 0; j <= 2 * mpk.n(); ++j)
        if (j != mpk.n() + 1)
            w.bytes(G::g1_bytes(mpk.power_g1(j)));
    w.bytes(G::g1_bytes(mpk.gamma_g1()));
    for (std::uint32_t j = 0; j <= 2 * mpk.n(); ++j)
        if (j != mpk.n() + 1)
            w.bytes(G::g2_bytes(mpk.power_g2(j)));
    w.bytes(G::g2_bytes(mpk.gamma_g2()));
    return w.take();
}

template <BilinearGroup G>
MasterPublicKey<G> mpk_from_bytes(std::span<const std::uint8_t> in)
{
    ByteReader r(in, Errc::corrupt_point);
    const std::uint32_t n = r.u32();
    if (n == 0 || n > kMaxEntities)
        raise(Errc::bad_parameter, "entity count out of range");
    std::vector<typename G::G1> powers_g1;
    std::vector<typename G::G2> powers_g2;
    powers_g1.reserve(2 * static_cast<std::size_t>(n));
    powers_g2.reserve(2 * static_cast<std::size_t>(n));
    for (std::uint32_t i = 0; i < 2 * n; ++i)
        powers_g1.push_back(detail::read_g1<G>(r));
    auto gamma_g1 = detail::read_g1<G>(r);
    for (std::uint32_t i = 0; i < 2 * n; ++i)
        powers_g2.push_back(detail::read_g2<G>(r));
    auto gamma_g2 = detail::read_g2<G>(r);
    if (!r.done())
        raise(Errc::corrupt_point, "trailing bytes after mpk");
    return MasterPublicKey<G>(n, std::move(powers_g1), std::move(powers_g2), std::move(gamma_g1),
        std::move(gamma_g2));
}

}  // namespace kacfpga::kac
