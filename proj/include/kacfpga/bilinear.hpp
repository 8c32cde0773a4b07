// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <kacfpga/curve.hpp>
#include <kacfpga/mock_group.hpp>
#include <kacfpga/pairing.hpp>
#include <kacfpga/rng.hpp>

#include <concepts>
#include <cstdint>
#include <string_view>
#include <vector>

namespace kacfpga {

/// Static interface of a bilinear-group realization.
///
/// The scheme is symmetric on paper; real curves are asymmetric (type 3), so
/// the surface exposes two source groups. A realization where G1 and G2 are
/// the same type (the mock) recovers the symmetric view.
template <typename G>
concept BilinearGroup = requires(typename G::G1 p1, typename G::G2 p2, typename G::Gt t,
    typename G::Scalar s, Rng& rng, std::vector<std::uint8_t> bytes) {
    { G::name() } -> std::convertible_to<std::string_view>;

    { G::scalar_from_u64(std::uint64_t{}) } -> std::same_as<typename G::Scalar>;
    { G::random_scalar(rng) } -> std::same_as<typename G::Scalar>;
    { G::scalar_add(s, s) } -> std::same_as<typename G::Scalar>;
    { G::scalar_mul(s, s) } -> std::same_as<typename G::Scalar>;
    { s == s } -> std::convertible_to<bool>;

    { G::g1_generator() } -> std::same_as<typename G::G1>;
    { G::g2_generator() } -> std::same_as<typename G::G2>;
    { G::g1_identity() } -> std::same_as<typename G::G1>;
    { G::g2_identity() } -> std::same_as<typename G::G2>;
    { G::g1_add(p1, p1) } -> std::same_as<typename G::G1>;
    { G::g2_add(p2, p2) } -> std::same_as<typename G::G2>;
    { G::g1_mul(p1, s) } -> std::same_as<typename G::G1>;
    { G::g2_mul(p2, s) } -> std::same_as<typename G::G2>;
    { p1 == p1 } -> std::convertible_to<bool>;

    { G::pair(p1, p2) } -> std::same_as<typename G::Gt>;
    { G::gt_identity() } -> std::same_as<typename G::Gt>;
    { G::gt_op(t, t) } -> std::same_as<typename G::Gt>;
    { G::gt_inv(t) } -> std::same_as<typename G::Gt>;
    { G::gt_pow(t, s) } -> std::same_as<typename G::Gt>;
    { t == t } -> std::convertible_to<bool>;

    { G::g1_bytes(p1) } -> std::same_as<std::vector<std::uint8_t>>;
    { G::g2_bytes(p2) } -> std::same_as<std::vector<std::uint8_t>>;
    { G::gt_bytes(t) } -> std::same_as<std::vector<std::uint8_t>>;
    { G::g1_from_bytes(bytes) } -> std::same_as<typename G::G1>;
    { G::g2_from_bytes(bytes) } -> std::same_as<typename G::G2>;
    // Wire length of one encoded element, decided by its first byte.
    { G::g1_wire_size(std::uint8_t{}) } -> std::same_as<std::size_t>;
    { G::g2_wire_size(std::uint8_t{}) } -> std::same_as<std::size_t>;
};

/// The BN254 realization: G1 on the base curve, G2 on the sextic twist,
/// Gt the order-q subgroup of Fp12*, Tate pairing.
struct BnGroup {
    using G1 = G1Point;
    using G2 = G2Point;
    using Gt = GtElement;
    using Scalar = kacfpga::Scalar;

    static constexpr std::string_view name() { return "bn-real"; }

    static Scalar scalar_from_u64(std::uint64_t v) { return Scalar(v); }
    static Scalar random_scalar(Rng& rng) { return Scalar::random(rng); }
    static Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
    static Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }

    static G1 g1_generator() { return G1::generator(); }
    static G2 g2_generator() { return G2::generator(); }
    static G1 g1_identity() { return G1(); }
    static G2 g2_identity() { return G2(); }
    static G1 g1_add(const G1& a, const G1& b) { return a + b; }
    static G2 g2_add(const G2& a, const G2& b) { return a + b; }
    static G1 g1_mul(const G1& p, const Scalar& k) { return k * p; }
    static G2 g2_mul(const G2& p, const Scalar& k) { return k * p; }

    static Gt pair(const G1& p, const G2& q) { return kacfpga::pair(p, q); }
    static Gt gt_identity() { return Gt::identity(); }
    static Gt gt_op(const Gt& a, const Gt& b) { return a * b; }
    static Gt gt_inv(const Gt& a) { return a.inverse(); }
    static Gt gt_pow(const Gt& a, const Scalar& k) { return a.pow(k); }

    static std::vector<std::uint8_t> g1_bytes(const G1& p) { return p.to_bytes(); }
    static std::vector<std::uint8_t> g2_bytes(const G2& p) { return p.to_bytes(); }
    static std::vector<std::uint8_t> gt_bytes(const Gt& t)
    {
        const auto b = t.to_bytes();
        return {b.begin(), b.end()};
    }
    static G1 g1_from_bytes(std::span<const std::uint8_t> in) { return G1::from_bytes(in); }
    static G2 g2_from_bytes(std::span<const std::uint8_t> in) { return G2::from_bytes(in); }
    static std::size_t g1_wire_size(std::uint8_t first)
    {
        return first == 0x00 ? 1 : G1::encoded_size();
    }
    static std::size_t g2_wire_size(std::uint8_t first)
    {
        return first == 0x00 ? 1 : G2::encoded_size();
    }
};

/// The hand-checkable oracle realization over exponents mod 101.
struct MockGroup {
    using G1 = mock::MockElement;
    using G2 = mock::MockElement;
    using Gt = mock::MockGt;
    using Scalar = mock::MockScalar;

    static constexpr std::string_view name() { return "mock"; }

    static Scalar scalar_from_u64(std::uint64_t v)
    {
        return {static_cast<std::uint32_t>(v % mock::kMockOrder)};
    }
    static Scalar random_scalar(Rng& rng) { return Scalar::random(rng); }
    static Scalar scalar_add(Scalar a, Scalar b) { return a + b; }
    static Scalar scalar_mul(Scalar a, Scalar b) { return a * b; }

    static G1 g1_generator() { return G1::generator(); }
    static G2 g2_generator() { return G2::generator(); }
    static G1 g1_identity() { return {}; }
    static G2 g2_identity() { return {}; }
    static G1 g1_add(G1 a, G1 b) { return a + b; }
    static G2 g2_add(G2 a, G2 b) { return a + b; }
    static G1 g1_mul(G1 p, Scalar k) { return k * p; }
    static G2 g2_mul(G2 p, Scalar k) { return k * p; }

    static Gt pair(G1 a, G2 b) { return mock::mock_pair(a, b); }
    static Gt gt_identity() { return {}; }
    static Gt gt_op(Gt a, Gt b) { return a * b; }
    static Gt gt_inv(Gt a) { return a.inverse(); }
    static Gt gt_pow(Gt a, Scalar k) { return a.pow(k.v); }

    static std::vector<std::uint8_t> g1_bytes(G1 p) { return p.to_bytes(); }
    static std::vector<std::uint8_t> g2_bytes(G2 p) { return p.to_bytes(); }
    static std::vector<std::uint8_t> gt_bytes(Gt t) { return t.to_bytes(); }
    static G1 g1_from_bytes(std::span<const std::uint8_t> in) { return G1::from_bytes(in); }
    static G2 g2_from_bytes(std::span<const std::uint8_t> in) { return G2::from_bytes(in); }
    static std::size_t g1_wire_size(std::uint8_t) { return 4; }
    static std::size_t g2_wire_size(std::uint8_t) { return 4; }
};

static_assert(BilinearGroup<BnGroup>);
static_assert(BilinearGroup<MockGroup>);

}  // namespace kacfpga
