// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <kacfpga/curve.hpp>
#include <kacfpga/fields.hpp>

#include <cstdint>

namespace kacfpga {

/// Loop constant of the Tate pairing is the group order q; the Miller loop
/// walks every bit of it, msb first.
inline constexpr unsigned kTateLoopBits = 254;
static_assert(kTateLoopBits == 254);

/// Element of the order-q subgroup of Fp12*, the pairing target group.
/// Serialization: the 384-byte Fp12 encoding.
class GtElement {
 public:
    constexpr GtElement() : v_(Fp12::one()) {}
    constexpr explicit GtElement(const Fp12& v) : v_(v) {}

    static constexpr GtElement identity() { return GtElement(); }

    constexpr const Fp12& value() const { return v_; }
    constexpr bool is_identity() const { return v_.is_one(); }

    friend constexpr GtElement operator*(const GtElement& a, const GtElement& b)
    {
        return GtElement(a.v_ * b.v_);
    }
    friend constexpr bool operator==(const GtElement&, const GtElement&) = default;

    /// Inverse via conjugation; valid because Gt elements are unitary
    /// (x^(p^6+1) = 1 for the whole cyclotomic subgroup).
    constexpr GtElement inverse() const { return GtElement(v_.conjugate()); }

    GtElement pow(const Scalar& k) const { return GtElement(v_.pow(k.value())); }
    GtElement pow_raw(const u256& e) const { return GtElement(v_.pow(e)); }

    std::array<std::uint8_t, 384> to_bytes() const { return v_.to_bytes(); }
    static GtElement from_bytes(std::span<const std::uint8_t> in)
    {
        return GtElement(Fp12::from_bytes(in));
    }

 private:
    Fp12 v_;
};

/// Unreduced Tate pairing value f_{q,P}(psi(Q)) with denominator elimination;
/// psi is the untwisting map into E(Fp12). Rejects infinity inputs.
Fp12 miller_loop(const G1Point& p, const G2Point& q);

/// f^((p^12-1)/q) via the easy/hard split:
/// f^(p^6-1) by conjugate times inverse, then ^(p^2+1), then ^((p^4-p^2+1)/q).
GtElement final_exponentiation(const Fp12& f);

/// The reduced Tate pairing e(P, Q). Bilinear, non-degenerate on the
/// generators; every call bumps the instrumentation counter.
GtElement pair(const G1Point& p, const G2Point& q);

/// Process-wide count of pair() invocations (atomic).
std::uint64_t pairing_count();
void reset_pairing_count();

/// Number of loop iterations executed by the most recent miller_loop call.
unsigned last_miller_iterations();

}  // namespace kacfpga
