// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <kacfpga/u256.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

// Arithmetic here is NOT constant-time: modular reduction, exponentiation and
// scalar recoding all branch on operand values. That is acceptable for this
// simulator; do not lift it into anything handling live keys on real hardware.

namespace kacfpga {

/// BN254 base field prime, p = 36u^4 + 36u^3 + 24u^2 + 6u + 1 for u = 4965661367192848881.
inline constexpr u256 kFieldPrime =
    0x30644e72e131a029b85045b68181585d97816a916871ca8d3c208c16d87cfd47_u256;

/// Order of G1/G2/Gt, q = 36u^4 + 36u^3 + 18u^2 + 6u + 1. Coincides with the
/// number of points on the curve (the G1 cofactor is 1).
inline constexpr u256 kGroupOrder =
    0x30644e72e131a029b85045b68181585d2833e84879b9709143e1f593f0000001_u256;

inline constexpr ModArith kFp{kFieldPrime};
inline constexpr ModArith kFr{kGroupOrder};

/// Prime field element, canonical value in [0, p-1].
///
/// Stored internally in Montgomery form; serialization is always the plain
/// canonical integer, 32 bytes big-endian.
class Fp {
 public:
    constexpr Fp() = default;

    static constexpr Fp from_u64(std::uint64_t v) { return Fp(kFp.to_mont(u256(v))); }

    /// From a canonical integer; must already be < p.
    static constexpr Fp from_canonical(const u256& v)
    {
        if (v >= kFieldPrime)
            raise(Errc::bad_encoding, "field element not canonical");
        return Fp(kFp.to_mont(v));
    }

    static Fp from_bytes(std::span<const std::uint8_t> in)
    {
        return from_canonical(u256::from_bytes_be(in));
    }

    static constexpr Fp zero() { return Fp(); }
    static constexpr Fp one() { return Fp(kFp.one()); }

    constexpr u256 canonical() const { return kFp.from_mont(m_); }
    std::array<std::uint8_t, 32> to_bytes() const { return canonical().to_bytes_be(); }

    constexpr bool is_zero() const { return m_.is_zero(); }

    friend constexpr Fp operator+(const Fp& a, const Fp& b) { return Fp(kFp.add(a.m_, b.m_)); }
    friend constexpr Fp operator-(const Fp& a, const Fp& b) { return Fp(kFp.sub(a.m_, b.m_)); }
    friend constexpr Fp operator*(const Fp& a, const Fp& b) { return Fp(kFp.mul(a.m_, b.m_)); }
    friend constexpr Fp operator-(const Fp& a) { return Fp(kFp.neg(a.m_)); }
    friend constexpr bool operator==(const Fp&, const Fp&) = default;

    constexpr Fp square() const { return Fp(kFp.sqr(m_)); }
    constexpr Fp dbl() const { return Fp(kFp.add(m_, m_)); }

    constexpr Fp inverse() const { return Fp(kFp.inv(m_)); }

    constexpr Fp pow(const u256& e) const { return Fp(kFp.pow(m_, e)); }

    /// Raw Montgomery-form constructor; for curve/pairing internals.
    constexpr explicit Fp(const u256& mont) : m_(mont) {}
    constexpr const u256& mont() const { return m_; }

 private:
    u256 m_{};
};

/// Quadratic extension F_p[u]/(u^2 + 1); element a0 + a1*u.
/// Serialization: a0 then a1, 64 bytes total.
class Fp2 {
 public:
    Fp a0, a1;

    constexpr Fp2() = default;
    constexpr Fp2(const Fp& c0, const Fp& c1) : a0(c0), a1(c1) {}
    static constexpr Fp2 from_u64(std::uint64_t c0, std::uint64_t c1 = 0)
    {
        return {Fp::from_u64(c0), Fp::from_u64(c1)};
    }

    static constexpr Fp2 zero() { return {}; }
    static constexpr Fp2 one() { return {Fp::one(), Fp::zero()}; }

    constexpr bool is_zero() const { return a0.is_zero() && a1.is_zero(); }

    friend constexpr Fp2 operator+(const Fp2& x, const Fp2& y) { return {x.a0 + y.a0, x.a1 + y.a1}; }
    friend constexpr Fp2 operator-(const Fp2& x, const Fp2& y) { return {x.a0 - y.a0, x.a1 - y.a1}; }
    friend constexpr Fp2 operator-(const Fp2& x) { return {-x.a0, -x.a1}; }
    friend constexpr bool operator==(const Fp2&, const Fp2&) = default;

    friend constexpr Fp2 operator*(const Fp2& x, const Fp2& y)
    {
        // (a0 + a1 u)(b0 + b1 u) with u^2 = -1, Karatsuba.
        const Fp t0 = x.a0 * y.a0;
        const Fp t1 = x.a1 * y.a1;
        const Fp sum = (x.a0 + x.a1) * (y.a0 + y.a1);
        return {t0 - t1, sum - t0 - t1};
    }

    constexpr Fp2 mul_fp(const Fp& s) const { return {a0 * s, a1 * s}; }

    constexpr Fp2 square() const
    {
        // (a0 + a1 u)^2 = (a0+a1)(a0-a1) + 2 a0 a1 u
        const Fp t = a0 * a1;
        return {(a0 + a1) * (a0 - a1), t.dbl()};
    }

    constexpr Fp2 dbl() const { return {a0.dbl(), a1.dbl()}; }

    constexpr Fp2 conjugate() const { return {a0, -a1}; }

    constexpr Fp2 inverse() const
    {
        // 1/(a0 + a1 u) = (a0 - a1 u) / (a0^2 + a1^2)
        const Fp norm = a0.square() + a1.square();
        const Fp ninv = norm.inverse();
        return {a0 * ninv, -(a1 * ninv)};
    }

    std::array<std::uint8_t, 64> to_bytes() const
    {
        std::array<std::uint8_t, 64> out;
        const auto b0 = a0.to_bytes();
        const auto b1 = a1.to_bytes();
        std::copy(b0.begin(), b0.end(), out.begin());
        std::copy(b1.begin(), b1.end(), out.begin() + 32);
        return out;
    }

    static Fp2 from_bytes(std::span<const std::uint8_t> in)
    {
        if (in.size() != 64)
            raise(Errc::bad_encoding, "Fp2 needs exactly 64 bytes");
        return {Fp::from_bytes(in.subspan(0, 32)), Fp::from_bytes(in.subspan(32, 32))};
    }
};

/// Non-residue for the cubic extension: xi = 9 + u.
inline constexpr Fp2 fp6_xi()
{
    return Fp2::from_u64(9, 1);
}

/// Cubic extension F_p2[v]/(v^3 - xi); element c0 + c1*v + c2*v^2.
class Fp6 {
 public:
    Fp2 c0, c1, c2;

    constexpr Fp6() = default;
    constexpr Fp6(const Fp2& a, const Fp2& b, const Fp2& c) : c0(a), c1(b), c2(c) {}

    static constexpr Fp6 zero() { return {}; }
    static constexpr Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }

    friend constexpr Fp6 operator+(const Fp6& x, const Fp6& y)
    {
        return {x.c0 + y.c0, x.c1 + y.c1, x.c2 + y.c2};
    }
    friend constexpr Fp6 operator-(const Fp6& x, const Fp6& y)
    {
        return {x.c0 - y.c0, x.c1 - y.c1, x.c2 - y.c2};
    }
    friend constexpr Fp6 operator-(const Fp6& x) { return {-x.c0, -x.c1, -x.c2}; }
    friend constexpr bool operator==(const Fp6&, const Fp6&) = default;

    friend constexpr Fp6 operator*(const Fp6& x, const Fp6& y)
    {
        // Toom/Karatsuba-style 3x3 with v^3 = xi.
        const Fp2 t0 = x.c0 * y.c0;
        const Fp2 t1 = x.c1 * y.c1;
        const Fp2 t2 = x.c2 * y.c2;
        const Fp2 s01 = (x.c0 + x.c1) * (y.c0 + y.c1) - t0 - t1;  // coeff of v
        const Fp2 s02 = (x.c0 + x.c2) * (y.c0 + y.c2) - t0 - t2;  // coeff of v^2 (partial)
        const Fp2 s12 = (x.c1 + x.c2) * (y.c1 + y.c2) - t1 - t2;  // coeff of v^3
        const Fp2 xi = fp6_xi();
        return {t0 + xi * s12, s01 + xi * t2, s02 + t1};
    }

    constexpr Fp6 mul_fp2(const Fp2& s) const { return {c0 * s, c1 * s, c2 * s}; }

    /// Multiplication by v: (c0 + c1 v + c2 v^2) * v = xi c2 + c0 v + c1 v^2.
    constexpr Fp6 mul_by_v() const { return {fp6_xi() * c2, c0, c1}; }

    constexpr Fp6 square() const { return *this * *this; }

    constexpr Fp6 inverse() const
    {
        const Fp2 xi = fp6_xi();
        const Fp2 a = c0.square() - xi * (c1 * c2);
        const Fp2 b = xi * c2.square() - c0 * c1;
        const Fp2 c = c1.square() - c0 * c2;
        const Fp2 t = (c0 * a + xi * (c2 * b + c1 * c)).inverse();
        return {a * t, b * t, c * t};
    }
};

/// Degree-12 tower F_p6[w]/(w^2 - v); element c0 + c1*w.
///
/// Tower ordering for serialization (fixed, 384 bytes): the six Fp2
/// coefficients in the order c0.c0, c0.c1, c0.c2, c1.c0, c1.c1, c1.c2,
/// i.e. coefficients of w^0, w^2, w^4, w^1, w^3, w^5 under w^2 = v.
class Fp12 {
 public:
    Fp6 c0, c1;

    constexpr Fp12() = default;
    constexpr Fp12(const Fp6& a, const Fp6& b) : c0(a), c1(b) {}

    static constexpr Fp12 zero() { return {}; }
    static constexpr Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    constexpr bool is_one() const { return *this == one(); }

    friend constexpr Fp12 operator+(const Fp12& x, const Fp12& y)
    {
        return {x.c0 + y.c0, x.c1 + y.c1};
    }
    friend constexpr Fp12 operator-(const Fp12& x, const Fp12& y)
    {
        return {x.c0 - y.c0, x.c1 - y.c1};
    }
    friend constexpr bool operator==(const Fp12&, const Fp12&) = default;

    friend constexpr Fp12 operator*(const Fp12& x, const Fp12& y)
    {
        // (a0 + a1 w)(b0 + b1 w) with w^2 = v, Karatsuba.
        const Fp6 t0 = x.c0 * y.c0;
        const Fp6 t1 = x.c1 * y.c1;
        const Fp6 mid = (x.c0 + x.c1) * (y.c0 + y.c1) - t0 - t1;
        return {t0 + t1.mul_by_v(), mid};
    }

    constexpr Fp12 square() const { return *this * *this; }

    /// Conjugation over Fp6, equal to the Frobenius power x -> x^(p^6).
    constexpr Fp12 conjugate() const { return {c0, -c1}; }

    constexpr Fp12 inverse() const
    {
        if (is_zero())
            raise(Errc::zero_inverse, "inverse of zero in Fp12");
        const Fp6 norm = c0.square() - c1.square().mul_by_v();
        const Fp6 ninv = norm.inverse();
        return {c0 * ninv, -(c1 * ninv)};
    }

    /// x^e by square-and-multiply; e >= 0, any width (little-endian limbs).
    Fp12 pow(std::span<const std::uint64_t> e) const
    {
        Fp12 acc = one();
        bool started = false;
        for (std::size_t li = e.size(); li-- > 0;)
        {
            for (int bi = 63; bi >= 0; --bi)
            {
                if (started)
                    acc = acc.square();
                if ((e[li] >> bi) & 1)
                {
                    if (started)
                        acc = acc * *this;
                    else
                    {
                        acc = *this;
                        started = true;
                    }
                }
            }
        }
        return acc;
    }

    Fp12 pow(const u256& e) const
    {
        return pow(std::span<const std::uint64_t>(e.w.data(), e.w.size()));
    }

    Fp12 pow(std::uint64_t e) const
    {
        return pow(std::span<const std::uint64_t>(&e, 1));
    }

    std::array<std::uint8_t, 384> to_bytes() const
    {
        std::array<std::uint8_t, 384> out;
        const Fp2* coeffs[6] = {&c0.c0, &c0.c1, &c0.c2, &c1.c0, &c1.c1, &c1.c2};
        for (std::size_t i = 0; i < 6; ++i)
        {
            const auto b = coeffs[i]->to_bytes();
            std::copy(b.begin(), b.end(), out.begin() + static_cast<std::ptrdiff_t>(i * 64));
        }
        return out;
    }

    static Fp12 from_bytes(std::span<const std::uint8_t> in)
    {
        if (in.size() != 384)
            raise(Errc::bad_encoding, "Fp12 needs exactly 384 bytes");
        Fp12 r;
        Fp2* coeffs[6] = {&r.c0.c0, &r.c0.c1, &r.c0.c2, &r.c1.c0, &r.c1.c1, &r.c1.c2};
        for (std::size_t i = 0; i < 6; ++i)
            *coeffs[i] = Fp2::from_bytes(in.subspan(i * 64, 64));
        return r;
    }
};

}  // namespace kacfpga
