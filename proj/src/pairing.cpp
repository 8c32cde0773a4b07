// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#include <kacfpga/pairing.hpp>

#include <atomic>

namespace kacfpga {

namespace {

std::atomic<std::uint64_t> g_pair_count{0};
std::atomic<unsigned> g_last_miller_iterations{0};

// (p^2 + 1), little-endian 64-bit limbs.
constexpr std::uint64_t kP2PlusOne[] = {
    0x3b5458a2275d69b2, 0xa602072d09eac101, 0x4a50189c6d96cadc, 0x04689e957a1242c8,
    0x26edfa5c34c6b38d, 0xb00b855116375606, 0x599a6f7c0348d21c, 0x0925c4b8763cbf9c};

// (p^4 - p^2 + 1) / q, little-endian 64-bit limbs.
constexpr std::uint64_t kHardPart[] = {
    0xe81bb482ccdf42b1, 0x5abf5cc4f49c36d4, 0xf1154e7e1da014fd, 0xdcc7b44c87cdbacf,
    0xaaa441e3954bcf8a, 0x6b887d56d5095f23, 0x79581e16f3fd90c6, 0x3b1b1355d189227d,
    0x4e529a5861876f6b, 0x6c0eb522d5b12278, 0x331ec15183177faf, 0x01baaa710b0759ad};

// Line through the G1 points anchored at (ax, ay) with slope `lambda`,
// evaluated at the untwisted G2 point psi(Q) = (qx * w^2, qy * w^3).
// Nonzero coefficients land at w^0, w^2 = v and w^3 = v*w of the 2-3-2 tower.
Fp12 line_eval(const Fp& ax, const Fp& ay, const Fp& lambda, const Fp2& qx, const Fp2& qy)
{
    Fp12 l;
    l.c0.c0 = Fp2{lambda * ax - ay, Fp::zero()};
    l.c0.c1 = -qx.mul_fp(lambda);
    l.c1.c1 = qy;
    return l;
}

}  // namespace

Fp12 miller_loop(const G1Point& p, const G2Point& q)
{
    if (p.is_infinity() || q.is_infinity())
        raise(Errc::infinity_input, "pairing argument is the point at infinity");

    const Fp2& qx = q.x();
    const Fp2& qy = q.y();
    const Fp& px = p.x();
    const Fp& py = p.y();

    Fp12 f = Fp12::one();
    Fp tx, ty;          // current accumulator point T, affine
    bool t_inf = true;  // loop starts from the identity so every bit of q is processed
    unsigned iterations = 0;

    for (unsigned i = kTateLoopBits; i-- > 0;)
    {
        ++iterations;
        f = f.square();
        if (!t_inf)
        {
            // Tangent line at T, then T = 2T.
            const Fp lambda = (tx.square() * Fp::from_u64(3)) * ty.dbl().inverse();
            f = f * line_eval(tx, ty, lambda, qx, qy);
            const Fp x3 = lambda.square() - tx.dbl();
            ty = lambda * (tx - x3) - ty;
            tx = x3;
        }
        if (kGroupOrder.bit(i))
        {
            if (t_inf)
            {
                // First set bit: T = P. The chord here is the vertical line at
                // P, which denominator elimination removes.
                tx = px;
                ty = py;
                t_inf = false;
            }
            else if (tx == px)
            {
                // T = -P (the final addition of the loop): vertical line,
                // eliminated; T becomes the identity.
                t_inf = true;
            }
            else
            {
                // Chord through T and P, then T = T + P.
                const Fp lambda = (ty - py) * (tx - px).inverse();
                f = f * line_eval(tx, ty, lambda, qx, qy);
                const Fp x3 = lambda.square() - tx - px;
                ty = lambda * (tx - x3) - ty;
                tx = x3;
            }
        }
    }

    g_last_miller_iterations.store(iterations, std::memory_order_relaxed);
    return f;
}

GtElement final_exponentiation(const Fp12& f)
{
    if (f.is_zero())
        raise(Errc::zero_input, "final exponentiation of zero");
    // Easy part: f^((p^6-1)(p^2+1)). The p^6 power is conjugation.
    const Fp12 a = f.conjugate() * f.inverse();
    const Fp12 b = a.pow(std::span<const std::uint64_t>(kP2PlusOne));
    // Hard part: ^((p^4-p^2+1)/q).
    return GtElement(b.pow(std::span<const std::uint64_t>(kHardPart)));
}

GtElement pair(const G1Point& p, const G2Point& q)
{
    g_pair_count.fetch_add(1, std::memory_order_relaxed);
    return final_exponentiation(miller_loop(p, q));
}

std::uint64_t pairing_count()
{
    return g_pair_count.load(std::memory_order_relaxed);
}

void reset_pairing_count()
{
    g_pair_count.store(0, std::memory_order_relaxed);
}

unsigned last_miller_iterations()
{
    return g_last_miller_iterations.load(std::memory_order_relaxed);
}

}  // namespace kacfpga
