// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference implementations, deliberately independent of the
// library's arithmetic paths: big integers via Boost.Multiprecision, curve
// group law via plain affine chord-and-tangent formulas, Fp12 multiplication
// via schoolbook polynomials in the w-basis.
#pragma once

#include <kacfpga/curve.hpp>
#include <kacfpga/fields.hpp>
#include <kacfpga/rng.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <vector>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using namespace kacfpga;

/// Runs `fn` and reports the Errc it threw, if any.
template <typename F>
std::optional<Errc> errc_of(F&& fn)
{
    try
    {
        fn();
    }
    catch (const Error& e)
    {
        return e.code();
    }
    return std::nullopt;
}

inline Big to_big(const u256& v)
{
    Big r = 0;
    for (int i = 3; i >= 0; --i)
    {
        r <<= 64;
        r += v.w[static_cast<std::size_t>(i)];
    }
    return r;
}

inline u256 to_u256(const Big& v)
{
    u256 r;
    Big t = v;
    for (std::size_t i = 0; i < 4; ++i)
    {
        r.w[i] = static_cast<std::uint64_t>(t & 0xffffffffffffffffULL);
        t >>= 64;
    }
    return r;
}

inline Big big_p()
{
    return to_big(kFieldPrime);
}

inline Big big_q()
{
    return to_big(kGroupOrder);
}

/// Little-endian 64-bit limbs of a non-negative big integer.
inline std::vector<std::uint64_t> limbs_of(Big v)
{
    std::vector<std::uint64_t> limbs;
    while (v > 0)
    {
        limbs.push_back(static_cast<std::uint64_t>(v & 0xffffffffffffffffULL));
        v >>= 64;
    }
    if (limbs.empty())
        limbs.push_back(0);
    return limbs;
}

inline Fp random_fp(Rng& rng)
{
    return Fp::from_canonical(rng.uniform_below(kFieldPrime));
}

inline Fp2 random_fp2(Rng& rng)
{
    return {random_fp(rng), random_fp(rng)};
}

inline Fp6 random_fp6(Rng& rng)
{
    return {random_fp2(rng), random_fp2(rng), random_fp2(rng)};
}

inline Fp12 random_fp12(Rng& rng)
{
    return {random_fp6(rng), random_fp6(rng)};
}

// ---- affine group-law oracle -------------------------------------------------

template <typename Point>
struct AffinePt {
    typename Point::Field x{};
    typename Point::Field y{};
    bool inf = true;

    static AffinePt from(const Point& p)
    {
        AffinePt a;
        if (!p.is_infinity())
        {
            a.x = p.x();
            a.y = p.y();
            a.inf = false;
        }
        return a;
    }

    bool equals(const Point& p) const
    {
        if (inf || p.is_infinity())
            return inf == p.is_infinity();
        return x == p.x() && y == p.y();
    }
};

/// Chord-and-tangent addition straight from the affine formulas.
template <typename Point>
AffinePt<Point> affine_add(const AffinePt<Point>& p, const AffinePt<Point>& q)
{
    using F = typename Point::Field;
    if (p.inf)
        return q;
    if (q.inf)
        return p;
    F lambda;
    if (p.x == q.x)
    {
        if (!(p.y == q.y) || p.y.is_zero())
            return {};  // P + (-P) = infinity
        lambda = (p.x.square() + p.x.square() + p.x.square()) * (p.y + p.y).inverse();
    }
    else
    {
        lambda = (q.y - p.y) * (q.x - p.x).inverse();
    }
    const F x3 = lambda.square() - p.x - q.x;
    const F y3 = lambda * (p.x - x3) - p.y;
    return {x3, y3, false};
}

template <typename Point>
AffinePt<Point> affine_mul(Big k, const AffinePt<Point>& p)
{
    AffinePt<Point> acc;
    AffinePt<Point> base = p;
    while (k > 0)
    {
        if ((k & 1) != 0)
            acc = affine_add<Point>(acc, base);
        base = affine_add<Point>(base, base);
        k >>= 1;
    }
    return acc;
}

// ---- naive Fp12 multiplication in the w-basis ---------------------------------

/// The 2-3-2 tower element as coefficients of w^0..w^5 over Fp2 (w^2 = v,
/// w^6 = xi). Tower slot (c_i, v^j) holds the coefficient of w^(2j + i).
inline std::array<Fp2, 6> to_w_basis(const Fp12& x)
{
    return {x.c0.c0, x.c1.c0, x.c0.c1, x.c1.c1, x.c0.c2, x.c1.c2};
}

inline Fp12 from_w_basis(const std::array<Fp2, 6>& c)
{
    Fp12 r;
    r.c0.c0 = c[0];
    r.c1.c0 = c[1];
    r.c0.c1 = c[2];
    r.c1.c1 = c[3];
    r.c0.c2 = c[4];
    r.c1.c2 = c[5];
    return r;
}

/// Schoolbook degree-6 polynomial product reduced by w^6 = xi.
inline Fp12 naive_fp12_mul(const Fp12& a, const Fp12& b)
{
    const auto ac = to_w_basis(a);
    const auto bc = to_w_basis(b);
    std::array<Fp2, 11> prod{};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            prod[i + j] = prod[i + j] + ac[i] * bc[j];
    std::array<Fp2, 6> out{};
    for (std::size_t i = 0; i < 6; ++i)
        out[i] = prod[i];
    for (std::size_t i = 6; i < 11; ++i)
        out[i - 6] = out[i - 6] + fp6_xi() * prod[i];
    return from_w_basis(out);
}

}  // namespace oracle
