// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <kacfpga/fields.hpp>
#include <kacfpga/rng.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace kacfpga {

/// Scalar modulo the group order q, canonical value in [0, q-1].
class Scalar {
 public:
    constexpr Scalar() = default;
    constexpr explicit Scalar(std::uint64_t v) : v_(v)
    {
        // q > 2^64, so any u64 is already canonical.
    }

    static constexpr Scalar from_canonical(const u256& v)
    {
        if (v >= kGroupOrder)
            raise(Errc::bad_encoding, "scalar not canonical");
        Scalar s;
        s.v_ = v;
        return s;
    }

    static Scalar from_bytes(std::span<const std::uint8_t> in)
    {
        return from_canonical(u256::from_bytes_be(in));
    }

    static Scalar random(Rng& rng) { return from_canonical(rng.uniform_below(kGroupOrder)); }

    constexpr const u256& value() const { return v_; }
    constexpr bool is_zero() const { return v_.is_zero(); }
    std::array<std::uint8_t, 32> to_bytes() const { return v_.to_bytes_be(); }

    friend constexpr Scalar operator+(const Scalar& a, const Scalar& b)
    {
        Scalar r;
        r.v_ = kFr.add(a.v_, b.v_);
        return r;
    }
    friend constexpr Scalar operator-(const Scalar& a, const Scalar& b)
    {
        Scalar r;
        r.v_ = kFr.sub(a.v_, b.v_);
        return r;
    }
    friend constexpr Scalar operator*(const Scalar& a, const Scalar& b)
    {
        Scalar r;
        r.v_ = kFr.from_mont(kFr.mul(kFr.to_mont(a.v_), kFr.to_mont(b.v_)));
        return r;
    }
    friend constexpr bool operator==(const Scalar&, const Scalar&) = default;

 private:
    u256 v_{};
};

namespace detail {

/// Jacobian-coordinate point; (X, Y, Z) represents (X/Z^2, Y/Z^3), Z=0 is infinity.
template <typename F>
struct Jacobian {
    F x, y, z;

    static constexpr Jacobian infinity() { return {F(), F(), F()}; }
    constexpr bool is_infinity() const { return z.is_zero(); }

    // EFD dbl-2009-l, valid for curves y^2 = x^3 + b (a = 0).
    constexpr Jacobian dbl() const
    {
        if (is_infinity())
            return *this;
        const F a = x.square();
        const F b = y.square();
        const F c = b.square();
        F d = (x + b).square() - a - c;
        d = d.dbl();
        const F e = a + a.dbl();  // 3a
        const F f = e.square();
        const F x3 = f - d.dbl();
        const F c8 = c.dbl().dbl().dbl();
        const F y3 = e * (d - x3) - c8;
        const F z3 = (y * z).dbl();
        return {x3, y3, z3};
    }

    constexpr Jacobian add(const Jacobian& o) const
    {
        if (is_infinity())
            return o;
        if (o.is_infinity())
            return *this;
        const F z1z1 = z.square();
        const F z2z2 = o.z.square();
        const F u1 = x * z2z2;
        const F u2 = o.x * z1z1;
        const F s1 = y * z2z2 * o.z;
        const F s2 = o.y * z1z1 * z;
        if (u1 == u2)
        {
            if (s1 == s2)
                return dbl();
            return infinity();
        }
        const F h = u2 - u1;
        const F i = h.dbl().square();
        const F j = h * i;
        const F r = (s2 - s1).dbl();
        const F v = u1 * i;
        const F x3 = r.square() - j - v.dbl();
        const F y3 = r * (v - x3) - (s1 * j).dbl();
        const F z3 = z * o.z * h;
        return {x3, y3, z3.dbl()};
    }
};

}  // namespace detail

struct G1Tag;
struct G2Tag;

template <typename Tag>
struct CurveParams;

/// Elliptic-curve point in affine coordinates over field `F`, curve y^2 = x^3 + b.
///
/// Group arithmetic runs on Jacobian coordinates internally; the stored value
/// is always affine (plus an infinity flag) so equality and serialization are
/// canonical. Encoding: 0x04 || x || y uncompressed, a single 0x00 byte for
/// the identity. Deserialized points re-serialize to the identical bytes.
///
/// G1 and G2 are distinct types, so adding points of different groups is a
/// compile error rather than a runtime mixed-group failure.
template <typename F, typename Tag>
class EcPoint {
 public:
    using Field = F;

    /// The identity (point at infinity).
    constexpr EcPoint() = default;

    static const EcPoint& generator();

    /// From affine coordinates; rejects points off the curve.
    static EcPoint from_affine(const F& x, const F& y)
    {
        EcPoint p = from_affine_unchecked(x, y);
        if (!p.is_on_curve())
            raise(Errc::not_on_curve, "affine point not on curve");
        return p;
    }

    static constexpr EcPoint from_affine_unchecked(const F& x, const F& y)
    {
        EcPoint p;
        p.x_ = x;
        p.y_ = y;
        p.inf_ = false;
        return p;
    }

    constexpr bool is_infinity() const { return inf_; }
    constexpr const F& x() const { return x_; }
    constexpr const F& y() const { return y_; }

    bool is_on_curve() const
    {
        if (inf_)
            return true;
        return y_.square() == x_.square() * x_ + CurveParams<Tag>::b();
    }

    /// Membership in the order-q subgroup.
    bool in_subgroup() const { return mul_raw(kGroupOrder).is_infinity(); }

    friend EcPoint operator+(const EcPoint& a, const EcPoint& b)
    {
        return from_jacobian(a.to_jacobian().add(b.to_jacobian()));
    }

    EcPoint dbl() const { return from_jacobian(to_jacobian().dbl()); }

    EcPoint negate() const
    {
        if (inf_)
            return *this;
        return from_affine_unchecked(x_, -y_);
    }

    friend EcPoint operator-(const EcPoint& a, const EcPoint& b) { return a + b.negate(); }

    /// [k]P where k is an unreduced integer (double-and-add over its bits).
    EcPoint mul_raw(const u256& k) const
    {
        detail::Jacobian<F> acc = detail::Jacobian<F>::infinity();
        const detail::Jacobian<F> base = to_jacobian();
        for (unsigned i = k.bit_length(); i-- > 0;)
        {
            acc = acc.dbl();
            if (k.bit(i))
                acc = acc.add(base);
        }
        return from_jacobian(acc);
    }

    friend EcPoint operator*(const Scalar& k, const EcPoint& p) { return p.mul_raw(k.value()); }

    friend constexpr bool operator==(const EcPoint& a, const EcPoint& b)
    {
        if (a.inf_ || b.inf_)
            return a.inf_ == b.inf_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

    static constexpr std::size_t encoded_size() { return 1 + 2 * sizeof(F().to_bytes()); }

    std::vector<std::uint8_t> to_bytes() const
    {
        if (inf_)
            return {0x00};
        std::vector<std::uint8_t> out;
        out.reserve(encoded_size());
        out.push_back(0x04);
        const auto xb = x_.to_bytes();
        const auto yb = y_.to_bytes();
        out.insert(out.end(), xb.begin(), xb.end());
        out.insert(out.end(), yb.begin(), yb.end());
        return out;
    }

    /// Decode and fully validate: on-curve and in the order-q subgroup.
    static EcPoint from_bytes(std::span<const std::uint8_t> in)
    {
        if (in.size() == 1 && in[0] == 0x00)
            return EcPoint();
        if (in.size() != encoded_size() || in[0] != 0x04)
            raise(Errc::bad_encoding, "bad point encoding");
        constexpr std::size_t flen = sizeof(F().to_bytes());
        const F x = F::from_bytes(in.subspan(1, flen));
        const F y = F::from_bytes(in.subspan(1 + flen, flen));
        EcPoint p = from_affine_unchecked(x, y);
        if (!p.is_on_curve())
            raise(Errc::not_on_curve, "decoded point not on curve");
        if constexpr (CurveParams<Tag>::subgroup_check_needed)
        {
            if (!p.in_subgroup())
                raise(Errc::wrong_subgroup, "decoded point not in order-q subgroup");
        }
        return p;
    }

 private:
    constexpr detail::Jacobian<F> to_jacobian() const
    {
        if (inf_)
            return detail::Jacobian<F>::infinity();
        return {x_, y_, one_field()};
    }

    static EcPoint from_jacobian(const detail::Jacobian<F>& j)
    {
        if (j.is_infinity())
            return EcPoint();
        const F zinv = j.z.inverse();
        const F zinv2 = zinv.square();
        return from_affine_unchecked(j.x * zinv2, j.y * zinv2 * zinv);
    }

    static constexpr F one_field()
    {
        if constexpr (std::is_same_v<F, Fp>)
            return Fp::one();
        else
            return Fp2::one();
    }

    F x_{};
    F y_{};
    bool inf_ = true;
};

using G1Point = EcPoint<Fp, G1Tag>;
using G2Point = EcPoint<Fp2, G2Tag>;

template <>
struct CurveParams<G1Tag> {
    // y^2 = x^3 + 3; prime order (cofactor 1), so on-curve implies in-subgroup.
    static constexpr bool subgroup_check_needed = false;
    static const Fp& b();
};

template <>
struct CurveParams<G2Tag> {
    // Sextic twist y^2 = x^3 + 3/xi over Fp2; cofactor 2p - q.
    static constexpr bool subgroup_check_needed = true;
    static const Fp2& b();
};

}  // namespace kacfpga
