// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <kacfpga/errors.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace kacfpga {

/// Unsigned 256-bit integer as four little-endian 64-bit limbs.
struct u256 {
    std::array<std::uint64_t, 4> w{};

    constexpr u256() = default;
    constexpr explicit u256(std::uint64_t v) : w{v, 0, 0, 0} {}
    constexpr u256(std::uint64_t w0, std::uint64_t w1, std::uint64_t w2, std::uint64_t w3)
        : w{w0, w1, w2, w3}
    {}

    constexpr bool is_zero() const
    {
        return (w[0] | w[1] | w[2] | w[3]) == 0;
    }

    constexpr bool is_odd() const { return (w[0] & 1) != 0; }

    constexpr bool bit(unsigned i) const { return ((w[i / 64] >> (i % 64)) & 1) != 0; }

    constexpr unsigned bit_length() const
    {
        for (int i = 3; i >= 0; --i)
        {
            if (w[static_cast<std::size_t>(i)] != 0)
            {
                unsigned bits = 0;
                std::uint64_t v = w[static_cast<std::size_t>(i)];
                while (v != 0)
                {
                    ++bits;
                    v >>= 1;
                }
                return static_cast<unsigned>(i) * 64 + bits;
            }
        }
        return 0;
    }

    friend constexpr bool operator==(const u256&, const u256&) = default;

    friend constexpr bool operator<(const u256& a, const u256& b)
    {
        for (int i = 3; i >= 0; --i)
        {
            const auto ai = a.w[static_cast<std::size_t>(i)];
            const auto bi = b.w[static_cast<std::size_t>(i)];
            if (ai != bi)
                return ai < bi;
        }
        return false;
    }
    friend constexpr bool operator>(const u256& a, const u256& b) { return b < a; }
    friend constexpr bool operator<=(const u256& a, const u256& b) { return !(b < a); }
    friend constexpr bool operator>=(const u256& a, const u256& b) { return !(a < b); }

    /// Sum with carry-out.
    static constexpr std::pair<u256, bool> add_overflow(const u256& a, const u256& b)
    {
        u256 r;
        unsigned __int128 c = 0;
        for (std::size_t i = 0; i < 4; ++i)
        {
            c += static_cast<unsigned __int128>(a.w[i]) + b.w[i];
            r.w[i] = static_cast<std::uint64_t>(c);
            c >>= 64;
        }
        return {r, c != 0};
    }

    /// Difference with borrow-out.
    static constexpr std::pair<u256, bool> sub_borrow(const u256& a, const u256& b)
    {
        u256 r;
        std::uint64_t borrow = 0;
        for (std::size_t i = 0; i < 4; ++i)
        {
            const auto d = static_cast<unsigned __int128>(a.w[i]) - b.w[i] - borrow;
            r.w[i] = static_cast<std::uint64_t>(d);
            borrow = static_cast<std::uint64_t>(d >> 64) & 1;
        }
        return {r, borrow != 0};
    }

    std::array<std::uint8_t, 32> to_bytes_be() const
    {
        std::array<std::uint8_t, 32> out{};
        for (std::size_t i = 0; i < 4; ++i)
        {
            const auto limb = w[3 - i];
            for (std::size_t j = 0; j < 8; ++j)
                out[i * 8 + j] = static_cast<std::uint8_t>(limb >> (56 - 8 * j));
        }
        return out;
    }

    static u256 from_bytes_be(std::span<const std::uint8_t> in)
    {
        if (in.size() != 32)
            raise(Errc::bad_encoding, "u256 needs exactly 32 bytes");
        u256 r;
        for (std::size_t i = 0; i < 4; ++i)
        {
            std::uint64_t limb = 0;
            for (std::size_t j = 0; j < 8; ++j)
                limb = limb << 8 | in[i * 8 + j];
            r.w[3 - i] = limb;
        }
        return r;
    }
};

namespace detail {

consteval int hex_digit(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    throw "invalid hex digit";
}

}  // namespace detail

/// Hex literal: 0x-prefixed, at most 64 digits.
consteval u256 operator""_u256(const char* s)
{
    if (s[0] != '0' || (s[1] != 'x' && s[1] != 'X'))
        throw "u256 literal must start with 0x";
    u256 r;
    for (const char* p = s + 2; *p != '\0'; ++p)
    {
        if (*p == '\'')
            continue;
        if (r.w[3] >> 60 != 0)
            throw "u256 literal overflow";
        const int d = detail::hex_digit(*p);
        for (int i = 3; i > 0; --i)
            r.w[static_cast<std::size_t>(i)] =
                r.w[static_cast<std::size_t>(i)] << 4 | r.w[static_cast<std::size_t>(i) - 1] >> 60;
        r.w[0] = r.w[0] << 4 | static_cast<std::uint64_t>(d);
    }
    return r;
}

/// Montgomery arithmetic modulo a fixed odd 256-bit modulus.
///
/// Values passed to add/sub/mul/pow/inv are in Montgomery form unless noted;
/// the representation never leaks: to_mont/from_mont bracket all external I/O.
class ModArith {
 public:
    constexpr explicit ModArith(const u256& modulus)
        : m_(modulus), inv_(neg_inv64(modulus.w[0])), r2_(compute_r2(modulus))
    {
        one_ = mul(u256(1), r2_);
    }

    constexpr const u256& modulus() const { return m_; }
    /// R mod m, the Montgomery representation of 1.
    constexpr const u256& one() const { return one_; }

    constexpr u256 add(const u256& a, const u256& b) const
    {
        const auto [sum, carry] = u256::add_overflow(a, b);
        if (carry || sum >= m_)
            return u256::sub_borrow(sum, m_).first;
        return sum;
    }

    constexpr u256 sub(const u256& a, const u256& b) const
    {
        const auto [diff, borrow] = u256::sub_borrow(a, b);
        if (borrow)
            return u256::add_overflow(diff, m_).first;
        return diff;
    }

    constexpr u256 neg(const u256& a) const
    {
        return a.is_zero() ? a : u256::sub_borrow(m_, a).first;
    }

    /// Montgomery product (CIOS).
    constexpr u256 mul(const u256& a, const u256& b) const
    {
        std::uint64_t t[6] = {0, 0, 0, 0, 0, 0};
        for (std::size_t i = 0; i < 4; ++i)
        {
            unsigned __int128 c = 0;
            for (std::size_t j = 0; j < 4; ++j)
            {
                c = static_cast<unsigned __int128>(a.w[i]) * b.w[j] + t[j] +
                    static_cast<std::uint64_t>(c >> 64);
                t[j] = static_cast<std::uint64_t>(c);
            }
            c = static_cast<unsigned __int128>(t[4]) + static_cast<std::uint64_t>(c >> 64);
            t[4] = static_cast<std::uint64_t>(c);
            t[5] = static_cast<std::uint64_t>(c >> 64);

            const std::uint64_t u = t[0] * inv_;
            c = static_cast<unsigned __int128>(u) * m_.w[0] + t[0];
            for (std::size_t j = 1; j < 4; ++j)
            {
                c = static_cast<unsigned __int128>(u) * m_.w[j] + t[j] +
                    static_cast<std::uint64_t>(c >> 64);
                t[j - 1] = static_cast<std::uint64_t>(c);
            }
            c = static_cast<unsigned __int128>(t[4]) + static_cast<std::uint64_t>(c >> 64);
            t[3] = static_cast<std::uint64_t>(c);
            t[4] = t[5] + static_cast<std::uint64_t>(c >> 64);
        }
        u256 r{t[0], t[1], t[2], t[3]};
        if (t[4] != 0 || r >= m_)
            r = u256::sub_borrow(r, m_).first;
        return r;
    }

    constexpr u256 sqr(const u256& a) const { return mul(a, a); }

    constexpr u256 to_mont(const u256& x) const { return mul(x, r2_); }
    constexpr u256 from_mont(const u256& x) const { return mul(x, u256(1)); }

    /// base^e; base in Montgomery form, e a plain integer.
    constexpr u256 pow(const u256& base, const u256& e) const
    {
        const unsigned bits = e.bit_length();
        u256 acc = one_;
        for (unsigned i = bits; i-- > 0;)
        {
            acc = sqr(acc);
            if (e.bit(i))
                acc = mul(acc, base);
        }
        return acc;
    }

    /// base^e with e given as little-endian 64-bit limbs of any width.
    u256 pow(const u256& base, std::span<const std::uint64_t> e) const
    {
        u256 acc = one_;
        bool started = false;
        for (std::size_t li = e.size(); li-- > 0;)
        {
            for (int bi = 63; bi >= 0; --bi)
            {
                if (started)
                    acc = sqr(acc);
                if ((e[li] >> bi) & 1)
                {
                    if (started)
                        acc = mul(acc, base);
                    else
                    {
                        acc = base;
                        started = true;
                    }
                }
            }
        }
        return started ? acc : one_;
    }

    /// Modular inverse via Fermat (modulus must be prime).
    constexpr u256 inv(const u256& a) const
    {
        if (a.is_zero())
            raise(Errc::zero_inverse, "inverse of zero");
        const auto e = u256::sub_borrow(m_, u256(2)).first;
        return pow(a, e);
    }

 private:
    static constexpr std::uint64_t neg_inv64(std::uint64_t m0)
    {
        // Newton iteration for m0^-1 mod 2^64 (m0 odd), then negate.
        std::uint64_t x = 1;
        for (int i = 0; i < 6; ++i)
            x *= 2 - m0 * x;
        return ~x + 1;
    }

    static constexpr u256 compute_r2(const u256& m)
    {
        // 2^512 mod m by 512 modular doublings of 1.
        u256 r(1);
        for (int i = 0; i < 512; ++i)
        {
            const auto [sum, carry] = u256::add_overflow(r, r);
            r = (carry || sum >= m) ? u256::sub_borrow(sum, m).first : sum;
        }
        return r;
    }

    u256 m_;
    std::uint64_t inv_;
    u256 r2_;
    u256 one_{};
};

}  // namespace kacfpga
