// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#include "oracle.hpp"

#include <kacfpga/curve.hpp>

#include <doctest.h>

using namespace kacfpga;
using oracle::AffinePt;
using oracle::Big;

namespace {

template <typename Point>
Point random_point(Rng& rng)
{
    return Scalar::random(rng) * Point::generator();
}

}  // namespace

TEST_SUITE_BEGIN("curve");

TEST_CASE("generators are valid subgroup members")
{
    CHECK(G1Point::generator().is_on_curve());
    CHECK(G2Point::generator().is_on_curve());
    CHECK(G1Point::generator().in_subgroup());
    CHECK(G2Point::generator().in_subgroup());
}

TEST_CASE_TEMPLATE("group identities", Point, G1Point, G2Point)
{
    Rng rng(201);
    const Point q = random_point<Point>(rng);
    CHECK(Point() + q == q);
    CHECK(q + Point() == q);
    CHECK(q + q.negate() == Point());
    CHECK(Point().dbl() == Point());

    const Point& g = Point::generator();
    CHECK(g + g == g.dbl());
    CHECK(g.dbl() + g == Scalar(3) * g);
}

TEST_CASE_TEMPLATE("jacobian arithmetic matches the affine-formula oracle", Point, G1Point,
    G2Point)
{
    Rng rng(202);
    const int trials = std::is_same_v<Point, G1Point> ? 100 : 25;
    for (int i = 0; i < trials; ++i)
    {
        const Point p = random_point<Point>(rng);
        const Point q = random_point<Point>(rng);
        const auto pa = AffinePt<Point>::from(p);
        const auto qa = AffinePt<Point>::from(q);
        CHECK(oracle::affine_add(pa, qa).equals(p + q));
        CHECK(oracle::affine_add(pa, pa).equals(p.dbl()));
    }
}

TEST_CASE_TEMPLATE("scalar multiplication", Point, G1Point, G2Point)
{
    Rng rng(203);
    const Point& g = Point::generator();
    const Point p = random_point<Point>(rng);

    CHECK((Scalar(0) * p).is_infinity());
    CHECK(Scalar(1) * p == p);
    CHECK(g.mul_raw(kGroupOrder).is_infinity());

    // distributivity over random a, b
    for (int i = 0; i < 10; ++i)
    {
        const Scalar a = Scalar::random(rng);
        const Scalar b = Scalar::random(rng);
        CHECK((a + b) * p == a * p + b * p);
        CHECK((a * b) * p == a * (b * p));
    }

    // small multiples against repeated addition
    Point acc;
    for (std::uint64_t k = 1; k <= 8; ++k)
    {
        acc = acc + p;
        CHECK(Scalar(k) * p == acc);
    }
}

TEST_CASE_TEMPLATE("group axioms on random points", Point, G1Point, G2Point)
{
    Rng rng(204);
    for (int i = 0; i < 20; ++i)
    {
        const Point p = random_point<Point>(rng);
        const Point q = random_point<Point>(rng);
        const Point r = random_point<Point>(rng);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
    }
}

TEST_CASE("point encodings")
{
    // infinity is the single byte 0x00
    const std::array<std::uint8_t, 1> inf_enc{0x00};
    CHECK(G1Point::from_bytes(inf_enc).is_infinity());
    CHECK(G1Point().to_bytes() == std::vector<std::uint8_t>{0x00});

    const auto g1_bytes = G1Point::generator().to_bytes();
    CHECK(g1_bytes.size() == 65);
    CHECK(g1_bytes[0] == 0x04);
    CHECK(G1Point::from_bytes(g1_bytes) == G1Point::generator());

    const auto g2_bytes = G2Point::generator().to_bytes();
    CHECK(g2_bytes.size() == 129);
    CHECK(G2Point::from_bytes(g2_bytes) == G2Point::generator());
}

TEST_CASE("deserialized points re-serialize to identical bytes")
{
    Rng rng(205);
    for (int i = 0; i < 50; ++i)
    {
        const auto p = random_point<G1Point>(rng);
        CHECK(G1Point::from_bytes(p.to_bytes()).to_bytes() == p.to_bytes());
    }
    for (int i = 0; i < 10; ++i)
    {
        const auto p = random_point<G2Point>(rng);
        CHECK(G2Point::from_bytes(p.to_bytes()).to_bytes() == p.to_bytes());
    }
}

TEST_CASE("corrupted encodings are rejected")
{
    auto bytes = G1Point::generator().to_bytes();

    SUBCASE("flipped y bit lands off the curve")
    {
        bytes[64] ^= 0x01;
        CHECK(oracle::errc_of([&] { G1Point::from_bytes(bytes); }) == Errc::not_on_curve);
    }
    SUBCASE("bad tag byte")
    {
        bytes[0] = 0x05;
        CHECK(oracle::errc_of([&] { G1Point::from_bytes(bytes); }) == Errc::bad_encoding);
    }
    SUBCASE("truncated buffer")
    {
        bytes.pop_back();
        CHECK(oracle::errc_of([&] { G1Point::from_bytes(bytes); }) == Errc::bad_encoding);
    }
    SUBCASE("non-canonical coordinate")
    {
        const auto pb = kFieldPrime.to_bytes_be();
        std::copy(pb.begin(), pb.end(), bytes.begin() + 1);
        CHECK(oracle::errc_of([&] { G1Point::from_bytes(bytes); }) == Errc::bad_encoding);
    }
}

TEST_CASE("G2 subgroup membership is enforced on deserialization")
{
    // A point on the twist curve but outside the order-q subgroup
    // (annihilated by q*(2p - q), not by q).
    const char* x_hex =
        "0dbd9d7381e74ef5e8e25d940ed904759531985d5d9dc9f81818e811892f902b"
        "23445bb31738f7d93d9c172411e20b8f6b0d549b6f03675a1600a35a099950d8";
    const char* y_hex =
        "089640eb115c71746298ca6700be9c43b81165b9020638372942fd8b929a1fbf"
        "2b1b84bfc21e1beb24c243d78e7708c13fe099648e4d401260947b0f23311ae8";
    const auto unhex = [](const char* s) {
        std::vector<std::uint8_t> out;
        for (const char* p = s; p[0] != '\0'; p += 2)
        {
            const auto nib = [](char c) {
                return static_cast<std::uint8_t>(c <= '9' ? c - '0' : c - 'a' + 10);
            };
            out.push_back(static_cast<std::uint8_t>(nib(p[0]) << 4 | nib(p[1])));
        }
        return out;
    };

    std::vector<std::uint8_t> enc{0x04};
    const auto xb = unhex(x_hex);
    const auto yb = unhex(y_hex);
    enc.insert(enc.end(), xb.begin(), xb.end());
    enc.insert(enc.end(), yb.begin(), yb.end());
    REQUIRE(enc.size() == 129);

    CHECK(oracle::errc_of([&] { G2Point::from_bytes(enc); }) == Errc::wrong_subgroup);

    // sanity: the fixture really is on the twist curve
    const Fp2 x = Fp2::from_bytes(std::span(xb));
    const Fp2 y = Fp2::from_bytes(std::span(yb));
    CHECK(y.square() == x.square() * x + CurveParams<G2Tag>::b());
}

TEST_SUITE_END();
