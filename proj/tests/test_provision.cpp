// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#include "oracle.hpp"

#include <kacfpga/provision.hpp>

#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>
#include <thread>

using namespace kacfpga;
using namespace kacfpga::provision;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() /
               ("kacfpga-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::vector<std::uint8_t> random_bitstream(Rng& rng, std::size_t size)
{
    std::vector<std::uint8_t> b(size);
    rng.fill(b);
    return b;
}

}  // namespace

TEST_SUITE_BEGIN("provision");

TEST_CASE("vendor init writes a well-formed store")
{
    TempDir dir;
    Rng rng(401);
    const std::uint32_t n = 4;
    const auto vendor = VendorState::init(n, rng, dir.path / "store");

    CHECK(fs::exists(VendorState::mpk_path(vendor.store())));
    CHECK(fs::exists(VendorState::msk_path(vendor.store())));
    CHECK(fs::exists(VendorState::registry_path(vendor.store())));

    // mpk payload carries 2*(2n) + 2 point encodings after the n header
    const auto payload = unwrap_file('M', read_file(VendorState::mpk_path(vendor.store())));
    ByteReader r(payload);
    CHECK(r.u32() == n);
    std::size_t points = 0;
    while (!r.done())
    {
        const auto first = r.peek();
        const auto size = first == 0x00 ? 1 : (points < 2 * n + 1 ? 65 : 129);
        r.take(size);
        ++points;
    }
    CHECK(points == 2 * (2 * n) + 2);

    // the published mpk round-trips
    const auto ctx = open_public(vendor.store());
    CHECK(ctx.mpk.n() == n);
    CHECK(kac::mpk_to_bytes<Group>(ctx.mpk) == payload);

    SUBCASE("re-init on the same path is refused")
    {
        CHECK(oracle::errc_of([&] { VendorState::init(n, rng, vendor.store()); }) ==
            Errc::store_exists);
    }

    SUBCASE("msk file is vendor-only")
    {
        const auto perms = fs::status(VendorState::msk_path(vendor.store())).permissions();
        CHECK((perms & (fs::perms::group_all | fs::perms::others_all)) == fs::perms::none);
    }
}

TEST_CASE("provisioning embeds the aggregate key material")
{
    TempDir dir;
    Rng rng(402);
    auto vendor = VendorState::init(8, rng, dir.path / "store");

    SUBCASE("k = 1: the b map holds a single identity entry")
    {
        const auto fpga = vendor.provision_fpga(1, rng);
        CHECK(fpga.partitions().size() == 1);
        CHECK(fpga.public_b().size() == 1);
        CHECK(fpga.public_b().begin()->second == Group::g1_identity());  // empty b sum
        CHECK(!(fpga.public_a() == Group::g1_identity()));
        CHECK(fpga.secure_store_bytes() == 65);
    }

    SUBCASE("k = n: secure store still holds exactly one point")
    {
        const auto fpga = vendor.provision_fpga(8, rng);
        CHECK(fpga.partitions().size() == 8);
        CHECK(fpga.secure_store_bytes() == 65);
    }

    SUBCASE("k = 0 and oversized k are rejected")
    {
        CHECK(oracle::errc_of([&] { vendor.provision_fpga(0, rng); }) == Errc::bad_parameter);
        CHECK(oracle::errc_of([&] { vendor.provision_fpga(9, rng); }) ==
            Errc::too_many_partitions);
    }

    SUBCASE("capacity exhaustion is rejected")
    {
        (void)vendor.provision_fpga(5, rng);
        CHECK(oracle::errc_of([&] { vendor.provision_fpga(5, rng); }) ==
            Errc::too_many_partitions);
    }
}

TEST_CASE("partition ids are unique across the whole deployment")
{
    TempDir dir;
    Rng rng(403);
    auto vendor = VendorState::init(800, rng, dir.path / "store");

    std::set<PartitionId> seen;
    std::set<std::uint32_t> indices;
    for (int i = 0; i < 100; ++i)
    {
        const auto fpga = vendor.provision_fpga(8, rng);
        for (const auto& pid : fpga.partitions())
        {
            CHECK(seen.insert(pid).second);
            CHECK(indices.insert(fpga.index_of(pid)).second);
        }
    }
    CHECK(seen.size() == 800);
}

TEST_CASE("tenant encryption and on-chip loading")
{
    TempDir dir;
    Rng rng(404);
    auto vendor = VendorState::init(8, rng, dir.path / "store");
    auto fpga = vendor.provision_fpga(4, rng);
    const auto ctx = open_public(vendor.store());
    const auto pid = fpga.partitions()[1];

    SUBCASE("bitstreams of size 0, 1, 4096 round-trip")
    {
        for (const std::size_t size : {std::size_t{0}, std::size_t{1}, std::size_t{4096}})
        {
            const auto bits = random_bitstream(rng, size);
            const auto eb = tenant_encrypt(ctx.mpk, ctx.registry, pid, bits, rng);
            CHECK(eb.c1.size() == kNonceSize + size + kTagSize);
            CHECK(fpga.load_bitstream(eb) == bits);
        }
    }

    SUBCASE("randomized encryption: two calls differ everywhere")
    {
        const auto bits = random_bitstream(rng, 64);
        const auto eb1 = tenant_encrypt(ctx.mpk, ctx.registry, pid, bits, rng);
        const auto eb2 = tenant_encrypt(ctx.mpk, ctx.registry, pid, bits, rng);
        CHECK(eb1.c1 != eb2.c1);
        CHECK(kac::ciphertext_to_bytes<Group>(eb1.c2) != kac::ciphertext_to_bytes<Group>(eb2.c2));
    }

    SUBCASE("unknown partition is rejected")
    {
        PartitionId bogus{};
        bogus[0] = 0xff;
        CHECK(oracle::errc_of([&] {
            tenant_encrypt(ctx.mpk, ctx.registry, bogus, random_bitstream(rng, 8), rng);
        }) == Errc::unknown_partition);
    }

    SUBCASE("payload files round-trip")
    {
        const auto bits = random_bitstream(rng, 256);
        const auto eb = tenant_encrypt(ctx.mpk, ctx.registry, pid, bits, rng);
        const auto bytes = eb.to_bytes();
        const auto back = EncryptedBitstream::from_bytes(bytes);
        CHECK(back.partition == eb.partition);
        CHECK(back.c1 == eb.c1);
        CHECK(back.to_bytes() == bytes);
        CHECK(fpga.load_bitstream(back) == bits);
    }
}

TEST_CASE("tampering and foreign partitions are caught")
{
    TempDir dir;
    Rng rng(405);
    auto vendor = VendorState::init(8, rng, dir.path / "store");
    auto fpga_a = vendor.provision_fpga(2, rng);
    auto fpga_b = vendor.provision_fpga(2, rng);
    const auto ctx = open_public(vendor.store());

    const auto bits = random_bitstream(rng, 128);
    auto eb = tenant_encrypt(ctx.mpk, ctx.registry, fpga_a.partitions()[0], bits, rng);

    SUBCASE("flipping one ciphertext bit fails the tag")
    {
        eb.c1[kNonceSize + 5] ^= 0x01;
        CHECK(oracle::errc_of([&] { fpga_a.load_bitstream(eb); }) == Errc::tag_mismatch);
    }

    SUBCASE("payload for another device is refused, and forcing it yields garbage")
    {
        CHECK(oracle::errc_of([&] { fpga_b.load_bitstream(eb); }) == Errc::foreign_partition);
        CHECK(oracle::errc_of([&] { fpga_b.load_bitstream_forced(eb); }) == Errc::tag_mismatch);
    }

    SUBCASE("ciphertext identity must match the partition")
    {
        auto other = tenant_encrypt(ctx.mpk, ctx.registry, fpga_a.partitions()[1], bits, rng);
        other.partition = fpga_a.partitions()[0];
        CHECK(oracle::errc_of([&] { fpga_a.load_bitstream(other); }) ==
            Errc::malformed_ciphertext);
    }
}

TEST_CASE("session cache invokes KAC once per session")
{
    TempDir dir;
    Rng rng(406);
    auto vendor = VendorState::init(4, rng, dir.path / "store");
    auto fpga = vendor.provision_fpga(2, rng);
    const auto ctx = open_public(vendor.store());
    const auto pid = fpga.partitions()[0];

    const auto session = open_session("alice", pid, rng);
    const auto eb1 = tenant_encrypt(ctx.mpk, ctx.registry, session, random_bitstream(rng, 32), rng);
    const auto eb2 = tenant_encrypt(ctx.mpk, ctx.registry, session, random_bitstream(rng, 32), rng);

    fpga.reset_kac_decrypt_count();
    (void)fpga.load_bitstream(eb1, "alice");
    (void)fpga.load_bitstream(eb2, "alice");
    CHECK(fpga.kac_decrypt_count() == 1);

    SUBCASE("closing the session evicts the cached key")
    {
        fpga.close_session("alice", pid);
        (void)fpga.load_bitstream(eb1, "alice");
        CHECK(fpga.kac_decrypt_count() == 2);
    }

    SUBCASE("a different tenant session decrypts again")
    {
        const auto other = open_session("bob", pid, rng);
        const auto eb3 = tenant_encrypt(ctx.mpk, ctx.registry, other, random_bitstream(rng, 32), rng);
        (void)fpga.load_bitstream(eb3, "bob");
        CHECK(fpga.kac_decrypt_count() == 2);
    }
}

TEST_CASE("concurrent loads on distinct partitions")
{
    TempDir dir;
    Rng rng(407);
    auto vendor = VendorState::init(4, rng, dir.path / "store");
    auto fpga = vendor.provision_fpga(2, rng);
    const auto ctx = open_public(vendor.store());

    const auto bits0 = random_bitstream(rng, 2048);
    const auto bits1 = random_bitstream(rng, 2048);
    const auto eb0 = tenant_encrypt(ctx.mpk, ctx.registry, fpga.partitions()[0], bits0, rng);
    const auto eb1 = tenant_encrypt(ctx.mpk, ctx.registry, fpga.partitions()[1], bits1, rng);

    std::vector<std::uint8_t> out0, out1;
    std::thread t0([&] { out0 = fpga.load_bitstream(eb0, "t0"); });
    std::thread t1([&] { out1 = fpga.load_bitstream(eb1, "t1"); });
    t0.join();
    t1.join();
    CHECK(out0 == bits0);
    CHECK(out1 == bits1);
    CHECK(fpga.kac_decrypt_count() == 2);
}

TEST_CASE("secure store size is constant across partition counts")
{
    TempDir dir;
    Rng rng(408);
    auto vendor = VendorState::init(32, rng, dir.path / "store");
    for (const std::uint32_t k : {1u, 4u, 8u, 16u})
    {
        const auto fpga = vendor.provision_fpga(k, rng);
        CHECK(fpga.secure_store_bytes() == 65);
    }
}

TEST_CASE("fpga state files round-trip and validate")
{
    TempDir dir;
    Rng rng(409);
    auto vendor = VendorState::init(4, rng, dir.path / "store");
    auto fpga = vendor.provision_fpga(3, rng);
    const auto file = VendorState::fpga_path(vendor.store(), fpga.id());
    REQUIRE(fs::exists(file));

    auto loaded = VirtualFpga::load(file);
    CHECK(loaded.id() == fpga.id());
    CHECK(loaded.partitions() == fpga.partitions());
    CHECK(loaded.secure_store_bytes() == fpga.secure_store_bytes());

    // the reloaded device still decrypts
    const auto ctx = open_public(vendor.store());
    const auto bits = random_bitstream(rng, 64);
    const auto eb = tenant_encrypt(ctx.mpk, ctx.registry, fpga.partitions()[0], bits, rng);
    CHECK(loaded.load_bitstream(eb) == bits);

    SUBCASE("truncated header is bad magic")
    {
        auto raw = read_file(file);
        raw.resize(3);
        write_file(file, raw);
        CHECK(oracle::errc_of([&] { VirtualFpga::load(file); }) == Errc::bad_magic);
    }
    SUBCASE("truncated body is a corrupt point")
    {
        auto raw = read_file(file);
        raw.resize(raw.size() - 7);
        write_file(file, raw);
        CHECK(oracle::errc_of([&] { VirtualFpga::load(file); }) == Errc::corrupt_point);
    }
    SUBCASE("future version is rejected")
    {
        auto raw = read_file(file);
        raw[5] = 0x63;  // version u16 at offset 4..5
        write_file(file, raw);
        CHECK(oracle::errc_of([&] { VirtualFpga::load(file); }) == Errc::version_mismatch);
    }
    SUBCASE("damaged point encoding is a corrupt point")
    {
        auto raw = read_file(file);
        raw[7 + 8 + 4 + 10] ^= 0xff;  // inside a_S
        write_file(file, raw);
        CHECK(oracle::errc_of([&] { VirtualFpga::load(file); }) == Errc::corrupt_point);
    }
}

TEST_CASE("role separation: tenants never need the msk")
{
    TempDir dir;
    Rng rng(410);
    auto vendor = VendorState::init(4, rng, dir.path / "store");
    auto fpga = vendor.provision_fpga(2, rng);

    // wipe the vendor secret
    fs::remove(VendorState::msk_path(vendor.store()));

    auto reopened = VendorState::open(vendor.store());
    CHECK(!reopened.has_msk());
    CHECK(oracle::errc_of([&] { reopened.provision_fpga(1, rng); }) == Errc::msk_missing);

    // tenant and device flows still work from public files alone
    const auto ctx = open_public(vendor.store());
    const auto bits = random_bitstream(rng, 64);
    const auto eb = tenant_encrypt(ctx.mpk, ctx.registry, fpga.partitions()[1], bits, rng);
    CHECK(fpga.load_bitstream(eb) == bits);
}

TEST_CASE("registry serialization round-trips")
{
    TempDir dir;
    Rng rng(411);
    auto vendor = VendorState::init(6, rng, dir.path / "store");
    (void)vendor.provision_fpga(3, rng);
    const auto reopened = VendorState::open(vendor.store());
    CHECK(reopened.registry().size() == 3);
    CHECK(reopened.registry().capacity() == 6);
    CHECK(reopened.registry().allocated() == 3);
    for (const auto& [pid, entry] : reopened.registry().entries())
        CHECK(vendor.registry().lookup(pid).index == entry.index);
}

TEST_SUITE_END();
