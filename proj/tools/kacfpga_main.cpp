// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Subcommands: vendor-setup, provision, encrypt, load, bench, selftest.
// Exit codes: 0 ok, 1 usage, 2 cryptographic failure, 3 storage/I-O failure.
#include <kacfpga/bench.hpp>
#include <kacfpga/provision.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace kacfpga;

std::vector<std::uint8_t> slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(Errc::io_error, "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, std::span<const std::uint8_t> data)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        raise(Errc::io_error, "cannot write " + path);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out)
        raise(Errc::io_error, "short write to " + path);
}

int run_selftest()
{
    using M = MockGroup;
    const auto fail = [](const char* what) {
        std::cerr << "selftest: FAILED: " << what << '\n';
        return 2;
    };

    // Worked example over the mock group: alpha=2, gamma=5, n=3.
    const auto kp = kac::setup_with<M>(3, M::scalar_from_u64(2), M::scalar_from_u64(5));
    const std::uint32_t expected_powers[][2] = {{0, 1}, {1, 2}, {2, 4}, {3, 8}, {5, 32}, {6, 64}};
    for (const auto& [j, e] : expected_powers)
        if (kp.mpk.power_g1(j).e != e)
            return fail("power table");
    if (kp.mpk.gamma_g1().e != 5)
        return fail("gamma element");

    const std::vector<std::uint8_t> msg{0xde, 0xad, 0xbe, 0xef};
    const auto ct = kac::encrypt_with_r<M>(kp.mpk, 2, msg, M::scalar_from_u64(7));
    if (ct.c0.e != 7 || ct.c1.e != 63)
        return fail("ciphertext components");

    const auto bundle = kac::aggregate_key<M>(kp.msk, kp.mpk, {1, 2});
    if (bundle.a.e != 12 || bundle.sk.e != 60 || bundle.b.at(2).e != 32)
        return fail("aggregate key");

    const auto quotient =
        M::gt_op(M::pair(bundle.a, ct.c1), M::gt_inv(M::pair(bundle.sk + bundle.b.at(2), ct.c0)));
    if (quotient.e != 11)
        return fail("decryption quotient");
    if (kac::decrypt<M>(bundle, ct) != msg)
        return fail("roundtrip");

    // A few randomized roundtrips and one exclusion check.
    Rng rng(1);
    for (int trial = 0; trial < 25; ++trial)
    {
        const auto pair_n = kac::setup<M>(8, rng);
        std::set<std::uint32_t> subset;
        while (subset.size() < 3)
            subset.insert(1 + rng.uniform_u32_below(8));
        const auto agg = kac::aggregate_key<M>(pair_n.msk, pair_n.mpk, subset);
        const auto id = *subset.begin();
        std::vector<std::uint8_t> m(16);
        rng.fill(m);
        const auto c = kac::encrypt<M>(pair_n.mpk, id, m, rng);
        if (kac::decrypt<M>(agg, c) != m)
            return fail("random roundtrip");
    }

    std::cout << "selftest: ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Key-aggregate multi-tenant FPGA provisioning simulator"};
    app.require_subcommand(1);

    std::string store = "kacstore";
    std::optional<std::uint64_t> seed;
    app.add_option("--store", store, "Keystore directory")->capture_default_str();
    app.add_option("--seed", seed, "Deterministic RNG seed (default: OS entropy)");

    auto* setup_cmd = app.add_subcommand("vendor-setup", "Initialize a deployment keystore");
    std::uint32_t n = 16;
    setup_cmd->add_option("--n", n, "Maximum number of partitions in the deployment")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* provision_cmd = app.add_subcommand("provision", "Manufacture one virtual FPGA");
    std::uint32_t partitions = 4;
    provision_cmd->add_option("--partitions", partitions, "Partition count for this device")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* encrypt_cmd = app.add_subcommand("encrypt", "Tenant-side hybrid bitstream encryption");
    std::string partition_hex, in_file, out_file, tenant = "tenant";
    encrypt_cmd->add_option("--partition", partition_hex, "Target partition id (32 hex digits)")
        ->required();
    encrypt_cmd->add_option("--in", in_file, "Plain bitstream file")->required();
    encrypt_cmd->add_option("--out", out_file, "Encrypted payload file")->required();
    encrypt_cmd->add_option("--tenant", tenant, "Tenant name")->capture_default_str();

    auto* load_cmd = app.add_subcommand("load", "On-chip two-stage decryption");
    std::string fpga_hex, load_in, load_out, load_tenant = "tenant";
    load_cmd->add_option("--fpga", fpga_hex, "Device id (16 hex digits)")->required();
    load_cmd->add_option("--in", load_in, "Encrypted payload file")->required();
    load_cmd->add_option("--out", load_out, "Recovered bitstream file")->required();
    load_cmd->add_option("--tenant", load_tenant, "Tenant name")->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "Storage and latency scaling report (CSV)");
    std::uint32_t max_tenants = 100, trials = 3, step = 10;
    std::string bench_out;
    bench_cmd->add_option("--max-tenants", max_tenants, "Largest tenant count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--trials", trials, "Latency samples per row")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--step", step, "Tenant-count stride")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--out", bench_out, "Write the CSV here instead of stdout");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the mock-group vector suite");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        // usage problems exit 1 (help/version keep exit 0)
        return app.exit(e) == 0 ? 0 : 1;
    }

    try
    {
        Rng rng = seed ? Rng(*seed) : Rng::from_entropy();

        if (*setup_cmd)
        {
            provision::VendorState::init(n, rng, store);
            std::cout << "store " << store << " n " << n << '\n';
        }
        else if (*provision_cmd)
        {
            auto vendor = provision::VendorState::open(store);
            const auto fpga = vendor.provision_fpga(partitions, rng);
            std::cout << "fpga " << provision::fpga_id_hex(fpga.id()) << '\n';
            for (const auto& pid : fpga.partitions())
                std::cout << "partition " << provision::to_hex(pid) << " index "
                          << fpga.index_of(pid) << '\n';
        }
        else if (*encrypt_cmd)
        {
            const auto ctx = provision::open_public(store);
            const auto pid = provision::partition_id_from_hex(partition_hex);
            const auto bitstream = slurp(in_file);
            const auto session = provision::open_session(tenant, pid, rng);
            const auto payload = provision::tenant_encrypt(ctx.mpk, ctx.registry, session,
                bitstream, rng);
            spit(out_file, payload.to_bytes());
            std::cerr << "encrypted " << bitstream.size() << " bytes for partition "
                      << partition_hex << '\n';
        }
        else if (*load_cmd)
        {
            const auto id = provision::fpga_id_from_hex(fpga_hex);
            auto fpga = provision::VirtualFpga::load(provision::VendorState::fpga_path(store, id));
            const auto payload = provision::EncryptedBitstream::from_bytes(slurp(load_in));
            const auto bitstream = fpga.load_bitstream(payload, load_tenant);
            spit(load_out, bitstream);
            std::cerr << "loaded " << bitstream.size() << " bytes into partition "
                      << provision::to_hex(payload.partition) << '\n';
        }
        else if (*bench_cmd)
        {
            const auto report = bench::bench_full(max_tenants, step, trials);
            if (trials == 1)
                std::cerr << "note: single-sample statistics (trials=1)\n";
            if (bench_out.empty())
                report.write_csv(std::cout);
            else
            {
                std::ofstream out(bench_out, std::ios::trunc);
                if (!out)
                    raise(Errc::io_error, "cannot write " + bench_out);
                report.write_csv(out);
            }
            std::cerr << "decrypt median spread across tenant counts: "
                      << bench::max_median_ratio(report) << "x\n";
        }
        else if (*selftest_cmd)
        {
            return run_selftest();
        }
    }
    catch (const Error& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return is_io_errc(e.code()) ? 3 : 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
