// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#include "oracle.hpp"

#include <kacfpga/bench.hpp>

#include <doctest.h>

#include <sstream>

using namespace kacfpga;
using namespace kacfpga::bench;

TEST_SUITE_BEGIN("bench");

TEST_CASE("storage report matches the exact scaling model")
{
    const auto report = bench_storage(100, 10);

    bool saw_1 = false, saw_100 = false;
    std::uint64_t kac_bytes = 0;
    for (const auto& row : report.rows)
    {
        CHECK(row.byok_secure_bytes == 16ull * row.tenants);
        if (kac_bytes == 0)
            kac_bytes = row.kac_secure_bytes;
        CHECK(row.kac_secure_bytes == kac_bytes);  // zero variance
        if (row.tenants == 1)
        {
            saw_1 = true;
            CHECK(row.byok_secure_bytes == 16);
        }
        if (row.tenants == 100)
        {
            saw_100 = true;
            CHECK(row.byok_secure_bytes == 1600);
        }
    }
    CHECK(saw_1);
    CHECK(saw_100);
    CHECK(kac_bytes == 65);
}

TEST_CASE("csv schema is stable and numeric")
{
    const auto report = bench_storage(20, 5);
    std::ostringstream out;
    report.write_csv(out);

    std::istringstream in(out.str());
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == BenchReport::csv_header());

    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line))
    {
        ++rows;
        std::istringstream cells(line);
        std::string cell;
        std::size_t cols = 0;
        while (std::getline(cells, cell, ','))
        {
            ++cols;
            CHECK(!cell.empty());
            std::size_t pos = 0;
            (void)std::stod(cell, &pos);  // throws if non-numeric
            CHECK(pos == cell.size());
        }
        CHECK(cols == 14);
    }
    CHECK(rows == report.rows.size());
}

TEST_CASE("latency bench validates its inputs")
{
    CHECK(oracle::errc_of([] { bench_latency(0); }) == Errc::bad_parameter);
    CHECK(oracle::errc_of([] { bench_storage(0, 1); }) == Errc::bad_parameter);
}

TEST_CASE("latency rows carry fixed pairing counts and flag single samples")
{
    const auto report = bench_latency(1, {2});
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].encrypt.samples == 1);  // single-sample rows are visible as samples=1
    CHECK(report.rows[0].decrypt.samples == 1);
    CHECK(report.rows[0].pairings_per_encrypt == 1);
    CHECK(report.rows[0].pairings_per_decrypt == 2);
    CHECK(report.rows[0].encrypt.median_ms > 0);
}

TEST_CASE("decrypt latency is independent of the deployment size")
{
    // Decrypt always computes exactly two pairings, so medians across
    // n in {2, 8, 32} stay within 25% of each other.
    const auto report = bench_latency(5);
    REQUIRE(report.rows.size() == 3);
    for (const auto& row : report.rows)
    {
        CHECK(row.pairings_per_encrypt == 1);
        CHECK(row.pairings_per_decrypt == 2);
    }
    CHECK(max_median_ratio(report) < 1.25);
}

TEST_SUITE_END();
