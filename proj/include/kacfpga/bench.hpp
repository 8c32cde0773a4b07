// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kacfpga::bench {

struct LatencyStats {
    std::size_t samples = 0;
    double min_ms = 0;
    double median_ms = 0;
    double mean_ms = 0;
    double max_ms = 0;
};

/// One report row. Storage columns are exact by construction:
/// plain BYOK needs one AES-128 key (16 bytes) per tenant; the aggregate
/// scheme stores a single G1 point whatever the tenant count.
struct BenchRow {
    std::uint32_t tenants = 0;
    std::uint64_t byok_secure_bytes = 0;
    std::uint64_t kac_secure_bytes = 0;
    LatencyStats encrypt;
    LatencyStats decrypt;
    std::uint64_t pairings_per_encrypt = 0;
    std::uint64_t pairings_per_decrypt = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;

    static std::string csv_header();
    void write_csv(std::ostream& out) const;
};

/// Storage scaling sweep: rows at t = 1, step, 2*step, ..., max_tenants
/// (plus 2, 8 and 32 when in range, so latency rows line up). No timing;
/// samples stay 0.
BenchReport bench_storage(std::uint32_t max_tenants, std::uint32_t step = 10);

/// Wall-clock KAC encrypt/decrypt at the given deployment sizes, `trials`
/// samples each, plus pairing-operation counts per call. trials must be >= 1.
BenchReport bench_latency(std::uint32_t trials, const std::vector<std::uint32_t>& sizes = {2, 8, 32});

/// Storage sweep with latency measured on every row (CLI `bench`).
BenchReport bench_full(std::uint32_t max_tenants, std::uint32_t step, std::uint32_t trials);

/// max(median)/min(median) of decrypt latency across rows with samples.
double max_median_ratio(const BenchReport& report);

}  // namespace kacfpga::bench
