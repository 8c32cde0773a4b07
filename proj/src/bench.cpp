// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#include <kacfpga/bench.hpp>
#include <kacfpga/kac.hpp>

#include <algorithm>
#include <chrono>
#include <set>

namespace kacfpga::bench {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

LatencyStats stats_of(std::vector<double> samples)
{
    LatencyStats s;
    s.samples = samples.size();
    if (samples.empty())
        return s;
    std::sort(samples.begin(), samples.end());
    s.min_ms = samples.front();
    s.max_ms = samples.back();
    const auto mid = samples.size() / 2;
    s.median_ms = samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
    double sum = 0;
    for (const auto v : samples)
        sum += v;
    s.mean_ms = sum / static_cast<double>(samples.size());
    return s;
}

std::uint64_t kac_secure_bytes()
{
    // One uncompressed G1 point: the whole tamper-proof budget of a device.
    return G1Point::encoded_size();
}

std::vector<std::uint32_t> sweep_points(std::uint32_t max_tenants, std::uint32_t step)
{
    std::set<std::uint32_t> pts{1, max_tenants};
    for (std::uint32_t t = step; t <= max_tenants; t += step)
        pts.insert(t);
    for (const std::uint32_t t : {2u, 8u, 32u})
        if (t <= max_tenants)
            pts.insert(t);
    return {pts.begin(), pts.end()};
}

/// Measure KAC encrypt/decrypt on a deployment of size n (subset = all of
/// [1, n]); the work per call is independent of n by construction.
void measure_row(BenchRow& row, std::uint32_t trials, Rng& rng)
{
    const auto n = row.tenants;
    const auto kp = kac::setup<BnGroup>(n, rng);
    std::set<std::uint32_t> subset;
    for (std::uint32_t i = 1; i <= n; ++i)
        subset.insert(i);
    const auto bundle = kac::aggregate_key<BnGroup>(kp.msk, kp.mpk, subset);

    std::vector<double> enc_ms, dec_ms;
    enc_ms.reserve(trials);
    dec_ms.reserve(trials);
    std::array<std::uint8_t, 16> msg{};
    for (std::uint32_t t = 0; t < trials; ++t)
    {
        rng.fill(msg);
        const std::uint32_t id = 1 + rng.uniform_u32_below(n);

        const auto pairs_before_enc = pairing_count();
        auto start = Clock::now();
        const auto ct = kac::encrypt<BnGroup>(kp.mpk, id, msg, rng);
        enc_ms.push_back(ms_since(start));
        row.pairings_per_encrypt = pairing_count() - pairs_before_enc;

        const auto pairs_before_dec = pairing_count();
        start = Clock::now();
        const auto out = kac::decrypt<BnGroup>(bundle, ct);
        dec_ms.push_back(ms_since(start));
        row.pairings_per_decrypt = pairing_count() - pairs_before_dec;

        if (!std::equal(msg.begin(), msg.end(), out.begin(), out.end()))
            raise(Errc::bad_parameter, "bench roundtrip failed");
    }
    row.encrypt = stats_of(std::move(enc_ms));
    row.decrypt = stats_of(std::move(dec_ms));
}

}  // namespace

std::string BenchReport::csv_header()
{
    return "tenants,byok_secure_bytes,kac_secure_bytes,samples,"
           "encrypt_ms_min,encrypt_ms_median,encrypt_ms_mean,encrypt_ms_max,"
           "decrypt_ms_min,decrypt_ms_median,decrypt_ms_mean,decrypt_ms_max,"
           "pairings_per_encrypt,pairings_per_decrypt";
}

void BenchReport::write_csv(std::ostream& out) const
{
    out << csv_header() << '\n';
    const auto prev = out.precision(4);
    for (const auto& r : rows)
    {
        out << r.tenants << ',' << r.byok_secure_bytes << ',' << r.kac_secure_bytes << ','
            << r.encrypt.samples << ',' << r.encrypt.min_ms << ',' << r.encrypt.median_ms << ','
            << r.encrypt.mean_ms << ',' << r.encrypt.max_ms << ',' << r.decrypt.min_ms << ','
            << r.decrypt.median_ms << ',' << r.decrypt.mean_ms << ',' << r.decrypt.max_ms << ','
            << r.pairings_per_encrypt << ',' << r.pairings_per_decrypt << '\n';
    }
    out.precision(prev);
}

BenchReport bench_storage(std::uint32_t max_tenants, std::uint32_t step)
{
    if (max_tenants < 1 || step < 1)
        raise(Errc::bad_parameter, "bench needs max_tenants >= 1 and step >= 1");
    BenchReport report;
    for (const auto t : sweep_points(max_tenants, step))
    {
        BenchRow row;
        row.tenants = t;
        row.byok_secure_bytes = 16ull * t;
        row.kac_secure_bytes = kac_secure_bytes();
        report.rows.push_back(row);
    }
    return report;
}

BenchReport bench_latency(std::uint32_t trials, const std::vector<std::uint32_t>& sizes)
{
    if (trials < 1)
        raise(Errc::bad_parameter, "bench needs at least one trial");
    Rng rng(0xbe9c);
    BenchReport report;
    for (const auto n : sizes)
    {
        BenchRow row;
        row.tenants = n;
        row.byok_secure_bytes = 16ull * n;
        row.kac_secure_bytes = kac_secure_bytes();
        measure_row(row, trials, rng);
        report.rows.push_back(row);
    }
    return report;
}

BenchReport bench_full(std::uint32_t max_tenants, std::uint32_t step, std::uint32_t trials)
{
    if (trials < 1)
        raise(Errc::bad_parameter, "bench needs at least one trial");
    auto report = bench_storage(max_tenants, step);
    Rng rng(0xbe9c);
    for (auto& row : report.rows)
        measure_row(row, trials, rng);
    return report;
}

double max_median_ratio(const BenchReport& report)
{
    double lo = 0, hi = 0;
    for (const auto& r : report.rows)
    {
        if (r.decrypt.samples == 0)
            continue;
        if (lo == 0 || r.decrypt.median_ms < lo)
            lo = r.decrypt.median_ms;
        if (r.decrypt.median_ms > hi)
            hi = r.decrypt.median_ms;
    }
    return lo == 0 ? 0 : hi / lo;
}

}  // namespace kacfpga::bench
