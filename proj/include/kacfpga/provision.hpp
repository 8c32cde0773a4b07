// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <kacfpga/kac.hpp>
#include <kacfpga/symmetric.hpp>

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kacfpga::provision {

using Group = BnGroup;
using PartitionId = std::array<std::uint8_t, 16>;
using FpgaId = std::uint64_t;

inline constexpr std::uint16_t kFileVersion = 1;

std::string to_hex(std::span<const std::uint8_t> bytes);
std::string fpga_id_hex(FpgaId id);
PartitionId partition_id_from_hex(std::string_view hex);
FpgaId fpga_id_from_hex(std::string_view hex);

/// Public lookup table standing in for the cloud controller: partition id ->
/// (hosting FPGA, KAC index). Indices are allocated sequentially and never
/// reused, so no two FPGAs ever share one; the deployment holds at most
/// `capacity` partitions in total.
class Registry {
 public:
    Registry() = default;
    explicit Registry(std::uint32_t capacity) : capacity_(capacity) {}

    struct Entry {
        FpgaId fpga = 0;
        std::uint32_t index = 0;
    };

    std::uint32_t capacity() const { return capacity_; }
    std::uint32_t allocated() const { return next_index_ - 1; }
    std::size_t size() const { return entries_.size(); }

    bool contains(const PartitionId& id) const { return entries_.contains(id); }
    const Entry& lookup(const PartitionId& id) const;
    const std::map<PartitionId, Entry>& entries() const { return entries_; }

    /// Draw `count` fresh random partition ids and bind them to `fpga`.
    std::vector<PartitionId> allocate(std::uint32_t count, FpgaId fpga, Rng& rng);

    std::vector<std::uint8_t> to_bytes() const;
    static Registry from_bytes(std::span<const std::uint8_t> in);

 private:
    std::uint32_t capacity_ = 0;
    std::uint32_t next_index_ = 1;
    std::map<PartitionId, Entry> entries_;
};

/// Hybrid payload: C1 = sealed bitstream under the tenant's session key,
/// C2 = that 16-byte key, KAC-encrypted to the partition's index.
struct EncryptedBitstream {
    PartitionId partition{};
    std::vector<std::uint8_t> c1;
    kac::KacCiphertext<Group> c2;

    std::vector<std::uint8_t> to_bytes() const;
    static EncryptedBitstream from_bytes(std::span<const std::uint8_t> in);
};

/// A tenant's session: the partition she rented and the AES-128 key she chose
/// herself (BYOK). The vendor and provider never see `key`.
struct TenantSession {
    std::string tenant_id;
    PartitionId partition{};
    SessionKey key{};
};

TenantSession open_session(std::string tenant_id, const PartitionId& partition, Rng& rng);

/// Encrypt under an existing session (reuses its key).
EncryptedBitstream tenant_encrypt(const kac::MasterPublicKey<Group>& mpk, const Registry& registry,
    const TenantSession& session, std::span<const std::uint8_t> bitstream, Rng& rng);

/// One-shot: fresh session key per call.
EncryptedBitstream tenant_encrypt(const kac::MasterPublicKey<Group>& mpk, const Registry& registry,
    const PartitionId& partition, std::span<const std::uint8_t> bitstream, Rng& rng);

/// Simulated multi-tenant device.
///
/// The aggregate key sk_S sits in the secure store: private to the on-chip
/// decrypt path, surfaced outside only as a byte count. a_S and the b map are
/// the public store. One KAC decryption engine per device, one AES engine per
/// partition; the session cache makes KAC run once per (tenant, partition)
/// session no matter how many bitstreams are loaded.
class VirtualFpga {
 public:
    FpgaId id() const { return id_; }
    const std::vector<PartitionId>& partitions() const { return partitions_; }
    bool hosts(const PartitionId& p) const { return index_map_.contains(p); }
    std::uint32_t index_of(const PartitionId& p) const;

    /// Two-stage on-chip decryption: KAC-recover the session key (cached per
    /// session), then verify and strip the symmetric layer.
    std::vector<std::uint8_t> load_bitstream(const EncryptedBitstream& eb,
        std::string_view tenant_id = "tenant");

    /// Test hook: skip the partition-membership refusal and force the KAC
    /// equation with whatever b happens to be available. Demonstrates that
    /// foreign ciphertexts come out as garbage (tag_mismatch).
    std::vector<std::uint8_t> load_bitstream_forced(const EncryptedBitstream& eb,
        std::string_view tenant_id = "tenant");

    void close_session(std::string_view tenant_id, const PartitionId& partition);

    /// KAC decryption invocations since construction (atomic).
    std::uint64_t kac_decrypt_count() const { return runtime_->kac_count.load(); }
    void reset_kac_decrypt_count() { runtime_->kac_count.store(0); }

    /// Public store contents (a_S and the per-partition b map; not secret).
    const Group::G1& public_a() const { return a_; }
    const std::map<std::uint32_t, Group::G1>& public_b() const { return b_; }

    /// Bytes of tamper-proof storage this device needs: the encoding of the
    /// single aggregate key, independent of the partition count.
    std::size_t secure_store_bytes() const;

    void save(const std::filesystem::path& file) const;
    static VirtualFpga load(const std::filesystem::path& file);

 private:
    friend class VendorState;

    struct Runtime {
        std::mutex cache_mutex;
        std::map<std::pair<std::string, PartitionId>, SessionKey> sessions;
        std::map<PartitionId, std::mutex> partition_locks;
        std::atomic<std::uint64_t> kac_count{0};
    };

    VirtualFpga() : runtime_(std::make_unique<Runtime>()) {}

    SessionKey recover_key(const EncryptedBitstream& eb, bool forced);
    kac::AggregateKeyBundle<Group> bundle_view() const;

    FpgaId id_ = 0;
    std::vector<PartitionId> partitions_;
    std::map<PartitionId, std::uint32_t> index_map_;
    std::set<std::uint32_t> subset_;

    // public store
    Group::G1 a_{};
    std::map<std::uint32_t, Group::G1> b_{};

    // secure store (simulated tamper-proof segment)
    Group::G1 sk_{};

    std::unique_ptr<Runtime> runtime_;
};

/// Vendor-side state: the KAC master keys plus the deployment registry,
/// persisted under a store directory.
///
/// Files (all integers big-endian, header = "KACF" || version u16 || kind u8):
///   mpk.bin       kind 'M', world-readable master public key
///   msk.bin       kind 'S', vendor-only master secret
///   registry.bin  kind 'R', public partition registry
///   fpga-<id>.bin kind 'F', one per provisioned device
class VendorState {
 public:
    /// Create a fresh store; fails with store_exists if one is already there.
    static VendorState init(std::uint32_t n, Rng& rng, const std::filesystem::path& store);

    /// Open an existing store. The msk is optional: without it the tenant and
    /// provider surfaces still work, vendor operations throw msk_missing.
    static VendorState open(const std::filesystem::path& store);

    /// Manufacture one device with `partition_count` fresh partitions:
    /// random ids, aggregate key embedded, files written.
    VirtualFpga provision_fpga(std::uint32_t partition_count, Rng& rng);

    const kac::MasterPublicKey<Group>& mpk() const { return mpk_; }
    const Registry& registry() const { return registry_; }
    bool has_msk() const { return msk_.has_value(); }
    const std::filesystem::path& store() const { return store_; }

    static std::filesystem::path mpk_path(const std::filesystem::path& store);
    static std::filesystem::path msk_path(const std::filesystem::path& store);
    static std::filesystem::path registry_path(const std::filesystem::path& store);
    static std::filesystem::path fpga_path(const std::filesystem::path& store, FpgaId id);

 private:
    VendorState() = default;

    std::filesystem::path store_;
    kac::MasterPublicKey<Group> mpk_;
    std::optional<Group::Scalar> msk_;
    Registry registry_;
};

/// What a tenant (or the provider) can see: public key and registry only.
struct PublicContext {
    kac::MasterPublicKey<Group> mpk;
    Registry registry;
};

PublicContext open_public(const std::filesystem::path& store);

// Raw keystore file helpers, exposed for tests of the on-disk format.
std::vector<std::uint8_t> wrap_file(std::uint8_t kind, std::span<const std::uint8_t> payload);
std::vector<std::uint8_t> unwrap_file(std::uint8_t kind, std::span<const std::uint8_t> file);
void write_file(const std::filesystem::path& p, std::span<const std::uint8_t> data,
    bool vendor_only = false);
std::vector<std::uint8_t> read_file(const std::filesystem::path& p);

}  // namespace kacfpga::provision
