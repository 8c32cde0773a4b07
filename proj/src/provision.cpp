// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#include <kacfpga/provision.hpp>

#include <algorithm>
#include <fstream>

namespace kacfpga::provision {

namespace fs = std::filesystem;

namespace {

constexpr std::uint8_t kMagic[4] = {'K', 'A', 'C', 'F'};
constexpr std::uint8_t kKindMpk = 'M';
constexpr std::uint8_t kKindMsk = 'S';
constexpr std::uint8_t kKindFpga = 'F';
constexpr std::uint8_t kKindRegistry = 'R';
constexpr std::uint8_t kKindPayload = 'E';

int hex_val(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    raise(Errc::bad_encoding, "invalid hex digit");
}

Group::G1 read_g1(ByteReader& r)
{
    try
    {
        return Group::g1_from_bytes(r.take(Group::g1_wire_size(r.peek())));
    }
    catch (const Error& e)
    {
        if (is_io_errc(e.code()))
            throw;
        raise(Errc::corrupt_point, e.what());
    }
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (const auto b : bytes)
    {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::string fpga_id_hex(FpgaId id)
{
    std::array<std::uint8_t, 8> b;
    for (std::size_t i = 0; i < 8; ++i)
        b[i] = static_cast<std::uint8_t>(id >> (56 - 8 * i));
    return to_hex(b);
}

PartitionId partition_id_from_hex(std::string_view hex)
{
    if (hex.size() != 32)
        raise(Errc::bad_encoding, "partition id must be 32 hex digits");
    PartitionId id;
    for (std::size_t i = 0; i < id.size(); ++i)
        id[i] = static_cast<std::uint8_t>(hex_val(hex[2 * i]) << 4 | hex_val(hex[2 * i + 1]));
    return id;
}

FpgaId fpga_id_from_hex(std::string_view hex)
{
    if (hex.size() != 16)
        raise(Errc::bad_encoding, "fpga id must be 16 hex digits");
    FpgaId id = 0;
    for (const char c : hex)
        id = id << 4 | static_cast<FpgaId>(hex_val(c));
    return id;
}

// ---- registry ---------------------------------------------------------------

const Registry::Entry& Registry::lookup(const PartitionId& id) const
{
    const auto it = entries_.find(id);
    if (it == entries_.end())
        raise(Errc::unknown_partition, "partition id not in registry");
    return it->second;
}

std::vector<PartitionId> Registry::allocate(std::uint32_t count, FpgaId fpga, Rng& rng)
{
    if (count == 0)
        raise(Errc::bad_parameter, "partition count must be at least 1");
    if (count > capacity_ || next_index_ + count - 1 > capacity_)
        raise(Errc::too_many_partitions, "deployment capacity exceeded");

    std::vector<PartitionId> ids;
    ids.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i)
    {
        PartitionId id;
        do
            rng.fill(id);
        while (entries_.contains(id));
        entries_.emplace(id, Entry{fpga, next_index_++});
        ids.push_back(id);
    }
    return ids;
}

std::vector<std::uint8_t> Registry::to_bytes() const
{
    ByteWriter w;
    w.u32(capacity_);
    w.u32(next_index_);
    w.u32(static_cast<std::uint32_t>(entries_.size()));
    for (const auto& [id, e] : entries_)
    {
        w.bytes(id);
        w.u64(e.fpga);
        w.u32(e.index);
    }
    return w.take();
}

Registry Registry::from_bytes(std::span<const std::uint8_t> in)
{
    ByteReader r(in, Errc::corrupt_point);
    Registry reg;
    reg.capacity_ = r.u32();
    reg.next_index_ = r.u32();
    const auto count = r.u32();
    for (std::uint32_t i = 0; i < count; ++i)
    {
        PartitionId id;
        const auto raw = r.take(id.size());
        std::copy(raw.begin(), raw.end(), id.begin());
        Entry e;
        e.fpga = r.u64();
        e.index = r.u32();
        reg.entries_.emplace(id, e);
    }
    if (!r.done())
        raise(Errc::corrupt_point, "trailing bytes in registry");
    return reg;
}

// ---- keystore files ---------------------------------------------------------

std::vector<std::uint8_t> wrap_file(std::uint8_t kind, std::span<const std::uint8_t> payload)
{
    ByteWriter w;
    w.bytes(kMagic);
    w.u16(kFileVersion);
    w.u8(kind);
    w.bytes(payload);
    return w.take();
}

std::vector<std::uint8_t> unwrap_file(std::uint8_t kind, std::span<const std::uint8_t> file)
{
    if (file.size() < 7 || !std::equal(std::begin(kMagic), std::end(kMagic), file.begin()))
        raise(Errc::bad_magic, "not a kacfpga keystore file");
    ByteReader r(file.subspan(4), Errc::bad_magic);
    const auto version = r.u16();
    if (version != kFileVersion)
        raise(Errc::version_mismatch, "unsupported keystore version");
    if (r.u8() != kind)
        raise(Errc::bad_magic, "unexpected keystore file kind");
    const auto rest = r.take(r.remaining());
    return {rest.begin(), rest.end()};
}

void write_file(const fs::path& p, std::span<const std::uint8_t> data, bool vendor_only)
{
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out)
        raise(Errc::io_error, "cannot open " + p.string() + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out)
        raise(Errc::io_error, "short write to " + p.string());
    out.close();
    fs::permissions(p,
        vendor_only ? (fs::perms::owner_read | fs::perms::owner_write)
                    : (fs::perms::owner_read | fs::perms::owner_write | fs::perms::group_read |
                          fs::perms::others_read),
        fs::perm_options::replace);
}

std::vector<std::uint8_t> read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        raise(Errc::store_missing, "cannot open " + p.string());
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
        std::istreambuf_iterator<char>());
    return data;
}

// ---- encrypted payload --------------------------------------------------------

std::vector<std::uint8_t> EncryptedBitstream::to_bytes() const
{
    ByteWriter body;
    body.bytes(partition);
    body.u64(c1.size());
    body.bytes(c1);
    body.bytes(kac::ciphertext_to_bytes<Group>(c2));
    return wrap_file(kKindPayload, body.view());
}

EncryptedBitstream EncryptedBitstream::from_bytes(std::span<const std::uint8_t> in)
{
    const auto body = unwrap_file(kKindPayload, in);
    ByteReader r(body, Errc::malformed_ciphertext);
    EncryptedBitstream eb;
    const auto pid = r.take(eb.partition.size());
    std::copy(pid.begin(), pid.end(), eb.partition.begin());
    const auto c1_len = r.u64();
    const auto c1 = r.take(c1_len);
    eb.c1.assign(c1.begin(), c1.end());
    eb.c2 = kac::ciphertext_from_bytes<Group>(r.take(r.remaining()));
    return eb;
}

// ---- tenant side --------------------------------------------------------------

TenantSession open_session(std::string tenant_id, const PartitionId& partition, Rng& rng)
{
    TenantSession s;
    s.tenant_id = std::move(tenant_id);
    s.partition = partition;
    rng.fill(s.key);  // BYOK: the tenant's own generator picks the key
    return s;
}

EncryptedBitstream tenant_encrypt(const kac::MasterPublicKey<Group>& mpk, const Registry& registry,
    const TenantSession& session, std::span<const std::uint8_t> bitstream, Rng& rng)
{
    const auto& entry = registry.lookup(session.partition);
    EncryptedBitstream eb;
    eb.partition = session.partition;
    eb.c1 = seal(session.key, bitstream, rng);
    eb.c2 = kac::encrypt<Group>(mpk, entry.index, session.key, rng);
    return eb;
}

EncryptedBitstream tenant_encrypt(const kac::MasterPublicKey<Group>& mpk, const Registry& registry,
    const PartitionId& partition, std::span<const std::uint8_t> bitstream, Rng& rng)
{
    const auto session = open_session("tenant", partition, rng);
    return tenant_encrypt(mpk, registry, session, bitstream, rng);
}

// ---- virtual FPGA --------------------------------------------------------------

std::uint32_t VirtualFpga::index_of(const PartitionId& p) const
{
    const auto it = index_map_.find(p);
    if (it == index_map_.end())
        raise(Errc::foreign_partition, "partition is not hosted by this FPGA");
    return it->second;
}

kac::AggregateKeyBundle<Group> VirtualFpga::bundle_view() const
{
    kac::AggregateKeyBundle<Group> bundle;
    bundle.subset = subset_;
    bundle.a = a_;
    bundle.b = b_;
    bundle.sk = sk_;  // the one read of the secure store, on the decrypt path
    return bundle;
}

SessionKey VirtualFpga::recover_key(const EncryptedBitstream& eb, bool forced)
{
    runtime_->kac_count.fetch_add(1);
    const auto bundle = bundle_view();
    const auto recovered = forced ? kac::decrypt_unchecked<Group>(bundle, eb.c2)
                                  : kac::decrypt<Group>(bundle, eb.c2);
    SessionKey key{};
    if (recovered.size() != key.size())
        raise(Errc::malformed_ciphertext, "session key payload must be 16 bytes");
    std::copy(recovered.begin(), recovered.end(), key.begin());
    return key;
}

std::vector<std::uint8_t> VirtualFpga::load_bitstream(const EncryptedBitstream& eb,
    std::string_view tenant_id)
{
    const auto index = index_of(eb.partition);  // foreign_partition if not ours
    if (eb.c2.id != index)
        raise(Errc::malformed_ciphertext, "ciphertext identity does not match the partition");

    // Loads are serialized per partition; distinct partitions run concurrently.
    std::mutex* partition_mutex = nullptr;
    {
        const std::scoped_lock lk(runtime_->cache_mutex);
        partition_mutex = &runtime_->partition_locks[eb.partition];
    }
    const std::scoped_lock partition_lk(*partition_mutex);

    const auto cache_key = std::make_pair(std::string(tenant_id), eb.partition);

    // Cached session key first. A stale key (the tenant opened a new session
    // without closing the old one) fails the tag and falls through to a
    // fresh KAC decryption.
    {
        std::optional<SessionKey> cached;
        {
            const std::scoped_lock lk(runtime_->cache_mutex);
            const auto it = runtime_->sessions.find(cache_key);
            if (it != runtime_->sessions.end())
                cached = it->second;
        }
        if (cached)
        {
            try
            {
                return open(*cached, eb.c1);
            }
            catch (const Error& e)
            {
                if (e.code() != Errc::tag_mismatch)
                    throw;
            }
        }
    }

    const auto key = recover_key(eb, /*forced=*/false);
    auto bitstream = open(key, eb.c1);  // tag_mismatch on any tampering

    {
        const std::scoped_lock lk(runtime_->cache_mutex);
        runtime_->sessions.insert_or_assign(cache_key, key);
    }
    return bitstream;
}

std::vector<std::uint8_t> VirtualFpga::load_bitstream_forced(const EncryptedBitstream& eb,
    std::string_view)
{
    const auto key = recover_key(eb, /*forced=*/true);
    return open(key, eb.c1);
}

void VirtualFpga::close_session(std::string_view tenant_id, const PartitionId& partition)
{
    const std::scoped_lock lk(runtime_->cache_mutex);
    runtime_->sessions.erase({std::string(tenant_id), partition});
}

std::size_t VirtualFpga::secure_store_bytes() const
{
    return Group::g1_bytes(sk_).size();
}

void VirtualFpga::save(const fs::path& file) const
{
    ByteWriter body;
    body.u64(id_);
    body.u32(static_cast<std::uint32_t>(partitions_.size()));
    body.bytes(Group::g1_bytes(a_));
    body.bytes(Group::g1_bytes(sk_));
    for (const auto& pid : partitions_)
    {
        body.bytes(pid);
        const auto index = index_map_.at(pid);
        body.u32(index);
        body.bytes(Group::g1_bytes(b_.at(index)));
    }
    const auto wrapped = wrap_file(kKindFpga, body.view());
    write_file(file, wrapped);
}

VirtualFpga VirtualFpga::load(const fs::path& file)
{
    const auto body = unwrap_file(kKindFpga, read_file(file));
    ByteReader r(body, Errc::corrupt_point);
    VirtualFpga f;
    f.id_ = r.u64();
    const auto count = r.u32();
    f.a_ = read_g1(r);
    f.sk_ = read_g1(r);
    for (std::uint32_t i = 0; i < count; ++i)
    {
        PartitionId pid;
        const auto raw = r.take(pid.size());
        std::copy(raw.begin(), raw.end(), pid.begin());
        const auto index = r.u32();
        f.partitions_.push_back(pid);
        f.index_map_.emplace(pid, index);
        f.subset_.insert(index);
        f.b_.emplace(index, read_g1(r));
    }
    if (!r.done())
        raise(Errc::corrupt_point, "trailing bytes in fpga file");
    return f;
}

// ---- vendor state ---------------------------------------------------------------

fs::path VendorState::mpk_path(const fs::path& store)
{
    return store / "mpk.bin";
}
fs::path VendorState::msk_path(const fs::path& store)
{
    return store / "msk.bin";
}
fs::path VendorState::registry_path(const fs::path& store)
{
    return store / "registry.bin";
}
fs::path VendorState::fpga_path(const fs::path& store, FpgaId id)
{
    return store / ("fpga-" + fpga_id_hex(id) + ".bin");
}

VendorState VendorState::init(std::uint32_t n, Rng& rng, const fs::path& store)
{
    if (fs::exists(mpk_path(store)) || fs::exists(msk_path(store)) ||
        fs::exists(registry_path(store)))
        raise(Errc::store_exists, "keystore already initialized at " + store.string());
    fs::create_directories(store);

    const auto kp = kac::setup<Group>(n, rng);

    VendorState v;
    v.store_ = store;
    v.mpk_ = kp.mpk;
    v.msk_ = kp.msk;
    v.registry_ = Registry(n);

    write_file(mpk_path(store), wrap_file(kKindMpk, kac::mpk_to_bytes<Group>(kp.mpk)));
    write_file(msk_path(store), wrap_file(kKindMsk, kp.msk.to_bytes()), /*vendor_only=*/true);
    write_file(registry_path(store), wrap_file(kKindRegistry, v.registry_.to_bytes()));
    return v;
}

VendorState VendorState::open(const fs::path& store)
{
    VendorState v;
    v.store_ = store;
    v.mpk_ = kac::mpk_from_bytes<Group>(unwrap_file(kKindMpk, read_file(mpk_path(store))));
    v.registry_ = Registry::from_bytes(unwrap_file(kKindRegistry, read_file(registry_path(store))));
    if (fs::exists(msk_path(store)))
    {
        const auto raw = unwrap_file(kKindMsk, read_file(msk_path(store)));
        v.msk_ = Group::Scalar::from_bytes(raw);
    }
    return v;
}

VirtualFpga VendorState::provision_fpga(std::uint32_t partition_count, Rng& rng)
{
    if (!msk_.has_value())
        raise(Errc::msk_missing, "vendor operations need the master secret key");
    if (partition_count == 0)
        raise(Errc::bad_parameter, "partition count must be at least 1");
    if (partition_count > mpk_.n())
        raise(Errc::too_many_partitions, "a device hosts at most n partitions");

    const FpgaId fpga_id = rng.next_u64();
    const auto ids = registry_.allocate(partition_count, fpga_id, rng);

    VirtualFpga f;
    f.id_ = fpga_id;
    f.partitions_ = ids;
    for (const auto& pid : ids)
    {
        const auto index = registry_.lookup(pid).index;
        f.index_map_.emplace(pid, index);
        f.subset_.insert(index);
    }

    const auto bundle = kac::aggregate_key<Group>(*msk_, mpk_, f.subset_);
    f.a_ = bundle.a;
    f.b_ = bundle.b;
    f.sk_ = bundle.sk;  // embedded into the tamper-proof segment

    f.save(fpga_path(store_, fpga_id));
    write_file(registry_path(store_), wrap_file(kKindRegistry, registry_.to_bytes()));
    return f;
}

PublicContext open_public(const fs::path& store)
{
    PublicContext ctx;
    ctx.mpk = kac::mpk_from_bytes<Group>(unwrap_file(kKindMpk, read_file(VendorState::mpk_path(store))));
    ctx.registry =
        Registry::from_bytes(unwrap_file(kKindRegistry, read_file(VendorState::registry_path(store))));
    return ctx;
}

}  // namespace kacfpga::provision
