// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kacfpga {

enum class Errc {
    // arithmetic
    zero_inverse,
    zero_input,
    // encodings and points
    bad_encoding,
    not_on_curve,
    wrong_subgroup,
    infinity_input,
    // kac
    bad_parameter,
    bad_id,
    bad_length,
    empty_subset,
    id_out_of_range,
    id_not_in_subset,
    hole_index,
    malformed_ciphertext,
    // provisioning and keystore
    store_exists,
    store_missing,
    msk_missing,
    too_many_partitions,
    unknown_partition,
    foreign_partition,
    tag_mismatch,
    bad_magic,
    version_mismatch,
    corrupt_point,
    io_error,
};

constexpr std::string_view errc_name(Errc c) noexcept
{
    switch (c)
    {
    case Errc::zero_inverse: return "zero_inverse";
    case Errc::zero_input: return "zero_input";
    case Errc::bad_encoding: return "bad_encoding";
    case Errc::not_on_curve: return "not_on_curve";
    case Errc::wrong_subgroup: return "wrong_subgroup";
    case Errc::infinity_input: return "infinity_input";
    case Errc::bad_parameter: return "bad_parameter";
    case Errc::bad_id: return "bad_id";
    case Errc::bad_length: return "bad_length";
    case Errc::empty_subset: return "empty_subset";
    case Errc::id_out_of_range: return "id_out_of_range";
    case Errc::id_not_in_subset: return "id_not_in_subset";
    case Errc::hole_index: return "hole_index";
    case Errc::malformed_ciphertext: return "malformed_ciphertext";
    case Errc::store_exists: return "store_exists";
    case Errc::store_missing: return "store_missing";
    case Errc::msk_missing: return "msk_missing";
    case Errc::too_many_partitions: return "too_many_partitions";
    case Errc::unknown_partition: return "unknown_partition";
    case Errc::foreign_partition: return "foreign_partition";
    case Errc::tag_mismatch: return "tag_mismatch";
    case Errc::bad_magic: return "bad_magic";
    case Errc::version_mismatch: return "version_mismatch";
    case Errc::corrupt_point: return "corrupt_point";
    case Errc::io_error: return "io_error";
    }
    return "unknown";
}

/// Library error. `code()` identifies the failure; the message adds context.
class Error : public std::runtime_error {
 public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {}

    Errc code() const noexcept { return code_; }

 private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what)
{
    throw Error(code, what);
}

/// True when the error is a storage/file problem rather than a cryptographic one.
constexpr bool is_io_errc(Errc c) noexcept
{
    switch (c)
    {
    case Errc::store_exists:
    case Errc::store_missing:
    case Errc::msk_missing:
    case Errc::bad_magic:
    case Errc::version_mismatch:
    case Errc::corrupt_point:
    case Errc::io_error: return true;
    default: return false;
    }
}

}  // namespace kacfpga
