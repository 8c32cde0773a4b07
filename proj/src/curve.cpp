// kacfpga: key-aggregate encryption and multi-tenant FPGA provisioning simulator
// Copyright 2026 The kacfpga Authors.
// SPDX-License-Identifier: Apache-2.0
#include <kacfpga/curve.hpp>

namespace kacfpga {

const Fp& CurveParams<G1Tag>::b()
{
    static const Fp b = Fp::from_u64(3);
    return b;
}

const Fp2& CurveParams<G2Tag>::b()
{
    static const Fp2 b = Fp2::from_u64(3) * fp6_xi().inverse();
    return b;
}

template <>
const G1Point& EcPoint<Fp, G1Tag>::generator()
{
    static const G1Point g = G1Point::from_affine(Fp::from_u64(1), Fp::from_u64(2));
    return g;
}

template <>
const G2Point& EcPoint<Fp2, G2Tag>::generator()
{
    static const G2Point g = G2Point::from_affine(
        Fp2{Fp::from_canonical(
                0x1800deef121f1e76426a00665e5c4479674322d4f75edadd46debd5cd992f6ed_u256),
            Fp::from_canonical(
                0x198e9393920d483a7260bfb731fb5d25f1aa493335a9e71297e485b7aef312c2_u256)},
        Fp2{Fp::from_canonical(
                0x12c85ea5db8c6deb4aab71808dcb408fe3d1e7690c43d37b4ce6cc0166fa7daa_u256),
            Fp::from_canonical(
                0x090689d0585ff075ec9e99ad690c3395bc4b313370b38ef355acdadcd122975b_u256)});
    return g;
}

}  // namespace kacfpga
