#pragma once

#include <cstdint>

namespace bernmc {

// PCG32 (XSH RR 64/32, "setseq" variant): 64-bit LCG state advanced by a
// per-stream odd increment, 32-bit permuted output. The stream id selects
// one of 2^63 distinct sequences for the same seed, which is what keys the
// per-replication substreams in the experiments module.
class pcg32 {
public:
    explicit pcg32(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(0), inc_((stream << 1u) | 1u) {
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // Uniform on [0,1) with resolution 2^-32. One output per Bernoulli draw.
    double next_unit() { return next_u32() * 0x1p-32; }

    // Uniform on [0,1) with full 53-bit resolution (consumes two outputs,
    // high word first).
    double next_double53() {
        const std::uint64_t hi = next_u32();
        const std::uint64_t lo = next_u32();
        return (((hi << 32) | lo) >> 11) * 0x1p-53;
    }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

}  // namespace bernmc
