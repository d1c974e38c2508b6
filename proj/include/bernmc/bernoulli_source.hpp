#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bernmc/rng.hpp"

namespace bernmc {

// A seeded stream of IID {0,1} draws. Single-owner: a source is not safe
// for concurrent drawing. Parallel callers construct separate sources on
// distinct stream ids instead.
class bernoulli_source {
public:
    virtual ~bernoulli_source() = default;

    // Draws `count` values and returns how many were 1. count must be >= 1.
    virtual std::uint64_t draw_batch(std::uint64_t count) = 0;

    virtual std::uint64_t draws_emitted() const = 0;

    // Seed the source was constructed from; 0 for external streams.
    virtual std::uint64_t seed() const = 0;
};

// Ber(p) draws from PCG32: one uniform on the 2^-32 grid per draw, success
// iff u < p. The draw sequence is a pure function of (seed, stream, p), so
// any partition of a batch yields the same totals.
class synthetic_source final : public bernoulli_source {
public:
    synthetic_source(double p, std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t draw_batch(std::uint64_t count) override;
    std::uint64_t draws_emitted() const override { return draws_; }
    std::uint64_t seed() const override { return seed_; }
    double p() const { return p_; }

private:
    pcg32 rng_;
    double p_;
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
};

class stream_error : public std::runtime_error {
public:
    enum class kind { bad_token, exhausted };

    stream_error(kind k, std::uint64_t byte_offset, std::uint64_t partial_draws,
                 std::uint64_t partial_successes, const std::string& message)
        : std::runtime_error(message),
          kind_(k),
          byte_offset_(byte_offset),
          partial_draws_(partial_draws),
          partial_successes_(partial_successes) {}

    kind error_kind() const { return kind_; }
    std::uint64_t byte_offset() const { return byte_offset_; }
    // Draws and successes delivered before the failure.
    std::uint64_t partial_draws() const { return partial_draws_; }
    std::uint64_t partial_successes() const { return partial_successes_; }

private:
    kind kind_;
    std::uint64_t byte_offset_;
    std::uint64_t partial_draws_;
    std::uint64_t partial_successes_;
};

// Reads whitespace-separated '0'/'1' records from a byte stream, so real
// system outputs can be piped in. Any other token raises
// stream_error(bad_token) with the byte offset of the offending token;
// running out of records mid-batch raises stream_error(exhausted) carrying
// the partial counts.
class external_stream_source final : public bernoulli_source {
public:
    explicit external_stream_source(std::istream& in) : in_(&in) {}

    std::uint64_t draw_batch(std::uint64_t count) override;
    std::uint64_t draws_emitted() const override { return draws_; }
    std::uint64_t seed() const override { return 0; }

private:
    std::istream* in_;
    std::uint64_t offset_ = 0;  // bytes consumed so far
    std::uint64_t draws_ = 0;
};

}  // namespace bernmc
