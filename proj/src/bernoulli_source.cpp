#include "bernmc/bernoulli_source.hpp"

#include <cctype>
#include <cmath>
#include <istream>

namespace bernmc {

synthetic_source::synthetic_source(double p, std::uint64_t seed, std::uint64_t stream)
    : rng_(seed, stream), p_(p), seed_(seed) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0)
        throw std::invalid_argument("synthetic_source: p must lie in [0,1]");
}

std::uint64_t synthetic_source::draw_batch(std::uint64_t count) {
    if (count < 1) throw std::invalid_argument("draw_batch: count must be >= 1");
    const double p = p_;
    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < count; ++i)
        successes += rng_.next_unit() < p ? 1u : 0u;
    draws_ += count;
    return successes;
}

std::uint64_t external_stream_source::draw_batch(std::uint64_t count) {
    if (count < 1) throw std::invalid_argument("draw_batch: count must be >= 1");
    auto* buf = in_->rdbuf();
    std::uint64_t got = 0;
    std::uint64_t successes = 0;
    while (got < count) {
        int c = buf->sbumpc();
        if (c == std::char_traits<char>::eof()) {
            throw stream_error(stream_error::kind::exhausted, offset_, got, successes,
                               "external stream exhausted after " + std::to_string(got) +
                                   " of " + std::to_string(count) + " draws (byte " +
                                   std::to_string(offset_) + ")");
        }
        ++offset_;
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        // A record is a single '0' or '1' delimited by whitespace or EOF.
        const std::uint64_t token_start = offset_ - 1;
        const int next = buf->sgetc();
        const bool delimited =
            next == std::char_traits<char>::eof() || std::isspace(static_cast<unsigned char>(next));
        if ((c != '0' && c != '1') || !delimited) {
            throw stream_error(stream_error::kind::bad_token, token_start, got, successes,
                               "external stream: invalid token at byte " +
                                   std::to_string(token_start));
        }
        successes += c == '1' ? 1u : 0u;
        ++got;
        ++draws_;
    }
    return successes;
}

}  // namespace bernmc
