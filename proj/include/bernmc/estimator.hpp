#pragma once

#include <cstdint>

#include "bernmc/bernoulli_source.hpp"
#include "bernmc/error_spec.hpp"
#include "bernmc/sample_size.hpp"

namespace bernmc {

inline constexpr std::int64_t default_batch_size = 1 << 20;

// Memory-bounded split of `total` draws into batches of at most batch_size.
struct batch_schedule {
    std::int64_t total;
    std::int64_t batch_size;
    std::int64_t batches;  // number of batches; the last one may be short

    // Size of batch i in [0, batches).
    std::int64_t size_of(std::int64_t i) const;
};

batch_schedule make_batch_schedule(std::int64_t total, std::int64_t batch_size);

// The certificate object: p_hat together with everything needed to restate
// the guarantee it was computed under.
struct estimate_report {
    double p_hat;              // successes / n_used, and nothing else
    std::int64_t successes;
    std::int64_t n_used;
    sample_size_plan plan;
    bool budget_capped;        // true iff n_used == budget < plan.n
    // Tolerance actually certified: spec.epsilon normally, or the achievable
    // sqrt(ln(2/alpha)/(2 budget)) when the run was budget-capped.
    double epsilon_achieved;
    std::uint64_t seed;
    double wall_time_seconds;  // monotonic clock; excluded from determinism
};

// Plans n via the Hoeffding rule, streams the draws in batches, and returns
// the certificate. When the plan exceeds the budget, draws exactly `budget`
// samples, sets budget_capped, and reports the achievable tolerance instead
// of claiming the requested one.
estimate_report mean_mc_ber_g(bernoulli_source& source, const error_spec& spec,
                              std::int64_t budget = default_sample_budget,
                              std::int64_t batch_size = default_batch_size);

}  // namespace bernmc
