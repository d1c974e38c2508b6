#include "bernmc/estimator.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace bernmc {

std::int64_t batch_schedule::size_of(std::int64_t i) const {
    if (i < 0 || i >= batches) throw std::out_of_range("batch index out of range");
    return std::min(batch_size, total - i * batch_size);
}

batch_schedule make_batch_schedule(std::int64_t total, std::int64_t batch_size) {
    if (total < 1) throw std::invalid_argument("schedule total must be >= 1");
    if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
    const std::int64_t batches = (total + batch_size - 1) / batch_size;
    return batch_schedule{total, batch_size, batches};
}

estimate_report mean_mc_ber_g(bernoulli_source& source, const error_spec& spec,
                              std::int64_t budget, std::int64_t batch_size) {
    validate_error_spec(spec);
    const auto plan = n_hoeffding(spec, budget);
    const bool capped = plan.exceeds_budget;
    const auto schedule = make_batch_schedule(capped ? budget : plan.n, batch_size);

    const auto start = std::chrono::steady_clock::now();
    std::int64_t successes = 0;
    std::int64_t drawn = 0;
    for (std::int64_t i = 0; i < schedule.batches; ++i) {
        const std::int64_t b = schedule.size_of(i);
        try {
            successes += static_cast<std::int64_t>(source.draw_batch(static_cast<std::uint64_t>(b)));
        } catch (const stream_error& e) {
            // Re-raise with the run-level partial counts, not just the batch's.
            throw stream_error(e.error_kind(), e.byte_offset(),
                               static_cast<std::uint64_t>(drawn) + e.partial_draws(),
                               static_cast<std::uint64_t>(successes) + e.partial_successes(),
                               std::string(e.what()) + " [run total: " +
                                   std::to_string(drawn + static_cast<std::int64_t>(e.partial_draws())) +
                                   " of " + std::to_string(schedule.total) + " draws]");
        }
        drawn += b;
    }
    const auto stop = std::chrono::steady_clock::now();

    estimate_report report{};
    report.successes = successes;
    report.n_used = schedule.total;
    report.p_hat = static_cast<double>(successes) / static_cast<double>(schedule.total);
    report.plan = plan;
    report.budget_capped = capped;
    report.epsilon_achieved =
        capped ? hoeffding_budget_epsilon(spec.alpha, budget) : spec.epsilon;
    report.seed = source.seed();
    report.wall_time_seconds = std::chrono::duration<double>(stop - start).count();
    return report;
}

}  // namespace bernmc
