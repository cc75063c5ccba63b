#include <exception>

#include <tanperiod/oracle.hpp>

namespace tanperiod
{

std::vector<OrbitMeasurement> measure_grid(const PiecewiseField &field, const SimulationConfig &cfg)
{
    cfg.validate();
    // Reject unclassifiable fields before going parallel.
    (void)classify(field);

    const auto n = static_cast<long>(cfg.x_grid.size());
    std::vector<OrbitMeasurement> out(cfg.x_grid.size());
    std::vector<std::exception_ptr> errors(cfg.x_grid.size());

#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        try {
            out[u] = numeric_period(field, cfg.x_grid[u], cfg);
        } catch (...) {
            errors[u] = std::current_exception();
        }
    }

    // Report the failure at the smallest grid index, as the serial loop would.
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

} // namespace tanperiod
