#pragma once

#include <array>
#include <cstdint>
#include <vector>

// OpenMP execution layer. Every data-parallel kernel in the project runs
// through for_each / block_sum so that
//   * a single runtime switch (set_enabled / TCIDM_SERIAL=1) selects the
//     serial reference path, which tests and bench_kernels compare against,
//   * reductions are summed over fixed-size blocks in index order, so the
//     result is bit-identical for any thread count, including one.

namespace tcidm::par {

/// True when kernels run under OpenMP. Initialised from the environment:
/// TCIDM_SERIAL=1 forces the serial path for the whole process.
bool enabled();
void set_enabled(bool on);

int max_threads();

inline constexpr std::int64_t kBlock = 8192;

template <class F>
void for_each(std::int64_t n, F&& body) {
    if (enabled()) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) body(i);
    } else {
        for (std::int64_t i = 0; i < n; ++i) body(i);
    }
}

/// Deterministic sum of term(i) for i in [0, n): per-block partials are
/// accumulated serially inside each block and combined in block order.
template <class F>
double block_sum(std::int64_t n, F&& term) {
    const std::int64_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);
    for_each(nblocks, [&](std::int64_t b) {
        const std::int64_t lo = b * kBlock;
        const std::int64_t hi = std::min(n, lo + kBlock);
        double acc = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) acc += term(i);
        partial[static_cast<std::size_t>(b)] = acc;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

/// K simultaneous deterministic sums; `accum(i, slots)` adds term i into
/// the K slots. Used where one pass produces several moments.
template <int K, class F>
std::array<double, K> block_sums(std::int64_t n, F&& accum) {
    const std::int64_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<std::array<double, K>> partial(static_cast<std::size_t>(nblocks));
    for_each(nblocks, [&](std::int64_t b) {
        const std::int64_t lo = b * kBlock;
        const std::int64_t hi = std::min(n, lo + kBlock);
        std::array<double, K> acc{};
        for (std::int64_t i = lo; i < hi; ++i) accum(i, acc);
        partial[static_cast<std::size_t>(b)] = acc;
    });
    std::array<double, K> total{};
    for (const auto& p : partial)
        for (int k = 0; k < K; ++k) total[k] += p[k];
    return total;
}

}  // namespace tcidm::par
