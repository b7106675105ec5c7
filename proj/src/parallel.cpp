#include "tcidm/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>

namespace tcidm::par {

namespace {

bool initial_state() {
    const char* env = std::getenv("TCIDM_SERIAL");
    return !(env && env[0] == '1');
}

std::atomic<bool>& flag() {
    static std::atomic<bool> on{initial_state()};
    return on;
}

}  // namespace

bool enabled() { return flag().load(std::memory_order_relaxed); }

void set_enabled(bool on) { flag().store(on, std::memory_order_relaxed); }

int max_threads() { return omp_get_max_threads(); }

}  // namespace tcidm::par
