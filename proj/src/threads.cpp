#include "mlcif/threads.hpp"

#include <cstdlib>
#include <thread>

namespace mlcif {

int thread_count() {
    if (const char* env = std::getenv("MLCIF_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

int resolve_threads(int requested) {
    return requested > 0 ? requested : thread_count();
}

}  // namespace mlcif
