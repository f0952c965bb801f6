#include "latile/parallel.hpp"

#include <cstdlib>
#include <string>

namespace latile {

std::size_t worker_count() {
    if (const char* env = std::getenv("LATILE_THREADS")) {
        try {
            long n = std::stol(env);
            if (n > 0) return static_cast<std::size_t>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace latile
