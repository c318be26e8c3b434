#include <stokes/parallel.hpp>

#include <cstdlib>
#include <string>

#include <omp.h>

namespace stokes
{

int thread_count()
{
    if (const char *env = std::getenv("STOKES_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) {
                return n;
            }
        } catch (const std::exception &) {
            // ignore malformed values
        }
    }
    return omp_get_max_threads();
}

} // namespace stokes
