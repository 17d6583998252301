#include "monogen/parallel.hpp"

#include <cstdlib>

namespace monogen {

unsigned worker_threads()
{
    if (char const * env = std::getenv("MONOGEN_THREADS")) {
        int n = std::atoi(env);
        if (n > 0)
            return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace monogen
